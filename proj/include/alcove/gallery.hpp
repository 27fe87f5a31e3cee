#pragma once

#include "alcove/affine_weyl.hpp"
#include "alcove/report.hpp"

#include <memory>
#include <string>
#include <vector>

namespace alcove {

// Which of the standard periodic galleries to build. The E6 root system
// carries two of them (with tau = omega_1 and tau = omega_6).
enum class GalleryCase { A, B, C, D, E6, E6Dual, E7 };

GalleryCase parse_gallery_case(const std::string& label);
std::string case_label(GalleryCase c);
RootType root_type_of(GalleryCase c);

// A straight element phi = s_{beta(1)} ... s_{beta(r)} * v with v of length
// zero, together with the coweight tau it is paired with. The gallery is
// C^(ar+b) = phi^a s_{beta(1)} ... s_{beta(b)} C.
struct GalleryDatum {
    GalleryCase which = GalleryCase::C;
    int d = 0;
    std::shared_ptr<const AffineWeyl> weyl;
    std::vector<int> beta;
    AffineElement omega_part;
    AffineElement phi;
    Vec tau;
    int tau_index = 0;
    std::string central_factor;  // informational: the scalar matrix multiplying phi in the matrix group
    int r() const { return static_cast<int>(beta.size()); }
    const RootSystem& rs() const { return weyl->rs; }
};

GalleryDatum standard_gallery_datum(GalleryCase c, int d);

// Element g_j with C^(j) = g_j C.
AffineElement gallery_element(const GalleryDatum& g, int j);

struct CrossingProfile {
    std::vector<int> alpha_seq;   // index into positive roots of the wall crossed at each step
    std::vector<bool> positive;   // the crossing increases <alpha, .>
    std::vector<long long> level; // k with the wall {<alpha, v> = k}
    std::vector<std::vector<int>> e_table;  // e_table[i][a] = #{j < i : alpha_seq[j] = a}
    std::vector<int> m_table;     // crossings per root over one translation period
    int steps() const { return static_cast<int>(alpha_seq.size()); }
};

CrossingProfile crossing_profile(const GalleryDatum& g, int steps);
// Profile over one translation period m * r where phi^m = t_lambda.
CrossingProfile period_profile(const GalleryDatum& g);

VerificationReport check_concept(const GalleryDatum& g);
VerificationReport check_concept(const GalleryDatum& g, const Vec& tau);

std::vector<AffineElement> reflection_factorization(const GalleryDatum& g);
VerificationReport check_reflection_factorization(const GalleryDatum& g);
VerificationReport check_minimality(const GalleryDatum& g, int periods = 2);

nlohmann::json to_json(const CrossingProfile& p, const RootSystem& rs);

}  // namespace alcove
