#pragma once

#include "alcove/rational.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace alcove {

enum class RootType { A, B, C, D, E6, E7 };

std::string type_label(RootType t);
RootType parse_root_type(const std::string& label);

// Root datum of an irreducible reduced root system in explicit coordinates.
// Index 0 of `alpha`, `coroot` and `coweight` refers to the affine node:
// alpha[0] is the negative of the highest root, coweight[0] is zero.
struct RootSystem {
    RootType type = RootType::A;
    int rank = 0;
    int ambient_dim = 0;
    std::vector<Vec> alpha;            // size rank+1
    std::vector<Vec> coroot;           // size rank+1
    std::vector<Vec> coweight;         // size rank+1, fundamental coweights
    std::vector<int> highest_coeffs;   // theta = sum_i c_i alpha_i, c_0 = 1
    std::vector<Vec> positive_roots;   // sorted by height, then lexicographically

    int num_positive() const { return static_cast<int>(positive_roots.size()); }
    // Index of a positive root in `positive_roots`, or -1.
    int positive_index(const Vec& root) const;
    Eigen::MatrixXi cartan_matrix() const;  // entries <alpha_i, alpha_j^vee>, i,j = 1..rank
};

RootSystem build_root_system(RootType type, int d);
inline RootSystem build_root_system(const std::string& label, int d) {
    return build_root_system(parse_root_type(label), d);
}

// Valid rank range for the classical families; E6 and E7 accept only their rank.
bool valid_rank(RootType type, int d);

Vec coroot_of(const Vec& root);
Rational pairing(const Vec& root, const Vec& coweight);

// Indices j such that coweight[j] is minuscule.
std::vector<int> minuscule_coweights(const RootSystem& rs);
bool is_minuscule(const RootSystem& rs, const Vec& coweight);

// All roots obtained by closing the simple roots under simple reflections.
std::vector<Vec> root_closure(const std::vector<Vec>& simple);

// Coefficients of a root in the basis of simple roots alpha_1..alpha_d.
std::vector<Rational> simple_coordinates(const RootSystem& rs, const Vec& v);

nlohmann::json to_json(const RootSystem& rs);
nlohmann::json vec_json(const Vec& v);
Vec vec_from_json(const nlohmann::json& j);

}  // namespace alcove
