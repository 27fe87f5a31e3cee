#pragma once

#include "alcove/matrix_models.hpp"
#include "alcove/phigamma.hpp"
#include "alcove/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace alcove {

// C, B, D: the quotient sets of triples (n, s, xi) by their involutions.
// A: triples modulo the cyclic rotation coming from conjugation by u.
enum class Family { C, B, D, A };

Family parse_family(const std::string& s);
std::string family_label(Family f);
Family family_of(RootType t);
int frobenius_power(RootType t, int d);  // r = d+1 (C, A), 2d-1 (B), 2d-2 (D)

struct ClassPoint {
    Family family = Family::C;
    int r = 1;
    int p = 3;
    std::vector<int> digits;  // k_0..k_{r-1}
    int s = 0;
    long long xi = 0;  // 0 for family B, which carries no scalar

    long long n() const { return from_digits(digits, p); }
    friend bool operator==(const ClassPoint& a, const ClassPoint& b) {
        return a.family == b.family && a.r == b.r && a.p == b.p && a.digits == b.digits && a.s == b.s && a.xi == b.xi;
    }
    friend bool operator<(const ClassPoint& a, const ClassPoint& b);  // by (n, s, xi)
};

ClassPoint make_point(Family f, int p, const std::vector<int>& digits, long long s, long long xi);
// Membership in the unreduced set; returns the violated condition or nullopt.
// The B-family condition that the middle digit is even is optional (see enumerate_classes).
std::optional<std::string> membership_violation(const ClassPoint& pt, bool b_even_middle = true);

ClassPoint iota0(const ClassPoint& pt);  // C, B, D; rotation for A
ClassPoint iota1(const ClassPoint& pt);  // D only
std::vector<ClassPoint> orbit(const ClassPoint& pt);
ClassPoint canonical_rep(const ClassPoint& pt);

struct ClassEnumeration {
    Family family = Family::C;
    int r = 1;
    int p = 3;
    long long unreduced_count = 0;
    std::vector<ClassPoint> reps;
    std::vector<int> orbit_sizes;
    long long odd_middle_excluded = 0;  // B: points of the literal definition with an odd middle digit
};

// Guard: p^r <= 10^6 and q = p.
ClassEnumeration enumerate_classes(Family f, int r, int p, int q = 0, bool b_even_middle = true);
nlohmann::json to_json(const ClassPoint& pt);
std::string enumeration_csv(const ClassEnumeration& e);

// Evaluates the displayed symmetry conditions on classified rank-one summands
// (2 for C and B, 4 for D in the order D11, D12, D21, D22, r for A).
struct SymmetryVerdict {
    bool symmetric = false;
    std::string failed;  // first violated condition
};
SymmetryVerdict is_symmetric(Family f, int p, const std::vector<RankOneClass>& summands);

// Character lambda of the torus and subset J packed into the affine digits k_0..k_d,
// the exponent s_e with lambda(tau(x)) = x^{-s_e}, and the central scalar b.
struct SupersingularDatum {
    RootType type = RootType::C;
    int d = 2;
    int p = 3;
    std::vector<int> k;
    int s_e = 0;
    long long b = 1;  // unused for type B
    std::optional<int> lambda_minus_id;  // type A: value of lambda(-id), derived when absent

    friend bool operator==(const SupersingularDatum& a, const SupersingularDatum& b) {
        return a.type == b.type && a.d == b.d && a.p == b.p && a.k == b.k && a.s_e == b.s_e && a.b == b.b;
    }
    friend bool operator<(const SupersingularDatum& a, const SupersingularDatum& b);
};

std::optional<std::string> datum_violation(const SupersingularDatum& x);
int lambda_minus_id(const SupersingularDatum& x);  // +-1, type A

ClassPoint supersingular_to_classpoint(const SupersingularDatum& x);
// Predicted triples of all rank-one summands, in the order used by is_symmetric.
std::vector<RankOneClass> functor_triples(const SupersingularDatum& x);
struct FunctorOutput {
    std::vector<RankOneClass> predicted;
    std::vector<RankOneModule> summands;
};
FunctorOutput functor_output(const SupersingularDatum& x, int N = 0);

// Conjugation of (lambda, J) by u (all types) and by omega / rho (type D).
SupersingularDatum conjugate_by_u(const SupersingularDatum& x);
SupersingularDatum conjugate_by_omega_or_rho(const SupersingularDatum& x);

// Index words attached to the standard datum: beta and its conjugates.
std::vector<int> beta_word(RootType t, int d);
std::vector<int> conjugated_beta_word(RootType t, int d, const std::vector<int>& perm);
std::vector<int> u_permutation(RootType t, int d);    // u s_i u^{-1} = s_{perm[i]}
std::vector<int> rho_permutation(int d);              // type D, rho or omega

// Exponent E with lambda(c(x)) = x^E for the diagonal torus element c(x) of the group model.
int character_exponent(const GroupModel& g, const SupersingularDatum& x, const SymMatrix& torus_element);

std::vector<SupersingularDatum> enumerate_data(RootType t, int d, int p);
VerificationReport verify_bijection(RootType t, int d, int p, bool round_trip = true);

}  // namespace alcove
