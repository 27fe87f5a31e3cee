#pragma once

#include "alcove/affine_weyl.hpp"
#include "alcove/laurent.hpp"
#include "alcove/report.hpp"

#include <optional>
#include <vector>

namespace alcove {

// Explicit monomial generators of GSp_2d (type C), SO_{2d+1} (type B),
// GSO_2d (type D) and GL_{d+1} (type A) over Z[p^{+-1}, x^{+-1}].
// The symbol x stands for an element of Z_p^x fed into tau and the coroots.
struct GroupModel {
    RootType type = RootType::C;
    int d = 0;
    int n = 0;                       // matrix size
    std::optional<SymMatrix> form;   // preserved bilinear form (absent for GL)
    bool similitude = false;
    std::vector<SymMatrix> s;        // s_0 .. s_d
    SymMatrix u;
    std::optional<SymMatrix> omega;  // GSO_2d, d even
    std::optional<SymMatrix> rho;    // GSO_2d, d odd
    SymMatrix tau;                   // tau(x)
    std::vector<SymMatrix> coroot;   // alpha_i^vee(x), i = 0..d
    SymMatrix central;               // scalar factor of phi
    SymMatrix phi;
    int phi_power = 0;               // exponent for which phi^k is diagonal
    SymMatrix phi_power_expected;    // displayed value of phi^k (empty for GL)
};

GroupModel build_group_model(RootType type, int d);

SymMatrix sym_identity(int n);
SymMatrix sym_diag(const std::vector<Laurent>& entries);
SymMatrix sym_power(const SymMatrix& m, int k);
// prod_i alpha_i^vee(x)^{c_i}
SymMatrix coroot_combination(const GroupModel& g, const std::vector<int>& coeffs);

// Root vector X_alpha in the Lie algebra (so that I + X, or exp, lies in the group).
struct RootVector {
    Vec root;
    SymMatrix X;
};
std::vector<RootVector> root_vectors(const GroupModel& g);

// Does A satisfy A^T J A = kappa J with kappa a unit monomial (kappa = 1 when not a similitude group)?
bool preserves_form(const GroupModel& g, const SymMatrix& a);

// m_alpha for each positive root (indexed like build_root_system(type, d).positive_roots),
// read off from phi^k X_alpha phi^{-k} = +-p^{m_alpha} X_alpha.
std::vector<int> conjugation_multiplicities(const GroupModel& g);

// Image of a monomial matrix (entries +-p^a x^b; x is set to 1) in the extended affine Weyl group.
AffineElement image_in_extended_weyl(const GroupModel& g, const SymMatrix& m);

VerificationReport verify_phi_power(const GroupModel& g);
VerificationReport verify_commutations_and_coroot_identities(const GroupModel& g);
// Form equations, monomiality, Weyl images of the generators, braid relations,
// root vectors, and agreement of m_alpha with the gallery crossing counts.
VerificationReport verify_structure(const GroupModel& g);
VerificationReport verify_group_model(RootType type, int d);

}  // namespace alcove
