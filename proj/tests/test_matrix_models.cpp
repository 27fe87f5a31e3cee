#include "doctest.h"

#include "alcove/matrix_models.hpp"

using namespace alcove;

TEST_CASE("Laurent arithmetic") {
    const Laurent a = Laurent::p(2) * Laurent::x(-1);
    CHECK(a * a.inverse() == Laurent(1));
    CHECK((Laurent::p() + Laurent::x()) * (Laurent::p() - Laurent::x()) == Laurent::p(2) - Laurent::x(2));
    CHECK(a.is_monomial());
    CHECK(a.exponent() == Laurent::Exponent{2, -1});
    CHECK((Laurent::p(3) * Laurent::x(5)).at_x_equal_one() == Laurent::p(3));
}

TEST_CASE("matrix sizes") {
    CHECK(build_group_model(RootType::C, 3).n == 6);
    CHECK(build_group_model(RootType::B, 3).n == 7);
    CHECK(build_group_model(RootType::D, 4).n == 8);
    CHECK(build_group_model(RootType::A, 2).n == 3);
}

TEST_CASE("generators are monomial and invertible") {
    const GroupModel g = build_group_model(RootType::D, 5);
    for (const SymMatrix& s : g.s) {
        CHECK(is_monomial_matrix(s));
        CHECK(s * monomial_inverse(s) == sym_identity(g.n));
        CHECK(preserves_form(g, s));
    }
    CHECK(g.rho.has_value());
    CHECK_FALSE(g.omega.has_value());
}

TEST_CASE("the displayed power of phi is diagonal") {
    for (auto [t, d] : {std::pair{RootType::C, 2}, {RootType::B, 3}, {RootType::D, 4}, {RootType::A, 3}}) {
        const GroupModel g = build_group_model(t, d);
        CHECK(is_diagonal(sym_power(g.phi, g.phi_power)));
    }
}

TEST_CASE("complete verification of the matrix models") {
    for (auto [t, d] : {std::pair{RootType::C, 2}, {RootType::C, 3}, {RootType::B, 3}, {RootType::D, 4},
                        {RootType::D, 5}, {RootType::A, 1}, {RootType::A, 3}}) {
        const VerificationReport rep = verify_group_model(t, d);
        CHECK_MESSAGE(rep.ok(), render_text(rep));
    }
}

TEST_CASE("conjugation multiplicities are nonnegative") {
    const GroupModel g = build_group_model(RootType::C, 3);
    const auto m = conjugation_multiplicities(g);
    CHECK(m.size() == 9);
    for (int v : m) CHECK(v >= 0);
}
