#include "doctest.h"

#include "alcove/classifier.hpp"

#include <set>

using namespace alcove;

TEST_CASE("Frobenius powers per family") {
    CHECK(frobenius_power(RootType::C, 3) == 4);
    CHECK(frobenius_power(RootType::B, 3) == 5);
    CHECK(frobenius_power(RootType::D, 4) == 6);
    CHECK(frobenius_power(RootType::A, 2) == 3);
}

TEST_CASE("involutions square to the identity") {
    const ClassEnumeration e = enumerate_classes(Family::C, 3, 3);
    for (const ClassPoint& pt : e.reps) {
        CHECK(iota0(iota0(pt)) == pt);
        CHECK(canonical_rep(iota0(pt)) == pt);
    }
}

TEST_CASE("orbit sizes add up to the unreduced count") {
    for (auto [f, r, p] : {std::tuple{Family::C, 3, 3}, {Family::B, 3, 3}, {Family::D, 4, 3}, {Family::A, 3, 3}}) {
        const ClassEnumeration e = enumerate_classes(f, r, p);
        long long total = 0;
        for (int s : e.orbit_sizes) total += s;
        CHECK(total == e.unreduced_count);
        CHECK(std::is_sorted(e.reps.begin(), e.reps.end()));
    }
}

TEST_CASE("rotation orbits in family A have size dividing r") {
    const ClassEnumeration e = enumerate_classes(Family::A, 3, 3);
    for (int s : e.orbit_sizes) CHECK(3 % s == 0);
}

TEST_CASE("enumeration guard") {
    CHECK_THROWS(enumerate_classes(Family::C, 13, 3));
    CHECK_THROWS(enumerate_classes(Family::C, 2, 3, 9));
    CHECK_THROWS(enumerate_classes(Family::B, 4, 3));
    CHECK_THROWS(enumerate_classes(Family::D, 5, 3));
}

TEST_CASE("CSV output has a header and one row per class") {
    const ClassEnumeration e = enumerate_classes(Family::C, 2, 3);
    const std::string csv = enumeration_csv(e);
    CHECK(csv.rfind("family,r,p,n,digits,s,xi,orbit_size\n", 0) == 0);
    CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == e.reps.size() + 1);
}

TEST_CASE("gallery words") {
    CHECK(beta_word(RootType::C, 3) == std::vector<int>{3, 2, 1, 0});
    CHECK(beta_word(RootType::B, 3) == std::vector<int>{1, 2, 3, 2, 0});
    CHECK(beta_word(RootType::D, 4) == std::vector<int>{3, 2, 1, 4, 2, 0});
    CHECK(beta_word(RootType::A, 2) == std::vector<int>{2, 1, 0});
    CHECK(rho_permutation(5) == std::vector<int>{4, 5, 3, 2, 1, 0});
}

TEST_CASE("data are valid and map into the quotient set") {
    for (auto [t, d] : {std::pair{RootType::C, 2}, {RootType::B, 3}, {RootType::A, 2}}) {
        const auto data = enumerate_data(t, d, 3);
        CHECK_FALSE(data.empty());
        for (const auto& x : data) {
            CHECK_FALSE(datum_violation(x).has_value());
            CHECK_FALSE(membership_violation(supersingular_to_classpoint(x)).has_value());
            CHECK(is_symmetric(family_of(t), 3, functor_triples(x)).symmetric);
        }
    }
}

TEST_CASE("conjugation by u is realized by iota0") {
    for (const auto& x : enumerate_data(RootType::C, 3, 3)) {
        const auto y = conjugate_by_u(x);
        CHECK(supersingular_to_classpoint(y) == iota0(supersingular_to_classpoint(x)));
    }
}

TEST_CASE("bijection for C2 at p = 3") {
    const VerificationReport rep = verify_bijection(RootType::C, 2, 3, true);
    CHECK_MESSAGE(rep.ok(), render_text(rep));
}

TEST_CASE("bijection for A2 at p = 3") {
    const VerificationReport rep = verify_bijection(RootType::A, 2, 3, true);
    CHECK_MESSAGE(rep.ok(), render_text(rep));
}
