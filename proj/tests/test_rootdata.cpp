#include "doctest.h"

#include "alcove/rootdata.hpp"

using namespace alcove;

TEST_CASE("positive root counts") {
    CHECK(build_root_system(RootType::A, 3).num_positive() == 6);
    CHECK(build_root_system(RootType::B, 3).num_positive() == 9);
    CHECK(build_root_system(RootType::C, 4).num_positive() == 16);
    CHECK(build_root_system(RootType::D, 5).num_positive() == 20);
    CHECK(build_root_system(RootType::E6, 6).num_positive() == 36);
    CHECK(build_root_system(RootType::E7, 7).num_positive() == 63);
}

TEST_CASE("affine root is the negative highest root") {
    for (auto [t, d] : {std::pair{RootType::C, 3}, {RootType::D, 4}, {RootType::E6, 6}}) {
        const RootSystem rs = build_root_system(t, d);
        Vec theta = Vec::Zero(rs.ambient_dim);
        for (int i = 1; i <= d; ++i) theta += Rational(rs.highest_coeffs[i]) * rs.alpha[i];
        CHECK(rs.alpha[0] == Vec(-theta));
    }
}

TEST_CASE("fundamental coweights are dual to simple roots") {
    const RootSystem rs = build_root_system(RootType::E7, 7);
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) CHECK(pairing(rs.alpha[i], rs.coweight[j]) == Rational(i == j ? 1 : 0));
}

TEST_CASE("minuscule coweights") {
    CHECK(minuscule_coweights(build_root_system(RootType::C, 3)) == std::vector<int>{3});
    CHECK(minuscule_coweights(build_root_system(RootType::E6, 6)).size() == 2);
    CHECK(minuscule_coweights(build_root_system(RootType::E7, 7)).size() == 1);
    CHECK(minuscule_coweights(build_root_system(RootType::A, 3)).size() == 3);
}

TEST_CASE("Cartan matrix of D4 has a trivalent node") {
    const auto c = build_root_system(RootType::D, 4).cartan_matrix();
    int neighbours = 0;
    for (int j = 0; j < 4; ++j)
        if (j != 1 && c(1, j) != 0) ++neighbours;
    CHECK(neighbours == 3);
}

TEST_CASE("labels and rank validation") {
    CHECK(parse_root_type("e7") == RootType::E7);
    CHECK_THROWS(parse_root_type("G2"));
    CHECK(valid_rank(RootType::D, 4));
    CHECK_FALSE(valid_rank(RootType::D, 3));
    CHECK_FALSE(valid_rank(RootType::B, 1));
}
