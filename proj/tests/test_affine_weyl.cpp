#include "doctest.h"

#include "alcove/affine_weyl.hpp"

using namespace alcove;

TEST_CASE("simple reflections are involutions and Coxeter relations hold") {
    const AffineWeyl W(build_root_system(RootType::C, 3));
    const AffineElement id = evaluate_word(W, {});
    for (int i = 0; i <= 3; ++i) CHECK(W.simple[i] * W.simple[i] == id);
    CHECK(coxeter_exponent(W, 0, 1) == 4);
    CHECK(coxeter_exponent(W, 1, 2) == 3);
    CHECK(coxeter_exponent(W, 2, 3) == 4);
    CHECK(coxeter_exponent(W, 0, 2) == 2);
}

TEST_CASE("length of a reduced word") {
    const AffineWeyl W(build_root_system(RootType::A, 2));
    CHECK(length(W, evaluate_word(W, {0, 1, 2, 0})) == 4);
    CHECK(length(W, evaluate_word(W, {0, 0})) == 0);
}

TEST_CASE("length-zero subgroup matches the fundamental group") {
    CHECK(AffineWeyl(build_root_system(RootType::A, 3)).omega.size() == 4);
    CHECK(AffineWeyl(build_root_system(RootType::C, 3)).omega.size() == 2);
    CHECK(AffineWeyl(build_root_system(RootType::D, 4)).omega.size() == 4);
    CHECK(AffineWeyl(build_root_system(RootType::E6, 6)).omega.size() == 3);
}

TEST_CASE("reduced word round trip") {
    const AffineWeyl W(build_root_system(RootType::B, 3));
    const std::vector<int> w{0, 2, 1, 3, 2, 0};
    const AffineElement e = evaluate_word(W, w);
    const ReducedWord rw = reduced_word(W, e);
    CHECK(static_cast<int>(rw.word.size()) == length(W, e));
    CHECK(evaluate_word(W, rw.word) * rw.omega_part == e);
}

TEST_CASE("translation length equals the sum of pairings") {
    const RootSystem rs = build_root_system(RootType::C, 2);
    CHECK(translation_length(rs, rs.coweight[2]) == 3);
    const AffineWeyl W(rs);
    CHECK(length(W, translation(rs.coweight[2])) == 3);
}

TEST_CASE("inverse and power") {
    const AffineWeyl W(build_root_system(RootType::D, 4));
    const AffineElement w = evaluate_word(W, {0, 2, 1, 3});
    CHECK(w * inverse(w) == evaluate_word(W, {}));
    CHECK(power(w, 3) == w * w * w);
}
