#include "doctest.h"

#include "alcove/phigamma.hpp"

using namespace alcove;

TEST_CASE("series inverse and Frobenius") {
    const TruncatedSeries f(3, 0, {1, 2, 0, 1}, 20);
    const TruncatedSeries g = f * f.inverse();
    CHECK(g == TruncatedSeries::constant(3, 1, 20));
    const TruncatedSeries t = TruncatedSeries::monomial(3, 1, 1);
    CHECK(t.frobenius(2) == TruncatedSeries::monomial(3, 1, 9));
    CHECK((t * t).valuation() == 2);
}

TEST_CASE("gamma substitution by 1 is the identity") {
    const TruncatedSeries f(5, 1, {1, 3, 4}, 30);
    CHECK(f.gamma(teichmuller(5, 1, 3)) == f);
}

TEST_CASE("Teichmueller lift is a root of unity") {
    const GammaScalar x = teichmuller(5, 2, 4);
    long long v = 1;
    for (int i = 0; i < 4; ++i) v = v * x.x % x.modulus;
    CHECK(v == 1);
    CHECK(x.residue_mod_p() == 2);
}

TEST_CASE("digits and modular helpers") {
    CHECK(base_p_digits(17, 3, 3) == std::vector<int>{2, 2, 1});
    CHECK(from_digits({2, 2, 1}, 3) == 17);
    CHECK(binomial_mod_p(7, 3, 5) == 0);
    CHECK(inv_mod(3, 7) == 5);
    CHECK(discrete_log(primitive_root(7), 1, 7) == 0);
}

TEST_CASE("rank-one construct then classify") {
    for (auto [p, r] : {std::pair{3, 1}, {3, 2}, {5, 1}}) {
        const long long top = int_pow(p, r) - 1;
        for (int n = p - 1; n <= top; n += p - 1)
            for (int s = 0; s < p - 1; ++s) {
                const RankOneModule m = construct_rank_one(p, r, n, s, 1);
                CHECK(rank_one_relations_hold(m));
                const RankOneClass c = classify_rank_one(m);
                CHECK(c.n == n);
                CHECK(c.s == s);
                CHECK(c.xi == 1);
            }
    }
}

TEST_CASE("classification is invariant under a change of basis") {
    const RankOneModule m = construct_rank_one(3, 2, 4, 1, 2);
    const TruncatedSeries h(3, 0, {1, 1, 0, 2, 1}, default_precision(3, 2));
    const RankOneClass c = classify_rank_one(change_basis(m, h));
    CHECK(c.n == 4);
    CHECK(c.s == 1);
    CHECK(c.xi == 2);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS(validate_rank_one_parameters(4, 1, 1, 0, 1));
    CHECK_THROWS(validate_rank_one_parameters(3, 2, 3, 0, 1));
    CHECK_THROWS(validate_rank_one_parameters(3, 1, 1, 0, 0));
}

TEST_CASE("dual oracle and congruence") {
    CHECK(dual_oracle_check(3, 2, 4, 1, 1, 27).ok());
    CHECK(congruence_valuation(3, 1, 2, 1, 1) >= 2 * 3);
}

TEST_CASE("induction of a rank-one module") {
    const PhiGammaModule d = to_module(construct_rank_one(3, 2, 6, 0, 1));
    const PhiGammaModule ind = induce_to_phi(d);
    CHECK(ind.r == 1);
    CHECK(ind.rank == 2);
    CHECK(verify_induction(d).ok());
}

TEST_CASE("module JSON round trip") {
    const PhiGammaModule d = to_module(construct_rank_one(3, 1, 2, 1, 2));
    const PhiGammaModule e = module_from_json(to_json(d));
    CHECK(e.rank == 1);
    CHECK(series_equal(e.phi, d.phi));
}
