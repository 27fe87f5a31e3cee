#pragma once

#include "alcove/report.hpp"
#include "alcove/series.hpp"

#include <utility>
#include <vector>

namespace alcove {

// Working precision for rank-one computations: factor * p^r, where the factor
// defaults to 4 and can be overridden by the ALCOVE_PRECISION environment variable.
int default_precision(int p, int r);
long long int_pow(long long b, int e);
// Base-p digits k_0..k_{r-1} of n.
std::vector<int> base_p_digits(long long n, int p, int r);
long long from_digits(const std::vector<int>& k, int p);

// f(t) -> f((1+t)^x - 1).
inline TruncatedSeries gamma_substitute(const GammaScalar& x, const TruncatedSeries& f) { return f.gamma(x); }

// One-dimensional etale (phi^r, Gamma)-module on a basis g:
//   phi^r g = F g,   gamma(x) g = F_x g  for the stored x.
struct RankOneModule {
    int p = 3;
    int r = 1;
    TruncatedSeries F;
    std::vector<std::pair<GammaScalar, TruncatedSeries>> gamma;
};

struct RankOneClass {
    int n = 0;
    int s = 0;
    long long xi = 1;
    std::vector<int> digits;  // k_0..k_{r-1} of n
    friend bool operator==(const RankOneClass& a, const RankOneClass& b) {
        return a.n == b.n && a.s == b.s && a.xi == b.xi;
    }
};

void validate_rank_one_parameters(int p, int r, int n, int s, long long xi);
// Gamma data are stored for the Teichmueller lift of the smallest primitive root mod p.
RankOneModule construct_rank_one(int p, int r, int n, int s, long long xi, int N = 0);
RankOneClass classify_rank_one(const RankOneModule& raw);
// Rewrite the module on the basis h*g (h a nonzero series).
RankOneModule change_basis(const RankOneModule& m, const TruncatedSeries& h);
// gamma_x(F) F_x == F phi^r(F_x) for every stored x.
bool rank_one_relations_hold(const RankOneModule& m);

// Checks phi^r and gamma(x) on the finite window l_0..l_J of the dual module.
VerificationReport dual_oracle_check(int p, int r, int n, int s, long long xi, int J);

// gamma(x) t^{n p^{rm}} gamma(x^{-1}) - (xt)^{n p^{rm}} has valuation >= (n+1) p^{rm},
// computed at precision 2 (n+1) p^{rm}. Returns the observed valuation.
int congruence_valuation(int p, int r, long long x, int n, int m);

// Etale (phi^r, Gamma)-module of finite rank over F_p((t)). Column j of phi holds
// the coordinates of phi^r(e_j); likewise for each gamma matrix.
struct PhiGammaModule {
    int p = 3;
    int r = 1;
    int rank = 0;
    SeriesMatrix phi;
    std::vector<std::pair<GammaScalar, SeriesMatrix>> gamma;
};

PhiGammaModule to_module(const RankOneModule& m);
PhiGammaModule direct_sum(const std::vector<PhiGammaModule>& parts);
bool is_etale(const PhiGammaModule& m);
bool gamma_commutes_with_phi(const PhiGammaModule& m);
// Matrix of the k-fold composite of the semilinear operator with matrix a (Frobenius power r each step).
SeriesMatrix iterate_semilinear(const SeriesMatrix& a, int r, int k);

// D -> D~ = D^(0) + ... + D^(r-1) with phi cycling the summands and the structure
// map on D^(0). The result has r = 1 and rank r * rank(D).
PhiGammaModule induce_to_phi(const PhiGammaModule& d);
// Etaleness, Gamma-equivariance, rank, and recovery of D from the last summand.
VerificationReport verify_induction(const PhiGammaModule& d);

nlohmann::json to_json(const PhiGammaModule& m);
PhiGammaModule module_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RankOneClass& c);

}  // namespace alcove
