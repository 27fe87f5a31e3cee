#include "alcove/phigamma.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

namespace alcove {

long long int_pow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

std::vector<int> base_p_digits(long long n, int p, int r) {
    std::vector<int> k(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i) {
        k[static_cast<std::size_t>(i)] = static_cast<int>(n % p);
        n /= p;
    }
    return k;
}

long long from_digits(const std::vector<int>& k, int p) {
    long long n = 0;
    for (std::size_t i = k.size(); i-- > 0;) n = n * p + k[i];
    return n;
}

int default_precision(int p, int r) {
    int factor = 4;
    if (const char* env = std::getenv("ALCOVE_PRECISION")) {
        const int f = std::atoi(env);
        if (f >= 2) factor = f;
    }
    return static_cast<int>(factor * int_pow(p, r));
}

namespace {

// Enough p-adic digits for gamma substitutions on series of relative width up to `width`.
GammaScalar generator_lift(int p, int width) { return teichmuller(p, primitive_root(p), digits_for(p, 2LL * width + 4)); }

// f^e for e >= 0, to absolute precision N, using f^{p^i} = phi^i(f) on the base-p digits of e.
TruncatedSeries power(const TruncatedSeries& f, long long e, int N) {
    const int p = f.p();
    TruncatedSeries r = TruncatedSeries::constant(p, 1, N);
    const int v = std::max(f.valuation(), 0);
    long long pi = 1;
    for (int i = 0; e > 0; ++i, e /= p, pi *= p) {
        const int digit = static_cast<int>(e % p);
        if (digit == 0) continue;
        // Only coefficients below N / p^i survive after Frobenius and truncation.
        const TruncatedSeries fi = f.with_precision(static_cast<int>(std::min<long long>(f.precision(), N / pi + v + 1))).frobenius(i);
        for (int j = 0; j < digit; ++j) r = (fi * r).with_precision(N);
    }
    return r;
}

// (gamma_x(t) / t)^e to absolute precision N, for e >= 0.
TruncatedSeries gamma_t_ratio(const GammaScalar& x, long long e, int N) {
    const TruncatedSeries t = TruncatedSeries::monomial(x.p, 1, 1, N + 1);
    return power(t.gamma(x).shifted(-1), e, N);
}

}  // namespace

void validate_rank_one_parameters(int p, int r, int n, int s, long long xi) {
    const long long q = int_pow(p, r);
    if (r < 1) throw std::invalid_argument("r must be positive");
    if (n < 1 || n > q - 1) throw std::invalid_argument("n must lie in [1, p^r - 1]");
    if (n % (p - 1) != 0) throw std::invalid_argument("n must be divisible by p - 1");
    if (s < 0 || s > p - 2) throw std::invalid_argument("s must lie in [0, p - 2]");
    if (mod_p(xi, p) == 0) throw std::invalid_argument("xi must be nonzero");
}

RankOneModule construct_rank_one(int p, int r, int n, int s, long long xi, int N) {
    validate_rank_one_parameters(p, r, n, s, xi);
    if (N <= 0) N = default_precision(p, r);
    const long long q = int_pow(p, r);
    const int m = static_cast<int>(n + 1 - q);
    RankOneModule mod;
    mod.p = p;
    mod.r = r;
    mod.F = TruncatedSeries::monomial(p, xi, m, N);
    const GammaScalar x = generator_lift(p, N - m);
    // F_x = x^s * prod_{k>=0} phi^{rk}(G^{-1}) with G = (gamma_x(t)/t)^m solves
    // gamma_x(F) F_x = F phi^r(F_x); the constant term of G is x^m = 1 since p-1 | m.
    const TruncatedSeries Ginv = gamma_t_ratio(x, -m, N);
    TruncatedSeries H = TruncatedSeries::constant(p, 1, N);
    for (long long step = 1, k = 0; step < 2LL * N; step *= q, ++k) H = (Ginv.with_precision(static_cast<int>(N / step + 1)).frobenius(static_cast<int>(k) * r) * H).with_precision(N);
    long long xs = 1;
    for (int i = 0; i < s; ++i) xs = xs * x.residue_mod_p() % p;
    mod.gamma.emplace_back(x, (H * TruncatedSeries::constant(p, xs)).with_precision(N));
    return mod;
}

RankOneModule change_basis(const RankOneModule& m, const TruncatedSeries& h) {
    RankOneModule out = m;
    const TruncatedSeries hinv = h.inverse();
    out.F = h.frobenius(m.r) * hinv * m.F;
    for (auto& [x, Fx] : out.gamma) Fx = h.gamma(x) * hinv * Fx;
    return out;
}

bool rank_one_relations_hold(const RankOneModule& m) {
    for (const auto& [x, Fx] : m.gamma) {
        if (m.F.gamma(x) * Fx != m.F * Fx.frobenius(m.r)) return false;
    }
    return true;
}

RankOneClass classify_rank_one(const RankOneModule& raw) {
    const int p = raw.p, r = raw.r;
    const long long q = int_pow(p, r);
    if (raw.gamma.empty()) throw std::invalid_argument("classification needs gamma data");
    if (raw.F.is_zero()) throw PrecisionError("F is zero to working precision");
    if (!raw.F.is_exact() && raw.F.precision() <= raw.F.valuation() + q)
        throw PrecisionError("precision must exceed p^r above the valuation of F");

    RankOneModule cur = raw;
    // Basis change g -> t^a g multiplies F by t^{a(p^r-1)}; put the exponent in [2-p^r, 0].
    const long long m0 = cur.F.valuation();
    long long a = (-m0) / (q - 1);
    if ((-m0) % (q - 1) != 0 && -m0 < 0) --a;
    if (a != 0) cur = change_basis(cur, TruncatedSeries::monomial(p, 1, static_cast<int>(a)));
    const int m = cur.F.valuation();
    const long long xi = cur.F.leading_coeff();

    // Successive approximation: with F = xi t^m u, the basis change g -> u g turns u into phi^r(u).
    for (int iter = 0; iter < 64; ++iter) {
        const TruncatedSeries u = cur.F.unit_part();
        if (u == TruncatedSeries::constant(p, 1)) break;
        if (iter == 63) throw PrecisionError("normal form did not stabilize");
        cur = change_basis(cur, u);
        if (cur.F.valuation() != m) throw PrecisionError("valuation changed during normalization");
    }

    RankOneClass c;
    c.n = static_cast<int>(q - 1 + m);
    c.xi = xi;
    const GammaScalar& x = cur.gamma.front().first;
    const long long g = x.residue_mod_p();
    const long long fx0 = cur.gamma.front().second.coeff(0);
    const int s = discrete_log(g, fx0, p);
    if (s < 0) throw std::invalid_argument("gamma data do not have a nonzero constant term");
    if (discrete_log(g, primitive_root(p), p) < 0 || static_cast<int>(g) == 0) throw std::invalid_argument("gamma scalar does not generate F_p^x");
    // s must be read modulo the order of g, which is p-1 for a generator.
    c.s = s % (p - 1);
    if (c.n % (p - 1) != 0) throw std::invalid_argument("inconsistent data: n is not divisible by p - 1");
    c.digits = base_p_digits(c.n, p, r);
    return c;
}

// ---------------------------------------------------------------------------
// Dual model on the window l_0..l_J with t l_{j+1} = l_j and t l_0 = 0.

namespace {

using Window = std::vector<long long>;

struct DualModel {
    int p, J;
    long long q, n, xi_inv;

    Window basis(int j) const {
        Window w(static_cast<std::size_t>(J + 1), 0);
        w[static_cast<std::size_t>(j)] = 1;
        return w;
    }
    // phi^r(sum a_j l_j) = sum a_j xi^{-1} l_{q j + n}; targets beyond the window are dropped.
    Window phi(const Window& v) const {
        Window w(v.size(), 0);
        for (std::size_t j = 0; j < v.size(); ++j) {
            const long long k = q * static_cast<long long>(j) + n;
            if (v[j] != 0 && k <= J) w[static_cast<std::size_t>(k)] = (w[static_cast<std::size_t>(k)] + v[j] * xi_inv) % p;
        }
        return w;
    }
    // f * v for a power series f known beyond t^J.
    Window act(const TruncatedSeries& f, const Window& v) const {
        if (f.valuation() < 0) throw std::invalid_argument("only power series act on the dual window");
        if (f.precision() <= J) throw PrecisionError("series precision too small for the dual window");
        Window w(v.size(), 0);
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] == 0) continue;
            for (int i = 0; i <= static_cast<int>(j); ++i) {
                const long long c = f.coeff(i);
                if (c) w[j - static_cast<std::size_t>(i)] = (w[j - static_cast<std::size_t>(i)] + c * v[j]) % p;
            }
        }
        return w;
    }
};

}  // namespace

VerificationReport dual_oracle_check(int p, int r, int n, int s, long long xi, int J) {
    validate_rank_one_parameters(p, r, n, s, xi);
    VerificationReport rep;
    rep.suite = "dual-oracle";
    const long long q = int_pow(p, r);
    DualModel D{p, J, q, n, inv_mod(mod_p(xi, p), p)};
    const int M = digits_for(p, 2LL * J + 4);
    const TruncatedSeries t = TruncatedSeries::monomial(p, 1, 1, J + 1);

    // t^{p^r} phi^r = phi^r t, on every l_j whose image stays in the window.
    bool frob_ok = true;
    const TruncatedSeries tq = TruncatedSeries::monomial(p, 1, static_cast<int>(q), J + 1);
    for (int j = 0; j <= J; ++j) {
        if (q * j + n > J) break;
        if (D.act(tq, D.phi(D.basis(j))) != D.phi(D.act(t, D.basis(j)))) frob_ok = false;
    }
    rep.add("frobenius-t-relation", "t^{p^r} phi^r = phi^r t on the dual basis", frob_ok);

    // N_m = n (1 + q + ... + q^{m-1}): (phi^r)^m l_0 is a multiple of l_{N_m}.
    std::vector<long long> Nm{0};
    while (true) {
        const long long next = Nm.back() * q + n;
        if (next > J) break;
        Nm.push_back(next);
    }

    bool well_defined = true, t_compat = true, commutes = true, l0_ok = true;
    nlohmann::json fail = nlohmann::json::array();
    for (long long a = 1; a < p; ++a) {
        const GammaScalar x = teichmuller(p, a, M);
        long long xs_inv = 1;
        for (int i = 0; i < s; ++i) xs_inv = xs_inv * inv_mod(a, p) % p;
        // gamma(x) l_{N_m - b} = x^{-s} gamma_x(t^b) l_{N_m}, for every admissible (b, m).
        std::vector<std::optional<Window>> g(static_cast<std::size_t>(J + 1));
        for (std::size_t mi = 0; mi < Nm.size(); ++mi) {
            for (long long b = 0; b <= Nm[mi]; ++b) {
                const int j = static_cast<int>(Nm[mi] - b);
                const TruncatedSeries tb = TruncatedSeries::monomial(p, 1, static_cast<int>(b), J + 1).gamma(x);
                Window w = D.act(tb, D.basis(static_cast<int>(Nm[mi])));
                for (auto& c : w) c = c * xs_inv % p;
                auto& slot = g[static_cast<std::size_t>(j)];
                if (!slot) slot = w;
                else if (*slot != w) {
                    well_defined = false;
                    fail.push_back({{"x", a}, {"index", j}, {"b", b}, {"m", mi}});
                }
            }
        }
        // Compatibility with the t-action.
        const TruncatedSeries gt = t.gamma(x);
        for (int j = 1; j <= J; ++j) {
            if (!g[static_cast<std::size_t>(j)] || !g[static_cast<std::size_t>(j - 1)]) continue;
            if (D.act(gt, *g[static_cast<std::size_t>(j)]) != *g[static_cast<std::size_t>(j - 1)]) t_compat = false;
        }
        // gamma phi^r = phi^r gamma.
        for (int j = 0; j <= J; ++j) {
            const long long k = q * j + n;
            if (k > J || !g[static_cast<std::size_t>(j)] || !g[static_cast<std::size_t>(k)]) continue;
            Window lhs = *g[static_cast<std::size_t>(k)];
            for (auto& c : lhs) c = c * D.xi_inv % p;
            if (lhs != D.phi(*g[static_cast<std::size_t>(j)])) commutes = false;
        }
        // gamma(x) l_0 = x^{-s} l_0, computed through the pair (b, m) = (n, 1).
        if (Nm.size() > 1) {
            const TruncatedSeries tn = TruncatedSeries::monomial(p, 1, n, J + 1).gamma(x);
            Window w = D.act(tn, D.basis(n));
            for (auto& c : w) c = c * xs_inv % p;
            Window expect = D.basis(0);
            expect[0] = xs_inv;
            if (w != expect) l0_ok = false;
        }
    }
    rep.add("gamma-well-defined", "gamma(x) t^b (phi^r)^m l_0 = x^{-s} gamma_x(t^b) (phi^r)^m l_0 is independent of (b, m)",
            well_defined, well_defined ? nlohmann::json() : fail);
    rep.add("gamma-t-compatible", "gamma(x)(t v) = gamma_x(t) gamma(x) v", t_compat);
    rep.add("gamma-commutes-with-phi", "gamma(x) phi^r = phi^r gamma(x) on the dual window", commutes);
    rep.add("gamma-on-l0", "gamma(x) l_0 = x^{-s} l_0", l0_ok);
    return rep;
}

int congruence_valuation(int p, int r, long long xres, int n, int m) {
    const long long e = n * int_pow(p, r * m);
    const int N = static_cast<int>(2 * (n + 1) * int_pow(p, r * m));
    const GammaScalar x = teichmuller(p, xres, digits_for(p, 2LL * N + 4));
    const TruncatedSeries lhs = TruncatedSeries::monomial(p, 1, static_cast<int>(e), N).gamma(x);
    long long xe = 1;
    for (long long i = 0; i < e % (p - 1) + (p - 1); ++i) xe = xe * mod_p(xres, p) % p;  // x^e with e reduced mod p-1
    const TruncatedSeries rhs = TruncatedSeries::monomial(p, xe, static_cast<int>(e), N);
    return (lhs - rhs).valuation();
}

// ---------------------------------------------------------------------------

PhiGammaModule to_module(const RankOneModule& m) {
    PhiGammaModule d;
    d.p = m.p;
    d.r = m.r;
    d.rank = 1;
    d.phi = SeriesMatrix::Constant(1, 1, m.F);
    for (const auto& [x, Fx] : m.gamma) d.gamma.emplace_back(x, SeriesMatrix::Constant(1, 1, Fx));
    return d;
}

PhiGammaModule direct_sum(const std::vector<PhiGammaModule>& parts) {
    if (parts.empty()) throw std::invalid_argument("empty direct sum");
    PhiGammaModule d;
    d.p = parts.front().p;
    d.r = parts.front().r;
    for (const auto& part : parts) {
        if (part.p != d.p || part.r != d.r) throw std::invalid_argument("summands with different (p, r)");
        d.rank += part.rank;
    }
    const TruncatedSeries zero = TruncatedSeries::constant(d.p, 0);
    d.phi = SeriesMatrix::Constant(d.rank, d.rank, zero);
    for (std::size_t gi = 0; gi < parts.front().gamma.size(); ++gi)
        d.gamma.emplace_back(parts.front().gamma[gi].first, SeriesMatrix::Constant(d.rank, d.rank, zero));
    int off = 0;
    for (const auto& part : parts) {
        d.phi.block(off, off, part.rank, part.rank) = part.phi;
        for (std::size_t gi = 0; gi < d.gamma.size(); ++gi) {
            if (part.gamma.size() <= gi || part.gamma[gi].first.x != d.gamma[gi].first.x || part.gamma[gi].first.M != d.gamma[gi].first.M)
                throw std::invalid_argument("summands carry gamma data for different scalars");
            d.gamma[gi].second.block(off, off, part.rank, part.rank) = part.gamma[gi].second;
        }
        off += part.rank;
    }
    return d;
}

bool is_etale(const PhiGammaModule& m) {
    try {
        return !determinant(m.phi).is_zero();
    } catch (const PrecisionError&) {
        return false;
    }
}

bool gamma_commutes_with_phi(const PhiGammaModule& m) {
    for (const auto& [x, G] : m.gamma) {
        // gamma(phi(e_j)) has coordinates G * gamma_x(Phi e_j); phi(gamma(e_j)) has Phi * phi^r(G).
        const SeriesMatrix lhs = G * gamma(m.phi, x);
        const SeriesMatrix rhs = m.phi * frobenius(G, m.r);
        if (!series_equal(lhs, rhs)) return false;
    }
    return true;
}

SeriesMatrix iterate_semilinear(const SeriesMatrix& a, int r, int k) {
    SeriesMatrix out = a;
    SeriesMatrix tw = a;
    for (int i = 1; i < k; ++i) {
        tw = frobenius(tw, r);
        out = out * tw;
    }
    return out;
}

PhiGammaModule induce_to_phi(const PhiGammaModule& d) {
    if (!is_etale(d)) throw std::invalid_argument("induction needs an etale module");
    const int r = d.r, n = d.rank, R = r * n;
    const TruncatedSeries zero = TruncatedSeries::constant(d.p, 0), one = TruncatedSeries::constant(d.p, 1);
    PhiGammaModule out;
    out.p = d.p;
    out.r = 1;
    out.rank = R;
    out.phi = SeriesMatrix::Constant(R, R, zero);
    // Basis e_{i,j} = index i*n + j. phi(e_{i,j}) = e_{i-1,j}; phi(e_{0,j}) = phi^r_D(e_j) placed in summand r-1.
    for (int i = 1; i < r; ++i)
        for (int j = 0; j < n; ++j) out.phi((i - 1) * n + j, i * n + j) = one;
    out.phi.block((r - 1) * n, 0, n, n) = d.phi;
    // Gamma on summand i is phi^{r-1-i} applied to the matrices of D, which makes it commute with phi.
    for (const auto& [x, G] : d.gamma) {
        SeriesMatrix big = SeriesMatrix::Constant(R, R, zero);
        for (int i = 0; i < r; ++i) big.block(i * n, i * n, n, n) = frobenius(G, r - 1 - i);
        out.gamma.emplace_back(x, big);
    }
    return out;
}

VerificationReport verify_induction(const PhiGammaModule& d) {
    VerificationReport rep;
    rep.suite = "induction";
    const PhiGammaModule ind = induce_to_phi(d);
    rep.add("induced-rank", "rank of the induced module is r times the rank", ind.rank == d.r * d.rank,
            {{"rank", ind.rank}, {"r", d.r}, {"input_rank", d.rank}});
    rep.add("induced-etale", "the induced phi-module is etale", is_etale(ind));
    rep.add("induced-gamma-equivariant", "Gamma commutes with phi on the induced module", gamma_commutes_with_phi(ind));
    // phi^r restricted to the last summand is phi^r of D again.
    const SeriesMatrix pr = iterate_semilinear(ind.phi, 1, d.r);
    const int n = d.rank, last = (d.r - 1) * n;
    bool recovers = series_equal(pr.block(last, last, n, n), d.phi);
    for (int i = 0; i < d.r - 1 && recovers; ++i) {
        const SeriesMatrix off = pr.block(i * n, last, n, n);
        for (Eigen::Index k = 0; k < off.size(); ++k)
            if (!off(k).is_zero()) recovers = false;
    }
    rep.add("induced-recovers-module", "phi^r on the last summand reproduces the structure map of D", recovers);
    return rep;
}

nlohmann::json to_json(const PhiGammaModule& m) {
    auto mat = [](const SeriesMatrix& a) {
        nlohmann::json rows = nlohmann::json::array();
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(to_json(a(i, j)));
            rows.push_back(row);
        }
        return rows;
    };
    nlohmann::json j;
    j["q"] = m.p;
    j["r"] = m.r;
    j["rank"] = m.rank;
    j["phi_matrix"] = mat(m.phi);
    nlohmann::json g = nlohmann::json::object();
    for (const auto& [x, G] : m.gamma) g[std::to_string(x.residue_mod_p())] = mat(G);
    j["gamma"] = g;
    return j;
}

PhiGammaModule module_from_json(const nlohmann::json& j) {
    PhiGammaModule m;
    m.p = j.at("q").get<int>();
    m.r = j.at("r").get<int>();
    m.rank = j.at("rank").get<int>();
    int width = 0;
    auto mat = [&](const nlohmann::json& rows) {
        SeriesMatrix a(m.rank, m.rank);
        if (static_cast<int>(rows.size()) != m.rank) throw std::invalid_argument("matrix size does not match rank");
        for (int i = 0; i < m.rank; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.rank) throw std::invalid_argument("matrix size does not match rank");
            for (int k = 0; k < m.rank; ++k) {
                a(i, k) = series_from_json(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)], m.p);
                if (!a(i, k).is_exact()) width = std::max(width, a(i, k).precision() - std::min(0, a(i, k).lowest()));
            }
        }
        return a;
    };
    m.phi = mat(j.at("phi_matrix"));
    if (width == 0) width = default_precision(m.p, m.r);
    if (j.contains("gamma")) {
        for (const auto& [key, rows] : j.at("gamma").items()) {
            const SeriesMatrix G = mat(rows);
            m.gamma.emplace_back(teichmuller(m.p, std::stoll(key), digits_for(m.p, 4LL * width + 4)), G);
        }
    }
    return m;
}

nlohmann::json to_json(const RankOneClass& c) {
    return {{"n", c.n}, {"s", c.s}, {"xi", c.xi}, {"digits", c.digits}};
}

}  // namespace alcove
