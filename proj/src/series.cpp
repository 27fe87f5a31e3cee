#include "alcove/series.hpp"

#include <algorithm>
#include <sstream>

namespace alcove {

namespace {

int clamp_precision(long long n) {
    if (n >= TruncatedSeries::kExact) return TruncatedSeries::kExact;
    if (n <= -TruncatedSeries::kExact) throw PrecisionError("series precision underflow");
    return static_cast<int>(n);
}

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (1LL << 62) / b) throw std::overflow_error("integer power overflow");
        r *= b;
    }
    return r;
}

long long mulmod(long long a, long long b, long long m) {
    return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

}  // namespace

long long mod_p(long long a, int p) {
    long long r = a % p;
    return r < 0 ? r + p : r;
}

long long inv_mod(long long a, long long m) {
    long long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1 != 0) {
        long long q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw std::domain_error("not invertible modulo " + std::to_string(m));
    return ((x % m) + m) % m;
}

long long binomial_mod_p(long long n, long long k, int p) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long result = 1;
    while (n > 0 || k > 0) {
        const long long ni = n % p, ki = k % p;
        if (ki > ni) return 0;
        long long num = 1, den = 1;
        for (long long i = 0; i < ki; ++i) {
            num = num * (ni - i) % p;
            den = den * (i + 1) % p;
        }
        result = result * num % p * inv_mod(den, p) % p;
        n /= p;
        k /= p;
    }
    return result;
}

long long primitive_root(int p) {
    for (long long g = 1; g < p; ++g) {
        long long y = 1;
        int order = 0;
        do {
            y = y * g % p;
            ++order;
        } while (y != 1);
        if (order == p - 1) return g;
    }
    throw std::invalid_argument("no primitive root");
}

int discrete_log(long long g, long long y, int p) {
    y = mod_p(y, p);
    long long z = 1;
    for (int e = 0; e < p - 1; ++e) {
        if (z == y) return e;
        z = z * g % p;
    }
    return -1;
}

int digits_for(int p, long long bound) {
    int M = 1;
    long long q = p;
    while (q < bound) {
        q *= p;
        ++M;
    }
    return M;
}

GammaScalar teichmuller(int p, long long a, int M) {
    if (mod_p(a, p) == 0) throw std::invalid_argument("Teichmueller lift of zero");
    GammaScalar g;
    g.p = p;
    g.M = M;
    g.modulus = ipow(p, M);
    long long base = ((a % g.modulus) + g.modulus) % g.modulus, e = ipow(p, M - 1), r = 1;
    while (e > 0) {
        if (e & 1) r = mulmod(r, base, g.modulus);
        base = mulmod(base, base, g.modulus);
        e >>= 1;
    }
    g.x = r;
    return g;
}

// ---------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(long long c) {
    if (c != 0) c_.push_back(c);
}

TruncatedSeries::TruncatedSeries(int p, int v, std::vector<long long> coeffs, int N)
    : p_(p), v_(v), c_(std::move(coeffs)), N_(N) {
    if (p <= 1) throw std::invalid_argument("series need a prime p");
    normalize();
}

TruncatedSeries TruncatedSeries::constant(int p, long long c, int N) { return TruncatedSeries(p, 0, {c}, N); }

TruncatedSeries TruncatedSeries::monomial(int p, long long c, int e, int N) { return TruncatedSeries(p, e, {c}, N); }

void TruncatedSeries::normalize() {
    if (p_ > 0)
        for (auto& c : c_) c = mod_p(c, p_);
    // Drop everything at or beyond the precision.
    if (!is_exact()) {
        const long long keep = static_cast<long long>(N_) - v_;
        if (keep <= 0) c_.clear();
        else if (static_cast<long long>(c_.size()) > keep) c_.resize(static_cast<std::size_t>(keep));
    }
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        v_ = is_exact() ? 0 : N_;
        return;
    }
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        v_ += static_cast<int>(lead);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

TruncatedSeries TruncatedSeries::in_field(int p) const {
    if (p_ == p || p == 0) return *this;
    if (p_ != 0) throw std::invalid_argument("series over different fields");
    TruncatedSeries r = *this;
    r.p_ = p;
    r.normalize();
    return r;
}

int TruncatedSeries::valuation() const { return c_.empty() ? N_ : v_; }

long long TruncatedSeries::coeff(int e) const {
    if (e >= N_) throw PrecisionError("coefficient of t^" + std::to_string(e) + " beyond precision " + std::to_string(N_));
    if (e < v_ || e - v_ >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(e - v_)];
}

long long TruncatedSeries::leading_coeff() const {
    if (c_.empty()) throw PrecisionError("series is zero to working precision");
    return c_.front();
}

TruncatedSeries TruncatedSeries::with_precision(int N) const {
    if (N >= N_) return *this;
    TruncatedSeries r = *this;
    r.N_ = N;
    r.normalize();
    return r;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
    TruncatedSeries r = *this;
    r.v_ += k;
    if (!r.is_exact()) r.N_ = clamp_precision(static_cast<long long>(N_) + k);
    if (r.c_.empty()) r.v_ = r.is_exact() ? 0 : r.N_;
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.c_) c = -c;
    r.normalize();
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a0, const TruncatedSeries& b0) {
    const int p = a0.p_ ? a0.p_ : b0.p_;
    const TruncatedSeries a = a0.in_field(p), b = b0.in_field(p);
    TruncatedSeries r;
    r.p_ = p;
    r.N_ = std::min(a.N_, b.N_);
    if (a.c_.empty() && b.c_.empty()) {
        r.v_ = r.is_exact() ? 0 : r.N_;
        return r;
    }
    const int lo = std::min(a.c_.empty() ? b.v_ : a.v_, b.c_.empty() ? a.v_ : b.v_);
    long long hi = lo;
    if (!a.c_.empty()) hi = std::max<long long>(hi, static_cast<long long>(a.v_) + static_cast<long long>(a.c_.size()));
    if (!b.c_.empty()) hi = std::max<long long>(hi, static_cast<long long>(b.v_) + static_cast<long long>(b.c_.size()));
    hi = std::min<long long>(hi, r.N_);
    r.v_ = lo;
    r.c_.assign(static_cast<std::size_t>(std::max<long long>(0, hi - lo)), 0);
    auto acc = [&](const TruncatedSeries& s) {
        for (std::size_t i = 0; i < s.c_.size(); ++i) {
            const long long e = static_cast<long long>(s.v_) + static_cast<long long>(i) - lo;
            if (e < static_cast<long long>(r.c_.size())) r.c_[static_cast<std::size_t>(e)] += s.c_[i];
        }
    };
    acc(a);
    acc(b);
    r.normalize();
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a0, const TruncatedSeries& b0) {
    const int p = a0.p_ ? a0.p_ : b0.p_;
    const TruncatedSeries a = a0.in_field(p), b = b0.in_field(p);
    TruncatedSeries r;
    r.p_ = p;
    const long long va = a.valuation(), vb = b.valuation();
    long long N = std::min(va + b.N_, vb + a.N_);
    r.N_ = clamp_precision(N);
    if (a.c_.empty() || b.c_.empty()) {
        r.v_ = r.is_exact() ? 0 : r.N_;
        return r;
    }
    r.v_ = a.v_ + b.v_;
    long long len = static_cast<long long>(a.c_.size() + b.c_.size()) - 1;
    if (!r.is_exact()) len = std::min<long long>(len, static_cast<long long>(r.N_) - r.v_);
    if (len <= 0) {
        r.c_.clear();
        r.normalize();
        return r;
    }
    r.c_.assign(static_cast<std::size_t>(len), 0);
    const long long P = p ? p : 0;
    for (std::size_t i = 0; i < a.c_.size() && static_cast<long long>(i) < len; ++i) {
        if (a.c_[i] == 0) continue;
        const std::size_t jmax = std::min<std::size_t>(b.c_.size(), static_cast<std::size_t>(len) - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            r.c_[i + j] += a.c_[i] * b.c_[j];
            if (P) r.c_[i + j] %= P;
        }
    }
    r.normalize();
    return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_) return false;
    return (a - b).is_zero();
}

TruncatedSeries TruncatedSeries::unit_part() const {
    if (c_.empty()) throw PrecisionError("series is zero to working precision");
    TruncatedSeries r = *this;
    const long long inv = p_ ? inv_mod(c_.front(), p_) : 1;
    for (auto& c : r.c_) c = p_ ? c * inv % p_ : c;
    r.v_ = 0;
    if (!is_exact()) r.N_ = N_ - v_;
    r.normalize();
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (c_.empty()) throw PrecisionError("inverting a series that is zero to working precision");
    if (p_ == 0) {
        if (c_.size() == 1 && (c_[0] == 1 || c_[0] == -1)) return *this;
        throw std::domain_error("inverse of an integer constant needs a field");
    }
    const long long c0inv = inv_mod(c_.front(), p_);
    if (c_.size() == 1) return TruncatedSeries(p_, -v_, {c0inv}, is_exact() ? kExact : clamp_precision(static_cast<long long>(N_) - 2LL * v_));
    if (is_exact()) throw PrecisionError("inverse of a non-monomial exact series needs a finite precision");
    const long long R = static_cast<long long>(N_) - v_;  // relative precision
    std::vector<long long> u(static_cast<std::size_t>(R), 0);
    for (std::size_t i = 0; i < c_.size() && static_cast<long long>(i) < R; ++i) u[i] = c_[i] * c0inv % p_;
    std::vector<long long> w(static_cast<std::size_t>(R), 0);
    w[0] = 1;
    for (long long k = 1; k < R; ++k) {
        long long s = 0;
        const long long lim = std::min<long long>(k, static_cast<long long>(c_.size()) - 1);
        for (long long j = 1; j <= lim; ++j) s = (s + u[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(k - j)]) % p_;
        w[static_cast<std::size_t>(k)] = mod_p(-s, p_);
    }
    for (auto& x : w) x = x * c0inv % p_;
    return TruncatedSeries(p_, -v_, std::move(w), clamp_precision(static_cast<long long>(N_) - 2LL * v_));
}

TruncatedSeries TruncatedSeries::frobenius(int r) const {
    if (p_ == 0) return *this;
    const long long q = ipow(p_, r);
    TruncatedSeries out;
    out.p_ = p_;
    out.N_ = is_exact() ? kExact : clamp_precision(static_cast<long long>(N_) * q);
    if (c_.empty()) {
        out.v_ = out.is_exact() ? 0 : out.N_;
        return out;
    }
    out.v_ = clamp_precision(static_cast<long long>(v_) * q);
    out.c_.assign((c_.size() - 1) * static_cast<std::size_t>(q) + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i * static_cast<std::size_t>(q)] = c_[i];
    out.normalize();
    return out;
}

TruncatedSeries TruncatedSeries::gamma(const GammaScalar& x) const {
    if (p_ == 0) return *this;
    if (x.p != p_) throw std::invalid_argument("gamma scalar over a different prime");
    if (c_.empty()) {
        if (is_exact()) return *this;
        return zero(p_, N_);  // substitution preserves t-adic valuation
    }
    // Output precision: S = (1+t)^x - 1 = x t U(t) with U known mod t^{p^M - 1}.
    const long long achievable = static_cast<long long>(v_) + x.modulus - 1;
    const int Nout = is_exact() ? clamp_precision(achievable) : N_;
    if (!is_exact() && achievable < N_) {
        throw PrecisionError("gamma substitution needs p^M >= " + std::to_string(N_ - v_ + 1) + " but p^M = " +
                             std::to_string(x.modulus));
    }
    const int width = Nout - v_;  // relative precision needed for P(S)
    std::vector<long long> s(static_cast<std::size_t>(std::min<long long>(width + 1, x.modulus)), 0);
    for (std::size_t j = 1; j < s.size(); ++j) s[j] = binomial_mod_p(x.x, static_cast<long long>(j), p_);
    const TruncatedSeries S(p_, 0, s, static_cast<int>(std::min<long long>(x.modulus, width + 1)));
    // Horner for P(S) where f = t^v P(t).
    TruncatedSeries acc = zero(p_, width);
    for (std::size_t i = c_.size(); i-- > 0;) acc = (acc * S + constant(p_, c_[i])).with_precision(width);
    TruncatedSeries lead;
    if (v_ >= 0) {
        lead = constant(p_, 1);
        TruncatedSeries Sw = S.with_precision(width + 1);
        for (int i = 0; i < v_; ++i) lead = (lead * Sw).with_precision(Nout);
    } else {
        const TruncatedSeries Sinv = S.with_precision(width + 2).inverse();
        lead = constant(p_, 1);
        for (int i = 0; i < -v_; ++i) lead = lead * Sinv;
    }
    return (lead * acc).with_precision(Nout);
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        const int e = v_ + static_cast<int>(i);
        if (e == 0) os << c_[i];
        else {
            if (c_[i] != 1) os << c_[i] << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    if (first) os << "0";
    if (!is_exact()) os << " + O(t^" << N_ << ")";
    return os.str();
}

nlohmann::json to_json(const TruncatedSeries& f) {
    nlohmann::json j;
    j["v"] = f.lowest();
    j["coeffs"] = f.coeffs();
    j["N"] = f.is_exact() ? nlohmann::json(nullptr) : nlohmann::json(f.precision());
    return j;
}

TruncatedSeries series_from_json(const nlohmann::json& j, int p) {
    const int N = j.contains("N") && !j["N"].is_null() ? j["N"].get<int>() : TruncatedSeries::kExact;
    return TruncatedSeries(p, j.at("v").get<int>(), j.at("coeffs").get<std::vector<long long>>(), N);
}

// ---------------------------------------------------------------------------

SeriesMatrix frobenius(const SeriesMatrix& m, int r) {
    return m.unaryExpr([r](const TruncatedSeries& f) { return f.frobenius(r); });
}

SeriesMatrix gamma(const SeriesMatrix& m, const GammaScalar& x) {
    return m.unaryExpr([&x](const TruncatedSeries& f) { return f.gamma(x); });
}

int precision(const SeriesMatrix& m) {
    int n = TruncatedSeries::kExact;
    for (Eigen::Index i = 0; i < m.size(); ++i) n = std::min(n, m(i).precision());
    return n;
}

bool series_equal(const SeriesMatrix& a, const SeriesMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return false;
    return true;
}

TruncatedSeries determinant(SeriesMatrix m) {
    const Eigen::Index n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    TruncatedSeries det = 1;
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = c; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            if (piv < 0 || m(r, c).valuation() < m(piv, c).valuation()) piv = r;
        }
        if (piv < 0) throw PrecisionError("no nonzero pivot at working precision");
        if (piv != c) {
            m.row(piv).swap(m.row(c));
            det = -det;
        }
        det = det * m(c, c);
        const TruncatedSeries inv = m(c, c).inverse();
        for (Eigen::Index r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            const TruncatedSeries f = m(r, c) * inv;
            for (Eigen::Index k = c; k < n; ++k) m(r, k) = m(r, k) - f * m(c, k);
        }
    }
    return det;
}

}  // namespace alcove
