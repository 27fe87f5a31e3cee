#pragma once

#include "json.hpp"

#include <Eigen/Core>

#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

namespace alcove {

// Raised whenever a result would be needed beyond the precision the inputs carry.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A unit x of Z_p stored as a residue modulo p^M. Substituting t -> (1+t)^x - 1
// is well defined modulo t^{p^M}, since (1+t)^{p^M} = 1 + t^{p^M} in characteristic p.
struct GammaScalar {
    int p = 0;
    int M = 0;
    long long modulus = 1;  // p^M
    long long x = 1;        // residue in [0, p^M)

    long long residue_mod_p() const { return x % p; }
};

// Teichmueller lift of a in F_p^x, computed as a^{p^{M-1}} mod p^M.
GammaScalar teichmuller(int p, long long a, int M);
// Smallest M with p^M >= bound.
int digits_for(int p, long long bound);

// Truncated Laurent series over F_p:  sum_{i=v}^{N-1} c_i t^i + O(t^N).
// N == kExact marks a series known exactly (a Laurent polynomial). A series
// with p == 0 is an integer constant waiting to learn its field; Eigen creates
// those for Zero() and Identity().
class TruncatedSeries {
public:
    static constexpr int kExact = INT_MAX / 4;

    TruncatedSeries() = default;
    TruncatedSeries(long long c);  // NOLINT(google-explicit-constructor)
    TruncatedSeries(int c) : TruncatedSeries(static_cast<long long>(c)) {}  // NOLINT(google-explicit-constructor)
    TruncatedSeries(int p, int v, std::vector<long long> coeffs, int N = kExact);

    static TruncatedSeries constant(int p, long long c, int N = kExact);
    static TruncatedSeries monomial(int p, long long c, int e, int N = kExact);
    static TruncatedSeries zero(int p, int N) { return TruncatedSeries(p, N, {}, N); }

    int p() const { return p_; }
    int precision() const { return N_; }
    bool is_exact() const { return N_ >= kExact; }
    // Index of the first nonzero coefficient, or precision() if none is known.
    int valuation() const;
    bool is_zero() const { return c_.empty(); }  // zero modulo t^N
    long long coeff(int e) const;
    int lowest() const { return v_; }
    const std::vector<long long>& coeffs() const { return c_; }

    TruncatedSeries with_precision(int N) const;  // truncate (never extends)
    TruncatedSeries shifted(int k) const;         // multiply by t^k
    TruncatedSeries inverse() const;
    TruncatedSeries frobenius(int r = 1) const;   // f(t) -> f(t^{p^r})
    TruncatedSeries gamma(const GammaScalar& x) const;  // f(t) -> f((1+t)^x - 1)
    // Unit part: f = c t^{val} * (1 + ...), returns (1 + ...).
    TruncatedSeries unit_part() const;
    long long leading_coeff() const;

    std::string str() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b.inverse(); }
    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    // Equality as elements of F_p((t)) modulo t^{min(N_a, N_b)}.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
    void normalize();
    TruncatedSeries in_field(int p) const;

    int p_ = 0;
    int v_ = 0;
    std::vector<long long> c_;
    int N_ = kExact;
};

long long mod_p(long long a, int p);
long long inv_mod(long long a, long long m);
// Binomial coefficient C(n, k) modulo the prime p (Lucas).
long long binomial_mod_p(long long n, long long k, int p);
// Discrete logarithm of y to base g in F_p^x (g a generator); -1 if none.
int discrete_log(long long g, long long y, int p);
long long primitive_root(int p);

nlohmann::json to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const nlohmann::json& j, int p);

}  // namespace alcove

namespace Eigen {
template <>
struct NumTraits<alcove::TruncatedSeries> : GenericNumTraits<alcove::TruncatedSeries> {
    using Real = alcove::TruncatedSeries;
    using NonInteger = alcove::TruncatedSeries;
    using Nested = alcove::TruncatedSeries;
    using Literal = alcove::TruncatedSeries;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 16,
        MulCost = 64
    };
};
}  // namespace Eigen

namespace alcove {

using SeriesMatrix = Eigen::Matrix<TruncatedSeries, Eigen::Dynamic, Eigen::Dynamic>;

SeriesMatrix frobenius(const SeriesMatrix& m, int r = 1);
SeriesMatrix gamma(const SeriesMatrix& m, const GammaScalar& x);
// Determinant by elimination over F_p((t)); throws PrecisionError if every
// available pivot is zero to working precision.
TruncatedSeries determinant(SeriesMatrix m);
// Minimum precision over all entries.
int precision(const SeriesMatrix& m);
// Entrywise equality up to the available precision.
bool series_equal(const SeriesMatrix& a, const SeriesMatrix& b);

}  // namespace alcove
