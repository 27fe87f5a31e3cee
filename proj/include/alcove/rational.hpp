#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <stdexcept>
#include <string>

namespace alcove {

// Exact rational number with 64-bit numerator and denominator. Intermediate
// products use 128-bit integers; any result that does not fit in 64 bits
// throws std::overflow_error instead of wrapping.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d) { assign(n, d); }
    Rational(int n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    // Largest integer not exceeding the value.
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }
    static Rational parse(const std::string& s);

    friend Rational operator+(const Rational& a, const Rational& b) {
        using i128 = __int128;
        return from_wide(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        using i128 = __int128;
        return from_wide(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        using i128 = __int128;
        return from_wide(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        using i128 = __int128;
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from_wide(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const { Rational r; r.num_ = -num_; r.den_ = den_; return r; }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return __int128(a.num_) * b.den_ < __int128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    long long num_ = 0;
    long long den_ = 1;

    void assign(long long n, long long d) { *this = from_wide(n, d); }

    static Rational from_wide(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        constexpr __int128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim) throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }
};

inline Rational abs(const Rational& a) { return a < Rational(0) ? -a : a; }
std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace alcove

namespace Eigen {
template <>
struct NumTraits<alcove::Rational> : GenericNumTraits<alcove::Rational> {
    using Real = alcove::Rational;
    using NonInteger = alcove::Rational;
    using Nested = alcove::Rational;
    using Literal = alcove::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 4
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace alcove {

using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

inline Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("pairing of vectors with different dimensions");
    Rational s(0);
    for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
    return s;
}

// Exact Gauss-Jordan solve of A X = B for square invertible A.
Mat solve_exact(Mat a, Mat b);

std::string vec_str(const Vec& v);

}  // namespace alcove
