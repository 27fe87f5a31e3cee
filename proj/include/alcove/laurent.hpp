#pragma once

#include <Eigen/Core>

#include <map>
#include <ostream>
#include <string>
#include <utility>

namespace alcove {

// Laurent polynomial with integer coefficients in two commuting formal
// units p and x. Terms are keyed by the exponent pair (a, b) of p^a x^b.
class Laurent {
public:
    using Exponent = std::pair<int, int>;

    Laurent() = default;
    Laurent(long long c) { if (c != 0) terms_[{0, 0}] = c; }  // NOLINT(google-explicit-constructor)
    Laurent(int c) : Laurent(static_cast<long long>(c)) {}     // NOLINT(google-explicit-constructor)

    static Laurent monomial(long long c, int p_exp, int x_exp);
    static Laurent p(int e = 1) { return monomial(1, e, 0); }
    static Laurent x(int e = 1) { return monomial(1, 0, e); }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    // For a monomial c p^a x^b returns (c, a, b).
    long long coeff() const;
    Exponent exponent() const;
    const std::map<Exponent, long long>& terms() const { return terms_; }

    Laurent inverse() const;  // monomials with coefficient +-1 only
    Laurent at_x_equal_one() const;
    std::string str() const;

    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

private:
    std::map<Exponent, long long> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Laurent& f) { return os << f.str(); }

}  // namespace alcove

namespace Eigen {
template <>
struct NumTraits<alcove::Laurent> : GenericNumTraits<alcove::Laurent> {
    using Real = alcove::Laurent;
    using NonInteger = alcove::Laurent;
    using Nested = alcove::Laurent;
    using Literal = alcove::Laurent;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 8,
        MulCost = 16
    };
};
}  // namespace Eigen

namespace alcove {

using SymMatrix = Eigen::Matrix<Laurent, Eigen::Dynamic, Eigen::Dynamic>;

// Inverse of a monomial matrix (one unit monomial per row and column).
SymMatrix monomial_inverse(const SymMatrix& m);
bool is_monomial_matrix(const SymMatrix& m);
bool is_diagonal(const SymMatrix& m);
std::string matrix_str(const SymMatrix& m);

}  // namespace alcove
