#include "alcove/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace alcove {

Laurent Laurent::monomial(long long c, int p_exp, int x_exp) {
    Laurent l;
    if (c != 0) l.terms_[{p_exp, x_exp}] = c;
    return l;
}

long long Laurent::coeff() const {
    if (!is_monomial()) throw std::logic_error("not a monomial");
    return terms_.begin()->second;
}

Laurent::Exponent Laurent::exponent() const {
    if (!is_monomial()) throw std::logic_error("not a monomial");
    return terms_.begin()->first;
}

Laurent Laurent::inverse() const {
    if (!is_monomial() || (coeff() != 1 && coeff() != -1)) {
        throw std::domain_error("only unit monomials are invertible: " + str());
    }
    auto [a, b] = exponent();
    return monomial(coeff(), -a, -b);
}

Laurent Laurent::at_x_equal_one() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r += monomial(c, e.first, 0);
    return r;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [e, c] : b.terms_) {
        long long v = (r.terms_[e] += c);
        if (v == 0) r.terms_.erase(e);
    }
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Laurent::Exponent e{ea.first + eb.first, ea.second + eb.second};
            long long v = (r.terms_[e] += ca * cb);
            if (v == 0) r.terms_.erase(e);
        }
    }
    return r;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long long v = c;
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        if (v < 0) v = -v;
        first = false;
        const bool bare = e.first == 0 && e.second == 0;
        if (v != 1 || bare) os << v;
        auto sym = [&](const char* s, int k, bool need_star) {
            if (k == 0) return;
            if (need_star) os << "*";
            os << s;
            if (k != 1) os << "^" << k;
        };
        sym("p", e.first, v != 1);
        sym("x", e.second, v != 1 || e.first != 0);
    }
    return os.str();
}

bool is_monomial_matrix(const SymMatrix& m) {
    if (m.rows() != m.cols()) return false;
    std::vector<int> col_hits(m.cols(), 0);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        int hits = 0;
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (m(r, c).is_zero()) continue;
            if (!m(r, c).is_monomial()) return false;
            ++hits;
            ++col_hits[c];
        }
        if (hits != 1) return false;
    }
    for (int h : col_hits) if (h != 1) return false;
    return true;
}

SymMatrix monomial_inverse(const SymMatrix& m) {
    if (!is_monomial_matrix(m)) throw std::invalid_argument("matrix is not monomial");
    SymMatrix inv = SymMatrix::Zero(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) inv(c, r) = m(r, c).inverse();
    return inv;
}

bool is_diagonal(const SymMatrix& m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            if (r != c && !m(r, c).is_zero()) return false;
    return true;
}

std::string matrix_str(const SymMatrix& m) {
    std::ostringstream os;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        os << "[";
        for (Eigen::Index c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).str();
        os << "]\n";
    }
    return os.str();
}

}  // namespace alcove
