#include "alcove/rational.hpp"

#include <ostream>
#include <sstream>

namespace alcove {

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Mat solve_exact(Mat a, Mat b) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve_exact: shape mismatch");
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = col;
        while (piv < n && a(piv, col) == Rational(0)) ++piv;
        if (piv == n) throw std::domain_error("solve_exact: singular matrix");
        a.row(col).swap(a.row(piv));
        b.row(col).swap(b.row(piv));
        const Rational inv = Rational(1) / a(col, col);
        a.row(col) *= inv;
        b.row(col) *= inv;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || a(r, col) == Rational(0)) continue;
            const Rational f = a(r, col);
            a.row(r) -= f * a.row(col);
            b.row(r) -= f * b.row(col);
        }
    }
    return b;
}

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
    os << ")";
    return os.str();
}

}  // namespace alcove
