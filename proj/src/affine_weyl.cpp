#include "alcove/affine_weyl.hpp"

#include <stdexcept>

namespace alcove {

AffineElement translation(const Vec& v) { return AffineElement::Translation(v); }

AffineElement linear_reflection(const Vec& root) {
    const Eigen::Index n = root.size();
    Vec co = coroot_of(root);
    Mat m = Mat::Identity(n, n) - co * root.transpose();
    return {m, Vec::Zero(n)};
}

AffineElement simple_affine_reflection(const RootSystem& rs, int i) {
    if (i < 0 || i > rs.rank) throw std::out_of_range("simple reflection index out of range");
    AffineElement s = linear_reflection(rs.alpha[i]);
    if (i == 0) s.translation = rs.coroot[0];
    return s;
}

AffineElement bourbaki_reflection(const RootSystem& rs, int i) {
    AffineElement s = simple_affine_reflection(rs, i);
    if (i == 0) s.translation = -rs.coroot[0];
    return s;
}

AffineWeyl::AffineWeyl(RootSystem root_system) : rs(std::move(root_system)) {
    const int d = rs.rank;
    // Vertices of C: 0 and -omega_i / c_i.
    std::vector<Vec> vertices{Vec::Zero(rs.ambient_dim)};
    for (int i = 1; i <= d; ++i) vertices.push_back(rs.coweight[i] * Rational(-1, rs.highest_coeffs[i]));
    Vec c = Vec::Zero(rs.ambient_dim);
    for (const Vec& v : vertices) c += v;
    c *= Rational(1, d + 1);
    auto generic = [&](const Vec& p) {
        for (const Vec& a : rs.positive_roots) {
            if (pairing(a, p).is_integer()) return false;
        }
        return true;
    };
    for (int guard = 0; !generic(c); ++guard) {
        if (guard > 64) throw std::logic_error("could not find a generic base point");
        c = (c + vertices.front()) * Rational(1, 2);
    }
    base_point = c;
    for (int i = 0; i <= d; ++i) simple.push_back(simple_affine_reflection(rs, i));

    omega.push_back(AffineElement::Identity(rs.ambient_dim));
    for (int j : minuscule_coweights(rs)) {
        AffineElement u = reduced_word(*this, translation(rs.coweight[j])).omega_part;
        bool seen = false;
        for (const AffineElement& o : omega) seen = seen || (o == u);
        if (!seen) omega.push_back(u);
    }
}

AffineElement evaluate_word(const AffineWeyl& W, const std::vector<int>& word) {
    AffineElement r = AffineElement::Identity(W.dim());
    for (int i : word) {
        if (i < 0 || i > W.rank()) throw std::out_of_range("letter out of range in word");
        r = r * W.simple[i];
    }
    return r;
}

AffineElement evaluate_bourbaki_word(const AffineWeyl& W, const std::vector<int>& word) {
    AffineElement r = AffineElement::Identity(W.dim());
    for (int i : word) r = r * bourbaki_reflection(W.rs, i);
    return r;
}

int length(const AffineWeyl& W, const AffineElement& w) {
    const Vec wc = apply(w, W.base_point);
    long long total = 0;
    for (const Vec& a : W.rs.positive_roots) {
        Rational x = pairing(a, wc);
        if (x.is_integer()) throw std::logic_error("image of the base point lies on a wall");
        total += std::llabs(pairing(a, W.base_point).floor() - x.floor());
    }
    return static_cast<int>(total);
}

int translation_length(const RootSystem& rs, const Vec& lambda) {
    long long total = 0;
    for (const Vec& a : rs.positive_roots) {
        Rational x = pairing(a, lambda);
        if (!x.is_integer()) throw std::invalid_argument("translation outside the coweight lattice");
        total += std::llabs(x.num());
    }
    return static_cast<int>(total);
}

bool is_left_descent(const AffineWeyl& W, const AffineElement& w, int i) {
    const Vec wc = apply(w, W.base_point);
    const Rational x = pairing(W.rs.alpha[i], wc);
    return i == 0 ? x > Rational(1) : x > Rational(0);
}

ReducedWord reduced_word(const AffineWeyl& W, const AffineElement& w) {
    ReducedWord out{{}, w};
    for (;;) {
        int found = -1;
        for (int i = 0; i <= W.rank() && found < 0; ++i) {
            if (is_left_descent(W, out.omega_part, i)) found = i;
        }
        if (found < 0) break;
        out.word.push_back(found);
        out.omega_part = W.simple[found] * out.omega_part;
    }
    return out;
}

std::vector<int> conjugation_permutation(const AffineWeyl& W, const AffineElement& u) {
    std::vector<int> sigma;
    const AffineElement ui = inverse(u);
    for (int i = 0; i <= W.rank(); ++i) {
        AffineElement c = u * W.simple[i] * ui;
        int hit = -1;
        for (int j = 0; j <= W.rank(); ++j) {
            if (c == W.simple[j]) hit = j;
        }
        if (hit < 0) throw std::logic_error("element does not normalise the simple reflections");
        sigma.push_back(hit);
    }
    return sigma;
}

int omega_with_permutation(const AffineWeyl& W, const std::vector<int>& sigma) {
    for (std::size_t k = 0; k < W.omega.size(); ++k) {
        if (conjugation_permutation(W, W.omega[k]) == sigma) return static_cast<int>(k);
    }
    return -1;
}

TranslationPower translation_power(const AffineElement& w, int max_order) {
    AffineElement x = w;
    for (int m = 1; m <= max_order; ++m) {
        if (x.is_translation()) return {m, x.translation};
        x = x * w;
    }
    throw std::logic_error("no translation power found within the order bound");
}

bool is_straight(const AffineWeyl& W, const AffineElement& w) {
    // If w^m = t_lambda then l(w^{mk}) = k l(t_lambda) and subadditivity forces
    // l(w^n) = n l(w) for all n as soon as l(t_lambda) = m l(w).
    TranslationPower tp = translation_power(w);
    return translation_length(W.rs, tp.lambda) == tp.m * length(W, w);
}

int coxeter_exponent(const AffineWeyl& W, int i, int j) {
    const AffineElement p = W.simple[i] * W.simple[j];
    AffineElement x = p;
    for (int m = 1; m <= 12; ++m) {
        if (x == AffineElement::Identity(W.dim())) return m;
        x = x * p;
    }
    return 0;  // infinite order
}

nlohmann::json to_json(const AffineElement& w) {
    nlohmann::json m = nlohmann::json::array();
    for (Eigen::Index r = 0; r < w.linear.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < w.linear.cols(); ++c) row.push_back(w.linear(r, c).str());
        m.push_back(row);
    }
    return {{"matrix", m}, {"translation", vec_json(w.translation)}};
}

}  // namespace alcove
