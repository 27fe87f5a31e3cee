#pragma once

#include "alcove/rootdata.hpp"

#include <utility>
#include <vector>

namespace alcove {

// Affine transformation v -> linear * v + translation.
template <typename Scalar>
struct AffineMap {
    using MatrixType = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using VectorType = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    MatrixType linear;
    VectorType translation;

    static AffineMap Identity(Eigen::Index dim) {
        return {MatrixType::Identity(dim, dim), VectorType::Zero(dim)};
    }
    static AffineMap Translation(const VectorType& v) {
        return {MatrixType::Identity(v.size(), v.size()), v};
    }
    Eigen::Index dim() const { return translation.size(); }
    bool is_translation() const { return linear == MatrixType::Identity(dim(), dim()); }
};

template <typename Scalar>
AffineMap<Scalar> operator*(const AffineMap<Scalar>& a, const AffineMap<Scalar>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("affine maps on different spaces");
    return {a.linear * b.linear, a.linear * b.translation + a.translation};
}

template <typename Scalar>
bool operator==(const AffineMap<Scalar>& a, const AffineMap<Scalar>& b) {
    return a.linear == b.linear && a.translation == b.translation;
}
template <typename Scalar>
bool operator!=(const AffineMap<Scalar>& a, const AffineMap<Scalar>& b) { return !(a == b); }

// Inverse for maps whose linear part is orthogonal (all Weyl group elements here).
template <typename Scalar>
AffineMap<Scalar> inverse(const AffineMap<Scalar>& a) {
    typename AffineMap<Scalar>::MatrixType t = a.linear.transpose();
    return {t, -(t * a.translation)};
}

template <typename Scalar>
typename AffineMap<Scalar>::VectorType apply(const AffineMap<Scalar>& a,
                                            const typename AffineMap<Scalar>::VectorType& v) {
    if (v.size() != a.dim()) throw std::invalid_argument("point has wrong dimension");
    return a.linear * v + a.translation;
}

template <typename Scalar>
AffineMap<Scalar> power(const AffineMap<Scalar>& a, int n) {
    if (n < 0) return power(inverse(a), -n);
    AffineMap<Scalar> r = AffineMap<Scalar>::Identity(a.dim());
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
}

using AffineElement = AffineMap<Rational>;

// Precomputed data for the extended affine Weyl group of one root system:
// base alcove C = {<alpha_i, v> < 0 (i >= 1), <alpha_0, v> < 1}, a generic
// interior point, the affine simple reflections and the length-zero subgroup.
struct AffineWeyl {
    RootSystem rs;
    Vec base_point;
    std::vector<AffineElement> simple;   // s_0 .. s_d
    std::vector<AffineElement> omega;    // length-zero elements, identity first

    explicit AffineWeyl(RootSystem root_system);
    int rank() const { return rs.rank; }
    int dim() const { return rs.ambient_dim; }
};

AffineElement simple_affine_reflection(const RootSystem& rs, int i);
// Reflection in the wall {<theta, v> = 1} for i = 0, the linear reflection otherwise.
AffineElement bourbaki_reflection(const RootSystem& rs, int i);
AffineElement translation(const Vec& v);
AffineElement linear_reflection(const Vec& root);

AffineElement evaluate_word(const AffineWeyl& W, const std::vector<int>& word);
AffineElement evaluate_bourbaki_word(const AffineWeyl& W, const std::vector<int>& word);

// Number of affine root hyperplanes separating the interiors of C and wC.
int length(const AffineWeyl& W, const AffineElement& w);
int translation_length(const RootSystem& rs, const Vec& lambda);
bool is_left_descent(const AffineWeyl& W, const AffineElement& w, int i);

struct ReducedWord {
    std::vector<int> word;
    AffineElement omega_part;
};
// Greedy factorisation w = s_{w_1} ... s_{w_l} * u with u of length zero,
// always peeling off the lowest-index left descent.
ReducedWord reduced_word(const AffineWeyl& W, const AffineElement& w);

// sigma with u s_i u^{-1} = s_{sigma(i)}; throws if u does not normalise the generators.
std::vector<int> conjugation_permutation(const AffineWeyl& W, const AffineElement& u);
// Index in W.omega of the length-zero element whose conjugation permutation is sigma.
int omega_with_permutation(const AffineWeyl& W, const std::vector<int>& sigma);

struct TranslationPower {
    int m = 0;
    Vec lambda;
};
TranslationPower translation_power(const AffineElement& w, int max_order = 10000);
bool is_straight(const AffineWeyl& W, const AffineElement& w);

// Coxeter exponent m_ij read off from the order of s_i s_j.
int coxeter_exponent(const AffineWeyl& W, int i, int j);

nlohmann::json to_json(const AffineElement& w);

}  // namespace alcove
