#include "alcove/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace alcove {

namespace {

Vec unit(int dim, int i, Rational c = 1) {
    Vec v = Vec::Zero(dim);
    v(i) = c;
    return v;
}

// e_i - e_j with 1-based indices.
Vec diff(int dim, int i, int j) { return unit(dim, i - 1) - unit(dim, j - 1); }

Vec half_vec(std::initializer_list<int> signs) {
    Vec v(static_cast<Eigen::Index>(signs.size()));
    int k = 0;
    for (int s : signs) v(k++) = Rational(s, 2);
    return v;
}

std::vector<Vec> simple_roots(RootType type, int d) {
    std::vector<Vec> s;
    switch (type) {
        case RootType::A:
            for (int i = 1; i <= d; ++i) s.push_back(diff(d + 1, i, i + 1));
            break;
        case RootType::B:
            for (int i = 1; i < d; ++i) s.push_back(diff(d, i, i + 1));
            s.push_back(unit(d, d - 1));
            break;
        case RootType::C:
            for (int i = 1; i < d; ++i) s.push_back(diff(d, i, i + 1));
            s.push_back(unit(d, d - 1, 2));
            break;
        case RootType::D:
            for (int i = 1; i < d; ++i) s.push_back(diff(d, i, i + 1));
            s.push_back(unit(d, d - 2) + unit(d, d - 1));
            break;
        case RootType::E6:
        case RootType::E7: {
            s.push_back(half_vec({1, -1, -1, -1, -1, -1, -1, 1}));
            s.push_back(unit(8, 0) + unit(8, 1));
            for (int i = 2; i <= d - 1; ++i) s.push_back(diff(8, i, i - 1));
            break;
        }
    }
    return s;
}

bool vec_less(const Vec& a, const Vec& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
}

Vec reflect(const Vec& v, const Vec& root) { return v - pairing(root, v) * coroot_of(root); }

}  // namespace

std::string type_label(RootType t) {
    switch (t) {
        case RootType::A: return "A";
        case RootType::B: return "B";
        case RootType::C: return "C";
        case RootType::D: return "D";
        case RootType::E6: return "E6";
        case RootType::E7: return "E7";
    }
    return "?";
}

RootType parse_root_type(const std::string& label) {
    static const std::map<std::string, RootType> table = {
        {"A", RootType::A}, {"B", RootType::B}, {"C", RootType::C}, {"D", RootType::D},
        {"E6", RootType::E6}, {"E7", RootType::E7}, {"a", RootType::A}, {"b", RootType::B},
        {"c", RootType::C}, {"d", RootType::D}, {"e6", RootType::E6}, {"e7", RootType::E7}};
    auto it = table.find(label);
    if (it == table.end()) throw std::invalid_argument("unknown root system type '" + label + "'");
    return it->second;
}

bool valid_rank(RootType type, int d) {
    switch (type) {
        case RootType::A: return d >= 1;
        case RootType::B: return d >= 3;
        case RootType::C: return d >= 2;
        case RootType::D: return d >= 4;
        case RootType::E6: return d == 6;
        case RootType::E7: return d == 7;
    }
    return false;
}

Vec coroot_of(const Vec& root) { return root * (Rational(2) / dot(root, root)); }

Rational pairing(const Vec& root, const Vec& coweight) { return dot(root, coweight); }

std::vector<Vec> root_closure(const std::vector<Vec>& simple) {
    std::vector<Vec> roots;
    auto known = [&](const Vec& v) {
        return std::any_of(roots.begin(), roots.end(), [&](const Vec& w) { return w == v; });
    };
    std::vector<Vec> frontier;
    for (const Vec& a : simple) {
        if (!known(a)) { roots.push_back(a); frontier.push_back(a); }
    }
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const Vec& v : frontier) {
            for (const Vec& a : simple) {
                Vec w = reflect(v, a);
                if (!known(w)) { roots.push_back(w); next.push_back(w); }
            }
        }
        frontier = std::move(next);
    }
    return roots;
}

std::vector<Rational> simple_coordinates(const RootSystem& rs, const Vec& v) {
    const int d = rs.rank;
    Mat gram(d, d), rhs(d, 1);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) gram(i, j) = dot(rs.alpha[i + 1], rs.alpha[j + 1]);
        rhs(i, 0) = dot(rs.alpha[i + 1], v);
    }
    Mat c = solve_exact(gram, rhs);
    std::vector<Rational> out(d);
    for (int i = 0; i < d; ++i) out[i] = c(i, 0);
    return out;
}

int RootSystem::positive_index(const Vec& root) const {
    for (int i = 0; i < num_positive(); ++i) {
        if (positive_roots[i] == root) return i;
    }
    return -1;
}

Eigen::MatrixXi RootSystem::cartan_matrix() const {
    Eigen::MatrixXi c(rank, rank);
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            Rational v = pairing(alpha[i + 1], coroot[j + 1]);
            c(i, j) = static_cast<int>(v.num());
        }
    }
    return c;
}

RootSystem build_root_system(RootType type, int d) {
    if (!valid_rank(type, d)) {
        throw std::out_of_range("unsupported rank " + std::to_string(d) + " for type " + type_label(type));
    }
    RootSystem rs;
    rs.type = type;
    rs.rank = d;
    std::vector<Vec> simple = simple_roots(type, d);
    rs.ambient_dim = static_cast<int>(simple.front().size());
    rs.alpha.push_back(Vec());  // placeholder for alpha_0
    for (const Vec& a : simple) rs.alpha.push_back(a);

    // Positive roots: closure, then keep those with nonnegative simple coordinates.
    std::vector<std::pair<Rational, Vec>> graded;
    for (const Vec& r : root_closure(simple)) {
        auto c = simple_coordinates(rs, r);
        bool pos = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= Rational(0); });
        if (!pos) continue;
        Rational h(0);
        for (const Rational& x : c) h += x;
        graded.emplace_back(h, r);
    }
    std::sort(graded.begin(), graded.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return vec_less(b.second, a.second);
    });
    for (auto& g : graded) rs.positive_roots.push_back(g.second);

    const Vec theta = rs.positive_roots.back();
    rs.alpha[0] = -theta;
    rs.highest_coeffs.push_back(1);
    for (const Rational& c : simple_coordinates(rs, theta)) rs.highest_coeffs.push_back(static_cast<int>(c.num()));

    for (const Vec& a : rs.alpha) rs.coroot.push_back(coroot_of(a));

    // omega_j = sum_k (C^{-1})_{kj} alpha_k^vee with C_{ik} = <alpha_i, alpha_k^vee>.
    Mat cartan(d, d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) cartan(i, k) = pairing(rs.alpha[i + 1], rs.coroot[k + 1]);
    Mat inv = solve_exact(cartan, Mat::Identity(d, d));
    rs.coweight.push_back(Vec::Zero(rs.ambient_dim));
    for (int j = 0; j < d; ++j) {
        Vec w = Vec::Zero(rs.ambient_dim);
        for (int k = 0; k < d; ++k) w += inv(k, j) * rs.coroot[k + 1];
        rs.coweight.push_back(w);
    }
    return rs;
}

bool is_minuscule(const RootSystem& rs, const Vec& coweight) {
    return std::all_of(rs.positive_roots.begin(), rs.positive_roots.end(), [&](const Vec& a) {
        Rational v = pairing(a, coweight);
        return v == Rational(0) || v == Rational(1);
    });
}

std::vector<int> minuscule_coweights(const RootSystem& rs) {
    std::vector<int> out;
    for (int j = 1; j <= rs.rank; ++j) {
        if (is_minuscule(rs, rs.coweight[j])) out.push_back(j);
    }
    return out;
}

nlohmann::json vec_json(const Vec& v) {
    nlohmann::json a = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i).str());
    return a;
}

Vec vec_from_json(const nlohmann::json& j) {
    Vec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = Rational::parse(j[i].get<std::string>());
    return v;
}

nlohmann::json to_json(const RootSystem& rs) {
    nlohmann::json j;
    j["type"] = type_label(rs.type);
    j["rank"] = rs.rank;
    j["ambient_dim"] = rs.ambient_dim;
    auto list = [](const std::vector<Vec>& vs) {
        nlohmann::json a = nlohmann::json::array();
        for (const Vec& v : vs) a.push_back(vec_json(v));
        return a;
    };
    j["alpha"] = list(rs.alpha);
    j["coroot"] = list(rs.coroot);
    j["coweight"] = list(rs.coweight);
    j["positive_roots"] = list(rs.positive_roots);
    j["highest_coeffs"] = rs.highest_coeffs;
    return j;
}

}  // namespace alcove
