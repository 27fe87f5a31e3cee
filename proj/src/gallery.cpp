#include "alcove/gallery.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace alcove {

GalleryCase parse_gallery_case(const std::string& label) {
    static const std::map<std::string, GalleryCase> table = {
        {"A", GalleryCase::A},   {"B", GalleryCase::B},           {"C", GalleryCase::C},
        {"D", GalleryCase::D},   {"E6", GalleryCase::E6},         {"E6dual", GalleryCase::E6Dual},
        {"E7", GalleryCase::E7}, {"e6", GalleryCase::E6},         {"e6dual", GalleryCase::E6Dual},
        {"e7", GalleryCase::E7}, {"a", GalleryCase::A},           {"b", GalleryCase::B},
        {"c", GalleryCase::C},   {"d", GalleryCase::D}};
    auto it = table.find(label);
    if (it == table.end()) throw std::invalid_argument("unknown gallery case '" + label + "'");
    return it->second;
}

std::string case_label(GalleryCase c) {
    switch (c) {
        case GalleryCase::A: return "A";
        case GalleryCase::B: return "B";
        case GalleryCase::C: return "C";
        case GalleryCase::D: return "D";
        case GalleryCase::E6: return "E6";
        case GalleryCase::E6Dual: return "E6dual";
        case GalleryCase::E7: return "E7";
    }
    return "?";
}

RootType root_type_of(GalleryCase c) {
    switch (c) {
        case GalleryCase::A: return RootType::A;
        case GalleryCase::B: return RootType::B;
        case GalleryCase::C: return RootType::C;
        case GalleryCase::D: return RootType::D;
        case GalleryCase::E6:
        case GalleryCase::E6Dual: return RootType::E6;
        case GalleryCase::E7: return RootType::E7;
    }
    return RootType::A;
}

namespace {

const AffineElement& omega_by_permutation(const AffineWeyl& W, const std::vector<int>& sigma) {
    int k = omega_with_permutation(W, sigma);
    if (k < 0) throw std::logic_error("no length-zero element with the requested permutation");
    return W.omega[k];
}

}  // namespace

GalleryDatum standard_gallery_datum(GalleryCase c, int d) {
    const RootType t = root_type_of(c);
    if (t == RootType::E6) d = 6;
    if (t == RootType::E7) d = 7;
    auto W = std::make_shared<const AffineWeyl>(build_root_system(t, d));
    GalleryDatum g;
    g.which = c;
    g.d = d;
    g.weyl = W;
    g.omega_part = AffineElement::Identity(W->dim());
    switch (c) {
        case GalleryCase::C:
        case GalleryCase::A:
            for (int i = d; i >= 0; --i) g.beta.push_back(i);
            g.tau_index = d;
            g.central_factor = "p*id";
            break;
        case GalleryCase::B:
            for (int i = 1; i <= d; ++i) g.beta.push_back(i);
            for (int i = d - 1; i >= 2; --i) g.beta.push_back(i);
            g.beta.push_back(0);
            g.tau_index = 1;
            g.central_factor = "none";
            break;
        case GalleryCase::D:
            for (int i = d - 1; i >= 1; --i) g.beta.push_back(i);
            g.beta.push_back(d);
            for (int i = d - 2; i >= 2; --i) g.beta.push_back(i);
            g.beta.push_back(0);
            g.tau_index = d - 1;
            g.central_factor = d % 2 == 0 ? "p*id" : "p^2*id";
            break;
        case GalleryCase::E6:
            g.beta = {2, 4, 3, 1};
            g.omega_part = inverse(omega_by_permutation(*W, {1, 6, 3, 5, 4, 2, 0}));
            g.tau_index = 1;
            g.central_factor = "none";
            break;
        case GalleryCase::E6Dual:
            g.beta = {2, 4, 5, 6};
            g.omega_part = omega_by_permutation(*W, {1, 6, 3, 5, 4, 2, 0});
            g.tau_index = 6;
            g.central_factor = "none";
            break;
        case GalleryCase::E7:
            g.beta = {1, 3, 4, 2, 5, 4, 3, 1, 0};
            g.omega_part = omega_by_permutation(*W, {7, 6, 2, 5, 4, 3, 1, 0});
            g.tau_index = 7;
            g.central_factor = "none";
            break;
    }
    g.tau = W->rs.coweight[g.tau_index];
    g.phi = evaluate_word(*W, g.beta) * g.omega_part;
    if (length(*W, g.phi) != g.r()) throw std::logic_error("gallery word is not reduced");
    if (!is_straight(*W, g.phi)) throw std::logic_error("gallery element is not straight");
    return g;
}

AffineElement gallery_element(const GalleryDatum& g, int j) {
    const int r = g.r();
    AffineElement x = power(g.phi, j / r);
    for (int b = 0; b < j % r; ++b) x = x * g.weyl->simple[g.beta[b]];
    return x;
}

CrossingProfile crossing_profile(const GalleryDatum& g, int steps) {
    if (steps < 1) throw std::invalid_argument("crossing profile needs at least one step");
    const AffineWeyl& W = *g.weyl;
    const int np = W.rs.num_positive();
    CrossingProfile prof;
    prof.e_table.assign(1, std::vector<int>(np, 0));
    prof.m_table.assign(np, 0);

    // Walk incrementally: g_{j+1} = g_j * s_{beta(j mod r + 1)} * (v if a period closes).
    AffineElement cur = AffineElement::Identity(W.dim());
    Vec p = W.base_point;
    for (int j = 0; j < steps; ++j) {
        const int b = j % g.r();
        AffineElement next = cur * W.simple[g.beta[b]];
        if (b + 1 == g.r()) next = next * g.omega_part;
        const Vec q = apply(next, W.base_point);
        int hit = -1;
        for (int a = 0; a < np; ++a) {
            const Rational x = pairing(W.rs.positive_roots[a], p);
            const Rational y = pairing(W.rs.positive_roots[a], q);
            if (x.floor() == y.floor()) continue;
            if (hit >= 0) throw std::logic_error("consecutive gallery alcoves are not adjacent");
            hit = a;
            prof.positive.push_back(y > x);
            prof.level.push_back(std::max(x.floor(), y.floor()));
        }
        if (hit < 0) throw std::logic_error("consecutive gallery alcoves coincide");
        prof.alpha_seq.push_back(hit);
        std::vector<int> row = prof.e_table.back();
        ++row[hit];
        prof.e_table.push_back(std::move(row));
        cur = next;
        p = q;
    }
    prof.m_table = prof.e_table.back();
    return prof;
}

CrossingProfile period_profile(const GalleryDatum& g) {
    TranslationPower tp = translation_power(g.phi);
    return crossing_profile(g, tp.m * g.r());
}

VerificationReport check_concept(const GalleryDatum& g) { return check_concept(g, g.tau); }

VerificationReport check_concept(const GalleryDatum& g, const Vec& tau) {
    VerificationReport rep;
    rep.suite = "gallery-concept/" + case_label(g.which) + std::to_string(g.d);
    const RootSystem& rs = g.rs();
    const TranslationPower tp = translation_power(g.phi);
    const CrossingProfile prof = crossing_profile(g, tp.m * g.r());

    nlohmann::json neg = nlohmann::json::array();
    for (int j = 0; j < prof.steps(); ++j) {
        if (!prof.positive[j]) neg.push_back({{"step", j}, {"root", vec_json(rs.positive_roots[prof.alpha_seq[j]])}});
    }
    rep.add("crossings-positive", "every wall of the gallery over a translation period is crossed in the positive direction",
            neg.empty(), neg.empty() ? nlohmann::json() : neg);

    nlohmann::json bad = nlohmann::json::array();
    for (int j = 0; j < prof.steps(); ++j) {
        const Rational v = pairing(rs.positive_roots[prof.alpha_seq[j]], tau);
        if (v != Rational(1)) bad.push_back({{"step", j}, {"pairing", v.str()}});
    }
    rep.add("crossed-roots-pair-to-one", "each crossed root pairs to 1 with tau", bad.empty(),
            bad.empty() ? nlohmann::json() : bad);

    const AffineElement t = translation(tau);
    const bool commute = t * g.phi == g.phi * t;
    rep.add("tau-commutes-with-phi", "translation by tau commutes with phi", commute);

    std::set<int> walls(prof.alpha_seq.begin(), prof.alpha_seq.end());
    std::set<int> moved, tau_walls;
    for (int a = 0; a < rs.num_positive(); ++a) {
        if (pairing(rs.positive_roots[a], tp.lambda) != Rational(0)) moved.insert(a);
        if (pairing(rs.positive_roots[a], tau) == Rational(1)) tau_walls.insert(a);
    }
    rep.add("wall-set-equalities", "crossed roots = roots moved by the translation power = roots pairing to 1 with tau",
            walls == moved && moved == tau_walls,
            {{"crossed", walls.size()}, {"moved", moved.size()}, {"tau", tau_walls.size()}});

    int total = 0;
    for (int m : prof.m_table) total += m;
    rep.add("multiplicity-sum", "sum of crossing multiplicities over a period equals m * l(phi)",
            total == tp.m * length(*g.weyl, g.phi), {{"sum", total}, {"m", tp.m}, {"r", g.r()}});
    return rep;
}

std::vector<AffineElement> reflection_factorization(const GalleryDatum& g) {
    const AffineWeyl& W = *g.weyl;
    std::vector<AffineElement> ys;
    AffineElement prefix = AffineElement::Identity(W.dim());
    for (int i = 0; i < g.r(); ++i) {
        ys.push_back(prefix * W.simple[g.beta[i]] * inverse(prefix));
        prefix = prefix * W.simple[g.beta[i]];
    }
    return ys;
}

VerificationReport check_reflection_factorization(const GalleryDatum& g) {
    VerificationReport rep;
    rep.suite = "reflection-factorization/" + case_label(g.which) + std::to_string(g.d);
    const AffineWeyl& W = *g.weyl;
    const auto ys = reflection_factorization(g);
    const CrossingProfile prof = crossing_profile(g, g.r());
    const AffineElement id = AffineElement::Identity(W.dim());
    bool involutions = true, moves = true, walls = true;
    for (int i = 0; i < g.r(); ++i) {
        const AffineElement& y = ys[i];
        involutions = involutions && (y * y == id);
        moves = moves && (y * gallery_element(g, i) == gallery_element(g, i + 1) * (i + 1 == g.r() ? inverse(g.omega_part) : id));
        // The fixed hyperplane of y is the crossed wall {<alpha, v> = level}.
        const Vec& a = W.rs.positive_roots[prof.alpha_seq[i]];
        const AffineElement expect = [&] {
            AffineElement s = linear_reflection(a);
            s.translation = coroot_of(a) * Rational(prof.level[i]);
            return s;
        }();
        walls = walls && (y == expect);
    }
    AffineElement prod = id;
    for (int i = g.r() - 1; i >= 0; --i) prod = prod * ys[i];
    rep.add("y-involutions", "each y_i is an involution", involutions);
    rep.add("y-moves-alcoves", "y_i sends C^(i) to C^(i+1)", moves);
    rep.add("y-is-wall-reflection", "y_i is the affine reflection in the wall between C^(i) and C^(i+1)", walls);
    rep.add("y-product", "y_{r-1} ... y_0 equals phi times the inverse of its length-zero part",
            prod == g.phi * inverse(g.omega_part));
    return rep;
}

VerificationReport check_minimality(const GalleryDatum& g, int periods) {
    VerificationReport rep;
    rep.suite = "gallery-minimality/" + case_label(g.which) + std::to_string(g.d);
    nlohmann::json bad = nlohmann::json::array();
    for (int j = 0; j <= periods * g.r(); ++j) {
        const int l = length(*g.weyl, gallery_element(g, j));
        if (l != j) bad.push_back({{"j", j}, {"length", l}});
    }
    rep.add("gallery-distance", "the gallery distance from C to C^(j) equals j", bad.empty(),
            bad.empty() ? nlohmann::json() : bad);
    return rep;
}

nlohmann::json to_json(const CrossingProfile& p, const RootSystem& rs) {
    nlohmann::json m = nlohmann::json::object();
    for (int a = 0; a < static_cast<int>(p.m_table.size()); ++a) {
        if (p.m_table[a] != 0) m[vec_str(rs.positive_roots[a])] = p.m_table[a];
    }
    return {{"alpha_seq", p.alpha_seq}, {"m_table", m}};
}

}  // namespace alcove
