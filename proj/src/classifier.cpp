#include "alcove/classifier.hpp"

#include "alcove/gallery.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace alcove {

namespace {

int mod(long long a, int m) { return static_cast<int>(((a % m) + m) % m); }

int at(const std::vector<int>& k, long long i) {
    const long long r = static_cast<long long>(k.size());
    return k[static_cast<std::size_t>(((i % r) + r) % r)];
}

long long factorial_mod(int k, int p) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f = f * i % p;
    return f;
}

Rational rational_determinant(Mat m) {
    Rational det(1);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = c; r < m.rows(); ++r)
            if (m(r, c) != Rational(0)) { piv = r; break; }
        if (piv < 0) return Rational(0);
        if (piv != c) { m.row(c).swap(m.row(piv)); det = -det; }
        det *= m(c, c);
        for (Eigen::Index r = c + 1; r < m.rows(); ++r) m.row(r) -= (m(r, c) / m(c, c)) * m.row(c);
    }
    return det;
}

bool constant_digits(const std::vector<int>& k) {
    return std::all_of(k.begin(), k.end(), [&](int v) { return v == k.front(); });
}

GalleryCase gallery_case_of(RootType t) {
    switch (t) {
        case RootType::A: return GalleryCase::A;
        case RootType::B: return GalleryCase::B;
        case RootType::C: return GalleryCase::C;
        case RootType::D: return GalleryCase::D;
        default: throw std::invalid_argument("supersingular data are defined for the classical types only");
    }
}

std::vector<int> digits_from_word(const std::vector<int>& k, const std::vector<int>& word) {
    std::vector<int> out;
    out.reserve(word.size());
    for (int w : word) out.push_back(k[static_cast<std::size_t>(w)]);
    return out;
}

}  // namespace

Family parse_family(const std::string& s) {
    if (s == "C" || s == "c") return Family::C;
    if (s == "B" || s == "b") return Family::B;
    if (s == "D" || s == "d") return Family::D;
    if (s == "A" || s == "a") return Family::A;
    throw std::invalid_argument("unknown family '" + s + "' (expected C, B, D or A)");
}

std::string family_label(Family f) {
    switch (f) {
        case Family::C: return "C";
        case Family::B: return "B";
        case Family::D: return "D";
        case Family::A: return "A";
    }
    return "?";
}

Family family_of(RootType t) {
    switch (t) {
        case RootType::A: return Family::A;
        case RootType::B: return Family::B;
        case RootType::C: return Family::C;
        case RootType::D: return Family::D;
        default: throw std::invalid_argument("no class family for exceptional types");
    }
}

int frobenius_power(RootType t, int d) {
    switch (t) {
        case RootType::A:
        case RootType::C: return d + 1;
        case RootType::B: return 2 * d - 1;
        case RootType::D: return 2 * d - 2;
        default: throw std::invalid_argument("no Frobenius power for exceptional types");
    }
}

bool operator<(const ClassPoint& a, const ClassPoint& b) {
    const long long na = a.n(), nb = b.n();
    if (na != nb) return na < nb;
    if (a.s != b.s) return a.s < b.s;
    return a.xi < b.xi;
}

ClassPoint make_point(Family f, int p, const std::vector<int>& digits, long long s, long long xi) {
    ClassPoint pt;
    pt.family = f;
    pt.p = p;
    pt.r = static_cast<int>(digits.size());
    pt.digits = digits;
    pt.s = mod(s, p - 1);
    pt.xi = f == Family::B ? 0 : mod_p(xi, p);
    return pt;
}

std::optional<std::string> membership_violation(const ClassPoint& pt, bool b_even_middle) {
    const int p = pt.p, r = pt.r;
    const long long q = int_pow(p, r), n = pt.n();
    if (static_cast<int>(pt.digits.size()) != r) return "digit count differs from r";
    for (int k : pt.digits)
        if (k < 0 || k >= p) return "digit outside [0, p-1]";
    if (n < 1 || n > q - 2) return "n outside [1, p^r - 2]";
    if (n % (p - 1) != 0) return "n not divisible by p - 1";
    if (pt.s < 0 || pt.s > p - 2) return "s outside [0, p-2]";
    switch (pt.family) {
        case Family::C:
        case Family::A:
            if (pt.xi <= 0 || pt.xi >= p) return "xi not a unit";
            break;
        case Family::B:
            if (r % 2 == 0) return "r must be odd";
            for (int i = 1; i <= (r - 1) / 2; ++i)
                if (pt.digits[i] != pt.digits[r - 1 - i]) return "k_i != k_{r-1-i}";
            if (b_even_middle && pt.digits[(r - 1) / 2] % 2 != 0) return "middle digit odd";
            break;
        case Family::D:
            if (r % 2 != 0 || r < 4) return "r must be even and at least 4";
            if (pt.xi <= 0 || pt.xi >= p) return "xi not a unit";
            for (int i = 1; i <= r / 2 - 2; ++i)
                if (pt.digits[i] != pt.digits[i + r / 2]) return "k_i != k_{i+r/2}";
            break;
    }
    return std::nullopt;
}

ClassPoint iota0(const ClassPoint& pt) {
    const auto& k = pt.digits;
    const int r = pt.r, p = pt.p;
    std::vector<int> out(k.size());
    long long s = pt.s;
    switch (pt.family) {
        case Family::C:
            for (int i = 0; i < r; ++i) {
                out[i] = k[r - 1 - i];
                s += static_cast<long long>(i) * k[i];
            }
            break;
        case Family::B:
            for (int i = 0; i < r; ++i) out[i] = k[r - 1 - i];
            s += k[0] - k[r - 1];
            break;
        case Family::D: {
            const int h = r / 2;
            out = k;
            out[0] = k[h];
            out[h - 1] = k[r - 1];
            out[h] = k[0];
            out[r - 1] = k[h - 1];
            for (int i = 0; i < h; ++i) s += k[i];
            break;
        }
        case Family::A:
            for (int i = 0; i < r; ++i) out[i] = at(k, i - 1);
            s -= k[r - 1];
            break;
    }
    return make_point(pt.family, p, out, s, pt.xi);
}

ClassPoint iota1(const ClassPoint& pt) {
    if (pt.family != Family::D) throw std::invalid_argument("iota1 is defined for family D only");
    const auto& k = pt.digits;
    const int r = pt.r, p = pt.p, h = r / 2;
    std::vector<int> out(k.size());
    long long s = pt.s;
    if (h % 2 == 1) {
        for (int i = 0; i < r; ++i) out[i] = k[r - 1 - i];
        s += static_cast<long long>((r - 2) / 4) * (k[h] + k[0]);
        for (int i = 2; i <= h - 1; ++i) s += static_cast<long long>(i - 1) * k[h - i];
    } else {
        for (int i = 0; i < r; ++i) out[i] = k[r - 1 - i];
        out[0] = k[h - 1];
        out[h - 1] = k[h];
        out[h] = k[r - 1];
        out[r - 1] = k[0];
        s += static_cast<long long>(r / 4 - 1) * k[h] + static_cast<long long>(r / 4) * k[0];
        // The displayed formula carries a factor p^i here; it is 1 modulo p-1.
        for (int i = 2; i <= h - 1; ++i) s += mod(static_cast<long long>(i - 1) * k[h - i] * (int_pow(p, i) % (p - 1)), p - 1);
    }
    return make_point(pt.family, p, out, s, pt.xi);
}

std::vector<ClassPoint> orbit(const ClassPoint& pt) {
    std::vector<ClassPoint> seen{pt};
    for (std::size_t i = 0; i < seen.size(); ++i) {
        std::vector<ClassPoint> next{iota0(seen[i])};
        if (pt.family == Family::D) next.push_back(iota1(seen[i]));
        for (auto& q : next)
            if (std::find(seen.begin(), seen.end(), q) == seen.end()) seen.push_back(q);
    }
    return seen;
}

ClassPoint canonical_rep(const ClassPoint& pt) {
    const auto o = orbit(pt);
    return *std::min_element(o.begin(), o.end());
}

ClassEnumeration enumerate_classes(Family f, int r, int p, int q, bool b_even_middle) {
    if (q == 0) q = p;
    if (q != p) throw std::invalid_argument("only the prime field (q = p) is supported");
    if (p < 2 || r < 1) throw std::invalid_argument("need a prime p and r >= 1");
    for (int a = 2; a * a <= p; ++a)
        if (p % a == 0) throw std::invalid_argument("p must be prime");
    if (f == Family::B && r % 2 == 0) throw std::invalid_argument("family B needs odd r");
    if (f == Family::D && (r % 2 != 0 || r < 4)) throw std::invalid_argument("family D needs even r >= 4");
    long long qr = 1;
    for (int i = 0; i < r; ++i) {
        qr *= p;
        if (qr > 1000000) throw std::invalid_argument("p^r exceeds the enumeration limit 10^6");
    }
    ClassEnumeration e;
    e.family = f;
    e.r = r;
    e.p = p;
    std::set<ClassPoint> reps;
    std::map<ClassPoint, int> sizes;
    const int xi_lo = f == Family::B ? 0 : 1, xi_hi = f == Family::B ? 0 : p - 1;
    for (long long n = p - 1; n <= qr - 2; n += p - 1) {
        const auto k = base_p_digits(n, p, r);
        for (int s = 0; s <= p - 2; ++s)
            for (int xi = xi_lo; xi <= xi_hi; ++xi) {
                ClassPoint pt = make_point(f, p, k, s, xi);
                if (membership_violation(pt, false)) continue;
                if (membership_violation(pt, b_even_middle)) {
                    ++e.odd_middle_excluded;
                    continue;
                }
                ++e.unreduced_count;
                const auto o = orbit(pt);
                const ClassPoint rep = *std::min_element(o.begin(), o.end());
                if (reps.insert(rep).second) sizes[rep] = static_cast<int>(o.size());
            }
    }
    for (const auto& rp : reps) {
        e.reps.push_back(rp);
        e.orbit_sizes.push_back(sizes[rp]);
    }
    return e;
}

nlohmann::json to_json(const ClassPoint& pt) {
    nlohmann::json j{{"family", family_label(pt.family)}, {"r", pt.r}, {"p", pt.p}, {"n", pt.n()}, {"digits", pt.digits}, {"s", pt.s}};
    if (pt.family != Family::B) j["xi"] = pt.xi;
    return j;
}

std::string enumeration_csv(const ClassEnumeration& e) {
    std::ostringstream os;
    os << "family,r,p,n,digits,s,xi,orbit_size\n";
    for (std::size_t i = 0; i < e.reps.size(); ++i) {
        const auto& pt = e.reps[i];
        os << family_label(pt.family) << ',' << pt.r << ',' << pt.p << ',' << pt.n() << ',';
        for (std::size_t j = 0; j < pt.digits.size(); ++j) os << (j ? " " : "") << pt.digits[j];
        os << ',' << pt.s << ',';
        if (pt.family != Family::B) os << pt.xi;
        os << ',' << e.orbit_sizes[i] << '\n';
    }
    return os.str();
}

SymmetryVerdict is_symmetric(Family f, int p, const std::vector<RankOneClass>& D) {
    auto fail = [](std::string why) { return SymmetryVerdict{false, std::move(why)}; };
    auto congruent = [p](long long a, long long b) { return mod(a - b, p - 1) == 0; };
    auto digits = [](const RankOneClass& c) { return c.digits; };
    const std::size_t expected = f == Family::D ? 4 : f == Family::A ? (D.empty() ? 0 : D.front().digits.size()) : 2;
    if (D.size() != expected || D.empty()) return fail("wrong number of summands");
    const int r = static_cast<int>(D.front().digits.size());
    for (const auto& c : D)
        if (static_cast<int>(c.digits.size()) != r) return fail("summands with different r");

    switch (f) {
        case Family::C:
        case Family::B: {
            const auto k1 = digits(D[0]), k2 = digits(D[1]);
            for (int i = 0; i < r; ++i)
                if (k1[i] != k2[r - 1 - i]) return fail("(1)");
            if (f == Family::C) {
                if (D[0].xi != D[1].xi) return fail("(2C)");
                long long sum = 0;
                for (int i = 0; i < r; ++i) sum += static_cast<long long>(i) * k1[i];
                if (!congruent(D[1].s - D[0].s, sum)) return fail("(3C)");
            } else {
                if (r % 2 == 0) return fail("r even");
                const int mid = (r - 1) / 2;
                if (k1[mid] != k2[mid] || k1[mid] % 2 != 0) return fail("(1)");
                for (const auto& c : D) {
                    long long rho = 1;
                    for (int k : c.digits) rho = rho * factorial_mod(k, p) % p;
                    if (mod_p(c.xi * rho, p) != 1) return fail("(2B)");
                    for (int i = 1; i <= mid; ++i)
                        if (c.digits[i] != c.digits[r - 1 - i]) return fail("(2B)");
                }
                if (!congruent(D[1].s - D[0].s, k1[0] - k1[r - 1])) return fail("(3B)");
            }
            if (constant_digits(k1) && (k1[0] == 0 || k1[0] == p - 1)) return fail("(4)");
            return {true, ""};
        }
        case Family::D: {
            if (r % 2 != 0 || r < 4) return fail("r must be even and at least 4");
            const int h = r / 2;
            const auto& d11 = D[0].digits;
            const auto& d12 = D[1].digits;
            const auto& d21 = D[2].digits;
            const auto& d22 = D[3].digits;
            for (const auto& c : D)
                for (int i = 1; i <= h - 2; ++i)
                    if (c.digits[i] != c.digits[h + i]) return fail("(1)");
            for (int i = 1; i <= h - 2; ++i)
                if (d11[i] != d12[i] || d21[i] != d22[i]) return fail("(2)");
            for (const auto& [a, b] : {std::pair{&d11, &d12}, std::pair{&d21, &d22}})
                if ((*a)[0] != (*b)[h] || (*a)[h] != (*b)[0] || (*a)[h - 1] != (*b)[r - 1] || (*a)[r - 1] != (*b)[h - 1]) return fail("(3)");
            for (int i = 0; i < r; ++i) {
                const bool applies = h % 2 == 1 || (i >= 1 && i <= h - 2) || (i >= h + 1 && i <= r - 2);
                if (applies && (d11[i] != d21[r - i - 1] || d12[i] != d22[r - i - 1])) return fail("(4)");
            }
            if (h % 2 == 0 && (d11[0] != d21[r - 1] || d11[h - 1] != d21[0] || d11[h] != d21[h - 1] || d11[r - 1] != d21[h]))
                return fail("(4)");
            if (D[0].xi != D[1].xi || D[0].xi != D[2].xi || D[0].xi != D[3].xi) return fail("(5)");
            for (const auto& [a, b] : {std::pair{&D[0], &D[1]}, std::pair{&D[2], &D[3]}}) {
                long long sum = 0;
                for (int i = 0; i < h; ++i) sum += a->digits[i];
                if (!congruent(b->s - a->s, sum)) return fail("(6)");
            }
            long long off = 0;
            if (h % 2 == 1) {
                off = static_cast<long long>((r - 2) / 4) * (d11[h] + d11[0]);
            } else {
                off = static_cast<long long>(r / 4 - 1) * d11[h] + static_cast<long long>(r / 4) * d11[0];
            }
            for (int i = 2; i <= h - 1; ++i) off += static_cast<long long>(i - 1) * d11[h - i];
            if (!congruent(D[2].s - D[0].s, off)) return fail("(6)");
            if (constant_digits(d11) && (d11[0] == 0 || d11[0] == p - 1)) return fail("(7)");
            return {true, ""};
        }
        case Family::A: {
            const auto& k0 = D[0].digits;
            for (int j = 0; j < r; ++j) {
                for (int i = 0; i < r; ++i)
                    if (D[j].digits[i] != at(k0, i - j)) return fail("digit rotation");
                if (D[j].xi != D[0].xi) return fail("xi");
                long long sum = 0;
                for (int i = 1; i <= j; ++i) sum += at(k0, -i);
                if (!congruent(D[0].s - D[j].s, sum)) return fail("s offsets");
            }
            if (constant_digits(k0) && (k0[0] == 0 || k0[0] == p - 1)) return fail("exclusion");
            return {true, ""};
        }
    }
    return fail("unknown family");
}

bool operator<(const SupersingularDatum& a, const SupersingularDatum& b) {
    return std::tie(a.type, a.d, a.p, a.k, a.s_e, a.b) < std::tie(b.type, b.d, b.p, b.k, b.s_e, b.b);
}

std::vector<int> beta_word(RootType t, int d) { return standard_gallery_datum(gallery_case_of(t), d).beta; }

std::vector<int> conjugated_beta_word(RootType t, int d, const std::vector<int>& perm) {
    auto w = beta_word(t, d);
    for (int& i : w) i = perm[static_cast<std::size_t>(i)];
    return w;
}

std::vector<int> u_permutation(RootType t, int d) {
    std::vector<int> perm(static_cast<std::size_t>(d + 1));
    std::iota(perm.begin(), perm.end(), 0);
    switch (t) {
        case RootType::C:
            for (int i = 0; i <= d; ++i) perm[i] = d - i;
            break;
        case RootType::B:
            std::swap(perm[0], perm[1]);
            break;
        case RootType::D:
            std::swap(perm[0], perm[1]);
            std::swap(perm[d - 1], perm[d]);
            break;
        case RootType::A:
            for (int i = 0; i <= d; ++i) perm[i] = (i + d) % (d + 1);
            break;
        default: throw std::invalid_argument("no u for exceptional types");
    }
    return perm;
}

std::vector<int> rho_permutation(int d) {
    std::vector<int> perm(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) perm[i] = d - i;
    if (d % 2 == 1) {
        perm[d - 1] = 1;
        perm[d] = 0;
        perm[0] = d - 1;
        perm[1] = d;
    }
    return perm;
}

namespace {
long long scalar_exponent(const SupersingularDatum& x);
}  // namespace

std::optional<std::string> datum_violation(const SupersingularDatum& x) {
    if (x.type != RootType::A && x.type != RootType::B && x.type != RootType::C && x.type != RootType::D) return "unsupported type";
    if (!valid_rank(x.type, x.d)) return "unsupported rank";
    if (x.type == RootType::B && x.d < 3) return "type B needs d >= 3";
    if (x.type == RootType::D && x.d < 4) return "type D needs d >= 4";
    if (x.type == RootType::C && x.d < 2) return "type C needs d >= 2";
    const int p = x.p, d = x.d;
    if (static_cast<int>(x.k.size()) != d + 1) return "k must have d+1 entries";
    for (int k : x.k)
        if (k < 0 || k >= p) return "k_i outside [0, p-1]";
    if (constant_digits(x.k) && (x.k[0] == 0 || x.k[0] == p - 1)) return "k constant 0 or p-1";
    if (x.s_e < 0 || x.s_e > p - 2) return "s_e outside [0, p-2]";
    if (x.type != RootType::B && mod_p(x.b, p) == 0) return "b must be a unit";
    const auto& k = x.k;
    long long rel = 0;  // lambda applied to the relation among the affine coroots
    switch (x.type) {
        case RootType::C:
        case RootType::A:
            rel = std::accumulate(k.begin(), k.end(), 0LL);
            break;
        case RootType::B: {
            rel = k[0] + k[1] + k[d];
            for (int i = 2; i <= d - 1; ++i) rel += 2LL * k[i];
            if (k[d] % 2 != 0) return "k_d must be even (alpha_d^vee is a square in the torus)";
            long long twice = 2LL * x.s_e + k[d];
            for (int i = 1; i <= d - 1; ++i) twice += 2LL * k[i];
            if (mod(twice, p - 1) != 0) return "s_e incompatible with lambda on 2 tau = 2(alpha_1 + ... + alpha_{d-1}) + alpha_d";
            break;
        }
        case RootType::D:
            rel = k[0] + k[1] + k[d - 1] + k[d];
            for (int i = 2; i <= d - 2; ++i) rel += 2LL * k[i];
            break;
        default: break;
    }
    if (mod(rel, p - 1) != 0) return "lambda not trivial on the coroot relation";
    if (x.type == RootType::A && x.lambda_minus_id) {
        if (*x.lambda_minus_id != 1 && *x.lambda_minus_id != -1) return "lambda(-id) must be +1 or -1";
        if (x.p > 2 && *x.lambda_minus_id != (scalar_exponent(x) % 2 == 0 ? 1 : -1)) return "lambda(-id) inconsistent with (k, s_e)";
    }
    return std::nullopt;
}

namespace {

// Exponent of lambda on the scalar cocharacter x -> diag(x, ..., x) of GL_{d+1}. The matrix
// model indexes the affine digits one step behind the convention used for the points, so the
// digits are shifted before the character is evaluated.
long long scalar_exponent(const SupersingularDatum& x) {
    static thread_local std::map<int, GroupModel> models;
    auto it = models.find(x.d);
    if (it == models.end()) it = models.emplace(x.d, build_group_model(RootType::A, x.d)).first;
    const GroupModel& g = it->second;
    SupersingularDatum y = x;
    for (int i = 0; i <= x.d; ++i) y.k[i] = at(x.k, i + 1);
    std::vector<Laurent> ones(static_cast<std::size_t>(g.n), Laurent::x());
    return character_exponent(g, y, sym_diag(ones));
}

}  // namespace

int lambda_minus_id(const SupersingularDatum& x) {
    if (x.lambda_minus_id) return *x.lambda_minus_id;
    return scalar_exponent(x) % 2 == 0 ? 1 : -1;
}

namespace {

void require_valid(const SupersingularDatum& x) {
    if (auto v = datum_violation(x)) throw std::invalid_argument("invalid supersingular datum: " + *v);
}

long long scalar_of(const SupersingularDatum& x) {
    const int p = x.p;
    long long rho = 1;
    for (int k : x.k) rho = rho * factorial_mod(k, p) % p;
    // B, C, D: the factorials of all affine digits with multiplicity, i.e. over the word beta.
    if (x.type == RootType::B || x.type == RootType::D) {
        rho = 1;
        for (int i : beta_word(x.type, x.d)) rho = rho * factorial_mod(x.k[i], p) % p;
    }
    if (x.type == RootType::B) return inv_mod(rho, p);
    if (x.type == RootType::A) rho = mod_p(rho * lambda_minus_id(x), p);
    return mod_p(x.b * inv_mod(rho, p), p);
}

// Offsets s(e1) - s(e0) and s(f1) - s(e1) for type D.
std::pair<long long, long long> d_offsets(const std::vector<int>& k, int d) {
    long long e1 = 0, f1 = 0;
    for (int i = 2; i <= d - 2; ++i) e1 += static_cast<long long>(i - 1) * k[i];
    if (d % 2 == 0) {
        e1 += static_cast<long long>((d - 2) / 2) * (k[d - 1] + k[d]);
        for (int i = 1; i <= d - 1; ++i) f1 += k[i];
    } else {
        e1 += static_cast<long long>((d - 1) / 2) * k[d - 1] + static_cast<long long>((d - 3) / 2) * k[d];
        f1 = k[d];
        for (int i = 1; i <= d - 2; ++i) f1 += k[i];
    }
    return {e1, f1};
}

}  // namespace

ClassPoint supersingular_to_classpoint(const SupersingularDatum& x) {
    require_valid(x);
    const Family f = family_of(x.type);
    if (x.type == RootType::A) {
        std::vector<int> digits(static_cast<std::size_t>(x.d + 1));
        for (int i = 0; i <= x.d; ++i) digits[i] = at(x.k, -i);
        return make_point(f, x.p, digits, x.s_e, scalar_of(x));
    }
    return make_point(f, x.p, digits_from_word(x.k, beta_word(x.type, x.d)), x.s_e, scalar_of(x));
}

std::vector<RankOneClass> functor_triples(const SupersingularDatum& x) {
    require_valid(x);
    const int p = x.p, d = x.d;
    const auto& k = x.k;
    const long long xi = scalar_of(x);
    std::vector<RankOneClass> out;
    auto add = [&](std::vector<int> digits, long long s) {
        RankOneClass c;
        c.digits = std::move(digits);
        c.n = static_cast<int>(from_digits(c.digits, p));
        c.s = mod(s, p - 1);
        c.xi = xi;
        out.push_back(std::move(c));
    };
    const auto beta = beta_word(x.type, d);
    switch (x.type) {
        case RootType::C: {
            long long off = 0;
            for (int i = 0; i <= d; ++i) off += static_cast<long long>(i) * k[i];
            add(digits_from_word(k, beta), x.s_e);
            add(digits_from_word(k, conjugated_beta_word(x.type, d, u_permutation(x.type, d))), x.s_e + off);
            break;
        }
        case RootType::B:
            add(digits_from_word(k, beta), x.s_e);
            add(digits_from_word(k, conjugated_beta_word(x.type, d, u_permutation(x.type, d))), x.s_e + k[1] - k[0]);
            break;
        case RootType::D: {
            long long f0 = 0;
            for (int i = 1; i <= d - 1; ++i) f0 += k[i];
            const auto [e1, f1] = d_offsets(k, d);
            const auto tilde = conjugated_beta_word(x.type, d, u_permutation(x.type, d));
            std::vector<int> w1, w2;
            if (d % 2 == 0) {
                w1.assign(beta.rbegin(), beta.rend());
                w2.assign(tilde.rbegin(), tilde.rend());
            } else {
                // gamma = pi o beta and delta = pi^{-1} o beta for the permutation pi induced by rho.
                const auto pi = rho_permutation(d);
                std::vector<int> pinv(pi.size());
                for (std::size_t i = 0; i < pi.size(); ++i) pinv[static_cast<std::size_t>(pi[i])] = static_cast<int>(i);
                w1 = conjugated_beta_word(x.type, d, pi);
                w2 = conjugated_beta_word(x.type, d, pinv);
            }
            add(digits_from_word(k, beta), x.s_e);
            add(digits_from_word(k, tilde), x.s_e + f0);
            add(digits_from_word(k, w1), x.s_e + e1);
            add(digits_from_word(k, w2), x.s_e + e1 + f1);
            break;
        }
        case RootType::A: {
            long long s = x.s_e;
            for (int j = 0; j <= d; ++j) {
                if (j > 0) s -= k[j];
                std::vector<int> digits(static_cast<std::size_t>(d + 1));
                for (int i = 0; i <= d; ++i) digits[i] = at(k, j - i);
                add(digits, s);
            }
            break;
        }
        default: break;
    }
    return out;
}

FunctorOutput functor_output(const SupersingularDatum& x, int N) {
    FunctorOutput out;
    out.predicted = functor_triples(x);
    const int r = frobenius_power(x.type, x.d);
    for (const auto& c : out.predicted)
        out.summands.push_back(construct_rank_one(x.p, r, c.n, c.s, x.type == RootType::B ? c.xi : c.xi, N));
    return out;
}

SupersingularDatum conjugate_by_u(const SupersingularDatum& x) {
    require_valid(x);
    SupersingularDatum y = x;
    y.lambda_minus_id.reset();
    const int d = x.d;
    const auto& k = x.k;
    if (x.type == RootType::A) {
        // Conjugation by u^{-1}: lambda'(alpha_i) = lambda(alpha_{i+1}).
        for (int i = 0; i <= d; ++i) y.k[i] = at(k, i + 1);
        y.s_e = mod(x.s_e - k[1], x.p - 1);
        return y;
    }
    const auto perm = u_permutation(x.type, d);
    for (int i = 0; i <= d; ++i) y.k[i] = k[perm[i]];
    long long s = x.s_e;
    if (x.type == RootType::C)
        for (int i = 0; i <= d; ++i) s += static_cast<long long>(i) * k[i];
    else if (x.type == RootType::B)
        s += k[1] - k[0];
    else
        for (int i = 1; i <= d - 1; ++i) s += k[i];
    y.s_e = mod(s, x.p - 1);
    return y;
}

SupersingularDatum conjugate_by_omega_or_rho(const SupersingularDatum& x) {
    require_valid(x);
    if (x.type != RootType::D) throw std::invalid_argument("omega and rho exist for type D only");
    SupersingularDatum y = x;
    const auto perm = rho_permutation(x.d);
    for (int i = 0; i <= x.d; ++i) y.k[i] = x.k[perm[i]];
    y.s_e = mod(x.s_e + d_offsets(x.k, x.d).first, x.p - 1);
    return y;
}

int character_exponent(const GroupModel& g, const SupersingularDatum& x, const SymMatrix& t) {
    const int n = g.n;
    auto exponents = [n](const SymMatrix& m) {
        Vec v(n);
        for (int i = 0; i < n; ++i) {
            if (!m(i, i).is_monomial() || m(i, i).exponent().first != 0) throw std::invalid_argument("not an x-torus element");
            v(i) = Rational(m(i, i).exponent().second);
        }
        return v;
    };
    // Columns tau, alpha_1^vee, ..., alpha_d^vee; keep a maximal independent subset.
    std::vector<Vec> cols{exponents(g.tau)};
    std::vector<long long> weights{-static_cast<long long>(x.s_e)};
    for (int i = 1; i <= x.d; ++i) {
        cols.push_back(exponents(g.coroot[i]));
        weights.push_back(x.k[i]);
    }
    std::vector<int> chosen;
    Mat basis(n, 0);
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        Mat trial(n, basis.cols() + 1);
        trial << basis, cols[j];
        // The columns are independent iff their Gram matrix is invertible.
        if (rational_determinant(trial.transpose() * trial) != Rational(0)) {
            basis = trial;
            chosen.push_back(j);
        }
    }
    const Vec c = exponents(t);
    const Mat gram = basis.transpose() * basis;
    const Mat rhs = basis.transpose() * c;
    const Mat sol = solve_exact(gram, rhs);
    if (basis * sol != Mat(c)) throw std::invalid_argument("torus element outside the span of tau and the coroots");
    long long e = 0;
    for (std::size_t j = 0; j < chosen.size(); ++j) {
        const Rational a = sol(static_cast<Eigen::Index>(j), 0);
        if (a.den() != 1) throw std::invalid_argument("torus element not an integral combination of tau and the coroots");
        e += a.num() * weights[static_cast<std::size_t>(chosen[j])];
    }
    return mod(e, x.p - 1);
}

std::vector<SupersingularDatum> enumerate_data(RootType t, int d, int p) {
    std::vector<SupersingularDatum> out;
    const int n = d + 1;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    for (long long code = 0; code < total; ++code) {
        SupersingularDatum x;
        x.type = t;
        x.d = d;
        x.p = p;
        x.k = base_p_digits(code, p, n);
        for (int s = 0; s <= p - 2; ++s)
            for (long long b = 1; b <= (t == RootType::B ? 1 : p - 1); ++b) {
                x.s_e = s;
                x.b = b;
                if (!datum_violation(x)) out.push_back(x);
            }
    }
    return out;
}

namespace {

nlohmann::json datum_json(const SupersingularDatum& x) {
    nlohmann::json j{{"type", type_label(x.type)}, {"d", x.d}, {"p", x.p}, {"k", x.k}, {"s_e", x.s_e}};
    if (x.type != RootType::B) j["b"] = x.b;
    return j;
}

// Datum-level s offset computed from the matrix model: lambda(g tau g^{-1}) = x^{-s'}.
int matrix_conjugate_s(const GroupModel& g, const SupersingularDatum& x, const SymMatrix& conj) {
    const SymMatrix t = conj * g.tau * monomial_inverse(conj);
    return mod(-static_cast<long long>(character_exponent(g, x, t)), x.p - 1);
}

}  // namespace

VerificationReport verify_bijection(RootType t, int d, int p, bool round_trip) {
    VerificationReport rep;
    rep.suite = "bijection " + type_label(t) + std::to_string(d) + " p=" + std::to_string(p);
    const Family fam = family_of(t);
    const int r = frobenius_power(t, d);
    const auto data = enumerate_data(t, d, p);
    const GroupModel g = build_group_model(t, d);
    rep.add("data-nonempty", "supersingular data exist", !data.empty(), nlohmann::json{{"count", data.size()}});

    // Points lie in the unreduced set.
    {
        nlohmann::json bad = nlohmann::json::array();
        for (const auto& x : data)
            if (auto v = membership_violation(supersingular_to_classpoint(x)); v && bad.size() < 5) bad.push_back({{"datum", datum_json(x)}, {"violation", *v}});
        rep.add("points-in-set", "every datum maps into the unreduced set of triples", bad.empty(), bad.empty() ? nlohmann::json(nullptr) : bad);
    }

    // Matrix-derived conjugation agrees with the transcribed offsets.
    {
        nlohmann::json bad = nlohmann::json::array();
        const SymMatrix uconj = t == RootType::A ? monomial_inverse(g.u) : g.u;
        for (const auto& x : data) {
            const int got = matrix_conjugate_s(g, x, uconj);
            int want = conjugate_by_u(x).s_e;
            if (t == RootType::A) want = mod(x.s_e - x.k[0], p - 1);  // offsets with k_i -> k_{i-1}
            if (got != want && bad.size() < 5) bad.push_back({{"datum", datum_json(x)}, {"matrix", got}, {"formula", want}});
            if (t == RootType::D) {
                const SymMatrix& w = g.omega ? *g.omega : *g.rho;
                const int got1 = matrix_conjugate_s(g, x, w);
                const int want1 = conjugate_by_omega_or_rho(x).s_e;
                if (got1 != want1 && bad.size() < 5) bad.push_back({{"datum", datum_json(x)}, {"matrix", got1}, {"formula", want1}, {"element", g.omega ? "omega" : "rho"}});
            }
        }
        const std::string anchor = t == RootType::A
                                       ? "s(u^{-1} tau u) from the matrices equals s_e - k_0, the displayed offset after relabelling k_i -> k_{i-1}"
                                       : "s-offsets of the conjugated datum agree with lambda on the conjugated tau in the matrix model";
        rep.add("offsets-match-matrices", anchor, bad.empty(), bad.empty() ? nlohmann::json(nullptr) : bad);
    }

    // Words of conjugated phi.
    {
        auto word_product = [&](const std::vector<int>& w) {
            SymMatrix m = sym_identity(g.n);
            for (int i : w) m = m * g.s[static_cast<std::size_t>(i)];
            return m;
        };
        auto same_up_to_torus = [&](const SymMatrix& a, const SymMatrix& b) {
            // a b^{-1} is a diagonal matrix with entries +-p^k (no x): same Weyl image and same valuation.
            const SymMatrix c = a * monomial_inverse(b);
            if (!is_diagonal(c)) return false;
            for (int i = 0; i < g.n; ++i)
                if (!c(i, i).is_monomial() || c(i, i).exponent().second != 0) return false;
            return true;
        };
        const SymMatrix beta_phi = word_product(beta_word(t, d));
        if (t != RootType::A) {
            const bool u_ok = same_up_to_torus(g.u * beta_phi * monomial_inverse(g.u), word_product(conjugated_beta_word(t, d, u_permutation(t, d))));
            rep.add("u-conjugated-word", "u s_beta(1)...s_beta(r) u^{-1} = s_{pi beta(1)}...s_{pi beta(r)} up to the torus", u_ok);
        }
        if (t == RootType::D && d % 2 == 1) {
            const SymMatrix& rho = *g.rho;
            const auto pi = rho_permutation(d);
            const bool ok = same_up_to_torus(rho * beta_phi * monomial_inverse(rho), word_product(conjugated_beta_word(t, d, pi)));
            // The index map as displayed: gamma(i) = beta(2d-2-i) away from the four special positions.
            std::vector<int> literal(static_cast<std::size_t>(r));
            const auto beta = beta_word(t, d);
            auto B = [&](int i) { return beta[static_cast<std::size_t>(i - 1)]; };
            for (int i = 1; i <= r; ++i) literal[i - 1] = (i >= 2 && i <= 2 * d - 3 && i != d - 1 && i != d) ? B(2 * d - 2 - i) : 0;
            literal[0] = 1;
            literal[d - 2] = d;
            literal[d - 1] = 0;
            literal[r - 1] = d - 1;
            rep.add("rho-conjugated-word", "rho s_beta(1)...s_beta(r) rho^{-1} = s_gamma(1)...s_gamma(r) with gamma(i) = beta(2d-1-i) in the middle range", ok,
                    nlohmann::json{{"gamma_used", conjugated_beta_word(t, d, pi)}, {"gamma_as_displayed", literal},
                                   {"displayed_matches", same_up_to_torus(rho * beta_phi * monomial_inverse(rho), word_product(literal))}});
        }
        if (t == RootType::D && d % 2 == 0) {
            const SymMatrix& w = *g.omega;
            const SymMatrix conj = w * beta_phi * monomial_inverse(w);
            const auto word = conjugated_beta_word(t, d, rho_permutation(d));
            const auto beta = beta_word(t, d);
            const std::vector<int> reversed(beta.rbegin(), beta.rend());
            rep.add("omega-conjugated-word", "omega s_beta(1)...s_beta(r) omega^{-1} = s_{pi beta(1)}...s_{pi beta(r)} with pi(i) = d-i",
                    same_up_to_torus(conj, word_product(word)),
                    nlohmann::json{{"conjugated_word", word}, {"reversed_beta", reversed},
                                   {"reversed_beta_matches", same_up_to_torus(conj, word_product(reversed))}});
        }
    }

    // Conjugation of data realizes the involutions on points.
    {
        nlohmann::json bad0 = nlohmann::json::array(), bad1 = nlohmann::json::array();
        for (const auto& x : data) {
            const ClassPoint pt = supersingular_to_classpoint(x);
            const ClassPoint a = supersingular_to_classpoint(conjugate_by_u(x));
            if (!(a == iota0(pt)) && bad0.size() < 5) bad0.push_back({{"datum", datum_json(x)}, {"point", to_json(pt)}, {"conjugate", to_json(a)}, {"iota0", to_json(iota0(pt))}});
            if (t == RootType::D) {
                const ClassPoint b = supersingular_to_classpoint(conjugate_by_omega_or_rho(x));
                if (!(b == iota1(pt)) && bad1.size() < 5) bad1.push_back({{"datum", datum_json(x)}, {"point", to_json(pt)}, {"conjugate", to_json(b)}, {"iota1", to_json(iota1(pt))}});
            }
        }
        rep.add("u-realizes-iota0", t == RootType::A ? "conjugation by u^{-1} acts on points as the rotation" : "conjugation by u acts on points as iota0",
                bad0.empty(), bad0.empty() ? nlohmann::json(nullptr) : bad0);
        if (t == RootType::D)
            rep.add("omega-rho-realizes-iota1", "conjugation by omega (d even) or rho (d odd) acts on points as iota1", bad1.empty(),
                    bad1.empty() ? nlohmann::json(nullptr) : bad1);
    }

    // Orbits of data versus classes of points.
    {
        std::map<SupersingularDatum, int> cls;
        int nclasses = 0;
        for (const auto& x : data) {
            if (cls.count(x)) continue;
            std::vector<SupersingularDatum> stack{x};
            cls[x] = nclasses;
            while (!stack.empty()) {
                const auto y = stack.back();
                stack.pop_back();
                std::vector<SupersingularDatum> nb{conjugate_by_u(y)};
                if (t == RootType::D) nb.push_back(conjugate_by_omega_or_rho(y));
                for (auto& z : nb)
                    if (!cls.count(z)) {
                        cls[z] = nclasses;
                        stack.push_back(z);
                    }
            }
            ++nclasses;
        }
        std::map<int, std::set<ClassPoint>> image;
        for (const auto& [x, c] : cls) image[c].insert(canonical_rep(supersingular_to_classpoint(x)));
        bool well_defined = true;
        std::map<ClassPoint, int> preimages;
        for (const auto& [c, reps] : image) {
            if (reps.size() != 1) well_defined = false;
            for (const auto& pt : reps) ++preimages[pt];
        }
        int collisions = 0;
        for (const auto& [pt, m] : preimages)
            if (m > 1) ++collisions;
        const ClassEnumeration e = enumerate_classes(fam, r, p);
        std::set<ClassPoint> all(e.reps.begin(), e.reps.end()), hit;
        for (const auto& [pt, m] : preimages) hit.insert(pt);
        rep.add("constant-on-classes", "all data in one conjugacy class map to one class of triples", well_defined, nlohmann::json{{"data_classes", nclasses}});
        rep.add("injective", "distinct classes of data map to distinct classes of triples", collisions == 0, nlohmann::json{{"collisions", collisions}});
        rep.add("surjective", "every class of triples is hit", hit == all, nlohmann::json{{"classes", all.size()}, {"hit", hit.size()}});
        if (t == RootType::B) {
            // Characters of the full torus with the same k differ by the order-2 quotient of the torus.
            std::map<std::vector<int>, int> per_k;
            for (const auto& x : data) ++per_k[x.k];
            int fiber = 0;
            for (const auto& [k, c] : per_k) fiber = std::max(fiber, c);
            rep.add("packet-fiber", "characters per digit vector (the packet size)", true,
                    nlohmann::json{{"max_characters_per_k", fiber}, {"odd_middle_excluded", e.odd_middle_excluded}});
        }
        if (t == RootType::D) {
            // A cocharacter diag(x^{a_1}, ..., x^{a_d}, x^{c-a_1}, ..., x^{c-a_d}) of GSO has coordinates (a_1, ..., a_d, c).
            Mat m(d + 1, d + 1);
            auto column = [&](const SymMatrix& a, int j) {
                for (int i = 0; i < d; ++i) m(i, j) = Rational(a(i, i).exponent().second);
                m(d, j) = Rational(a(0, 0).exponent().second + a(d, d).exponent().second);
            };
            column(g.tau, 0);
            for (int i = 1; i <= d; ++i) column(g.coroot[static_cast<std::size_t>(i)], i);
            const long long index = std::llabs(rational_determinant(m).num());
            rep.add("lattice-index", "index of the span of tau and the coroots in the cocharacter lattice (characters per datum)", true,
                    nlohmann::json{{"index", index}});
        }
    }

    // Symmetry of the predicted decomposition and the rank-one round trip.
    {
        nlohmann::json bad_sym = nlohmann::json::array(), bad_rt = nlohmann::json::array();
        std::map<std::tuple<int, int, long long>, RankOneClass> cache;
        const int N = default_precision(p, r);
        int summands = 0;
        for (const auto& x : data) {
            const auto triples = functor_triples(x);
            const auto v = is_symmetric(fam, p, triples);
            if (!v.symmetric && bad_sym.size() < 5) bad_sym.push_back({{"datum", datum_json(x)}, {"failed", v.failed}});
            if (!(triples.front().n == supersingular_to_classpoint(x).n() && triples.front().s == supersingular_to_classpoint(x).s) && bad_sym.size() < 5)
                bad_sym.push_back({{"datum", datum_json(x)}, {"failed", "first summand differs from the point"}});
            if (!round_trip) continue;
            for (const auto& c : triples) {
                const auto key = std::make_tuple(c.n, c.s, c.xi);
                auto it = cache.find(key);
                if (it == cache.end()) {
                    const long long xi = fam == Family::B ? c.xi : c.xi;
                    it = cache.emplace(key, classify_rank_one(construct_rank_one(p, r, c.n, c.s, xi, N))).first;
                }
                ++summands;
                if (!(it->second == c) && bad_rt.size() < 5)
                    bad_rt.push_back({{"datum", datum_json(x)}, {"predicted", to_json(c)}, {"classified", to_json(it->second)}});
            }
        }
        rep.add("functor-output-symmetric", "the predicted summands satisfy the symmetry conditions of the family", bad_sym.empty(),
                bad_sym.empty() ? nlohmann::json(nullptr) : bad_sym);
        if (round_trip)
            rep.add("summands-classify", "each constructed summand classifies back to its predicted triple", bad_rt.empty(),
                    bad_rt.empty() ? nlohmann::json{{"summands", summands}, {"distinct", cache.size()}} : bad_rt);
    }
    return rep;
}

}  // namespace alcove
