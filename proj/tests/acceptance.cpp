// Runs the nine acceptance suites and prints one line per criterion.
// Exit status is nonzero when any criterion fails or exceeds its time budget.
// Pass --verbose to print the failing items of every suite.

#include "alcove/suites.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>

using namespace alcove;

namespace {

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;  // 0 for no limit
    std::function<VerificationReport()> run;
};

VerificationReport criterion_appendix() {
    VerificationReport rep;
    for (AppendixCase c : {AppendixCase::E6, AppendixCase::E6Dual, AppendixCase::E7}) rep.append(appendix_report(c), appendix_label(c));
    return rep;
}

VerificationReport criterion_straightness() {
    VerificationReport rep;
    for (AppendixCase c : {AppendixCase::E6, AppendixCase::E7}) rep.append(straightness_report(c), appendix_label(c));
    return rep;
}

const std::vector<std::pair<RootType, int>>& classical_cases() {
    static const std::vector<std::pair<RootType, int>> cases = [] {
        std::vector<std::pair<RootType, int>> v;
        for (int d = 2; d <= 5; ++d) v.emplace_back(RootType::C, d);
        for (int d = 3; d <= 5; ++d) v.emplace_back(RootType::B, d);
        for (int d = 4; d <= 6; ++d) v.emplace_back(RootType::D, d);
        for (int d = 1; d <= 4; ++d) v.emplace_back(RootType::A, d);
        return v;
    }();
    return cases;
}

GalleryCase gallery_case_of(RootType t) {
    switch (t) {
        case RootType::A: return GalleryCase::A;
        case RootType::B: return GalleryCase::B;
        case RootType::C: return GalleryCase::C;
        default: return GalleryCase::D;
    }
}

VerificationReport criterion_matrices() {
    VerificationReport rep;
    for (auto [t, d] : classical_cases()) rep.append(verify_group_model(t, d), type_label(t) + std::to_string(d));
    return rep;
}

VerificationReport criterion_galleries() {
    VerificationReport rep;
    for (auto [t, d] : classical_cases()) rep.append(gallery_report(gallery_case_of(t), d), type_label(t) + std::to_string(d));
    return rep;
}

VerificationReport criterion_bijections() {
    VerificationReport rep;
    const std::vector<std::tuple<RootType, int, int>> cases{{RootType::C, 2, 3}, {RootType::C, 3, 3}, {RootType::B, 3, 3},
                                                            {RootType::D, 4, 3}, {RootType::A, 1, 3}, {RootType::A, 2, 3}};
    for (auto [t, d, p] : cases)
        rep.append(verify_bijection(t, d, p, true), type_label(t) + std::to_string(d) + "/p=" + std::to_string(p));
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    bool verbose = false;
    unsigned long long seed = 20240611ULL;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--verbose") == 0) verbose = true;
        else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) seed = std::stoull(argv[++i]);
    }

    const std::vector<Criterion> criteria{
        {1, "appendix words evaluate to the translations and to powers of phi", 30, criterion_appendix},
        {2, "translation lengths, moved roots and straightness for E6 and E7", 30, criterion_straightness},
        {3, "matrix identities for C2-5, B3-5, D4-6, A1-4", 60, criterion_matrices},
        {4, "gallery properties of the classical standard data", 30, criterion_galleries},
        {5, "rank-one normal form and dual oracle on the full grid", 120,
         [] { return rank_one_grid_report({{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}}); }},
        {6, "valuation congruence", 0, [] { return congruence_report(); }},
        {7, "involution algebra on the unreduced D sets, p = 3, r = 4, 6", 0,
         [] { return involution_algebra_report(3, {4, 6}); }},
        {8, "supersingular data versus classes of triples", 600, criterion_bijections},
        {9, "induction to phi-modules, 50 random inputs per (p, r)", 0,
         [seed] { return induction_report(seed, 50, {{3, 2}, {3, 3}}); }},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        VerificationReport rep;
        std::string error;
        try {
            rep = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.budget_seconds <= 0 || secs <= c.budget_seconds;
        const bool pass = error.empty() && rep.ok() && in_time;
        if (!pass) ++failures;
        std::printf("criterion %d %s  %4d/%-4d checks  %8.2f s  %s\n", c.id, pass ? "PASS" : "FAIL", rep.passed(),
                    static_cast<int>(rep.items.size()), secs, c.title);
        if (!error.empty()) std::printf("    error: %s\n", error.c_str());
        if (!in_time) std::printf("    exceeded the %.0f s budget\n", c.budget_seconds);
        if (!pass || verbose)
            for (const CheckItem& item : rep.items)
                if (!item.passed) std::printf("    failed: %s (%s)\n", item.id.c_str(), item.anchor.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
