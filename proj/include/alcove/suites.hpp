#pragma once

#include "alcove/classifier.hpp"
#include "alcove/gallery.hpp"
#include "alcove/report.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace alcove {

// Matrix-model identities (classical types), gallery properties and straightness of phi.
// `label` is a root type label (A, B, C, D, E6, E7) or "E6dual". The prime p is used
// for a numeric specialization of the phi-power identity.
VerificationReport verify_case(const std::string& label, int d, int p);

// Only the gallery properties, for the classical standard data.
VerificationReport gallery_report(GalleryCase c, int d);

enum class AppendixCase { E6, E6Dual, E7 };
AppendixCase parse_appendix_case(const std::string& s);
std::string appendix_label(AppendixCase c);

// The stored translation words, their evaluation in the Bourbaki convention, the
// transformation to the present convention, an independent reduced word and letter counts.
VerificationReport appendix_report(AppendixCase c);
// Lengths of the translations, the number of roots moved, and straightness of phi.
VerificationReport straightness_report(AppendixCase c);
// The raw fixture text and its parsed word.
const std::string& appendix_fixture(AppendixCase c);
std::vector<int> parse_word(const std::string& text);

// classify(construct(n, s, xi)) on the full grid, also after a basis change, plus the dual oracle.
VerificationReport rank_one_grid_report(const std::vector<std::pair<int, int>>& pr);
// The valuation congruence for p in {3, 5}, all x, n in [1, p-1], m in {0, 1}, r in {1, 2}.
VerificationReport congruence_report();
// iota0^2, iota0 iota1 = iota1 iota0 and the rule for iota1^2 on every point of the unreduced D set.
VerificationReport involution_algebra_report(int p, const std::vector<int>& rs);
// Induction of `count` random rank-one modules (after a random change of basis) per (p, r).
VerificationReport induction_report(std::uint64_t seed, int count, const std::vector<std::pair<int, int>>& pr);
// The classification of a module given in JSON form: rank one, or a diagonal direct sum.
nlohmann::json classify_module_json(const nlohmann::json& module);

}  // namespace alcove
