#include "doctest.h"

#include "alcove/gallery.hpp"
#include "alcove/suites.hpp"

using namespace alcove;

TEST_CASE("standard data are straight with the expected word length") {
    struct Case { GalleryCase c; int d; int r; };
    for (Case k : {Case{GalleryCase::C, 3, 4}, Case{GalleryCase::B, 3, 5}, Case{GalleryCase::D, 4, 6},
                   Case{GalleryCase::D, 5, 8}, Case{GalleryCase::A, 2, 3}}) {
        const GalleryDatum g = standard_gallery_datum(k.c, k.d);
        CHECK(g.r() == k.r);
        CHECK(is_straight(*g.weyl, g.phi));
        CHECK(length(*g.weyl, g.phi) == k.r);
    }
}

TEST_CASE("gallery checks hold for the classical data") {
    for (auto [c, d] : {std::pair{GalleryCase::C, 2}, {GalleryCase::C, 3}, {GalleryCase::B, 3},
                        {GalleryCase::D, 4}, {GalleryCase::D, 5}, {GalleryCase::A, 3}}) {
        const VerificationReport rep = gallery_report(c, d);
        CHECK_MESSAGE(rep.ok(), render_text(rep));
    }
}

TEST_CASE("reflection factorization reproduces the gallery") {
    const GalleryDatum g = standard_gallery_datum(GalleryCase::C, 3);
    const auto refl = reflection_factorization(g);
    CHECK(static_cast<int>(refl.size()) == g.r());
    CHECK(check_reflection_factorization(g).ok());
}

TEST_CASE("crossing profile over a period has the translation length") {
    const GalleryDatum g = standard_gallery_datum(GalleryCase::C, 2);
    const CrossingProfile prof = period_profile(g);
    const TranslationPower tp = translation_power(g.phi);
    CHECK(prof.steps() == tp.m * g.r());
    CHECK(prof.steps() == translation_length(g.rs(), tp.lambda));
}
