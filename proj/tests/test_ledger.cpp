#include "doctest.h"

#include <algorithm>

#include "modp/ledger.hpp"

using namespace modp;
using namespace modp::ledger;
using hecke::PiSpec;
using hecke::SmoothChar;

namespace {

const ClassRow* find_row(const std::vector<ClassRow>& rows, const std::string& tau) {
    for (const auto& r : rows)
        if (r.tau == tau) return &r;
    return nullptr;
}

} // namespace

TEST_CASE("euler characteristic arithmetic") {
    CHECK(euler_h1(4, 1, 0) == 5);
    CHECK(euler_h1(3, 0, 0) == 3);
    CHECK(euler_h1(1, 1, 1) == 3);
}

TEST_CASE("adjoint dimension table") {
    for (auto [p, r] : {std::pair{5, 2}, {7, 0}, {5, 0}, {7, 6}}) {
        AdjointDims d = adjoint_dims(p, r);
        CHECK_FALSE(d.excluded);
        CHECK(d.h0 == 1);
        CHECK(d.h2 == 0);
        CHECK(d.h1_ad == 5);
        CHECK(d.h1_ad0 == 3);
    }
    CHECK(adjoint_dims(3, 1).excluded);
    CHECK_FALSE(adjoint_dims(3, 0).excluded);
}

TEST_CASE("main theorem assembly closes") {
    for (int p : {3, 5, 7}) {
        auto F = FieldCtx::make(p, 1);
        for (int r = 0; r <= p - 1; ++r) {
            if (p == 3 && r == 1) {
                CHECK_THROWS_AS(main_theorem_assembly(F, r), Error);
                continue;
            }
            DimLedger L = main_theorem_assembly(F, r);
            CHECK(L.check_all().empty());
            CHECK(L.get("ext1_Gzeta") == 3);
            CHECK(L.get("ext1_G") == 5);
            CHECK(L.get("hom_to_R1") == 2);
            if (r == 0 || r == p - 1) {
                CHECK(L.get("ext1_H_self") == 1);
            } else {
                CHECK(L.get("ext1_H_self") == 2);
                CHECK(L.get("image_in_hom_R1") == 1);
            }
        }
    }
}

TEST_CASE("ledger entries carry provenance and duplicate names are rejected") {
    auto F = FieldCtx::make(5, 1);
    DimLedger L = main_theorem_assembly(F, 0);
    bool has_cited = false, has_computed = false;
    for (const auto& e : L.entries) {
        has_cited |= e.prov == Provenance::PaperCited;
        has_computed |= e.prov == Provenance::Computed;
    }
    CHECK(has_cited);
    CHECK(has_computed);
    CHECK_THROWS_AS(L.add("ext1_G", 1, Provenance::Computed), Error);
}

TEST_CASE("classification of extensions of the steinberg representation") {
    auto F = FieldCtx::make(5, 1);
    auto rows = classification_table(F, PiSpec::steinberg());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].tau == "1");
    CHECK(rows[0].d == 2);
    CHECK(rows[0].ext_part == 1);
    CHECK(rows[0].hom_part == 1);
}

TEST_CASE("classification of extensions of the trivial representation") {
    for (int p : {5, 7}) {
        auto F = FieldCtx::make(p, 1);
        auto rows = classification_table(F, PiSpec::trivial());
        REQUIRE(rows.size() == 2);
        const ClassRow* sp = find_row(rows, "Sp");
        REQUIRE(sp);
        CHECK(sp->d == 1);
        std::string partner = "pi(" + std::to_string(p - 3) + ",1,w)";
        const ClassRow* pr = find_row(rows, partner);
        REQUIRE(pr);
        CHECK(pr->d == 1);
    }
}

TEST_CASE("supersingular classification: only the representation itself") {
    for (int p : {5, 7}) {
        auto F = FieldCtx::make(p, 1);
        for (int r = 0; r <= p - 1; ++r) {
            auto rows = classification_table(F, PiSpec::supersingular(r));
            REQUIRE(rows.size() == 1);
            CHECK(rows[0].tau == "self");
            CHECK(rows[0].d == 3);
        }
    }
}

TEST_CASE("principal series: self dimension 2 and the partner row") {
    auto F = FieldCtx::make(5, 1);
    auto rows = classification_table(F, PiSpec::principal(1, 2));
    REQUIRE(rows.size() == 2);
    const ClassRow* self = find_row(rows, "self");
    REQUIRE(self);
    CHECK(self->d == 2);
    const ClassRow* partner = find_row(rows, "pi(1,3,w^2)");
    REQUIRE(partner);
    CHECK(partner->d == 1);

    // the degenerate pair (p-2, +-1): self only, still dimension 2
    auto rows2 = classification_table(F, PiSpec::principal(3, 1));
    REQUIRE(rows2.size() == 1);
    CHECK(rows2[0].tau == "self");
    CHECK(rows2[0].d == 2);
}

TEST_CASE("partner involution mirrors the principal rows") {
    auto F = FieldCtx::make(5, 1);
    // pi(1,2) has partner pi(1,3,w^2); the partner of the partner is pi(1,2)
    auto rows = classification_table(F, PiSpec::principal(1, 3, SmoothChar{2, 1}));
    const ClassRow* mirrored = find_row(rows, "pi(1,2,1)");
    REQUIRE(mirrored);
    CHECK(mirrored->d == 1);
    const ClassRow* self = find_row(rows, "self");
    REQUIRE(self);
    CHECK(self->d == 2);
}

TEST_CASE("steinberg at p=7 and the p=3 replacement row") {
    auto F7 = FieldCtx::make(7, 1);
    auto rows7 = classification_table(F7, PiSpec::steinberg());
    REQUIRE(rows7.size() == 1);
    CHECK(rows7[0].tau == "1");
    CHECK(rows7[0].d == 2);

    auto F3 = FieldCtx::make(3, 1);
    auto rows3 = classification_table(F3, PiSpec::trivial());
    REQUIRE(rows3.size() == 2);
    const ClassRow* sp = find_row(rows3, "Sp");
    REQUIRE(sp);
    CHECK(sp->d == 1);
    const ClassRow* tw = find_row(rows3, "Sp*w");
    REQUIRE(tw);
    CHECK(tw->d == 1);
    CHECK(std::find(tw->flags.begin(), tw->flags.end(), "p3-special") != tw->flags.end());
}

TEST_CASE("no zero rows are emitted and excluded cases raise") {
    auto F = FieldCtx::make(5, 1);
    for (const auto& rows :
         {classification_table(F, PiSpec::trivial()), classification_table(F, PiSpec::steinberg()),
          classification_table(F, PiSpec::supersingular(2))})
        for (const auto& r : rows) CHECK(r.d > 0);

    auto F3 = FieldCtx::make(3, 1);
    CHECK_THROWS_AS(classification_table(F3, PiSpec::supersingular(1)), Error);
}
