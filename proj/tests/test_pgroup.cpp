#include "doctest.h"

#include <algorithm>

#include "modp/pgroup.hpp"

using namespace modp;
using namespace modp::pgroup;
using hecke::TorusCharacter;

namespace {

std::vector<TorusCharacter> swap_chars(std::vector<TorusCharacter> cs) {
    for (auto& c : cs) c = c.swap();
    std::sort(cs.begin(), cs.end());
    return cs;
}

} // namespace

TEST_CASE("group orders match the closed-form counts") {
    CHECK(group_build(3, 2, Selector::I1modZ1).elems.size() == 81);
    CHECK(group_build(5, 2, Selector::I1modZ1).elems.size() == 625);
    CHECK(group_build(3, 1, Selector::I1U).elems.size() == 3);
    CHECK(group_build(3, 2, Selector::I1P).elems.size() == 27);
    CHECK(group_build(3, 2, Selector::I1Ps).elems.size() == 9);
    CHECK(group_build(3, 2, Selector::I1Us).elems.size() == 3);
    CHECK(group_build(3, 3, Selector::I1modZ1).elems.size() == 2187);
    CHECK_THROWS_AS(group_build(2, 2, Selector::I1U), Error);
    CHECK_THROWS_AS(group_build(3, 4, Selector::I1U), Error);
    CHECK_THROWS_AS(group_build(13, 3, Selector::I1modZ1), Error); // 13^7 > 10^6
}

TEST_CASE("I1U at level 1 is cyclic of order p") {
    FinitePGroup G = group_build(3, 1, Selector::I1U);
    int x = G.gens[0];
    int y = x;
    int order = 1;
    while (y != G.identity()) {
        y = G.mult(y, x);
        ++order;
    }
    CHECK(order == 3);
}

TEST_CASE("hom dimensions at level 2") {
    CHECK(hom_fp(group_build(3, 2, Selector::I1modZ1)).dim == 2);
    CHECK(hom_fp(group_build(3, 2, Selector::I1P)).dim == 2);
    CHECK(hom_fp(group_build(3, 2, Selector::I1Ps)).dim == 2);
    CHECK(hom_fp(group_build(3, 1, Selector::I1U)).dim == 1);
    CHECK(hom_fp(group_build(3, 2, Selector::I1Us)).dim == 1);
    CHECK(hom_fp(group_build(5, 2, Selector::I1modZ1)).dim == 2);
    CHECK(hom_fp(group_build(5, 2, Selector::I1P)).dim == 2);
}

TEST_CASE("hom values really are homomorphisms") {
    for (auto sel : {Selector::I1modZ1, Selector::I1P, Selector::I1U}) {
        FinitePGroup G = group_build(3, 2, sel);
        HomFp H = hom_fp(G);
        for (const auto& phi : H.homs)
            for (size_t x = 0; x < G.elems.size(); x += 7)
                for (size_t y = 0; y < G.elems.size(); y += 5) {
                    int xy = G.mult(static_cast<int>(x), static_cast<int>(y));
                    CHECK((phi[x] + phi[y]) % 3 == phi[xy]);
                }
    }
}

TEST_CASE("brute-force homomorphism count equals p^dim on small groups") {
    for (auto sel : {Selector::I1modZ1, Selector::I1P, Selector::I1Ps, Selector::I1U}) {
        FinitePGroup G = group_build(3, 2, sel);
        if (G.elems.size() > 81) continue;
        HomFp H = hom_fp(G);
        long long expect = 1;
        for (int i = 0; i < H.dim; ++i) expect *= 3;
        CHECK(brute_hom_count(G) == expect);
    }
}

TEST_CASE("eigencharacter multisets per selector") {
    for (int p : {3, 5, 7}) {
        TorusCharacter alpha = hecke::alpha_char(p);
        TorusCharacter one(p - 1, 0, 0);
        auto expect = [&](std::vector<TorusCharacter> cs) {
            std::sort(cs.begin(), cs.end());
            return cs;
        };
        CHECK(eigenchars(group_build(p, 2, Selector::I1modZ1)) ==
              expect({alpha, alpha.inv()}));
        CHECK(eigenchars(group_build(p, 2, Selector::I1P)) == expect({alpha.inv(), one}));
        CHECK(eigenchars(group_build(p, 2, Selector::I1Ps)) == expect({alpha, one}));
        CHECK(eigenchars(group_build(p, 2, Selector::I1U)) == expect({alpha.inv()}));
        CHECK(eigenchars(group_build(p, 2, Selector::I1Us)) == expect({alpha}));
    }
    // level 1 degenerate case from the examples
    CHECK(eigenchars(group_build(5, 1, Selector::I1U)) ==
          std::vector<TorusCharacter>{hecke::alpha_char(5).inv()});
}

TEST_CASE("ext1_char reproduces the extension table for characters") {
    for (int p : {5, 7}) {
        FinitePGroup G = group_build(p, 2, Selector::I1modZ1);
        TorusCharacter alpha = hecke::alpha_char(p);
        for (int m = 0; m < p - 1; ++m) {
            TorusCharacter chi(p - 1, m, 2 - m);
            CHECK(ext1_char(chi * alpha, chi, G) == 1);
            CHECK(ext1_char(chi * alpha.inv(), chi, G) == 1);
            CHECK(ext1_char(chi, chi, G) == 0);
            CHECK(ext1_char(chi * alpha.pow(2), chi, G) == 0);
        }
    }
    // p = 3 doubling: alpha = alpha^-1
    FinitePGroup G3 = group_build(3, 2, Selector::I1modZ1);
    TorusCharacter chi(2, 1, 0);
    TorusCharacter alpha3 = hecke::alpha_char(3);
    CHECK(ext1_char(chi * alpha3, chi, G3) == 2);
    CHECK(ext1_char(chi, chi, G3) == 0);
}

TEST_CASE("level stability at p=3: hom dims agree between levels 2 and 3") {
    for (auto sel : {Selector::I1modZ1, Selector::I1P, Selector::I1Ps, Selector::I1U,
                     Selector::I1Us}) {
        int d2 = hom_fp(group_build(3, 2, sel)).dim;
        int d3 = hom_fp(group_build(3, 3, sel)).dim;
        CHECK(d2 == d3);
    }
}

TEST_CASE("conjugation by Pi swaps the parabolic selectors") {
    for (int p : {3, 5}) {
        auto up = eigenchars(group_build(p, 2, Selector::I1P));
        auto down = eigenchars(group_build(p, 2, Selector::I1Ps));
        CHECK(down == swap_chars(up));
        auto u = eigenchars(group_build(p, 2, Selector::I1U));
        auto us = eigenchars(group_build(p, 2, Selector::I1Us));
        CHECK(us == swap_chars(u));
    }
}

TEST_CASE("eigenchar multiset is level stable at p=3") {
    for (auto sel : {Selector::I1modZ1, Selector::I1P, Selector::I1U}) {
        auto e2 = eigenchars(group_build(3, 2, sel));
        auto e3 = eigenchars(group_build(3, 3, sel));
        CHECK(e2 == e3);
    }
}
