#include <doctest.h>

#include <set>
#include <string>

#include "residua/fixtures.hpp"

#include "util.hpp"

using namespace residua;

TEST_CASE("the corpus builds and has the documented shapes") {
    REQUIRE(fixtures().size() == 6);
    std::map<std::string, int> sizes = {{"fig1", 12}, {"fig2", 14}, {"fig3", 14},
                                        {"fig4", 14}, {"fig5", 7},  {"fig6", 6}};
    for (const auto& f : fixtures()) {
        Poset p = f.document.build_poset();
        CHECK(p.size() == sizes.at(f.id));
        CHECK(p.bounded());
        if (f.golden_odot) {
            SetValuedTable g = parse_golden_table(p, OpKind::odot, f.golden_odot);
            CHECK(g.n == p.size());
        }
        if (f.golden_arrow) {
            SetValuedTable g = parse_golden_table(p, OpKind::arrow, f.golden_arrow);
            CHECK(g.n == p.size());
        }
    }
    CHECK(find_fixture("fig2")->golden_odot == nullptr);
    CHECK(find_fixture("nope") == nullptr);
}

TEST_CASE("expected property verdicts hold on every fixture") {
    for (const auto& f : fixtures()) {
        Poset p = f.document.build_poset();
        auto u = f.document.build_unary(p);
        for (const auto& [key, want] : f.expected_verdicts) {
            INFO(f.id << " " << key);
            CHECK(evaluate_named_check(p, u ? &*u : nullptr, key) == want);
        }
    }
}

TEST_CASE("built tables reproduce the reference tables except the documented cells") {
    for (const auto& f : fixtures()) {
        if (!f.golden_odot) continue;
        Poset p = f.document.build_poset();
        auto u = f.document.build_unary(p);
        auto [t_odot, t_arrow] = build_tables(p, u ? &*u : nullptr, f.variant);
        SetValuedTable want_odot = parse_golden_table(p, OpKind::odot, f.golden_odot);
        SetValuedTable want_arrow = parse_golden_table(p, OpKind::arrow, f.golden_arrow);

        INFO(f.id);
        if (f.id != "fig4") CHECK(t_odot.cells == want_odot.cells);
        if (f.id != "fig3") CHECK(t_arrow.cells == want_arrow.cells);

        if (f.id == "fig4") {
            // The fig4 odot reference deviates from the piecewise rule at
            // exactly these 13 cells: the zero branch applies (x <= y') but
            // the reference keeps the unguarded value.
            const std::set<std::pair<std::string, std::string>> known = {
                {"a", "e'"}, {"a", "a'"}, {"b", "e'"}, {"b", "b'"}, {"c", "e"},
                {"c", "c'"}, {"d", "d'"}, {"e", "e'"}, {"e'", "e"}, {"d'", "d"},
                {"c'", "c"}, {"b'", "b"}, {"a'", "a"}};
            std::set<std::pair<std::string, std::string>> mismatched;
            for (int x = 0; x < p.size(); ++x)
                for (int y = 0; y < p.size(); ++y)
                    if (t_odot.at(x, y) != want_odot.at(x, y)) {
                        mismatched.insert({p.name_of(x), p.name_of(y)});
                        CHECK(p.leq(x, (*u)(y)));
                        CHECK(t_odot.at(x, y) == ElementSet::single(*p.least()));
                        ElementSet unguarded = p.maximal(p.lower_cone(
                            p.upper_cone(ElementSet::of({x, (*u)(y)})) | ElementSet::single(y)));
                        CHECK(want_odot.at(x, y) == unguarded);
                    }
            CHECK(mismatched == known);
        }

        if (f.id == "fig3") {
            // The fig3 arrow reference deviates from Min U(L(x,y),x') on the
            // rows of the two isolated elements f and f' across the ten
            // middle columns: it prints {y'} where the formula gives {x'}.
            // The printed cells even break adjointness, e.g. at (b,f,a):
            // b (.) f = {f} is not below a, yet b <= a' = printed f -> a.
            int mismatched = 0;
            for (int x = 0; x < p.size(); ++x)
                for (int y = 0; y < p.size(); ++y)
                    if (t_arrow.at(x, y) != want_arrow.at(x, y)) {
                        ++mismatched;
                        CHECK((p.name_of(x) == "f" || p.name_of(x) == "f'"));
                        CHECK(t_arrow.at(x, y) == ElementSet::single((*u)(x)));
                        CHECK(want_arrow.at(x, y) == ElementSet::single((*u)(y)));
                    }
            CHECK(mismatched == 20);
        }
    }
}

TEST_CASE("reference rows and columns follow declaration order") {
    // last row and column of each reference table are the identity rows for
    // (.) against 1, and -> from 1, pinned by the unit laws
    for (const auto& f : fixtures()) {
        if (!f.golden_odot) continue;
        Poset p = f.document.build_poset();
        SetValuedTable g = parse_golden_table(p, OpKind::odot, f.golden_odot);
        int one = *p.greatest();
        for (int x = 0; x < p.size(); ++x) {
            CHECK(g.at(x, one) == ElementSet::single(x));
            CHECK(g.at(one, x) == ElementSet::single(x));
        }
    }
}

TEST_CASE("corrupting any reference cell is detected against the rebuilt tables") {
    const FixtureEntry* f = find_fixture("fig6");
    Poset p = f->document.build_poset();
    auto [t_odot, t_arrow] = build_tables(p, nullptr, f->variant);
    SetValuedTable golden = parse_golden_table(p, OpKind::odot, f->golden_odot);
    REQUIRE(golden.cells == t_odot.cells);
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            SetValuedTable mutated = golden;
            ElementSet flip = ElementSet::single(*p.greatest());
            if (mutated.at(x, y) == flip) flip = ElementSet::single(*p.least());
            mutated.at(x, y) = flip;
            CHECK(mutated.cells != t_odot.cells);
        }
}
