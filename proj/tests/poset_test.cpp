#include <doctest.h>

#include "residua/poset.hpp"
#include "residua/properties.hpp"

#include "oracle.hpp"
#include "util.hpp"

using namespace residua;

TEST_CASE("element set basics") {
    ElementSet s = ElementSet::of({1, 3, 5});
    CHECK(s.count() == 3);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(2));
    CHECK(s.lowest() == 1);
    CHECK((s & ElementSet::of({3})) == ElementSet::single(3));
    CHECK((s | ElementSet::of({0})) == ElementSet::of({0, 1, 3, 5}));
    CHECK((s - ElementSet::of({1})) == ElementSet::of({3, 5}));
    CHECK(ElementSet::of({1}).subset_of(s));
    CHECK(ElementSet().empty());
    CHECK(ElementSet::full(6).count() == 6);

    std::vector<int> seen;
    for (int i : s) seen.push_back(i);
    CHECK(seen == std::vector<int>{1, 3, 5});
}

TEST_CASE("from_covers: singleton poset") {
    Poset p = Poset::from_covers({"x"}, {});
    CHECK(p.size() == 1);
    REQUIRE(p.least());
    REQUIRE(p.greatest());
    CHECK(*p.least() == 0);
    CHECK(*p.greatest() == 0);
}

TEST_CASE("from_covers: fig6 closure, bounds, covers round-trip") {
    auto m = testutil::fixture_model("fig6");
    const Poset& p = m.poset;
    CHECK(p.size() == 6);
    CHECK(p.leq(p.index_of("a"), p.index_of("c")));
    CHECK(p.leq(p.index_of("a"), p.index_of("d")));
    CHECK(p.leq(p.index_of("b"), p.index_of("c")));
    CHECK(p.leq(p.index_of("b"), p.index_of("d")));
    CHECK_FALSE(p.leq(p.index_of("c"), p.index_of("d")));
    REQUIRE(p.bounded());
    CHECK(p.name_of(*p.least()) == "0");
    CHECK(p.name_of(*p.greatest()) == "1");

    auto covers = p.covers();
    CHECK(covers.size() == 8);
    const FixtureEntry* f = find_fixture("fig6");
    for (const auto& [lo, hi] : f->document.covers) {
        bool present = false;
        for (auto [i, j] : covers)
            if (p.name_of(i) == lo && p.name_of(j) == hi) present = true;
        CHECK(present);
    }
}

TEST_CASE("from_covers: construction errors") {
    try {
        Poset::from_covers({"x", "y"}, {{"x", "y"}, {"y", "x"}});
        FAIL("cycle not detected");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::cycle_detected);
    }
    try {
        Poset::from_covers({"x", "x"}, {});
        FAIL("duplicate not detected");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::duplicate_label);
    }
    try {
        Poset::from_covers({"x"}, {{"x", "z"}});
        FAIL("unknown label not detected");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unknown_label);
    }

    try {
        Poset::from_covers({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"z", "x"}});
        FAIL("cycle not detected");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::cycle_detected);
    }
}

TEST_CASE("cones on fig3 and fig6 match the worked examples") {
    auto fig3 = testutil::fixture_model("fig3");
    const Poset& p3 = fig3.poset;

    // L(U(a,f),e) collapses to L(e)
    ElementSet uaf = p3.upper_cone(testutil::labels(p3, {"a", "f"}));
    CHECK(uaf == ElementSet::single(p3.index_of("1")));
    ElementSet left = p3.lower_cone(uaf | ElementSet::single(p3.index_of("e")));
    CHECK(left == p3.down_set(p3.index_of("e")));

    auto fig6 = testutil::fixture_model("fig6");
    const Poset& p6 = fig6.poset;
    CHECK(p6.lower_cone(testutil::labels(p6, {"c", "d"})) == testutil::labels(p6, {"0", "a", "b"}));

    // least element: L({0}) = {0}
    CHECK(p6.lower_cone(ElementSet::single(p6.index_of("0"))) ==
          ElementSet::single(p6.index_of("0")));

    // empty set: both cones are the whole carrier
    CHECK(p6.lower_cone(ElementSet()) == p6.carrier());
    CHECK(p6.upper_cone(ElementSet()) == p6.carrier());
}

TEST_CASE("extremal elements") {
    auto fig6 = testutil::fixture_model("fig6");
    const Poset& p6 = fig6.poset;
    CHECK(p6.maximal(p6.lower_cone(testutil::labels(p6, {"c", "d"}))) ==
          testutil::labels(p6, {"a", "b"}));
    CHECK(p6.maximal(p6.carrier()) == ElementSet::single(*p6.greatest()));
    CHECK(p6.maximal(ElementSet()).empty());
    CHECK(p6.minimal(ElementSet()).empty());

    // Min U(L(d',a),d) on fig1, cross-checked against the brute-force model
    auto fig1 = testutil::fixture_model("fig1");
    const Poset& p1 = fig1.poset;
    ElementSet lda = p1.lower_cone(testutil::labels(p1, {"d'", "a"}));
    ElementSet arg = lda | ElementSet::single(p1.index_of("d"));
    ElementSet got = p1.minimal(p1.upper_cone(arg));

    oracle::NaivePoset np = oracle::mirror(p1);
    std::set<int> expected = np.minimal(np.upper_cone(oracle::to_set(arg)));
    CHECK(oracle::to_set(got) == expected);
    CHECK(got == testutil::labels(p1, {"b'", "c'"}));
}

TEST_CASE("set_leq") {
    auto fig6 = testutil::fixture_model("fig6");
    const Poset& p = fig6.poset;
    CHECK(p.set_leq(testutil::labels(p, {"a", "b"}), testutil::labels(p, {"c", "d"})));
    CHECK_FALSE(p.set_leq(testutil::labels(p, {"c"}), testutil::labels(p, {"d"})));
    CHECK(p.set_leq(ElementSet(), p.carrier()));
    CHECK(p.set_leq(p.carrier(), ElementSet()));
}

TEST_CASE("cone operators agree with the brute-force model on every subset") {
    for (const char* id : {"fig5", "fig6"}) {
        auto m = testutil::fixture_model(id);
        const Poset& p = m.poset;
        oracle::NaivePoset np = oracle::mirror(p);
        const std::uint64_t limit = std::uint64_t{1} << p.size();
        for (std::uint64_t bits = 0; bits < limit; ++bits) {
            ElementSet a(bits);
            std::set<int> sa = oracle::to_set(a);
            CHECK(oracle::to_set(p.lower_cone(a)) == np.lower_cone(sa));
            CHECK(oracle::to_set(p.upper_cone(a)) == np.upper_cone(sa));
            CHECK(oracle::to_set(p.maximal(a)) == np.maximal(sa));
            CHECK(oracle::to_set(p.minimal(a)) == np.minimal(sa));
        }
    }
}

TEST_CASE("galois connection and inclusion laws hold on the fixtures") {
    for (const auto& f : fixtures()) {
        Poset p = f.document.build_poset();
        PropertyReport laws = cone_law_suite(p);
        INFO(f.id);
        CHECK(laws.all_pass());
    }
}

TEST_CASE("bounded posets have non-empty cones and extremal sets") {
    auto m = testutil::fixture_model("fig4");
    const Poset& p = m.poset;
    const std::uint64_t limit = std::uint64_t{1} << p.size();
    for (std::uint64_t bits = 0; bits < limit; bits += 97) {  // stride keeps this quick
        ElementSet a(bits);
        CHECK_FALSE(p.lower_cone(a).empty());
        CHECK_FALSE(p.upper_cone(a).empty());
        CHECK_FALSE(p.maximal(p.lower_cone(a)).empty());
        CHECK_FALSE(p.minimal(p.upper_cone(a)).empty());
    }
}

TEST_CASE("set order against extremal sets characterizes cone inclusion") {
    auto m = testutil::fixture_model("fig6");
    const Poset& p = m.poset;
    const std::uint64_t limit = std::uint64_t{1} << p.size();
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        ElementSet a(bits);
        for (int c = 0; c < p.size(); ++c) {
            bool via_max = p.set_leq(p.maximal(a), ElementSet::single(c));
            bool via_cone = a.subset_of(p.down_set(c));
            CHECK(via_max == via_cone);
            bool via_min = p.set_leq(ElementSet::single(c), p.minimal(a));
            bool via_upper = a.subset_of(p.up_set(c));
            CHECK(via_min == via_upper);
        }
    }
}

TEST_CASE("is_lattice") {
    CHECK(is_lattice(testutil::fixture_model("fig5").poset));
    CHECK_FALSE(is_lattice(testutil::fixture_model("fig6").poset));
    CHECK_FALSE(is_lattice(testutil::fixture_model("fig3").poset));
}
