#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "residua/enumerate.hpp"
#include "residua/fixtures.hpp"

#include "util.hpp"

using namespace residua;

namespace {

// Independent oracle: all reflexive 3x3 relations by brute force over the
// six off-diagonal bits, keeping those that are antisymmetric + transitive.
std::vector<std::array<std::array<bool, 3>, 3>> brute_force_posets3() {
    std::vector<std::array<std::array<bool, 3>, 3>> out;
    const std::pair<int, int> slots[6] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
    for (int bits = 0; bits < 64; ++bits) {
        std::array<std::array<bool, 3>, 3> m{};
        for (int i = 0; i < 3; ++i) m[i][i] = true;
        for (int s = 0; s < 6; ++s)
            if (bits >> s & 1) m[slots[s].first][slots[s].second] = true;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
            for (int j = 0; j < 3 && ok; ++j) {
                if (i != j && m[i][j] && m[j][i]) ok = false;
                for (int k = 0; k < 3 && ok; ++k)
                    if (m[i][j] && m[j][k] && !m[i][k]) ok = false;
            }
        if (ok) out.push_back(m);
    }
    return out;
}

std::uint64_t encode3(const std::array<std::array<bool, 3>, 3>& m, const int perm[3]) {
    std::uint64_t enc = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (m[perm[i]][perm[j]]) enc |= std::uint64_t{1} << (8 - (i * 3 + j));
    return enc;
}

} // namespace

TEST_CASE("poset counts match the known values") {
    CHECK(all_posets(1, true).size() == 1);
    CHECK(all_posets(2, true).size() == 2);   // chain and antichain
    CHECK(all_posets(3, true).size() == 5);
    CHECK(all_posets(4, true).size() == 16);
    CHECK(all_posets(5, true).size() == 63);

    CHECK(all_posets(2, false).size() == 3);
    CHECK(all_posets(3, false).size() == 19);
    CHECK(all_posets(4, false).size() == 219);
    CHECK(all_posets(5, false).size() == 4231);
}

TEST_CASE("labelled enumeration at n=3 agrees with the brute-force oracle") {
    auto oracle_matrices = brute_force_posets3();
    CHECK(oracle_matrices.size() == 19);

    std::set<std::uint64_t> oracle_encodings, oracle_canonical;
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    const int id[3] = {0, 1, 2};
    for (const auto& m : oracle_matrices) {
        oracle_encodings.insert(encode3(m, id));
        std::uint64_t best = ~std::uint64_t{0};
        for (const auto& perm : perms) best = std::min(best, encode3(m, perm));
        oracle_canonical.insert(best);
    }
    CHECK(oracle_canonical.size() == 5);

    std::set<std::uint64_t> got;
    for (const Poset& p : all_posets(3, false)) got.insert(relation_encoding(p));
    CHECK(got == oracle_encodings);

    std::set<std::uint64_t> got_canonical;
    for (const Poset& p : all_posets(3, true)) got_canonical.insert(relation_encoding(p));
    CHECK(got_canonical == oracle_canonical);
}

TEST_CASE("canonicalization is idempotent and constant on orbits") {
    for (const Poset& p : all_posets(4, true))
        CHECK(canonical_encoding(p) == relation_encoding(p));

    std::map<std::uint64_t, int> orbit_sizes;
    for (const Poset& p : all_posets(4, false)) ++orbit_sizes[canonical_encoding(p)];
    CHECK(orbit_sizes.size() == 16);
    long total = 0;
    for (auto& [_, k] : orbit_sizes) total += k;
    CHECK(total == 219);
}

TEST_CASE("labelled count equals the automorphism-weighted class count at n=3") {
    long weighted = 0;
    for (const Poset& p : all_posets(3, true)) {
        int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        int autos = 0;
        for (auto& perm : perms) {
            bool fixes = true;
            for (int i = 0; i < 3 && fixes; ++i)
                for (int j = 0; j < 3 && fixes; ++j)
                    if (p.leq(i, j) != p.leq(perm[i], perm[j])) fixes = false;
            if (fixes) ++autos;
        }
        weighted += 6 / autos;
    }
    CHECK(weighted == 19);
}

TEST_CASE("enumeration size bounds") {
    CHECK_THROWS_AS(all_posets(0, false), Error);
    CHECK_THROWS_AS(all_posets(8, false), Error);
    CHECK_THROWS_AS(sweep(PremiseKind::Th1, 8), Error);
}

TEST_CASE("unary map enumeration") {
    Poset two = Poset::from_covers({"0", "1"}, {{"0", "1"}});

    int none = 0;
    enumerate_unary_ops(two, UnaryConstraint::None, [&](const UnaryOp&) { ++none; });
    CHECK(none == 4);

    std::vector<UnaryOp> swaps;
    enumerate_unary_ops(two, UnaryConstraint::ZeroOneSwap,
                        [&](const UnaryOp& u) { swaps.push_back(u); });
    REQUIRE(swaps.size() == 1);
    CHECK(swaps[0].image == std::vector<int>{1, 0});

    int involutions = 0;
    Poset three = Poset::from_covers({"x", "y", "z"}, {});
    enumerate_unary_ops(three, UnaryConstraint::Involution, [&](const UnaryOp&) { ++involutions; });
    CHECK(involutions == 4);  // identity plus the three transpositions

    Poset antichain = Poset::from_covers({"x", "y"}, {});
    CHECK_THROWS_AS(
        enumerate_unary_ops(antichain, UnaryConstraint::ZeroOneSwap, [](const UnaryOp&) {}), Error);
}

TEST_CASE("fig5's published unary table is among the 0/1-swapping maps") {
    auto m = testutil::fixture_model("fig5");
    bool found = false;
    enumerate_unary_ops(m.poset, UnaryConstraint::ZeroOneSwap, [&](const UnaryOp& u) {
        if (u == *m.unary) found = true;
    });
    CHECK(found);
}

TEST_CASE("sweep th1 at n=2 finds the two-element Boolean algebra and no failures") {
    SweepReport rep = sweep(PremiseKind::Th1, 2);
    CHECK(rep.posets_seen == 3);  // sizes 1 and 2, up to iso
    CHECK(rep.models_examined >= 2);
    CHECK(rep.models_passing_premises >= 1);
    CHECK(rep.clean());
}

TEST_CASE("small sweeps are clean for every premise bundle") {
    CHECK(sweep(PremiseKind::Th1, 4).clean());
    CHECK(sweep(PremiseKind::Th3, 4).clean());
    CHECK(sweep(PremiseKind::Boolean, 4).clean());
    CHECK(sweep(PremiseKind::Rp, 5).clean());
}

TEST_CASE("extended sweeps at n=6 stay clean") {
    CHECK(sweep(PremiseKind::Th1, 6).clean());
    CHECK(sweep(PremiseKind::Th3, 6).clean());
    CHECK(sweep(PremiseKind::Rp, 6).clean());
}

TEST_CASE("cone laws hold on every poset up to size 5") {
    for (int n = 1; n <= 5; ++n)
        enumerate_posets(n, true, [&](const Poset& p) {
            CHECK(cone_law_suite(p).all_pass());
        });
}

TEST_CASE("sweep statistics are deterministic") {
    SweepReport a = sweep(PremiseKind::Rp, 4);
    SweepReport b = sweep(PremiseKind::Rp, 4);
    CHECK(a.posets_seen == b.posets_seen);
    CHECK(a.models_examined == b.models_examined);
    CHECK(a.models_passing_premises == b.models_passing_premises);
    CHECK(a.posets_seen == 1 + 2 + 5 + 16);
}
