#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "residua/residuation.hpp"

namespace residua {

constexpr int max_enumeration_size = 7;

/// Row-major encoding of the order relation, most significant bit first, so
/// that numeric comparison of encodings is lexicographic comparison of the
/// relation matrix.
inline std::uint64_t relation_encoding(const Poset& p) {
    const int n = p.size();
    std::uint64_t enc = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.leq(i, j)) enc |= std::uint64_t{1} << (n * n - 1 - (i * n + j));
    return enc;
}

/// Minimal relation matrix over all vertex permutations.
inline std::uint64_t canonical_encoding(const Poset& p) {
    const int n = p.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t enc = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (p.leq(perm[i], perm[j])) enc |= std::uint64_t{1} << (n * n - 1 - (i * n + j));
        best = std::min(best, enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace detail {

struct PosetEnumerator {
    int n;
    bool up_to_iso;
    const std::function<void(const Poset&)>& visit;
    std::vector<std::pair<int, int>> pairs;   // (i, j), i < j, lexicographic
    std::vector<ElementSet> up, down;
    std::vector<bool> incomparable;           // chosen-incomparable, by pair index
    std::vector<std::pair<int, int>> trail;   // forced edges, for undo
    std::vector<std::vector<int>> perms;

    PosetEnumerator(int n_, bool iso, const std::function<void(const Poset&)>& v)
        : n(n_), up_to_iso(iso), visit(v) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        up.assign(n, ElementSet());
        down.assign(n, ElementSet());
        for (int i = 0; i < n; ++i) {
            up[i].insert(i);
            down[i].insert(i);
        }
        incomparable.assign(pairs.size(), false);
        if (up_to_iso) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            do perms.push_back(perm); while (std::next_permutation(perm.begin(), perm.end()));
        }
    }

    int pair_index(int a, int b) const {
        if (a > b) std::swap(a, b);
        // pairs are lexicographic, so the index is a closed form
        return a * n - a * (a + 1) / 2 + (b - a - 1);
    }

    bool decided(int t) const {
        auto [i, j] = pairs[t];
        return incomparable[t] || up[i].contains(j) || up[j].contains(i);
    }

    /// Adds a < b and its closure consequences; returns false on conflict,
    /// leaving partial additions in the trail for the caller to undo.
    bool add_edge(int a, int b) {
        for (int x : down[a])
            for (int y : up[b]) {
                if (x == y) return false;                       // antisymmetry
                if (up[x].contains(y)) continue;
                if (up[y].contains(x)) return false;
                if (incomparable[pair_index(x, y)]) return false;
                up[x].insert(y);
                down[y].insert(x);
                trail.emplace_back(x, y);
            }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            auto [x, y] = trail.back();
            trail.pop_back();
            up[x].erase(y);
            down[y].erase(x);
        }
    }

    void emit() {
        if (up_to_iso && !is_canonical()) return;
        std::vector<std::string> names(n);
        for (int i = 0; i < n; ++i) names[i] = "e" + std::to_string(i);
        visit(Poset::from_relation(std::move(names), up));
    }

    bool is_canonical() const {
        std::uint64_t self = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (up[i].contains(j)) self |= std::uint64_t{1} << (n * n - 1 - (i * n + j));
        for (const auto& perm : perms) {
            std::uint64_t enc = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (up[perm[i]].contains(perm[j]))
                        enc |= std::uint64_t{1} << (n * n - 1 - (i * n + j));
            if (enc < self) return false;   // a strictly smaller relabelling exists
        }
        return true;
    }

    void run(std::size_t t) {
        if (t == pairs.size()) {
            emit();
            return;
        }
        if (decided(t)) {
            run(t + 1);
            return;
        }
        auto [i, j] = pairs[t];

        incomparable[t] = true;
        run(t + 1);
        incomparable[t] = false;

        std::size_t mark = trail.size();
        if (add_edge(i, j)) run(t + 1);
        undo_to(mark);

        mark = trail.size();
        if (add_edge(j, i)) run(t + 1);
        undo_to(mark);
    }
};

} // namespace detail

/// Streams every partial order on n labelled points in a fixed order; with
/// up_to_iso, exactly one representative per isomorphism class (the one
/// whose relation matrix is canonical).
inline void enumerate_posets(int n, bool up_to_iso, const std::function<void(const Poset&)>& visit) {
    if (n < 1 || n > max_enumeration_size)
        throw Error(Errc::size_bound_exceeded,
                    "poset enumeration is bounded to 1..=" + std::to_string(max_enumeration_size));
    detail::PosetEnumerator e(n, up_to_iso, visit);
    e.run(0);
}

inline std::vector<Poset> all_posets(int n, bool up_to_iso) {
    std::vector<Poset> out;
    enumerate_posets(n, up_to_iso, [&](const Poset& p) { out.push_back(p); });
    return out;
}

enum class UnaryConstraint { None, Involution, ZeroOneSwap };

/// Streams total maps on the carrier under the constraint, in odometer
/// order of the image vector.
inline void enumerate_unary_ops(const Poset& p, UnaryConstraint c,
                                const std::function<void(const UnaryOp&)>& visit) {
    const int n = p.size();
    UnaryOp u;
    u.image.assign(n, 0);
    std::vector<int> free_slots;
    if (c == UnaryConstraint::ZeroOneSwap) {
        if (!p.bounded())
            throw Error(Errc::not_bounded, "a 0/1-swapping map needs least and greatest elements");
        u.image[*p.least()] = *p.greatest();
        u.image[*p.greatest()] = *p.least();
        for (int i = 0; i < n; ++i)
            if (i != *p.least() && i != *p.greatest()) free_slots.push_back(i);
    } else {
        for (int i = 0; i < n; ++i) free_slots.push_back(i);
    }

    auto ok = [&] {
        if (c != UnaryConstraint::Involution) return true;
        for (int x = 0; x < n; ++x)
            if (u.image[u.image[x]] != x) return false;
        return true;
    };

    while (true) {
        if (ok()) visit(u);
        int k = static_cast<int>(free_slots.size()) - 1;
        while (k >= 0 && u.image[free_slots[k]] == n - 1) u.image[free_slots[k--]] = 0;
        if (k < 0) break;
        ++u.image[free_slots[k]];
    }
}

enum class PremiseKind { Th1, Th3, Boolean, Rp };

inline const char* premise_name(PremiseKind k) {
    switch (k) {
        case PremiseKind::Th1:     return "th1";
        case PremiseKind::Th3:     return "th3";
        case PremiseKind::Boolean: return "boolean";
        case PremiseKind::Rp:      return "rp";
    }
    return "?";
}

inline std::optional<PremiseKind> premise_from_name(std::string_view s) {
    if (s == "th1") return PremiseKind::Th1;
    if (s == "th3") return PremiseKind::Th3;
    if (s == "boolean") return PremiseKind::Boolean;
    if (s == "rp") return PremiseKind::Rp;
    return std::nullopt;
}

struct SweepFailure {
    Poset poset;
    std::optional<UnaryOp> op;
    std::string description;
};

/// Outcome of sweeping a premise bundle over all small models.  For models
/// that pass the premises, any adjointness or identity-suite entry here is
/// either an artifact bug or a genuine refutation; there should be none.
struct SweepReport {
    long posets_seen = 0;
    long models_examined = 0;
    long models_passing_premises = 0;
    std::vector<SweepFailure> adjointness_failures;
    std::vector<SweepFailure> identity_failures;
    std::string runtime_note;

    static constexpr std::size_t max_stored_failures = 100;

    bool clean() const { return adjointness_failures.empty() && identity_failures.empty(); }
};

/// Enumerates all posets of size 1..=n_max (all 0/1-swapping unary maps for
/// the unary premise bundles), filters by the bundle, builds the matching
/// tables and verifies adjointness plus the identity suite.
inline SweepReport sweep(PremiseKind kind, int n_max, bool up_to_iso = true) {
    if (n_max < 1 || n_max > max_enumeration_size)
        throw Error(Errc::size_bound_exceeded,
                    "sweep size is bounded to 1..=" + std::to_string(max_enumeration_size));
    const auto started = std::chrono::steady_clock::now();
    SweepReport rep;

    Variant variant = Variant::Rp;
    switch (kind) {
        case PremiseKind::Th1:     variant = Variant::Th1; break;
        case PremiseKind::Th3:     variant = Variant::Piecewise; break;
        case PremiseKind::Boolean: variant = Variant::Boolean; break;
        case PremiseKind::Rp:      variant = Variant::Rp; break;
    }

    auto record = [&](std::vector<SweepFailure>& into, const Poset& p, const UnaryOp* u,
                      std::string what) {
        if (into.size() < SweepReport::max_stored_failures)
            into.push_back({p, u ? std::optional<UnaryOp>(*u) : std::nullopt, std::move(what)});
    };

    auto verify_model = [&](const Poset& p, const UnaryOp* u) {
        ++rep.models_passing_premises;
        auto [t_odot, t_arrow] = build_tables(p, u, variant, /*enforce_premises=*/false);
        AdjointnessVerdict adj = verify_left_adjointness(p, t_odot, t_arrow);
        if (!adj.holds) {
            const auto& cx = *adj.counterexample;
            record(rep.adjointness_failures, p, u,
                   "adjointness fails at (" + p.name_of(cx.a) + "," + p.name_of(cx.b) + "," +
                       p.name_of(cx.c) + ")");
        }
        PropertyReport suite = verify_identity_suite(p, u, variant, t_odot, t_arrow);
        if (!suite.all_pass())
            for (const auto& [k, v] : suite.entries())
                if (!v.pass) record(rep.identity_failures, p, u, "identity " + k + " fails");
    };

    for (int n = 1; n <= n_max; ++n) {
        enumerate_posets(n, up_to_iso, [&](const Poset& p) {
            ++rep.posets_seen;
            if (kind == PremiseKind::Rp) {
                ++rep.models_examined;
                if (is_relatively_pseudocomplemented(p).all_pass()) verify_model(p, nullptr);
                return;
            }
            if (!p.bounded()) return;
            enumerate_unary_ops(p, UnaryConstraint::ZeroOneSwap, [&](const UnaryOp& u) {
                ++rep.models_examined;
                bool pass = false;
                switch (kind) {
                    case PremiseKind::Th1:     pass = th1_premises(p, u).all_pass(); break;
                    case PremiseKind::Th3:     pass = th3_premises(p, u).all_pass(); break;
                    case PremiseKind::Boolean: pass = is_boolean(p, u).passed("boolean"); break;
                    case PremiseKind::Rp:      break;
                }
                if (pass) verify_model(p, &u);
            });
        });
    }

    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    rep.runtime_note = "n<=" + std::to_string(n_max) + (up_to_iso ? " up-to-iso" : " labelled") + ", " +
                       std::to_string(rep.posets_seen) + " posets, " +
                       std::to_string(rep.models_examined) + " models, " +
                       std::to_string(elapsed.count()) + " ms";
    return rep;
}

} // namespace residua
