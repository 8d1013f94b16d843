#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "residua/error.hpp"

namespace residua {

/// Subset of a poset carrier, one bit per element index.
///
/// The carrier capacity is fixed at 64 so a subset is a single machine word
/// and all cone arithmetic reduces to word operations.
class ElementSet {
public:
    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr ElementSet single(int i) { return ElementSet(std::uint64_t{1} << i); }

    static constexpr ElementSet of(std::initializer_list<int> xs) {
        ElementSet s;
        for (int x : xs) s.insert(x);
        return s;
    }

    /// Full carrier {0, ..., n-1}.
    static constexpr ElementSet full(int n) {
        return n >= 64 ? ElementSet(~std::uint64_t{0})
                       : ElementSet((std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
    constexpr ElementSet& insert(int i) { bits_ |= std::uint64_t{1} << i; return *this; }
    constexpr ElementSet& erase(int i) { bits_ &= ~(std::uint64_t{1} << i); return *this; }

    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool is_singleton() const { return count() == 1; }

    /// Smallest member index; -1 on the empty set.
    constexpr int lowest() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr std::uint64_t bits() const { return bits_; }

    friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
    friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
    friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(ElementSet a, ElementSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(ElementSet a, ElementSet b) { return a.bits_ != b.bits_; }

    /// Ascending iteration over member indices.
    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
    private:
        std::uint64_t rest_;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

/// A finite poset: labelled carrier plus a reflexive, antisymmetric,
/// transitive relation kept as per-element up/down cone masks.
///
/// Values are immutable after construction; every operation is a pure
/// function of its inputs, so a Poset may be shared freely across threads.
class Poset {
public:
    static constexpr int max_elements = 64;

    /// Builds the poset whose order is the reflexive-transitive closure of a
    /// cover relation given by label pairs (lower, upper).  Construction
    /// fails if the closure is not an order; nothing is repaired silently.
    static Poset from_covers(std::vector<std::string> names,
                             const std::vector<std::pair<std::string, std::string>>& covers) {
        Poset p(std::move(names));
        for (const auto& [lo, hi] : covers) {
            int i = p.index_of(lo);
            int j = p.index_of(hi);
            p.up_[i].insert(j);
        }
        p.close_and_validate();
        return p;
    }

    /// Builds a poset from an explicit relation, `up[i]` = {j : i <= j}.
    /// The relation must already be reflexive, antisymmetric and transitive.
    static Poset from_relation(std::vector<std::string> names, std::vector<ElementSet> up) {
        Poset p(std::move(names));
        if (up.size() != static_cast<std::size_t>(p.n_))
            throw Error(Errc::bad_relation, "relation size does not match carrier");
        p.up_ = std::move(up);
        for (int i = 0; i < p.n_; ++i) {
            if (!p.up_[i].contains(i))
                throw Error(Errc::bad_relation, "relation is not reflexive at " + p.names_[i]);
            if (!p.up_[i].subset_of(ElementSet::full(p.n_)))
                throw Error(Errc::bad_relation, "relation leaves the carrier");
            for (int j : p.up_[i])
                if (!p.up_[j].subset_of(p.up_[i]))
                    throw Error(Errc::bad_relation,
                                "relation is not transitive at (" + p.names_[i] + "," + p.names_[j] + ")");
        }
        p.finish();
        return p;
    }

    int size() const { return n_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name_of(int i) const { return names_[i]; }

    /// Index of a label; throws UnknownLabel.
    int index_of(std::string_view label) const {
        for (int i = 0; i < n_; ++i)
            if (names_[i] == label) return i;
        throw Error(Errc::unknown_label, std::string(label));
    }

    std::optional<int> find(std::string_view label) const {
        for (int i = 0; i < n_; ++i)
            if (names_[i] == label) return i;
        return std::nullopt;
    }

    bool leq(int i, int j) const { return up_[i].contains(j); }
    bool lt(int i, int j) const { return i != j && leq(i, j); }

    /// {j : i <= j}
    ElementSet up_set(int i) const { return up_[i]; }
    /// {j : j <= i}
    ElementSet down_set(int i) const { return down_[i]; }

    ElementSet carrier() const { return ElementSet::full(n_); }

    std::optional<int> least() const { return least_; }
    std::optional<int> greatest() const { return greatest_; }
    bool bounded() const { return least_ && greatest_; }

    /// L(A) = {x : x <= a for all a in A}; the full carrier for A = {}.
    ElementSet lower_cone(ElementSet a) const {
        ElementSet r = carrier();
        for (int i : a) r = r & down_[i];
        return r;
    }

    /// U(A) = {x : a <= x for all a in A}; the full carrier for A = {}.
    ElementSet upper_cone(ElementSet a) const {
        ElementSet r = carrier();
        for (int i : a) r = r & up_[i];
        return r;
    }

    /// Max A: members of A with no strictly larger member in A.
    ElementSet maximal(ElementSet a) const {
        ElementSet r;
        for (int i : a)
            if (((up_[i] - ElementSet::single(i)) & a).empty()) r.insert(i);
        return r;
    }

    /// Min A: members of A with no strictly smaller member in A.
    ElementSet minimal(ElementSet a) const {
        ElementSet r;
        for (int i : a)
            if (((down_[i] - ElementSet::single(i)) & a).empty()) r.insert(i);
        return r;
    }

    /// A <= B elementwise: x <= y for all x in A, y in B.  Vacuously true
    /// when either side is empty.
    bool set_leq(ElementSet a, ElementSet b) const {
        for (int i : a)
            if (!b.subset_of(up_[i])) return false;
        return true;
    }

    std::vector<std::string> labels_of(ElementSet a) const {
        std::vector<std::string> out;
        for (int i : a) out.push_back(names_[i]);
        return out;
    }

    /// Cover pairs (lower, upper) of the Hasse diagram, by index.
    std::vector<std::pair<int, int>> covers() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < n_; ++i)
            for (int j : up_[i]) {
                if (j == i) continue;
                bool cover = true;
                for (int k : up_[i]) {
                    if (k == i || k == j) continue;
                    if (leq(k, j)) { cover = false; break; }
                }
                if (cover) out.emplace_back(i, j);
            }
        return out;
    }

private:
    explicit Poset(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty())
            throw Error(Errc::bad_relation, "carrier must be non-empty");
        if (names_.size() > max_elements)
            throw Error(Errc::size_bound_exceeded, "carrier capacity is 64 elements");
        n_ = static_cast<int>(names_.size());
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw Error(Errc::duplicate_label, names_[i]);
        up_.assign(n_, ElementSet());
        for (int i = 0; i < n_; ++i) up_[i].insert(i);
    }

    void close_and_validate() {
        // Warshall closure on the up masks.
        for (int k = 0; k < n_; ++k)
            for (int i = 0; i < n_; ++i)
                if (up_[i].contains(k)) up_[i] = up_[i] | up_[k];
        for (int i = 0; i < n_; ++i)
            for (int j : up_[i])
                if (j != i && up_[j].contains(i))
                    throw Error(Errc::cycle_detected,
                                names_[i] + " <= " + names_[j] + " <= " + names_[i]);
        finish();
    }

    void finish() {
        down_.assign(n_, ElementSet());
        for (int i = 0; i < n_; ++i)
            for (int j : up_[i]) down_[j].insert(i);
        for (int i = 0; i < n_; ++i) {
            if (up_[i] == carrier()) least_ = i;
            if (down_[i] == carrier()) greatest_ = i;
        }
    }

    int n_ = 0;
    std::vector<std::string> names_;
    std::vector<ElementSet> up_, down_;
    std::optional<int> least_, greatest_;
};

/// Every pair has a unique least upper bound and greatest lower bound.
inline bool is_lattice(const Poset& p) {
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            ElementSet pair = ElementSet::of({x, y});
            if (!p.minimal(p.upper_cone(pair)).is_singleton()) return false;
            if (!p.maximal(p.lower_cone(pair)).is_singleton()) return false;
        }
    return true;
}

} // namespace residua
