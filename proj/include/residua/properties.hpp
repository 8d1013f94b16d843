#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "residua/poset.hpp"

namespace residua {

/// Total unary map x -> x' on the carrier.  No law is assumed up front;
/// involutivity, antitonicity and the rest are checked, not presumed.
struct UnaryOp {
    std::vector<int> image;

    int operator()(int i) const { return image[i]; }
    int size() const { return static_cast<int>(image.size()); }

    bool operator==(const UnaryOp&) const = default;
};

inline void require_total(const Poset& p, const UnaryOp& u) {
    if (u.size() != p.size())
        throw Error(Errc::missing_unary_op, "unary operation is not total on the carrier");
    for (int x : u.image)
        if (x < 0 || x >= p.size())
            throw Error(Errc::missing_unary_op, "unary operation leaves the carrier");
}

struct PropertyWitness {
    std::vector<std::string> elements;  // witness tuple in quantifier order
    std::vector<std::string> lhs, rhs;  // the two evaluated sides, as labels
};

struct PropertyVerdict {
    bool pass = true;
    std::optional<PropertyWitness> witness;
};

/// Named pass/fail verdicts in insertion order.  Every fail carries a
/// concrete witness that re-evaluates to a violation.
class PropertyReport {
public:
    void add(std::string name, PropertyVerdict v) {
        entries_.emplace_back(std::move(name), std::move(v));
    }

    bool all_pass() const {
        for (const auto& [_, v] : entries_)
            if (!v.pass) return false;
        return true;
    }

    const PropertyVerdict* find(std::string_view name) const {
        for (const auto& [k, v] : entries_)
            if (k == name) return &v;
        return nullptr;
    }

    bool passed(std::string_view name) const {
        const PropertyVerdict* v = find(name);
        return v && v->pass;
    }

    const std::vector<std::pair<std::string, PropertyVerdict>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, PropertyVerdict>> entries_;
};

namespace detail {

inline PropertyWitness make_witness(const Poset& p, std::initializer_list<int> elems,
                                    ElementSet lhs, ElementSet rhs) {
    PropertyWitness w;
    for (int e : elems) w.elements.push_back(p.name_of(e));
    w.lhs = p.labels_of(lhs);
    w.rhs = p.labels_of(rhs);
    return w;
}

/// Scans pairs (x, y) in carrier order and reports the first pair where the
/// two evaluated sides differ.  `eval` returns {lhs, rhs}.
template <typename F>
PropertyVerdict check_pairs_equal(const Poset& p, F&& eval) {
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            auto [lhs, rhs] = eval(x, y);
            if (lhs != rhs)
                return {false, make_witness(p, {x, y}, lhs, rhs)};
        }
    return {};
}

template <typename F>
PropertyVerdict check_triples(const Poset& p, F&& eval) {
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            for (int z = 0; z < p.size(); ++z) {
                auto r = eval(x, y, z);
                if (r) return {false, make_witness(p, {x, y, z}, r->first, r->second)};
            }
    return {};
}

} // namespace detail

/// Involution, antitonicity, complementation and the 0/1 swap laws of a
/// unary operation.  Complementation needs bounds, hence NotBounded.
inline PropertyReport check_unary(const Poset& p, const UnaryOp& u) {
    require_total(p, u);
    if (!p.bounded())
        throw Error(Errc::not_bounded, "complementation check requires least and greatest elements");
    const int zero = *p.least(), one = *p.greatest();

    PropertyReport rep;

    PropertyVerdict involution;
    for (int x = 0; x < p.size() && involution.pass; ++x)
        if (u(u(x)) != x)
            involution = {false, detail::make_witness(p, {x}, ElementSet::single(u(u(x))),
                                                      ElementSet::single(x))};
    rep.add("involution", involution);

    PropertyVerdict antitone;
    for (int x = 0; x < p.size() && antitone.pass; ++x)
        for (int y = 0; y < p.size() && antitone.pass; ++y)
            if (p.leq(x, y) && !p.leq(u(y), u(x)))
                antitone = {false, detail::make_witness(p, {x, y}, ElementSet::single(u(y)),
                                                        ElementSet::single(u(x)))};
    rep.add("antitone", antitone);

    PropertyVerdict complemented;
    for (int x = 0; x < p.size() && complemented.pass; ++x) {
        ElementSet both = ElementSet::of({x, u(x)});
        ElementSet lo = p.lower_cone(both), hi = p.upper_cone(both);
        if (lo != ElementSet::single(zero))
            complemented = {false, detail::make_witness(p, {x}, lo, ElementSet::single(zero))};
        else if (hi != ElementSet::single(one))
            complemented = {false, detail::make_witness(p, {x}, hi, ElementSet::single(one))};
    }
    rep.add("complemented", complemented);

    PropertyVerdict zero_one;
    if (u(zero) != one)
        zero_one = {false, detail::make_witness(p, {zero}, ElementSet::single(u(zero)),
                                                ElementSet::single(one))};
    else if (u(one) != zero)
        zero_one = {false, detail::make_witness(p, {one}, ElementSet::single(u(one)),
                                                ElementSet::single(zero))};
    rep.add("zero_one_laws", zero_one);

    return rep;
}

/// Distributivity via both equivalent cone identities; the two verdicts must
/// agree or the checker itself is broken.
inline PropertyReport is_distributive(const Poset& p) {
    auto L = [&](ElementSet a) { return p.lower_cone(a); };
    auto U = [&](ElementSet a) { return p.upper_cone(a); };
    auto two = [](int x, int y) { return ElementSet::of({x, y}); };

    PropertyVerdict upper = detail::check_triples(p, [&](int x, int y, int z)
        -> std::optional<std::pair<ElementSet, ElementSet>> {
        ElementSet lhs = U(L(two(x, y)) | ElementSet::single(z));
        ElementSet rhs = U(L(U(two(x, z)) | U(two(y, z))));
        if (lhs != rhs) return std::make_pair(lhs, rhs);
        return std::nullopt;
    });
    PropertyVerdict lower = detail::check_triples(p, [&](int x, int y, int z)
        -> std::optional<std::pair<ElementSet, ElementSet>> {
        ElementSet lhs = L(U(two(x, y)) | ElementSet::single(z));
        ElementSet rhs = L(U(L(two(x, z)) | L(two(y, z))));
        if (lhs != rhs) return std::make_pair(lhs, rhs);
        return std::nullopt;
    });

    if (upper.pass != lower.pass)
        throw std::logic_error("distributivity identities disagree; checker defect");

    PropertyReport rep;
    rep.add("distributive_upper", upper);
    rep.add("distributive_lower", lower);
    rep.add("distributive", PropertyVerdict{upper.pass && lower.pass,
                                            upper.pass ? lower.witness : upper.witness});
    return rep;
}

/// x <= z implies L(U(x,y),z) = LU(x,L(y,z)), checked over all such triples.
inline PropertyReport is_modular(const Poset& p) {
    auto L = [&](ElementSet a) { return p.lower_cone(a); };
    auto U = [&](ElementSet a) { return p.upper_cone(a); };
    auto two = [](int x, int y) { return ElementSet::of({x, y}); };

    PropertyVerdict v = detail::check_triples(p, [&](int x, int y, int z)
        -> std::optional<std::pair<ElementSet, ElementSet>> {
        if (!p.leq(x, z)) return std::nullopt;
        ElementSet lhs = L(U(two(x, y)) | ElementSet::single(z));
        ElementSet rhs = L(U(ElementSet::single(x) | L(two(y, z))));
        if (lhs != rhs) return std::make_pair(lhs, rhs);
        return std::nullopt;
    });

    PropertyReport rep;
    rep.add("modular", v);
    return rep;
}

inline PropertyReport is_strongly_modular(const Poset& p) {
    auto L = [&](ElementSet a) { return p.lower_cone(a); };
    auto U = [&](ElementSet a) { return p.upper_cone(a); };
    auto two = [](int x, int y) { return ElementSet::of({x, y}); };

    // L(U(x,y),U(x,z)) = LU(x,L(y,U(x,z)))
    PropertyVerdict first = detail::check_triples(p, [&](int x, int y, int z)
        -> std::optional<std::pair<ElementSet, ElementSet>> {
        ElementSet uxz = U(two(x, z));
        ElementSet lhs = L(U(two(x, y)) | uxz);
        ElementSet rhs = L(U(ElementSet::single(x) | L(ElementSet::single(y) | uxz)));
        if (lhs != rhs) return std::make_pair(lhs, rhs);
        return std::nullopt;
    });
    // L(U(L(x,z),y),z) = LU(L(x,z),L(y,z))
    PropertyVerdict second = detail::check_triples(p, [&](int x, int y, int z)
        -> std::optional<std::pair<ElementSet, ElementSet>> {
        ElementSet lxz = L(two(x, z));
        ElementSet lhs = L(U(lxz | ElementSet::single(y)) | ElementSet::single(z));
        ElementSet rhs = L(U(lxz | L(two(y, z))));
        if (lhs != rhs) return std::make_pair(lhs, rhs);
        return std::nullopt;
    });

    PropertyReport rep;
    rep.add("strongly_modular_i", first);
    rep.add("strongly_modular_ii", second);
    rep.add("strongly_modular", PropertyVerdict{first.pass && second.pass,
                                                first.pass ? second.witness : first.witness});
    return rep;
}

/// Boolean = distributive + complemented (bounds required).
inline PropertyReport is_boolean(const Poset& p, const UnaryOp& u) {
    if (!p.bounded())
        throw Error(Errc::not_bounded, "a Boolean poset must be bounded");
    PropertyReport dist = is_distributive(p);
    PropertyReport unary = check_unary(p, u);

    PropertyReport rep;
    rep.add("distributive", *dist.find("distributive"));
    rep.add("complemented", *unary.find("complemented"));
    rep.add("boolean", PropertyVerdict{rep.passed("distributive") && rep.passed("complemented"),
                                       rep.passed("distributive") ? rep.find("complemented")->witness
                                                                  : rep.find("distributive")->witness});
    return rep;
}

/// Premises of the general residuation construction: 1' = 0 plus two cone
/// identities quantified over all pairs.  All verdicts are computed even
/// after a failure, so reports are complete.
inline PropertyReport th1_premises(const Poset& p, const UnaryOp& u) {
    require_total(p, u);
    if (!p.bounded())
        throw Error(Errc::not_bounded, "premises are stated for bounded posets");
    const int zero = *p.least(), one = *p.greatest();
    auto L = [&](ElementSet a) { return p.lower_cone(a); };
    auto U = [&](ElementSet a) { return p.upper_cone(a); };
    auto two = [](int x, int y) { return ElementSet::of({x, y}); };

    PropertyReport rep;

    PropertyVerdict top;
    if (u(one) != zero)
        top = {false, detail::make_witness(p, {one}, ElementSet::single(u(one)),
                                           ElementSet::single(zero))};
    rep.add("one_prime_is_zero", top);

    // L(U(L(x,y),y'),y) = L(x,y)
    rep.add("th1_identity_lower", detail::check_pairs_equal(p, [&](int x, int y) {
        ElementSet lxy = L(two(x, y));
        ElementSet lhs = L(U(lxy | ElementSet::single(u(y))) | ElementSet::single(y));
        return std::make_pair(lhs, lxy);
    }));

    // U(L(U(x,y'),y),y') = U(x,y')
    rep.add("th1_identity_upper", detail::check_pairs_equal(p, [&](int x, int y) {
        ElementSet uxyp = U(two(x, u(y)));
        ElementSet lhs = U(L(uxyp | ElementSet::single(y)) | ElementSet::single(u(y)));
        return std::make_pair(lhs, uxyp);
    }));

    return rep;
}

/// Premises of the piecewise residuation construction: the 0/1 swap laws,
/// x' != 1 off zero, two cone identities, and the two cone inclusions.
inline PropertyReport th3_premises(const Poset& p, const UnaryOp& u) {
    require_total(p, u);
    if (!p.bounded())
        throw Error(Errc::not_bounded, "premises are stated for bounded posets");
    const int zero = *p.least(), one = *p.greatest();
    auto L = [&](ElementSet a) { return p.lower_cone(a); };
    auto U = [&](ElementSet a) { return p.upper_cone(a); };
    auto two = [](int x, int y) { return ElementSet::of({x, y}); };

    PropertyReport rep;

    PropertyVerdict bottom;
    if (u(zero) != one)
        bottom = {false, detail::make_witness(p, {zero}, ElementSet::single(u(zero)),
                                              ElementSet::single(one))};
    rep.add("zero_prime_is_one", bottom);

    PropertyVerdict top;
    if (u(one) != zero)
        top = {false, detail::make_witness(p, {one}, ElementSet::single(u(one)),
                                           ElementSet::single(zero))};
    rep.add("one_prime_is_zero", top);

    PropertyVerdict never_one;
    for (int x = 0; x < p.size() && never_one.pass; ++x)
        if (x != zero && u(x) == one)
            never_one = {false, detail::make_witness(p, {x}, ElementSet::single(u(x)),
                                                     ElementSet::single(one))};
    rep.add("prime_never_one", never_one);

    // L(U(L(x,y),x'),x) = LU(L(x,y),L(x',x))
    rep.add("th3_identity_i", detail::check_pairs_equal(p, [&](int x, int y) {
        ElementSet lxy = L(two(x, y));
        ElementSet lhs = L(U(lxy | ElementSet::single(u(x))) | ElementSet::single(x));
        ElementSet rhs = L(U(lxy | L(two(u(x), x))));
        return std::make_pair(lhs, rhs);
    }));

    // L(U(x',x),U(y,x')) = LU(x',L(x,U(y,x')))
    rep.add("th3_identity_ii", detail::check_pairs_equal(p, [&](int x, int y) {
        ElementSet uyxp = U(two(y, u(x)));
        ElementSet lhs = L(U(two(u(x), x)) | uyxp);
        ElementSet rhs = L(U(ElementSet::single(u(x)) | L(ElementSet::single(x) | uyxp)));
        return std::make_pair(lhs, rhs);
    }));

    PropertyVerdict lower_inc;
    for (int x = 0; x < p.size() && lower_inc.pass; ++x) {
        ElementSet lxxp = L(two(x, u(x)));
        for (int y = 0; y < p.size() && lower_inc.pass; ++y)
            if (y != zero && !lxxp.subset_of(p.down_set(y)))
                lower_inc = {false, detail::make_witness(p, {x, y}, lxxp, p.down_set(y))};
    }
    rep.add("lower_inclusion", lower_inc);

    PropertyVerdict upper_inc;
    for (int x = 0; x < p.size() && upper_inc.pass; ++x) {
        ElementSet uxxp = U(two(x, u(x)));
        for (int y = 0; y < p.size() && upper_inc.pass; ++y)
            if (y != one && !uxxp.subset_of(p.up_set(y)))
                upper_inc = {false, detail::make_witness(p, {x, y}, uxxp, p.up_set(y))};
    }
    rep.add("upper_inclusion", upper_inc);

    return rep;
}

/// Greatest x with L(a,x) <= L(b), if the candidate set has a greatest
/// element.  Checked literally against the candidate set, not via Max.
inline std::optional<int> relative_pseudocomplement(const Poset& p, int a, int b) {
    ElementSet la = p.down_set(a), lb = p.down_set(b);
    ElementSet candidates;
    for (int x = 0; x < p.size(); ++x)
        if ((la & p.down_set(x)).subset_of(lb)) candidates.insert(x);
    for (int g : candidates)
        if (candidates.subset_of(p.down_set(g))) return g;
    return std::nullopt;
}

/// Pass iff a*b exists for every pair; the witness is the first undefined
/// pair together with the maximal candidates that fail to have a greatest.
inline PropertyReport is_relatively_pseudocomplemented(const Poset& p) {
    PropertyVerdict v;
    for (int a = 0; a < p.size() && v.pass; ++a)
        for (int b = 0; b < p.size() && v.pass; ++b)
            if (!relative_pseudocomplement(p, a, b)) {
                ElementSet candidates;
                for (int x = 0; x < p.size(); ++x)
                    if ((p.down_set(a) & p.down_set(x)).subset_of(p.down_set(b)))
                        candidates.insert(x);
                v = {false, detail::make_witness(p, {a, b}, p.maximal(candidates), candidates)};
            }
    PropertyReport rep;
    rep.add("relatively_pseudocomplemented", v);
    return rep;
}

/// Laws that hold on every poset: the Galois connection of L and U over all
/// subsets, and the seven one-sided cone inclusions over all element
/// triples (free variables stand in for primed elements).
inline PropertyReport cone_law_suite(const Poset& p) {
    if (p.size() > 24)
        throw Error(Errc::size_bound_exceeded,
                    "the cone law suite enumerates all subsets; carrier too large");
    auto L = [&](ElementSet a) { return p.lower_cone(a); };
    auto U = [&](ElementSet a) { return p.upper_cone(a); };
    auto two = [](int x, int y) { return ElementSet::of({x, y}); };
    auto one_ = [](int x) { return ElementSet::single(x); };

    PropertyReport rep;
    const std::uint64_t limit = std::uint64_t{1} << p.size();

    auto subset_law = [&](const char* name, auto&& violated) {
        PropertyVerdict v;
        for (std::uint64_t bits = 0; bits < limit && v.pass; ++bits) {
            ElementSet a(bits);
            if (auto r = violated(a)) v = {false, PropertyWitness{p.labels_of(a), p.labels_of(r->first),
                                                                  p.labels_of(r->second)}};
        }
        rep.add(name, v);
    };

    using Sides = std::optional<std::pair<ElementSet, ElementSet>>;
    subset_law("galois_lul", [&](ElementSet a) -> Sides {
        ElementSet lhs = L(U(L(a))), rhs = L(a);
        if (lhs != rhs) return std::make_pair(lhs, rhs);
        return std::nullopt;
    });
    subset_law("galois_ulu", [&](ElementSet a) -> Sides {
        ElementSet lhs = U(L(U(a))), rhs = U(a);
        if (lhs != rhs) return std::make_pair(lhs, rhs);
        return std::nullopt;
    });
    subset_law("extensive_lu", [&](ElementSet a) -> Sides {
        if (!a.subset_of(L(U(a)))) return std::make_pair(a, L(U(a)));
        return std::nullopt;
    });
    subset_law("extensive_ul", [&](ElementSet a) -> Sides {
        if (!a.subset_of(U(L(a)))) return std::make_pair(a, U(L(a)));
        return std::nullopt;
    });

    // A <= B implies L(B) <= L(A) and U(B) <= U(A); B ranges over all
    // subsets and A over the proper submasks of B.
    PropertyVerdict anti_l, anti_u;
    for (std::uint64_t b = 0; b < limit && (anti_l.pass || anti_u.pass); ++b) {
        for (std::uint64_t a = (b - 1) & b; a != b; a = (a - 1) & b) {
            ElementSet big(b), small(a);
            if (anti_l.pass && !L(big).subset_of(L(small)))
                anti_l = {false, PropertyWitness{p.labels_of(small), p.labels_of(L(big)),
                                                 p.labels_of(L(small))}};
            if (anti_u.pass && !U(big).subset_of(U(small)))
                anti_u = {false, PropertyWitness{p.labels_of(small), p.labels_of(U(big)),
                                                 p.labels_of(U(small))}};
            if (a == 0) break;
        }
    }
    rep.add("antitone_lower", anti_l);
    rep.add("antitone_upper", anti_u);

    auto inclusion_law = [&](const char* name, auto&& sides) {
        PropertyVerdict v = detail::check_triples(p, [&](int x, int y, int z)
            -> std::optional<std::pair<ElementSet, ElementSet>> {
            auto [lhs, rhs] = sides(x, y, z);
            if (!lhs.subset_of(rhs)) return std::make_pair(lhs, rhs);
            return std::nullopt;
        });
        rep.add(name, v);
    };

    inclusion_law("inclusion_distributive_upper", [&](int x, int y, int z) {
        return std::make_pair(U(L(U(two(x, z)) | U(two(y, z)))), U(L(two(x, y)) | one_(z)));
    });
    inclusion_law("inclusion_distributive_lower", [&](int x, int y, int z) {
        return std::make_pair(L(U(L(two(x, z)) | L(two(y, z)))), L(U(two(x, y)) | one_(z)));
    });
    inclusion_law("inclusion_modular", [&](int x, int y, int z) {
        if (!p.leq(x, z)) return std::make_pair(ElementSet(), ElementSet());
        return std::make_pair(L(U(one_(x) | L(two(y, z)))), L(U(two(x, y)) | one_(z)));
    });
    // w plays the primed element in the four unary-flavoured inclusions
    inclusion_law("inclusion_th1_lower", [&](int x, int y, int w) {
        return std::make_pair(L(two(x, y)), L(U(L(two(x, y)) | one_(w)) | one_(y)));
    });
    inclusion_law("inclusion_th1_upper", [&](int x, int y, int w) {
        return std::make_pair(U(two(x, w)), U(L(U(two(x, w)) | one_(y)) | one_(w)));
    });
    inclusion_law("inclusion_th3_i", [&](int x, int y, int w) {
        return std::make_pair(L(U(L(two(x, y)) | L(two(w, x)))),
                              L(U(L(two(x, y)) | one_(w)) | one_(x)));
    });
    inclusion_law("inclusion_th3_ii", [&](int x, int y, int w) {
        return std::make_pair(L(U(one_(w) | L(one_(x) | U(two(y, w))))),
                              L(U(two(w, x)) | U(two(y, w))));
    });

    return rep;
}

} // namespace residua
