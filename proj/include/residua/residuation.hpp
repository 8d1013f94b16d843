#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "residua/properties.hpp"

namespace residua {

/// The four table constructions.
///
///   Th1       x (.) y = Max L(U(x,y'),y)        x -> y = Min U(L(x,y),x')
///   Boolean   x (.) y = Max L(x,y)              x -> y = Min U(x',y)
///   Piecewise 0 / 1 short-circuit cases on x <= y' resp. x <= y,
///             otherwise the Th1 formulas
///   Rp        x (.) y = Max L(x,y)              x -> y = {x*y}
///
/// Th1, Boolean and Piecewise require a unary operation and bounds; Rp
/// requires relative pseudocomplements and ignores any unary operation.
enum class Variant { Th1, Boolean, Piecewise, Rp };

inline const char* variant_name(Variant v) {
    switch (v) {
        case Variant::Th1:       return "th1";
        case Variant::Boolean:   return "boolean";
        case Variant::Piecewise: return "piecewise";
        case Variant::Rp:        return "rp";
    }
    return "?";
}

inline std::optional<Variant> variant_from_name(std::string_view s) {
    if (s == "th1") return Variant::Th1;
    if (s == "boolean") return Variant::Boolean;
    if (s == "piecewise") return Variant::Piecewise;
    if (s == "rp") return Variant::Rp;
    return std::nullopt;
}

enum class OpKind { odot, arrow };

/// One full set-valued operation table; entry (x, y) is row x, column y in
/// carrier order.
struct SetValuedTable {
    OpKind kind = OpKind::odot;
    int n = 0;
    std::vector<ElementSet> cells;

    SetValuedTable() = default;
    SetValuedTable(OpKind k, int size) : kind(k), n(size), cells(size * size) {}

    ElementSet at(int x, int y) const { return cells[x * n + y]; }
    ElementSet& at(int x, int y) { return cells[x * n + y]; }
};

namespace detail {

inline void require_variant_inputs(const Poset& p, const UnaryOp* u, Variant v) {
    if (v != Variant::Rp) {
        if (!u) throw Error(Errc::missing_unary_op,
                            std::string(variant_name(v)) + " tables need a unary operation");
        require_total(p, *u);
        if (!p.bounded())
            throw Error(Errc::not_bounded,
                        std::string(variant_name(v)) + " tables need least and greatest elements");
    }
}

} // namespace detail

/// The set-valued conjunction x (.) y under the given variant.
inline ElementSet odot(const Poset& p, const UnaryOp* u, Variant v, int x, int y) {
    detail::require_variant_inputs(p, u, v);
    switch (v) {
        case Variant::Boolean:
        case Variant::Rp:
            return p.maximal(p.lower_cone(ElementSet::of({x, y})));
        case Variant::Piecewise:
            // case split exactly as stated: the 0 branch is taken whenever
            // x <= y', even where both branches would agree
            if (p.leq(x, (*u)(y)))
                return ElementSet::single(*p.least());
            [[fallthrough]];
        case Variant::Th1: {
            ElementSet uxyp = p.upper_cone(ElementSet::of({x, (*u)(y)}));
            return p.maximal(p.lower_cone(uxyp | ElementSet::single(y)));
        }
    }
    return {};
}

/// The set-valued implication x -> y under the given variant.
inline ElementSet arrow(const Poset& p, const UnaryOp* u, Variant v, int x, int y) {
    detail::require_variant_inputs(p, u, v);
    switch (v) {
        case Variant::Boolean:
            return p.minimal(p.upper_cone(ElementSet::of({(*u)(x), y})));
        case Variant::Rp: {
            std::optional<int> star = relative_pseudocomplement(p, x, y);
            if (!star)
                throw Error(Errc::no_pseudocomplement,
                            p.name_of(x) + " * " + p.name_of(y) + " does not exist");
            return ElementSet::single(*star);
        }
        case Variant::Piecewise:
            if (p.leq(x, y))
                return ElementSet::single(*p.greatest());
            [[fallthrough]];
        case Variant::Th1: {
            ElementSet lxy = p.lower_cone(ElementSet::of({x, y}));
            return p.minimal(p.upper_cone(lxy | ElementSet::single((*u)(x))));
        }
    }
    return {};
}

/// Premise bundle guarding a variant's construction.
inline PropertyReport variant_premises(const Poset& p, const UnaryOp* u, Variant v) {
    switch (v) {
        case Variant::Th1:
            if (!u) throw Error(Errc::missing_unary_op, "th1 premises need a unary operation");
            return th1_premises(p, *u);
        case Variant::Boolean:
            if (!u) throw Error(Errc::missing_unary_op, "boolean premises need a unary operation");
            return is_boolean(p, *u);
        case Variant::Piecewise:
            if (!u) throw Error(Errc::missing_unary_op, "piecewise premises need a unary operation");
            return th3_premises(p, *u);
        case Variant::Rp:
            return is_relatively_pseudocomplemented(p);
    }
    return {};
}

class PremisesViolated : public Error {
public:
    PremisesViolated(Variant v, PropertyReport rep)
        : Error(Errc::premises_violated,
                std::string(variant_name(v)) + " premise bundle fails"),
          report_(std::move(rep)) {}

    const PropertyReport& report() const { return report_; }

private:
    PropertyReport report_;
};

/// Materializes both tables.  With enforce_premises (the default) the
/// matching premise bundle is verified first; the escape hatch exists to
/// reproduce what goes wrong on non-conforming posets.
inline std::pair<SetValuedTable, SetValuedTable>
build_tables(const Poset& p, const UnaryOp* u, Variant v, bool enforce_premises = true) {
    if (enforce_premises) {
        PropertyReport rep = variant_premises(p, u, v);
        bool ok = (v == Variant::Boolean) ? rep.passed("boolean") : rep.all_pass();
        if (!ok) throw PremisesViolated(v, std::move(rep));
    }
    SetValuedTable t_odot(OpKind::odot, p.size());
    SetValuedTable t_arrow(OpKind::arrow, p.size());
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            t_odot.at(x, y) = odot(p, u, v, x, y);
            t_arrow.at(x, y) = arrow(p, u, v, x, y);
        }
    return {std::move(t_odot), std::move(t_arrow)};
}

struct AdjointnessCounterexample {
    int a, b, c;
    bool lhs;  // a (.) b <= c
    bool rhs;  // a <= b -> c
};

struct AdjointnessVerdict {
    bool holds = true;
    std::optional<AdjointnessCounterexample> counterexample;
};

/// Exhaustive check of  a (.) b <= c  iff  a <= b -> c  over all triples,
/// using set order only; no elementwise shortcut.
inline AdjointnessVerdict verify_left_adjointness(const Poset& p, const SetValuedTable& t_odot,
                                                  const SetValuedTable& t_arrow) {
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            for (int c = 0; c < p.size(); ++c) {
                bool lhs = p.set_leq(t_odot.at(a, b), ElementSet::single(c));
                bool rhs = p.set_leq(ElementSet::single(a), t_arrow.at(b, c));
                if (lhs != rhs)
                    return {false, AdjointnessCounterexample{a, b, c, lhs, rhs}};
            }
    return {};
}

/// The identity suite a variant's construction promises, evaluated on
/// already-built tables.
inline PropertyReport verify_identity_suite(const Poset& p, const UnaryOp* u, Variant v,
                                            const SetValuedTable& t_odot,
                                            const SetValuedTable& t_arrow) {
    detail::require_variant_inputs(p, u, v);
    if (v == Variant::Rp && !p.greatest())
        throw Error(Errc::not_bounded, "the rp identity suite needs a greatest element");
    const int one = *p.greatest();
    const std::optional<int> zero = p.least();

    PropertyReport rep;
    auto single = [](int i) { return ElementSet::single(i); };

    auto for_all = [&](const char* name, auto&& violation) {
        PropertyVerdict v2;
        for (int x = 0; x < p.size() && v2.pass; ++x) {
            auto r = violation(x);
            if (r) v2 = {false, detail::make_witness(p, {x}, r->first, r->second)};
        }
        rep.add(name, v2);
    };
    using Sides = std::optional<std::pair<ElementSet, ElementSet>>;

    auto entry_is = [&](ElementSet got, ElementSet want) -> Sides {
        if (got != want) return std::make_pair(got, want);
        return std::nullopt;
    };

    for_all("x_odot_1", [&](int x) { return entry_is(t_odot.at(x, one), single(x)); });
    for_all("1_odot_x", [&](int x) { return entry_is(t_odot.at(one, x), single(x)); });

    if (v == Variant::Th1 || v == Variant::Boolean || v == Variant::Rp)
        for_all("x_odot_x", [&](int x) { return entry_is(t_odot.at(x, x), single(x)); });

    if (v == Variant::Boolean || v == Variant::Rp) {
        PropertyVerdict comm = detail::check_pairs_equal(p, [&](int x, int y) {
            return std::make_pair(t_odot.at(x, y), t_odot.at(y, x));
        });
        rep.add("x_odot_y_commutes", comm);
    }

    if (v == Variant::Th1 || v == Variant::Boolean) {
        for_all("x_odot_0", [&](int x) { return entry_is(t_odot.at(x, *zero), single(*zero)); });
        for_all("0_arrow_x", [&](int x) { return entry_is(t_arrow.at(*zero, x), single((*u)(*zero))); });
        for_all("x_arrow_xprime", [&](int x) { return entry_is(t_arrow.at(x, (*u)(x)), single((*u)(x))); });
    }

    if (v != Variant::Rp)
        for_all("x_arrow_0", [&](int x) { return entry_is(t_arrow.at(x, *zero), single((*u)(x))); });

    for_all("1_arrow_x", [&](int x) { return entry_is(t_arrow.at(one, x), single(x)); });

    if (v == Variant::Boolean) {
        PropertyVerdict zero_iff;
        for (int x = 0; x < p.size() && zero_iff.pass; ++x)
            for (int y = 0; y < p.size() && zero_iff.pass; ++y)
                if ((t_odot.at(x, y) == single(*zero)) != p.leq(x, (*u)(y)))
                    zero_iff = {false, detail::make_witness(p, {x, y}, t_odot.at(x, y), single(*zero))};
        rep.add("odot_zero_iff_leq_prime", zero_iff);
    }
    if (v == Variant::Piecewise) {
        PropertyVerdict zero_if;
        for (int x = 0; x < p.size() && zero_if.pass; ++x)
            for (int y = 0; y < p.size() && zero_if.pass; ++y)
                if (p.leq(x, (*u)(y)) && t_odot.at(x, y) != single(*zero))
                    zero_if = {false, detail::make_witness(p, {x, y}, t_odot.at(x, y), single(*zero))};
        rep.add("odot_zero_if_leq_prime", zero_if);

        PropertyVerdict one_if;
        for (int x = 0; x < p.size() && one_if.pass; ++x)
            for (int y = 0; y < p.size() && one_if.pass; ++y)
                if (p.leq(x, y) && t_arrow.at(x, y) != single(one))
                    one_if = {false, detail::make_witness(p, {x, y}, t_arrow.at(x, y), single(one))};
        rep.add("arrow_one_if_leq", one_if);
    }
    if (v == Variant::Boolean || v == Variant::Rp) {
        PropertyVerdict one_iff;
        for (int x = 0; x < p.size() && one_iff.pass; ++x)
            for (int y = 0; y < p.size() && one_iff.pass; ++y)
                if ((t_arrow.at(x, y) == single(one)) != p.leq(x, y))
                    one_iff = {false, detail::make_witness(p, {x, y}, t_arrow.at(x, y), single(one))};
        rep.add("arrow_one_iff_leq", one_iff);
    }

    return rep;
}

} // namespace residua
