#pragma once

// Shared test helpers on top of the built-in fixture corpus.

#include <optional>
#include <string>
#include <vector>

#include "residua/fixtures.hpp"

namespace testutil {

struct Model {
    residua::Poset poset;
    std::optional<residua::UnaryOp> unary;

    const residua::UnaryOp* unary_ptr() const { return unary ? &*unary : nullptr; }
};

inline Model fixture_model(std::string_view id) {
    const residua::FixtureEntry* f = residua::find_fixture(id);
    REQUIRE(f != nullptr);
    residua::Poset p = f->document.build_poset();
    std::optional<residua::UnaryOp> u = f->document.build_unary(p);
    return Model{std::move(p), std::move(u)};
}

inline residua::ElementSet labels(const residua::Poset& p, const std::vector<std::string>& ls) {
    residua::ElementSet s;
    for (const auto& l : ls) s.insert(p.index_of(l));
    return s;
}

} // namespace testutil
