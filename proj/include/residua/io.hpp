#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "residua/residuation.hpp"

namespace residua {

/// Parse-time error carrying the 1-based source line.
class ParseError : public Error {
public:
    ParseError(Errc code, int line, const std::string& what)
        : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// In-memory form of a poset file: header name, element labels in
/// declaration order, cover pairs and optional unary entries in file order.
struct PosetDocument {
    std::string name;
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> covers;
    std::vector<std::pair<std::string, std::string>> unary;

    bool operator==(const PosetDocument&) const = default;

    Poset build_poset() const { return Poset::from_covers(elements, covers); }

    /// The document's unary map resolved against a built poset; nullopt when
    /// the document has no unary lines.
    std::optional<UnaryOp> build_unary(const Poset& p) const {
        if (unary.empty()) return std::nullopt;
        UnaryOp u;
        u.image.assign(p.size(), -1);
        for (const auto& [x, px] : unary) u.image[p.index_of(x)] = p.index_of(px);
        for (int i = 0; i < p.size(); ++i)
            if (u.image[i] < 0)
                throw Error(Errc::partial_unary_map, "no unary entry for " + p.name_of(i));
        return u;
    }
};

/// Line grammar: `poset <name>` header, `elements <lbl>...`, one
/// `cover <lo> <hi>` per cover pair, optional `unary <x> <x'>` lines.
/// `#` starts a comment, blank lines are ignored, labels are any
/// whitespace-free tokens (primes such as a' allowed).
inline PosetDocument parse_poset_file(std::string_view text) {
    PosetDocument doc;
    bool saw_header = false;
    int line_no = 0;

    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::vector<std::string> tok;
        for (std::string t; line >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        auto known = [&](const std::string& label) {
            if (std::find(doc.elements.begin(), doc.elements.end(), label) == doc.elements.end())
                throw ParseError(Errc::unknown_label, line_no, "unknown element " + label);
            return label;
        };

        if (tok[0] == "poset") {
            if (tok.size() != 2) throw ParseError(Errc::syntax_error, line_no, "expected: poset <name>");
            if (saw_header) throw ParseError(Errc::syntax_error, line_no, "duplicate poset header");
            saw_header = true;
            doc.name = tok[1];
        } else if (tok[0] == "elements") {
            if (!saw_header) throw ParseError(Errc::syntax_error, line_no, "missing poset header");
            if (tok.size() < 2) throw ParseError(Errc::syntax_error, line_no, "expected: elements <lbl>...");
            doc.elements.insert(doc.elements.end(), tok.begin() + 1, tok.end());
        } else if (tok[0] == "cover") {
            if (!saw_header) throw ParseError(Errc::syntax_error, line_no, "missing poset header");
            if (tok.size() != 3) throw ParseError(Errc::syntax_error, line_no, "expected: cover <lo> <hi>");
            doc.covers.emplace_back(known(tok[1]), known(tok[2]));
        } else if (tok[0] == "unary") {
            if (!saw_header) throw ParseError(Errc::syntax_error, line_no, "missing poset header");
            if (tok.size() != 3) throw ParseError(Errc::syntax_error, line_no, "expected: unary <x> <x'>");
            for (const auto& [x, _] : doc.unary)
                if (x == tok[1])
                    throw ParseError(Errc::syntax_error, line_no, "duplicate unary entry for " + x);
            doc.unary.emplace_back(known(tok[1]), known(tok[2]));
        } else {
            throw ParseError(Errc::syntax_error, line_no, "unknown directive " + tok[0]);
        }
    }
    if (!saw_header) throw ParseError(Errc::syntax_error, line_no, "missing poset header");
    if (doc.elements.empty()) throw ParseError(Errc::syntax_error, line_no, "no elements declared");
    if (!doc.unary.empty() && doc.unary.size() != doc.elements.size())
        throw ParseError(Errc::partial_unary_map, line_no,
                         "unary map covers " + std::to_string(doc.unary.size()) + " of " +
                             std::to_string(doc.elements.size()) + " elements");
    return doc;
}

/// Rebuilds a document (covers, optional unary lines) from a live poset.
inline PosetDocument document_from(const Poset& p, const UnaryOp* u, std::string name) {
    PosetDocument doc;
    doc.name = std::move(name);
    doc.elements = p.names();
    for (auto [i, j] : p.covers()) doc.covers.emplace_back(p.name_of(i), p.name_of(j));
    if (u)
        for (int i = 0; i < p.size(); ++i) doc.unary.emplace_back(p.name_of(i), p.name_of((*u)(i)));
    return doc;
}

inline std::string render_poset_document(const PosetDocument& doc) {
    std::string out = "poset " + doc.name + "\nelements";
    for (const auto& e : doc.elements) out += " " + e;
    out += "\n";
    for (const auto& [lo, hi] : doc.covers) out += "cover " + lo + " " + hi + "\n";
    for (const auto& [x, px] : doc.unary) out += "unary " + x + " " + px + "\n";
    return out;
}

/// Singletons render as the bare label, larger sets as {x,y} with members in
/// label order; the empty set (impossible on conforming inputs) as {}.
inline std::string render_cell(const Poset& p, ElementSet s) {
    if (s.is_singleton()) return p.name_of(s.lowest());
    std::vector<std::string> labels = p.labels_of(s);
    std::sort(labels.begin(), labels.end());
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ",";
        out += labels[i];
    }
    return out + "}";
}

/// Inverse of render_cell for golden-table text.
inline ElementSet parse_cell(const Poset& p, std::string_view cell) {
    ElementSet s;
    if (cell.empty()) return s;
    if (cell.front() != '{') {
        s.insert(p.index_of(cell));
        return s;
    }
    if (cell.back() != '}') throw Error(Errc::syntax_error, "malformed cell " + std::string(cell));
    std::string_view body = cell.substr(1, cell.size() - 2);
    while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view item = body.substr(0, comma);
        if (!item.empty()) s.insert(p.index_of(item));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return s;
}

enum class TableFormat { Tsv, Markdown };

inline const char* op_kind_name(OpKind k) { return k == OpKind::odot ? "odot" : "arrow"; }

/// Rows and columns in element declaration order; deterministic.
inline std::string render_table(const Poset& p, const SetValuedTable& t, TableFormat f) {
    const int n = p.size();
    std::string out;
    auto row = [&](const std::string& head, auto&& cell_at) {
        if (f == TableFormat::Markdown) out += "| " + head;
        else out += head;
        for (int y = 0; y < n; ++y)
            out += (f == TableFormat::Markdown ? " | " : "\t") + cell_at(y);
        out += (f == TableFormat::Markdown ? " |\n" : "\n");
    };
    row(op_kind_name(t.kind), [&](int y) { return p.name_of(y); });
    if (f == TableFormat::Markdown) {
        out += "| ---";
        for (int y = 0; y < n; ++y) out += " | ---";
        out += " |\n";
    }
    for (int x = 0; x < n; ++x)
        row(p.name_of(x), [&](int y) { return render_cell(p, t.at(x, y)); });
    return out;
}

inline nlohmann::ordered_json witness_to_json(const PropertyWitness& w) {
    return {{"elements", w.elements}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

inline nlohmann::ordered_json report_to_json(const PropertyReport& rep) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [name, v] : rep.entries()) {
        nlohmann::ordered_json entry = {{"pass", v.pass}};
        if (v.witness) entry["witness"] = witness_to_json(*v.witness);
        j[name] = std::move(entry);
    }
    return j;
}

} // namespace residua
