#pragma once

#include <stdexcept>
#include <string>

namespace residua {

enum class Errc {
    unknown_label,
    duplicate_label,
    cycle_detected,
    bad_relation,
    not_bounded,
    missing_unary_op,
    no_pseudocomplement,
    premises_violated,
    size_bound_exceeded,
    syntax_error,
    partial_unary_map,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::unknown_label:       return "UnknownLabel";
        case Errc::duplicate_label:     return "DuplicateLabel";
        case Errc::cycle_detected:      return "CycleDetected";
        case Errc::bad_relation:        return "BadRelation";
        case Errc::not_bounded:         return "NotBounded";
        case Errc::missing_unary_op:    return "MissingUnaryOp";
        case Errc::no_pseudocomplement: return "NoPseudocomplement";
        case Errc::premises_violated:   return "PremisesViolated";
        case Errc::size_bound_exceeded: return "SizeBoundExceeded";
        case Errc::syntax_error:        return "SyntaxError";
        case Errc::partial_unary_map:   return "PartialUnaryMap";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace residua
