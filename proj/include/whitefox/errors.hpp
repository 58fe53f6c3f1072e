#pragma once

#include <stdexcept>
#include <string>

namespace wf {

// Failure classes surfaced by the library. CLI maps these onto exit codes:
// ParseError -> 1, mathematical precondition failures -> 2.
enum class Errc {
    ModulusMismatch,
    NotDivisible,
    NotAUnit,
    DivisionByZero,
    NonSquare,
    DimensionMismatch,
    DetNotOne,
    NotInvertible,
    DetMismatch,
    SnfObstruction,
    RelatorNotTrivial,
    UnknownGenerator,
    NotInAugmentationIdeal,
    NotCoprime,
    ParseError,
    Overflow,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ModulusMismatch: return "ModulusMismatch";
        case Errc::NotDivisible: return "NotDivisible";
        case Errc::NotAUnit: return "NotAUnit";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NonSquare: return "NonSquare";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::DetNotOne: return "DetNotOne";
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::DetMismatch: return "DetMismatch";
        case Errc::SnfObstruction: return "SnfObstruction";
        case Errc::RelatorNotTrivial: return "RelatorNotTrivial";
        case Errc::UnknownGenerator: return "UnknownGenerator";
        case Errc::NotInAugmentationIdeal: return "NotInAugmentationIdeal";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::ParseError: return "ParseError";
        case Errc::Overflow: return "Overflow";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace wf
