#pragma once
#include <stdexcept>
#include <string>

namespace braidcoh {

enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    ParseError,
    ArityMismatch,
    InvalidPermutation,
    PositionOutOfRange,
    ShapeMismatch,
    NotAGroup,
    InvalidMCQ,
    HopfAxiomsFail,
    NoSolution,
    NonUnique,
    ValidationFailed,
    CharacteristicNot2,
    UnsupportedDegree,
    ComplexPropertyViolated,
    DegreeOutOfRange,
    InvalidBase,
    CellOutOfRange,
    SchemaError,
};

inline const char* kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::InvalidMCQ: return "InvalidMCQ";
    case ErrorKind::HopfAxiomsFail: return "HopfAxiomsFail";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NonUnique: return "NonUnique";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::CharacteristicNot2: return "CharacteristicNot2";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::ComplexPropertyViolated: return "ComplexPropertyViolated";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::InvalidBase: return "InvalidBase";
    case ErrorKind::CellOutOfRange: return "CellOutOfRange";
    case ErrorKind::SchemaError: return "SchemaError";
    }
    return "?";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& msg)
        : std::runtime_error(std::string(kind_name(k)) + ": " + msg), kind_(k) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

} // namespace braidcoh
