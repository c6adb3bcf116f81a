#ifndef FRCODES_ERRORS_HPP
#define FRCODES_ERRORS_HPP

#include <exception>
#include <string>
#include <utility>

namespace frcodes {

enum class Err {
    NonPrime,
    Reducible,
    SizeExceeded,
    DivisionByZero,
    OutOfRange,
    Singular,
    Inconsistent,
    NotUnique,
    NotInRowSpace,
    DimensionMismatch,
    IndexOutOfRange,
    BasisMismatch,
    EmptyIndexSet,
    FullIndexSet,
    NotDualPair,
    TOutOfRange,
    DuplicatePoint,
    EmptyPointSet,
    NotInDelta,
    DimOutOfRange,
    SideMismatch,
    LengthMismatch,
    PrefixUnknown,
    NotCandidate,
    ConfigError,
    Invalid,
};

inline const char* to_string(Err e) {
    switch (e) {
        case Err::NonPrime: return "NonPrime";
        case Err::Reducible: return "Reducible";
        case Err::SizeExceeded: return "SizeExceeded";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::OutOfRange: return "OutOfRange";
        case Err::Singular: return "Singular";
        case Err::Inconsistent: return "Inconsistent";
        case Err::NotUnique: return "NotUnique";
        case Err::NotInRowSpace: return "NotInRowSpace";
        case Err::DimensionMismatch: return "DimensionMismatch";
        case Err::IndexOutOfRange: return "IndexOutOfRange";
        case Err::BasisMismatch: return "BasisMismatch";
        case Err::EmptyIndexSet: return "EmptyIndexSet";
        case Err::FullIndexSet: return "FullIndexSet";
        case Err::NotDualPair: return "NotDualPair";
        case Err::TOutOfRange: return "TOutOfRange";
        case Err::DuplicatePoint: return "DuplicatePoint";
        case Err::EmptyPointSet: return "EmptyPointSet";
        case Err::NotInDelta: return "NotInDelta";
        case Err::DimOutOfRange: return "DimOutOfRange";
        case Err::SideMismatch: return "SideMismatch";
        case Err::LengthMismatch: return "LengthMismatch";
        case Err::PrefixUnknown: return "PrefixUnknown";
        case Err::NotCandidate: return "NotCandidate";
        case Err::ConfigError: return "ConfigError";
        case Err::Invalid: return "Invalid";
    }
    return "Unknown";
}

class Error : public std::exception {
  public:
    Error(Err code, std::string msg)
        : code_(code), msg_(std::string(to_string(code)) + ": " + std::move(msg)) {}
    Err code() const noexcept { return code_; }
    const char* what() const noexcept override { return msg_.c_str(); }

  private:
    Err code_;
    std::string msg_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace frcodes

#endif
