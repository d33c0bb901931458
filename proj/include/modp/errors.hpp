#pragma once

#include <stdexcept>
#include <string>

namespace modp {

enum class ErrKind {
    NonPrime,
    EvenPrimeUnsupported,
    DegreeUnsupported,
    ShapeMismatch,
    ContextMismatch,
    UnknownGenerator,
    MalformedRelation,
    NotStable,
    TooLarge,
    RangeError,
    InvalidCharacterData,
    UnsupportedCentralCharacter,
    UnknownPiSpec,
    UnknownKind,
    ExcludedCase,
    NotDiagonalizable,
    SingularMatrix,
    ParseError,
};

const char* err_name(ErrKind k);

class Error : public std::runtime_error {
public:
    Error(ErrKind kind, const std::string& msg)
        : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}
    ErrKind kind() const { return kind_; }

private:
    ErrKind kind_;
};

[[noreturn]] inline void raise(ErrKind kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace modp
