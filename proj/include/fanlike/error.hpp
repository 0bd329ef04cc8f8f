#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fanlike {

enum class ErrorCode {
    NotPure,
    NotPseudomanifold,
    WrongEuler,
    InvalidNonFaces,
    NotAFace,
    NotAVertex,
    NotAFacet,
    BadGlue,
    NotSquare,
    NotUnimodular,
    ShapeMismatch,
    OrientationConflict,
    NotCharacteristic,
    IncompatibleInputs,
    NotAPolygon,
    NotAnEdge,
    NotFanGiving,
    MissingValue,
    ParseError,
    BudgetExceeded,
    CorruptData,
    TooLarge,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI's exit-code mapping) can branch without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace fanlike
