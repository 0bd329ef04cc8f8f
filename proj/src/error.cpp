#include "fanlike/error.hpp"

namespace fanlike {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPure: return "NotPure";
        case ErrorCode::NotPseudomanifold: return "NotPseudomanifold";
        case ErrorCode::WrongEuler: return "WrongEuler";
        case ErrorCode::InvalidNonFaces: return "InvalidNonFaces";
        case ErrorCode::NotAFace: return "NotAFace";
        case ErrorCode::NotAVertex: return "NotAVertex";
        case ErrorCode::NotAFacet: return "NotAFacet";
        case ErrorCode::BadGlue: return "BadGlue";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::NotUnimodular: return "NotUnimodular";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::OrientationConflict: return "OrientationConflict";
        case ErrorCode::NotCharacteristic: return "NotCharacteristic";
        case ErrorCode::IncompatibleInputs: return "IncompatibleInputs";
        case ErrorCode::NotAPolygon: return "NotAPolygon";
        case ErrorCode::NotAnEdge: return "NotAnEdge";
        case ErrorCode::NotFanGiving: return "NotFanGiving";
        case ErrorCode::MissingValue: return "MissingValue";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::CorruptData: return "CorruptData";
        case ErrorCode::TooLarge: return "TooLarge";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace fanlike
