#include "passhom/error.hpp"

namespace passhom {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSeifert: return "NotSeifert";
    case ErrorCode::EntryOverflow: return "EntryOverflow";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownBandName: return "UnknownBandName";
    case ErrorCode::SelfCrossing: return "SelfCrossing";
    case ErrorCode::DuplicateTwistDeclaration: return "DuplicateTwistDeclaration";
    case ErrorCode::MissingSurfaceHeader: return "MissingSurfaceHeader";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::ZeroClass: return "ZeroClass";
    case ErrorCode::NotFormPreserving: return "NotFormPreserving";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OddParity: return "OddParity";
    case ErrorCode::NotEquivalent: return "NotEquivalent";
  }
  return "Error";
}

}  // namespace passhom
