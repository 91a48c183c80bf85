#include "clonedl/error.hpp"

namespace clonedl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownConnective: return "UnknownConnective";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::TooManyVariables: return "TooManyVariables";
    case ErrorKind::EmptyArgs: return "EmptyArgs";
    case ErrorKind::ArityUnsupported: return "ArityUnsupported";
    case ErrorKind::UnknownClone: return "UnknownClone";
    case ErrorKind::NotAffine: return "NotAffine";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::EngineCloneMismatch: return "EngineCloneMismatch";
    case ErrorKind::DefaultCountTooLarge: return "DefaultCountTooLarge";
    case ErrorKind::NotThreeCnf: return "NotThreeCnf";
    case ErrorKind::MalformedChain: return "MalformedChain";
    case ErrorKind::EmptyDisjunction: return "EmptyDisjunction";
    case ErrorKind::Io: return "Io";
  }
  return "Error";
}

}  // namespace clonedl
