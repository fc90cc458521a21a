#include "gpd/error.hpp"

namespace gpd {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MissingComposite: return "MissingComposite";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotAFunctor: return "NotAFunctor";
    case ErrorKind::NotNatural: return "NotNatural";
    case ErrorKind::NotFunctorial: return "NotFunctorial";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::NotBifunctorial: return "NotBifunctorial";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::NotAFiniteWeakCover: return "NotAFiniteWeakCover";
    case ErrorKind::IllDefined: return "IllDefined";
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace gpd
