#pragma once

#include <stdexcept>
#include <string>

namespace gpd {

enum class ErrorKind {
  MissingComposite,
  NonAssociative,
  NoIdentity,
  NoInverse,
  NotAGroup,
  NotAFunctor,
  NotNatural,
  NotFunctorial,
  NotFree,
  NotACover,
  NotBifunctorial,
  NotAdmissible,
  BaseMismatch,
  NotComposable,
  NotAFiniteWeakCover,
  IllDefined,
  Malformed,
  Parse,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every validation failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gpd
