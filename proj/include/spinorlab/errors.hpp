#pragma once

#include <stdexcept>
#include <string>

namespace spinorlab {

// Violated physical or algebraic precondition (zero spinor, singular angle,
// massless boost, ...). The CLI maps these to exit status 3.
class DomainError : public std::domain_error {
 public:
  enum class Kind {
    ZeroSpinor,
    SingularAngle,
    Massless,
    DirectionMismatch,
    InvalidArgument,
    NonRealBilinear,
  };

  DomainError(Kind kind, const std::string& what)
      : std::domain_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(DomainError::Kind kind) noexcept;

}  // namespace spinorlab
