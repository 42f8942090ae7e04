#pragma once

#include <stdexcept>
#include <string>

namespace aff {

// Recoverable domain failures. kind() is a stable machine-readable name;
// the CLI maps every DomainError to exit code 3.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define AFF_DEFINE_ERROR(Name)                                            \
  class Name : public DomainError {                                       \
   public:                                                                \
    explicit Name(const std::string& what) : DomainError(#Name, what) {}  \
  }

AFF_DEFINE_ERROR(DegenerateMatrix);
AFF_DEFINE_ERROR(OrientationViolation);
AFF_DEFINE_ERROR(FlatDegenerate);
AFF_DEFINE_ERROR(DomainExceeded);
AFF_DEFINE_ERROR(NotInDomain);
AFF_DEFINE_ERROR(EmptySphere);
AFF_DEFINE_ERROR(WrongCurvature);
AFF_DEFINE_ERROR(AbsoluteIntersectionUndefined);
AFF_DEFINE_ERROR(BlowUp);
AFF_DEFINE_ERROR(TargetUnreachable);
AFF_DEFINE_ERROR(UnresolvedCase);

#undef AFF_DEFINE_ERROR

}  // namespace aff
