#pragma once

#include <stdexcept>
#include <string>

namespace recolle {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define RECOLLE_ERROR(Name)                                              \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& what = "") : Error(#Name, what) {}  \
  };

RECOLLE_ERROR(DimError)
RECOLLE_ERROR(ContainmentError)
RECOLLE_ERROR(FieldMismatch)
RECOLLE_ERROR(InfiniteDimensional)
RECOLLE_ERROR(NonAdmissible)
RECOLLE_ERROR(NonHomogeneous)
RECOLLE_ERROR(EmptyIdempotent)
RECOLLE_ERROR(TrivialIdempotent)
RECOLLE_ERROR(TrivialQuotient)
RECOLLE_ERROR(AlgebraMismatch)
RECOLLE_ERROR(ZeroModule)
RECOLLE_ERROR(LiftInconsistent)
RECOLLE_ERROR(ShiftMismatch)
RECOLLE_ERROR(NotStratifying)
RECOLLE_ERROR(NotPerfect)
RECOLLE_ERROR(InfiniteGlobalDimension)
RECOLLE_ERROR(CapTooLarge)
RECOLLE_ERROR(RecursionLimit)
RECOLLE_ERROR(RootMismatch)
RECOLLE_ERROR(TooLarge)
RECOLLE_ERROR(NonMonomial)
RECOLLE_ERROR(ParseError)
RECOLLE_ERROR(InvariantViolation)

#undef RECOLLE_ERROR

}  // namespace recolle
