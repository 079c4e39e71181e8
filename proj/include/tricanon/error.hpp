#pragma once

#include <stdexcept>
#include <string>

namespace tricanon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TRICANON_ERROR(Name, Base)                                  \
  class Name : public Base {                                        \
   public:                                                          \
    explicit Name(const std::string& what) : Base(what) {}          \
  };

TRICANON_ERROR(InvalidField, Error)
TRICANON_ERROR(CharacteristicTwo, InvalidField)
TRICANON_ERROR(DivisionByZero, Error)
TRICANON_ERROR(FieldMismatch, Error)
TRICANON_ERROR(FactorizationOverflow, Error)
TRICANON_ERROR(ShapeMismatch, Error)
TRICANON_ERROR(SingularMatrix, Error)
TRICANON_ERROR(SingularCertificate, Error)
TRICANON_ERROR(NotRegular, Error)
TRICANON_ERROR(UnsupportedRanks, Error)
TRICANON_ERROR(UnsupportedShape, Error)
TRICANON_ERROR(UnsupportedField, Error)
TRICANON_ERROR(BudgetExceeded, Error)
TRICANON_ERROR(InternalInvariantViolation, Error)
TRICANON_ERROR(ParseError, Error)

#undef TRICANON_ERROR

}  // namespace tricanon
