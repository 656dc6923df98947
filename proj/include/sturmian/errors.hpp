#pragma once

#include <stdexcept>
#include <string>

namespace sturmian {

// Base class for every failure raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define STURMIAN_DEFINE_ERROR(name)                                   \
  class name : public error {                                         \
   public:                                                            \
    explicit name(const std::string& what) : error(#name ": " + what) {} \
  }

STURMIAN_DEFINE_ERROR(StreamTooShort);
STURMIAN_DEFINE_ERROR(UndecidedAtBudget);
STURMIAN_DEFINE_ERROR(MixedField);
STURMIAN_DEFINE_ERROR(TooShort);
STURMIAN_DEFINE_ERROR(RadiusTooSmall);
STURMIAN_DEFINE_ERROR(MalformedPartition);
STURMIAN_DEFINE_ERROR(EmptyOpSeq);
STURMIAN_DEFINE_ERROR(TokenizationFailure);
STURMIAN_DEFINE_ERROR(NotAdmissible);
STURMIAN_DEFINE_ERROR(DegenerateExponent);
STURMIAN_DEFINE_ERROR(SplitFailure);
STURMIAN_DEFINE_ERROR(EqualLetters);
STURMIAN_DEFINE_ERROR(OutOfRange);
STURMIAN_DEFINE_ERROR(ParseError);

#undef STURMIAN_DEFINE_ERROR

}  // namespace sturmian
