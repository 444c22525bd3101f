#pragma once

#include <stdexcept>
#include <string>

namespace gcob {

enum class ErrorCode {
  invalid_argument,
  not_a_group,
  closure_cap_exceeded,
  order_cap_exceeded,
  budget_exceeded,
  unknown_group,
  order_mismatch,
  not_prime,
  non_integral_result,
  parse_error,
  io_error,
  index_out_of_range,
  overflow,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define GCOB_DEFINE_ERROR(Name, code_value)                          \
  struct Name : Error {                                              \
    explicit Name(std::string m)                                     \
        : Error(ErrorCode::code_value, std::move(m)) {}              \
  }

GCOB_DEFINE_ERROR(InvalidArgumentError, invalid_argument);
GCOB_DEFINE_ERROR(NotAGroupError, not_a_group);
GCOB_DEFINE_ERROR(ClosureCapError, closure_cap_exceeded);
GCOB_DEFINE_ERROR(OrderCapError, order_cap_exceeded);
GCOB_DEFINE_ERROR(BudgetExceededError, budget_exceeded);
GCOB_DEFINE_ERROR(UnknownGroupError, unknown_group);
GCOB_DEFINE_ERROR(OrderMismatchError, order_mismatch);
GCOB_DEFINE_ERROR(NotPrimeError, not_prime);
GCOB_DEFINE_ERROR(NonIntegralResultError, non_integral_result);
GCOB_DEFINE_ERROR(ParseError, parse_error);
GCOB_DEFINE_ERROR(IoError, io_error);
GCOB_DEFINE_ERROR(IndexOutOfRangeError, index_out_of_range);
GCOB_DEFINE_ERROR(OverflowError, overflow);

#undef GCOB_DEFINE_ERROR

}  // namespace gcob
