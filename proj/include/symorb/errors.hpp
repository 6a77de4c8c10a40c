#ifndef SYMORB_ERRORS_HPP
#define SYMORB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symorb {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define SYMORB_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                                \
        explicit Name(const std::string& msg = #Name) : Error(msg) {}    \
    }

SYMORB_DEFINE_ERROR(DimensionMismatch);
SYMORB_DEFINE_ERROR(NotDistinct);
SYMORB_DEFINE_ERROR(ExplicitLimitExceeded);
SYMORB_DEFINE_ERROR(ZeroDenominator);
SYMORB_DEFINE_ERROR(DivisionByZero);
SYMORB_DEFINE_ERROR(NotPCycle);
SYMORB_DEFINE_ERROR(NotPrime);
SYMORB_DEFINE_ERROR(NotUnit);
SYMORB_DEFINE_ERROR(IndexOutOfRange);
SYMORB_DEFINE_ERROR(SpanTooSmall);
SYMORB_DEFINE_ERROR(SpanFull);
SYMORB_DEFINE_ERROR(ZeroNormal);
SYMORB_DEFINE_ERROR(InvalidInstance);
SYMORB_DEFINE_ERROR(InvalidResidues);
SYMORB_DEFINE_ERROR(HypothesisNotMet);
SYMORB_DEFINE_ERROR(ParseError);

#undef SYMORB_DEFINE_ERROR

// Thrown when a completed search reports a count above n!/p. Either the
// search is buggy or the bound is false; both must stop the run loudly.
struct BoundViolation : Error {
    explicit BoundViolation(const std::string& msg) : Error(msg) {}
};

} // namespace symorb

#endif
