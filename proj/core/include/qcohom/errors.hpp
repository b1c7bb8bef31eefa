#ifndef QCOHOM_ERRORS_HPP
#define QCOHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcohom {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define QCOHOM_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string &what) : Error(#Name ": " + what) {}   \
    }

QCOHOM_DEFINE_ERROR(DivisionByZero);
QCOHOM_DEFINE_ERROR(ZeroPolynomial);
QCOHOM_DEFINE_ERROR(RingMismatch);
QCOHOM_DEFINE_ERROR(NotSquare);
QCOHOM_DEFINE_ERROR(EmptyGeneratorList);
QCOHOM_DEFINE_ERROR(NotZeroDimensional);
QCOHOM_DEFINE_ERROR(ZeroDivisorPolynomial);
QCOHOM_DEFINE_ERROR(PointNotOnVariety);
QCOHOM_DEFINE_ERROR(InconsistentInput);
QCOHOM_DEFINE_ERROR(UnsupportedN);
QCOHOM_DEFINE_ERROR(IndexOutOfRange);
QCOHOM_DEFINE_ERROR(BadCodim);
QCOHOM_DEFINE_ERROR(AmbientMismatch);
QCOHOM_DEFINE_ERROR(RedrawLimitExceeded);
QCOHOM_DEFINE_ERROR(ParseError);
QCOHOM_DEFINE_ERROR(ConfigError);

#undef QCOHOM_DEFINE_ERROR

} // namespace qcohom

#endif
