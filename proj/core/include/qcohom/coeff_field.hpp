#ifndef QCOHOM_COEFF_FIELD_HPP
#define QCOHOM_COEFF_FIELD_HPP

#include <string>

#include "qcohom/errors.hpp"
#include "qcohom/ratfunc.hpp"
#include "qcohom/rational.hpp"

namespace qcohom {

/// Which computable field stands in for the quantum parameter's field:
/// Q with q set to a nonzero rational, or the rational function field Q(q).
class CoeffField {
public:
    enum class Mode { QSpecialized, QGeneric };

    /// Q with q = value. Throws ConfigError when value is zero.
    static CoeffField specialized(const Rational &value);
    static CoeffField generic() { return CoeffField(Mode::QGeneric, Rational::zero()); }

    Mode mode() const { return mode_; }
    bool is_generic() const { return mode_ == Mode::QGeneric; }
    /// Only meaningful in specialized mode.
    const Rational &q_value() const { return q_; }

    /// Field in which q is replaced by -q.
    CoeffField twisted() const { return is_generic() ? *this : specialized(-q_); }

    /// "q-rational(-1)" or "q-generic".
    std::string to_string() const;

    friend bool operator==(const CoeffField &, const CoeffField &) = default;

private:
    CoeffField(Mode m, Rational q) : mode_(m), q_(std::move(q)) {}

    Mode mode_;
    Rational q_;
};

/// The element q of the field F under a given CoeffField.
template <class F>
F q_element(const CoeffField &field);

template <>
inline Rational q_element<Rational>(const CoeffField &field) {
    if (field.is_generic())
        throw ConfigError("q-generic mode needs Q(q) coefficients");
    return field.q_value();
}

template <>
inline RatFunc q_element<RatFunc>(const CoeffField &field) {
    return field.is_generic() ? RatFunc::q() : RatFunc(field.q_value());
}

} // namespace qcohom

#endif
