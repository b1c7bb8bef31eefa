#include "qcohom/coeff_field.hpp"

#include "qcohom/errors.hpp"

namespace qcohom {

CoeffField CoeffField::specialized(const Rational &value) {
    if (value.is_zero())
        throw ConfigError("q must be invertible; got q = 0");
    return CoeffField(Mode::QSpecialized, value);
}

std::string CoeffField::to_string() const {
    return is_generic() ? "q-generic" : "q-rational(" + q_.to_string() + ")";
}

} // namespace qcohom
