#ifndef QCOHOM_POLY_RING_HPP
#define QCOHOM_POLY_RING_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcohom/coeff_field.hpp"
#include "qcohom/monomial.hpp"

namespace qcohom {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Variable list, active monomial order and coefficient field of a
/// polynomial ring. Immutable; shared between polynomials by pointer.
class PolyRing {
public:
    static RingPtr make(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex(),
                        CoeffField field = CoeffField::generic());

    const std::vector<std::string> &vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const MonomialOrder &order() const { return order_; }
    const CoeffField &field() const { return field_; }

    /// Throws InconsistentInput for an unknown name.
    std::size_t index_of(const std::string &name) const;
    std::optional<std::size_t> find(const std::string &name) const;

    RingPtr with_order(MonomialOrder order) const;
    RingPtr with_field(CoeffField field) const;

    friend bool operator==(const PolyRing &, const PolyRing &) = default;

private:
    PolyRing(std::vector<std::string> vars, MonomialOrder order, CoeffField field)
        : vars_(std::move(vars)), order_(std::move(order)), field_(std::move(field)) {}

    std::vector<std::string> vars_;
    MonomialOrder order_;
    CoeffField field_;
};

/// Pointer-or-structural equality.
inline bool same_ring(const RingPtr &a, const RingPtr &b) { return a == b || (a && b && *a == *b); }

/// Same variables and field, possibly a different order.
inline bool same_variables(const RingPtr &a, const RingPtr &b) {
    return a == b || (a && b && a->vars() == b->vars() && a->field() == b->field());
}

} // namespace qcohom

#endif
