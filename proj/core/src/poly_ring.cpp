#include "qcohom/poly_ring.hpp"

#include <algorithm>
#include <set>

#include "qcohom/errors.hpp"

namespace qcohom {

RingPtr PolyRing::make(std::vector<std::string> vars, MonomialOrder order, CoeffField field) {
    std::set<std::string> seen;
    for (const auto &v : vars) {
        if (v.empty())
            throw InconsistentInput("empty variable name");
        if (!seen.insert(v).second)
            throw InconsistentInput("duplicate variable name '" + v + "'");
    }
    order.check_arity(vars.size());
    return RingPtr(new PolyRing(std::move(vars), std::move(order), std::move(field)));
}

std::optional<std::size_t> PolyRing::find(const std::string &name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

std::size_t PolyRing::index_of(const std::string &name) const {
    if (auto i = find(name))
        return *i;
    throw InconsistentInput("unknown variable '" + name + "'");
}

RingPtr PolyRing::with_order(MonomialOrder order) const { return make(vars_, std::move(order), field_); }

RingPtr PolyRing::with_field(CoeffField field) const { return make(vars_, order_, std::move(field)); }

} // namespace qcohom
