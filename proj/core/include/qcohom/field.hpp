#ifndef QCOHOM_FIELD_HPP
#define QCOHOM_FIELD_HPP

#include <concepts>
#include <string>

namespace qcohom {

/// Exact coefficient field of characteristic zero.
template <class F>
concept Field = std::regular<F> && requires(const F &a, const F &b) {
    { F::zero() } -> std::same_as<F>;
    { F::one() } -> std::same_as<F>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.inv() } -> std::same_as<F>;
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

} // namespace qcohom

#endif
