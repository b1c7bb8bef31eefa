#ifndef QCOHOM_MONOMIAL_HPP
#define QCOHOM_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace qcohom {

using Exponent = std::int32_t;

/// Exponent vector over a ring's variable list.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::span<const Exponent> e);
    explicit Monomial(const std::vector<Exponent> &e) : Monomial(std::span<const Exponent>(e)) {}
    Monomial(std::initializer_list<Exponent> e) : Monomial(std::span<const Exponent>(e.begin(), e.size())) {}

    /// x_var^power in a ring with nvars variables.
    static Monomial var_power(std::size_t nvars, std::size_t var, Exponent power = 1);

    std::size_t size() const { return e_.size(); }
    Exponent operator[](std::size_t i) const { return e_[i]; }
    std::span<const Exponent> exponents() const { return {e_.data(), e_.size()}; }
    long total_degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    /// True when this divides other.
    bool divides(const Monomial &other) const;
    /// Index of the single variable of a pure power x^k (k >= 1), or -1.
    long pure_power_var() const;

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    /// Exact quotient a / b; b must divide a.
    friend Monomial operator/(const Monomial &a, const Monomial &b);
    friend Monomial lcm(const Monomial &a, const Monomial &b);
    friend bool coprime(const Monomial &a, const Monomial &b);

    friend bool operator==(const Monomial &a, const Monomial &b) { return a.e_ == b.e_; }
    /// Plain lexicographic comparison of the exponent vectors; used for
    /// containers only, not as a monomial order.
    friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b) {
        return std::lexicographical_compare_three_way(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end());
    }

    std::string to_string(const std::vector<std::string> &vars) const;

private:
    // Inline storage covers every ring the models build, tag variable included.
    boost::container::small_vector<Exponent, 12> e_;
    long deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const noexcept;
};

/// Monomial order on exponent vectors of a fixed length.
///
/// Variable 0 is the largest variable in every order kind.
class MonomialOrder {
public:
    enum class Kind { Lex, Grevlex, WeightedGrevlex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }
    /// Weighted degree first, then reverse lexicographic tie break.
    /// Throws InconsistentInput unless every weight is positive.
    static MonomialOrder weighted_grevlex(std::vector<long> weights);
    /// Elimination order: monomials are compared on the variables in
    /// `front` first (using `front_kind`), ties broken on the remaining
    /// variables (using `rest_kind`). Kinds must be Lex or Grevlex.
    static MonomialOrder block(std::vector<std::size_t> front, Kind front_kind = Kind::Grevlex,
                               Kind rest_kind = Kind::Grevlex);

    Kind kind() const { return kind_; }
    const std::vector<long> &weights() const { return weights_; }
    const std::vector<std::size_t> &front_block() const { return front_; }
    Kind front_kind() const { return front_kind_; }
    Kind rest_kind() const { return rest_kind_; }

    /// Throws InconsistentInput when the order cannot act on nvars variables.
    void check_arity(std::size_t nvars) const;

    std::strong_ordering compare(const Monomial &a, const Monomial &b) const;
    bool less(const Monomial &a, const Monomial &b) const { return compare(a, b) < 0; }
    /// Degree used by the normal pair-selection strategy.
    long sugar_degree(const Monomial &m) const;

    std::string to_string() const;

    friend bool operator==(const MonomialOrder &, const MonomialOrder &) = default;

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<long> weights_;
    std::vector<std::size_t> front_;
    Kind front_kind_ = Kind::Grevlex;
    Kind rest_kind_ = Kind::Grevlex;
};

} // namespace qcohom

#endif
