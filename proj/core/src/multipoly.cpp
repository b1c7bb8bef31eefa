#include "qcohom/multipoly.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "qcohom/errors.hpp"

namespace qcohom {

template <Field F>
std::vector<typename MultiPoly<F>::Term> merge_terms(const MonomialOrder &order,
                                                     const std::vector<typename MultiPoly<F>::Term> &a,
                                                     const std::vector<typename MultiPoly<F>::Term> &b,
                                                     const F &factor, const Monomial *shift) {
    using Term = typename MultiPoly<F>::Term;
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    Monomial bm;
    auto b_mono = [&](std::size_t k) -> const Monomial & {
        if (!shift)
            return b[k].mono;
        bm = b[k].mono * *shift;
        return bm;
    };
    while (i < a.size() && j < b.size()) {
        const Monomial &m = b_mono(j);
        const auto c = order.compare(a[i].mono, m);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({m, b[j++].coeff * factor});
        } else {
            F s = a[i].coeff + b[j].coeff * factor;
            if (!s.is_zero())
                out.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i)
        out.push_back(a[i]);
    for (; j < b.size(); ++j)
        out.push_back({b_mono(j), b[j].coeff * factor});
    return out;
}

template <Field F>
MultiPoly<F> MultiPoly<F>::constant(RingPtr ring, const F &c) {
    const std::size_t n = ring->nvars();
    return term(std::move(ring), Monomial(n), c);
}

template <Field F>
MultiPoly<F> MultiPoly<F>::variable(RingPtr ring, std::size_t var) {
    if (var >= ring->nvars())
        throw IndexOutOfRange("variable index " + std::to_string(var));
    const std::size_t n = ring->nvars();
    return term(std::move(ring), Monomial::var_power(n, var), F::one());
}

template <Field F>
MultiPoly<F> MultiPoly<F>::term(RingPtr ring, Monomial m, const F &c) {
    if (m.size() != ring->nvars())
        throw RingMismatch("exponent vector length " + std::to_string(m.size()) + " in a ring of " +
                           std::to_string(ring->nvars()) + " variables");
    if (c.is_zero())
        return MultiPoly(std::move(ring));
    return MultiPoly(std::move(ring), std::vector<Term>{{std::move(m), c}});
}

template <Field F>
MultiPoly<F> MultiPoly<F>::from_terms(RingPtr ring, std::vector<Term> terms) {
    const auto &order = ring->order();
    for (const auto &t : terms)
        if (t.mono.size() != ring->nvars())
            throw RingMismatch("exponent vector length does not match the ring");
    std::sort(terms.begin(), terms.end(),
              [&order](const Term &a, const Term &b) { return order.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto &t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = out.back().coeff + t.coeff;
            if (out.back().coeff.is_zero())
                out.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    return MultiPoly(std::move(ring), std::move(out));
}

template <Field F>
MultiPoly<F> MultiPoly<F>::from_sorted(RingPtr ring, std::vector<Term> terms) {
    return MultiPoly(std::move(ring), std::move(terms));
}

template <Field F>
void MultiPoly<F>::check_ring(const MultiPoly &o) const {
    if (!same_ring(ring_, o.ring_))
        throw RingMismatch("operands live in different rings");
}

template <Field F>
F MultiPoly<F>::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one())
        return terms_.back().coeff;
    return F::zero();
}

template <Field F>
F MultiPoly<F>::coefficient(const Monomial &m) const {
    for (const auto &t : terms_)
        if (t.mono == m)
            return t.coeff;
    return F::zero();
}

template <Field F>
const typename MultiPoly<F>::Term &MultiPoly<F>::leading_term() const {
    if (terms_.empty())
        throw ZeroPolynomial("leading term of 0");
    return terms_.front();
}

template <Field F>
long MultiPoly<F>::total_degree() const {
    long d = -1;
    for (const auto &t : terms_)
        d = std::max(d, t.mono.total_degree());
    return d;
}

template <Field F>
MultiPoly<F> MultiPoly<F>::monic() const {
    if (is_zero())
        return *this;
    return scaled(leading_coeff().inv());
}

template <Field F>
MultiPoly<F> MultiPoly<F>::scaled(const F &s) const {
    if (s.is_zero())
        return MultiPoly(ring_);
    std::vector<Term> t = terms_;
    for (auto &x : t)
        x.coeff = x.coeff * s;
    return MultiPoly(ring_, std::move(t));
}

template <Field F>
MultiPoly<F> MultiPoly<F>::mul_term(const Monomial &m, const F &c) const {
    if (c.is_zero())
        return MultiPoly(ring_);
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto &x : terms_)
        t.push_back({x.mono * m, x.coeff * c});
    return MultiPoly(ring_, std::move(t));
}

template <Field F>
MultiPoly<F> MultiPoly<F>::pow(unsigned e) const {
    MultiPoly acc = constant(ring_, F::one()), base = *this;
    while (e) {
        if (e & 1u)
            acc = acc * base;
        e >>= 1u;
        if (e)
            base = base * base;
    }
    return acc;
}

template <Field F>
MultiPoly<F> &MultiPoly<F>::operator+=(const MultiPoly &o) {
    check_ring(o);
    terms_ = merge_terms<F>(ring_->order(), terms_, o.terms_, F::one(), nullptr);
    return *this;
}

template <Field F>
MultiPoly<F> &MultiPoly<F>::operator-=(const MultiPoly &o) {
    check_ring(o);
    terms_ = merge_terms<F>(ring_->order(), terms_, o.terms_, -F::one(), nullptr);
    return *this;
}

template <Field F>
MultiPoly<F> MultiPoly<F>::multiply(const MultiPoly &a, const MultiPoly &b) {
    a.check_ring(b);
    const MultiPoly &small = a.size() <= b.size() ? a : b;
    const MultiPoly &large = a.size() <= b.size() ? b : a;
    std::vector<Term> acc;
    for (const auto &t : small.terms_)
        acc = merge_terms<F>(a.ring_->order(), acc, large.terms_, t.coeff, &t.mono);
    return MultiPoly(a.ring_, std::move(acc));
}

template <Field F>
MultiPoly<F> MultiPoly<F>::derivative(std::size_t var) const {
    if (var >= ring_->nvars())
        throw IndexOutOfRange("variable index " + std::to_string(var));
    std::vector<Term> t;
    for (const auto &x : terms_) {
        const Exponent e = x.mono[var];
        if (e == 0)
            continue;
        std::vector<Exponent> ex(x.mono.exponents().begin(), x.mono.exponents().end());
        --ex[var];
        t.push_back({Monomial(ex), x.coeff * F(static_cast<long>(e))});
    }
    // Lowering one exponent can reorder terms under weighted/block orders.
    return from_terms(ring_, std::move(t));
}

template <Field F>
F MultiPoly<F>::evaluate(const std::vector<F> &point) const {
    if (point.size() != ring_->nvars())
        throw RingMismatch("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                           std::to_string(ring_->nvars()) + " variables");
    F acc = F::zero();
    for (const auto &t : terms_) {
        F v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (Exponent k = 0; k < t.mono[i]; ++k)
                v = v * point[i];
        acc = acc + v;
    }
    return acc;
}

template <Field F>
MultiPoly<F> MultiPoly<F>::substitute(const std::vector<MultiPoly> &images) const {
    if (images.size() != ring_->nvars())
        throw RingMismatch("substitution needs one image per variable");
    if (images.empty())
        throw RingMismatch("substitution into a ring without variables");
    const RingPtr &target = images.front().ring_;
    for (const auto &im : images)
        images.front().check_ring(im);
    // Cache powers per variable.
    std::vector<std::vector<MultiPoly>> powers(images.size());
    auto power = [&](std::size_t var, Exponent e) -> const MultiPoly & {
        auto &pw = powers[var];
        if (pw.empty())
            pw.push_back(constant(target, F::one()));
        while (static_cast<Exponent>(pw.size()) <= e)
            pw.push_back(pw.back() * images[var]);
        return pw[static_cast<std::size_t>(e)];
    };
    MultiPoly acc(target);
    for (const auto &t : terms_) {
        MultiPoly v = constant(target, t.coeff);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (t.mono[i] > 0)
                v = v * power(i, t.mono[i]);
        acc += v;
    }
    return acc;
}

template <Field F>
MultiPoly<F> MultiPoly<F>::coefficient_in(std::size_t var, Exponent power) const {
    if (var >= ring_->nvars())
        throw IndexOutOfRange("variable index " + std::to_string(var));
    std::vector<Term> t;
    for (const auto &x : terms_) {
        if (x.mono[var] != power)
            continue;
        std::vector<Exponent> ex(x.mono.exponents().begin(), x.mono.exponents().end());
        ex[var] = 0;
        t.push_back({Monomial(ex), x.coeff});
    }
    return from_terms(ring_, std::move(t));
}

template <Field F>
long MultiPoly<F>::degree_in(std::size_t var) const {
    long d = -1;
    for (const auto &x : terms_)
        d = std::max<long>(d, x.mono[var]);
    return d;
}

template <Field F>
MultiPoly<F> MultiPoly<F>::with_ring(RingPtr ring) const {
    if (!same_variables(ring_, ring))
        throw RingMismatch("with_ring needs identical variables and field");
    return from_terms(std::move(ring), terms_);
}

template <Field F>
MultiPoly<F> MultiPoly<F>::relocate(RingPtr target, const std::vector<long> &index_map) const {
    if (index_map.size() != ring_->nvars())
        throw RingMismatch("relocation map must cover every variable");
    const std::size_t n = target->nvars();
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto &x : terms_) {
        std::vector<Exponent> ex(n, 0);
        for (std::size_t i = 0; i < index_map.size(); ++i) {
            if (x.mono[i] == 0)
                continue;
            if (index_map[i] < 0 || static_cast<std::size_t>(index_map[i]) >= n)
                throw RingMismatch("variable '" + ring_->vars()[i] + "' has no image in the target ring");
            ex[static_cast<std::size_t>(index_map[i])] += x.mono[i];
        }
        t.push_back({Monomial(ex), x.coeff});
    }
    return from_terms(std::move(target), std::move(t));
}

template <Field F>
std::string MultiPoly<F>::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto &t : terms_) {
        std::string c = t.coeff.to_string();
        bool negative = !c.empty() && c.front() == '-';
        if (negative && c.find_first_of("+-", 1) == std::string::npos)
            c.erase(0, 1);
        else
            negative = false;
        if (c.find_first_of("+-/") != std::string::npos)
            c = "(" + c + ")";
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (t.mono.is_one())
            out += c;
        else if (c == "1")
            out += t.mono.to_string(ring_->vars());
        else
            out += c + "*" + t.mono.to_string(ring_->vars());
    }
    return out;
}

template class MultiPoly<Rational>;
template class MultiPoly<RatFunc>;

template std::vector<MultiPoly<Rational>::Term>
merge_terms<Rational>(const MonomialOrder &, const std::vector<MultiPoly<Rational>::Term> &,
                      const std::vector<MultiPoly<Rational>::Term> &, const Rational &, const Monomial *);
template std::vector<MultiPoly<RatFunc>::Term>
merge_terms<RatFunc>(const MonomialOrder &, const std::vector<MultiPoly<RatFunc>::Term> &,
                     const std::vector<MultiPoly<RatFunc>::Term> &, const RatFunc &, const Monomial *);

} // namespace qcohom
