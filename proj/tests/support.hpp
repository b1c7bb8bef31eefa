#ifndef QCOHOM_TESTS_SUPPORT_HPP
#define QCOHOM_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cctype>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcohom/groebner.hpp"

namespace qtest {

using namespace qcohom;
using QPolyRing = RingPtr;
using P = MultiPoly<Rational>;

inline RingPtr ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex()) {
    return PolyRing::make(std::move(vars), std::move(order), CoeffField::specialized(Rational(-1)));
}

inline RingPtr generic_ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex()) {
    return PolyRing::make(std::move(vars), std::move(order), CoeffField::generic());
}

// Sums of terms like "3/2*x^2*y", "-y", "7". No parentheses.
template <Field F = Rational>
MultiPoly<F> parse(const RingPtr &r, const std::string &text) {
    std::vector<typename MultiPoly<F>::Term> terms;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto number = [&] {
        std::size_t j = i;
        while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
            ++j;
        auto s = text.substr(i, j - i);
        i = j;
        return Rational::parse(s);
    };
    skip();
    while (i < text.size()) {
        Rational sign(1);
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-')
                sign = Rational(-1);
            ++i;
            skip();
        }
        Rational c(1);
        std::vector<Exponent> e(r->nvars(), 0);
        for (bool first = true;; first = false) {
            skip();
            if (!first) {
                if (i >= text.size() || text[i] != '*')
                    break;
                ++i;
                skip();
            }
            if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                c = c * number();
                continue;
            }
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            if (j == i)
                throw std::runtime_error("bad polynomial text: " + text);
            const auto v = r->index_of(text.substr(i, j - i));
            i = j;
            Exponent p = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::size_t k = i;
                while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])))
                    ++k;
                p = static_cast<Exponent>(std::stol(text.substr(i, k - i)));
                i = k;
            }
            e[v] += p;
        }
        terms.push_back({Monomial(e), F(sign * c)});
        skip();
    }
    return MultiPoly<F>::from_terms(r, std::move(terms));
}

template <Field F = Rational>
std::vector<MultiPoly<F>> parse_all(const RingPtr &r, const std::vector<std::string> &texts) {
    std::vector<MultiPoly<F>> out;
    for (const auto &t : texts)
        out.push_back(parse<F>(r, t));
    return out;
}

template <Field F = Rational>
Ideal<F> ideal(const RingPtr &r, const std::vector<std::string> &texts) {
    return Ideal<F>(r, parse_all<F>(r, texts));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : e_(seed) {}
    long uniform(long lo, long hi) { return lo + static_cast<long>(e_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    Rational rational() { return Rational(uniform(-5, 5), uniform(1, 4)); }
    Rational nonzero() {
        for (;;)
            if (auto r = rational(); !r.is_zero())
                return r;
    }
    std::mt19937_64 &engine() { return e_; }

private:
    std::mt19937_64 e_;
};

// Random polynomial with `count` terms of total degree in [lo, hi].
inline P random_poly(const RingPtr &r, Rng &rng, int count, int lo, int hi) {
    std::vector<P::Term> t;
    for (int k = 0; k < count; ++k) {
        std::vector<Exponent> e(r->nvars(), 0);
        const long d = rng.uniform(lo, hi);
        for (long s = 0; s < d; ++s)
            ++e[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(r->nvars()) - 1))];
        t.push_back({Monomial(e), rng.nonzero()});
    }
    return P::from_terms(r, std::move(t));
}

// Zero-dimensional by construction: x_i^{d_i} plus terms of lower total
// degree. With through_origin, no constant terms, so V(I) contains 0.
inline std::vector<P> random_zero_dim(const RingPtr &r, Rng &rng, bool through_origin, int max_deg = 3) {
    std::vector<P> gens;
    for (std::size_t v = 0; v < r->nvars(); ++v) {
        const auto d = static_cast<Exponent>(rng.uniform(2, max_deg));
        auto g = P::term(r, Monomial::var_power(r->nvars(), v, d), Rational(1));
        g += random_poly(r, rng, static_cast<int>(rng.uniform(1, 3)), through_origin ? 1 : 0, d - 1);
        gens.push_back(std::move(g));
    }
    return gens;
}

// Independent oracle: plain multivariate division and Buchberger without
// criteria or pair selection heuristics, over the ring's own order.
template <Field F>
MultiPoly<F> naive_remainder(MultiPoly<F> p, const std::vector<MultiPoly<F>> &g) {
    MultiPoly<F> rem(p.ring());
    while (!p.is_zero()) {
        const auto lt = p.leading_term();
        bool divided = false;
        for (const auto &h : g) {
            if (h.is_zero() || !h.leading_monomial().divides(lt.mono))
                continue;
            p -= h.mul_term(lt.mono / h.leading_monomial(), lt.coeff / h.leading_coeff());
            divided = true;
            break;
        }
        if (!divided) {
            const auto t = MultiPoly<F>::term(p.ring(), lt.mono, lt.coeff);
            rem += t;
            p -= t;
        }
    }
    return rem;
}

template <Field F>
MultiPoly<F> s_poly(const MultiPoly<F> &f, const MultiPoly<F> &g) {
    const auto l = lcm(f.leading_monomial(), g.leading_monomial());
    return f.mul_term(l / f.leading_monomial(), f.leading_coeff().inv()) -
           g.mul_term(l / g.leading_monomial(), g.leading_coeff().inv());
}

// True when every S-polynomial of g reduces to zero modulo g.
template <Field F>
bool satisfies_buchberger_criterion(const std::vector<MultiPoly<F>> &g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!naive_remainder(s_poly(g[i], g[j]), g).is_zero())
                return false;
    return true;
}

template <Field F>
std::vector<MultiPoly<F>> naive_reduced_gb(std::vector<MultiPoly<F>> g) {
    std::erase_if(g, [](const MultiPoly<F> &p) { return p.is_zero(); });
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        const auto [i, j] = pairs.back();
        pairs.pop_back();
        auto r = naive_remainder(s_poly(g[i], g[j]), g);
        if (r.is_zero())
            continue;
        g.push_back(r.monic());
        for (std::size_t k = 0; k + 1 < g.size(); ++k)
            pairs.emplace_back(k, g.size() - 1);
    }
    std::vector<MultiPoly<F>> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j || !g[j].leading_monomial().divides(g[i].leading_monomial()))
                continue;
            redundant = g[i].leading_monomial() != g[j].leading_monomial() || j < i;
        }
        if (!redundant)
            minimal.push_back(g[i].monic());
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        auto others = minimal;
        others.erase(others.begin() + static_cast<long>(i));
        minimal[i] = naive_remainder(minimal[i], others).monic();
    }
    const MonomialOrder order = minimal.empty() ? MonomialOrder::grevlex() : minimal.front().ring()->order();
    std::sort(minimal.begin(), minimal.end(), [&](const MultiPoly<F> &a, const MultiPoly<F> &b) {
        return order.less(a.leading_monomial(), b.leading_monomial());
    });
    return minimal;
}

} // namespace qtest

#endif
