#include "qcohom/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "qcohom/errors.hpp"

namespace qcohom {

namespace {

template <Field F>
using Terms = std::vector<typename MultiPoly<F>::Term>;

// p[start:] + factor * shift * g, for g sorted descending.
template <Field F>
Terms<F> add_multiple(const MonomialOrder &order, const Terms<F> &p, std::size_t start, const Terms<F> &g,
                      const F &factor, const Monomial &shift) {
    Terms<F> out;
    out.reserve(p.size() - start + g.size());
    std::size_t i = start, j = 0;
    while (i < p.size() && j < g.size()) {
        Monomial m = g[j].mono * shift;
        const auto c = order.compare(p[i].mono, m);
        if (c > 0) {
            out.push_back(p[i++]);
        } else if (c < 0) {
            out.push_back({std::move(m), g[j++].coeff * factor});
        } else {
            F s = p[i].coeff + g[j].coeff * factor;
            if (!s.is_zero())
                out.push_back({std::move(m), std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < p.size(); ++i)
        out.push_back(p[i]);
    for (; j < g.size(); ++j)
        out.push_back({g[j].mono * shift, g[j].coeff * factor});
    return out;
}

// Full reduction of p by the monic polynomials in `by` (skipping index
// `skip`), using a heap of pending terms. All share `order`. With `sugar`
// set, it is raised to sugar_degree(shift) + by_sugar[k] for every
// reduction step by by[k].
template <Field F>
Terms<F> reduce(const MonomialOrder &order, Terms<F> p, const std::vector<const MultiPoly<F> *> &by,
                std::size_t skip = static_cast<std::size_t>(-1), const std::vector<long> *by_sugar = nullptr,
                long *sugar = nullptr) {
    using Term = typename MultiPoly<F>::Term;
    auto heap_less = [&order](const Term &a, const Term &b) { return order.less(a.mono, b.mono); };
    std::vector<Term> heap = std::move(p);
    std::make_heap(heap.begin(), heap.end(), heap_less);
    Terms<F> rem;
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), heap_less);
        Term lead = std::move(heap.back());
        heap.pop_back();
        while (!heap.empty() && heap.front().mono == lead.mono) {
            std::pop_heap(heap.begin(), heap.end(), heap_less);
            lead.coeff = lead.coeff + heap.back().coeff;
            heap.pop_back();
        }
        if (lead.coeff.is_zero())
            continue;
        std::size_t found = by.size();
        for (std::size_t k = 0; k < by.size(); ++k) {
            if (k != skip && by[k]->leading_monomial().divides(lead.mono)) {
                found = k;
                break;
            }
        }
        if (found == by.size()) {
            rem.push_back(std::move(lead));
            continue;
        }
        const MultiPoly<F> *divisor = by[found];
        const Monomial shift = lead.mono / divisor->leading_monomial();
        if (sugar)
            *sugar = std::max(*sugar, order.sugar_degree(shift) + (*by_sugar)[found]);
        const F factor = -lead.coeff; // divisor is monic
        const auto &dt = divisor->terms();
        for (std::size_t k = 1; k < dt.size(); ++k) {
            heap.push_back({dt[k].mono * shift, dt[k].coeff * factor});
            std::push_heap(heap.begin(), heap.end(), heap_less);
        }
    }
    return rem;
}

template <Field F>
MultiPoly<F> s_polynomial(const MultiPoly<F> &a, const MultiPoly<F> &b) {
    const Monomial l = lcm(a.leading_monomial(), b.leading_monomial());
    auto ta = a.mul_term(l / a.leading_monomial(), F::one());
    auto tb = b.mul_term(l / b.leading_monomial(), F::one());
    return ta - tb;
}

std::string fresh_name(const std::vector<std::string> &vars, const std::string &base) {
    std::string name = base;
    for (int k = 0; std::find(vars.begin(), vars.end(), name) != vars.end(); ++k)
        name = base + std::to_string(k);
    return name;
}

} // namespace

template <Field F>
class GroebnerEngine {
public:
    static ReducedGB<F> run(const Ideal<F> &ideal, const MonomialOrder &order) {
        if (ideal.generators().empty())
            throw EmptyGeneratorList("Groebner basis of an ideal without nonzero generators");
        const RingPtr ring = ideal.ring()->with_order(order);

        std::vector<MultiPoly<F>> g;
        for (const auto &f : ideal.generators())
            g.push_back(f.with_ring(ring).monic());
        if (!interreduce(ring, g))
            return unit(ring);

        const bool lex = order.kind() == MonomialOrder::Kind::Lex;
        PairQueue queue(order);
        std::vector<std::vector<PairState>> state; // state[j][i], i < j
        std::vector<long> sugar_of;
        for (const auto &x : g) {
            long d = 0;
            for (const auto &t : x.terms())
                d = std::max(d, order.sugar_degree(t.mono));
            sugar_of.push_back(d);
        }
        auto add_pairs = [&](std::size_t idx) {
            state.emplace_back(idx, PairState::None);
            for (std::size_t k = 0; k < idx; ++k) {
                Monomial l = lcm(g[k].leading_monomial(), g[idx].leading_monomial());
                const long d = order.sugar_degree(l);
                const long sugar = std::max(sugar_of[k] + d - order.sugar_degree(g[k].leading_monomial()),
                                            sugar_of[idx] + d - order.sugar_degree(g[idx].leading_monomial()));
                queue.insert({sugar, std::move(l), k, idx});
                state[idx][k] = PairState::Pending;
            }
        };
        for (std::size_t j = 0; j < g.size(); ++j)
            add_pairs(j);
        auto is_done = [&](std::size_t a, std::size_t b) {
            return (a < b ? state[b][a] : state[a][b]) == PairState::Done;
        };

        while (!queue.empty()) {
            // Smallest sugar first (degree orders), then smallest lcm, then index.
            const PairEntry p = *queue.begin();
            queue.erase(queue.begin());
            state[p.j][p.i] = PairState::Done;

            const Monomial &li = g[p.i].leading_monomial();
            const Monomial &lj = g[p.j].leading_monomial();
            if (coprime(li, lj))
                continue;
            if (chain_criterion(g, is_done, p))
                continue;

            auto s = s_polynomial(g[p.i], g[p.j]);
            std::vector<std::size_t> live(g.size());
            std::iota(live.begin(), live.end(), 0);
            // Lex reductions use the smallest applicable divisor first.
            if (lex)
                std::stable_sort(live.begin(), live.end(), [&](std::size_t a, std::size_t b) {
                    return order.less(g[a].leading_monomial(), g[b].leading_monomial());
                });
            std::vector<const MultiPoly<F> *> by;
            std::vector<long> by_sugar;
            for (auto k : live) {
                by.push_back(&g[k]);
                by_sugar.push_back(sugar_of[k]);
            }
            long sugar = p.sugar;
            auto r = MultiPoly<F>::from_sorted(ring, reduce<F>(order, s.terms(), by, by.size(), &by_sugar, &sugar));
            if (r.is_zero())
                continue;
            r = r.monic();
            if (r.is_constant())
                return unit(ring);
            g.push_back(std::move(r));
            sugar_of.push_back(sugar);
            add_pairs(g.size() - 1);
        }
        return finalize(ring, std::move(g));
    }

    static ReducedGB<F> make(RingPtr ring, std::vector<MultiPoly<F>> basis) {
        return ReducedGB<F>(std::move(ring), std::move(basis));
    }

private:
    static ReducedGB<F> unit(const RingPtr &ring) {
        return ReducedGB<F>(ring, {MultiPoly<F>::constant(ring, F::one())});
    }

    // Replaces g by an autoreduced, monic generating set of the same ideal.
    // Returns false when a nonzero constant appears.
    static bool interreduce(const RingPtr &ring, std::vector<MultiPoly<F>> &g) {
        const auto &order = ring->order();
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto &x : g)
                if (x.is_constant())
                    return false;
            for (std::size_t i = 0; i < g.size() && !changed; ++i) {
                std::vector<const MultiPoly<F> *> by;
                for (const auto &x : g)
                    by.push_back(&x);
                auto r = MultiPoly<F>::from_sorted(ring, reduce<F>(order, g[i].terms(), by, i));
                if (r == g[i])
                    continue;
                changed = true;
                if (r.is_zero())
                    g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
                else
                    g[i] = r.monic();
            }
        }
        return true;
    }

    enum class PairState : char { None, Pending, Done };

    struct PairEntry {
        long sugar;
        Monomial lcm;
        std::size_t i, j;
    };

    struct PairLess {
        const MonomialOrder *order;
        bool operator()(const PairEntry &a, const PairEntry &b) const {
            // Lex uses the normal strategy: sugar is ignored.
            if (order->kind() != MonomialOrder::Kind::Lex && a.sugar != b.sugar)
                return a.sugar < b.sugar;
            const auto c = order->compare(a.lcm, b.lcm);
            if (c != 0)
                return c < 0;
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        }
    };

    struct PairQueue : std::set<PairEntry, PairLess> {
        explicit PairQueue(const MonomialOrder &order) : std::set<PairEntry, PairLess>(PairLess{&order}) {}
    };

    // Buchberger's second criterion: some g_k with LM dividing lcm(i, j)
    // whose pairs with i and j have both been treated.
    template <class Done>
    static bool chain_criterion(const std::vector<MultiPoly<F>> &g, const Done &is_done, const PairEntry &p) {
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (k == p.i || k == p.j)
                continue;
            if (!g[k].leading_monomial().divides(p.lcm))
                continue;
            if (!is_done(p.i, k) || !is_done(p.j, k))
                continue;
            return true;
        }
        return false;
    }

    static ReducedGB<F> finalize(const RingPtr &ring, std::vector<MultiPoly<F>> g) {
        const auto &order = ring->order();
        // Minimal basis: drop elements whose leading monomial is divisible by
        // another's (keeping the earliest among equal leading monomials).
        std::vector<MultiPoly<F>> minimal;
        for (std::size_t i = 0; i < g.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
                if (i == j)
                    continue;
                const auto &li = g[i].leading_monomial();
                const auto &lj = g[j].leading_monomial();
                if (lj.divides(li) && (lj != li || j < i))
                    redundant = true;
            }
            if (!redundant)
                minimal.push_back(g[i]);
        }
        std::sort(minimal.begin(), minimal.end(), [&order](const MultiPoly<F> &a, const MultiPoly<F> &b) {
            return order.less(a.leading_monomial(), b.leading_monomial());
        });
        std::vector<const MultiPoly<F> *> by;
        for (const auto &x : minimal)
            by.push_back(&x);
        std::vector<MultiPoly<F>> reduced;
        reduced.reserve(minimal.size());
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            const auto &lt = minimal[i].leading_term();
            typename MultiPoly<F>::Term head = lt;
            Terms<F> tail(minimal[i].terms().begin() + 1, minimal[i].terms().end());
            Terms<F> t = reduce<F>(order, std::move(tail), by, i);
            t.insert(t.begin(), head);
            reduced.push_back(MultiPoly<F>::from_sorted(ring, std::move(t)).monic());
        }
        return ReducedGB<F>(ring, std::move(reduced));
    }
};

template <Field F>
std::vector<Monomial> ReducedGB<F>::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(basis_.size());
    for (const auto &g : basis_)
        out.push_back(g.leading_monomial());
    return out;
}

template <Field F>
Ideal<F>::Ideal(RingPtr ring, std::vector<MultiPoly<F>> generators) : ring_(std::move(ring)) {
    for (auto &g : generators) {
        if (!same_variables(g.ring(), ring_))
            throw RingMismatch("ideal generator outside the ideal's ring");
        if (g.is_zero())
            continue;
        gens_.push_back(same_ring(g.ring(), ring_) ? std::move(g) : g.with_ring(ring_));
    }
}

template <Field F>
Ideal<F>::Ideal(std::vector<MultiPoly<F>> generators) {
    if (generators.empty())
        throw EmptyGeneratorList("cannot infer a ring from no generators");
    *this = Ideal(generators.front().ring(), std::move(generators));
}

template <Field F>
std::shared_ptr<const ReducedGB<F>> Ideal<F>::gb(const MonomialOrder &order) const {
    std::lock_guard lock(cache_->mu);
    for (const auto &[o, basis] : cache_->entries)
        if (o == order)
            return basis;
    auto basis = std::make_shared<const ReducedGB<F>>(GroebnerEngine<F>::run(*this, order));
    cache_->entries.emplace_back(order, basis);
    return basis;
}

template <Field F>
ReducedGB<F> buchberger(const Ideal<F> &ideal, const MonomialOrder &order) {
    return GroebnerEngine<F>::run(ideal, order);
}

template <Field F>
MultiPoly<F> normal_form(const MultiPoly<F> &f, const ReducedGB<F> &g) {
    if (!same_variables(f.ring(), g.ring()))
        throw RingMismatch("normal form of a polynomial from another ring");
    const auto p = same_ring(f.ring(), g.ring()) ? f : f.with_ring(g.ring());
    std::vector<const MultiPoly<F> *> by;
    for (const auto &x : g.basis())
        by.push_back(&x);
    return MultiPoly<F>::from_sorted(g.ring(), reduce<F>(g.order(), p.terms(), by));
}

template <Field F>
std::optional<std::vector<Monomial>> standard_monomials(const ReducedGB<F> &g) {
    const std::size_t n = g.ring()->nvars();
    if (g.is_unit_ideal())
        return std::vector<Monomial>{};
    const auto leads = g.leading_monomials();
    std::vector<Exponent> bound(n, -1);
    for (const auto &m : leads) {
        const long v = m.pure_power_var();
        if (v < 0)
            continue;
        const auto i = static_cast<std::size_t>(v);
        if (bound[i] < 0 || m[i] < bound[i])
            bound[i] = m[i];
    }
    if (std::any_of(bound.begin(), bound.end(), [](Exponent b) { return b < 0; }))
        return std::nullopt;

    std::vector<Monomial> out;
    std::vector<Exponent> e(n, 0);
    // Depth-first walk over the box. Divisibility is monotone, so once the
    // prefix (with a zero tail) is divisible by a leading monomial, larger
    // exponents in the current coordinate are too.
    auto divisible = [&leads](const Monomial &m) {
        return std::any_of(leads.begin(), leads.end(), [&m](const Monomial &l) { return l.divides(m); });
    };
    auto visit = [&](auto &&self, std::size_t var) -> void {
        if (var == n) {
            out.emplace_back(e);
            return;
        }
        for (Exponent k = 0; k < bound[var]; ++k) {
            e[var] = k;
            if (divisible(Monomial(e)))
                break;
            self(self, var + 1);
        }
        e[var] = 0;
    };
    visit(visit, 0);
    const auto &order = g.order();
    std::sort(out.begin(), out.end(), [&order](const Monomial &a, const Monomial &b) { return order.less(a, b); });
    return out;
}

template <Field F>
std::optional<std::size_t> quotient_dim(const Ideal<F> &ideal) {
    if (ideal.generators().empty())
        return std::nullopt;
    auto sm = standard_monomials(*ideal.gb());
    if (!sm)
        return std::nullopt;
    return sm->size();
}

template <Field F>
bool ideal_contains(const Ideal<F> &ideal, const MultiPoly<F> &f) {
    if (f.is_zero())
        return true;
    if (ideal.generators().empty())
        return false;
    return normal_form(f, *ideal.gb()).is_zero();
}

template <Field F>
Ideal<F> ideal_sum(const Ideal<F> &a, const Ideal<F> &b) {
    if (!same_variables(a.ring(), b.ring()))
        throw RingMismatch("sum of ideals in different rings");
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal<F>(a.ring(), std::move(gens));
}

template <Field F>
Ideal<F> intersect(const Ideal<F> &a, const Ideal<F> &b) {
    if (!same_variables(a.ring(), b.ring()))
        throw RingMismatch("intersection of ideals in different rings");
    const RingPtr &ring = a.ring();
    if (a.generators().empty() || b.generators().empty())
        return Ideal<F>(ring, {});

    std::vector<std::string> vars{fresh_name(ring->vars(), "_tag")};
    vars.insert(vars.end(), ring->vars().begin(), ring->vars().end());
    const RingPtr tagged = PolyRing::make(vars, MonomialOrder::block({0}), ring->field());
    std::vector<long> up(ring->nvars()), down(tagged->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        up[i] = static_cast<long>(i + 1);
        down[i + 1] = static_cast<long>(i);
    }
    down[0] = -1;

    const auto t = MultiPoly<F>::variable(tagged, 0);
    const auto one_minus_t = MultiPoly<F>::constant(tagged, F::one()) - t;
    std::vector<MultiPoly<F>> gens;
    for (const auto &f : a.generators())
        gens.push_back(t * f.relocate(tagged, up));
    for (const auto &g : b.generators())
        gens.push_back(one_minus_t * g.relocate(tagged, up));

    const Ideal<F> big(tagged, std::move(gens));
    std::vector<MultiPoly<F>> out;
    for (const auto &g : big.gb()->basis())
        if (g.degree_in(0) <= 0)
            out.push_back(g.relocate(ring, down));
    return Ideal<F>(ring, std::move(out));
}

namespace {

// Exact quotient p / f; p must lie in (f).
template <Field F>
MultiPoly<F> divide_exact(const MultiPoly<F> &p, const MultiPoly<F> &f) {
    const auto &order = p.ring()->order();
    Terms<F> rest = p.terms();
    std::vector<typename MultiPoly<F>::Term> quotient;
    const F inv_lead = f.leading_coeff().inv();
    while (!rest.empty()) {
        const auto &lead = rest.front();
        if (!f.leading_monomial().divides(lead.mono))
            throw InconsistentInput("polynomial is not a multiple of the divisor");
        const Monomial shift = lead.mono / f.leading_monomial();
        const F c = lead.coeff * inv_lead;
        quotient.push_back({shift, c});
        rest = add_multiple<F>(order, rest, 0, f.terms(), -c, shift);
    }
    return MultiPoly<F>::from_terms(p.ring(), std::move(quotient));
}

} // namespace

template <Field F>
Ideal<F> ideal_quotient(const Ideal<F> &ideal, const MultiPoly<F> &f) {
    if (f.is_zero())
        throw ZeroDivisorPolynomial("ideal quotient by 0");
    const RingPtr &ring = ideal.ring();
    if (!same_variables(f.ring(), ring))
        throw RingMismatch("ideal quotient by a polynomial from another ring");
    const auto fr = same_ring(f.ring(), ring) ? f : f.with_ring(ring);
    const Ideal<F> meet = intersect(ideal, Ideal<F>(ring, {fr}));
    std::vector<MultiPoly<F>> gens;
    for (const auto &g : meet.generators())
        gens.push_back(divide_exact(g, fr));
    return Ideal<F>(ring, std::move(gens));
}

template <Field F>
Ideal<F> saturate_at_origin(const Ideal<F> &ideal) {
    auto dim = quotient_dim(ideal);
    if (!dim)
        throw NotZeroDimensional("saturation needs a zero-dimensional ideal");
    Ideal<F> current(ideal.ring(), ideal.gb()->basis());
    const RingPtr &ring = ideal.ring();
    for (;;) {
        std::optional<Ideal<F>> next;
        for (std::size_t v = 0; v < ring->nvars(); ++v) {
            auto colon = ideal_quotient(current, MultiPoly<F>::variable(ring, v));
            next = next ? intersect(*next, colon) : colon;
        }
        if (!next) // ring without variables
            return current;
        Ideal<F> reduced(ring, next->gb()->basis());
        const auto next_dim = quotient_dim(reduced);
        if (*next_dim == *dim)
            return reduced;
        dim = next_dim;
        current = std::move(reduced);
    }
}

template <Field F>
std::vector<MultiPoly<F>> maximal_ideal_power(const RingPtr &ring, unsigned k) {
    const std::size_t n = ring->nvars();
    std::vector<MultiPoly<F>> out;
    std::vector<Exponent> e(n, 0);
    auto walk = [&](auto &&self, std::size_t var, unsigned left) -> void {
        if (var + 1 == n) {
            e[var] = static_cast<Exponent>(left);
            out.push_back(MultiPoly<F>::term(ring, Monomial(e), F::one()));
            return;
        }
        for (unsigned d = 0; d <= left; ++d) {
            e[var] = static_cast<Exponent>(d);
            self(self, var + 1, left - d);
        }
    };
    if (n == 0)
        return out;
    walk(walk, 0, k);
    return out;
}

template <Field F>
std::size_t local_dim_at_origin(const Ideal<F> &ideal) {
    const auto total = quotient_dim(ideal);
    if (!total)
        throw NotZeroDimensional("local length needs a zero-dimensional ideal");
    std::size_t previous = 0;
    for (unsigned k = 1; k <= *total + 1; ++k) {
        const Ideal<F> truncated(ideal.ring(), maximal_ideal_power<F>(ideal.ring(), k));
        const auto d = quotient_dim(ideal_sum(ideal, truncated));
        if (*d == 0)
            return 0;
        if (k > 1 && *d == previous)
            return *d;
        previous = *d;
    }
    return previous;
}

#define QCOHOM_INSTANTIATE(F)                                                                        \
    template class ReducedGB<F>;                                                                     \
    template class Ideal<F>;                                                                         \
    template ReducedGB<F> buchberger(const Ideal<F> &, const MonomialOrder &);                       \
    template MultiPoly<F> normal_form(const MultiPoly<F> &, const ReducedGB<F> &);                   \
    template std::optional<std::vector<Monomial>> standard_monomials(const ReducedGB<F> &);          \
    template std::optional<std::size_t> quotient_dim(const Ideal<F> &);                              \
    template bool ideal_contains(const Ideal<F> &, const MultiPoly<F> &);                             \
    template Ideal<F> ideal_sum(const Ideal<F> &, const Ideal<F> &);                                 \
    template Ideal<F> intersect(const Ideal<F> &, const Ideal<F> &);                                 \
    template Ideal<F> ideal_quotient(const Ideal<F> &, const MultiPoly<F> &);                        \
    template Ideal<F> saturate_at_origin(const Ideal<F> &);                                          \
    template std::size_t local_dim_at_origin(const Ideal<F> &);                                      \
    template std::vector<MultiPoly<F>> maximal_ideal_power(const RingPtr &, unsigned);

QCOHOM_INSTANTIATE(Rational)
QCOHOM_INSTANTIATE(RatFunc)

#undef QCOHOM_INSTANTIATE

} // namespace qcohom
