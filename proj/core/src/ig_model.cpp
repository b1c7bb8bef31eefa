#include "qcohom/ig_model.hpp"

#include "qcohom/errors.hpp"
#include "qcohom/poly_matrix.hpp"
#include "qcohom/unipoly.hpp"

namespace qcohom::ig {

namespace {

void check_n(int n) {
    if (n < 2)
        throw UnsupportedN("n = " + std::to_string(n) + "; IG(2, 2n) needs n >= 2");
}

int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

// Polynomials in an auxiliary variable x with MultiPoly coefficients,
// lowest power first.
template <Field F>
using XSeries = std::vector<MultiPoly<F>>;

template <Field F>
XSeries<F> series_mul(const XSeries<F> &a, const XSeries<F> &b) {
    const RingPtr &ring = a.front().ring();
    XSeries<F> out(a.size() + b.size() - 1, MultiPoly<F>(ring));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero())
                out[i + j] += a[i] * b[j];
    }
    return out;
}

// P(sign * x) with P(x) = 1 + a1 x + a2 x^2.
template <Field F>
XSeries<F> chern_u(const RingPtr &ring, int sign) {
    const auto one = MultiPoly<F>::constant(ring, F::one());
    return {one, MultiPoly<F>::variable(ring, 0).scaled(F(static_cast<long>(sign))), MultiPoly<F>::variable(ring, 1)};
}

// Q(x) = 1 + b1 x^2 + ... + b_{n-2} x^{2n-4}.
template <Field F>
XSeries<F> chern_perp(const RingPtr &ring, int n) {
    XSeries<F> q(static_cast<std::size_t>(2 * n - 3), MultiPoly<F>(ring));
    q[0] = MultiPoly<F>::constant(ring, F::one());
    for (int i = 1; i <= n - 2; ++i)
        q[static_cast<std::size_t>(2 * i)] = MultiPoly<F>::variable(ring, static_cast<std::size_t>(1 + i));
    return q;
}

template <Field F>
std::vector<MultiPoly<F>> sigma_relations(int n, const RingPtr &ring, bool quantum, bool deformed, const F &q) {
    const int top = 2 * n - 2;
    auto sigma = [&](int k) {
        if (k == 0)
            return MultiPoly<F>::constant(ring, F::one());
        if (k < 0 || k > top)
            return MultiPoly<F>(ring);
        return MultiPoly<F>::variable(ring, static_cast<std::size_t>(k - 1));
    };
    std::vector<MultiPoly<F>> rel;
    // det(sigma_{1+j-i}) for r in [3, 2n-2]
    for (int r = 3; r <= top; ++r) {
        PolyMatrix<F> m(static_cast<std::size_t>(r));
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j)
                m[static_cast<std::size_t>(i - 1)].push_back(sigma(1 + j - i));
        rel.push_back(det_poly_matrix(m));
    }
    const F two(2L);
    auto s_low = sigma(n - 1) * sigma(n - 1);
    for (int i = 1; i <= n - 1; ++i)
        s_low += (sigma(n - 1 + i) * sigma(n - 1 - i)).scaled(two * F(static_cast<long>(sign_pow(i))));
    if (deformed) {
        const auto t = MultiPoly<F>::variable(ring, static_cast<std::size_t>(top));
        s_low += t.scaled(q * F(static_cast<long>(sign_pow(n + 1))));
    }
    auto s_high = sigma(n) * sigma(n);
    for (int i = 1; i <= n - 2; ++i)
        s_high += (sigma(n + i) * sigma(n - i)).scaled(two * F(static_cast<long>(sign_pow(i))));
    if (quantum)
        s_high += sigma(1).scaled(q * F(static_cast<long>(sign_pow(n + 1))));
    rel.push_back(std::move(s_low));
    rel.push_back(std::move(s_high));
    return rel;
}

template <Field F>
std::vector<MultiPoly<F>> ab_relations(int n, const RingPtr &ring, bool quantum, const F &q) {
    const auto product = series_mul(series_mul(chern_u<F>(ring, 1), chern_u<F>(ring, -1)), chern_perp<F>(ring, n));
    std::vector<MultiPoly<F>> rel;
    for (int k = 1; k <= n; ++k) {
        const auto idx = static_cast<std::size_t>(2 * k);
        MultiPoly<F> c = idx < product.size() ? product[idx] : MultiPoly<F>(ring);
        if (quantum && k == n)
            c -= MultiPoly<F>::variable(ring, 0).scaled(q);
        rel.push_back(std::move(c));
    }
    return rel;
}

} // namespace

std::string to_string(Variant v) {
    switch (v) {
    case Variant::SigmaClassical: return "SigmaClassical";
    case Variant::SigmaQuantum: return "SigmaQuantum";
    case Variant::ABClassical: return "ABClassical";
    case Variant::ABQuantum: return "ABQuantum";
    case Variant::SigmaBigTauFirstOrder: return "SigmaBigTauFirstOrder";
    }
    return "?";
}

Variant parse_variant(const std::string &name) {
    for (auto v : {Variant::SigmaClassical, Variant::SigmaQuantum, Variant::ABClassical, Variant::ABQuantum,
                   Variant::SigmaBigTauFirstOrder})
        if (to_string(v) == name)
            return v;
    throw ConfigError("unknown presentation '" + name + "'");
}

RingPtr model_ring(int n, Variant v, const CoeffField &coeff) {
    check_n(n);
    std::vector<std::string> vars;
    if (is_sigma(v)) {
        for (int i = 1; i <= 2 * n - 2; ++i)
            vars.push_back("s" + std::to_string(i));
        if (v == Variant::SigmaBigTauFirstOrder)
            vars.emplace_back("t");
    } else {
        vars = {"a1", "a2"};
        for (int i = 1; i <= n - 2; ++i)
            vars.push_back("b" + std::to_string(i));
    }
    return PolyRing::make(std::move(vars), MonomialOrder::grevlex(), coeff);
}

GradingSpec model_grading(int n, Variant v) {
    check_n(n);
    GradingSpec g;
    g.q_weight = 2L * n - 1;
    if (is_sigma(v)) {
        for (long i = 1; i <= 2L * n - 2; ++i)
            g.var_weights.push_back(i);
        if (v == Variant::SigmaBigTauFirstOrder)
            g.var_weights.push_back(-1);
    } else {
        g.var_weights = {1, 2};
        for (long i = 1; i <= n - 2; ++i)
            g.var_weights.push_back(2 * i);
    }
    return g;
}

template <Field F>
ModelPresentation<F> build_relations(const PresentationSpec &spec, const F &q) {
    ModelPresentation<F> out;
    out.spec = spec;
    out.ring = model_ring(spec.n, spec.variant, spec.coeff);
    out.grading = model_grading(spec.n, spec.variant);
    const bool quantum = is_quantum(spec.variant);
    if (is_sigma(spec.variant))
        out.relations = sigma_relations<F>(spec.n, out.ring, quantum,
                                           spec.variant == Variant::SigmaBigTauFirstOrder, q);
    else
        out.relations = ab_relations<F>(spec.n, out.ring, quantum, q);
    return out;
}

template <Field F>
ModelPresentation<F> build_relations(const PresentationSpec &spec) {
    return build_relations<F>(spec, q_element<F>(spec.coeff));
}

template <Field F>
ModelPresentation<F> specialize_t(const ModelPresentation<F> &deformed, const F &t0) {
    if (deformed.spec.variant != Variant::SigmaBigTauFirstOrder)
        throw InconsistentInput("specialize_t needs the deformed sigma presentation");
    ModelPresentation<F> out;
    out.spec = deformed.spec;
    out.spec.variant = Variant::SigmaQuantum;
    out.ring = model_ring(out.spec.n, Variant::SigmaQuantum, out.spec.coeff);
    out.grading = model_grading(out.spec.n, Variant::SigmaQuantum);
    const std::size_t nsigma = out.ring->nvars();
    std::vector<MultiPoly<F>> images;
    for (std::size_t i = 0; i < nsigma; ++i)
        images.push_back(MultiPoly<F>::variable(out.ring, i));
    images.push_back(MultiPoly<F>::constant(out.ring, t0));
    for (const auto &r : deformed.relations)
        out.relations.push_back(r.substitute(images));
    return out;
}

ExpectedCounts expected_counts(int n) {
    check_n(n);
    const long m = n;
    return {2 * m * (m - 1), (2 * m - 1) * (m - 1), m - 1, 2 * m - 2, m - 2};
}

template <Field F>
MultiPoly<F> sigma_in_ab(int n, int k, const RingPtr &ab_ring) {
    check_n(n);
    if (k < 0 || k > 2 * n - 2)
        throw IndexOutOfRange("sigma_" + std::to_string(k) + " outside [0, " + std::to_string(2 * n - 2) + "]");
    if (ab_ring->nvars() != static_cast<std::size_t>(n))
        throw RingMismatch("ab ring for n = " + std::to_string(n) + " has " + std::to_string(n) + " variables");
    const auto series = series_mul(chern_u<F>(ab_ring, -1), chern_perp<F>(ab_ring, n));
    const auto idx = static_cast<std::size_t>(k);
    return idx < series.size() ? series[idx] : MultiPoly<F>(ab_ring);
}

template <Field F>
CompatResult presentation_compat(int n, const CoeffField &coeff, bool quantum) {
    const PresentationSpec ab_spec{n, quantum ? Variant::ABQuantum : Variant::ABClassical, coeff};
    const auto ab = build_relations<F>(ab_spec);
    const auto gb = ab.ideal().gb();
    std::vector<MultiPoly<F>> images;
    for (int k = 1; k <= 2 * n - 2; ++k)
        images.push_back(sigma_in_ab<F>(n, k, ab.ring));

    auto vanishes = [&](const F &q) {
        const PresentationSpec s_spec{n, quantum ? Variant::SigmaQuantum : Variant::SigmaClassical, coeff};
        const auto sigma = build_relations<F>(s_spec, q);
        for (const auto &r : sigma.relations)
            if (!normal_form(r.substitute(images), *gb).is_zero())
                return false;
        return true;
    };

    CompatResult res;
    if (!quantum) {
        res.vanishes_untwisted = res.vanishes_twisted = vanishes(F::zero());
        res.well_defined = res.vanishes_untwisted;
        res.q_twist = 1;
        return res;
    }
    const F q = q_element<F>(coeff);
    res.vanishes_untwisted = vanishes(q);
    res.vanishes_twisted = vanishes(-q);
    res.well_defined = res.vanishes_untwisted != res.vanishes_twisted;
    res.q_twist = res.vanishes_untwisted ? 1 : (res.vanishes_twisted ? -1 : 0);
    return res;
}

ZCountResult z_count(int n) {
    check_n(n);
    const auto z = QPoly::x();
    const auto two_n = static_cast<unsigned>(2 * n);
    const QPoly z_2n = z.pow(two_n);
    const QPoly f = (z_2n - z).pow(two_n) - z_2n;
    const QPoly distinct = squarefree_part(f);
    // z = 0 and the diagonal z1 = z2, i.e. z^{2n} - 2z = 0.
    const QPoly excluded = z_2n - z.scaled(Rational(2));
    const QPoly common = gcd(distinct, excluded);
    const long ordered = distinct.degree() - common.degree();
    return {ordered, ordered / 2};
}

#define QCOHOM_INSTANTIATE(F)                                                                        \
    template ModelPresentation<F> build_relations(const PresentationSpec &);                        \
    template ModelPresentation<F> build_relations(const PresentationSpec &, const F &);             \
    template ModelPresentation<F> specialize_t(const ModelPresentation<F> &, const F &);            \
    template MultiPoly<F> sigma_in_ab(int, int, const RingPtr &);                                    \
    template CompatResult presentation_compat<F>(int, const CoeffField &, bool);

QCOHOM_INSTANTIATE(Rational)
QCOHOM_INSTANTIATE(RatFunc)

#undef QCOHOM_INSTANTIATE

} // namespace qcohom::ig
