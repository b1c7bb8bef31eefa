#include <doctest.h>

#include "property_suites.hpp"

using namespace qtest;
using namespace qtest::props;

namespace {

constexpr long kCases = 200;

void check_suite(const SuiteResult &r) {
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.cases >= kCases);
    CHECK(r.failures == 0);
}

RatFunc random_ratfunc(Rng &rng) {
    std::vector<Rational> num, den;
    for (long k = rng.uniform(0, 2); k >= 0; --k)
        num.push_back(rng.rational());
    for (long k = rng.uniform(0, 2); k >= 0; --k)
        den.push_back(rng.nonzero());
    auto d = QPoly(den);
    if (d.is_zero())
        d = QPoly::constant(Rational(1));
    return RatFunc(QPoly(num), d);
}

// x^a0 y^b0 plus a random subset of the other monomials of the same
// weighted degree, random nonzero coefficients.
P random_homogeneous(const RingPtr &r, Rng &rng, long wx, long wy, long &degree) {
    const long a0 = rng.uniform(0, 3), b0 = rng.uniform(0, 3);
    degree = wx * a0 + wy * b0;
    std::vector<P::Term> terms;
    for (long a = 0; a * wx <= degree; ++a) {
        const bool chosen = a == a0 || rng.uniform(0, 2) != 0;
        if ((degree - a * wx) % wy == 0 && chosen)
            terms.push_back({Monomial{static_cast<Exponent>(a), static_cast<Exponent>((degree - a * wx) / wy)},
                             rng.nonzero()});
    }
    return P::from_terms(r, std::move(terms));
}

} // namespace

TEST_CASE("GB idempotence") { check_suite(gb_idempotence(11, kCases)); }

TEST_CASE("order invariance of the quotient dimension") { check_suite(order_invariance(12, kCases)); }

TEST_CASE("mult_matrix is a ring homomorphism") { check_suite(mult_matrix_homomorphism(13, kCases)); }

TEST_CASE("trace form is invariant under change of basis") {
    check_suite(trace_form_basis_invariance(14, kCases));
}

TEST_CASE("saturation dimension is additive") { check_suite(saturation_additivity(15, kCases)); }

TEST_CASE("normal form is linear and idempotent") {
    check_suite(run_suite("normal form linearity", 16, kCases, [](Rng &rng) -> std::string {
        const auto r = random_ring(rng, true);
        const auto i = random_ideal(r, rng, false);
        const auto &g = *i.gb();
        const auto f = random_poly(r, rng, 3, 0, 4);
        const auto h = random_poly(r, rng, 3, 0, 4);
        const auto a = rng.rational(), b = rng.rational();
        const auto nf = normal_form(f.scaled(a) + h.scaled(b), g);
        if (nf != normal_form(f, g).scaled(a) + normal_form(h, g).scaled(b))
            return "NF not linear";
        if (normal_form(nf, g) != nf)
            return "NF not idempotent";
        if (!ideal_contains(i, f - normal_form(f, g)))
            return "f - NF(f) not in I";
        return {};
    }));
}

TEST_CASE("ideal operations satisfy their defining containments") {
    check_suite(run_suite("ideal containments", 17, kCases, [](Rng &rng) -> std::string {
        const auto r = random_ring(rng);
        const auto i = random_ideal(r, rng, true);
        const auto j = random_ideal(r, rng, false);
        const auto f = random_poly(r, rng, 2, 1, 2);
        if (f.is_zero())
            return {};
        const auto colon = ideal_quotient(i, f);
        for (const auto &g : i.generators())
            if (!ideal_contains(colon, g))
                return "I not inside I : f";
        for (const auto &g : colon.gb()->basis())
            if (!ideal_contains(i, g * f))
                return "f (I : f) not inside I";
        const auto meet = intersect(i, j);
        const auto sum = ideal_sum(i, j);
        for (const auto &g : meet.gb()->basis())
            if (!ideal_contains(i, g) || !ideal_contains(j, g))
                return "I meet J not inside both";
        for (const auto &g : i.generators())
            if (!ideal_contains(sum, g))
                return "I not inside I + J";
        const auto di = *quotient_dim(i), dj = *quotient_dim(j);
        if (*quotient_dim(meet) + *quotient_dim(sum) != di + dj)
            return "dim(I meet J) + dim(I + J) != dim I + dim J";
        return {};
    }));
}

TEST_CASE("field laws") {
    check_suite(run_suite("rational field laws", 18, kCases, [](Rng &rng) -> std::string {
        const auto a = rng.rational(), b = rng.rational(), c = rng.nonzero();
        if ((a + b) * c != a * c + b * c || (a * b) * c != a * (b * c) || c * c.inv() != Rational(1) ||
            a - a != Rational(0) || (a / c) * c != a)
            return "rational law fails";
        return {};
    }));
    check_suite(run_suite("rational function field laws", 19, kCases, [](Rng &rng) -> std::string {
        const auto a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        if ((a + b) * c != a * c + b * c || (a * b) * c != a * (b * c) || a + b != b + a)
            return "ring law fails";
        if (!c.is_zero() && (c * c.inv() != RatFunc(1) || (a / c) * c != a))
            return "inverse law fails";
        return {};
    }));
}

TEST_CASE("rank is invariant under row operations and transposition") {
    check_suite(run_suite("rank invariance", 20, kCases, [](Rng &rng) -> std::string {
        const auto rows = static_cast<std::size_t>(rng.uniform(1, 6));
        const auto cols = static_cast<std::size_t>(rng.uniform(1, 6));
        const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min(rows, cols))));
        DenseMatrix<Rational> a(rows, k), b(k, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < k; ++j)
                a(i, j) = rng.rational();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                b(i, j) = rng.rational();
        const auto m = k == 0 ? DenseMatrix<Rational>(rows, cols) : a * b;
        const auto rank = matrix_rank(m);
        if (rank > k)
            return "rank exceeds inner dimension";
        if (matrix_rank(random_invertible(rng, rows) * m) != rank)
            return "row operations change rank";
        if (matrix_rank(m.transpose()) != rank)
            return "transpose changes rank";
        const auto ker = nullspace(m);
        if (ker.size() != cols - rank)
            return "nullity != cols - rank";
        for (const auto &v : ker)
            for (const auto &x : m.apply(v))
                if (!x.is_zero())
                    return "nullspace vector not annihilated";
        return {};
    }));
}

TEST_CASE("weighted degree is additive on products") {
    check_suite(run_suite("weighted degree additivity", 21, kCases, [](Rng &rng) -> std::string {
        const auto r = ring({"x", "y"});
        const long wx = rng.uniform(1, 3), wy = rng.uniform(1, 3);
        const GradingSpec g{{wx, wy}, 0};
        long df = 0, dh = 0;
        const auto f = random_homogeneous(r, rng, wx, wy, df);
        const auto h = random_homogeneous(r, rng, wx, wy, dh);
        if (weighted_degree(f, g) != WeightedDegree(Homogeneous{df}))
            return "degree of f";
        if (weighted_degree(f * h, g) != WeightedDegree(Homogeneous{df + dh}))
            return "degree of a product";
        if (df != dh && weighted_degree(f + h, g) != WeightedDegree(Inhomogeneous{{df, dh}}))
            return "degrees of a sum";
        return {};
    }));
}

TEST_CASE("suite runner counts failures and exceptions") {
    const auto r = run_suite("runner", 1, 10, [](Rng &rng) -> std::string {
        const long x = rng.uniform(0, 2);
        if (x == 0)
            throw std::runtime_error("boom");
        return x == 1 ? "bad" : "";
    });
    CHECK(r.cases == 10);
    CHECK(r.failures > 0);
    CHECK(r.failures <= 10);
    CHECK_FALSE(r.ok());
    CHECK(r.first_failure.rfind("case ", 0) == 0);
}
