#include <algorithm>
#include <numeric>

#include <doctest.h>

#include "qcohom/grading.hpp"
#include "qcohom/ig_model.hpp"
#include "qcohom/matrix.hpp"
#include "qcohom/poly_matrix.hpp"
#include "qcohom/unipoly.hpp"
#include "support.hpp"

using namespace qtest;
using QP = UniPoly<Rational>;

namespace {

// Sylvester matrix of f and g; its rank is deg f + deg g - deg gcd(f, g).
DenseMatrix<Rational> sylvester(const QP &f, const QP &g) {
    const auto m = static_cast<std::size_t>(f.degree());
    const auto n = static_cast<std::size_t>(g.degree());
    DenseMatrix<Rational> s(m + n, m + n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k)
            s(r, r + m - k) = f.coeff(k);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k)
            s(n + r, r + n - k) = g.coeff(k);
    return s;
}

long gcd_degree_by_sylvester(const QP &f, const QP &g) {
    return f.degree() + g.degree() - static_cast<long>(matrix_rank(sylvester(f, g)));
}

QP z_poly(int n) {
    const auto two_n = static_cast<std::size_t>(2 * n);
    const QP inner = QP::monomial(Rational(1), two_n) - QP::x();
    QP f = QP::constant(Rational(1));
    for (std::size_t k = 0; k < two_n; ++k)
        f = f * inner;
    return f - QP::monomial(Rational(1), two_n);
}

// Leibniz expansion over all permutations.
P leibniz(const PolyMatrix<Rational> &m, const RingPtr &r) {
    std::vector<std::size_t> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    P sum(r);
    do {
        long inversions = 0;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b)
                inversions += perm[a] > perm[b];
        P prod = P::constant(r, Rational(inversions % 2 ? -1 : 1));
        for (std::size_t i = 0; i < perm.size(); ++i)
            prod = prod * m[i][perm[i]];
        sum += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

} // namespace

TEST_CASE("rational arithmetic examples") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(4, -6).denominator() == 3);
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::zero().denominator() == 1);
    CHECK_THROWS_AS(Rational::zero().inv(), DivisionByZero);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("rational function examples") {
    const RatFunc q = RatFunc::q();
    CHECK(q.inv() == RatFunc(QPoly::constant(Rational(1)), QPoly::x()));
    const RatFunc a = (q - RatFunc(1)) / (q + RatFunc(1));
    const RatFunc prod = a * (q + RatFunc(1));
    CHECK(prod == q - RatFunc(1));
    CHECK(prod.den() == QPoly::constant(Rational(1)));
    CHECK(RatFunc::parse("(q^2 - 1)/(q - 1)") == q + RatFunc(1));
    CHECK(RatFunc::parse("2*q/(4*q^2)") == RatFunc::parse("1/(2*q)"));
    CHECK(RatFunc::parse("(q^2 - 1)/(q - 1)").den().leading() == Rational(1));
    CHECK_THROWS_AS(RatFunc::zero().inv(), DivisionByZero);
    CHECK(a.eval(Rational(3)) == Rational(1, 2));
    CHECK_THROWS_AS(a.eval(Rational(-1)), DivisionByZero);
    CHECK(a.negate_q() == (-q - RatFunc(1)) / (-q + RatFunc(1)));
    CHECK((RatFunc(3) * q.inv() * q.inv()).is_q_monomial());
    CHECK((RatFunc(3) * q.inv() * q.inv()).q_exponent() == -2);
}

TEST_CASE("coefficient field modes") {
    CHECK_THROWS_AS(CoeffField::specialized(Rational(0)), ConfigError);
    CHECK(CoeffField::specialized(Rational(2)).twisted().q_value() == Rational(-2));
    CHECK(CoeffField::generic().twisted().is_generic());
    CHECK(q_element<RatFunc>(CoeffField::generic()) == RatFunc::q());
    CHECK_THROWS_AS(q_element<Rational>(CoeffField::generic()), ConfigError);
}

TEST_CASE("univariate gcd examples") {
    const QP z = QP::x();
    const QP one = QP::constant(Rational(1));
    CHECK(gcd(z * z - one, z - one) == z - one);
    CHECK(gcd(z * z * z, z * z) == z * z);
    CHECK(gcd(QP{}, z + one) == z + one);
    CHECK_THROWS_AS(gcd(QP{}, QP{}), ZeroPolynomial);

    const QP f = z_poly(2);
    REQUIRE(f.degree() == 16);
    const QP g = gcd(f, f.derivative());
    CHECK(g.degree() == gcd_degree_by_sylvester(f, f.derivative()));
    CHECK(f.divmod(g).second.is_zero());
    CHECK(f.derivative().divmod(g).second.is_zero());
}

TEST_CASE("squarefree part examples") {
    const QP z = QP::x();
    const QP one = QP::constant(Rational(1));
    CHECK(squarefree_part(z * z) == z);
    CHECK(squarefree_part((z * z - one) * (z * z - one)) == z * z - one);
    CHECK_THROWS_AS(squarefree_part(QP{}), ZeroPolynomial);

    for (int n : {2, 3}) {
        const QP f = z_poly(n);
        const QP s = squarefree_part(f);
        CHECK(s.degree() == f.degree() - gcd_degree_by_sylvester(f, f.derivative()));
        CHECK(gcd_degree_by_sylvester(s, s.derivative()) == 0);
    }
}

TEST_CASE("matrix rank examples") {
    CHECK(matrix_rank(DenseMatrix<Rational>::identity(3)) == 3);
    CHECK(matrix_rank(DenseMatrix<Rational>(3, 4)) == 0);
    CHECK(matrix_rank(DenseMatrix<Rational>(0, 0)) == 0);
    const RatFunc q = RatFunc::q();
    const auto m = DenseMatrix<RatFunc>::from_rows({{RatFunc(0), RatFunc(-2), -q}, {-q, RatFunc(0), RatFunc(0)}});
    CHECK(matrix_rank(m) == 2);
    const auto dep = DenseMatrix<Rational>::from_rows(
        {{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(6)}, {Rational(1, 2), Rational(0), Rational(1)}});
    CHECK(matrix_rank(dep) == 2);
    CHECK_THROWS_AS(DenseMatrix<Rational>::from_rows({{Rational(1)}, {Rational(1), Rational(2)}}), InconsistentInput);
    CHECK_THROWS_AS(DenseMatrix<Rational>(2, 2, {Rational(1)}), InconsistentInput);
}

TEST_CASE("nullspace and row reduction") {
    auto m = DenseMatrix<Rational>::from_rows(
        {{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(7)}});
    const auto ker = nullspace(m);
    REQUIRE(ker.size() == 1);
    for (auto x : m.apply(ker[0]))
        CHECK(x.is_zero());
    const auto pivots = row_reduce(m);
    CHECK(pivots == std::vector<std::size_t>{0, 2});
}

TEST_CASE("polynomial arithmetic examples") {
    const auto r = ring({"s1", "s2"});
    const auto s1 = P::variable(r, "s1");
    const auto s2 = P::variable(r, "s2");
    CHECK((s1 + s2) * (s1 - s2) == parse(r, "s1^2 - s2^2"));
    const auto zero = s1.scaled(Rational(0));
    CHECK(zero.is_zero());
    CHECK(zero.terms().empty());
    CHECK((s1 - s1).terms().empty());

    const auto other = ring({"s1", "s3"});
    CHECK_THROWS_AS(s1 + P::variable(other, "s1"), RingMismatch);
    CHECK_THROWS_AS(s1 * P::variable(other, "s1"), RingMismatch);

    const auto rx = ring({"a1", "a2", "x"});
    const auto pm = parse(rx, "1 - a1*x + a2*x^2");
    const auto pp = parse(rx, "1 + a1*x + a2*x^2");
    CHECK(pm * pp == parse(rx, "1 + 2*a2*x^2 - a1^2*x^2 + a2^2*x^4"));
}

TEST_CASE("polynomial operations") {
    const auto r = ring({"x", "y", "z"});
    const auto f = parse(r, "3*x^2*y - 2*y*z + 5");
    CHECK(f.derivative(0) == parse(r, "6*x*y"));
    CHECK(f.evaluate({Rational(1), Rational(2), Rational(3)}) == Rational(6 - 12 + 5));
    CHECK(f.coefficient_in(1, 1) == parse(r, "3*x^2 - 2*z"));
    CHECK(f.degree_in(0) == 2);
    CHECK(f.total_degree() == 3);
    CHECK(f.constant_term() == Rational(5));
    CHECK(f.pow(2) == f * f);
    CHECK(parse(r, "2*x + 4").monic() == parse(r, "x + 2"));
    const auto images = parse_all(r, {"y", "x", "z + 1"});
    CHECK(f.substitute(images) == parse(r, "3*y^2*x - 2*x*z - 2*x + 5"));
}

TEST_CASE("monomial orders") {
    const Monomial a{2, 0, 0}, b{0, 3, 0}, c{1, 1, 1};
    CHECK(MonomialOrder::lex().less(b, a));
    CHECK(MonomialOrder::grevlex().less(a, b));
    // x^2 z^0 vs x y z: grevlex compares the last variable, smaller exponent wins.
    CHECK(MonomialOrder::grevlex().less(c, Monomial{1, 2, 0}));
    const auto w = MonomialOrder::weighted_grevlex({1, 2, 3});
    CHECK(w.less(a, b));
    CHECK(w.less(c, b));
    CHECK_THROWS_AS(MonomialOrder::weighted_grevlex({1, 0, 2}), InconsistentInput);
    const auto blk = MonomialOrder::block({2});
    CHECK(blk.less(Monomial{5, 5, 0}, Monomial{0, 0, 1}));
    CHECK(Monomial{1, 2, 0}.divides(Monomial{1, 3, 1}));
    CHECK_FALSE(Monomial{1, 2, 0}.divides(Monomial{0, 3, 1}));
    CHECK(lcm(a, c) == Monomial{2, 1, 1});
    CHECK(coprime(a, b));
}

TEST_CASE("weighted degree examples") {
    const auto g3 = ig::model_grading(3, ig::Variant::SigmaQuantum);
    const auto r = ig::model_ring(3, ig::Variant::SigmaQuantum, CoeffField::generic());
    using RP = MultiPoly<RatFunc>;
    const auto s2 = RP::variable(r, "s2");
    CHECK(weighted_degree(s2 * s2, g3) == WeightedDegree(Homogeneous{4}));
    const auto rel = RP::variable(r, "s3") * RP::variable(r, "s3") + RP::variable(r, "s1").scaled(RatFunc::q());
    CHECK(weighted_degree(rel, g3) == WeightedDegree(Homogeneous{6}));

    const auto rt = ig::model_ring(3, ig::Variant::SigmaBigTauFirstOrder, CoeffField::generic());
    const auto gt = ig::model_grading(3, ig::Variant::SigmaBigTauFirstOrder);
    CHECK(weighted_degree(RP::variable(rt, "t").scaled(RatFunc::q()), gt) == WeightedDegree(Homogeneous{4}));

    const auto mixed = RP::variable(r, "s1") + RP::variable(r, "s2");
    CHECK(weighted_degree(mixed, g3) == WeightedDegree(Inhomogeneous{{1, 2}}));
    CHECK_THROWS_AS(weighted_degree(RP(r), g3), ZeroPolynomial);
    CHECK_THROWS_AS(weighted_degree(s2, GradingSpec{{1, 2}, 5}), RingMismatch);
}

TEST_CASE("polynomial determinant examples") {
    const auto r = ring({"s1", "s2", "s3"});
    const auto one = P::constant(r, Rational(1));
    const auto zero = P(r);
    const auto s1 = P::variable(r, "s1"), s2 = P::variable(r, "s2"), s3 = P::variable(r, "s3");
    CHECK(det_poly_matrix<Rational>({{one, zero}, {zero, one}}) == one);
    CHECK(det_poly_matrix<Rational>({{s1, s2}, {one, s1}}) == parse(r, "s1^2 - s2"));
    const PolyMatrix<Rational> m3 = {{s1, s2, s3}, {one, s1, s2}, {zero, one, s1}};
    CHECK(det_poly_matrix(m3) == parse(r, "s1^3 - 2*s1*s2 + s3"));
    CHECK(det_poly_matrix(m3) == leibniz(m3, r));
    CHECK_THROWS_AS(det_poly_matrix<Rational>({{s1, s2}}), NotSquare);
    CHECK_THROWS_AS(det_poly_matrix<Rational>({{s1, s2}, {one}}), NotSquare);
}

TEST_CASE("determinant agrees with Leibniz expansion on random matrices") {
    const auto r = ring({"x", "y", "z"});
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto size = static_cast<std::size_t>(rng.uniform(1, 5));
        PolyMatrix<Rational> m(size, std::vector<P>(size, P(r)));
        for (auto &row : m)
            for (auto &e : row)
                e = random_poly(r, rng, static_cast<int>(rng.uniform(0, 2)), 0, 2);
        CHECK(det_poly_matrix(m) == leibniz(m, r));
    }
}
