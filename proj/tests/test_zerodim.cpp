#include <doctest.h>

#include "qcohom/ig_model.hpp"
#include "qcohom/zerodim.hpp"
#include "support.hpp"

using namespace qtest;
using Kind = LocalClassification::Kind;

namespace {

template <Field F = Rational>
ig::ModelPresentation<F> model(int n, ig::Variant v, CoeffField c = CoeffField::specialized(Rational(-1))) {
    return ig::build_relations<F>({n, v, c});
}

DenseMatrix<Rational> rat(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto &row : rows) {
        r.emplace_back();
        for (long x : row)
            r.back().emplace_back(x);
    }
    return DenseMatrix<Rational>::from_rows(r);
}

} // namespace

TEST_CASE("quotient algebra examples") {
    const auto r = ring({"x"});
    CHECK(QuotientAlgebra<Rational>(ideal(r, {"x^2 - 1"})).dim() == 2);
    CHECK(QuotientAlgebra<Rational>(model(2, ig::Variant::SigmaQuantum).ideal()).dim() == 4);
    CHECK(QuotientAlgebra<Rational>(model(3, ig::Variant::ABQuantum).ideal()).dim() == 12);
    CHECK_THROWS_AS(QuotientAlgebra<Rational>(ideal(ring({"x", "y"}), {"x^2"})), NotZeroDimensional);

    const auto i = ideal(ring({"x", "y"}), {"x^2 - y", "y^2 - 1"});
    const QuotientAlgebra<Rational> a(i);
    REQUIRE(a.dim() == 4);
    CHECK(a.basis() == *standard_monomials(*i.gb()));
    for (std::size_t k = 0; k < a.dim(); ++k) {
        std::vector<Rational> e(a.dim(), Rational(0));
        e[k] = Rational(1);
        CHECK(a.coordinates(a.basis_element(k)) == e);
    }
}

TEST_CASE("multiplication matrix examples") {
    const auto r = ring({"x"});
    const QuotientAlgebra<Rational> a(ideal(r, {"x^2"}));
    CHECK(mult_matrix(a, P::constant(r, Rational(1))) == DenseMatrix<Rational>::identity(2));
    CHECK(mult_matrix(a, P::variable(r, "x")) == rat({{0, 0}, {1, 0}}));
    CHECK(a.variable_matrix(0) == mult_matrix(a, P::variable(r, "x")));
    CHECK_THROWS_AS(mult_matrix(a, P::variable(ring({"y"}), 0)), RingMismatch);

    const auto m = model(2, ig::Variant::SigmaQuantum);
    const QuotientAlgebra<Rational> b(m.ideal());
    const auto s1 = P::variable(m.ring, "s1");
    const auto l = mult_matrix(b, s1);
    CHECK(l * l * l * l == mult_matrix(b, s1.pow(4)));
}

TEST_CASE("trace form examples") {
    const auto r = ring({"x"});
    const auto nil = trace_form(QuotientAlgebra<Rational>(ideal(r, {"x^2"})));
    CHECK(nil.gram == rat({{2, 0}, {0, 0}}));
    CHECK(nil.rank == 1);
    CHECK(nil.radical_dim == 1);
    CHECK_FALSE(nil.is_semisimple);

    const auto split = trace_form(QuotientAlgebra<Rational>(ideal(r, {"x^2 - 1"})));
    CHECK(split.gram == rat({{2, 0}, {0, 2}}));
    CHECK(split.rank == 2);
    CHECK(split.is_semisimple);

    const auto qh3 = trace_form(QuotientAlgebra<Rational>(model(3, ig::Variant::SigmaQuantum).ideal()));
    CHECK(qh3.rank == 11);
    CHECK(qh3.radical_dim == 1);
    CHECK_FALSE(qh3.is_semisimple);
}

TEST_CASE("trace form gram equals traces of products of multiplication matrices") {
    const auto m = model(3, ig::Variant::ABQuantum);
    const QuotientAlgebra<Rational> a(m.ideal());
    const auto tf = trace_form(a);
    std::vector<DenseMatrix<Rational>> l;
    for (std::size_t i = 0; i < a.dim(); ++i)
        l.push_back(mult_matrix(a, a.basis_element(i)));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            CHECK(tf.gram(i, j) == (l[i] * l[j]).trace());
    CHECK(tf.gram == tf.gram.transpose());
}

TEST_CASE("jacobian and tangent dimension examples") {
    const std::vector<Rational> origin3(3, Rational(0));
    const auto ab3 = model(3, ig::Variant::ABQuantum);
    CHECK(tangent_dim_at(ab3.ideal(), origin3) == 1);

    const auto ab2 = model(2, ig::Variant::ABQuantum);
    const std::vector<Rational> origin2(2, Rational(0));
    CHECK(tangent_dim_at(ab2.ideal(), origin2) == 0);
    const auto j2 = jacobian_at(ab2.relations, origin2);
    CHECK(matrix_rank(j2) == 2);
    CHECK(j2(0, 0).is_zero());
    CHECK(j2(1, 1).is_zero());

    const auto def3 = model(3, ig::Variant::SigmaBigTauFirstOrder);
    const std::vector<Rational> origin5(5, Rational(0));
    CHECK(matrix_rank(jacobian_at(def3.relations, origin5)) == 4);
    CHECK(tangent_dim_at(def3.ideal(), origin5) == 1);

    CHECK_THROWS_AS(tangent_dim_at(ab3.ideal(), std::vector<Rational>(3, Rational(1))), PointNotOnVariety);
    CHECK_THROWS_AS(jacobian_at(ab3.relations, origin2), RingMismatch);

    const auto r = ring({"x", "y"});
    const auto circle = ideal(r, {"x^2 + y^2 - 2", "x - y"});
    CHECK(tangent_dim_at(circle, {Rational(1), Rational(1)}) == 0);
}

TEST_CASE("local classification examples") {
    CHECK(classify_local(1, 0) == LocalClassification{Kind::ReducedPoint, 1});
    CHECK(classify_local(0, 0).kind == Kind::ReducedPoint);
    CHECK(classify_local(2, 1) == LocalClassification{Kind::CurvilinearFatPoint, 2});
    CHECK(classify_local(3, 1) == LocalClassification{Kind::CurvilinearFatPoint, 3});
    CHECK(classify_local(4, 2).kind == Kind::Other);
    CHECK_THROWS_AS(classify_local(2, 0), InconsistentInput);
}

TEST_CASE("dimension and radical are additive over a coprime split") {
    const auto r = ring({"x", "y"});
    struct Case {
        std::vector<std::string> local, away;
    };
    const std::vector<Case> cases = {
        {{"x^2", "y"}, {"x - 1", "y^2 - 4"}},
        {{"x^3", "y - x"}, {"x^2 - 2", "y - 3"}},
        {{"x^2", "x*y", "y^2"}, {"x + 1", "y + 1"}},
        {{"x", "y"}, {"x^2 - 1", "y - x - 5"}},
    };
    for (const auto &c : cases) {
        const auto i1 = ideal(r, c.local);
        const auto i2 = ideal(r, c.away);
        const auto whole = intersect(i1, i2);
        const auto t = trace_form(QuotientAlgebra<Rational>(whole));
        const auto t1 = trace_form(QuotientAlgebra<Rational>(i1));
        const auto t2 = trace_form(QuotientAlgebra<Rational>(i2));
        CHECK(t.gram.rows() == t1.gram.rows() + t2.gram.rows());
        CHECK(t.radical_dim == t1.radical_dim + t2.radical_dim);
        CHECK(local_dim_at_origin(whole) == t1.gram.rows());
        CHECK(quotient_dim(saturate_at_origin(whole)) == t2.gram.rows());
    }
}

TEST_CASE("saturated quantum algebra is semisimple with the z-count number of points") {
    for (int n : {2, 3}) {
        const auto ab = model(n, ig::Variant::ABQuantum);
        const QuotientAlgebra<Rational> sat(saturate_at_origin(ab.ideal()));
        const auto z = ig::z_count(n);
        CHECK(static_cast<long>(sat.dim()) == z.point_count);
        CHECK(trace_form(sat).is_semisimple);
    }
}

TEST_CASE("generic coefficients agree with specialized ranks") {
    const auto g = model<RatFunc>(3, ig::Variant::SigmaQuantum, CoeffField::generic());
    const auto tf = trace_form(QuotientAlgebra<RatFunc>(g.ideal()));
    CHECK(tf.rank == 11);
    const auto def = model<RatFunc>(2, ig::Variant::SigmaBigTauFirstOrder, CoeffField::generic());
    const auto jac = jacobian_at(def.relations, std::vector<RatFunc>(3, RatFunc(0)));
    CHECK(matrix_rank(jac) == 2);
}
