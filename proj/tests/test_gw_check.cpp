#include <doctest.h>

#include "qcohom/errors.hpp"
#include "qcohom/gw_check.hpp"
#include "qcohom/matrix.hpp"

using namespace qcohom;
using namespace qcohom::gw;

namespace {

LinearSubspace span(std::size_t ambient, std::vector<std::vector<long>> vecs) {
    LinearSubspace s{ambient, {}};
    for (const auto &v : vecs) {
        s.basis.emplace_back();
        for (long x : v)
            s.basis.back().emplace_back(x);
    }
    return s;
}

std::size_t rank_of_rows(const std::vector<std::vector<Rational>> &rows) {
    return rows.empty() ? 0 : matrix_rank(DenseMatrix<Rational>::from_rows(rows));
}

// dim(U + W) from the stacked bases, then dim U + dim W - dim(U + W).
std::size_t grassmann_intersection(const LinearSubspace &u, const LinearSubspace &w) {
    auto rows = u.basis;
    rows.insert(rows.end(), w.basis.begin(), w.basis.end());
    return u.dim() + w.dim() - rank_of_rows(rows);
}

} // namespace

TEST_CASE("degree constraint examples") {
    CHECK(gw_degree_constraint(3, {7, 2, 2, 2}, 1));
    CHECK_FALSE(gw_degree_constraint(3, {7, 2, 2, 2}, 2));
    CHECK_FALSE(gw_degree_constraint(3, {7, 2, 2, 3}, 1));
    CHECK(gw_degree_constraint(3, {7, 2, 1, 3}, 1));
    CHECK(gw_degree_constraint(2, {3, 2, 1, 1}, 1));
    CHECK(gw_degree_constraint(4, {11, 2, 3, 3}, 1));
    // Three insertions, degree 0: sum of degrees equals dim X.
    CHECK(gw_degree_constraint(3, {3, 2, 2}, 0));
}

TEST_CASE("degree constraint matches the four-point form") {
    for (int n = 2; n <= 6; ++n)
        for (long i = 1; i <= 2 * n - 2; ++i)
            for (long j = 1; j <= 2 * n - 2; ++j) {
                const long dim_x = 4L * n - 5;
                const bool expected = i + j + dim_x + 2 == (2L * n - 1) + 2 * (2L * n - 2);
                CHECK(gw_degree_constraint(n, {dim_x, 2, i, j}, 1) == expected);
                CHECK(expected == (i + j == 2L * n - 2));
            }
}

TEST_CASE("seeded rng") {
    SeededRng a(7), b(7), c(8);
    std::vector<Rational> va, vb, vc;
    for (int k = 0; k < 50; ++k) {
        va.push_back(a.next_rational());
        vb.push_back(b.next_rational());
        vc.push_back(c.next_rational());
    }
    CHECK(va == vb);
    CHECK(va != vc);
    SeededRng r(3);
    for (int k = 0; k < 500; ++k) {
        const long x = r.next_int(-2, 4);
        CHECK(x >= -2);
        CHECK(x <= 4);
        CHECK_FALSE(r.next_nonzero_rational().is_zero());
    }
    auto s1 = SeededRng::split(5, 3);
    auto s2 = SeededRng::split(5, 3);
    auto s3 = SeededRng::split(5, 4);
    CHECK(s1.next_u64() == s2.next_u64());
    CHECK(s1.next_u64() != s3.next_u64());
}

TEST_CASE("random subspace examples") {
    SeededRng rng(42);
    const auto full = random_subspace(4, 0, rng);
    CHECK(full.dim() == 4);
    CHECK(full.codim() == 0);
    CHECK(random_subspace(4, 4, rng).dim() == 0);
    SeededRng rng42(42);
    const auto s = random_subspace(6, 2, rng42);
    CHECK(s.dim() == 4);
    CHECK(s.ambient == 6);
    CHECK(rank_of_rows(s.basis) == 4);
    CHECK_THROWS_AS(random_subspace(4, 5, rng), BadCodim);
    CHECK_THROWS_AS(random_subspace(4, -1, rng), BadCodim);
}

TEST_CASE("intersection dimension examples") {
    const auto xy = span(4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    const auto zw = span(4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(intersection_dim({xy, zw}) == 0);
    CHECK(intersection_dim({xy, xy}) == 2);
    CHECK(intersection_dim({xy}) == 2);
    const auto h1 = span(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
    const auto h2 = span(4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    const auto h3 = span(4, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(intersection_dim({h1, h2, h3}) == 1);
    CHECK(intersection_dim({span(3, {}), span(3, {{1, 1, 1}})}) == 0);
    CHECK(intersection_dim({}) == 0);
    CHECK_THROWS_AS(intersection_dim({xy, span(3, {{1, 0, 0}})}), AmbientMismatch);
}

TEST_CASE("intersection dimension agrees with the Grassmann formula") {
    SeededRng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const auto ambient = static_cast<std::size_t>(rng.next_int(1, 7));
        const long a = rng.next_int(0, static_cast<long>(ambient));
        const long b = rng.next_int(0, static_cast<long>(ambient));
        const auto u = random_subspace(ambient, a, rng);
        auto w = random_subspace(ambient, b, rng);
        // Force a nontrivial overlap half of the time.
        if (trial % 2 == 0 && !u.basis.empty() && w.basis.size() > 1)
            w.basis.back() = u.basis.front();
        if (rank_of_rows(w.basis) != w.dim())
            continue;
        CHECK(intersection_dim({u, w}) == grassmann_intersection(u, w));
    }
}

TEST_CASE("four-point examples") {
    const auto a = four_point_check(3, 2, 2, 10, 1);
    CHECK(a.value == 1);
    CHECK(a.status == FourPointStatus::Verified);
    CHECK(a.status_string() == "Verified");
    CHECK(a.trials == 10);
    CHECK(four_point_check(3, 1, 3, 10, 1).value == 1);
    const auto v = four_point_check(3, 3, 3, 10, 1);
    CHECK(v.value == 0);
    CHECK(v.status == FourPointStatus::VanishesByDegree);
    CHECK(v.status_string() == "VanishesByDegree");
    CHECK_THROWS_AS(four_point_check(3, 0, 2, 10, 1), IndexOutOfRange);
    CHECK_THROWS_AS(four_point_check(3, 2, 5, 10, 1), IndexOutOfRange);
    CHECK_THROWS_AS(four_point_check(3, 2, 2, 0, 1), InconsistentInput);
    CHECK_THROWS_AS(four_point_check(1, 1, 1, 10, 1), UnsupportedN);

    FourPointResult r;
    r.status = FourPointStatus::DegenerateRedraws;
    r.redraws = 3;
    CHECK(r.status_string() == "DegenerateRedraws(3)");
}

TEST_CASE("four-point values over the full index range") {
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= 2 * n - 2; ++i)
            for (int j = 1; j <= 2 * n - 2; ++j) {
                const auto r = four_point_check(n, i, j, 5, static_cast<std::uint64_t>(100 * n + 10 * i + j));
                CHECK(r.value == (i + j == 2 * n - 2 ? 1 : 0));
                CHECK(r.value == four_point_check(n, j, i, 5, 9).value);
            }
}

TEST_CASE("four-point checks are deterministic in the seed") {
    const auto a = four_point_check(4, 2, 4, 100, 77);
    const auto b = four_point_check(4, 2, 4, 100, 77);
    CHECK(a.value == b.value);
    CHECK(a.redraws == b.redraws);
    CHECK(a.status == b.status);
}

TEST_CASE("degenerate draws are rare") {
    // Codimensions 1, i - 1, j - 1 with i + j = 2n - 2 meet in a line
    // unless the draw is degenerate.
    long degenerate = 0;
    const long draws = 1000;
    for (long k = 0; k < draws; ++k) {
        auto rng = SeededRng::split(99, static_cast<std::uint64_t>(k));
        const std::vector<LinearSubspace> spaces{random_subspace(4, 1, rng), random_subspace(4, 1, rng),
                                                 random_subspace(4, 1, rng)};
        if (intersection_dim(spaces) != 1)
            ++degenerate;
    }
    CHECK(degenerate * 100 < draws);
}

TEST_CASE("over-determined intersections are zero") {
    SeededRng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t ambient = 5;
        const long a = rng.next_int(1, 5);
        const long b = rng.next_int(6 - a, 5);
        const auto u = random_subspace(ambient, a, rng);
        const auto w = random_subspace(ambient, b, rng);
        CHECK(intersection_dim({u, w}) == 0);
    }
}
