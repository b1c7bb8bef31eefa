#include "qcohom/gw_check.hpp"

#include <numeric>

#include "qcohom/errors.hpp"
#include "qcohom/matrix.hpp"

namespace qcohom::gw {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Linear forms cutting out the subspace, as rows.
std::vector<std::vector<Rational>> annihilator(const LinearSubspace &s) {
    if (s.basis.empty()) {
        std::vector<std::vector<Rational>> all;
        for (std::size_t k = 0; k < s.ambient; ++k) {
            std::vector<Rational> e(s.ambient, Rational::zero());
            e[k] = Rational::one();
            all.push_back(std::move(e));
        }
        return all;
    }
    return nullspace(DenseMatrix<Rational>::from_rows(s.basis));
}

} // namespace

long SeededRng::next_int(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

Rational SeededRng::next_rational() {
    const long p = next_int(-9, 9);
    const long q = next_int(1, 9);
    return Rational(p, q);
}

Rational SeededRng::next_nonzero_rational() {
    for (;;) {
        auto r = next_rational();
        if (!r.is_zero())
            return r;
    }
}

SeededRng SeededRng::split(std::uint64_t seed, std::uint64_t index) {
    return SeededRng(splitmix64(seed ^ splitmix64(index + 1)));
}

bool gw_degree_constraint(int n, const std::vector<long> &degrees, long d) {
    const long dim_x = 4L * n - 5;
    const long k = static_cast<long>(degrees.size());
    const long lhs = std::accumulate(degrees.begin(), degrees.end(), 0L);
    return lhs == (2L * n - 1) * d + dim_x + k - 3;
}

LinearSubspace random_subspace(std::size_t ambient, long codim, SeededRng &rng) {
    if (codim < 0 || static_cast<std::size_t>(codim) > ambient)
        throw BadCodim("codimension " + std::to_string(codim) + " in ambient dimension " + std::to_string(ambient));
    const std::size_t dim = ambient - static_cast<std::size_t>(codim);
    LinearSubspace s{ambient, {}};
    if (dim == 0)
        return s;
    for (;;) {
        s.basis.assign(dim, std::vector<Rational>(ambient));
        for (auto &v : s.basis)
            for (auto &x : v)
                x = rng.next_rational();
        if (matrix_rank(DenseMatrix<Rational>::from_rows(s.basis)) == dim)
            return s;
    }
}

std::size_t intersection_dim(const std::vector<LinearSubspace> &spaces) {
    if (spaces.empty())
        return 0;
    const std::size_t ambient = spaces.front().ambient;
    std::vector<std::vector<Rational>> equations;
    for (const auto &s : spaces) {
        if (s.ambient != ambient)
            throw AmbientMismatch("ambient dimensions " + std::to_string(ambient) + " and " +
                                  std::to_string(s.ambient));
        for (auto &row : annihilator(s))
            equations.push_back(std::move(row));
    }
    if (equations.empty())
        return ambient;
    return ambient - matrix_rank(DenseMatrix<Rational>::from_rows(equations));
}

std::string FourPointResult::status_string() const {
    switch (status) {
    case FourPointStatus::Verified: return "Verified";
    case FourPointStatus::VanishesByDegree: return "VanishesByDegree";
    case FourPointStatus::DegenerateRedraws: return "DegenerateRedraws(" + std::to_string(redraws) + ")";
    }
    return "?";
}

FourPointResult four_point_check(int n, int i, int j, long trials, std::uint64_t seed) {
    if (n < 2)
        throw UnsupportedN("n = " + std::to_string(n));
    const int top = 2 * n - 2;
    if (i < 1 || i > top || j < 1 || j > top)
        throw IndexOutOfRange("(i, j) = (" + std::to_string(i) + ", " + std::to_string(j) + ") outside [1, " +
                              std::to_string(top) + "]");
    if (trials < 1)
        throw InconsistentInput("trials must be positive");

    FourPointResult res;
    res.trials = trials;
    const long dim_x = 4L * n - 5;
    if (!gw_degree_constraint(n, {dim_x, 2, i, j}, 1)) {
        res.value = 0;
        res.status = FourPointStatus::VanishesByDegree;
        return res;
    }

    const auto ambient = static_cast<std::size_t>(top);
    const long budget = 3 * trials;
    for (long trial = 0; trial < trials; ++trial) {
        auto rng = SeededRng::split(seed, static_cast<std::uint64_t>(trial));
        for (;;) {
            std::vector<LinearSubspace> spaces{random_subspace(ambient, 1, rng),
                                               random_subspace(ambient, i - 1, rng),
                                               random_subspace(ambient, j - 1, rng)};
            if (intersection_dim(spaces) == 1)
                break;
            if (++res.redraws > budget)
                throw RedrawLimitExceeded(std::to_string(res.redraws) + " degenerate draws in " +
                                          std::to_string(trial + 1) + " trials");
        }
    }
    res.value = 1;
    res.status = res.redraws == 0 ? FourPointStatus::Verified : FourPointStatus::DegenerateRedraws;
    return res;
}

} // namespace qcohom::gw
