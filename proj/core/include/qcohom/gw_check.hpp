#ifndef QCOHOM_GW_CHECK_HPP
#define QCOHOM_GW_CHECK_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qcohom/rational.hpp"

namespace qcohom::gw {

/// Deterministic stream of small rationals p/q with |p| <= 9, 1 <= q <= 9.
/// Reduction is done by hand instead of through a distribution so the
/// stream is identical across standard libraries.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform in [lo, hi].
    long next_int(long lo, long hi);
    Rational next_rational();
    Rational next_nonzero_rational();

    /// Stream for sub-task `index`, independent of how many values this
    /// stream has produced.
    static SeededRng split(std::uint64_t seed, std::uint64_t index);

private:
    std::mt19937_64 engine_;
};

struct LinearSubspace {
    std::size_t ambient = 0;
    /// Linearly independent vectors of length `ambient`.
    std::vector<std::vector<Rational>> basis;

    std::size_t dim() const { return basis.size(); }
    std::size_t codim() const { return ambient - basis.size(); }
};

/// Dimension axiom for a degree-d invariant of IG(2, 2n) with k = size of
/// `degrees` insertions: sum of degrees == (2n - 1) d + dim X + k - 3, where
/// dim X = 4n - 5. For k = 4 with a point and sigma_2 insertion this is
/// i + j + dim X + 2 == (2n - 1) d + 2(2n - 2).
bool gw_degree_constraint(int n, const std::vector<long> &degrees, long d);

/// Random subspace of the given codimension. Throws BadCodim unless
/// 0 <= codim <= ambient.
LinearSubspace random_subspace(std::size_t ambient, long codim, SeededRng &rng);

/// Dimension of the intersection of vector subspaces. Throws
/// AmbientMismatch when the ambient dimensions differ; an empty list
/// gives 0.
std::size_t intersection_dim(const std::vector<LinearSubspace> &spaces);

enum class FourPointStatus { Verified, VanishesByDegree, DegenerateRedraws };

struct FourPointResult {
    long value = 0;
    FourPointStatus status = FourPointStatus::Verified;
    long trials = 0;
    long redraws = 0;

    /// "Verified", "VanishesByDegree" or "DegenerateRedraws(k)".
    std::string status_string() const;
};

/// I_1(pt, sigma_2, sigma_i, sigma_j) on IG(2, 2n) via general linear
/// subspaces of codimensions 1, i - 1, j - 1 in a (2n - 2)-dimensional
/// space. Throws IndexOutOfRange unless 1 <= i, j <= 2n - 2,
/// InconsistentInput for trials < 1, RedrawLimitExceeded after more than
/// 3 * trials degenerate draws.
FourPointResult four_point_check(int n, int i, int j, long trials, std::uint64_t seed);

} // namespace qcohom::gw

#endif
