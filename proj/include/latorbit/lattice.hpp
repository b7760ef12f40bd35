#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latorbit/region.hpp"
#include "latorbit/weights.hpp"

namespace latorbit {

/// m x n real matrix theta; u(theta) is the block-unipotent matrix
/// [[1_m, theta], [0, 1_n]].
struct ThetaMatrix {
    WeightPair wp;
    Vec entries;  // row-major, m rows, n cols

    static ThetaMatrix zero(const WeightPair& wp);
    static ThetaMatrix from(const WeightPair& wp, Vec entries);

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * wp.n + j]; }
    double& at(int i, int j) { return entries[static_cast<std::size_t>(i) * wp.n + j]; }

    /// (theta q)_i for an integer vector q.
    double row_dot(int i, const std::vector<long long>& q) const;
};

/// A unimodular lattice given by d basis columns. When the basis is exactly
/// g_t u(theta) applied to the standard basis, the structured form (theta,
/// t_applied) is kept alongside: the counting kernels enumerate per integer
/// q instead of over all of Z^d, and long flows stay exact in log scale.
struct LatticeBasis {
    int d = 0;
    std::vector<Vec> cols;

    struct Structured {
        ThetaMatrix theta;
        double t_applied = 0;
    };
    std::optional<Structured> structured;

    static LatticeBasis identity(int d);
    static LatticeBasis from_columns(std::vector<Vec> cols);

    double det() const;
    /// B k for an integer coefficient vector k.
    Vec embed(const std::vector<long long>& k) const;
};

/// Basis of u(theta) Z^d; its point set is {(theta q - p, q)}.
LatticeBasis unipotent_lattice(const ThetaMatrix& theta);

/// g_t basis image; accumulates t_applied on structured bases.
LatticeBasis apply_flow(const LatticeBasis& basis, const WeightPair& wp, double t);

struct LatticePoint {
    std::vector<long long> coords;  // coefficients in the basis columns
    Vec embedding;
};

enum class EnumBackend { Structured, Generic };

/// All nonzero lattice points inside the region, sorted by coordinates
/// (lexicographic); the origin is appended only when include_origin is set
/// and the region contains it. The structured backend walks integer q with
/// per-q windows for p; the generic backend reduces the basis and runs a
/// sphere enumeration over the region's bounding radius.
std::vector<LatticePoint> enumerate_points(const LatticeBasis& basis, const Region& reg,
                                           EnumBackend backend, bool include_origin = false);

/// Visitor form of the structured enumeration (no materialization).
void for_each_structured_point(const LatticeBasis& basis, const Region& reg,
                               const std::function<void(const std::vector<long long>&, const Vec&)>& visit);

/// Count of nonzero lattice points in the region (origin never counted).
long long count_lattice_points(const LatticeBasis& basis, const Region& reg);

struct MinimaResult {
    Vec lambdas;                                  // w.r.t. the gauge ball
    std::vector<std::vector<long long>> witnesses;
    bool exact = true;
};

/// Successive minima w.r.t. the Euclidean ball of radius gauge_radius,
/// by exhaustive enumeration (d <= 6).
MinimaResult successive_minima(const LatticeBasis& basis, double gauge_radius);

struct AlphaResult {
    double value = 1;
    int best_rank = 0;
    std::vector<std::vector<long long>> best_subgroup_basis;
    bool exact = true;
};

/// alpha(Lambda) = max over subgroups of 1/covolume. Exact for d <= 4 by
/// enumerating candidate bases per rank with a Minkowski product bound;
/// for larger d a certified lower bound is returned (exact = false).
AlphaResult alpha(const LatticeBasis& basis);

// shared small-dimension helpers

/// In-place floating LLL (delta = 0.99); adequate for d <= 8 desk scale.
void lll_reduce(std::vector<Vec>& cols);

/// All integer vectors k != 0 with |B k|_2 <= radius (both signs).
std::vector<std::vector<long long>> enumerate_short_vectors(const std::vector<Vec>& cols,
                                                            double radius);

} // namespace latorbit
