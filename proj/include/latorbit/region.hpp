#pragma once

#include "latorbit/direction.hpp"
#include "latorbit/weights.hpp"

namespace latorbit {

/// Volume of the k-dimensional Euclidean ball of radius r.
double ball_volume(int k, double r);

struct BoundingBox {
    Vec lo;
    Vec hi;
    double volume() const;
};

/// Bounded region of R^d used as an indicator support. Variants:
///   E(T, c, A, B) : |x|_a < c / |y|_b,  1 <= |y|_b < e^T,  directions in A x B
///   F(r, c)       : |x|_a |y|_b < c,    1 <= |x|_a < e^r
///   Annulus       : inner < |v|_2 < outer  (inner = d by construction)
///   Ball          : |v|_2 < radius (open)
///   Box           : axis-aligned closed box
/// Direction-constrained E excludes x = 0 (the projection is undefined
/// there); plain E admits it.
struct Region {
    enum class Kind { E, F, Annulus, Ball, Box };

    Kind kind = Kind::Ball;
    WeightPair wp;
    double T = 0;
    double c = 0;
    double r = 0;
    double inner = 0;
    double outer = 0;
    double radius = 0;
    DirectionSet A;
    DirectionSet B;
    Vec box_lo;
    Vec box_hi;

    static Region make_E(const WeightPair& wp, double T, double c,
                         DirectionSet A, DirectionSet B);
    static Region make_E_plain(const WeightPair& wp, double T, double c);
    static Region make_F(const WeightPair& wp, double r, double c);
    static Region make_annulus(const WeightPair& wp, double outer);
    static Region make_ball(const WeightPair& wp, double radius);
    static Region make_box(const WeightPair& wp, Vec lo, Vec hi);

    bool contains(const Vec& v) const;

    /// Axis-aligned box enclosing the region, derived from its constraints.
    BoundingBox bounds() const;

    /// Euclidean norm bound valid for every member point.
    double euclidean_bound() const;

    bool has_direction_constraints() const {
        return kind == Kind::E && !(A.is_full() && B.is_full());
    }

    /// True for the variants whose nonzero members come in +-v pairs.
    bool origin_symmetric() const;

    /// Exact volume: 2^d c T for plain E, 2^d c r for F, difference of ball
    /// volumes for the annulus, standard formulas for ball and box. Throws
    /// for direction-constrained E.
    double closed_form_volume() const;

    std::string label() const;
};

struct VolumeEstimate {
    double value = 0;
    double std_error = 0;
};

struct MonteCarloOptions {
    long long samples = 100000;
    std::uint64_t seed = 0;
    int threads = 0;   // 0 = library default
};

/// Volume by rejection sampling over bounds(); unbiased, with the binomial
/// standard error. Deterministic for fixed (samples, seed) regardless of
/// thread count.
VolumeEstimate region_volume_monte_carlo(const Region& reg, const MonteCarloOptions& opt);

/// Spec'd entry point: closed form (std_error = 0) or Monte Carlo.
enum class VolumeMethod { ClosedForm, MonteCarlo };
VolumeEstimate region_volume(const Region& reg, VolumeMethod method,
                             const MonteCarloOptions& opt = {});

namespace reference {
/// Single-loop serial sampler; same estimator and stream layout as the
/// OpenMP kernel, kept as the comparison baseline.
VolumeEstimate region_volume_monte_carlo_serial(const Region& reg, const MonteCarloOptions& opt);
} // namespace reference

} // namespace latorbit
