#pragma once

#include <cstdint>
#include <vector>

#include "latorbit/weights.hpp"

namespace latorbit {

/// Direction constraint on the unit sphere S^{k-1}, reached through the
/// weighted projection pi_w. Variants are chosen so membership is exact and
/// boundaries have measure zero on the sphere:
///   FullSphere   - no constraint
///   OrthantUnion - union of closed sign orthants (sign test, no projection)
///   BoxUnion     - union of per-coordinate closed boxes tested on the
///                  projected point
struct DirectionSet {
    enum class Kind { FullSphere, OrthantUnion, BoxUnion };

    struct Box {
        Vec lo;
        Vec hi;
    };

    Kind kind = Kind::FullSphere;
    int dimension = 0;
    // sign patterns, entries +1 / -1, one vector per orthant
    std::vector<std::vector<int>> patterns;
    std::vector<Box> boxes;

    static DirectionSet full_sphere(int dim);
    static DirectionSet orthants(int dim, std::vector<std::vector<int>> patterns);
    /// The closed positive orthant S^{k-1}_+ (all coordinates >= 0).
    static DirectionSet positive_orthant(int dim);
    static DirectionSet box_union(int dim, std::vector<Box> boxes);

    bool is_full() const { return kind == Kind::FullSphere; }

    /// Membership of pi_w(x) for nonzero x. Throws std::domain_error on
    /// x = 0 when the set is constrained (projection undefined there).
    bool contains_direction(std::span<const double> x, std::span<const double> w) const;

    /// Fraction of the full sphere covered, when available in closed form
    /// (FullSphere and OrthantUnion); used by slice integrals.
    double orthant_fraction() const;
};

} // namespace latorbit
