#pragma once

#include <string>
#include <vector>

#include "latorbit/lattice.hpp"
#include "latorbit/region.hpp"

namespace latorbit {

/// Finite combination of region indicators: f(v) = sum coeff_k 1_{R_k}(v).
/// Bounded with bounded support by construction, so its Siegel transform is
/// an exact finite sum and slice integrals are available in closed form.
struct RiemannFunction {
    struct Term {
        double coeff;
        Region region;
    };
    std::vector<Term> terms;

    static RiemannFunction indicator(Region reg, double coeff = 1.0);
    RiemannFunction& add(double coeff, Region reg);

    int dimension() const;
    double eval(const Vec& v) const;
    double support_euclidean_bound() const;
};

/// Siegel transform: sum of f over the nonzero points of the lattice.
double siegel_transform(const RiemannFunction& f, const LatticeBasis& basis);

struct ThetaAverage {
    double value = 0;
    std::string note;
};

/// Exact expectation of siegel_transform(f, u(theta) Z^d) over theta uniform
/// on [0,1)^{mn}: for q != 0 the x-slice theta q mod Z^m is uniform, so each
/// q contributes its slice volume; the q = 0 points (-p, 0) do not move.
ThetaAverage theta_average_identity(const RiemannFunction& f, const WeightPair& wp);

struct BlichfeldtRatio {
    double ratio = 0;
    double transform = 0;
    double alpha_value = 0;
    bool alpha_exact = true;
};

/// siegel_transform(1_{B_r}, Lambda) / alpha(Lambda); stays in a bounded
/// band as the lattice degenerates (the two-sided alpha comparison).
BlichfeldtRatio blichfeldt_ratio(const LatticeBasis& basis, double r);

} // namespace latorbit
