#pragma once

#include <span>
#include <vector>

namespace latorbit {

using Vec = std::vector<double>;

/// Weight pair (a, b): positive vectors of dimensions m and n, each summing
/// to 1. Parameterizes the quasi-norms, the weighted flows F_{a t}, F_{b t}
/// and the diagonal flow g_t on R^d, d = m + n.
struct WeightPair {
    Vec a;
    Vec b;
    int m = 0;
    int n = 0;
    int d = 0;

    static WeightPair make(Vec a, Vec b);
    static WeightPair equal(int m, int n);

    std::span<const double> x_part(const Vec& v) const;
    std::span<const double> y_part(const Vec& v) const;
};

/// max_i |x_i|^{1/w_i}. Zero exactly on the zero vector; homogeneous of
/// degree 1 under the w-weighted flow.
double quasi_norm(std::span<const double> x, std::span<const double> w);

/// Component-wise scaling (e^{w_1 t} x_1, ..., e^{w_k t} x_k).
Vec weighted_flow(std::span<const double> x, std::span<const double> w, double t);

/// Unique intersection of the weighted-flow orbit of x (nonzero) with the
/// Euclidean unit sphere. Bisection on the strictly increasing map
/// t -> |F_{w t}(x)|_2; |result|_2 is within 1e-10 of 1.
Vec project_to_sphere(std::span<const double> x, std::span<const double> w);

/// g_t applied to v = (x, y): expands the x-block by F_{a t}, contracts the
/// y-block by F_{b, -t}.
Vec diagonal_flow(const Vec& v, const WeightPair& wp, double t);

/// Splitting g_t = g'_t g''_t where g'_t is the equal-weights-like flow with
/// rate b_min = min{a_i/n, b_j/m} and g''_t has nonnegative exponents on the
/// x-block, nonpositive on the y-block (t >= 0).
struct FlowDecomposition {
    double t = 0;
    double b_min = 0;
    Vec gt;             // diagonal entries of g_t
    Vec gt_prime;       // diagonal entries of g'_t
    Vec gt_dblprime;    // diagonal entries of g''_t
    Vec exp_gt;         // the corresponding exponents (entry = e^exponent)
    Vec exp_prime;
    Vec exp_dblprime;
};

FlowDecomposition flow_decomposition(const WeightPair& wp, double t);

} // namespace latorbit
