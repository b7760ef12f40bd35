#include "latorbit/weights.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace latorbit {

namespace {

void check_weights(const Vec& w, const char* name) {
    if (w.empty()) throw std::invalid_argument(std::string(name) + ": empty weight vector");
    double sum = 0;
    for (double wi : w) {
        if (!(wi > 0)) throw std::invalid_argument(std::string(name) + ": weights must be positive");
        sum += wi;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument(std::string(name) + ": weights must sum to 1");
}

} // namespace

WeightPair WeightPair::make(Vec a, Vec b) {
    check_weights(a, "a");
    check_weights(b, "b");
    WeightPair wp;
    wp.m = static_cast<int>(a.size());
    wp.n = static_cast<int>(b.size());
    wp.d = wp.m + wp.n;
    wp.a = std::move(a);
    wp.b = std::move(b);
    return wp;
}

WeightPair WeightPair::equal(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("WeightPair::equal: m, n >= 1");
    return make(Vec(m, 1.0 / m), Vec(n, 1.0 / n));
}

std::span<const double> WeightPair::x_part(const Vec& v) const {
    if (static_cast<int>(v.size()) != d) throw std::invalid_argument("x_part: dimension mismatch");
    return {v.data(), static_cast<std::size_t>(m)};
}

std::span<const double> WeightPair::y_part(const Vec& v) const {
    if (static_cast<int>(v.size()) != d) throw std::invalid_argument("y_part: dimension mismatch");
    return {v.data() + m, static_cast<std::size_t>(n)};
}

double quasi_norm(std::span<const double> x, std::span<const double> w) {
    if (x.size() != w.size()) throw std::invalid_argument("quasi_norm: dimension mismatch");
    double best = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double ax = std::abs(x[i]);
        if (ax == 0) continue;
        // |x_i|^{1/w_i}; w_i == 1 is the common (m = 1 or n = 1) fast path
        const double v = (w[i] == 1.0) ? ax : std::pow(ax, 1.0 / w[i]);
        if (v > best) best = v;
    }
    return best;
}

Vec weighted_flow(std::span<const double> x, std::span<const double> w, double t) {
    if (x.size() != w.size()) throw std::invalid_argument("weighted_flow: dimension mismatch");
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::exp(w[i] * t) * x[i];
    return out;
}

Vec project_to_sphere(std::span<const double> x, std::span<const double> w) {
    if (x.size() != w.size()) throw std::invalid_argument("project_to_sphere: dimension mismatch");
    double norm2 = 0;
    for (double xi : x) norm2 += xi * xi;
    if (norm2 == 0) throw std::domain_error("project_to_sphere: projection undefined at origin");

    double wmin = w[0];
    for (double wi : w) wmin = std::min(wmin, wi);

    // |F_{w t}(x)|_2 is strictly increasing in t; bracket the unit-norm root.
    const double span = std::abs(0.5 * std::log(norm2)) / wmin + 1.0;
    double lo = -span, hi = span;
    const auto norm_at = [&](double t) {
        double s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double xi = std::exp(w[i] * t) * x[i];
            s += xi * xi;
        }
        return std::sqrt(s);
    };
    double t = 0;
    for (int it = 0; it < 100; ++it) {
        t = 0.5 * (lo + hi);
        const double g = norm_at(t) - 1.0;
        if (std::abs(g) <= 1e-13) break;
        (g < 0 ? lo : hi) = t;
    }
    return weighted_flow(x, w, t);
}

Vec diagonal_flow(const Vec& v, const WeightPair& wp, double t) {
    if (static_cast<int>(v.size()) != wp.d) throw std::invalid_argument("diagonal_flow: dimension mismatch");
    Vec out(v.size());
    for (int i = 0; i < wp.m; ++i) out[i] = std::exp(wp.a[i] * t) * v[i];
    for (int j = 0; j < wp.n; ++j) out[wp.m + j] = std::exp(-wp.b[j] * t) * v[wp.m + j];
    return out;
}

FlowDecomposition flow_decomposition(const WeightPair& wp, double t) {
    FlowDecomposition fd;
    fd.t = t;
    double b = wp.a[0] / wp.n;
    for (double ai : wp.a) b = std::min(b, ai / wp.n);
    for (double bj : wp.b) b = std::min(b, bj / wp.m);
    fd.b_min = b;

    fd.exp_gt.resize(wp.d);
    fd.exp_prime.resize(wp.d);
    fd.exp_dblprime.resize(wp.d);
    for (int i = 0; i < wp.m; ++i) {
        fd.exp_gt[i] = wp.a[i] * t;
        fd.exp_prime[i] = wp.n * b * t;
        fd.exp_dblprime[i] = (wp.a[i] - wp.n * b) * t;
    }
    for (int j = 0; j < wp.n; ++j) {
        fd.exp_gt[wp.m + j] = -wp.b[j] * t;
        fd.exp_prime[wp.m + j] = -wp.m * b * t;
        fd.exp_dblprime[wp.m + j] = -(wp.b[j] - wp.m * b) * t;
    }
    fd.gt.resize(wp.d);
    fd.gt_prime.resize(wp.d);
    fd.gt_dblprime.resize(wp.d);
    for (int i = 0; i < wp.d; ++i) {
        fd.gt[i] = std::exp(fd.exp_gt[i]);
        fd.gt_prime[i] = std::exp(fd.exp_prime[i]);
        fd.gt_dblprime[i] = std::exp(fd.exp_dblprime[i]);
    }
    return fd;
}

} // namespace latorbit
