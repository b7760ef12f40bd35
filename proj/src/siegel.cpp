#include "latorbit/siegel.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace latorbit {

RiemannFunction RiemannFunction::indicator(Region reg, double coeff) {
    RiemannFunction f;
    f.add(coeff, std::move(reg));
    return f;
}

RiemannFunction& RiemannFunction::add(double coeff, Region reg) {
    if (!terms.empty() && terms.front().region.wp.d != reg.wp.d)
        throw std::invalid_argument("RiemannFunction: mixed dimensions");
    terms.push_back({coeff, std::move(reg)});
    return *this;
}

int RiemannFunction::dimension() const {
    if (terms.empty()) throw std::invalid_argument("RiemannFunction: empty");
    return terms.front().region.wp.d;
}

double RiemannFunction::eval(const Vec& v) const {
    double s = 0;
    for (const auto& t : terms)
        if (t.region.contains(v)) s += t.coeff;
    return s;
}

double RiemannFunction::support_euclidean_bound() const {
    double r = 0;
    for (const auto& t : terms) r = std::max(r, t.region.euclidean_bound());
    return r;
}

double siegel_transform(const RiemannFunction& f, const LatticeBasis& basis) {
    double s = 0;
    for (const auto& t : f.terms) {
        if (t.coeff == 0) continue;
        s += t.coeff * static_cast<double>(count_lattice_points(basis, t.region));
    }
    return s;
}

namespace {

// Lebesgue measure of {x in R^m : (x, q) in region} for an integer q.
double x_slice_volume(const Region& reg, const std::vector<long long>& q) {
    const WeightPair& wp = reg.wp;
    Vec y(wp.n);
    for (int j = 0; j < wp.n; ++j) y[j] = static_cast<double>(q[j]);
    switch (reg.kind) {
        case Region::Kind::E: {
            const double ny = quasi_norm(y, wp.b);
            if (!(ny >= 1.0 && ny < std::exp(reg.T))) return 0;
            if (!reg.B.is_full() && !reg.B.contains_direction(y, wp.b)) return 0;
            // {|x|_a < c/ny} has volume 2^m (c/ny); direction set scales it
            const double frac = reg.A.orthant_fraction();
            return frac * std::ldexp(reg.c / ny, wp.m);
        }
        case Region::Kind::F: {
            const double ny = quasi_norm(y, wp.b);
            const double upper = (ny == 0) ? std::exp(reg.r)
                                           : std::min(std::exp(reg.r), reg.c / ny);
            if (!(upper > 1.0)) return 0;
            return std::ldexp(upper - 1.0, wp.m);
        }
        case Region::Kind::Ball:
        case Region::Kind::Annulus: {
            double q2 = 0;
            for (double yj : y) q2 += yj * yj;
            const double out2 = (reg.kind == Region::Kind::Ball ? reg.radius * reg.radius
                                                                : reg.outer * reg.outer);
            const double in2 = (reg.kind == Region::Kind::Ball ? 0.0 : reg.inner * reg.inner);
            double vol = 0;
            if (q2 < out2) vol += ball_volume(wp.m, std::sqrt(out2 - q2));
            if (q2 < in2) vol -= ball_volume(wp.m, std::sqrt(in2 - q2));
            return vol;
        }
        case Region::Kind::Box: {
            for (int j = 0; j < wp.n; ++j)
                if (y[j] < reg.box_lo[wp.m + j] || y[j] > reg.box_hi[wp.m + j]) return 0;
            double vol = 1;
            for (int i = 0; i < wp.m; ++i) vol *= reg.box_hi[i] - reg.box_lo[i];
            return vol;
        }
    }
    return 0;
}

// Sum over q != 0 of the x-slice volume, plus the theta-independent
// contribution of the points (-p, 0), p != 0.
double theta_average_term(const Region& reg) {
    const WeightPair& wp = reg.wp;
    if (reg.kind == Region::Kind::E && reg.A.kind == DirectionSet::Kind::BoxUnion)
        throw std::runtime_error(
            "theta_average_identity: no closed-form x-slice for box-union A");

    const BoundingBox bb = reg.bounds();
    std::vector<long long> qmax(wp.n);
    for (int j = 0; j < wp.n; ++j)
        qmax[j] = static_cast<long long>(std::floor(
            std::max(std::abs(bb.lo[wp.m + j]), std::abs(bb.hi[wp.m + j])) + 1e-9));

    double total = 0;
    std::vector<long long> q(wp.n, 0);
    const std::function<void(int)> walk = [&](int j) {
        if (j == wp.n) {
            bool zero = true;
            for (long long qj : q)
                if (qj != 0) { zero = false; break; }
            if (!zero) total += x_slice_volume(reg, q);
            return;
        }
        for (long long qj = -qmax[j]; qj <= qmax[j]; ++qj) {
            q[j] = qj;
            walk(j + 1);
        }
    };
    walk(0);

    // y = 0 points, fixed by every theta
    std::vector<long long> pmax(wp.m);
    for (int i = 0; i < wp.m; ++i)
        pmax[i] = static_cast<long long>(std::floor(
            std::max(std::abs(bb.lo[i]), std::abs(bb.hi[i])) + 1e-9));
    Vec v(wp.d, 0.0);
    std::vector<long long> p(wp.m, 0);
    const std::function<void(int)> walk_p = [&](int i) {
        if (i == wp.m) {
            bool zero = true;
            for (long long pi : p)
                if (pi != 0) { zero = false; break; }
            if (zero) return;
            for (int ii = 0; ii < wp.m; ++ii) v[ii] = static_cast<double>(-p[ii]);
            if (reg.contains(v)) total += 1.0;
            return;
        }
        for (long long pi = -pmax[i]; pi <= pmax[i]; ++pi) {
            p[i] = pi;
            walk_p(i + 1);
        }
    };
    walk_p(0);
    return total;
}

} // namespace

ThetaAverage theta_average_identity(const RiemannFunction& f, const WeightPair& wp) {
    ThetaAverage avg;
    for (const auto& t : f.terms) {
        if (t.region.wp.d != wp.d || t.region.wp.m != wp.m)
            throw std::invalid_argument("theta_average_identity: weight mismatch");
        avg.value += t.coeff * theta_average_term(t.region);
    }
    avg.note = "sum over q != 0 of x-slice volumes plus the fixed (p, 0) points";
    return avg;
}

BlichfeldtRatio blichfeldt_ratio(const LatticeBasis& basis, double r) {
    if (!(r > 0)) throw std::invalid_argument("blichfeldt_ratio: r > 0");
    WeightPair wp = WeightPair::equal(std::max(1, basis.d - 1), 1);
    if (basis.d < 2) throw std::invalid_argument("blichfeldt_ratio: d >= 2");
    BlichfeldtRatio out;
    const RiemannFunction f = RiemannFunction::indicator(Region::make_ball(wp, r));
    out.transform = siegel_transform(f, basis);
    const AlphaResult a = alpha(basis);
    out.alpha_value = a.value;
    out.alpha_exact = a.exact;
    out.ratio = out.transform / a.value;
    return out;
}

} // namespace latorbit
