#include "latorbit/region.hpp"

#include <cmath>
#include <stdexcept>

namespace latorbit {

double ball_volume(int k, double r) {
    return std::pow(M_PI, 0.5 * k) / std::tgamma(0.5 * k + 1.0) * std::pow(r, k);
}

double BoundingBox::volume() const {
    double v = 1;
    for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
    return v;
}

Region Region::make_E(const WeightPair& wp, double T, double c,
                      DirectionSet A, DirectionSet B) {
    if (!(T > 0) || !(c > 0)) throw std::invalid_argument("Region E: T, c > 0");
    if (A.dimension != wp.m || B.dimension != wp.n)
        throw std::invalid_argument("Region E: direction-set dimensions must be (m, n)");
    Region reg;
    reg.kind = Kind::E;
    reg.wp = wp;
    reg.T = T;
    reg.c = c;
    reg.A = std::move(A);
    reg.B = std::move(B);
    return reg;
}

Region Region::make_E_plain(const WeightPair& wp, double T, double c) {
    return make_E(wp, T, c, DirectionSet::full_sphere(wp.m), DirectionSet::full_sphere(wp.n));
}

Region Region::make_F(const WeightPair& wp, double r, double c) {
    if (!(r > 0) || !(c > 0)) throw std::invalid_argument("Region F: r, c > 0");
    Region reg;
    reg.kind = Kind::F;
    reg.wp = wp;
    reg.r = r;
    reg.c = c;
    return reg;
}

Region Region::make_annulus(const WeightPair& wp, double outer) {
    if (!(outer > wp.d)) throw std::invalid_argument("Region annulus: outer > d");
    Region reg;
    reg.kind = Kind::Annulus;
    reg.wp = wp;
    reg.inner = wp.d;
    reg.outer = outer;
    return reg;
}

Region Region::make_ball(const WeightPair& wp, double radius) {
    if (!(radius > 0)) throw std::invalid_argument("Region ball: radius > 0");
    Region reg;
    reg.kind = Kind::Ball;
    reg.wp = wp;
    reg.radius = radius;
    return reg;
}

Region Region::make_box(const WeightPair& wp, Vec lo, Vec hi) {
    if (static_cast<int>(lo.size()) != wp.d || static_cast<int>(hi.size()) != wp.d)
        throw std::invalid_argument("Region box: dimension mismatch");
    for (int i = 0; i < wp.d; ++i)
        if (lo[i] > hi[i]) throw std::invalid_argument("Region box: lo > hi");
    Region reg;
    reg.kind = Kind::Box;
    reg.wp = wp;
    reg.box_lo = std::move(lo);
    reg.box_hi = std::move(hi);
    return reg;
}

bool Region::contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != wp.d)
        throw std::invalid_argument("Region::contains: dimension mismatch");
    switch (kind) {
        case Kind::E: {
            const auto x = wp.x_part(v);
            const auto y = wp.y_part(v);
            const double ny = quasi_norm(y, wp.b);
            if (!(ny >= 1.0 && ny < std::exp(T))) return false;
            const double nx = quasi_norm(x, wp.a);
            if (!(nx < c / ny)) return false;
            if (!A.is_full()) {
                if (nx == 0) return false;  // projection undefined at x = 0
                if (!A.contains_direction(x, wp.a)) return false;
            }
            if (!B.is_full() && !B.contains_direction(y, wp.b)) return false;
            return true;
        }
        case Kind::F: {
            const double nx = quasi_norm(wp.x_part(v), wp.a);
            if (!(nx >= 1.0 && nx < std::exp(r))) return false;
            const double ny = quasi_norm(wp.y_part(v), wp.b);
            return nx * ny < c;
        }
        case Kind::Annulus: {
            double s = 0;
            for (double vi : v) s += vi * vi;
            return s > inner * inner && s < outer * outer;
        }
        case Kind::Ball: {
            double s = 0;
            for (double vi : v) s += vi * vi;
            return s < radius * radius;
        }
        case Kind::Box: {
            for (int i = 0; i < wp.d; ++i)
                if (v[i] < box_lo[i] || v[i] > box_hi[i]) return false;
            return true;
        }
    }
    return false;
}

BoundingBox Region::bounds() const {
    BoundingBox bb;
    bb.lo.resize(wp.d);
    bb.hi.resize(wp.d);
    const auto symmetric = [&](int i, double h) {
        bb.lo[i] = -h;
        bb.hi[i] = h;
    };
    switch (kind) {
        case Kind::E:
            // |y|_b >= 1 forces |x|_a < c, so |x_i| < c^{a_i}
            for (int i = 0; i < wp.m; ++i) symmetric(i, std::pow(c, wp.a[i]));
            for (int j = 0; j < wp.n; ++j) symmetric(wp.m + j, std::exp(wp.b[j] * T));
            break;
        case Kind::F:
            for (int i = 0; i < wp.m; ++i) symmetric(i, std::exp(wp.a[i] * r));
            for (int j = 0; j < wp.n; ++j) symmetric(wp.m + j, std::pow(c, wp.b[j]));
            break;
        case Kind::Annulus:
            for (int i = 0; i < wp.d; ++i) symmetric(i, outer);
            break;
        case Kind::Ball:
            for (int i = 0; i < wp.d; ++i) symmetric(i, radius);
            break;
        case Kind::Box:
            bb.lo = box_lo;
            bb.hi = box_hi;
            break;
    }
    return bb;
}

double Region::euclidean_bound() const {
    const auto bb = bounds();
    double s = 0;
    for (std::size_t i = 0; i < bb.lo.size(); ++i) {
        const double h = std::max(std::abs(bb.lo[i]), std::abs(bb.hi[i]));
        s += h * h;
    }
    return std::sqrt(s);
}

bool Region::origin_symmetric() const {
    switch (kind) {
        case Kind::E: return A.is_full() && B.is_full();
        case Kind::F:
        case Kind::Annulus:
        case Kind::Ball: return true;
        case Kind::Box:
            for (int i = 0; i < wp.d; ++i)
                if (box_lo[i] != -box_hi[i]) return false;
            return true;
    }
    return false;
}

double Region::closed_form_volume() const {
    switch (kind) {
        case Kind::E:
            if (has_direction_constraints())
                throw std::invalid_argument(
                    "closed_form_volume: unsupported for direction-constrained E");
            return std::ldexp(c * T, wp.d);  // 2^d c T
        case Kind::F:
            return std::ldexp(c * r, wp.d);  // 2^d c r, equal to |E_{r,c}|
        case Kind::Annulus:
            return ball_volume(wp.d, outer) - ball_volume(wp.d, inner);
        case Kind::Ball:
            return ball_volume(wp.d, radius);
        case Kind::Box: {
            double v = 1;
            for (int i = 0; i < wp.d; ++i) v *= box_hi[i] - box_lo[i];
            return v;
        }
    }
    throw std::logic_error("closed_form_volume: bad kind");
}

std::string Region::label() const {
    switch (kind) {
        case Kind::E: return "E";
        case Kind::F: return "F";
        case Kind::Annulus: return "annulus";
        case Kind::Ball: return "ball";
        case Kind::Box: return "box";
    }
    return "?";
}

} // namespace latorbit
