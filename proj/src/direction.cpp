#include "latorbit/direction.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace latorbit {

DirectionSet DirectionSet::full_sphere(int dim) {
    if (dim < 1) throw std::invalid_argument("DirectionSet: dimension >= 1");
    DirectionSet s;
    s.kind = Kind::FullSphere;
    s.dimension = dim;
    return s;
}

DirectionSet DirectionSet::orthants(int dim, std::vector<std::vector<int>> patterns) {
    if (dim < 1) throw std::invalid_argument("DirectionSet: dimension >= 1");
    if (patterns.empty()) throw std::invalid_argument("DirectionSet: empty orthant union");
    std::set<std::vector<int>> seen;
    for (const auto& p : patterns) {
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("DirectionSet: pattern dimension mismatch");
        for (int s : p)
            if (s != 1 && s != -1) throw std::invalid_argument("DirectionSet: signs must be +-1");
        if (!seen.insert(p).second)
            throw std::invalid_argument("DirectionSet: duplicate sign pattern");
    }
    DirectionSet s;
    s.kind = Kind::OrthantUnion;
    s.dimension = dim;
    s.patterns = std::move(patterns);
    return s;
}

DirectionSet DirectionSet::positive_orthant(int dim) {
    return orthants(dim, {std::vector<int>(dim, 1)});
}

DirectionSet DirectionSet::box_union(int dim, std::vector<Box> boxes) {
    if (dim < 1) throw std::invalid_argument("DirectionSet: dimension >= 1");
    if (boxes.empty()) throw std::invalid_argument("DirectionSet: empty box union");
    for (const auto& b : boxes) {
        if (static_cast<int>(b.lo.size()) != dim || static_cast<int>(b.hi.size()) != dim)
            throw std::invalid_argument("DirectionSet: box dimension mismatch");
        for (int i = 0; i < dim; ++i)
            if (b.lo[i] > b.hi[i]) throw std::invalid_argument("DirectionSet: box lo > hi");
    }
    DirectionSet s;
    s.kind = Kind::BoxUnion;
    s.dimension = dim;
    s.boxes = std::move(boxes);
    return s;
}

bool DirectionSet::contains_direction(std::span<const double> x, std::span<const double> w) const {
    if (static_cast<int>(x.size()) != dimension)
        throw std::invalid_argument("contains_direction: dimension mismatch");
    if (kind == Kind::FullSphere) return true;

    bool zero = true;
    for (double xi : x)
        if (xi != 0) { zero = false; break; }
    if (zero) throw std::domain_error("contains_direction: projection undefined at origin");

    if (kind == Kind::OrthantUnion) {
        // sign patterns are invariant under the weighted flow, so the test
        // needs no projection
        for (const auto& p : patterns) {
            bool ok = true;
            for (int i = 0; i < dimension && ok; ++i)
                ok = (p[i] > 0) ? (x[i] >= 0) : (x[i] <= 0);
            if (ok) return true;
        }
        return false;
    }

    const Vec u = project_to_sphere(x, w);
    for (const auto& b : boxes) {
        bool ok = true;
        for (int i = 0; i < dimension && ok; ++i)
            ok = (u[i] >= b.lo[i] && u[i] <= b.hi[i]);
        if (ok) return true;
    }
    return false;
}

double DirectionSet::orthant_fraction() const {
    if (kind == Kind::FullSphere) return 1.0;
    if (kind == Kind::OrthantUnion)
        return static_cast<double>(patterns.size()) / std::ldexp(1.0, dimension);
    throw std::invalid_argument("orthant_fraction: no closed form for box unions");
}

} // namespace latorbit
