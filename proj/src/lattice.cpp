#include "latorbit/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace latorbit {

// ---------------------------------------------------------------- theta

ThetaMatrix ThetaMatrix::zero(const WeightPair& wp) {
    ThetaMatrix t;
    t.wp = wp;
    t.entries.assign(static_cast<std::size_t>(wp.m) * wp.n, 0.0);
    return t;
}

ThetaMatrix ThetaMatrix::from(const WeightPair& wp, Vec entries) {
    if (entries.size() != static_cast<std::size_t>(wp.m) * wp.n)
        throw std::invalid_argument("ThetaMatrix: entry count != m*n");
    ThetaMatrix t;
    t.wp = wp;
    t.entries = std::move(entries);
    return t;
}

double ThetaMatrix::row_dot(int i, const std::vector<long long>& q) const {
    double s = 0;
    for (int j = 0; j < wp.n; ++j) s += at(i, j) * static_cast<double>(q[j]);
    return s;
}

// ---------------------------------------------------------------- basis

LatticeBasis LatticeBasis::identity(int d) {
    LatticeBasis b;
    b.d = d;
    b.cols.assign(d, Vec(d, 0.0));
    for (int i = 0; i < d; ++i) b.cols[i][i] = 1.0;
    return b;
}

double LatticeBasis::det() const {
    // LU with partial pivoting
    std::vector<Vec> a(cols);
    double det = 1.0;
    for (int k = 0; k < d; ++k) {
        int piv = k;
        for (int i = k + 1; i < d; ++i)
            if (std::abs(a[k][i]) > std::abs(a[k][piv])) piv = i;
        if (a[k][piv] == 0) return 0.0;
        if (piv != k) {
            for (int j = 0; j < d; ++j) std::swap(a[j][k], a[j][piv]);
            det = -det;
        }
        det *= a[k][k];
        for (int i = k + 1; i < d; ++i) {
            const double f = a[k][i] / a[k][k];
            for (int j = k + 1; j < d; ++j) a[j][i] -= f * a[j][k];
        }
    }
    return det;
}

LatticeBasis LatticeBasis::from_columns(std::vector<Vec> cols) {
    LatticeBasis b;
    b.d = static_cast<int>(cols.size());
    for (const auto& c : cols)
        if (static_cast<int>(c.size()) != b.d)
            throw std::invalid_argument("LatticeBasis: columns must be d-vectors");
    b.cols = std::move(cols);
    if (std::abs(b.det() - 1.0) > 1e-9)
        throw std::invalid_argument("LatticeBasis: basis is not unimodular");
    return b;
}

Vec LatticeBasis::embed(const std::vector<long long>& k) const {
    Vec v(d, 0.0);
    for (int j = 0; j < d; ++j) {
        const double kj = static_cast<double>(k[j]);
        if (kj == 0) continue;
        for (int i = 0; i < d; ++i) v[i] += kj * cols[j][i];
    }
    return v;
}

LatticeBasis unipotent_lattice(const ThetaMatrix& theta) {
    const WeightPair& wp = theta.wp;
    LatticeBasis b = LatticeBasis::identity(wp.d);
    for (int j = 0; j < wp.n; ++j)
        for (int i = 0; i < wp.m; ++i) b.cols[wp.m + j][i] = theta.at(i, j);
    b.structured = LatticeBasis::Structured{theta, 0.0};
    return b;
}

namespace {

// columns of g_t u(theta), recomputed from the structured data
std::vector<Vec> structured_columns(const ThetaMatrix& theta, double t) {
    const WeightPair& wp = theta.wp;
    std::vector<Vec> cols(wp.d, Vec(wp.d, 0.0));
    for (int i = 0; i < wp.m; ++i) cols[i][i] = std::exp(wp.a[i] * t);
    for (int j = 0; j < wp.n; ++j) {
        for (int i = 0; i < wp.m; ++i) cols[wp.m + j][i] = std::exp(wp.a[i] * t) * theta.at(i, j);
        cols[wp.m + j][wp.m + j] = std::exp(-wp.b[j] * t);
    }
    return cols;
}

} // namespace

LatticeBasis apply_flow(const LatticeBasis& basis, const WeightPair& wp, double t) {
    if (wp.d != basis.d) throw std::invalid_argument("apply_flow: dimension mismatch");
    LatticeBasis out;
    out.d = basis.d;
    if (basis.structured) {
        const double total = basis.structured->t_applied + t;
        out.cols = structured_columns(basis.structured->theta, total);
        out.structured = LatticeBasis::Structured{basis.structured->theta, total};
        return out;
    }
    out.cols = basis.cols;
    for (auto& col : out.cols) {
        for (int i = 0; i < wp.m; ++i) col[i] *= std::exp(wp.a[i] * t);
        for (int j = 0; j < wp.n; ++j) col[wp.m + j] *= std::exp(-wp.b[j] * t);
    }
    return out;
}

// ------------------------------------------------- reduction, enumeration

void lll_reduce(std::vector<Vec>& cols) {
    const int d = static_cast<int>(cols.size());
    const int dim = static_cast<int>(cols[0].size());
    const auto dot = [dim](const Vec& u, const Vec& v) {
        double s = 0;
        for (int i = 0; i < dim; ++i) s += u[i] * v[i];
        return s;
    };

    std::vector<Vec> star(d);
    std::vector<Vec> mu(d, Vec(d, 0.0));
    Vec norm2(d, 0.0);
    const auto gram_schmidt = [&]() {
        for (int i = 0; i < d; ++i) {
            star[i] = cols[i];
            for (int j = 0; j < i; ++j) {
                mu[i][j] = dot(cols[i], star[j]) / norm2[j];
                for (int k2 = 0; k2 < dim; ++k2) star[i][k2] -= mu[i][j] * star[j][k2];
            }
            norm2[i] = dot(star[i], star[i]);
        }
    };

    gram_schmidt();
    constexpr double delta = 0.99;
    int i = 1;
    int guard = 0;
    while (i < d && ++guard < 100000) {
        for (int j = i - 1; j >= 0; --j) {
            const double r = std::round(mu[i][j]);
            if (r != 0) {
                for (int k2 = 0; k2 < dim; ++k2) cols[i][k2] -= r * cols[j][k2];
                gram_schmidt();
            }
        }
        if (norm2[i] >= (delta - mu[i][i - 1] * mu[i][i - 1]) * norm2[i - 1]) {
            ++i;
        } else {
            std::swap(cols[i], cols[i - 1]);
            gram_schmidt();
            i = std::max(i - 1, 1);
        }
    }
}

std::vector<std::vector<long long>> enumerate_short_vectors(const std::vector<Vec>& cols,
                                                            double radius) {
    const int d = static_cast<int>(cols.size());
    // track the unimodular transform so coefficients refer to the input basis
    std::vector<Vec> red(cols);
    std::vector<std::vector<long long>> U(d, std::vector<long long>(d, 0));
    for (int i = 0; i < d; ++i) U[i][i] = 1;
    {
        // repeat the LLL loop with transform tracking
        const int dim = static_cast<int>(red[0].size());
        const auto dot = [dim](const Vec& u, const Vec& v) {
            double s = 0;
            for (int i = 0; i < dim; ++i) s += u[i] * v[i];
            return s;
        };
        std::vector<Vec> star(d);
        std::vector<Vec> mu(d, Vec(d, 0.0));
        Vec norm2(d, 0.0);
        const auto gram_schmidt = [&]() {
            for (int i = 0; i < d; ++i) {
                star[i] = red[i];
                for (int j = 0; j < i; ++j) {
                    mu[i][j] = dot(red[i], star[j]) / norm2[j];
                    for (int k2 = 0; k2 < dim; ++k2) star[i][k2] -= mu[i][j] * star[j][k2];
                }
                norm2[i] = dot(star[i], star[i]);
            }
        };
        gram_schmidt();
        constexpr double delta = 0.99;
        int i = 1;
        int guard = 0;
        while (i < d && ++guard < 100000) {
            for (int j = i - 1; j >= 0; --j) {
                const double r = std::round(mu[i][j]);
                if (r != 0) {
                    const long long ri = static_cast<long long>(r);
                    for (int k2 = 0; k2 < dim; ++k2) red[i][k2] -= r * red[j][k2];
                    for (int k2 = 0; k2 < d; ++k2) U[i][k2] -= ri * U[j][k2];
                    gram_schmidt();
                }
            }
            if (norm2[i] >= (delta - mu[i][i - 1] * mu[i][i - 1]) * norm2[i - 1]) {
                ++i;
            } else {
                std::swap(red[i], red[i - 1]);
                std::swap(U[i], U[i - 1]);
                gram_schmidt();
                i = std::max(i - 1, 1);
            }
        }
    }

    // QR of the reduced basis (modified Gram-Schmidt)
    const int dim = static_cast<int>(red[0].size());
    std::vector<Vec> q(red);
    std::vector<Vec> R(d, Vec(d, 0.0));
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < j; ++i) {
            double s = 0;
            for (int k2 = 0; k2 < dim; ++k2) s += q[i][k2] * q[j][k2];
            R[i][j] = s;
            for (int k2 = 0; k2 < dim; ++k2) q[j][k2] -= s * q[i][k2];
        }
        double nn = 0;
        for (int k2 = 0; k2 < dim; ++k2) nn += q[j][k2] * q[j][k2];
        R[j][j] = std::sqrt(nn);
        if (R[j][j] == 0) throw std::invalid_argument("enumerate_short_vectors: singular basis");
        for (int k2 = 0; k2 < dim; ++k2) q[j][k2] /= R[j][j];
    }

    // Fincke-Pohst: |R k|^2 <= radius^2
    std::vector<std::vector<long long>> out;
    std::vector<long long> k(d, 0);
    const double limit2 = radius * radius * (1.0 + 1e-12);
    const std::function<void(int, double)> descend = [&](int level, double used) {
        if (level < 0) {
            bool zero = true;
            for (long long ki : k)
                if (ki != 0) { zero = false; break; }
            if (!zero) {
                std::vector<long long> coords(d);
                for (int row = 0; row < d; ++row) {
                    long long s = 0;
                    for (int c2 = 0; c2 < d; ++c2) s += k[c2] * U[c2][row];
                    coords[row] = s;
                }
                out.push_back(std::move(coords));
            }
            return;
        }
        double off = 0;
        for (int j = level + 1; j < d; ++j) off += R[level][j] * static_cast<double>(k[j]);
        const double center = -off / R[level][level];
        const double halfw = std::sqrt(std::max(0.0, limit2 - used)) / R[level][level];
        const long long lo = static_cast<long long>(std::ceil(center - halfw - 1e-12));
        const long long hi = static_cast<long long>(std::floor(center + halfw + 1e-12));
        for (long long ki = lo; ki <= hi; ++ki) {
            k[level] = ki;
            const double term = R[level][level] * (static_cast<double>(ki) - center);
            const double next = used + term * term;
            if (next <= limit2) descend(level - 1, next);
        }
        k[level] = 0;
    };
    descend(d - 1, 0.0);
    return out;
}

// ----------------------------------------------------- point enumeration

void for_each_structured_point(const LatticeBasis& basis, const Region& reg,
                               const std::function<void(const std::vector<long long>&, const Vec&)>& visit) {
    if (!basis.structured)
        throw std::invalid_argument("structured enumeration requires a structured basis");
    const ThetaMatrix& theta = basis.structured->theta;
    const WeightPair& wp = theta.wp;
    if (wp.d != reg.wp.d || wp.m != reg.wp.m)
        throw std::invalid_argument("structured enumeration: weight dimensions disagree");
    const double tau = basis.structured->t_applied;

    const BoundingBox bb = reg.bounds();
    // q box: y_j = e^{-b_j tau} q_j within the region's y bounds
    std::vector<long long> qlo(wp.n), qhi(wp.n);
    for (int j = 0; j < wp.n; ++j) {
        const double scale = std::exp(wp.b[j] * tau);
        const double lo = bb.lo[wp.m + j] * scale;
        const double hi = bb.hi[wp.m + j] * scale;
        if (hi > 4.0e18 || lo < -4.0e18)
            throw std::invalid_argument("structured enumeration: q range overflow");
        qlo[j] = static_cast<long long>(std::ceil(lo - 1e-9 - 1e-12 * std::abs(lo)));
        qhi[j] = static_cast<long long>(std::floor(hi + 1e-9 + 1e-12 * std::abs(hi)));
    }

    Vec ea(wp.m), eb(wp.n);  // flow factors at tau
    for (int i = 0; i < wp.m; ++i) ea[i] = std::exp(wp.a[i] * tau);
    for (int j = 0; j < wp.n; ++j) eb[j] = std::exp(-wp.b[j] * tau);

    const bool is_E = reg.kind == Region::Kind::E;
    const double eT = is_E ? std::exp(reg.T) : 0.0;

    std::vector<long long> q(wp.n, 0);
    std::vector<long long> coords(wp.d, 0);
    Vec v(wp.d, 0.0);
    Vec y(wp.n, 0.0);

    const std::function<void(int)> walk_q = [&](int j) {
        if (j == wp.n) {
            for (int jj = 0; jj < wp.n; ++jj) y[jj] = eb[jj] * static_cast<double>(q[jj]);
            // per-coordinate x windows; candidates get a hair of slack and
            // the exact contains() test decides membership
            double xlo[16], xhi[16];
            if (is_E) {
                const double ny = quasi_norm(y, wp.b);
                if (!(ny >= 1.0 && ny < eT)) return;
                const double rx = reg.c / ny;
                for (int i = 0; i < wp.m; ++i) {
                    xhi[i] = std::pow(rx, wp.a[i]);
                    xlo[i] = -xhi[i];
                }
            } else {
                for (int i = 0; i < wp.m; ++i) {
                    xlo[i] = bb.lo[i];
                    xhi[i] = bb.hi[i];
                }
            }
            // p windows: x_i = e^{a_i tau} (k_i + (theta q)_i)
            std::vector<long long> klo(wp.m), khi(wp.m);
            for (int i = 0; i < wp.m; ++i) {
                const double s = theta.row_dot(i, q);
                const double lo = xlo[i] / ea[i] - s;
                const double hi = xhi[i] / ea[i] - s;
                klo[i] = static_cast<long long>(std::ceil(lo - 1e-9 - 1e-12 * std::abs(lo)));
                khi[i] = static_cast<long long>(std::floor(hi + 1e-9 + 1e-12 * std::abs(hi)));
                if (klo[i] > khi[i]) return;
            }
            for (int jj = 0; jj < wp.n; ++jj) {
                coords[wp.m + jj] = q[jj];
                v[wp.m + jj] = y[jj];
            }
            const std::function<void(int)> walk_p = [&](int i) {
                if (i == wp.m) {
                    bool zero = true;
                    for (long long ci : coords)
                        if (ci != 0) { zero = false; break; }
                    if (!zero && reg.contains(v)) visit(coords, v);
                    return;
                }
                const double s = theta.row_dot(i, q);
                for (long long ki = klo[i]; ki <= khi[i]; ++ki) {
                    coords[i] = ki;
                    v[i] = ea[i] * (static_cast<double>(ki) + s);
                    walk_p(i + 1);
                }
            };
            walk_p(0);
            return;
        }
        for (long long qj = qlo[j]; qj <= qhi[j]; ++qj) {
            q[j] = qj;
            walk_q(j + 1);
        }
    };
    walk_q(0);
}

namespace {

std::vector<LatticePoint> enumerate_generic(const LatticeBasis& basis, const Region& reg) {
    const double radius = reg.euclidean_bound();
    if (!std::isfinite(radius)) throw std::invalid_argument("enumerate_points: unbounded region");
    auto coords = enumerate_short_vectors(basis.cols, radius);
    std::vector<LatticePoint> out;
    for (auto& k : coords) {
        Vec v = basis.embed(k);
        if (reg.contains(v)) out.push_back({std::move(k), std::move(v)});
    }
    return out;
}

} // namespace

std::vector<LatticePoint> enumerate_points(const LatticeBasis& basis, const Region& reg,
                                           EnumBackend backend, bool include_origin) {
    std::vector<LatticePoint> out;
    if (backend == EnumBackend::Structured) {
        for_each_structured_point(basis, reg, [&](const std::vector<long long>& k, const Vec& v) {
            out.push_back({k, v});
        });
    } else {
        out = enumerate_generic(basis, reg);
    }
    std::sort(out.begin(), out.end(),
              [](const LatticePoint& a, const LatticePoint& b) { return a.coords < b.coords; });
    if (include_origin) {
        const Vec zero(basis.d, 0.0);
        if (reg.contains(zero)) out.push_back({std::vector<long long>(basis.d, 0), zero});
    }
    return out;
}

long long count_lattice_points(const LatticeBasis& basis, const Region& reg) {
    if (basis.structured) {
        long long n = 0;
        for_each_structured_point(basis, reg,
                                  [&](const std::vector<long long>&, const Vec&) { ++n; });
        return n;
    }
    return static_cast<long long>(enumerate_generic(basis, reg).size());
}

// ------------------------------------------------------- minima and alpha

namespace {

struct ShortVec {
    std::vector<long long> k;
    Vec v;
    double norm;
};

std::vector<ShortVec> short_vector_pool(const LatticeBasis& basis, double radius) {
    auto ks = enumerate_short_vectors(basis.cols, radius);
    std::vector<ShortVec> pool;
    pool.reserve(ks.size());
    for (auto& k : ks) {
        Vec v = basis.embed(k);
        double n2 = 0;
        for (double vi : v) n2 += vi * vi;
        pool.push_back({std::move(k), std::move(v), std::sqrt(n2)});
    }
    std::sort(pool.begin(), pool.end(), [](const ShortVec& a, const ShortVec& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return a.k < b.k;
    });
    return pool;
}

// Residual of v against an orthogonal family; returns the residual height.
double residual_against(const std::vector<Vec>& ortho, Vec& v) {
    for (const auto& u : ortho) {
        double uu = 0, uv = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            uu += u[i] * u[i];
            uv += u[i] * v[i];
        }
        const double f = uv / uu;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * u[i];
    }
    double n2 = 0;
    for (double vi : v) n2 += vi * vi;
    return std::sqrt(n2);
}

} // namespace

MinimaResult successive_minima(const LatticeBasis& basis, double gauge_radius) {
    if (basis.d > 6)
        throw std::invalid_argument("successive_minima: unsupported dimension (d <= 6)");
    if (!(gauge_radius > 0)) throw std::invalid_argument("successive_minima: gauge_radius > 0");

    double R = 2.0 / std::pow(ball_volume(basis.d, 1.0), 1.0 / basis.d);
    for (int attempt = 0; attempt < 80; ++attempt) {
        auto pool = short_vector_pool(basis, R);
        std::vector<Vec> ortho;
        MinimaResult res;
        for (const auto& sv : pool) {
            Vec resid = sv.v;
            const double h = residual_against(ortho, resid);
            if (h > 1e-9 * sv.norm) {
                ortho.push_back(resid);
                res.lambdas.push_back(sv.norm / gauge_radius);
                res.witnesses.push_back(sv.k);
                if (static_cast<int>(ortho.size()) == basis.d) return res;
            }
        }
        R *= 1.6;
    }
    throw std::runtime_error("successive_minima: enumeration failed to reach full rank");
}

AlphaResult alpha(const LatticeBasis& basis) {
    const int d = basis.d;
    AlphaResult best;
    // rank d: the lattice itself, covolume 1
    best.value = 1.0;
    best.best_rank = d;
    best.best_subgroup_basis.clear();
    for (int i = 0; i < d; ++i) {
        std::vector<long long> e(d, 0);
        e[i] = 1;
        best.best_subgroup_basis.push_back(std::move(e));
    }
    best.exact = d <= 4;

    if (d > 6) {  // no enumeration support; certified lower bound only
        best.exact = false;
        return best;
    }

    const MinimaResult minima = successive_minima(basis, 1.0);
    const double lambda1 = minima.lambdas[0];

    const auto consider = [&](double covol, int rank,
                              const std::vector<std::vector<long long>>& witness) {
        if (1.0 / covol > best.value * (1.0 + 1e-12) ||
            (std::abs(1.0 / covol - best.value) <= 1e-12 * best.value && rank < best.best_rank)) {
            best.value = 1.0 / covol;
            best.best_rank = rank;
            best.best_subgroup_basis = witness;
        }
    };

    consider(lambda1, 1, {minima.witnesses[0]});

    // greedy minima products are always valid candidates (lower bounds)
    for (int j = 2; j < d; ++j) {
        std::vector<Vec> ortho;
        double vol = 1;
        for (int i = 0; i < j; ++i) {
            Vec v = basis.embed(minima.witnesses[i]);
            const double h = residual_against(ortho, v);
            ortho.push_back(v);
            vol *= h;
        }
        consider(vol, j, {minima.witnesses.begin(), minima.witnesses.begin() + j});
    }

    if (d > 4) {
        best.exact = false;
        return best;
    }

    // exact search over intermediate ranks (2..d-1) with the Minkowski
    // product bound: a reduced basis of any rank-j subgroup with covolume
    // <= V has norm product <= (2^j / v_j) V and each norm >= lambda_1.
    for (int rank = 2; rank < d; ++rank) {
        std::vector<Vec> ortho;
        double vbest = 1;
        for (int i = 0; i < rank; ++i) {
            Vec v = basis.embed(minima.witnesses[i]);
            vbest *= residual_against(ortho, v);
            ortho.push_back(v);
        }
        const double vj = ball_volume(rank, 1.0);
        double product_cap = std::ldexp(1.0, rank) / vj * vbest;
        const double pool_radius = product_cap / std::pow(lambda1, rank - 1);

        auto pool = short_vector_pool(basis, pool_radius);
        // canonical sign: drop -v
        std::erase_if(pool, [](const ShortVec& sv) {
            for (long long ki : sv.k) {
                if (ki > 0) return false;
                if (ki < 0) return true;
            }
            return true;
        });
        if (pool.size() > 200000) {
            best.exact = false;
            continue;
        }

        long long visits = 0;
        bool capped = false;
        std::vector<int> chosen;
        std::vector<Vec> gs;
        double best_rank_vol = vbest;
        std::vector<std::vector<long long>> best_rank_witness;

        const std::function<void(int, double, double)> search = [&](int start, double norm_prod,
                                                                    double vol) {
            if (capped) return;
            if (static_cast<int>(chosen.size()) == rank) {
                if (vol < best_rank_vol) {
                    best_rank_vol = vol;
                    best_rank_witness.clear();
                    for (int idx : chosen) best_rank_witness.push_back(pool[idx].k);
                    const double cap_new = std::ldexp(1.0, rank) / vj * best_rank_vol;
                    if (cap_new < product_cap) product_cap = cap_new;
                }
                return;
            }
            const int remaining = rank - static_cast<int>(chosen.size());
            for (int i = start; i < static_cast<int>(pool.size()); ++i) {
                if (++visits > 20000000) { capped = true; return; }
                const double n = pool[i].norm;
                if (norm_prod * std::pow(n, remaining) > product_cap * (1 + 1e-12)) break;
                Vec resid = pool[i].v;
                const double h = residual_against(gs, resid);
                if (h <= 1e-9 * n) continue;  // dependent
                chosen.push_back(i);
                gs.push_back(resid);
                search(i + 1, norm_prod * n, vol * h);
                gs.pop_back();
                chosen.pop_back();
            }
        };
        search(0, 1.0, 1.0);
        if (capped) best.exact = false;
        if (!best_rank_witness.empty()) consider(best_rank_vol, rank, best_rank_witness);
    }
    return best;
}

} // namespace latorbit
