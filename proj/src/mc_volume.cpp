#include "latorbit/region.hpp"
#include "latorbit/rng.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latorbit {

namespace {

constexpr long long kChunk = 16384;

long long chunk_hits(const Region& reg, const BoundingBox& bb,
                     std::uint64_t seed, long long chunk_index, long long count) {
    CounterRng rng(CounterRng::derive_key(seed, static_cast<std::uint64_t>(chunk_index)));
    const int d = static_cast<int>(bb.lo.size());
    Vec v(d);
    long long hits = 0;
    for (long long s = 0; s < count; ++s) {
        for (int i = 0; i < d; ++i) v[i] = rng.uniform(bb.lo[i], bb.hi[i]);
        if (reg.contains(v)) ++hits;
    }
    return hits;
}

VolumeEstimate estimate_from_hits(double box_volume, long long hits, long long samples) {
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    VolumeEstimate est;
    est.value = box_volume * p;
    est.std_error = box_volume * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    return est;
}

} // namespace

VolumeEstimate region_volume_monte_carlo(const Region& reg, const MonteCarloOptions& opt) {
    if (opt.samples < 1) throw std::invalid_argument("region_volume_monte_carlo: samples >= 1");
    const BoundingBox bb = reg.bounds();
    const long long nchunks = (opt.samples + kChunk - 1) / kChunk;
    std::vector<long long> hits(nchunks, 0);
#ifdef _OPENMP
    const int threads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long long k = 0; k < nchunks; ++k) {
        const long long count = std::min(kChunk, opt.samples - k * kChunk);
        hits[k] = chunk_hits(reg, bb, opt.seed, k, count);
    }
    long long total = 0;
    for (long long h : hits) total += h;  // integer reduction, order-free
    return estimate_from_hits(bb.volume(), total, opt.samples);
}

VolumeEstimate region_volume(const Region& reg, VolumeMethod method,
                             const MonteCarloOptions& opt) {
    if (method == VolumeMethod::ClosedForm) {
        return {reg.closed_form_volume(), 0.0};
    }
    return region_volume_monte_carlo(reg, opt);
}

namespace reference {

VolumeEstimate region_volume_monte_carlo_serial(const Region& reg, const MonteCarloOptions& opt) {
    if (opt.samples < 1) throw std::invalid_argument("samples >= 1");
    const BoundingBox bb = reg.bounds();
    const long long nchunks = (opt.samples + kChunk - 1) / kChunk;
    long long total = 0;
    for (long long k = 0; k < nchunks; ++k) {
        const long long count = std::min(kChunk, opt.samples - k * kChunk);
        total += chunk_hits(reg, bb, opt.seed, k, count);
    }
    return estimate_from_hits(bb.volume(), total, opt.samples);
}

} // namespace reference

} // namespace latorbit
