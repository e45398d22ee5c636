#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace aklt {

template <class F>
McEstimate mc_integrate(unsigned spheres, std::uint32_t stream, const McConfig& cfg, F&& f) {
    constexpr std::uint64_t kBatch = 1 << 14;
    const Philox4x32 gen(cfg.seed);
    const std::uint64_t n = cfg.samples;
    const std::uint64_t batches = (n + kBatch - 1) / kBatch;
    std::vector<double> s1(batches, 0.0), s2(batches, 0.0);
    std::atomic<std::uint64_t> next{0};

    auto worker = [&] {
        std::vector<SpherePoint> pts(spheres);
        for (std::uint64_t b; (b = next.fetch_add(1)) < batches;) {
            const std::uint64_t lo = b * kBatch, hi = std::min(n, lo + kBatch);
            double a1 = 0, a2 = 0;
            for (std::uint64_t i = lo; i < hi; ++i) {
                for (unsigned k = 0; k < spheres; ++k) pts[k] = sample_sphere(gen, i, k, stream);
                const double v = f(pts);
                a1 += v;
                a2 += v * v;
            }
            s1[b] = a1;
            s2[b] = a2;
        }
    };
    const unsigned t = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(batches)));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < t; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    double sum = 0, sq = 0;
    for (std::uint64_t b = 0; b < batches; ++b) {
        sum += s1[b];
        sq += s2[b];
    }
    McEstimate out;
    const double dn = static_cast<double>(n);
    out.estimate = sum / dn;
    const double var = std::max(0.0, sq / dn - out.estimate * out.estimate);
    out.std_error = std::sqrt(var / (dn > 1 ? dn - 1 : 1));
    return out;
}

}  // namespace aklt
