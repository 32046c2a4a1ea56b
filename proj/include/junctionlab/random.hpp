#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

namespace junctionlab {

/// Seeded gaussian draws via Box-Muller on mt19937. std::normal_distribution
/// is implementation-defined; this stays bit-identical across standard
/// libraries, which the reproducibility contract of the CLI relies on.
inline std::vector<double> gaussian_noise(std::size_t n, double sigma, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<double> out(n);
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        const double u1 = 1.0 - uniform(rng);  // avoid log(0)
        const double u2 = uniform(rng);
        const double r = std::sqrt(-2.0 * std::log(u1));
        out[i] = sigma * r * std::cos(2.0 * M_PI * u2);
        out[i + 1] = sigma * r * std::sin(2.0 * M_PI * u2);
    }
    if (n % 2 == 1) {
        const double u1 = 1.0 - uniform(rng);
        const double u2 = uniform(rng);
        out[n - 1] = sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
    return out;
}

}  // namespace junctionlab
