#pragma once

#include "ballmapper/cloud.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ballmapper {

// r_i = i/100 - 1 for i = 1..198.
std::vector<double> default_correlation_grid();

struct SyntheticSpec {
    std::size_t n = 1000;
    std::uint64_t seed = 0;
    std::vector<double> r_grid = default_correlation_grid();

    void validate() const;
};

struct OutcomeSpec {
    double coef_x = 0.3;
    double coef_y = 0.6;
    double noise_sd = 1.0;
};

// Substream ids used with derive_seed; part of the reproducibility contract.
namespace stream {
inline constexpr std::uint64_t base_x = 0;
inline constexpr std::uint64_t base_y = 1;
inline constexpr std::uint64_t outcome_noise = 2;
inline constexpr std::uint64_t cloud_column = 16;  // + column index
}  // namespace stream

double sample_mean(std::span<const double> v);
double sample_sd(std::span<const double> v);  // divisor n - 1

// (v - mean) / sd with the sample sd. Throws DataError for constant input.
std::vector<double> standardize(std::span<const double> v);

// Residuals of the simple least-squares fit y ~ a + b x.
std::vector<double> ols_residuals(std::span<const double> x, std::span<const double> y);

/// standardize(x0) * r + standardize(residuals(y0 ~ x0)) * sqrt(1 - r^2).
/// The result has sample correlation r with x0 up to rounding.
std::vector<double> gen_correlated(std::span<const double> x0, std::span<const double> y0, double r);

struct BaseDraws {
    std::vector<double> x0;
    std::vector<double> y0;
};

// Two independent standard normal columns drawn from the seed's base streams.
BaseDraws base_draws(std::size_t n, std::uint64_t seed);

// Columns x_0 followed by x_1.. one per grid entry, all built from the same
// (x0, y0) base draws.
PointCloud gen_grid(const SyntheticSpec& spec);

// M = coef_x * x0 + coef_y * y0 + noise_sd * N(0, 1), noise drawn from the
// seed's outcome stream.
std::vector<double> gen_outcome(std::span<const double> x0, std::span<const double> y0,
                                const OutcomeSpec& spec, std::uint64_t seed);

// Axes x0..x{d-1}: x0 standard normal, every further column built by
// gen_correlated against x0 with its own independent draw. targets.size()
// must be d - 1.
PointCloud gen_normal_cloud(std::size_t n, std::size_t d, const std::vector<double>& targets,
                            std::uint64_t seed);

}  // namespace ballmapper
