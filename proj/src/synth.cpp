#include "ballmapper/synth.hpp"

#include "ballmapper/error.hpp"
#include "ballmapper/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace ballmapper {

std::vector<double> default_correlation_grid() {
    std::vector<double> grid;
    for (int i = 1; i <= 198; ++i) grid.push_back(static_cast<double>(i) / 100.0 - 1.0);
    return grid;
}

void SyntheticSpec::validate() const {
    if (n < 3) throw ArgumentError("synthetic data needs n >= 3");
    for (double r : r_grid)
        if (!(std::abs(r) < 1.0)) throw ArgumentError("target correlations must satisfy |r| < 1");
}

double sample_mean(std::span<const double> v) {
    if (v.empty()) throw ArgumentError("mean of an empty series");
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_sd(std::span<const double> v) {
    if (v.size() < 2) throw ArgumentError("sample sd needs at least two values");
    const double m = sample_mean(v);
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

std::vector<double> standardize(std::span<const double> v) {
    const double m = sample_mean(v);
    const double s = sample_sd(v);
    if (!(s > 0.0)) throw DataError("cannot standardize a constant series");
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - m) / s;
    return out;
}

std::vector<double> ols_residuals(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ArgumentError("regression inputs differ in length");
    const double mx = sample_mean(x), my = sample_mean(y);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (!(sxx > 0.0)) throw DataError("regressor is constant");
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = y[i] - intercept - slope * x[i];
    return out;
}

std::vector<double> gen_correlated(std::span<const double> x0, std::span<const double> y0, double r) {
    if (!(std::abs(r) <= 1.0)) throw ArgumentError("target correlation must lie in [-1, 1]");
    if (x0.size() != y0.size()) throw ArgumentError("x0 and y0 differ in length");
    if (x0.size() < 3) throw ArgumentError("correlated generation needs n >= 3");

    const auto zx = standardize(x0);
    const auto resid = ols_residuals(x0, y0);
    // Residuals at rounding level mean y0 is an exact linear function of x0.
    const double scale = std::max(sample_sd(y0), std::numeric_limits<double>::min());
    if (!(sample_sd(resid) > 1e-12 * scale)) throw DataError("residuals of y0 on x0 are constant");
    const auto zr = standardize(resid);

    const double w = std::sqrt(1.0 - r * r);
    std::vector<double> out(x0.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = zx[i] * r + zr[i] * w;
    return out;
}

BaseDraws base_draws(std::size_t n, std::uint64_t seed) {
    Rng rx(derive_seed(seed, stream::base_x));
    Rng ry(derive_seed(seed, stream::base_y));
    return {rx.normals(n), ry.normals(n)};
}

PointCloud gen_grid(const SyntheticSpec& spec) {
    spec.validate();
    const auto base = base_draws(spec.n, spec.seed);
    std::vector<std::vector<double>> columns{base.x0};
    std::vector<std::string> names{"x_0"};
    for (std::size_t i = 0; i < spec.r_grid.size(); ++i) {
        columns.push_back(gen_correlated(base.x0, base.y0, spec.r_grid[i]));
        names.push_back("x_" + std::to_string(i + 1));
    }
    std::vector<double> coords(spec.n * columns.size());
    for (std::size_t row = 0; row < spec.n; ++row)
        for (std::size_t c = 0; c < columns.size(); ++c) coords[row * columns.size() + c] = columns[c][row];
    std::vector<std::size_t> ids(spec.n);
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    return PointCloud(std::move(names), std::move(coords), std::move(ids));
}

std::vector<double> gen_outcome(std::span<const double> x0, std::span<const double> y0,
                                const OutcomeSpec& spec, std::uint64_t seed) {
    if (x0.size() != y0.size()) throw ArgumentError("x0 and y0 differ in length");
    if (!std::isfinite(spec.coef_x) || !std::isfinite(spec.coef_y) || !std::isfinite(spec.noise_sd))
        throw ArgumentError("outcome coefficients must be finite");
    if (spec.noise_sd < 0.0) throw ArgumentError("noise sd must be nonnegative");
    Rng rng(derive_seed(seed, stream::outcome_noise));
    std::vector<double> out(x0.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double noise = rng.normal();
        out[i] = spec.coef_x * x0[i] + spec.coef_y * y0[i] + spec.noise_sd * noise;
    }
    return out;
}

PointCloud gen_normal_cloud(std::size_t n, std::size_t d, const std::vector<double>& targets,
                            std::uint64_t seed) {
    if (d < 1) throw ArgumentError("cloud needs at least one dimension");
    if (n < 3) throw ArgumentError("cloud needs n >= 3");
    if (targets.size() + 1 != d)
        throw ArgumentError("expected " + std::to_string(d - 1) + " correlation targets, got " +
                            std::to_string(targets.size()));
    for (double r : targets)
        if (!(std::abs(r) < 1.0)) throw ArgumentError("infeasible correlation target (|r| must be < 1)");

    Rng base(derive_seed(seed, stream::base_x));
    std::vector<std::vector<double>> columns{base.normals(n)};
    for (std::size_t k = 1; k < d; ++k) {
        Rng rng(derive_seed(seed, stream::cloud_column + k));
        const auto draw = rng.normals(n);
        columns.push_back(gen_correlated(columns[0], draw, targets[k - 1]));
    }
    std::vector<std::string> names;
    for (std::size_t k = 0; k < d; ++k) names.push_back("x" + std::to_string(k));
    std::vector<double> coords(n * d);
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t c = 0; c < d; ++c) coords[row * d + c] = columns[c][row];
    std::vector<std::size_t> ids(n);
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    return PointCloud(std::move(names), std::move(coords), std::move(ids));
}

}  // namespace ballmapper
