#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace ballmapper {

/// Seeded generator with output fixed across platforms: the std::mt19937_64
/// engine with hand-written uniform, integer and normal transforms.
///
/// The name/version pair is echoed in generated sidecars; any change to the
/// transforms below must bump the version.
class Rng {
public:
    static constexpr std::string_view name = "mt19937_64+polar";
    static constexpr int version = 1;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform integer on [0, bound) without modulo bias.
    std::uint64_t below(std::uint64_t bound);

    // Standard normal via the Marsaglia polar method.
    double normal();

    std::vector<double> normals(std::size_t n);

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// SplitMix64 finaliser over (seed, stream), used to give independent
// columns their own generator.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace ballmapper
