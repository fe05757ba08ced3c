#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace fairdea {

/// Derive an independent stream seed from (seed, label). Used to fan a
/// master seed out to stages, groups, folds and permutation iterations so
/// results do not depend on evaluation order.
std::uint64_t sub_seed(std::uint64_t seed, std::string_view label);
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index);

/// Deterministic RNG: mt19937_64 engine (bit-exact across platforms) with
/// explicit distribution transforms, so sampled values never depend on the
/// standard library's unspecified distribution algorithms.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0,1).
    double uniform();
    /// Uniform on (0,1).
    double uniform_open();
    /// Uniform integer in [0, n).
    std::uint64_t uniform_int(std::uint64_t n);
    /// Standard normal (Box-Muller, no state carried between calls).
    double normal();
    double normal(double mean, double sd) { return mean + sd * normal(); }
    /// Gamma with given shape and scale (Marsaglia-Tsang).
    double gamma(double shape, double scale);
    /// Beta(a, b) via two gamma draws.
    double beta(double a, double b);
    int bernoulli(double p) { return uniform() < p ? 1 : 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_int(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace fairdea
