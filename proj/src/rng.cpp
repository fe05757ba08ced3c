#include "fairdea/rng.hpp"

#include <cmath>

#include "fairdea/errors.hpp"

namespace fairdea {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

} // namespace

std::uint64_t sub_seed(std::uint64_t seed, std::string_view label) {
    return splitmix64(splitmix64(seed) ^ fnv1a64(label));
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x51ed2701ULL));
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_int(std::uint64_t n) {
    if (n == 0) throw Error(Errc::empty_input, "uniform_int over empty range");
    // rejection sampling keeps the draw exactly uniform
    std::uint64_t limit = ~0ULL - (~0ULL % n + 1) % n;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x > limit);
    return x % n;
}

double Rng::normal() {
    double u1 = uniform_open();
    double u2 = uniform_open();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double Rng::gamma(double shape, double scale) {
    if (shape <= 0.0 || scale <= 0.0)
        throw Error(Errc::bad_config, "gamma requires positive shape and scale");
    if (shape < 1.0) {
        // boost: G(a) = G(a+1) * U^{1/a}
        double u = uniform_open();
        return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = uniform_open();
        if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v))
            return d * v * scale;
    }
}

double Rng::beta(double a, double b) {
    double x = gamma(a, 1.0);
    double y = gamma(b, 1.0);
    return x / (x + y);
}

} // namespace fairdea
