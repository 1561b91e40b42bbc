#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace ontoforge {

/// The single source of randomness for dataset generation.
///
/// std::mt19937_64 seeded directly with the 64-bit seed. Its output sequence
/// is fixed by the standard; the standard distributions are not, so bounded
/// draws use rejection sampling on raw engine output and shuffles are a
/// Fisher-Yates pass from the back. Given a seed, every draw is identical
/// on every conforming platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    bool coin() { return (engine_() >> 63) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            auto j = static_cast<std::size_t>(below(i));
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace ontoforge
