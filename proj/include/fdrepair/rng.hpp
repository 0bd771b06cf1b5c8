#pragma once

#include <cstdint>
#include <vector>

namespace fdrepair {

// SplitMix64.  Hand-rolled so repairs are reproducible across platforms and
// standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::size_t bounded(std::size_t n) { return n ? static_cast<std::size_t>(next() % n) : 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[bounded(i)]);
    }

private:
    std::uint64_t state_;
};

} // namespace fdrepair
