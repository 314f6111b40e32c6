#pragma once

#include "f4gvm/verma.hpp"

#include <cstdint>

namespace testing {

// splitmix64; fixed seeds keep every property run reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    f4gvm::ConcreteLabels labels(std::int64_t lo = 1, std::int64_t hi = 9) {
        return {between(lo, hi), between(lo, hi), between(lo, hi), between(lo, hi)};
    }

private:
    std::uint64_t state_;
};

} // namespace testing
