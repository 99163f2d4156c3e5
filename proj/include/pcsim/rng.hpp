#pragma once

#include <cstdint>
#include <random>

namespace pcsim {

/// Seedable random source. One instance per simulation run; every consumer
/// draws from it in event order so runs are bit-reproducible. mt19937_64 has
/// an implementation-independent sequence, so reports are stable across
/// platforms as well.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    bool coin() { return (eng_() & 1u) != 0; }

    uint64_t next() { return eng_(); }

    // [0, bound). Modulo bias is irrelevant for test-sized bounds and keeps
    // the draw sequence platform-independent (uniform_int_distribution is not).
    uint64_t below(uint64_t bound) { return eng_() % bound; }

private:
    std::mt19937_64 eng_;
};

} // namespace pcsim
