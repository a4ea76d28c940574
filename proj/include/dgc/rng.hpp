#ifndef DGC_RNG_HPP
#define DGC_RNG_HPP

#include <cstdint>

namespace dgc {

// Deterministic splitmix64 stream. We avoid <random> distributions on purpose:
// their output is implementation-defined, and bit-identical replays across
// platforms are part of the contract.
class Rng {
public:
    explicit Rng(std::uint64_t seed)
        : state_(seed)
    {
    }

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound >= 1. Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t bound)
    {
        if (bound <= 1)
            return 0;
        std::uint64_t limit = ~std::uint64_t { 0 } - ~std::uint64_t { 0 } % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    // Bernoulli with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

// Hash-combines (seed, a, b) into an independent substream seed, so individual
// nodes or phases can be replayed without replaying the whole run.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0)
{
    std::uint64_t h = seed;
    h ^= (a + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    h *= 0xff51afd7ed558ccdULL;
    h ^= (b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    h *= 0xc4ceb9fe1a85ec53ULL;
    h ^= h >> 33;
    return h;
}

} // namespace dgc

#endif
