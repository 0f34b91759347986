#ifndef MLT_RNG_HPP
#define MLT_RNG_HPP

#include <cstdint>

namespace mlt {

// splitmix64 step; chosen over std::mt19937_64 so that seeded runs are
// byte-identical across standard library implementations.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ull * (salt + 1));
    splitmix64(s);
    splitmix64(s);
    return s;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64(state_); }

    // uniform in [0, bound), bound > 0; rejection sampling avoids modulo bias
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % bound;
    }

    // uniform integer in [lo, hi], inclusive
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // independent child stream, deterministic in (current state, salt)
    Rng fork(std::uint64_t salt) { return Rng(mix_seed(next(), salt)); }

private:
    std::uint64_t state_;
};

} // namespace mlt

#endif
