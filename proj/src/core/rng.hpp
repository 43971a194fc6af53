#ifndef IRA_CORE_RNG_HPP
#define IRA_CORE_RNG_HPP

#include <cstdint>
#include <vector>

namespace ira {

// splitmix64: deterministic across platforms, unlike the standard library
// distributions. Each consumer derives its own stream from a mixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n > 0 (Lemire-style rejection)
    std::uint64_t below(std::uint64_t n) {
        for (;;) {
            std::uint64_t x = next();
            unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
            std::uint64_t lo = static_cast<std::uint64_t>(m);
            if (lo >= n) return static_cast<std::uint64_t>(m >> 64);
            std::uint64_t t = (~n + 1) % n;
            if (lo >= t) return static_cast<std::uint64_t>(m >> 64);
        }
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        Rng r(a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2)));
        return r.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace ira

#endif
