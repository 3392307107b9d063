#ifndef REACHIDX_RNG_HPP
#define REACHIDX_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace reachidx {

// All randomized construction goes through these helpers instead of the
// std distributions / std::shuffle, whose outputs are not pinned by the
// standard. mt19937_64 itself is fully specified, so seeded runs produce
// identical indexes on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    // uniform in [0, bound), bound >= 1, by rejection
    uint64_t below(uint64_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % bound;
    }

    double unit() {  // uniform in [0,1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {  // Fisher-Yates
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

inline std::vector<uint32_t> random_permutation(uint32_t n, Rng& rng) {
    std::vector<uint32_t> p(n);
    for (uint32_t i = 0; i < n; ++i) p[i] = i;
    rng.shuffle(p);
    return p;
}

}  // namespace reachidx

#endif
