#ifndef REACHIDX_BITS_HPP
#define REACHIDX_BITS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace reachidx {

// Fixed-universe bit set over vertex ids [0, n).
class BitSet {
public:
    BitSet() = default;
    explicit BitSet(uint32_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    void set(uint32_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(uint32_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    uint32_t universe() const { return n_; }

    uint64_t count() const {
        uint64_t c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    void or_with(const BitSet& other) {
        size_t k = std::min(words_.size(), other.words_.size());
        for (size_t i = 0; i < k; ++i) words_[i] |= other.words_[i];
    }

    bool intersects(const BitSet& other) const {
        size_t k = std::min(words_.size(), other.words_.size());
        for (size_t i = 0; i < k; ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    uint64_t intersect_count(const BitSet& other) const {
        size_t k = std::min(words_.size(), other.words_.size());
        uint64_t c = 0;
        for (size_t i = 0; i < k; ++i) c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    void clear() { words_.assign(words_.size(), 0); }
    void release() { n_ = 0; words_.clear(); words_.shrink_to_fit(); }
    bool empty_storage() const { return words_.empty(); }

    std::vector<uint32_t> to_vector() const {
        std::vector<uint32_t> out;
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t bits = words_[w];
            while (bits) {
                out.push_back(static_cast<uint32_t>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t bits = words_[w];
            while (bits) {
                f(static_cast<uint32_t>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

private:
    uint32_t n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace reachidx

#endif
