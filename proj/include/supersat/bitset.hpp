#ifndef SUPERSAT_BITSET_HPP
#define SUPERSAT_BITSET_HPP

#include <cstdint>
#include <vector>

namespace supersat {

// Fixed-capacity dynamic bitset used for adjacency and edge-incidence
// indexes.  Kept minimal on purpose: set/test/intersection/popcount.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { words_[static_cast<size_t>(i) >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }

    Bitset& operator&=(const Bitset& o) {
        for (size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_) if (w) return true;
        return false;
    }

    bool intersects(const Bitset& o) const {
        for (size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (int i = 0; i < nbits_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

private:
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace supersat

#endif
