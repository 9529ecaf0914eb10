#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace hypermatch {

using Word = std::uint64_t;

inline constexpr int kWordBits = 64;

inline int words_for(int nbits) { return (nbits + kWordBits - 1) / kWordBits; }

// Vertex set over a fixed universe [0, n).  Sets with up to 128 bits live in
// inline storage; larger universes fall back to the heap.  Disjointness tests
// dominate the matching solver, so the word array is kept contiguous and
// accessible as a span.
class Bitset {
public:
    Bitset() : nbits_(0), nwords_(0) {}

    explicit Bitset(int nbits) : nbits_(nbits), nwords_(words_for(nbits)) {
        small_.fill(0);
        if (nwords_ > kInlineWords) big_.assign(static_cast<size_t>(nwords_), 0);
    }

    int size_bits() const { return nbits_; }
    int word_count() const { return nwords_; }

    void set(int i) { data()[i / kWordBits] |= Word(1) << (i % kWordBits); }
    void reset(int i) { data()[i / kWordBits] &= ~(Word(1) << (i % kWordBits)); }

    bool test(int i) const {
        return (data()[i / kWordBits] >> (i % kWordBits)) & 1u;
    }

    void clear() {
        small_.fill(0);
        for (Word& w : big_) w = 0;
    }

    int count() const {
        int c = 0;
        for (int w = 0; w < nwords_; ++w) c += std::popcount(data()[w]);
        return c;
    }

    bool intersects(std::span<const Word> other) const {
        const Word* a = data();
        for (size_t w = 0; w < other.size(); ++w)
            if (a[w] & other[w]) return true;
        return false;
    }

    bool contains_all(std::span<const Word> other) const {
        const Word* a = data();
        for (size_t w = 0; w < other.size(); ++w)
            if ((a[w] & other[w]) != other[w]) return false;
        return true;
    }

    void add(std::span<const Word> other) {
        Word* a = data();
        for (size_t w = 0; w < other.size(); ++w) a[w] |= other[w];
    }

    void remove(std::span<const Word> other) {
        Word* a = data();
        for (size_t w = 0; w < other.size(); ++w) a[w] &= ~other[w];
    }

    std::span<const Word> words() const { return {data(), static_cast<size_t>(nwords_)}; }

    bool operator==(const Bitset& other) const {
        if (nbits_ != other.nbits_) return false;
        for (int w = 0; w < nwords_; ++w)
            if (data()[w] != other.data()[w]) return false;
        return true;
    }

    std::vector<int> to_vertices() const {
        std::vector<int> out;
        for (int w = 0; w < nwords_; ++w) {
            Word bits = data()[w];
            while (bits) {
                int b = std::countr_zero(bits);
                out.push_back(w * kWordBits + b);
                bits &= bits - 1;
            }
        }
        return out;
    }

private:
    static constexpr int kInlineWords = 2;

    Word* data() { return nwords_ <= kInlineWords ? small_.data() : big_.data(); }
    const Word* data() const {
        return nwords_ <= kInlineWords ? small_.data() : big_.data();
    }

    int nbits_;
    int nwords_;
    std::array<Word, kInlineWords> small_{};
    std::vector<Word> big_;
};

inline bool words_disjoint(std::span<const Word> a, std::span<const Word> b) {
    for (size_t w = 0; w < a.size(); ++w)
        if (a[w] & b[w]) return false;
    return true;
}

} // namespace hypermatch
