#pragma once

// Dense bit-table representation of subsets of the word space {0..q-1}^n.
//
// Words are identified with their lexicographic index (see encode_word), so a
// subset of q^n words is a bit vector of q^n bits.  The two structural maps of
// the theory are index arithmetic on this table:
//
//   shift: dropping the first symbol sends index x to x mod q^(n-1), so the
//     image of a set is the OR-fold of its q consecutive blocks of length
//     q^(n-1);
//   lift (cylinder): appending j-i free symbols sends index b to the run
//     [b*q^(j-i), (b+1)*q^(j-i)), so the lifted table is block replication.
//
// Every constructor routes through checked_universe, which enforces the
// process-wide capacity guard (default 2^28 indices).  Sets are value types;
// treat them as immutable after construction; all set operations return new
// sets, and add() exists for the construction phase only.

#include <nonoverlap/errors.hpp>
#include <nonoverlap/ratio.hpp>
#include <nonoverlap/word.hpp>

#include <atomic>
#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace nonoverlap {

namespace detail {

inline std::uint64_t mask_low(std::uint64_t k) {
    return k >= 64 ? ~0ull : (1ull << k) - 1;
}

/// dst[0 .. len) |= src[begin .. begin+len).  dst must hold ceil(len/64) words.
inline void or_bit_range(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                         std::uint64_t begin, std::uint64_t len) {
    const std::uint64_t w0 = begin >> 6;
    const unsigned off = begin & 63u;
    const std::uint64_t nw = (len + 63) >> 6;
    for (std::uint64_t i = 0; i < nw; ++i) {
        std::uint64_t v = src[w0 + i] >> off;
        if (off && w0 + i + 1 < src.size()) v |= src[w0 + i + 1] << (64 - off);
        const std::uint64_t done = i << 6;
        if (len - done < 64) v &= mask_low(len - done);
        dst[i] |= v;
    }
}

/// words |= all bits in [begin, begin+len), len > 0.
inline void fill_run(std::vector<std::uint64_t>& words, std::uint64_t begin, std::uint64_t len) {
    const std::uint64_t end = begin + len;
    const std::uint64_t wb = begin >> 6, we = (end - 1) >> 6;
    if (wb == we) {
        words[wb] |= mask_low(end - (wb << 6)) & ~mask_low(begin - (wb << 6));
        return;
    }
    words[wb] |= ~mask_low(begin & 63u);
    for (std::uint64_t w = wb + 1; w < we; ++w) words[w] = ~0ull;
    words[we] |= mask_low(end - (we << 6));
}

inline std::uint64_t count_range(const std::vector<std::uint64_t>& words, std::uint64_t begin,
                                 std::uint64_t len) {
    if (len == 0) return 0;
    const std::uint64_t end = begin + len;
    const std::uint64_t wb = begin >> 6, we = (end - 1) >> 6;
    if (wb == we)
        return std::popcount(words[wb] & mask_low(end - (wb << 6)) & ~mask_low(begin - (wb << 6)));
    std::uint64_t c = std::popcount(words[wb] & ~mask_low(begin & 63u));
    for (std::uint64_t w = wb + 1; w < we; ++w) c += std::popcount(words[w]);
    c += std::popcount(words[we] & mask_low(end - (we << 6)));
    return c;
}

inline std::atomic<std::uint64_t>& max_index_slot() {
    static std::atomic<std::uint64_t> guard{1ull << 28};
    return guard;
}

}  // namespace detail

inline std::uint64_t max_index_guard() { return detail::max_index_slot().load(); }
inline void set_max_index_guard(std::uint64_t v) { detail::max_index_slot().store(v); }

/// q^n, rejecting universes past the capacity guard.
inline std::uint64_t checked_universe(unsigned q, unsigned n) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (n == 0) throw std::invalid_argument("word length must be positive");
    const std::uint64_t guard = max_index_guard();
    std::uint64_t size = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (size > guard / q)
            throw capacity_error("universe size " + std::to_string(q) + "^" + std::to_string(n) +
                                 " exceeds the capacity guard of " + std::to_string(guard) +
                                 " indices");
        size *= q;
    }
    return size;
}

class WordSet {
public:
    WordSet(unsigned q, unsigned n, bool filled = false)
        : q_(q), n_(n), size_(checked_universe(q, n)), words_((size_ + 63) >> 6, 0) {
        if (filled) {
            for (auto& w : words_) w = ~0ull;
            trim_tail();
            count_ = size_;
        }
    }

    static WordSet empty_set(unsigned q, unsigned n) { return WordSet(q, n, false); }
    static WordSet full_set(unsigned q, unsigned n) { return WordSet(q, n, true); }

    static WordSet from_indices(unsigned q, unsigned n, std::initializer_list<std::uint64_t> xs) {
        WordSet s(q, n);
        for (std::uint64_t x : xs) s.add(x);
        return s;
    }

    static WordSet from_words(unsigned q, unsigned n, const std::vector<Word>& ws) {
        WordSet s(q, n);
        for (const Word& w : ws) {
            if (w.q != q || w.length() != n)
                throw std::invalid_argument("word does not match the set's alphabet and length");
            s.add(encode_word(w));
        }
        return s;
    }

    unsigned q() const { return q_; }
    unsigned n() const { return n_; }
    std::uint64_t universe_size() const { return size_; }
    std::uint64_t count() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(std::uint64_t x) const {
        check_index(x);
        return (words_[x >> 6] >> (x & 63u)) & 1u;
    }

    void add(std::uint64_t x) {
        check_index(x);
        std::uint64_t& w = words_[x >> 6];
        const std::uint64_t bit = 1ull << (x & 63u);
        count_ += !(w & bit);
        w |= bit;
    }

    /// Normalized counting measure |S| / q^n.
    Ratio measure() const { return Ratio(BigInt(count_), ipow(BigInt(q_), n_)); }

    bool operator==(const WordSet& o) const {
        return q_ == o.q_ && n_ == o.n_ && words_ == o.words_;
    }

    bool is_subset_of(const WordSet& o) const {
        require_same_space(o, "subset test");
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    template <typename Fn>
    void for_each_member(Fn&& fn) const {  // ascending index order
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                fn((static_cast<std::uint64_t>(wi) << 6) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint64_t> members() const {
        std::vector<std::uint64_t> out;
        out.reserve(count_);
        for_each_member([&](std::uint64_t x) { out.push_back(x); });
        return out;
    }

    /// Members of S with index in [begin, begin+len).
    std::uint64_t count_range(std::uint64_t begin, std::uint64_t len) const {
        if (begin + len > size_) throw std::out_of_range("index range past universe");
        return detail::count_range(words_, begin, len);
    }

    friend WordSet set_union(const WordSet& a, const WordSet& b) {
        a.require_same_space(b, "union");
        WordSet r(a.q_, a.n_);
        for (std::size_t i = 0; i < a.words_.size(); ++i) r.words_[i] = a.words_[i] | b.words_[i];
        r.recount();
        return r;
    }

    friend WordSet set_intersect(const WordSet& a, const WordSet& b) {
        a.require_same_space(b, "intersection");
        WordSet r(a.q_, a.n_);
        for (std::size_t i = 0; i < a.words_.size(); ++i) r.words_[i] = a.words_[i] & b.words_[i];
        r.recount();
        return r;
    }

    friend WordSet set_difference(const WordSet& a, const WordSet& b) {
        a.require_same_space(b, "difference");
        WordSet r(a.q_, a.n_);
        for (std::size_t i = 0; i < a.words_.size(); ++i) r.words_[i] = a.words_[i] & ~b.words_[i];
        r.recount();
        return r;
    }

    friend WordSet set_complement(const WordSet& a) {
        WordSet r(a.q_, a.n_);
        for (std::size_t i = 0; i < a.words_.size(); ++i) r.words_[i] = ~a.words_[i];
        r.trim_tail();
        r.count_ = a.size_ - a.count_;
        return r;
    }

    /// Image under dropping the first symbol: {x mod q^(n-1) : x in S}.
    friend WordSet shift_set(const WordSet& a) {
        if (a.n_ < 2) throw std::invalid_argument("shift needs word length at least 2");
        WordSet r(a.q_, a.n_ - 1);
        const std::uint64_t block = r.size_;
        for (unsigned t = 0; t < a.q_; ++t)
            detail::or_bit_range(r.words_, a.words_, static_cast<std::uint64_t>(t) * block, block);
        r.recount();
        return r;
    }

    /// Cylinder over longer words: S x Omega^(j - n(S)), indices replicated in runs.
    friend WordSet lift_set(const WordSet& a, unsigned j) {
        if (j < a.n_) throw std::invalid_argument("lift target length below source length");
        if (j == a.n_) return a;
        WordSet r(a.q_, j);
        const std::uint64_t factor = r.size_ / a.size_;
        a.for_each_member(
            [&](std::uint64_t x) { detail::fill_run(r.words_, x * factor, factor); });
        r.count_ = a.count_ * factor;
        return r;
    }

private:
    void check_index(std::uint64_t x) const {
        if (x >= size_) throw std::out_of_range("word index " + std::to_string(x) +
                                                " out of range for universe of size " +
                                                std::to_string(size_));
    }

    void require_same_space(const WordSet& o, const char* op) const {
        if (q_ != o.q_ || n_ != o.n_)
            throw std::invalid_argument(std::string(op) +
                                        " requires operands over the same word space");
    }

    void trim_tail() {
        const unsigned tail = size_ & 63u;
        if (tail) words_.back() &= detail::mask_low(tail);
    }

    void recount() {
        std::uint64_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        count_ = c;
    }

    unsigned q_, n_;
    std::uint64_t size_;
    std::vector<std::uint64_t> words_;
    std::uint64_t count_ = 0;
};

inline WordSet shift_iterate(WordSet s, unsigned times) {
    for (unsigned i = 0; i < times; ++i) s = shift_set(s);
    return s;
}

/// Uniform draw from [0, bound) by rejection; identical on every platform,
/// unlike std::uniform_int_distribution.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty draw range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// Uniform m-subset of the q^n indices (selection sampling, one pass).
inline WordSet random_word_set(unsigned q, unsigned n, std::uint64_t m, std::mt19937_64& rng) {
    WordSet s(q, n);
    const std::uint64_t size = s.universe_size();
    if (m > size) throw std::invalid_argument("subset size exceeds universe");
    std::uint64_t need = m;
    for (std::uint64_t x = 0; x < size && need > 0; ++x) {
        if (bounded_draw(rng, size - x) < need) {
            s.add(x);
            --need;
        }
    }
    return s;
}

}  // namespace nonoverlap
