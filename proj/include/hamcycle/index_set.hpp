#ifndef HAMCYCLE_INDEX_SET_HPP
#define HAMCYCLE_INDEX_SET_HPP

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hamcycle {

/// Fixed-universe bitmask over indices 0..size-1. The tag keeps edge masks
/// and vertex masks from being mixed up.
template <class Tag>
class IndexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    IndexSet() = default;
    explicit IndexSet(std::size_t universe)
        : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

    [[nodiscard]] std::size_t universe() const noexcept { return universe_; }

    void set(std::size_t i) {
        assert(i < universe_);
        words_[i / kWordBits] |= Word{1} << (i % kWordBits);
    }
    void reset(std::size_t i) {
        assert(i < universe_);
        words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
    }
    void flip(std::size_t i) {
        assert(i < universe_);
        words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
    }
    [[nodiscard]] bool test(std::size_t i) const {
        assert(i < universe_);
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
    }

    [[nodiscard]] std::size_t count() const noexcept {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    [[nodiscard]] bool empty() const noexcept {
        for (Word w : words_)
            if (w) return false;
        return true;
    }
    void clear() noexcept {
        for (Word& w : words_) w = 0;
    }

    IndexSet& operator^=(const IndexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    IndexSet& operator&=(const IndexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    IndexSet& operator|=(const IndexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend IndexSet operator^(IndexSet a, const IndexSet& b) { return a ^= b; }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }

    [[nodiscard]] std::size_t intersection_count(const IndexSet& o) const {
        assert(universe_ == o.universe_);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    /// Calls f(index) for each member in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            Word w = words_[wi];
            while (w) {
                const int b = std::countr_zero(w);
                f(wi * kWordBits + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    [[nodiscard]] std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    [[nodiscard]] const std::vector<Word>& words() const noexcept { return words_; }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend auto operator<=>(const IndexSet& a, const IndexSet& b) {
        if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
        return a.words_ <=> b.words_;
    }

private:
    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

struct EdgeTag {};
struct VertexTag {};

using EdgeSet = IndexSet<EdgeTag>;
using VertexSet = IndexSet<VertexTag>;

} // namespace hamcycle

#endif // HAMCYCLE_INDEX_SET_HPP
