#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace chordtd {

/// Dense vertex index. Indices follow the canonical vertex order of the host graph.
using Vertex = int;

/// Set of vertex indices backed by a growable bitset.
///
/// Trailing zero words are always trimmed, so two sets with the same members
/// compare equal regardless of how they were built. Ordering is the
/// lexicographic order of the sorted member lists, which is the order in which
/// sets are emitted everywhere in the library.
class VertexSet {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        const_iterator() = default;
        const_iterator(const std::vector<std::uint64_t>* words, std::size_t pos) : words_(words), pos_(pos) {
            advance();
        }

        Vertex operator*() const { return static_cast<Vertex>(pos_); }
        const_iterator& operator++() {
            ++pos_;
            advance();
            return *this;
        }
        const_iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

    private:
        void advance() {
            const std::size_t limit = words_->size() * 64;
            while (pos_ < limit) {
                std::uint64_t w = (*words_)[pos_ / 64] >> (pos_ % 64);
                if (w != 0) {
                    pos_ += static_cast<std::size_t>(std::countr_zero(w));
                    return;
                }
                pos_ = (pos_ / 64 + 1) * 64;
            }
            pos_ = limit;
        }

        const std::vector<std::uint64_t>* words_ = nullptr;
        std::size_t pos_ = 0;
    };

    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }
    template <typename Range>
    static VertexSet from(const Range& range) {
        VertexSet s;
        for (Vertex v : range) s.insert(v);
        return s;
    }
    /// The set {0, ..., n-1}.
    static VertexSet full(int n) {
        VertexSet s;
        for (Vertex v = 0; v < n; ++v) s.insert(v);
        return s;
    }

    void insert(Vertex v) {
        const auto w = static_cast<std::size_t>(v) / 64;
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t{1} << (static_cast<std::size_t>(v) % 64);
    }
    void erase(Vertex v) {
        const auto w = static_cast<std::size_t>(v) / 64;
        if (w >= words_.size()) return;
        words_[w] &= ~(std::uint64_t{1} << (static_cast<std::size_t>(v) % 64));
        trim();
    }
    bool contains(Vertex v) const {
        const auto w = static_cast<std::size_t>(v) / 64;
        return w < words_.size() && ((words_[w] >> (static_cast<std::size_t>(v) % 64)) & 1U);
    }

    int size() const {
        int n = 0;
        for (auto w : words_) n += std::popcount(w);
        return n;
    }
    bool empty() const { return words_.empty(); }

    /// Smallest member; undefined on the empty set.
    Vertex front() const { return *begin(); }

    const_iterator begin() const { return const_iterator(&words_, 0); }
    const_iterator end() const { return const_iterator(&words_, words_.size() * 64); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    bool subset_of(const VertexSet& other) const {
        if (words_.size() > other.words_.size()) return false;
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~other.words_[i]) != 0) return false;
        return true;
    }
    bool intersects(const VertexSet& other) const {
        const auto n = std::min(words_.size(), other.words_.size());
        for (std::size_t i = 0; i < n; ++i)
            if ((words_[i] & other.words_[i]) != 0) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
        for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        if (words_.size() > o.words_.size()) words_.resize(o.words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        trim();
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        const auto n = std::min(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < n; ++i) words_[i] &= ~o.words_[i];
        trim();
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Lexicographic order of the sorted member lists.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        // The smallest element d of the symmetric difference decides: the set
        // missing d is smaller unless it has no member above d (then it is a
        // proper prefix of the other list).
        const auto n = std::max(a.words_.size(), b.words_.size());
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t wa = i < a.words_.size() ? a.words_[i] : 0;
            const std::uint64_t wb = i < b.words_.size() ? b.words_[i] : 0;
            const std::uint64_t diff = wa ^ wb;
            if (diff == 0) continue;
            const auto bit = static_cast<std::size_t>(std::countr_zero(diff));
            const std::size_t d = i * 64 + bit;
            const bool in_a = ((wa >> bit) & 1U) != 0;
            const VertexSet& lacking = in_a ? b : a;
            const bool lacking_has_more = lacking.has_member_above(d);
            const bool a_smaller = in_a ? lacking_has_more : !lacking_has_more;
            return a_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    std::size_t hash() const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    bool has_member_above(std::size_t d) const {
        const std::size_t w = d / 64;
        if (w >= words_.size()) return false;
        const std::size_t bit = d % 64;
        const std::uint64_t above = bit == 63 ? 0 : (words_[w] >> (bit + 1));
        if (above != 0) return true;
        return w + 1 < words_.size();
    }
    void trim() {
        while (!words_.empty() && words_.back() == 0) words_.pop_back();
    }

    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace chordtd
