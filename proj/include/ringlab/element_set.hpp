#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ringlab {

/// Dense element handle; handle 0 is always the zero of its ring.
using Elem = std::uint16_t;

/// Fixed-width bit-vector of element handles of one ring.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    static ElementSet full(std::size_t universe) {
        ElementSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Elem>(i));
        return s;
    }

    static ElementSet of(std::size_t universe, std::initializer_list<Elem> elems) {
        ElementSet s(universe);
        for (Elem e : elems) s.insert(e);
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(Elem e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1u; }
    void insert(Elem e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
    void erase(Elem e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

    std::size_t count() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// True when the set is {0} or empty.
    bool is_trivial() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = i == 0 ? (words_[0] & ~std::uint64_t{1}) : words_[i];
            if (w) return false;
        }
        return true;
    }

    bool subset_of(const ElementSet& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const ElementSet& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    /// Whether the sets share an element other than 0.
    bool meets_nontrivially(const ElementSet& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i] & other.words_[i];
            if (i == 0) w &= ~std::uint64_t{1};
            if (w) return true;
        }
        return false;
    }

    ElementSet& operator&=(const ElementSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    ElementSet& operator|=(const ElementSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }

    ElementSet complement() const {
        ElementSet c(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
        if (universe_ % 64) c.words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
        return c;
    }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

    /// Lowest handle in the set other than 0, or 0 when there is none.
    Elem first_nonzero() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = i == 0 ? (words_[0] & ~std::uint64_t{1}) : words_[i];
            if (w) return static_cast<Elem>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        }
        return 0;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                auto bit = static_cast<std::size_t>(std::countr_zero(w));
                f(static_cast<Elem>(i * 64 + bit));
                w &= w - 1;
            }
        }
    }

    std::vector<Elem> elements() const {
        std::vector<Elem> out;
        out.reserve(count());
        for_each([&](Elem e) { out.push_back(e); });
        return out;
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const noexcept {
        std::size_t h = s.universe();
        for (auto w : s.words()) h = h * 1099511628211ull ^ std::hash<std::uint64_t>{}(w);
        return h;
    }
};

}  // namespace ringlab
