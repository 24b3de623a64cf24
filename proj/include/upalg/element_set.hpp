#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace upalg {

/// Index of an element inside a finite carrier.  Index 0 is always the
/// constant of a validated algebra.
using Element = std::uint8_t;

/// Largest carrier any structure in the library can describe.
inline constexpr std::size_t kAbsoluteMaxOrder = 255;

/// A subset of {0, ..., n-1}.
///
/// Carriers of up to 64 elements live in a single machine word; larger
/// carriers fall back to a heap-allocated word vector.  Ordering compares
/// the sets as binary numbers (ascending mask value), which is the order
/// every enumeration in the library emits.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : n_(universe) {
    if (n_ > 64) {
      heap_.assign(word_count(), 0);
    }
  }
  ElementSet(std::size_t universe, std::initializer_list<Element> members)
      : ElementSet(universe) {
    for (auto e : members) {
      insert(e);
    }
  }

  static ElementSet from_mask(std::size_t universe, std::uint64_t mask) {
    assert(universe <= 64);
    assert(universe == 64 || (mask >> universe) == 0);
    ElementSet s(universe);
    s.word_ = mask;
    return s;
  }
  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) {
      s.insert(static_cast<Element>(i));
    }
    return s;
  }
  static ElementSet singleton(std::size_t universe, Element e) {
    ElementSet s(universe);
    s.insert(e);
    return s;
  }

  std::size_t universe() const noexcept { return n_; }
  bool is_small() const noexcept { return n_ <= 64; }

  /// Only meaningful for carriers of at most 64 elements.
  std::uint64_t mask() const noexcept {
    assert(is_small());
    return word_;
  }

  bool contains(std::size_t e) const noexcept {
    if (e >= n_) {
      return false;
    }
    return (word(e / 64) >> (e % 64)) & 1U;
  }
  void insert(std::size_t e) noexcept {
    assert(e < n_);
    word_ref(e / 64) |= std::uint64_t{1} << (e % 64);
  }
  void erase(std::size_t e) noexcept {
    assert(e < n_);
    word_ref(e / 64) &= ~(std::uint64_t{1} << (e % 64));
  }

  std::size_t size() const noexcept {
    std::size_t total = 0;
    for (std::size_t w = 0; w < word_count(); ++w) {
      total += static_cast<std::size_t>(std::popcount(word(w)));
    }
    return total;
  }
  bool empty() const noexcept { return size() == 0; }

  bool is_subset_of(ElementSet const& other) const noexcept {
    assert(n_ == other.n_);
    for (std::size_t w = 0; w < word_count(); ++w) {
      if ((word(w) & ~other.word(w)) != 0) {
        return false;
      }
    }
    return true;
  }

  ElementSet& operator&=(ElementSet const& other) noexcept {
    assert(n_ == other.n_);
    for (std::size_t w = 0; w < word_count(); ++w) {
      word_ref(w) &= other.word(w);
    }
    return *this;
  }
  ElementSet& operator|=(ElementSet const& other) noexcept {
    assert(n_ == other.n_);
    for (std::size_t w = 0; w < word_count(); ++w) {
      word_ref(w) |= other.word(w);
    }
    return *this;
  }
  friend ElementSet operator&(ElementSet lhs, ElementSet const& rhs) noexcept {
    return lhs &= rhs;
  }
  friend ElementSet operator|(ElementSet lhs, ElementSet const& rhs) noexcept {
    return lhs |= rhs;
  }

  friend bool operator==(ElementSet const& a, ElementSet const& b) noexcept {
    if (a.n_ != b.n_) {
      return false;
    }
    for (std::size_t w = 0; w < a.word_count(); ++w) {
      if (a.word(w) != b.word(w)) {
        return false;
      }
    }
    return true;
  }
  friend std::strong_ordering operator<=>(ElementSet const& a,
                                          ElementSet const& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) {
      return c;
    }
    for (std::size_t w = a.word_count(); w-- > 0;) {
      if (auto c = a.word(w) <=> b.word(w); c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  /// Forward iteration over members in ascending index order.
  class const_iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;
    using pointer = void;
    using reference = Element;

    const_iterator() = default;
    const_iterator(ElementSet const* s, std::size_t pos) : s_(s), pos_(pos) {
      skip();
    }
    Element operator*() const noexcept { return static_cast<Element>(pos_); }
    const_iterator& operator++() noexcept {
      ++pos_;
      skip();
      return *this;
    }
    const_iterator operator++(int) noexcept {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const_iterator const& a,
                           const_iterator const& b) noexcept {
      return a.pos_ == b.pos_;
    }

   private:
    void skip() noexcept {
      while (pos_ < s_->n_ && !s_->contains(pos_)) {
        ++pos_;
      }
    }
    ElementSet const* s_ = nullptr;
    std::size_t pos_ = 0;
  };

  const_iterator begin() const noexcept { return {this, 0}; }
  const_iterator end() const noexcept { return {this, n_}; }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

 private:
  std::size_t word_count() const noexcept {
    return n_ <= 64 ? 1 : (n_ + 63) / 64;
  }
  std::uint64_t word(std::size_t w) const noexcept {
    return n_ <= 64 ? word_ : heap_[w];
  }
  std::uint64_t& word_ref(std::size_t w) noexcept {
    return n_ <= 64 ? word_ : heap_[w];
  }

  std::size_t n_ = 0;
  std::uint64_t word_ = 0;
  std::vector<std::uint64_t> heap_;
};

}  // namespace upalg
