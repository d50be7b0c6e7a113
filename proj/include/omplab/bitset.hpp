#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "omplab/types.hpp"

namespace omplab {

/// Fixed-width dynamic bitset used for rows of order relations and element
/// subsets.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void set_all() noexcept;

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const noexcept { return !none(); }

  /// Lowest set index, or size() when empty.
  std::size_t first() const noexcept;
  /// Lowest set index greater than i, or size().
  std::size_t next(std::size_t i) const noexcept;

  bool is_subset_of(const Bitset& other) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const auto b = static_cast<std::size_t>(std::countr_zero(bits));
        f(static_cast<Element>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Element> elements() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row-major square boolean matrix; row i is a Bitset over columns.
using Relation = std::vector<Bitset>;

Relation identity_relation(std::size_t n);

}  // namespace omplab
