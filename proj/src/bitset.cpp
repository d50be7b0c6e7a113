#include "omplab/bitset.hpp"

namespace omplab {

void Bitset::set_all() noexcept {
  for (auto& w : words_) w = ~std::uint64_t{0};
  if (const auto tail = n_ & 63; tail != 0 && !words_.empty())
    words_.back() = (std::uint64_t{1} << tail) - 1;
}

std::size_t Bitset::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w])
      return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return n_;
}

std::size_t Bitset::next(std::size_t i) const noexcept {
  ++i;
  if (i >= n_) return n_;
  std::size_t w = i >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (bits) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size()) return n_;
    bits = words_[w];
  }
}

std::vector<Element> Bitset::elements() const {
  std::vector<Element> out;
  out.reserve(count());
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

Relation identity_relation(std::size_t n) {
  Relation r(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) r[i].set(i);
  return r;
}

}  // namespace omplab
