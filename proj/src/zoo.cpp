#include "omplab/zoo.hpp"

namespace omplab::zoo {

BoundedPoset chain(std::size_t n) {
  std::vector<std::pair<Element, Element>> less;
  for (Element i = 0; i + 1 < n; ++i) less.emplace_back(i, i + 1);
  return validate_bounded(poset_from_covers(n, less));
}

BoundedPoset antichain_with_bounds(std::size_t k) {
  const auto top = static_cast<Element>(k + 1);
  std::vector<std::pair<Element, Element>> less{{0, top}};
  for (Element i = 1; i <= k; ++i) {
    less.emplace_back(0, i);
    less.emplace_back(i, top);
  }
  return validate_bounded(poset_from_covers(k + 2, less));
}

InvolutivePoset reversed_chain(std::size_t n) {
  Map inv(n);
  for (Element i = 0; i < n; ++i) inv[i] = static_cast<Element>(n - 1 - i);
  return validate_involutive(chain(n), std::move(inv));
}

InvolutivePoset boolean_algebra(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  Relation r(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if ((a & ~b) == 0) r[a].set(b);
  Map inv(n);
  for (std::size_t a = 0; a < n; ++a) inv[a] = static_cast<Element>((n - 1) & ~a);
  return validate_involutive(validate_bounded(Poset::from_relation(std::move(r))),
                             std::move(inv));
}

InvolutivePoset mo(std::size_t k) {
  const std::size_t n = 2 * k + 2;
  const auto top = static_cast<Element>(n - 1);
  std::vector<std::pair<Element, Element>> less{{0, top}};
  Map inv(n);
  inv[0] = top;
  inv[top] = 0;
  for (Element i = 1; i < top; ++i) {
    less.emplace_back(0, i);
    less.emplace_back(i, top);
    inv[i] = (i % 2 == 1) ? i + 1 : i - 1;
  }
  return validate_involutive(validate_bounded(poset_from_covers(n, less)), std::move(inv));
}

InvolutivePoset hexagon() {
  // 0, a, b, b', a', 1
  const Poset p = poset_from_covers(6, {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}});
  return validate_involutive(validate_bounded(p), Map{5, 4, 3, 2, 1, 0});
}

std::vector<std::string> mo_names(std::size_t k) {
  std::vector<std::string> names{"0"};
  for (std::size_t i = 0; i < k; ++i) {
    const std::string atom(1, static_cast<char>('a' + i));
    names.push_back(atom);
    names.push_back(atom + "'");
  }
  names.emplace_back("1");
  return names;
}

std::vector<std::string> hexagon_names() { return {"0", "a", "b", "b'", "a'", "1"}; }

OmpStructure as_omp(const InvolutivePoset& p) { return omp_to_partial_ops(p); }

}  // namespace omplab::zoo
