#pragma once

#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "omplab/bitset.hpp"
#include "omplab/types.hpp"

namespace omplab {

/// Finite partial order on {0..n-1}. Immutable once validated; stores both
/// the up-set and the down-set of every element.
class Poset {
 public:
  /// Validates reflexivity, antisymmetry and transitivity (in that order).
  /// Throws ValidationError tagged NotReflexive / NotAntisymmetric /
  /// NotTransitive.
  static Poset from_relation(Relation leq);

  /// Empty placeholder (size 0); never produced by validation.
  Poset() = default;

  std::size_t size() const noexcept { return up_.size(); }
  bool leq(Element a, Element b) const noexcept { return up_[a].test(b); }
  bool less(Element a, Element b) const noexcept { return a != b && leq(a, b); }
  bool comparable(Element a, Element b) const noexcept {
    return leq(a, b) || leq(b, a);
  }

  const Bitset& up(Element a) const noexcept { return up_[a]; }
  const Bitset& down(Element a) const noexcept { return down_[a]; }
  const Relation& relation() const noexcept { return up_; }

  /// Number of 1-entries of the relation matrix.
  std::size_t comparable_pairs() const noexcept;

  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

 private:
  explicit Poset(Relation up);
  Relation up_;
  Relation down_;
};

Verdict check_order_axioms(const Relation& leq);
Poset validate_poset(Relation leq);

/// Rows of '0'/'1' characters, row i column j set iff i <= j.
Poset poset_from_rows(std::span<const std::string_view> rows);
Poset poset_from_rows(std::initializer_list<std::string_view> rows);

/// Reflexive-transitive closure of the given strict relations.
Poset poset_from_covers(std::size_t n,
                        std::span<const std::pair<Element, Element>> less_pairs);
Poset poset_from_covers(std::size_t n,
                        std::initializer_list<std::pair<Element, Element>> less_pairs);

/// Order dual: a <= b in the result iff b <= a in p.
Poset opposite(const Poset& p);

struct BoundOptions {
  bool forbid_trivial = false;
};

class BoundedPoset {
 public:
  BoundedPoset(Poset p, Element zero, Element one);

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  bool leq(Element a, Element b) const noexcept { return poset_.leq(a, b); }
  Element zero() const noexcept { return zero_; }
  Element one() const noexcept { return one_; }

  friend bool operator==(const BoundedPoset&, const BoundedPoset&) = default;

 private:
  Poset poset_;
  Element zero_;
  Element one_;
};

/// Locates the global minimum and maximum. Throws ValidationError tagged
/// NoBottom / NoTop (or Trivial when forbidden).
BoundedPoset validate_bounded(Poset p, BoundOptions opts = {});

/// Pass iff x <= y implies map[x] <= map[y]; witness (x, y). Also rejects
/// malformed maps (tag BadMap).
Verdict is_isotone(const Poset& source, const Poset& target,
                   std::span<const Element> map);

/// Length and range check shared by every morphism checker.
Verdict check_map_shape(std::size_t source_size, std::size_t target_size,
                        std::span<const Element> map);

/// Cartesian product with componentwise order. Tuple (i_1,...,i_k) is
/// element ((i_1 * n_2 + i_2) * n_3 + ...), leftmost factor most
/// significant. The empty product is the one-element poset.
BoundedPoset product(std::span<const BoundedPoset> factors,
                     std::size_t limit = max_carrier());

/// Decode a product index into per-factor coordinates.
std::vector<Element> product_coordinates(std::span<const std::size_t> radices,
                                         Element index);

/// Comparable pairs (a, b), a <= b, ordered by reverse inclusion of
/// endpoints: (a,b) <= (c,d) iff c <= a and b <= d.
struct IntervalPoset {
  Poset poset;
  std::vector<std::pair<Element, Element>> pairs;
  std::optional<Element> index_of(Element a, Element b) const;

  std::size_t base_size = 0;
  std::vector<std::int32_t> index;  // base_size * base_size, -1 if absent
};

/// Pairs are listed row-major (a, then b).
IntervalPoset interval_poset(const Poset& p);

std::optional<Element> glb(const Poset& p, Element x, Element y);
std::optional<Element> lub(const Poset& p, Element x, Element y);

/// Least element of the given set, if it has one.
std::optional<Element> least_of(const Poset& p, const Bitset& set);
std::optional<Element> greatest_of(const Poset& p, const Bitset& set);

/// Pass iff all binary meets and joins exist; witness (x, y).
Verdict check_lattice(const Poset& p);

/// Pairs (a, b) with a covered by b, in row-major order.
std::vector<std::pair<Element, Element>> covers(const Poset& p);

/// First order isomorphism p -> q found by backtracking, if one exists.
std::optional<Map> find_isomorphism(const Poset& p, const Poset& q);

/// All order automorphisms, lexicographically ordered.
std::vector<Map> automorphisms(const Poset& p);

}  // namespace omplab

namespace omplab::detail {

/// Visits every order isomorphism p -> q that, when both involution spans
/// are non-empty, also satisfies map[inv_p[x]] = inv_q[map[x]]. Maps arrive in
/// lexicographic order; the search stops when visit returns false.
void for_each_isomorphism(const Poset& p, const Poset& q,
                          std::span<const Element> inv_p,
                          std::span<const Element> inv_q,
                          const std::function<bool(const Map&)>& visit);

}  // namespace omplab::detail
