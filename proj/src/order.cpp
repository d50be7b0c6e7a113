#include "omplab/order.hpp"

#include <algorithm>
#include <numeric>

namespace omplab {

namespace {

Relation transpose(const Relation& r) {
  const std::size_t n = r.size();
  Relation t(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) r[i].for_each([&](Element j) { t[j].set(i); });
  return t;
}

void close_transitively(Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i].test(k)) r[i] |= r[k];
}

}  // namespace

Poset::Poset(Relation up) : up_(std::move(up)), down_(transpose(up_)) {}

std::size_t Poset::comparable_pairs() const noexcept {
  std::size_t c = 0;
  for (const auto& row : up_) c += row.count();
  return c;
}

Verdict check_order_axioms(const Relation& leq) {
  const std::size_t n = leq.size();
  for (std::size_t i = 0; i < n; ++i)
    if (leq[i].size() != n)
      return Verdict::fail("NotSquare", {{"row", static_cast<Element>(i)}});
  for (Element i = 0; i < n; ++i)
    if (!leq[i].test(i)) return Verdict::fail("NotReflexive", {{"i", i}});
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (leq[i].test(j) && leq[j].test(i))
        return Verdict::fail("NotAntisymmetric", {{"i", i}, {"j", j}});
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) {
      if (!leq[i].test(j)) continue;
      if (!leq[j].is_subset_of(leq[i])) {
        for (Element k = 0; k < n; ++k)
          if (leq[j].test(k) && !leq[i].test(k))
            return Verdict::fail("NotTransitive", {{"i", i}, {"j", j}, {"k", k}});
      }
    }
  return Verdict::ok();
}

Poset Poset::from_relation(Relation leq) {
  if (leq.empty()) throw ValidationError(Verdict::fail("EmptyCarrier"));
  if (auto v = check_order_axioms(leq); !v) throw ValidationError(std::move(v));
  return Poset(std::move(leq));
}

Poset validate_poset(Relation leq) { return Poset::from_relation(std::move(leq)); }

Poset poset_from_rows(std::span<const std::string_view> rows) {
  const std::size_t n = rows.size();
  Relation r(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw ValidationError(Verdict::fail("NotSquare", {{"row", static_cast<Element>(i)}}));
    for (std::size_t j = 0; j < n; ++j) {
      const char c = rows[i][j];
      if (c == '1')
        r[i].set(j);
      else if (c != '0')
        throw ValidationError(
            Verdict::fail("BadCharacter", {{"row", static_cast<Element>(i)},
                                           {"column", static_cast<Element>(j)}}));
    }
  }
  return Poset::from_relation(std::move(r));
}

Poset poset_from_rows(std::initializer_list<std::string_view> rows) {
  return poset_from_rows(std::span<const std::string_view>(rows.begin(), rows.size()));
}

Poset poset_from_covers(std::size_t n,
                        std::span<const std::pair<Element, Element>> less_pairs) {
  Relation r = identity_relation(n);
  for (auto [a, b] : less_pairs) r[a].set(b);
  close_transitively(r);
  return Poset::from_relation(std::move(r));
}

Poset poset_from_covers(std::size_t n,
                        std::initializer_list<std::pair<Element, Element>> less_pairs) {
  return poset_from_covers(
      n, std::span<const std::pair<Element, Element>>(less_pairs.begin(), less_pairs.size()));
}

Poset opposite(const Poset& p) {
  Relation r(p.size(), Bitset(p.size()));
  for (Element i = 0; i < p.size(); ++i) r[i] = p.down(i);
  return Poset::from_relation(std::move(r));
}

BoundedPoset::BoundedPoset(Poset p, Element zero, Element one)
    : poset_(std::move(p)), zero_(zero), one_(one) {}

BoundedPoset validate_bounded(Poset p, BoundOptions opts) {
  const std::size_t n = p.size();
  std::optional<Element> zero, one;
  for (Element x = 0; x < n; ++x) {
    if (!zero && p.up(x).count() == n) zero = x;
    if (!one && p.down(x).count() == n) one = x;
  }
  if (!zero) throw ValidationError(Verdict::fail("NoBottom"));
  if (!one) throw ValidationError(Verdict::fail("NoTop"));
  if (opts.forbid_trivial && n == 1)
    throw ValidationError(Verdict::fail("Trivial", {}, "one-element poset forbidden"));
  return BoundedPoset(std::move(p), *zero, *one);
}

Verdict check_map_shape(std::size_t source_size, std::size_t target_size,
                        std::span<const Element> map) {
  if (map.size() != source_size)
    return Verdict::fail("BadMap", {}, "map length " + std::to_string(map.size()) +
                                           " != source size " +
                                           std::to_string(source_size));
  for (Element x = 0; x < map.size(); ++x)
    if (map[x] >= target_size)
      return Verdict::fail("BadMap", {{"x", x}}, "image out of range");
  return Verdict::ok();
}

Verdict is_isotone(const Poset& source, const Poset& target,
                   std::span<const Element> map) {
  if (auto v = check_map_shape(source.size(), target.size(), map); !v) return v;
  for (Element x = 0; x < source.size(); ++x) {
    Verdict bad = Verdict::ok();
    source.up(x).for_each([&](Element y) {
      if (bad.pass && !target.leq(map[x], map[y]))
        bad = Verdict::fail("NotIsotone", {{"x", x}, {"y", y}});
    });
    if (!bad) return bad;
  }
  return Verdict::ok();
}

std::vector<Element> product_coordinates(std::span<const std::size_t> radices,
                                         Element index) {
  std::vector<Element> coords(radices.size());
  for (std::size_t k = radices.size(); k-- > 0;) {
    coords[k] = static_cast<Element>(index % radices[k]);
    index = static_cast<Element>(index / radices[k]);
  }
  return coords;
}

BoundedPoset product(std::span<const BoundedPoset> factors, std::size_t limit) {
  std::size_t total = 1;
  std::vector<std::size_t> radices;
  for (const auto& f : factors) {
    radices.push_back(f.size());
    if (total > limit / f.size()) throw SizeOverflow("product", total * f.size(), limit);
    total *= f.size();
  }
  require_size("product", total, limit);

  std::vector<std::vector<Element>> coords(total);
  for (Element i = 0; i < total; ++i) coords[i] = product_coordinates(radices, i);

  Relation r(total, Bitset(total));
  for (Element i = 0; i < total; ++i)
    for (Element j = 0; j < total; ++j) {
      bool le = true;
      for (std::size_t k = 0; k < factors.size() && le; ++k)
        le = factors[k].leq(coords[i][k], coords[j][k]);
      if (le) r[i].set(j);
    }

  Element zero = 0, one = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    zero = static_cast<Element>(zero * radices[k] + factors[k].zero());
    one = static_cast<Element>(one * radices[k] + factors[k].one());
  }
  return BoundedPoset(Poset::from_relation(std::move(r)), zero, one);
}

std::optional<Element> IntervalPoset::index_of(Element a, Element b) const {
  const auto v = index[static_cast<std::size_t>(a) * base_size + b];
  if (v < 0) return std::nullopt;
  return static_cast<Element>(v);
}

IntervalPoset interval_poset(const Poset& p) {
  IntervalPoset out;
  out.base_size = p.size();
  out.index.assign(p.size() * p.size(), -1);
  for (Element a = 0; a < p.size(); ++a)
    p.up(a).for_each([&](Element b) {
      out.index[static_cast<std::size_t>(a) * p.size() + b] =
          static_cast<std::int32_t>(out.pairs.size());
      out.pairs.emplace_back(a, b);
    });
  const std::size_t m = out.pairs.size();
  Relation r(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto [a, b] = out.pairs[i];
      const auto [c, d] = out.pairs[j];
      if (p.leq(c, a) && p.leq(b, d)) r[i].set(j);
    }
  out.poset = Poset::from_relation(std::move(r));
  return out;
}

std::optional<Element> least_of(const Poset& p, const Bitset& set) {
  for (std::size_t u = set.first(); u < set.size(); u = set.next(u))
    if (set.is_subset_of(p.up(static_cast<Element>(u)))) return static_cast<Element>(u);
  return std::nullopt;
}

std::optional<Element> greatest_of(const Poset& p, const Bitset& set) {
  for (std::size_t u = set.first(); u < set.size(); u = set.next(u))
    if (set.is_subset_of(p.down(static_cast<Element>(u)))) return static_cast<Element>(u);
  return std::nullopt;
}

std::optional<Element> glb(const Poset& p, Element x, Element y) {
  return greatest_of(p, p.down(x) & p.down(y));
}

std::optional<Element> lub(const Poset& p, Element x, Element y) {
  return least_of(p, p.up(x) & p.up(y));
}

Verdict check_lattice(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y) {
      if (!lub(p, x, y)) return Verdict::fail("NoJoin", {{"x", x}, {"y", y}});
      if (!glb(p, x, y)) return Verdict::fail("NoMeet", {{"x", x}, {"y", y}});
    }
  return Verdict::ok();
}

std::vector<std::pair<Element, Element>> covers(const Poset& p) {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < p.size(); ++a)
    p.up(a).for_each([&](Element b) {
      if (a != b && (p.up(a) & p.down(b)).count() == 2) out.emplace_back(a, b);
    });
  return out;
}

namespace detail {

namespace {

struct IsoSearch {
  const Poset& p;
  const Poset& q;
  std::span<const Element> inv_p;
  std::span<const Element> inv_q;
  const std::function<bool(const Map&)>& visit;

  std::vector<std::pair<std::size_t, std::size_t>> sig_p, sig_q;
  std::vector<std::int64_t> image;  // -1 unassigned
  std::vector<bool> used;
  std::vector<Element> assigned;  // assignment order, for consistency checks
  bool stop = false;

  bool involutive() const { return !inv_p.empty() && !inv_q.empty(); }

  bool consistent(Element x, Element y) const {
    if (sig_p[x] != sig_q[y]) return false;
    for (Element z : assigned) {
      const auto w = static_cast<Element>(image[z]);
      if (p.leq(x, z) != q.leq(y, w) || p.leq(z, x) != q.leq(w, y)) return false;
    }
    return true;
  }

  void assign(Element x, Element y) {
    image[x] = y;
    used[y] = true;
    assigned.push_back(x);
  }
  void unassign(Element x) {
    used[static_cast<Element>(image[x])] = false;
    image[x] = -1;
    assigned.pop_back();
  }

  void run(Element x) {
    const std::size_t n = p.size();
    while (x < n && image[x] >= 0) ++x;
    if (x == n) {
      Map m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Element>(image[i]);
      if (!visit(m)) stop = true;
      return;
    }
    for (Element y = 0; y < n && !stop; ++y) {
      if (used[y] || !consistent(x, y)) continue;
      if (involutive()) {
        const Element xp = inv_p[x];
        const Element yp = inv_q[y];
        if ((xp == x) != (yp == y)) continue;
        if (xp == x) {
          assign(x, y);
          run(x + 1);
          unassign(x);
          continue;
        }
        // xp > x is guaranteed unassigned: partners are assigned together.
        assign(x, y);
        if (!used[yp] && consistent(xp, yp)) {
          assign(xp, yp);
          run(x + 1);
          unassign(xp);
        }
        unassign(x);
      } else {
        assign(x, y);
        run(x + 1);
        unassign(x);
      }
    }
  }
};

std::vector<std::pair<std::size_t, std::size_t>> signature(const Poset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> s(p.size());
  for (Element x = 0; x < p.size(); ++x) s[x] = {p.up(x).count(), p.down(x).count()};
  return s;
}

}  // namespace

void for_each_isomorphism(const Poset& p, const Poset& q,
                          std::span<const Element> inv_p,
                          std::span<const Element> inv_q,
                          const std::function<bool(const Map&)>& visit) {
  if (p.size() != q.size()) return;
  IsoSearch s{p, q, inv_p, inv_q, visit, signature(p), signature(q), {}, {}, {}, false};
  auto sp = s.sig_p, sq = s.sig_q;
  std::sort(sp.begin(), sp.end());
  std::sort(sq.begin(), sq.end());
  if (sp != sq) return;
  s.image.assign(p.size(), -1);
  s.used.assign(p.size(), false);
  s.run(0);
}

}  // namespace detail

std::optional<Map> find_isomorphism(const Poset& p, const Poset& q) {
  std::optional<Map> found;
  detail::for_each_isomorphism(p, q, {}, {}, [&](const Map& m) {
    found = m;
    return false;
  });
  return found;
}

std::vector<Map> automorphisms(const Poset& p) {
  std::vector<Map> out;
  detail::for_each_isomorphism(p, p, {}, {}, [&](const Map& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace omplab
