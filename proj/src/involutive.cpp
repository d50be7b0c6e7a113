#include "omplab/involutive.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace omplab {

InvolutivePoset::InvolutivePoset(BoundedPoset base, Map inv)
    : base_(std::move(base)), inv_(std::move(inv)) {}

Verdict check_involution(const BoundedPoset& b, std::span<const Element> perm) {
  const std::size_t n = b.size();
  if (perm.size() != n)
    return Verdict::fail("NotPermutation", {}, "length " + std::to_string(perm.size()));
  std::vector<bool> hit(n, false);
  for (Element x = 0; x < n; ++x) {
    if (perm[x] >= n || hit[perm[x]])
      return Verdict::fail("NotPermutation", {{"x", x}});
    hit[perm[x]] = true;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (b.leq(x, y) && !b.leq(perm[y], perm[x]))
        return Verdict::fail("NotAntitone", {{"x", x}, {"y", y}});
  for (Element x = 0; x < n; ++x)
    if (perm[perm[x]] != x) return Verdict::fail("NotInvolutive", {{"x", x}});
  // Antitone involutions swap the bounds; a failure here is a checker bug.
  if (perm[b.zero()] != b.one() || perm[b.one()] != b.zero())
    throw ContractViolation(Verdict::fail("ZeroPrime", {{"zero", b.zero()}}));
  return Verdict::ok();
}

InvolutivePoset validate_involutive(BoundedPoset b, Map perm) {
  if (auto v = check_involution(b, perm); !v) throw ValidationError(std::move(v));
  return InvolutivePoset(std::move(b), std::move(perm));
}

bool orthogonal(const InvolutivePoset& p, Element x, Element y) {
  return p.orthogonal(x, y);
}

std::optional<Element> OrthoPoset::index_of(Element x, Element y) const {
  const auto v = index[static_cast<std::size_t>(x) * base_size + y];
  if (v < 0) return std::nullopt;
  return static_cast<Element>(v);
}

OrthoPoset ortho_poset(const InvolutivePoset& p) {
  const std::size_t n = p.size();
  OrthoPoset out;
  out.base_size = n;
  out.index.assign(n * n, -1);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (p.orthogonal(x, y)) {
        out.index[static_cast<std::size_t>(x) * n + y] =
            static_cast<std::int32_t>(out.pairs.size());
        out.pairs.emplace_back(x, y);
      }
  const std::size_t m = out.pairs.size();
  Relation r(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (p.leq(out.pairs[i].first, out.pairs[j].first) &&
          p.leq(out.pairs[i].second, out.pairs[j].second))
        r[i].set(j);
  out.poset = Poset::from_relation(std::move(r));
  return out;
}

TripleOrthoPoset triple_ortho_poset(const InvolutivePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::array<Element, 3>> triples;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!p.orthogonal(x, y)) continue;
      for (Element z = 0; z < n; ++z)
        if (p.orthogonal(x, z) && p.orthogonal(y, z)) triples.push_back({x, y, z});
    }
  const std::size_t m = triples.size();
  Relation r(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      bool le = true;
      for (int k = 0; k < 3 && le; ++k) le = p.leq(triples[i][k], triples[j][k]);
      if (le) r[i].set(j);
    }
  return TripleOrthoPoset{Poset::from_relation(std::move(r)), std::move(triples)};
}

Verdict is_bposinv_morphism(const InvolutivePoset& source,
                            const InvolutivePoset& target,
                            std::span<const Element> map) {
  if (auto v = is_isotone(source.poset(), target.poset(), map); !v) return v;
  if (map[source.zero()] != target.zero())
    return Verdict::fail("ZeroNotPreserved", {{"x", source.zero()}});
  if (map[source.one()] != target.one())
    return Verdict::fail("OneNotPreserved", {{"x", source.one()}});
  for (Element x = 0; x < source.size(); ++x)
    if (map[source.prime(x)] != target.prime(map[x]))
      return Verdict::fail("InvolutionNotPreserved", {{"x", x}});
  return Verdict::ok();
}

namespace {

struct MorphismSearch {
  const InvolutivePoset& src;
  const InvolutivePoset& dst;
  const std::function<bool(const Map&)>& visit;
  const ImageFilter& allowed;
  std::vector<std::int64_t> image;
  std::vector<Element> assigned;
  bool stop = false;

  bool admissible(Element x, Element y) const {
    if (!allowed.empty() && !allowed[x].test(y)) return false;
    if (x == src.zero() && y != dst.zero()) return false;
    if (x == src.one() && y != dst.one()) return false;
    for (Element z : assigned) {
      const auto w = static_cast<Element>(image[z]);
      if (src.leq(x, z) && !dst.leq(y, w)) return false;
      if (src.leq(z, x) && !dst.leq(w, y)) return false;
    }
    return true;
  }

  void run(Element x) {
    const std::size_t n = src.size();
    while (x < n && image[x] >= 0) ++x;
    if (x == n) {
      Map m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Element>(image[i]);
      if (!visit(m)) stop = true;
      return;
    }
    const Element xp = src.prime(x);
    for (Element y = 0; y < dst.size() && !stop; ++y) {
      const Element yp = dst.prime(y);
      if (xp == x && yp != y) continue;
      if (!admissible(x, y)) continue;
      image[x] = y;
      assigned.push_back(x);
      if (xp == x) {
        run(x + 1);
      } else if (admissible(xp, yp)) {
        image[xp] = yp;
        assigned.push_back(xp);
        run(x + 1);
        assigned.pop_back();
        image[xp] = -1;
      }
      assigned.pop_back();
      image[x] = -1;
    }
  }
};

}  // namespace

void for_each_bposinv_morphism(const InvolutivePoset& source,
                               const InvolutivePoset& target,
                               const std::function<bool(const Map&)>& visit,
                               const ImageFilter& allowed) {
  MorphismSearch s{source, target, visit, allowed, {}, {}, false};
  s.image.assign(source.size(), -1);
  s.run(0);
}

std::vector<Map> enumerate_bposinv_morphisms(const InvolutivePoset& source,
                                             const InvolutivePoset& target,
                                             std::size_t limit) {
  std::vector<Map> out;
  for_each_bposinv_morphism(source, target, [&](const Map& m) {
    if (out.size() == limit) throw SizeOverflow("morphism enumeration", limit + 1, limit);
    out.push_back(m);
    return true;
  });
  return out;
}

std::optional<Map> find_involutive_isomorphism(const InvolutivePoset& p,
                                               const InvolutivePoset& q) {
  std::optional<Map> found;
  detail::for_each_isomorphism(p.poset(), q.poset(), p.involution(), q.involution(),
                               [&](const Map& m) {
                                 found = m;
                                 return false;
                               });
  return found;
}

std::vector<Map> involutive_automorphisms(const InvolutivePoset& p) {
  std::vector<Map> out;
  detail::for_each_isomorphism(p.poset(), p.poset(), p.involution(), p.involution(),
                               [&](const Map& m) {
                                 out.push_back(m);
                                 return true;
                               });
  return out;
}

InvolutivePoset involutive_product(std::span<const InvolutivePoset> factors,
                                   std::size_t limit) {
  std::vector<BoundedPoset> bases;
  std::vector<std::size_t> radices;
  for (const auto& f : factors) {
    bases.push_back(f.base());
    radices.push_back(f.size());
  }
  BoundedPoset prod = product(bases, limit);
  Map inv(prod.size());
  for (Element i = 0; i < prod.size(); ++i) {
    auto c = product_coordinates(radices, i);
    Element idx = 0;
    for (std::size_t k = 0; k < factors.size(); ++k)
      idx = static_cast<Element>(idx * radices[k] + factors[k].prime(c[k]));
    inv[i] = idx;
  }
  return validate_involutive(std::move(prod), std::move(inv));
}

Map compose(std::span<const Element> g, std::span<const Element> f) {
  Map out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

Map identity_map(std::size_t n) {
  Map m(n);
  std::iota(m.begin(), m.end(), Element{0});
  return m;
}

namespace {

struct DisjointSets {
  std::vector<Element> parent;
  explicit DisjointSets(std::size_t n) : parent(identity_map(n)) {}
  Element find(Element x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Smaller root wins, so representatives are class minima.
  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

Coequalizer coequalizer_bposinv(const InvolutivePoset& a, const InvolutivePoset& b,
                                std::span<const Element> f,
                                std::span<const Element> g) {
  if (auto v = is_bposinv_morphism(a, b, f); !v) throw ValidationError(std::move(v));
  if (auto v = is_bposinv_morphism(a, b, g); !v) throw ValidationError(std::move(v));

  const std::size_t n = b.size();
  DisjointSets classes(n);
  for (Element x = 0; x < a.size(); ++x) classes.unite(f[x], g[x]);

  bool changed = true;
  while (changed) {
    changed = false;
    // Close under x ~ y => x' ~ y'.
    for (bool inv_changed = true; inv_changed;) {
      inv_changed = false;
      for (Element x = 0; x < n; ++x)
        if (classes.unite(b.prime(x), b.prime(classes.find(x)))) inv_changed = true;
    }
    // Preorder on classes, then merge its cycles.
    std::vector<Element> roots;
    std::vector<std::int64_t> slot(n, -1);
    for (Element x = 0; x < n; ++x) {
      const Element r = classes.find(x);
      if (slot[r] < 0) {
        slot[r] = static_cast<std::int64_t>(roots.size());
        roots.push_back(r);
      }
    }
    const std::size_t k = roots.size();
    Relation pre = identity_relation(k);
    for (Element x = 0; x < n; ++x)
      b.poset().up(x).for_each([&](Element y) {
        pre[slot[classes.find(x)]].set(static_cast<std::size_t>(slot[classes.find(y)]));
      });
    for (std::size_t m = 0; m < k; ++m)
      for (std::size_t i = 0; i < k; ++i)
        if (pre[i].test(m)) pre[i] |= pre[m];
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (pre[i].test(j) && pre[j].test(i) && classes.unite(roots[i], roots[j]))
          changed = true;
  }

  Map q(n);
  std::vector<std::int64_t> id(n, -1);
  Element next = 0;
  for (Element x = 0; x < n; ++x) {
    const Element r = classes.find(x);
    if (id[r] < 0) id[r] = next++;
    q[x] = static_cast<Element>(id[r]);
  }
  Relation leq = identity_relation(next);
  for (Element x = 0; x < n; ++x)
    b.poset().up(x).for_each([&](Element y) { leq[q[x]].set(q[y]); });
  for (std::size_t m = 0; m < next; ++m)
    for (std::size_t i = 0; i < next; ++i)
      if (leq[i].test(m)) leq[i] |= leq[m];
  Map inv(next);
  for (Element x = 0; x < n; ++x) inv[q[x]] = q[b.prime(x)];

  InvolutivePoset quotient = [&] {
    try {
      return validate_involutive(validate_bounded(Poset::from_relation(std::move(leq))),
                                 std::move(inv));
    } catch (const ValidationError& e) {
      throw ContractViolation(e.verdict());
    }
  }();

  if (auto v = is_bposinv_morphism(b, quotient, q); !v) throw ContractViolation(v);
  for (Element x = 0; x < a.size(); ++x)
    if (q[f[x]] != q[g[x]])
      throw ContractViolation(Verdict::fail("NotCoequalizing", {{"a", x}}));
  return Coequalizer{std::move(quotient), std::move(q)};
}

Verdict check_split_data(const InvolutivePoset& a, const InvolutivePoset& b,
                         const InvolutivePoset& q_obj,
                         const SplitCoequalizerData& data) {
  auto tagged = [](Verdict v, const char* which) {
    if (!v) v.detail = std::string(which) + (v.detail.empty() ? "" : ": " + v.detail);
    return v;
  };
  if (auto v = is_bposinv_morphism(a, b, data.f); !v) return tagged(v, "f");
  if (auto v = is_bposinv_morphism(a, b, data.g); !v) return tagged(v, "g");
  if (auto v = is_bposinv_morphism(b, q_obj, data.q); !v) return tagged(v, "q");
  if (auto v = is_bposinv_morphism(q_obj, b, data.t); !v) return tagged(v, "t");
  if (auto v = is_bposinv_morphism(b, a, data.s); !v) return tagged(v, "s");
  for (Element x = 0; x < a.size(); ++x)
    if (data.q[data.f[x]] != data.q[data.g[x]])
      return Verdict::fail("NotCoequalizing", {{"a", x}});
  for (Element y = 0; y < q_obj.size(); ++y)
    if (data.q[data.t[y]] != y) return Verdict::fail("SectionQT", {{"y", y}});
  for (Element x = 0; x < b.size(); ++x) {
    if (data.f[data.s[x]] != x) return Verdict::fail("SectionFS", {{"x", x}});
    if (data.g[data.s[x]] != data.t[data.q[x]])
      return Verdict::fail("SplitSquare", {{"x", x}});
  }
  return Verdict::ok();
}

std::optional<SplitCoequalizerData> find_split_data(
    const InvolutivePoset& a, const InvolutivePoset& b, std::span<const Element> f,
    std::span<const Element> g, const InvolutivePoset& q_obj,
    std::span<const Element> q, std::size_t max_b) {
  require_size("split-data search", b.size(), max_b);
  for (Element x = 0; x < a.size(); ++x)
    if (q[f[x]] != q[g[x]])
      throw ValidationError(Verdict::fail("NotCoequalizing", {{"a", x}}));

  ImageFilter t_allowed(q_obj.size(), Bitset(b.size()));
  for (Element x = 0; x < b.size(); ++x) t_allowed[q[x]].set(x);

  std::optional<SplitCoequalizerData> found;
  for_each_bposinv_morphism(
      q_obj, b,
      [&](const Map& t) {
        ImageFilter s_allowed(b.size(), Bitset(a.size()));
        for (Element x = 0; x < b.size(); ++x)
          for (Element e = 0; e < a.size(); ++e)
            if (f[e] == x && g[e] == t[q[x]]) s_allowed[x].set(e);
        for (const auto& row : s_allowed)
          if (row.none()) return true;
        for_each_bposinv_morphism(
            b, a,
            [&](const Map& s) {
              found = SplitCoequalizerData{Map(f.begin(), f.end()), Map(g.begin(), g.end()),
                                           Map(q.begin(), q.end()), t, s};
              return false;
            },
            s_allowed);
        return !found;
      },
      t_allowed);
  return found;
}

Verdict verify_coequalizer(const InvolutivePoset& a, const InvolutivePoset& b,
                           std::span<const Element> f, std::span<const Element> g,
                           const InvolutivePoset& q_obj, std::span<const Element> q,
                           std::span<const InvolutivePoset> test_objects) {
  if (auto v = is_bposinv_morphism(b, q_obj, q); !v) return v;
  for (Element x = 0; x < a.size(); ++x)
    if (q[f[x]] != q[g[x]]) return Verdict::fail("NotCoequalizing", {{"a", x}});
  {
    std::vector<bool> hit(q_obj.size(), false);
    for (Element x : q) hit[x] = true;
    for (Element y = 0; y < q_obj.size(); ++y)
      if (!hit[y]) return Verdict::fail("NotSurjective", {{"y", y}});
  }
  for (Element c = 0; c < test_objects.size(); ++c) {
    const auto& target = test_objects[c];
    std::map<Map, std::size_t> factored;
    for_each_bposinv_morphism(q_obj, target, [&](const Map& e) {
      ++factored[compose(e, q)];
      return true;
    });
    Element index = 0;
    Verdict bad = Verdict::ok();
    for_each_bposinv_morphism(b, target, [&](const Map& h) {
      const Element here = index++;
      for (Element x = 0; x < a.size(); ++x)
        if (h[f[x]] != h[g[x]]) return true;
      const auto it = factored.find(h);
      const std::size_t count = it == factored.end() ? 0 : it->second;
      if (count == 0)
        bad = Verdict::fail("ExistenceFailure", {{"C", c}, {"h", here}});
      else if (count > 1)
        bad = Verdict::fail("UniquenessFailure", {{"C", c}, {"h", here}});
      return bad.pass;
    });
    if (!bad) return bad;
  }
  return Verdict::ok();
}

}  // namespace omplab
