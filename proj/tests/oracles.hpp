#pragma once
// Brute-force reference implementations. They work on plain boolean
// matrices and exhaustive loops so that they share no code path with the
// library beyond reading its structures.

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "omplab/quantum.hpp"

namespace oracle {

using omplab::Element;
using omplab::Map;
using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const omplab::Poset& p) {
  Matrix m(p.size(), std::vector<bool>(p.size()));
  for (Element i = 0; i < p.size(); ++i)
    for (Element j = 0; j < p.size(); ++j) m[i][j] = p.leq(i, j);
  return m;
}

inline std::optional<Element> lub(const Matrix& m, Element x, Element y) {
  const auto n = static_cast<Element>(m.size());
  std::vector<Element> upper;
  for (Element u = 0; u < n; ++u)
    if (m[x][u] && m[y][u]) upper.push_back(u);
  for (Element u : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](Element v) { return m[u][v]; })) return u;
  return std::nullopt;
}

inline std::optional<Element> glb(const Matrix& m, Element x, Element y) {
  const auto n = static_cast<Element>(m.size());
  std::vector<Element> lower;
  for (Element l = 0; l < n; ++l)
    if (m[l][x] && m[l][y]) lower.push_back(l);
  for (Element l : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](Element v) { return m[v][l]; })) return l;
  return std::nullopt;
}

/// Calls visit on every function {0..n-1} -> {0..m-1}.
inline void all_maps(std::size_t n, std::size_t m, const std::function<void(const Map&)>& visit) {
  Map f(n, 0);
  if (m == 0) {
    if (n == 0) visit(f);
    return;
  }
  while (true) {
    visit(f);
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) return;
  }
}

inline bool is_bposinv_morphism(const omplab::InvolutivePoset& a,
                                const omplab::InvolutivePoset& b, const Map& f) {
  const auto ma = matrix_of(a.poset()), mb = matrix_of(b.poset());
  if (f[a.zero()] != b.zero() || f[a.one()] != b.one()) return false;
  for (Element x = 0; x < a.size(); ++x) {
    if (f[a.prime(x)] != b.prime(f[x])) return false;
    for (Element y = 0; y < a.size(); ++y)
      if (ma[x][y] && !mb[f[x]][f[y]]) return false;
  }
  return true;
}

inline bool is_omp_morphism(const omplab::OmpStructure& a, const omplab::OmpStructure& b,
                            const Map& f) {
  if (!is_bposinv_morphism(a.base(), b.base(), f)) return false;
  const auto mb = matrix_of(b.poset());
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (!a.orthogonal(x, y)) continue;
      if (!mb[f[x]][b.prime(f[y])]) return false;
      const auto j = lub(mb, f[x], f[y]);
      if (!j || *j != f[*lub(matrix_of(a.poset()), x, y)]) return false;
    }
  return true;
}

inline std::vector<Map> bposinv_morphisms(const omplab::InvolutivePoset& a,
                                          const omplab::InvolutivePoset& b) {
  std::vector<Map> out;
  all_maps(a.size(), b.size(), [&](const Map& f) {
    if (is_bposinv_morphism(a, b, f)) out.push_back(f);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Map> omp_morphisms(const omplab::OmpStructure& a,
                                      const omplab::OmpStructure& b) {
  std::vector<Map> out;
  all_maps(a.size(), b.size(), [&](const Map& f) {
    if (is_omp_morphism(a, b, f)) out.push_back(f);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Order isomorphism by trying all permutations.
inline bool isomorphic(const omplab::Poset& p, const omplab::Poset& q,
                       const Map* inv_p = nullptr, const Map* inv_q = nullptr) {
  if (p.size() != q.size()) return false;
  Map s(p.size());
  std::iota(s.begin(), s.end(), 0u);
  do {
    bool ok = true;
    for (Element x = 0; x < p.size() && ok; ++x) {
      if (inv_p && s[(*inv_p)[x]] != (*inv_q)[s[x]]) ok = false;
      for (Element y = 0; y < p.size() && ok; ++y)
        if (p.leq(x, y) != q.leq(s[x], s[y])) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(s.begin(), s.end()));
  return false;
}

/// Every strictly increasing chain of even length, by subset filtering.
inline std::size_t even_chain_count(const omplab::Poset& p) {
  const std::size_t n = p.size();
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (std::popcount(mask) % 2) continue;
    bool chain = true;
    for (Element i = 0; i < n && chain; ++i)
      for (Element j = 0; j < n && chain; ++j)
        if (((mask >> i) & 1) && ((mask >> j) & 1) && !p.leq(i, j) && !p.leq(j, i))
          chain = false;
    count += chain;
  }
  return count;
}

}  // namespace oracle
