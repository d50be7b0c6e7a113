#pragma once
// Universal-property checks for OMP products and equalizers, by exhaustive
// morphism search into the test objects.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "omplab/quantum.hpp"

namespace universal {

using omplab::Map;
using omplab::OmpStructure;

struct Tally {
  std::uint64_t tests = 0;
  std::string failure;  // first failure, empty if none
  bool ok() const { return failure.empty(); }
};

/// Every pair (h1: C -> A, h2: C -> B) has exactly one k: C -> A x B with
/// p1 k = h1 and p2 k = h2.
inline void check_product(const OmpStructure& a, const OmpStructure& b,
                          const std::vector<OmpStructure>& objects, Tally& t) {
  const std::vector<OmpStructure> factors{a, b};
  const auto prod = omplab::omp_product(factors);
  const std::vector<std::size_t> radices{a.size(), b.size()};
  const Map p1 = omplab::product_projection(radices, 0);
  const Map p2 = omplab::product_projection(radices, 1);
  if (!omplab::is_omp_morphism(prod, a, p1) || !omplab::is_omp_morphism(prod, b, p2)) {
    if (t.ok()) t.failure = "projection is not a morphism";
    return;
  }
  for (std::size_t ci = 0; ci < objects.size(); ++ci) {
    const auto& c = objects[ci];
    std::map<std::pair<Map, Map>, std::size_t> mediated;
    for (const auto& k : omplab::enumerate_omp_morphisms(c, prod))
      ++mediated[{omplab::compose(p1, k), omplab::compose(p2, k)}];
    const auto ha = omplab::enumerate_omp_morphisms(c, a);
    const auto hb = omplab::enumerate_omp_morphisms(c, b);
    for (const auto& h1 : ha)
      for (const auto& h2 : hb) {
        ++t.tests;
        const auto it = mediated.find({h1, h2});
        const std::size_t n = it == mediated.end() ? 0 : it->second;
        if (n != 1 && t.ok())
          t.failure = "product " + std::to_string(a.size()) + "x" + std::to_string(b.size()) +
                      ": " + std::to_string(n) + " mediating morphisms from object " +
                      std::to_string(ci);
      }
  }
}

/// For every h: C -> A, the number of k: C -> E with incl k = h is 1 if
/// f h = g h and 0 otherwise.
inline void check_equalizer(const OmpStructure& a, const OmpStructure& b, const Map& f,
                            const Map& g, const std::vector<OmpStructure>& objects, Tally& t) {
  const auto eq = omplab::omp_equalizer(a, b, f, g);
  for (std::size_t ci = 0; ci < objects.size(); ++ci) {
    const auto& c = objects[ci];
    std::map<Map, std::size_t> mediated;
    for (const auto& k : omplab::enumerate_omp_morphisms(c, eq.sub))
      ++mediated[omplab::compose(eq.inclusion, k)];
    for (const auto& h : omplab::enumerate_omp_morphisms(c, a)) {
      ++t.tests;
      const bool equalizes = omplab::compose(f, h) == omplab::compose(g, h);
      const auto it = mediated.find(h);
      const std::size_t n = it == mediated.end() ? 0 : it->second;
      if (n != (equalizes ? 1u : 0u) && t.ok())
        t.failure = "equalizer on " + std::to_string(a.size()) + " -> " +
                    std::to_string(b.size()) + ": " + std::to_string(n) +
                    " mediating morphisms from object " + std::to_string(ci);
    }
  }
}

}  // namespace universal
