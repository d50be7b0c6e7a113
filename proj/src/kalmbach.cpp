#include "omplab/kalmbach.hpp"

#include <algorithm>

namespace omplab {

namespace {

void extend_chains(const BoundedPoset& p, EvenChain& current,
                   std::vector<EvenChain>& out) {
  if (!current.empty() && current.size() % 2 == 0) out.push_back(current);
  const Element last = current.back();
  p.poset().up(last).for_each([&](Element next) {
    if (next == last) return;
    current.push_back(next);
    extend_chains(p, current, out);
    current.pop_back();
  });
}

}  // namespace

std::vector<EvenChain> even_chains(const BoundedPoset& p) {
  std::vector<EvenChain> out{EvenChain{}};
  EvenChain current;
  for (Element x = 0; x < p.size(); ++x) {
    current.assign(1, x);
    extend_chains(p, current, out);
  }
  std::sort(out.begin(), out.end(), [](const EvenChain& a, const EvenChain& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool chain_leq(const BoundedPoset& p, const EvenChain& c, const EvenChain& d) {
  for (std::size_t i = 0; i + 1 < c.size(); i += 2) {
    bool inside = false;
    for (std::size_t j = 0; j + 1 < d.size() && !inside; j += 2)
      inside = p.leq(d[j], c[i]) && p.leq(c[i + 1], d[j + 1]);
    if (!inside) return false;
  }
  return true;
}

EvenChain chain_complement(const BoundedPoset& p, const EvenChain& c) {
  EvenChain seq;
  seq.reserve(c.size() + 2);
  seq.push_back(p.zero());
  seq.insert(seq.end(), c.begin(), c.end());
  seq.push_back(p.one());
  std::size_t lo = 0, hi = seq.size();
  if (seq[0] == seq[1]) lo = 2;
  if (hi - lo >= 2 && seq[hi - 1] == seq[hi - 2]) hi -= 2;
  return EvenChain(seq.begin() + static_cast<std::ptrdiff_t>(lo),
                   seq.begin() + static_cast<std::ptrdiff_t>(hi));
}

Verdict verify_embedding(const KalmbachResult& r) {
  const auto& p = r.source;
  const auto& k = r.omp;
  const auto& e = r.embedding;
  if (auto v = check_map_shape(p.size(), k.size(), e); !v) return v;
  for (Element a = 0; a < p.size(); ++a)
    for (Element b = a + 1; b < p.size(); ++b)
      if (e[a] == e[b]) return Verdict::fail("NotInjective", {{"a", a}, {"b", b}});
  for (Element a = 0; a < p.size(); ++a)
    for (Element b = 0; b < p.size(); ++b)
      if (p.leq(a, b) != k.leq(e[a], e[b]))
        return Verdict::fail("NotOrderEmbedding", {{"a", a}, {"b", b}});
  if (e[p.zero()] != k.zero()) return Verdict::fail("ZeroNotBottom", {{"a", p.zero()}});
  if (e[p.one()] != k.one()) return Verdict::fail("OneNotTop", {{"a", p.one()}});
  for (Element a = 0; a < p.size(); ++a) {
    const EvenChain expected = a == p.zero() ? EvenChain{} : EvenChain{p.zero(), a};
    if (e[a] >= r.chains.size() || r.chains[e[a]] != expected)
      return Verdict::fail("NotCanonical", {{"a", a}});
  }
  return Verdict::ok();
}

KalmbachResult kalmbach_extension(const BoundedPoset& p, std::size_t max_size) {
  require_size("kalmbach_extension", p.size(), max_size);
  auto chains = even_chains(p);
  const std::size_t m = chains.size();

  Relation r(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (chain_leq(p, chains[i], chains[j])) r[i].set(j);

  auto index_of = [&](const EvenChain& c) {
    const auto it = std::lower_bound(chains.begin(), chains.end(), c,
                                     [](const EvenChain& a, const EvenChain& b) {
                                       if (a.size() != b.size()) return a.size() < b.size();
                                       return a < b;
                                     });
    return static_cast<Element>(it - chains.begin());
  };
  Map inv(m);
  for (std::size_t i = 0; i < m; ++i) inv[i] = index_of(chain_complement(p, chains[i]));

  Map embedding(p.size());
  for (Element a = 0; a < p.size(); ++a)
    embedding[a] = a == p.zero() ? index_of({}) : index_of({p.zero(), a});

  auto invalid = [](Verdict v, const char* stage) {
    v.detail = std::string(stage) + ": " + v.tag;
    v.tag = "ConstructionInvalid";
    return ContractViolation(std::move(v));
  };

  OmpStructure omp = [&] {
    try {
      auto order = Poset::from_relation(std::move(r));
      auto bounded = validate_bounded(std::move(order));
      return omp_to_partial_ops(validate_involutive(std::move(bounded), std::move(inv)));
    } catch (const ValidationError& e) {
      throw invalid(e.verdict(), "structure");
    }
  }();

  KalmbachResult result{p, std::move(omp), std::move(chains), std::move(embedding)};
  if (auto v = verify_embedding(result); !v) throw invalid(v, "embedding");
  return result;
}

}  // namespace omplab
