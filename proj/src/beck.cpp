#include "omplab/beck.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <thread>

#include "omplab/enumeration.hpp"

namespace omplab {

Exhausted::Exhausted(std::size_t requested, std::size_t available)
    : Error("requested " + std::to_string(requested) + " instances, only " +
            std::to_string(available) + " exist") {}

namespace {

Element position_in(const std::vector<Element>& sorted, Element x) {
  return static_cast<Element>(std::lower_bound(sorted.begin(), sorted.end(), x) -
                              sorted.begin());
}

Verdict skipped(const char* needs) { return Verdict::fail("Skipped", {}, needs); }

}  // namespace

BeckInstance kernel_pair_instance(const OmpStructure& b, const OmpStructure& c,
                                  const Map& r, const Map& t, std::string label) {
  if (auto v = is_omp_morphism(b, c, r); !v) throw ValidationError(v);
  if (auto v = is_bposinv_morphism(c.base(), b.base(), t); !v) throw ValidationError(v);
  for (Element y = 0; y < c.size(); ++y)
    if (r[t[y]] != y) throw ValidationError(Verdict::fail("NotSection", {{"y", y}}));

  const std::vector<OmpStructure> factors{b, b};
  const OmpStructure bb = omp_product(factors);
  const std::vector<std::size_t> radices{b.size(), b.size()};
  const Map p1 = product_projection(radices, 0);
  const Map p2 = product_projection(radices, 1);
  const Equalizer eq = omp_equalizer(bb, c, compose(r, p1), compose(r, p2));

  BeckInstance inst{std::move(label), eq.sub, b, compose(p1, eq.inclusion),
                    compose(p2, eq.inclusion), c.base(), r, std::nullopt};

  SplitCoequalizerData data{inst.f, inst.g, r, t, Map(b.size())};
  for (Element x = 0; x < b.size(); ++x)
    data.s[x] = position_in(eq.elements, static_cast<Element>(x * b.size() + t[r[x]]));
  if (auto v = check_split_data(inst.A.base(), b.base(), c.base(), data); !v)
    throw ContractViolation(v);
  if (!find_split_data(inst.A.base(), b.base(), inst.f, inst.g, c.base(), r))
    throw ContractViolation(Verdict::fail("SplitSearchFailed", {}, inst.label));
  inst.split = std::move(data);
  return inst;
}

std::vector<BeckInstance> all_kernel_pair_instances(std::size_t max_size) {
  const auto catalog = omps_up_to(max_size);
  // "n#k": k-th catalog OMP with n elements.
  std::vector<std::string> names;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    std::size_t k = 0;
    while (k < i && catalog[i - k - 1].size() == catalog[i].size()) ++k;
    names.push_back(std::to_string(catalog[i].size()) + "#" + std::to_string(k));
  }
  std::vector<BeckInstance> out;
  for (std::size_t bi = 0; bi < catalog.size(); ++bi) {
    const auto& b = catalog[bi];
    for (std::size_t ci = 0; ci < catalog.size(); ++ci) {
      const auto& c = catalog[ci];
      if (c.size() > b.size()) continue;
      const auto homs = enumerate_omp_morphisms(b, c);
      for (std::size_t ri = 0; ri < homs.size(); ++ri) {
        const Map& r = homs[ri];
        ImageFilter allowed(c.size(), Bitset(b.size()));
        for (Element x = 0; x < b.size(); ++x) allowed[r[x]].set(x);
        if (std::any_of(allowed.begin(), allowed.end(), [](const Bitset& s) { return s.none(); }))
          continue;
        std::optional<Map> section;
        for_each_bposinv_morphism(
            c.base(), b.base(),
            [&](const Map& t) {
              section = t;
              return false;
            },
            allowed);
        if (!section) continue;
        out.push_back(kernel_pair_instance(
            b, c, r, *section,
            names[bi] + " -> " + names[ci] + " r" + std::to_string(ri)));
      }
    }
  }
  return out;
}

std::vector<BeckInstance> generate_instances(std::size_t max_size, std::size_t count,
                                             std::uint64_t seed) {
  auto all = all_kernel_pair_instances(max_size);
  if (all.size() < count) throw Exhausted(count, all.size());
  std::vector<std::size_t> order(all.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // Fisher-Yates with an explicit reduction so the draw does not depend on
  // the standard library's distribution implementation.
  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  order.resize(count);
  std::sort(order.begin(), order.end());
  std::vector<BeckInstance> out;
  out.reserve(count);
  for (std::size_t i : order) out.push_back(std::move(all[i]));
  return out;
}

PartialOpTable induce_boxplus(const BeckInstance& inst) {
  const auto& Q = inst.quotient;
  const auto& B = inst.B;
  const auto& q = inst.q;
  const std::size_t n = Q.size();
  PartialOpTable out(n);
  // Canonical preimage pair of each orthogonal pair, for the witness.
  std::vector<std::pair<Element, Element>> source(n * n);

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!Q.orthogonal(x, y)) continue;
      std::optional<std::pair<Element, Element>> pre;
      if (inst.split) {
        pre = std::pair{inst.split->t[x], inst.split->t[y]};
      } else {
        for (Element x0 = 0; x0 < B.size() && !pre; ++x0)
          for (Element y0 = 0; y0 < B.size() && !pre; ++y0)
            if (q[x0] == x && q[y0] == y && B.orthogonal(x0, y0)) pre = std::pair{x0, y0};
      }
      if (!pre || !B.orthogonal(pre->first, pre->second))
        throw ValidationError(Verdict::fail("PreimageMissing", {{"x", x}, {"y", y}}));
      out.set(x, y, q[B.plus().at(pre->first, pre->second)]);
      source[x * n + y] = *pre;
    }

  for (Element x0 = 0; x0 < B.size(); ++x0)
    for (Element y0 = 0; y0 < B.size(); ++y0) {
      if (!B.orthogonal(x0, y0)) continue;
      const Element x = q[x0], y = q[y0];
      if (!Q.orthogonal(x, y))
        throw ValidationError(Verdict::fail("ImageNotOrthogonal", {{"x0", x0}, {"y0", y0}}));
      if (q[B.plus().at(x0, y0)] != out.at(x, y)) {
        const auto [cx, cy] = source[x * n + y];
        throw ValidationError(Verdict::fail(
            "NotWellDefined",
            {{"x", x}, {"y", y}, {"x0", cx}, {"y0", cy}, {"x1", x0}, {"y1", y0}}));
      }
    }

  const auto perp = ortho_poset(Q);
  for (std::size_t i = 0; i < perp.pairs.size(); ++i)
    for (std::size_t j = 0; j < perp.pairs.size(); ++j) {
      if (i == j || !perp.poset.leq(static_cast<Element>(i), static_cast<Element>(j))) continue;
      const auto [x, y] = perp.pairs[i];
      const auto [u, v] = perp.pairs[j];
      if (!Q.leq(out.at(x, y), out.at(u, v)))
        throw ValidationError(
            Verdict::fail("NotIsotone", {{"x", x}, {"y", y}, {"u", u}, {"v", v}}));
    }
  return out;
}

PartialOpTable induce_boxminus(const BeckInstance& inst) {
  const auto& Q = inst.quotient;
  const auto& B = inst.B;
  const auto& q = inst.q;
  const std::size_t n = Q.size();
  PartialOpTable out(n);
  std::vector<std::pair<Element, Element>> source(n * n);

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!Q.leq(x, y)) continue;
      std::optional<std::pair<Element, Element>> pre;
      if (inst.split) {
        pre = std::pair{inst.split->t[x], inst.split->t[y]};
      } else {
        for (Element x0 = 0; x0 < B.size() && !pre; ++x0)
          for (Element y0 = 0; y0 < B.size() && !pre; ++y0)
            if (q[x0] == x && q[y0] == y && B.leq(x0, y0)) pre = std::pair{x0, y0};
      }
      if (!pre || !B.leq(pre->first, pre->second))
        throw ValidationError(Verdict::fail("PreimageMissing", {{"x", x}, {"y", y}}));
      out.set(y, x, q[B.minus().at(pre->second, pre->first)]);
      source[x * n + y] = *pre;
    }

  for (Element x0 = 0; x0 < B.size(); ++x0)
    for (Element y0 = 0; y0 < B.size(); ++y0) {
      if (!B.leq(x0, y0)) continue;
      const Element x = q[x0], y = q[y0];
      if (!Q.leq(x, y))
        throw ValidationError(Verdict::fail("ImageNotComparable", {{"x0", x0}, {"y0", y0}}));
      if (q[B.minus().at(y0, x0)] != out.at(y, x)) {
        const auto [cx, cy] = source[x * n + y];
        throw ValidationError(Verdict::fail(
            "NotWellDefined",
            {{"x", x}, {"y", y}, {"x0", cx}, {"y0", cy}, {"x1", x0}, {"y1", y0}}));
      }
    }

  const auto intervals = interval_poset(Q.poset());
  for (std::size_t i = 0; i < intervals.pairs.size(); ++i)
    for (std::size_t j = 0; j < intervals.pairs.size(); ++j) {
      if (i == j || !intervals.poset.leq(static_cast<Element>(i), static_cast<Element>(j)))
        continue;
      const auto [a, b] = intervals.pairs[i];
      const auto [c, d] = intervals.pairs[j];
      if (!Q.leq(out.at(b, a), out.at(d, c)))
        throw ValidationError(
            Verdict::fail("NotIsotone", {{"x", a}, {"y", b}, {"u", c}, {"v", d}}));
    }
  return out;
}

Verdict verify_axiom_transport(const BeckInstance& inst, const PartialOpTable& boxplus,
                               const PartialOpTable& boxminus) {
  return check_A_axioms(inst.quotient, boxplus, boxminus);
}

bool BeckReport::ok() const { return first_failure() == "pass"; }

std::string BeckReport::first_failure() const {
  const std::pair<const char*, const Verdict*> stages[] = {
      {"boxplus", &plus_verdict},           {"boxminus", &minus_verdict},
      {"axioms", &axiom_verdict},           {"omp", &omp_verdict},
      {"morphism", &morphism_verdict},      {"join", &join_verdict},
      {"coequalizing", &coequalizing_verdict}, {"universal", &universal_verdict},
      {"coequalizer", &coequalizer_verdict},
  };
  for (const auto& [name, v] : stages)
    if (!*v) return std::string(name) + ": " + describe(*v);
  return "pass";
}

BeckReport verify_created_coequalizer(const BeckInstance& inst, BeckOptions opts,
                                      const std::vector<OmpStructure>* test_objects) {
  BeckReport rep;
  rep.label = inst.label;
  const auto& Q = inst.quotient;

  bool tables = true;
  try {
    rep.boxplus = induce_boxplus(inst);
  } catch (const ValidationError& e) {
    rep.plus_verdict = e.verdict();
    tables = false;
  }
  try {
    rep.boxminus = induce_boxminus(inst);
  } catch (const ValidationError& e) {
    rep.minus_verdict = e.verdict();
    tables = false;
  }

  std::optional<OmpStructure> lifted;
  if (!tables) {
    rep.axiom_verdict = skipped("induced tables");
    rep.omp_verdict = skipped("induced tables");
  } else {
    rep.axiom_verdict = verify_axiom_transport(inst, rep.boxplus, rep.boxminus);
    if (!rep.axiom_verdict) {
      rep.omp_verdict = skipped("axioms on Q");
    } else {
      try {
        lifted = partial_ops_to_omp(Q, rep.boxplus, rep.boxminus);
        rep.omp_verdict = check_omp(Q);
      } catch (const Error& e) {
        if (const auto* c = dynamic_cast<const ContractViolation*>(&e))
          rep.omp_verdict = c->verdict();
        else if (const auto* v = dynamic_cast<const ValidationError*>(&e))
          rep.omp_verdict = v->verdict();
        else
          rep.omp_verdict = Verdict::fail("LiftFailed", {}, e.what());
      }
    }
  }

  for (Element x = 0; x < inst.A.size(); ++x)
    if (inst.q[inst.f[x]] != inst.q[inst.g[x]]) {
      rep.coequalizing_verdict = Verdict::fail("NotCoequalizing", {{"a", x}});
      break;
    }

  if (!lifted) {
    rep.morphism_verdict = skipped("OMP structure on Q");
    rep.join_verdict = skipped("OMP structure on Q");
    rep.universal_verdict = skipped("OMP structure on Q");
  } else {
    rep.morphism_verdict = is_omp_morphism(inst.B, *lifted, inst.q);
    for (const auto& [x, y] : ortho_poset(Q).pairs)
      if (lub(Q.poset(), x, y) != rep.boxplus.get(x, y)) {
        rep.join_verdict = Verdict::fail("PlusNotJoin", {{"x", x}, {"y", y}});
        break;
      }

    std::vector<OmpStructure> defaults;
    if (!test_objects) {
      defaults = omps_up_to(opts.universality_max);
      test_objects = &defaults;
    }
    for (Element c = 0; c < test_objects->size() && rep.universal_verdict; ++c) {
      const auto& target = (*test_objects)[c];
      std::map<Map, std::size_t> factored;
      for (const auto& e : enumerate_omp_morphisms(*lifted, target)) ++factored[compose(e, inst.q)];
      const auto homs = enumerate_omp_morphisms(inst.B, target);
      for (Element hi = 0; hi < homs.size(); ++hi) {
        const Map& h = homs[hi];
        if (compose(h, inst.f) != compose(h, inst.g)) continue;
        ++rep.coequalizing_tests;
        const auto it = factored.find(h);
        const std::size_t count = it == factored.end() ? 0 : it->second;
        if (count != 1) {
          rep.universal_verdict =
              Verdict::fail(count == 0 ? "ExistenceFailure" : "UniquenessFailure",
                            {{"C", c}, {"h", hi}});
          break;
        }
      }
    }
  }

  if (opts.cross_check_coequalizer) {
    try {
      const auto co = coequalizer_bposinv(inst.A.base(), inst.B.base(), inst.f, inst.g);
      Map phi(co.quotient.size(), Q.size());
      bool ok = co.quotient.size() == Q.size();
      for (Element b = 0; b < inst.B.size() && ok; ++b) {
        Element& slot = phi[co.projection[b]];
        if (slot == Q.size()) slot = inst.q[b];
        ok = slot == inst.q[b];
      }
      if (ok) {
        Map inverse(Q.size(), Q.size());
        for (Element i = 0; i < phi.size() && ok; ++i) {
          ok = inverse[phi[i]] == Q.size();
          inverse[phi[i]] = i;
        }
        ok = ok && is_bposinv_morphism(co.quotient, Q, phi) &&
             is_bposinv_morphism(Q, co.quotient, inverse);
      }
      if (!ok)
        rep.coequalizer_verdict = Verdict::fail(
            "CoequalizerMismatch", {},
            "computed quotient has " + std::to_string(co.quotient.size()) + " elements");
    } catch (const ValidationError& e) {
      rep.coequalizer_verdict = e.verdict();
    }
  }
  return rep;
}

std::vector<BeckReport> verify_instances(const std::vector<BeckInstance>& instances,
                                         BeckOptions opts, unsigned threads) {
  std::vector<BeckReport> reports(instances.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, instances.size())));
  const auto targets = omps_up_to(opts.universality_max);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++)
      reports[i] = verify_created_coequalizer(instances[i], opts, &targets);
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return reports;
}

}  // namespace omplab
