#include "omplab/quantum.hpp"

#include <algorithm>

namespace omplab {

Verdict check_table_shape(const PartialOpTable& t, std::size_t n, const char* name) {
  if (t.size() != n)
    return Verdict::fail("BadTable", {}, std::string(name) + " has wrong size");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (auto v = t.get(x, y); v && *v >= n)
        return Verdict::fail("BadTable", {{"x", x}, {"y", y}},
                             std::string(name) + " value out of range");
  return Verdict::ok();
}

// ---------------------------------------------------------------------------
// Effect algebras

namespace {

Verdict check_effect_axioms(const EffectAlgebraCandidate& c) {
  const std::size_t n = c.size;
  const auto& plus = c.plus;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (plus.defined(a, b) && plus.get(b, a) != plus.get(a, b))
        return Verdict::fail("E1", {{"a", a}, {"b", b}});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!plus.defined(a, b)) continue;
      const Element ab = plus.at(a, b);
      for (Element cc = 0; cc < n; ++cc) {
        if (!plus.defined(ab, cc)) continue;
        const auto bc = plus.get(b, cc);
        if (!bc || !plus.defined(a, *bc) || plus.at(a, *bc) != plus.at(ab, cc))
          return Verdict::fail("E2", {{"a", a}, {"b", b}, {"c", cc}});
      }
    }
  for (Element a = 0; a < n; ++a) {
    std::vector<Element> supplements;
    for (Element b = 0; b < n; ++b)
      if (plus.get(a, b) == c.one) supplements.push_back(b);
    if (supplements.empty()) return Verdict::fail("E3", {{"a", a}}, "no supplement");
    if (supplements.size() > 1)
      return Verdict::fail("E3", {{"a", a}, {"b1", supplements[0]}, {"b2", supplements[1]}},
                           "supplement not unique");
  }
  for (Element a = 0; a < n; ++a)
    if (plus.defined(a, c.one) && a != c.zero) return Verdict::fail("E4", {{"a", a}});
  return Verdict::ok();
}

}  // namespace

EffectAlgebraCheck check_effect_algebra(const EffectAlgebraCandidate& c) {
  const std::size_t n = c.size;
  if (n == 0 || c.zero >= n || c.one >= n)
    return {Verdict::fail("BadTable", {}, "bounds out of range"), std::nullopt};
  if (auto v = check_table_shape(c.plus, n, "plus"); !v) return {v, std::nullopt};
  if (auto v = check_effect_axioms(c); !v) return {v, std::nullopt};

  Relation leq(n, Bitset(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (auto s = c.plus.get(a, b)) leq[a].set(*s);
  if (auto v = check_order_axioms(leq); !v) {
    v.detail = v.tag;
    v.tag = "DerivedOrderNotPoset";
    return {v, std::nullopt};
  }
  Poset order = Poset::from_relation(std::move(leq));
  if (order.up(c.zero).count() != n || order.down(c.one).count() != n)
    return {Verdict::fail("DerivedOrderNotPoset", {}, "bounds"), std::nullopt};
  BoundedPoset bounded(std::move(order), c.zero, c.one);

  Map supplement(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (c.plus.get(a, b) == c.one) supplement[a] = b;
  if (auto v = check_involution(bounded, supplement); !v) {
    v.detail = v.tag;
    v.tag = "DerivedNotInvolution";
    return {v, std::nullopt};
  }
  return {Verdict::ok(), InvolutivePoset(std::move(bounded), std::move(supplement))};
}

Verdict is_ea_morphism(const EffectAlgebraCandidate& source,
                       const EffectAlgebraCandidate& target, std::span<const Element> map) {
  if (auto v = check_map_shape(source.size, target.size, map); !v) return v;
  if (map[source.one] != target.one)
    return Verdict::fail("OneNotPreserved", {{"x", source.one}});
  for (Element a = 0; a < source.size; ++a)
    for (Element b = 0; b < source.size; ++b) {
      if (!source.plus.defined(a, b)) continue;
      if (target.plus.get(map[a], map[b]) != map[source.plus.at(a, b)])
        return Verdict::fail("PlusNotPreserved", {{"a", a}, {"b", b}});
    }
  return Verdict::ok();
}

// ---------------------------------------------------------------------------
// Orthomodular posets

Verdict check_omp(const InvolutivePoset& p) {
  const std::size_t n = p.size();
  const Poset& order = p.poset();
  for (Element x = 0; x < n; ++x) {
    Bitset lower = order.down(x) & order.down(p.prime(x));
    lower.reset(p.zero());
    if (lower.any())
      return Verdict::fail("OMP1", {{"x", x}, {"lower", static_cast<Element>(lower.first())}});
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (p.orthogonal(x, y) && !lub(order, x, y))
        return Verdict::fail("OMP2", {{"x", x}, {"y", y}});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      const Element j = *lub(order, x, p.prime(y));
      const Element k = *lub(order, x, p.prime(j));
      if (k != y) return Verdict::fail("OMP3", {{"x", x}, {"y", y}});
    }
  return Verdict::ok();
}

OmpStructure omp_to_partial_ops(const InvolutivePoset& p) {
  if (auto v = check_omp(p); !v) throw ValidationError(std::move(v));
  const std::size_t n = p.size();
  const Poset& order = p.poset();
  PartialOpTable plus(n), minus(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (p.orthogonal(x, y)) plus.set(x, y, lub(order, x, y));
      if (p.leq(x, y)) {
        const Element join_form = p.prime(*lub(order, x, p.prime(y)));
        const auto meet_form = glb(order, y, p.prime(x));
        if (!meet_form || *meet_form != join_form)
          throw ContractViolation(Verdict::fail("MeetJoinMismatch", {{"x", x}, {"y", y}}));
        minus.set(y, x, join_form);
      }
    }
  return OmpStructure(p, std::move(plus), std::move(minus));
}

const char* tag_of(AClause c) {
  switch (c) {
    case AClause::Domain: return "DomainMismatch";
    case AClause::IsoPlus: return "ISO+";
    case AClause::IsoMinus: return "ISO-";
    case AClause::A0: return "A0";
    case AClause::A1: return "A1";
    case AClause::A2: return "A2";
    case AClause::A3: return "A3";
    case AClause::A4: return "A4";
  }
  return "?";
}

namespace {

Verdict check_domain(const InvolutivePoset& p, const PartialOpTable& plus,
                     const PartialOpTable& minus) {
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (plus.defined(x, y) != p.orthogonal(x, y))
        return Verdict::fail("DomainMismatch", {{"x", x}, {"y", y}}, "plus");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (minus.defined(y, x) != p.leq(x, y))
        return Verdict::fail("DomainMismatch", {{"x", x}, {"y", y}}, "minus");
  return Verdict::ok();
}

Verdict check_iso_plus(const InvolutivePoset& p, const PartialOpTable& plus) {
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!p.orthogonal(x, y) || !plus.defined(x, y)) continue;
      const Element low = plus.at(x, y);
      Verdict bad = Verdict::ok();
      p.poset().up(x).for_each([&](Element u) {
        if (!bad) return;
        p.poset().up(y).for_each([&](Element v) {
          if (!bad || !p.orthogonal(u, v) || !plus.defined(u, v)) return;
          if (!p.leq(low, plus.at(u, v)))
            bad = Verdict::fail("ISO+", {{"x", x}, {"y", y}, {"u", u}, {"v", v}});
        });
      });
      if (!bad) return bad;
    }
  return Verdict::ok();
}

Verdict check_iso_minus(const InvolutivePoset& p, const PartialOpTable& minus) {
  const std::size_t n = p.size();
  // [a <= b] below [c <= d] iff c <= a and b <= d; minus(b, a) is b - a.
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!p.leq(a, b) || !minus.defined(b, a)) continue;
      const Element low = minus.at(b, a);
      Verdict bad = Verdict::ok();
      p.poset().down(a).for_each([&](Element c) {
        if (!bad) return;
        p.poset().up(b).for_each([&](Element d) {
          if (!bad || !minus.defined(d, c)) return;
          if (!p.leq(low, minus.at(d, c)))
            bad = Verdict::fail("ISO-", {{"a", a}, {"b", b}, {"c", c}, {"d", d}});
        });
      });
      if (!bad) return bad;
    }
  return Verdict::ok();
}

Verdict check_a0(const InvolutivePoset& p, const PartialOpTable& plus) {
  for (Element a = 0; a < p.size(); ++a)
    if (!p.orthogonal(a, p.zero()) || plus.get(a, p.zero()) != a)
      return Verdict::fail("A0", {{"a", a}});
  return Verdict::ok();
}

Verdict check_a1(const InvolutivePoset& p, const PartialOpTable& plus) {
  for (Element a = 0; a < p.size(); ++a)
    for (Element b = 0; b < p.size(); ++b) {
      if (!p.orthogonal(a, b)) continue;
      if (!p.orthogonal(b, a) || !plus.defined(a, b) || plus.get(b, a) != plus.get(a, b))
        return Verdict::fail("A1", {{"a", a}, {"b", b}});
    }
  return Verdict::ok();
}

Verdict check_a2(const InvolutivePoset& p, const PartialOpTable& plus) {
  const std::size_t n = p.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!p.orthogonal(a, b)) continue;
      for (Element c = 0; c < n; ++c) {
        if (!p.orthogonal(b, c) || !p.orthogonal(a, c)) continue;
        auto fail = [&](const char* what) {
          return Verdict::fail("A2", {{"a", a}, {"b", b}, {"c", c}}, what);
        };
        const auto bc = plus.get(b, c);
        const auto ab = plus.get(a, b);
        if (!bc || !ab) return fail("operand undefined");
        if (!p.orthogonal(a, *bc)) return fail("a not orthogonal to b+c");
        if (!p.orthogonal(*ab, c)) return fail("a+b not orthogonal to c");
        const auto left = plus.get(a, *bc);
        const auto right = plus.get(*ab, c);
        if (!left || !right || *left != *right) return fail("not associative");
      }
    }
  return Verdict::ok();
}

Verdict check_a3(const InvolutivePoset& p, const PartialOpTable& plus,
                 const PartialOpTable& minus) {
  for (Element a = 0; a < p.size(); ++a)
    for (Element b = 0; b < p.size(); ++b) {
      if (!p.orthogonal(a, b)) continue;
      const auto s = plus.get(a, b);
      if (!s) return Verdict::fail("A3", {{"a", a}, {"b", b}}, "a+b undefined");
      if (!p.leq(a, *s)) return Verdict::fail("A3", {{"a", a}, {"b", b}}, "a+b not above a");
      if (minus.get(*s, a) != b)
        return Verdict::fail("A3", {{"a", a}, {"b", b}}, "(a+b)-a != b");
    }
  return Verdict::ok();
}

Verdict check_a4(const InvolutivePoset& p, const PartialOpTable& plus) {
  for (Element a = 0; a < p.size(); ++a)
    if (plus.get(a, p.prime(a)) != p.one()) return Verdict::fail("A4", {{"a", a}});
  return Verdict::ok();
}

}  // namespace

Verdict check_A_clause(const InvolutivePoset& p, const PartialOpTable& plus,
                       const PartialOpTable& minus, AClause clause) {
  if (auto v = check_table_shape(plus, p.size(), "plus"); !v) return v;
  if (auto v = check_table_shape(minus, p.size(), "minus"); !v) return v;
  switch (clause) {
    case AClause::Domain: return check_domain(p, plus, minus);
    case AClause::IsoPlus: return check_iso_plus(p, plus);
    case AClause::IsoMinus: return check_iso_minus(p, minus);
    case AClause::A0: return check_a0(p, plus);
    case AClause::A1: return check_a1(p, plus);
    case AClause::A2: return check_a2(p, plus);
    case AClause::A3: return check_a3(p, plus, minus);
    case AClause::A4: return check_a4(p, plus);
  }
  return Verdict::ok();
}

Verdict check_A_axioms(const InvolutivePoset& p, const PartialOpTable& plus,
                       const PartialOpTable& minus, AxiomOptions opts) {
  for (std::size_t i = 0; i < kAClauseCount; ++i) {
    const auto clause = static_cast<AClause>(i);
    if (!opts.on(clause)) continue;
    if (auto v = check_A_clause(p, plus, minus, clause); !v) return v;
  }
  return Verdict::ok();
}

OmpStructure partial_ops_to_omp(const InvolutivePoset& p, const PartialOpTable& plus,
                                const PartialOpTable& minus) {
  if (auto v = check_A_axioms(p, plus, minus); !v) throw ValidationError(std::move(v));
  if (auto v = check_omp(p); !v) {
    v.detail = "A-axioms hold but " + v.tag + " fails";
    v.tag = "Prop1Violation";
    throw ContractViolation(std::move(v));
  }
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (p.orthogonal(x, y) && plus.get(x, y) != lub(p.poset(), x, y))
        throw ContractViolation(
            Verdict::fail("Prop1Violation", {{"x", x}, {"y", y}}, "x+y is not the join"));
  OmpStructure canonical = omp_to_partial_ops(p);
  if (canonical.minus() != minus)
    throw ContractViolation(Verdict::fail("Prop1Violation", {}, "minus differs from y ^ x'"));
  return OmpStructure(p, plus, minus);
}

Verdict is_omp_morphism(const OmpStructure& source, const OmpStructure& target,
                        std::span<const Element> map) {
  if (auto v = is_bposinv_morphism(source.base(), target.base(), map); !v) return v;
  const std::size_t n = source.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!source.orthogonal(x, y)) continue;
      if (!target.orthogonal(map[x], map[y]))
        return Verdict::fail("OrthogonalityNotPreserved", {{"x", x}, {"y", y}});
      if (target.plus().get(map[x], map[y]) != map[source.plus().at(x, y)])
        return Verdict::fail("PlusNotPreserved", {{"x", x}, {"y", y}});
    }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!source.leq(x, y)) continue;
      if (target.minus().get(map[y], map[x]) != map[source.minus().at(y, x)])
        return Verdict::fail("MinusNotPreserved", {{"x", x}, {"y", y}});
    }
  return Verdict::ok();
}

std::vector<Map> enumerate_omp_morphisms(const OmpStructure& source,
                                         const OmpStructure& target) {
  std::vector<Map> out;
  for_each_bposinv_morphism(source.base(), target.base(), [&](const Map& m) {
    if (is_omp_morphism(source, target, m)) out.push_back(m);
    return true;
  });
  return out;
}

std::vector<Element> generated_subalgebra(const OmpStructure& a,
                                          std::span<const Element> seed) {
  const std::size_t n = a.size();
  Bitset in(n);
  in.set(a.zero());
  in.set(a.one());
  for (Element x : seed) in.set(x);
  for (bool grew = true; grew;) {
    grew = false;
    const auto current = in.elements();
    for (Element x : current)
      if (!in.test(a.prime(x))) {
        in.set(a.prime(x));
        grew = true;
      }
    const auto members = in.elements();
    for (Element x : members)
      for (Element y : members)
        if (a.orthogonal(x, y)) {
          const Element j = a.plus().at(x, y);
          if (!in.test(j)) {
            in.set(j);
            grew = true;
          }
        }
  }
  return in.elements();
}

Verdict is_subalgebra(const OmpStructure& a, std::span<const Element> elements) {
  Bitset in(a.size());
  for (Element x : elements) {
    if (x >= a.size()) return Verdict::fail("BadElement", {{"x", x}});
    in.set(x);
  }
  if (!in.test(a.zero())) return Verdict::fail("MissingZero");
  if (!in.test(a.one())) return Verdict::fail("MissingOne");
  for (Element x : elements)
    if (!in.test(a.prime(x))) return Verdict::fail("NotClosedUnderPrime", {{"x", x}});
  for (Element x : elements)
    for (Element y : elements)
      if (a.orthogonal(x, y) && !in.test(a.plus().at(x, y)))
        return Verdict::fail("NotClosedUnderJoin", {{"x", x}, {"y", y}});
  return Verdict::ok();
}

OmpStructure subalgebra_structure(const OmpStructure& a,
                                  std::span<const Element> elements) {
  if (auto v = is_subalgebra(a, elements); !v) throw ValidationError(std::move(v));
  const std::size_t m = elements.size();
  std::vector<std::int64_t> pos(a.size(), -1);
  for (std::size_t i = 0; i < m; ++i) pos[elements[i]] = static_cast<std::int64_t>(i);
  Relation r(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (a.leq(elements[i], elements[j])) r[i].set(j);
  Map inv(m);
  for (std::size_t i = 0; i < m; ++i) inv[i] = static_cast<Element>(pos[a.prime(elements[i])]);
  BoundedPoset bounded(Poset::from_relation(std::move(r)),
                       static_cast<Element>(pos[a.zero()]), static_cast<Element>(pos[a.one()]));
  try {
    return omp_to_partial_ops(validate_involutive(std::move(bounded), std::move(inv)));
  } catch (const ValidationError& e) {
    throw ContractViolation(e.verdict());
  }
}

OmpStructure omp_product(std::span<const OmpStructure> factors, std::size_t limit) {
  std::vector<InvolutivePoset> bases;
  for (const auto& f : factors) bases.push_back(f.base());
  InvolutivePoset prod = involutive_product(bases, limit);
  try {
    return omp_to_partial_ops(prod);
  } catch (const ValidationError& e) {
    throw ContractViolation(e.verdict());
  }
}

Map product_projection(std::span<const std::size_t> radices, std::size_t k) {
  std::size_t total = 1;
  for (auto r : radices) total *= r;
  Map out(total);
  for (Element i = 0; i < total; ++i) out[i] = product_coordinates(radices, i)[k];
  return out;
}

Equalizer omp_equalizer(const OmpStructure& a, const OmpStructure& b,
                        std::span<const Element> f, std::span<const Element> g) {
  if (auto v = is_omp_morphism(a, b, f); !v) throw ValidationError(std::move(v));
  if (auto v = is_omp_morphism(a, b, g); !v) throw ValidationError(std::move(v));
  std::vector<Element> elements;
  for (Element x = 0; x < a.size(); ++x)
    if (f[x] == g[x]) elements.push_back(x);
  if (auto v = is_subalgebra(a, elements); !v) {
    v.detail = v.tag;
    v.tag = "EqualizerNotSubalgebra";
    throw ContractViolation(std::move(v));
  }
  OmpStructure sub = subalgebra_structure(a, elements);
  Map inclusion(elements.begin(), elements.end());
  if (auto v = is_omp_morphism(sub, a, inclusion); !v) throw ContractViolation(std::move(v));
  return Equalizer{std::move(elements), std::move(sub), std::move(inclusion)};
}

}  // namespace omplab
