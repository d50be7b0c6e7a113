#include "doctest.h"

#include <random>

#include "omplab/enumeration.hpp"
#include "omplab/zoo.hpp"
#include "oracles.hpp"
#include "universal.hpp"

using namespace omplab;

namespace {

// B4: 0, a, a', 1.  MO2: 0, a, a', b, b', 1.
constexpr Element A = 1, A_ = 2, B = 3;

EffectAlgebraCandidate ea_of(const OmpStructure& s) {
  return {s.size(), s.plus(), s.zero(), s.one()};
}

const OmpStructure& b4() {
  static const OmpStructure s = zoo::as_omp(zoo::boolean_algebra(2));
  return s;
}

const OmpStructure& mo2() {
  static const OmpStructure s = zoo::as_omp(zoo::mo(2));
  return s;
}

// plus = lub and minus = (x v y')' wherever those exist, 0 elsewhere on the
// declared domain. Exact for OMPs, a best-effort candidate otherwise.
std::pair<PartialOpTable, PartialOpTable> candidate_tables(const InvolutivePoset& p) {
  const std::size_t n = p.size();
  PartialOpTable plus(n), minus(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (p.orthogonal(x, y)) plus.set(x, y, lub(p.poset(), x, y).value_or(0));
      if (p.leq(x, y)) {
        const auto j = lub(p.poset(), x, p.prime(y));
        minus.set(y, x, j ? p.prime(*j) : 0);
      }
    }
  return {plus, minus};
}

}  // namespace

TEST_CASE("check_effect_algebra examples") {
  PartialOpTable two(2);
  two.set(0, 0, 0);
  two.set(0, 1, 1);
  two.set(1, 0, 1);
  const auto c2 = check_effect_algebra({2, two, 0, 1});
  REQUIRE(c2.verdict);
  REQUIRE(c2.derived);
  CHECK(c2.derived->leq(0, 1));
  CHECK_FALSE(c2.derived->leq(1, 0));
  CHECK(c2.derived->prime(0) == 1u);

  const auto b = check_effect_algebra(ea_of(b4()));
  REQUIRE(b.verdict);
  CHECK(*b.derived == b4().base());

  auto doubled = b4().plus();
  doubled.set(A, A, 3);
  const auto e3 = check_effect_algebra({4, doubled, 0, 3});
  CHECK(e3.verdict.tag == "E3");
  CHECK(e3.verdict.at("a") == A);
  CHECK_FALSE(e3.derived);
}

TEST_CASE("check_effect_algebra rejects asymmetric and idempotent tables") {
  auto lopsided = b4().plus();
  lopsided.set(A_, A, std::nullopt);
  CHECK(check_effect_algebra({4, lopsided, 0, 3}).verdict.tag == "E1");

  // 1 + 1 = 1 gives 1 the two supplements 0 and 1.
  PartialOpTable t(2);
  t.set(0, 0, 0);
  t.set(0, 1, 1);
  t.set(1, 0, 1);
  t.set(1, 1, 1);
  const auto v = check_effect_algebra({2, t, 0, 1}).verdict;
  CHECK(v.tag == "E3");
  CHECK(v.at("a") == 1u);
}

TEST_CASE("check_omp calibration") {
  CHECK(check_omp(zoo::reversed_chain(2)));
  CHECK(check_omp(b4().base()));
  CHECK(check_omp(mo2().base()));

  const auto c3 = check_omp(zoo::reversed_chain(3));
  CHECK(c3.tag == "OMP1");
  CHECK(c3.at("x") == 1u);
  CHECK(c3.at("lower") == 1u);

  const auto o6 = check_omp(zoo::hexagon());
  CHECK(o6.tag == "OMP3");
  CHECK(o6.at("x") == 1u);
  CHECK(o6.at("y") == 2u);
}

TEST_CASE("omp_to_partial_ops values") {
  const auto c2 = zoo::as_omp(zoo::reversed_chain(2));
  CHECK(c2.minus().get(1, 0) == 1u);
  CHECK(c2.minus().get(1, 1) == 0u);
  CHECK(c2.plus().get(0, 1) == 1u);
  CHECK_FALSE(c2.plus().defined(1, 1));

  CHECK(b4().plus().get(A, A_) == 3u);
  CHECK(b4().minus().get(3, A) == A_);
  CHECK_FALSE(b4().plus().defined(A, A));

  CHECK_FALSE(mo2().plus().defined(A, B));
  CHECK(mo2().plus().get(A, A_) == 5u);

  CHECK_THROWS_AS(omp_to_partial_ops(zoo::hexagon()), ValidationError);
}

TEST_CASE("check_A_axioms examples") {
  CHECK(check_A_axioms(b4().base(), b4().plus(), b4().minus()));

  // Redefining a + a' as a breaks A4 at a. Under the fixed clause order the
  // isotonicity clause already fails on the same cell, so A4 is checked alone.
  auto broken = b4().plus();
  broken.set(A, A_, A);
  const auto a4 = check_A_clause(b4().base(), broken, b4().minus(), AClause::A4);
  CHECK(a4.tag == "A4");
  CHECK(a4.at("a") == A);
  CHECK_FALSE(check_A_axioms(b4().base(), broken, b4().minus()));
  AxiomOptions only_a4;
  for (std::size_t i = 0; i + 1 < kAClauseCount; ++i) only_a4.without(static_cast<AClause>(i));
  CHECK(check_A_axioms(b4().base(), broken, b4().minus(), only_a4).tag == "A4");

  auto one_sided = b4().plus();
  one_sided.set(A, 0, std::nullopt);
  const auto dom = check_A_axioms(b4().base(), one_sided, b4().minus());
  CHECK(dom.tag == "DomainMismatch");
  CHECK(dom.at("x") == A);
  CHECK(dom.at("y") == 0u);
}

TEST_CASE("partial_ops_to_omp examples") {
  const auto c2 = zoo::reversed_chain(2);
  const auto canon = zoo::as_omp(c2);
  CHECK(partial_ops_to_omp(c2, canon.plus(), canon.minus()) == canon);

  const auto b = partial_ops_to_omp(b4().base(), b4().plus(), b4().minus());
  std::size_t pairs = 0;
  const auto m = oracle::matrix_of(b.poset());
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y)
      if (b.orthogonal(x, y)) {
        ++pairs;
        CHECK(b.plus().get(x, y) == oracle::lub(m, x, y));
      }
  CHECK(pairs == 9);

  CHECK(partial_ops_to_omp(mo2().base(), mo2().plus(), mo2().minus()) == mo2());

  auto broken = b4().plus();
  broken.set(A, A_, A);
  CHECK_THROWS_AS(partial_ops_to_omp(b4().base(), broken, b4().minus()), ValidationError);
}

TEST_CASE("is_omp_morphism examples") {
  CHECK(is_omp_morphism(mo2(), mo2(), identity_map(6)));
  const auto c2 = zoo::as_omp(zoo::reversed_chain(2));
  CHECK(is_omp_morphism(b4(), c2, Map{0, 0, 1, 1}));

  const Map lopsided{0, A_, A_, 3};
  CHECK_FALSE(is_omp_morphism(b4(), b4(), lopsided));
  CHECK_FALSE(oracle::is_omp_morphism(b4(), b4(), lopsided));
  // The images of a and a' are not orthogonal, so a + a' has no image.
  CHECK_FALSE(b4().plus().defined(lopsided[A], lopsided[A_]));
}

TEST_CASE("property: OMP morphism enumeration agrees with brute force") {
  const auto objects = omps_up_to(6);
  for (const auto& a : objects)
    for (const auto& b : objects) {
      if (a.size() == 6 && b.size() == 6) continue;  // 6^6 maps per pair is slow
      CHECK(enumerate_omp_morphisms(a, b) == oracle::omp_morphisms(a, b));
    }
}

TEST_CASE("generated_subalgebra in MO2") {
  CHECK(generated_subalgebra(mo2(), std::vector<Element>{}) == std::vector<Element>{0, 5});
  CHECK(generated_subalgebra(mo2(), std::vector<Element>{A}) == std::vector<Element>{0, 1, 2, 5});
  CHECK(generated_subalgebra(mo2(), std::vector<Element>{A, B}).size() == 6);
  CHECK(is_subalgebra(mo2(), std::vector<Element>{0, 1, 2, 5}));
  CHECK(is_subalgebra(mo2(), std::vector<Element>{0, 1, 5}).tag == "NotClosedUnderPrime");
  CHECK(is_subalgebra(mo2(), std::vector<Element>{0, 1, 2}).tag == "MissingOne");
}

TEST_CASE("products and equalizers") {
  const auto c2 = zoo::as_omp(zoo::reversed_chain(2));
  const std::vector<OmpStructure> two{c2, c2};
  const auto p = omp_product(two);
  CHECK(find_involutive_isomorphism(p.base(), b4().base()));
  CHECK(check_omp(p.base()));

  const auto whole = omp_equalizer(b4(), b4(), identity_map(4), identity_map(4));
  CHECK(whole.elements == std::vector<Element>{0, 1, 2, 3});

  const auto bounds = omp_equalizer(b4(), b4(), identity_map(4), Map{0, 2, 1, 3});
  CHECK(bounds.elements == std::vector<Element>{0, 3});
  CHECK(bounds.sub.size() == 2);
  CHECK(is_omp_morphism(bounds.sub, b4(), bounds.inclusion));

  CHECK_THROWS_AS(omp_equalizer(b4(), b4(), identity_map(4), Map{0, 2, 2, 3}), ValidationError);

  const std::vector<OmpStructure> big{mo2(), mo2(), mo2()};
  CHECK_THROWS_AS(omp_product(big, 100), SizeOverflow);
}

TEST_CASE("property: forward round trip and EA bridge for catalog OMPs up to 8") {
  for (const auto& s : omps_up_to(8)) {
    CHECK(check_A_axioms(s.base(), s.plus(), s.minus()));
    const auto ea = check_effect_algebra(ea_of(s));
    REQUIRE(ea.verdict);
    CHECK(*ea.derived == s.base());
  }
}

TEST_CASE("property: supplements are unique in passing structures") {
  // 1 = a + b1 = a + b2 forces b1 = (a + b1) - a = 1 - a = b2.
  for (const auto& s : omps_up_to(8))
    for (Element a = 0; a < s.size(); ++a)
      for (Element b1 = 0; b1 < s.size(); ++b1)
        for (Element b2 = 0; b2 < s.size(); ++b2)
          if (s.plus().get(a, b1) == s.one() && s.plus().get(a, b2) == s.one()) {
            CHECK(b1 == b2);
            CHECK(s.minus().get(s.one(), a) == b1);
          }
}

TEST_CASE("property: converse by perturbation sampling at size 6") {
  // Single and double cell perturbations of candidate tables on every
  // 6-element involutive poset. Whatever passes must be an OMP with plus the
  // join.
  std::mt19937_64 rng(6);
  std::size_t passing = 0, samples = 0;
  for (const auto& p : enumerate_involutive(6).representatives) {
    const auto [plus0, minus0] = candidate_tables(p);
    std::vector<std::pair<Element, Element>> plus_cells, minus_cells;
    for (Element x = 0; x < 6; ++x)
      for (Element y = 0; y < 6; ++y) {
        if (plus0.defined(x, y)) plus_cells.emplace_back(x, y);
        if (minus0.defined(x, y)) minus_cells.emplace_back(x, y);
      }
    for (int trial = 0; trial < 400; ++trial) {
      auto plus = plus0;
      auto minus = minus0;
      const int edits = trial == 0 ? 0 : 1 + static_cast<int>(rng() % 2);
      for (int e = 0; e < edits; ++e) {
        auto& table = rng() % 2 ? plus : minus;
        const auto& cells = &table == &plus ? plus_cells : minus_cells;
        const auto [x, y] = cells[rng() % cells.size()];
        table.set(x, y, static_cast<Element>(rng() % 6));
      }
      ++samples;
      if (!check_A_axioms(p, plus, minus)) continue;
      ++passing;
      CHECK(check_omp(p));
      for (Element x = 0; x < 6; ++x)
        for (Element y = 0; y < 6; ++y)
          if (p.orthogonal(x, y)) CHECK(plus.get(x, y) == lub(p.poset(), x, y));
      CHECK_NOTHROW(partial_ops_to_omp(p, plus, minus));
    }
  }
  CHECK(samples == 13u * 400u);
  CHECK(passing >= 1);  // MO2 with its canonical tables
}

TEST_CASE("property: composites of OMP morphisms are OMP morphisms") {
  const auto objects = omps_up_to(6);
  for (const auto& a : objects)
    for (const auto& b : objects)
      for (const auto& c : objects) {
        const auto ab = enumerate_omp_morphisms(a, b);
        const auto bc = enumerate_omp_morphisms(b, c);
        for (const auto& f : ab)
          for (const auto& g : bc) CHECK(is_omp_morphism(a, c, compose(g, f)));
      }
}

TEST_CASE("property: product and equalizer universality up to 4 elements") {
  const auto objects = omps_up_to(4);
  universal::Tally t;
  for (const auto& a : objects)
    for (const auto& b : objects) {
      universal::check_product(a, b, objects, t);
      const auto hom = enumerate_omp_morphisms(a, b);
      for (const auto& f : hom)
        for (const auto& g : hom) universal::check_equalizer(a, b, f, g, objects, t);
    }
  CHECK_MESSAGE(t.ok(), t.failure);
  CHECK(t.tests > 0);
}
