#include "doctest.h"

#include "omplab/enumeration.hpp"
#include "omplab/zoo.hpp"
#include "oracles.hpp"

using namespace omplab;

namespace {

Verdict involution_rejection(const BoundedPoset& b, Map perm) {
  try {
    validate_involutive(b, std::move(perm));
  } catch (const ValidationError& e) {
    return e.verdict();
  }
  return Verdict::ok();
}

// B4 as 0, a, a', 1 (bitmasks 0, 1, 2, 3).
const InvolutivePoset& b4() {
  static const InvolutivePoset p = zoo::boolean_algebra(2);
  return p;
}

}  // namespace

TEST_CASE("validate_involutive") {
  CHECK_NOTHROW(validate_involutive(zoo::chain(2), Map{1, 0}));
  CHECK_NOTHROW(validate_involutive(zoo::chain(3), Map{2, 1, 0}));
  CHECK(antitone_involutions(zoo::chain(3)) == std::vector<Map>{{2, 1, 0}});

  const auto v = involution_rejection(b4().base(), identity_map(4));
  CHECK(v.tag == "NotAntitone");
  CHECK(involution_rejection(zoo::chain(2), Map{0, 0}).tag == "NotPermutation");
  CHECK(involution_rejection(zoo::chain(2), Map{0, 1, 2}).tag == "NotPermutation");
}

TEST_CASE("orthogonality") {
  for (const auto& p : involutive_up_to(6))
    for (Element x = 0; x < p.size(); ++x) {
      CHECK(orthogonal(p, x, p.zero()));
      CHECK(p.prime(p.zero()) == p.one());
    }
  const auto c2 = zoo::reversed_chain(2);
  CHECK_FALSE(orthogonal(c2, 1, 1));
  CHECK_FALSE(orthogonal(b4(), 1, 1));
  CHECK(orthogonal(b4(), 1, 2));
}

TEST_CASE("ortho_poset and triple_ortho_poset") {
  using P = std::pair<Element, Element>;
  const auto c2 = zoo::reversed_chain(2);
  CHECK(ortho_poset(c2).pairs == std::vector<P>{{0, 0}, {0, 1}, {1, 0}});

  // Oracle: direct x <= y' filter over all pairs.
  std::size_t count = 0;
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) count += b4().leq(x, b4().prime(y));
  CHECK(count == 9);
  CHECK(ortho_poset(b4()).pairs.size() == 9);

  using T = std::array<Element, 3>;
  CHECK(triple_ortho_poset(c2).triples == std::vector<T>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
}

TEST_CASE("property: ortho_poset is an order ideal of the square") {
  for (const auto& p : involutive_up_to(6)) {
    const auto o = ortho_poset(p);
    std::size_t expected = 0;
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y) expected += p.leq(x, p.prime(y));
    CHECK(o.pairs.size() == expected);
    for (const auto& [x, y] : o.pairs)
      for (Element u = 0; u < p.size(); ++u)
        for (Element v = 0; v < p.size(); ++v)
          if (p.leq(u, x) && p.leq(v, y)) CHECK(orthogonal(p, u, v));
  }
}

TEST_CASE("is_bposinv_morphism") {
  CHECK(is_bposinv_morphism(b4(), b4(), identity_map(4)));
  const auto c2 = zoo::reversed_chain(2);
  CHECK(is_bposinv_morphism(c2, b4(), Map{0, 3}));
  const auto v = is_bposinv_morphism(c2, b4(), Map{0, 1});
  CHECK(v.tag == "OneNotPreserved");
}

TEST_CASE("enumerate_bposinv_morphisms examples") {
  const auto c2 = zoo::reversed_chain(2);
  CHECK(enumerate_bposinv_morphisms(c2, c2) == std::vector<Map>{{0, 1}});
  const auto hom = enumerate_bposinv_morphisms(b4(), c2);
  CHECK(hom.size() == 2);
  CHECK(hom == oracle::bposinv_morphisms(b4(), c2));
  const auto one = zoo::reversed_chain(1);
  for (const auto& p : involutive_up_to(5)) CHECK(enumerate_bposinv_morphisms(p, one).size() == 1);
}

TEST_CASE("property: morphism enumeration agrees with brute force") {
  const auto objects = involutive_up_to(5);
  for (const auto& a : objects)
    for (const auto& b : objects) {
      const auto fast = enumerate_bposinv_morphisms(a, b);
      CHECK(std::is_sorted(fast.begin(), fast.end()));
      CHECK(fast == oracle::bposinv_morphisms(a, b));
    }
}

TEST_CASE("enumeration limit") {
  const auto b8 = zoo::boolean_algebra(3);
  CHECK_THROWS_AS(enumerate_bposinv_morphisms(b8, b8, 1), SizeOverflow);
}

TEST_CASE("coequalizer of an equal pair is the identity quotient") {
  const auto co = coequalizer_bposinv(b4(), b4(), identity_map(4), identity_map(4));
  CHECK(co.quotient == b4());
  CHECK(co.projection == identity_map(4));
}

TEST_CASE("coequalizer identifying a with a' in B4") {
  // A map C2 -> B4 sending 1 to an atom is not a morphism, so a and a' are
  // identified by the identity and the complement swap of B4 instead.
  const Map swap{0, 2, 1, 3};
  const auto co = coequalizer_bposinv(b4(), b4(), identity_map(4), swap);
  CHECK(co.quotient.size() == 3);
  CHECK(co.projection == Map{0, 1, 1, 2});
  const std::vector<InvolutivePoset> tests = involutive_up_to(5);
  CHECK(verify_coequalizer(b4(), b4(), identity_map(4), swap, co.quotient, co.projection, tests));
}

TEST_CASE("property: coequalizers satisfy the universal property (|B| <= 5)") {
  const auto objects = involutive_up_to(5);
  std::size_t pairs = 0;
  for (const auto& a : objects)
    for (const auto& b : objects) {
      const auto hom = enumerate_bposinv_morphisms(a, b);
      for (const auto& f : hom)
        for (const auto& g : hom) {
          const auto co = coequalizer_bposinv(a, b, f, g);
          CHECK(is_bposinv_morphism(b, co.quotient, co.projection));
          CHECK(compose(co.projection, f) == compose(co.projection, g));
          auto v = verify_coequalizer(a, b, f, g, co.quotient, co.projection, objects);
          CHECK_MESSAGE(v, describe(v));
          ++pairs;
        }
    }
  CHECK(pairs > 0);
}

TEST_CASE("find_split_data") {
  const auto id = identity_map(4);
  const auto split = find_split_data(b4(), b4(), id, id, b4(), id);
  REQUIRE(split);
  CHECK(split->t == id);
  CHECK(split->s == id);
  CHECK(check_split_data(b4(), b4(), b4(), *split));

  // The identity/swap coequalizer B4 -> C3 has no section: C3's middle
  // element is self-complementary, but no element of B4 is.
  const Map swap{0, 2, 1, 3};
  const auto co = coequalizer_bposinv(b4(), b4(), id, swap);
  CHECK_FALSE(find_split_data(b4(), b4(), id, swap, co.quotient, co.projection));

  CHECK_THROWS_AS(find_split_data(b4(), b4(), id, swap, b4(), id), ValidationError);
}

TEST_CASE("verify_coequalizer detects a non-coequalizer") {
  // q = identity does not coequalize id and swap.
  const Map swap{0, 2, 1, 3};
  const std::vector<InvolutivePoset> tests{b4()};
  CHECK(verify_coequalizer(b4(), b4(), identity_map(4), swap, b4(), identity_map(4), tests).tag ==
        "NotCoequalizing");
  // (C2, [0,0,1,1]) is no coequalizer of (id, id): the other morphism
  // B4 -> C2, [0,1,0,1], does not factor through it.
  const auto c2 = zoo::reversed_chain(2);
  const std::vector<InvolutivePoset> with_b4{c2, b4()};
  const auto v = verify_coequalizer(b4(), b4(), identity_map(4), identity_map(4), c2,
                                    Map{0, 0, 1, 1}, with_b4);
  CHECK(v.tag == "ExistenceFailure");
  CHECK(v.at("C") == 0u);
}

TEST_CASE("involutive products and isomorphisms") {
  const std::vector<InvolutivePoset> f{zoo::reversed_chain(2), zoo::reversed_chain(2)};
  const auto p = involutive_product(f);
  CHECK(find_involutive_isomorphism(p, b4()));
  CHECK(involutive_automorphisms(b4()).size() == 2);
  CHECK(involutive_automorphisms(zoo::mo(2)).size() == 8);
}
