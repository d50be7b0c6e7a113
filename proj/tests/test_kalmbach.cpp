#include "doctest.h"

#include <random>

#include "omplab/enumeration.hpp"
#include "omplab/kalmbach.hpp"
#include "omplab/zoo.hpp"
#include "oracles.hpp"

using namespace omplab;

TEST_CASE("K(C2) is C2") {
  const auto k = kalmbach_extension(zoo::chain(2));
  CHECK(k.omp.size() == 2);
  CHECK(k.chains == std::vector<EvenChain>{{}, {0, 1}});
  CHECK(k.embedding == Map{0, 1});
}

TEST_CASE("K(C3) is B4") {
  const auto k = kalmbach_extension(zoo::chain(3));
  REQUIRE(k.omp.size() == 4);
  CHECK(k.chains == std::vector<EvenChain>{{}, {0, 1}, {0, 2}, {1, 2}});
  const auto b4 = zoo::boolean_algebra(2);
  CHECK(find_involutive_isomorphism(k.omp.base(), b4));
  CHECK(oracle::isomorphic(k.omp.poset(), b4.poset(), &k.omp.base().involution(),
                           &b4.involution()));
  // {0, m}' = {m, 1}
  CHECK(k.omp.prime(1) == 3u);
  CHECK(k.embedding == Map{0, 1, 2});
}

TEST_CASE("K(B4) has six elements") {
  const auto k = kalmbach_extension(zoo::boolean_algebra(2).base());
  CHECK(k.omp.size() == 6);
  CHECK(check_omp(k.omp.base()));
  CHECK(check_lattice(k.omp.poset()));
  CHECK(find_involutive_isomorphism(k.omp.base(), zoo::mo(2)));
}

TEST_CASE("chain_complement") {
  const auto c3 = zoo::chain(3);
  CHECK(chain_complement(c3, {}) == EvenChain{0, 2});
  CHECK(chain_complement(c3, {0, 2}) == EvenChain{});
  CHECK(chain_complement(c3, {0, 1}) == EvenChain{1, 2});
  CHECK(chain_complement(zoo::chain(4), {1, 2}) == EvenChain{0, 1, 2, 3});
}

TEST_CASE("verify_embedding detects corruption") {
  auto k = kalmbach_extension(zoo::antichain_with_bounds(2));
  CHECK(verify_embedding(k));
  auto merged = k;
  merged.embedding[1] = merged.embedding[2];
  CHECK(verify_embedding(merged).tag == "NotInjective");
  auto swapped = k;
  std::swap(swapped.embedding[0], swapped.embedding[3]);
  CHECK_FALSE(verify_embedding(swapped));
}

TEST_CASE("kalmbach_extension size limit") {
  CHECK_THROWS_AS(kalmbach_extension(zoo::chain(7)), SizeOverflow);
  CHECK_NOTHROW(kalmbach_extension(zoo::chain(7), 7));
}

TEST_CASE("property: even chains agree with subset filtering") {
  for (const auto& p : bounded_posets_up_to(6)) {
    const auto chains = even_chains(p);
    CHECK(chains.size() == oracle::even_chain_count(p.poset()));
    for (const auto& c : chains)
      for (std::size_t i = 0; i + 1 < c.size(); ++i) CHECK((p.leq(c[i], c[i + 1]) && c[i] != c[i + 1]));
  }
}

TEST_CASE("property: K(P) is an orthomodular lattice containing P up to 5 elements") {
  for (const auto& p : bounded_posets_up_to(5)) {
    const auto k = kalmbach_extension(p);
    CHECK(check_omp(k.omp.base()));
    CHECK(check_lattice(k.omp.poset()));
    CHECK(verify_embedding(k));
    for (Element a = 0; a < p.size(); ++a)
      for (Element b = 0; b < p.size(); ++b)
        CHECK(p.leq(a, b) == k.omp.leq(k.embedding[a], k.embedding[b]));
  }
}

TEST_CASE("property: random single-entry embedding corruption is detected") {
  std::mt19937_64 rng(11);
  const auto posets = bounded_posets_up_to(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto k = kalmbach_extension(posets[1 + rng() % (posets.size() - 1)]);
    const auto a = static_cast<Element>(rng() % k.embedding.size());
    const auto old = k.embedding[a];
    Element next = static_cast<Element>(rng() % (k.omp.size() - 1));
    if (next >= old) ++next;
    k.embedding[a] = next;
    CHECK_FALSE(verify_embedding(k));
  }
}
