#include "doctest.h"

#include "omplab/enumeration.hpp"
#include "omplab/zoo.hpp"
#include "oracles.hpp"

using namespace omplab;

TEST_CASE("bounded poset catalog examples") {
  CHECK(enumerate_bounded_posets(1).up_to_iso() == 1);
  const auto two = enumerate_bounded_posets(2);
  REQUIRE(two.up_to_iso() == 1);
  CHECK(find_isomorphism(two.representatives[0].poset(), zoo::chain(2).poset()));
  const auto three = enumerate_bounded_posets(3);
  REQUIRE(three.up_to_iso() == 1);
  CHECK(find_isomorphism(three.representatives[0].poset(), zoo::chain(3).poset()));
  CHECK(three.labeled == 6);
}

TEST_CASE("catalog counts") {
  const std::vector<std::size_t> bposet{1, 1, 1, 2, 5, 16, 63};
  const std::vector<std::size_t> bposinv{1, 1, 1, 3, 4, 13, 22};
  for (std::size_t n = 1; n <= 7; ++n) {
    CHECK(enumerate_bounded_posets(n).up_to_iso() == bposet[n - 1]);
    CHECK(enumerate_involutive(n).up_to_iso() == bposinv[n - 1]);
  }
  const std::vector<std::size_t> omp{1, 1, 0, 1, 0, 1, 0, 2};
  for (std::size_t n = 1; n <= 8; ++n) CHECK(enumerate_omps(n).up_to_iso() == omp[n - 1]);
}

TEST_CASE("OMP catalog at sizes 2, 3 and 4") {
  const auto two = enumerate_omps(2);
  REQUIRE(two.up_to_iso() == 1);
  CHECK(find_involutive_isomorphism(two.representatives[0].base(), zoo::reversed_chain(2)));
  CHECK(enumerate_omps(3).up_to_iso() == 0);
  const auto four = enumerate_omps(4);
  REQUIRE(four.up_to_iso() == 1);
  CHECK(find_involutive_isomorphism(four.representatives[0].base(), zoo::boolean_algebra(2)));
  // Labeled B4s: 4! / |Aut| = 24 / 2.
  CHECK(four.labeled == 12);
}

TEST_CASE("property: OMP catalog equals the filter over all involutive posets") {
  EnumerationOptions opts;
  opts.cap = 8;
  for (std::size_t n = 1; n <= 8; ++n) {
    std::size_t filtered = 0;
    for (const auto& p : enumerate_involutive(n, opts).representatives) filtered += check_omp(p).pass;
    CHECK(enumerate_omps(n).up_to_iso() == filtered);
  }
}

TEST_CASE("cross_check_counts") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(cross_check_counts(Kind::bposet, n));
    CHECK(cross_check_counts(Kind::bposinv, n));
    CHECK(cross_check_counts(Kind::omp, n));
  }
  CHECK(naive_counts(Kind::omp, 4) == Counts{1, 12});
  CHECK_THROWS_AS(naive_counts(Kind::bposet, 6), SizeOverflow);
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(enumerate_bounded_posets(8), SizeOverflow);
  CHECK_THROWS_AS(enumerate_omps(9), SizeOverflow);
  CHECK_THROWS_AS(prop1_sweep(9), SizeOverflow);
  EnumerationOptions opts;
  opts.forbid_trivial = true;
  CHECK(enumerate_bounded_posets(1, opts).up_to_iso() == 0);
}

TEST_CASE("kind names") {
  CHECK(kind_from_string("omp") == Kind::omp);
  CHECK(kind_from_string("bposinv") == Kind::bposinv);
  CHECK_FALSE(kind_from_string("lattice"));
  CHECK(std::string(name_of(Kind::bposet)) == "bposet");
}

TEST_CASE("antitone_involutions vs brute force") {
  for (const auto& b : bounded_posets_up_to(6)) {
    std::vector<Map> expected;
    Map s(b.size());
    std::iota(s.begin(), s.end(), 0u);
    do {
      if (check_involution(b, s)) expected.push_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    CHECK(antitone_involutions(b) == expected);
  }
}

TEST_CASE("prop1 sweep examples") {
  const auto four = prop1_sweep(4);
  CHECK(four.ok());
  CHECK(four.forward_checked == 3);  // sizes 1, 2 and 4
  const auto five = prop1_sweep(5);
  CHECK(five.ok());
  CHECK(five.converse_plus_tables > 0);
  CHECK(five.converse_tables > 0);
  CHECK(five.isotonicity_gap == 0);
}

TEST_CASE("prop1 sweep with a weakened checker reports failures") {
  Prop1Options opts;
  opts.checker.without(AClause::A2);
  const auto r = prop1_sweep(5, opts);
  CHECK_FALSE(r.ok());
  CHECK(r.converse_failures.size() == 7);
}

TEST_CASE("search_partial_ops finds exactly the canonical tables on OMPs") {
  for (const auto& s : omps_up_to(5)) {
    const auto found = search_partial_ops(s.base(), {});
    REQUIRE(found.passing_plus.size() == 1);
    CHECK(found.passing_plus[0] == s.plus());
    CHECK(found.passing_minus[0] == s.minus());
    CHECK(found.tables == 1);
  }
  const auto none = search_partial_ops(zoo::reversed_chain(3), {});
  CHECK(none.tables == 0);
}

TEST_CASE("property: catalogs are deterministic") {
  const auto a = involutive_up_to(6);
  const auto b = involutive_up_to(6);
  CHECK(a == b);
}

TEST_CASE("property: OMP representatives are self-dual") {
  // x -> x' is an isomorphism onto the opposite order.
  for (const auto& s : omps_up_to(8)) {
    const Poset op = opposite(s.poset());
    CHECK(is_isotone(s.poset(), op, s.base().involution()));
    CHECK(find_isomorphism(s.poset(), op));
  }
}

TEST_CASE("property: automorphism counts match the labeled totals") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto cat = enumerate_involutive(n);
    std::uint64_t total = 0, factorial = 1;
    for (std::size_t i = 2; i <= n; ++i) factorial *= i;
    for (std::size_t i = 0; i < cat.up_to_iso(); ++i) {
      CHECK(cat.automorphism_counts[i] ==
            involutive_automorphisms(cat.representatives[i]).size());
      total += factorial / cat.automorphism_counts[i];
    }
    CHECK(total == cat.labeled);
  }
}
