#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omplab/quantum.hpp"

namespace omplab {

enum class Kind : std::uint8_t { bposet, bposinv, omp };

const char* name_of(Kind k);
std::optional<Kind> kind_from_string(std::string_view s);

/// Representatives of one kind and size, pairwise non-isomorphic, in
/// deterministic generation order.
template <class T>
struct Catalog {
  Kind kind = Kind::bposet;
  std::size_t size = 0;
  std::vector<T> representatives;
  /// |Aut| of each representative (isomorphisms respecting the kind).
  std::vector<std::uint64_t> automorphism_counts;
  /// Number of labeled structures of this kind on {0..size-1}.
  std::uint64_t labeled = 0;

  std::size_t up_to_iso() const noexcept { return representatives.size(); }
};

struct EnumerationOptions {
  /// Largest admissible size; 0 selects the per-kind default (7 for bposet
  /// and bposinv, 8 for omp).
  std::size_t cap = 0;
  bool forbid_trivial = false;
};

/// Bounded posets with 0 bottom and n-1 top, inner elements built by
/// appending maximal elements whose strict down-set is a down-set of the
/// previous ones, deduplicated by find_isomorphism.
Catalog<BoundedPoset> enumerate_bounded_posets(std::size_t n, EnumerationOptions opts = {});

/// Each bounded poset representative with all its antitone involutions, one
/// per orbit under conjugation by order automorphisms.
Catalog<InvolutivePoset> enumerate_involutive(std::size_t n, EnumerationOptions opts = {});

/// Involutive catalog filtered by check_omp.
Catalog<OmpStructure> enumerate_omps(std::size_t n, EnumerationOptions opts = {});

/// Concatenation of the catalogs for sizes 1..max_n.
std::vector<BoundedPoset> bounded_posets_up_to(std::size_t max_n, EnumerationOptions opts = {});
std::vector<InvolutivePoset> involutive_up_to(std::size_t max_n, EnumerationOptions opts = {});
std::vector<OmpStructure> omps_up_to(std::size_t max_n, EnumerationOptions opts = {});

/// All antitone involutions of b, found by backtracking.
std::vector<Map> antitone_involutions(const BoundedPoset& b);

struct Counts {
  std::size_t up_to_iso = 0;
  std::uint64_t labeled = 0;
  friend bool operator==(const Counts&, const Counts&) = default;
};

/// Generate every labeled structure on {0..n-1} and group by canonical code
/// (minimum over all n! relabelings). Independent of the catalog path;
/// n <= 5.
Counts naive_counts(Kind kind, std::size_t n);

/// Counts from the catalog path and from naive_counts must agree.
/// Fails with tag Mismatch.
Verdict cross_check_counts(Kind kind, std::size_t n);

// ---------------------------------------------------------------------------
// Partial-operation characterization sweep

struct Prop1Options {
  /// Largest carrier for the exhaustive (plus, minus) table search.
  std::size_t exhaustive_max = 5;
  /// Clauses used by the checker under test (mutation hook).
  AxiomOptions checker{};
  /// Also search with both isotonicity clauses dropped and report structures
  /// that satisfy A0..A4 but admit no isotone tables.
  bool isotonicity_gap = true;
  /// Stop counting minus completions of one plus table beyond this.
  std::uint64_t completion_cap = 1'000'000;
};

struct Prop1Report {
  std::size_t max_n = 0;

  std::size_t forward_checked = 0;
  std::vector<std::string> forward_failures;

  std::size_t converse_carriers = 0;
  std::uint64_t converse_plus_tables = 0;     // complete plus tables reached
  std::uint64_t converse_structures = 0;      // (P, plus) with a passing minus
  std::uint64_t converse_tables = 0;          // passing (P, plus, minus)
  std::vector<std::string> converse_failures;

  std::uint64_t isotonicity_gap = 0;
  std::vector<std::string> isotonicity_gap_examples;

  bool ok() const { return forward_failures.empty() && converse_failures.empty(); }
  std::string summary() const;
};

Prop1Report prop1_sweep(std::size_t max_n, Prop1Options opts = {});

struct TableSearchResult {
  std::uint64_t plus_tables = 0;
  std::uint64_t structures = 0;
  std::uint64_t tables = 0;
  /// Plus tables for which some minus table passes the checker.
  std::vector<PartialOpTable> passing_plus;
  /// One passing minus table for each entry of passing_plus.
  std::vector<PartialOpTable> passing_minus;
};

/// Exhaustive search over domain-exact (plus, minus) tables on p that pass
/// check_A_axioms with `checker`. Pruning uses only consequences of enabled
/// clauses, so no passing table is skipped.
TableSearchResult search_partial_ops(const InvolutivePoset& p, AxiomOptions checker,
                                     std::uint64_t completion_cap = 1'000'000);

}  // namespace omplab
