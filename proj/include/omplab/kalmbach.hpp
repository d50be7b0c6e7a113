#pragma once

#include <vector>

#include "omplab/quantum.hpp"

namespace omplab {

/// Strictly increasing chain c_1 < ... < c_2m of even length, read as the
/// intervals [c_1, c_2], [c_3, c_4], ...
using EvenChain = std::vector<Element>;

/// All even chains of p, ordered by length, then lexicographically.
std::vector<EvenChain> even_chains(const BoundedPoset& p);

/// Every interval of c lies inside some interval of d.
bool chain_leq(const BoundedPoset& p, const EvenChain& c, const EvenChain& d);

/// Re-pairs 0 <= c_1 < ... < c_2m <= 1 as [0, c_1], [c_2, c_3], ..., [c_2m, 1]
/// and drops degenerate intervals.
EvenChain chain_complement(const BoundedPoset& p, const EvenChain& c);

struct KalmbachResult {
  BoundedPoset source;
  OmpStructure omp;
  std::vector<EvenChain> chains;  // chains[i] is element i of omp
  Map embedding;                  // source -> omp
};

/// Builds K(p) on the even chains of p with its embedding 0 -> {}, a -> {0, a}.
/// The result is accepted only after check_omp and verify_embedding pass;
/// otherwise ContractViolation (ConstructionInvalid) is thrown.
KalmbachResult kalmbach_extension(const BoundedPoset& p, std::size_t max_size = 6);

/// Injective, a <= b iff e(a) <= e(b), e(0) bottom, e(1) top, and e(a) is the
/// chain {0, a} for a != 0 (e(0) the empty chain).
Verdict verify_embedding(const KalmbachResult& r);

}  // namespace omplab
