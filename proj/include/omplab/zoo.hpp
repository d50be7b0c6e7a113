#pragma once

#include <string>
#include <vector>

#include "omplab/quantum.hpp"

/// Small named structures used throughout tests, fixtures and the CLI.
namespace omplab::zoo {

/// 0 < 1 < ... < n-1.
BoundedPoset chain(std::size_t n);

/// 0 < a_1, ..., a_k < 1 with the a_i pairwise incomparable.
BoundedPoset antichain_with_bounds(std::size_t k);

/// Chain with the order-reversing involution i -> n-1-i.
InvolutivePoset reversed_chain(std::size_t n);

/// Subsets of {0..k-1} as bitmasks, complement as involution.
InvolutivePoset boolean_algebra(std::size_t k);

/// MO_k: 0, a_1, a_1', ..., a_k, a_k', 1 (a_i and a_j' incomparable for i != j).
InvolutivePoset mo(std::size_t k);

/// 0 < a < b < 1 and 0 < b' < a' < 1, elements ordered 0, a, b, b', a', 1.
InvolutivePoset hexagon();

std::vector<std::string> mo_names(std::size_t k);
std::vector<std::string> hexagon_names();

OmpStructure as_omp(const InvolutivePoset& p);

}  // namespace omplab::zoo
