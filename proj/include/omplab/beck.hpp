#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omplab/quantum.hpp"

namespace omplab {

/// Parallel OMP morphisms f, g: A -> B together with a BPosInv coequalizer
/// (Q, q) of their underlying pair, split when `split` is present.
struct BeckInstance {
  std::string label;
  OmpStructure A;
  OmpStructure B;
  Map f, g;
  InvolutivePoset quotient;
  Map q;
  std::optional<SplitCoequalizerData> split;
};

class Exhausted : public Error {
 public:
  Exhausted(std::size_t requested, std::size_t available);
};

/// Kernel pair of a split epi r: B -> C with BPosInv section t.
/// A = {(x, y) : r(x) = r(y)} inside B x B, f and g the two projections,
/// split data (q = r, t, s(x) = (x, t(r(x)))) confirmed by find_split_data.
/// Throws ValidationError when r is not a surjective OMP morphism or t is not
/// a section.
BeckInstance kernel_pair_instance(const OmpStructure& b, const OmpStructure& c,
                                  const Map& r, const Map& t, std::string label = {});

/// Every kernel-pair instance over catalog OMPs with |C| <= |B| <= max_size:
/// one per surjective OMP morphism r admitting a BPosInv section (the first
/// section in lexicographic order is used). Deterministic order.
std::vector<BeckInstance> all_kernel_pair_instances(std::size_t max_size);

/// `count` distinct instances drawn from all_kernel_pair_instances by a
/// seeded shuffle, returned in catalog order. Throws Exhausted.
std::vector<BeckInstance> generate_instances(std::size_t max_size, std::size_t count,
                                             std::uint64_t seed);

/// x [+] y := q(t(x) + t(y)) on orthogonal pairs of Q (first preimage pair
/// when no section is present), then checked against every orthogonal
/// preimage pair and for isotonicity. Throws ValidationError tagged
/// NotWellDefined (x y x0 y0 x1 y1), PreimageMissing (x y), ImageNotOrthogonal
/// (x0 y0) or NotIsotone (x y u v).
PartialOpTable induce_boxplus(const BeckInstance& inst);

/// y [-] x := q(t(y) - t(x)) for x <= y in Q; same checks over comparable
/// preimage pairs. Witness roles as above, with ImageNotComparable.
PartialOpTable induce_boxminus(const BeckInstance& inst);

/// check_A_axioms on (Q, [+], [-]).
Verdict verify_axiom_transport(const BeckInstance& inst, const PartialOpTable& boxplus,
                               const PartialOpTable& boxminus);

struct BeckOptions {
  /// Universality targets are the catalog OMPs with at most this many
  /// elements.
  std::size_t universality_max = 6;
  /// Also compare Q with coequalizer_bposinv(f, g).
  bool cross_check_coequalizer = true;
};

/// Stage outputs of verify_created_coequalizer. A stage whose input is
/// missing records a failing verdict tagged Skipped.
struct BeckReport {
  std::string label;
  PartialOpTable boxplus;
  PartialOpTable boxminus;
  Verdict plus_verdict;
  Verdict minus_verdict;
  Verdict axiom_verdict;
  Verdict omp_verdict;
  Verdict morphism_verdict;   // q as an OMP morphism B -> Q
  Verdict join_verdict;       // [+] equals the join on orthogonal pairs
  Verdict coequalizing_verdict;
  Verdict universal_verdict;
  Verdict coequalizer_verdict;
  std::uint64_t coequalizing_tests = 0;  // number of h checked

  bool ok() const;
  /// First failing stage as "stage: verdict", or "pass".
  std::string first_failure() const;
};

/// Full pipeline for one instance. `test_objects` overrides the universality
/// targets (defaults to omps_up_to(opts.universality_max)).
BeckReport verify_created_coequalizer(const BeckInstance& inst, BeckOptions opts = {},
                                      const std::vector<OmpStructure>* test_objects = nullptr);

/// verify_created_coequalizer over all instances on `threads` workers
/// (0 selects hardware concurrency). Reports are in instance order.
std::vector<BeckReport> verify_instances(const std::vector<BeckInstance>& instances,
                                         BeckOptions opts = {}, unsigned threads = 0);

}  // namespace omplab
