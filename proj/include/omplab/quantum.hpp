#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "omplab/involutive.hpp"

namespace omplab {

/// Total description of a partial binary operation on {0..n-1}.
class PartialOpTable {
 public:
  PartialOpTable() = default;
  explicit PartialOpTable(std::size_t n) : n_(n), cells_(n * n, kUndefined) {}

  std::size_t size() const noexcept { return n_; }
  bool defined(Element x, Element y) const noexcept { return cell(x, y) != kUndefined; }
  std::optional<Element> get(Element x, Element y) const noexcept {
    const auto c = cell(x, y);
    if (c == kUndefined) return std::nullopt;
    return static_cast<Element>(c);
  }
  /// Precondition: defined(x, y).
  Element at(Element x, Element y) const noexcept { return static_cast<Element>(cell(x, y)); }
  void set(Element x, Element y, std::optional<Element> v) noexcept {
    cells_[index(x, y)] = v ? static_cast<std::int32_t>(*v) : kUndefined;
  }

  friend bool operator==(const PartialOpTable&, const PartialOpTable&) = default;

 private:
  static constexpr std::int32_t kUndefined = -1;
  std::size_t index(Element x, Element y) const noexcept {
    return static_cast<std::size_t>(x) * n_ + y;
  }
  std::int32_t cell(Element x, Element y) const noexcept { return cells_[index(x, y)]; }

  std::size_t n_ = 0;
  std::vector<std::int32_t> cells_;
};

/// Pass iff every value stored in the table is inside the carrier.
Verdict check_table_shape(const PartialOpTable& t, std::size_t n, const char* name);

// ---------------------------------------------------------------------------
// Effect algebras

struct EffectAlgebraCandidate {
  std::size_t size = 0;
  PartialOpTable plus;
  Element zero = 0;
  Element one = 0;
};

struct EffectAlgebraCheck {
  Verdict verdict;
  /// Derived order and orthosupplement, present iff the verdict passes.
  std::optional<InvolutivePoset> derived;
};

/// Checks E1..E4 in order, scanning elements lexicographically, then derives
/// a <= b iff a + c = b for some c and the supplement a' from E3, and
/// validates them as a bounded poset with involution. A derived-order failure
/// is reported as DerivedOrderNotPoset.
EffectAlgebraCheck check_effect_algebra(const EffectAlgebraCandidate& c);

/// f(1) = 1 and a + b defined implies f(a) + f(b) defined and equal to f(a+b).
Verdict is_ea_morphism(const EffectAlgebraCandidate& source,
                       const EffectAlgebraCandidate& target, std::span<const Element> map);

// ---------------------------------------------------------------------------
// Orthomodular posets

/// Checks OMP1 (only common lower bound of x and x' is 0), OMP2 (joins of
/// orthogonal pairs exist) and OMP3 (x <= y implies x v (x v y')' = y), each
/// scanned in row-major order.
Verdict check_omp(const InvolutivePoset& p);

/// An orthomodular poset with its partial operations: plus(x, y) = x v y on
/// orthogonal pairs and minus(y, x) = y - x = (x v y')' for x <= y.
class OmpStructure {
 public:
  const InvolutivePoset& base() const noexcept { return base_; }
  const Poset& poset() const noexcept { return base_.poset(); }
  std::size_t size() const noexcept { return base_.size(); }
  bool leq(Element a, Element b) const noexcept { return base_.leq(a, b); }
  Element zero() const noexcept { return base_.zero(); }
  Element one() const noexcept { return base_.one(); }
  Element prime(Element x) const noexcept { return base_.prime(x); }
  bool orthogonal(Element x, Element y) const noexcept { return base_.orthogonal(x, y); }

  const PartialOpTable& plus() const noexcept { return plus_; }
  const PartialOpTable& minus() const noexcept { return minus_; }

  friend bool operator==(const OmpStructure&, const OmpStructure&) = default;

 private:
  OmpStructure(InvolutivePoset base, PartialOpTable plus, PartialOpTable minus)
      : base_(std::move(base)), plus_(std::move(plus)), minus_(std::move(minus)) {}

  friend OmpStructure omp_to_partial_ops(const InvolutivePoset&);
  friend OmpStructure partial_ops_to_omp(const InvolutivePoset&, const PartialOpTable&,
                                         const PartialOpTable&);

  InvolutivePoset base_;
  PartialOpTable plus_;
  PartialOpTable minus_;
};

/// Throws ValidationError if check_omp fails, ContractViolation
/// (MeetJoinMismatch) if (x v y')' differs from y ^ x'.
OmpStructure omp_to_partial_ops(const InvolutivePoset& p);

/// Clauses of the partial-operation characterization, in checking order.
enum class AClause : std::uint8_t {
  Domain,    // plus defined iff x _|_ y, minus(y, x) defined iff x <= y
  IsoPlus,   // + isotone on the orthogonality poset
  IsoMinus,  // - isotone on the interval poset
  A0,
  A1,
  A2,
  A3,
  A4,
};
inline constexpr std::size_t kAClauseCount = 8;
const char* tag_of(AClause c);

/// Set of clauses a check runs; all are enabled by default. Disabling is a
/// mutation-testing and exploration hook.
struct AxiomOptions {
  std::array<bool, kAClauseCount> enabled{true, true, true, true, true, true, true, true};
  bool on(AClause c) const { return enabled[static_cast<std::size_t>(c)]; }
  AxiomOptions& without(AClause c) {
    enabled[static_cast<std::size_t>(c)] = false;
    return *this;
  }
};

/// Runs the enabled clauses in AClause order; the first failure wins.
Verdict check_A_axioms(const InvolutivePoset& p, const PartialOpTable& plus,
                       const PartialOpTable& minus, AxiomOptions opts = {});

/// A single clause in isolation.
Verdict check_A_clause(const InvolutivePoset& p, const PartialOpTable& plus,
                       const PartialOpTable& minus, AClause clause);

/// Throws ValidationError if check_A_axioms fails and ContractViolation
/// (Prop1Violation) if p is then not an OMP or plus is not the join.
OmpStructure partial_ops_to_omp(const InvolutivePoset& p, const PartialOpTable& plus,
                                const PartialOpTable& minus);

/// BPosInv morphism that preserves orthogonality, + and -.
/// Tags beyond is_bposinv_morphism: OrthogonalityNotPreserved,
/// PlusNotPreserved, MinusNotPreserved.
Verdict is_omp_morphism(const OmpStructure& source, const OmpStructure& target,
                        std::span<const Element> map);

std::vector<Map> enumerate_omp_morphisms(const OmpStructure& source,
                                         const OmpStructure& target);

/// Least subset containing seed, 0 and 1, closed under ' and under joins of
/// orthogonal pairs. Sorted ascending.
std::vector<Element> generated_subalgebra(const OmpStructure& a,
                                          std::span<const Element> seed);

/// Contains 0 and 1, closed under ' and orthogonal joins.
Verdict is_subalgebra(const OmpStructure& a, std::span<const Element> elements);

/// Restriction of `a` to a subalgebra given as a sorted element list; element
/// i of the result is elements[i].
OmpStructure subalgebra_structure(const OmpStructure& a,
                                  std::span<const Element> elements);

/// Componentwise product with the mixed-radix encoding of `product`.
OmpStructure omp_product(std::span<const OmpStructure> factors,
                         std::size_t limit = max_carrier());

/// Projection of a product onto factor k.
Map product_projection(std::span<const std::size_t> radices, std::size_t k);

struct Equalizer {
  std::vector<Element> elements;  // sorted subset {x : f(x) = g(x)}
  OmpStructure sub;
  Map inclusion;
};

/// Throws ValidationError if f or g is not an OMP morphism and
/// ContractViolation (EqualizerNotSubalgebra) if E is not a subalgebra.
Equalizer omp_equalizer(const OmpStructure& a, const OmpStructure& b,
                        std::span<const Element> f, std::span<const Element> g);

}  // namespace omplab
