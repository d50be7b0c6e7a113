#include "omplab/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace omplab {

const char* name_of(Kind k) {
  switch (k) {
    case Kind::bposet: return "bposet";
    case Kind::bposinv: return "bposinv";
    case Kind::omp: return "omp";
  }
  return "?";
}

std::optional<Kind> kind_from_string(std::string_view s) {
  if (s == "bposet") return Kind::bposet;
  if (s == "bposinv") return Kind::bposinv;
  if (s == "omp") return Kind::omp;
  return std::nullopt;
}

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::size_t effective_cap(const EnumerationOptions& opts, std::size_t fallback) {
  return opts.cap == 0 ? fallback : opts.cap;
}

void require_positive(std::size_t n) {
  if (n == 0) throw Error("carrier size must be positive");
}

using Signature = std::vector<std::pair<std::size_t, std::size_t>>;

Signature sorted_signature(const Poset& p) {
  Signature s(p.size());
  for (Element x = 0; x < p.size(); ++x) s[x] = {p.up(x).count(), p.down(x).count()};
  std::sort(s.begin(), s.end());
  return s;
}

// Naturally labeled posets on m points: element k's strict down-set is a
// down-set of {0..k-1}.
void grow_inner(std::size_t m, std::vector<Bitset>& down, std::vector<std::vector<Bitset>>& out) {
  const std::size_t k = down.size();
  if (k == m) {
    out.push_back(down);
    return;
  }
  const std::size_t subsets = std::size_t{1} << k;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    bool ideal = true;
    for (std::size_t i = 0; i < k && ideal; ++i)
      if ((mask >> i) & 1u)
        for (std::size_t j = 0; j < k && ideal; ++j)
          if (down[i].test(j) && !((mask >> j) & 1u)) ideal = false;
    if (!ideal) continue;
    Bitset d(m);
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u) d.set(i);
    d.set(k);
    down.push_back(d);
    grow_inner(m, down, out);
    down.pop_back();
  }
}

BoundedPoset bound_inner(std::size_t m, const std::vector<Bitset>& inner_down) {
  const std::size_t n = m + 2;
  Relation r(n, Bitset(n));
  r[0].set_all();
  for (std::size_t i = 0; i < n; ++i) r[i].set(n - 1);
  for (std::size_t k = 0; k < m; ++k) {
    r[k + 1].set(k + 1);
    inner_down[k].for_each([&](Element j) { r[j + 1].set(k + 1); });
  }
  return BoundedPoset(Poset::from_relation(std::move(r)), 0, static_cast<Element>(n - 1));
}

Catalog<BoundedPoset> bounded_catalog(std::size_t n, bool forbid_trivial) {
  require_positive(n);
  Catalog<BoundedPoset> cat;
  cat.kind = Kind::bposet;
  cat.size = n;
  if (n == 1) {
    if (!forbid_trivial) {
      cat.representatives.push_back(
          BoundedPoset(Poset::from_relation(identity_relation(1)), 0, 0));
      cat.automorphism_counts.push_back(1);
      cat.labeled = 1;
    }
    return cat;
  }
  const std::size_t m = n - 2;
  std::vector<std::vector<Bitset>> inner;
  std::vector<Bitset> scratch;
  grow_inner(m, scratch, inner);

  std::map<Signature, std::vector<std::size_t>> buckets;
  for (const auto& down : inner) {
    BoundedPoset candidate = bound_inner(m, down);
    auto& bucket = buckets[sorted_signature(candidate.poset())];
    bool known = false;
    for (std::size_t idx : bucket)
      if (find_isomorphism(candidate.poset(), cat.representatives[idx].poset())) {
        known = true;
        break;
      }
    if (known) continue;
    bucket.push_back(cat.representatives.size());
    cat.representatives.push_back(std::move(candidate));
  }
  for (const auto& rep : cat.representatives) {
    const auto aut = automorphisms(rep.poset()).size();
    cat.automorphism_counts.push_back(aut);
    cat.labeled += factorial(n) / aut;
  }
  return cat;
}

Catalog<InvolutivePoset> involutive_catalog(std::size_t n, bool forbid_trivial) {
  const auto posets = bounded_catalog(n, forbid_trivial);
  Catalog<InvolutivePoset> cat;
  cat.kind = Kind::bposinv;
  cat.size = n;
  for (const auto& bp : posets.representatives) {
    const auto aut = automorphisms(bp.poset());
    std::set<Map> seen;
    for (const auto& inv : antitone_involutions(bp)) {
      Map canonical = inv;
      std::uint64_t stabilizer = 0;
      for (const auto& sigma : aut) {
        Map conj(n);
        for (Element x = 0; x < n; ++x) conj[sigma[x]] = sigma[inv[x]];
        if (conj == inv) ++stabilizer;
        canonical = std::min(canonical, conj);
      }
      if (!seen.insert(canonical).second) continue;
      cat.representatives.emplace_back(bp, inv);
      cat.automorphism_counts.push_back(stabilizer);
      cat.labeled += factorial(n) / stabilizer;
    }
  }
  return cat;
}

}  // namespace

std::vector<Map> antitone_involutions(const BoundedPoset& b) {
  const std::size_t n = b.size();
  const Poset& p = b.poset();
  std::vector<std::int64_t> inv(n, -1);
  std::vector<Element> assigned;
  std::vector<Map> out;

  auto compatible = [&](Element x, Element y) {
    // x' = y: antitone against every assigned z.
    if (p.up(x).count() != p.down(y).count() || p.down(x).count() != p.up(y).count())
      return false;
    for (Element z : assigned) {
      const auto zp = static_cast<Element>(inv[z]);
      if (p.leq(x, z) && !p.leq(zp, y)) return false;
      if (p.leq(z, x) && !p.leq(y, zp)) return false;
    }
    return true;
  };

  std::function<void(Element)> run = [&](Element x) {
    while (x < n && inv[x] >= 0) ++x;
    if (x == n) {
      Map m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Element>(inv[i]);
      out.push_back(std::move(m));
      return;
    }
    for (Element y = x; y < n; ++y) {
      if (inv[y] >= 0 || !compatible(x, y)) continue;
      inv[x] = y;
      assigned.push_back(x);
      if (y == x) {
        run(x + 1);
      } else if (compatible(y, x)) {
        inv[y] = x;
        assigned.push_back(y);
        run(x + 1);
        assigned.pop_back();
        inv[y] = -1;
      }
      assigned.pop_back();
      inv[x] = -1;
    }
  };
  run(0);
  return out;
}

Catalog<BoundedPoset> enumerate_bounded_posets(std::size_t n, EnumerationOptions opts) {
  require_size("enumerate_bounded_posets", n, effective_cap(opts, 7));
  return bounded_catalog(n, opts.forbid_trivial);
}

Catalog<InvolutivePoset> enumerate_involutive(std::size_t n, EnumerationOptions opts) {
  require_size("enumerate_involutive", n, effective_cap(opts, 7));
  return involutive_catalog(n, opts.forbid_trivial);
}

Catalog<OmpStructure> enumerate_omps(std::size_t n, EnumerationOptions opts) {
  require_size("enumerate_omps", n, effective_cap(opts, 8));
  Catalog<OmpStructure> cat;
  cat.kind = Kind::omp;
  cat.size = n;
  if (n > 2 && n % 2 == 1) {
    // An involution on an odd carrier fixes some m != 0, and then m is a
    // nonzero lower bound of m and m'. The filter below would reject every
    // candidate; skipping the search keeps n = 7 cheap.
    return cat;
  }
  auto inv = involutive_catalog(n, opts.forbid_trivial);
  for (std::size_t i = 0; i < inv.representatives.size(); ++i) {
    const auto& p = inv.representatives[i];
    if (!check_omp(p)) continue;
    cat.representatives.push_back(omp_to_partial_ops(p));
    cat.automorphism_counts.push_back(inv.automorphism_counts[i]);
    cat.labeled += factorial(n) / inv.automorphism_counts[i];
  }
  return cat;
}

std::vector<BoundedPoset> bounded_posets_up_to(std::size_t max_n, EnumerationOptions opts) {
  std::vector<BoundedPoset> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& r : enumerate_bounded_posets(n, opts).representatives) out.push_back(std::move(r));
  return out;
}

std::vector<InvolutivePoset> involutive_up_to(std::size_t max_n, EnumerationOptions opts) {
  std::vector<InvolutivePoset> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& r : enumerate_involutive(n, opts).representatives) out.push_back(std::move(r));
  return out;
}

std::vector<OmpStructure> omps_up_to(std::size_t max_n, EnumerationOptions opts) {
  std::vector<OmpStructure> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& r : enumerate_omps(n, opts).representatives) out.push_back(std::move(r));
  return out;
}

// ---------------------------------------------------------------------------
// Naive dual path

namespace {

std::uint64_t encode(const Relation& r, std::span<const Element> inv,
                     std::span<const Element> sigma) {
  const std::size_t n = r.size();
  std::vector<std::uint8_t> bits(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r[i].test(j)) bits[sigma[i] * n + sigma[j]] = 1;
  std::uint64_t code = 0;
  for (auto b : bits) code = (code << 1) | b;
  if (!inv.empty()) {
    std::vector<Element> relabeled(n);
    for (std::size_t i = 0; i < n; ++i) relabeled[sigma[i]] = sigma[inv[i]];
    for (auto v : relabeled) code = (code << 3) | v;
  }
  return code;
}

std::uint64_t canonical_code(const Relation& r, std::span<const Element> inv) {
  Map sigma = identity_map(r.size());
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, encode(r, inv, sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

bool brute_antitone_involution(const Relation& r, std::span<const Element> perm) {
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (perm[perm[x]] != x) return false;
    for (std::size_t y = 0; y < n; ++y)
      if (r[x].test(y) && !r[perm[y]].test(perm[x])) return false;
  }
  return true;
}

}  // namespace

Counts naive_counts(Kind kind, std::size_t n) {
  require_positive(n);
  require_size("naive_counts", n, 5);
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::size_t states = 1;
  for (std::size_t k = 0; k < pairs.size(); ++k) states *= 3;

  std::set<std::uint64_t> classes;
  Counts counts;
  for (std::size_t code = 0; code < states; ++code) {
    Relation r = identity_relation(n);
    std::size_t c = code;
    for (auto [i, j] : pairs) {
      const auto state = c % 3;
      c /= 3;
      if (state == 1) r[i].set(j);
      if (state == 2) r[j].set(i);
    }
    if (!check_order_axioms(r)) continue;
    std::optional<Element> zero, one;
    for (Element x = 0; x < n; ++x) {
      if (r[x].count() == n) zero = x;
      bool top = true;
      for (Element y = 0; y < n; ++y) top = top && r[y].test(x);
      if (top) one = x;
    }
    if (!zero || !one) continue;

    if (kind == Kind::bposet) {
      ++counts.labeled;
      classes.insert(canonical_code(r, {}));
      continue;
    }
    Map perm = identity_map(n);
    do {
      if (!brute_antitone_involution(r, perm)) continue;
      if (kind == Kind::omp) {
        InvolutivePoset p(BoundedPoset(Poset::from_relation(r), *zero, *one), perm);
        if (!check_omp(p)) continue;
      }
      ++counts.labeled;
      classes.insert(canonical_code(r, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  counts.up_to_iso = classes.size();
  return counts;
}

Verdict cross_check_counts(Kind kind, std::size_t n) {
  Counts fast;
  switch (kind) {
    case Kind::bposet: {
      auto c = enumerate_bounded_posets(n);
      fast = {c.up_to_iso(), c.labeled};
      break;
    }
    case Kind::bposinv: {
      auto c = enumerate_involutive(n);
      fast = {c.up_to_iso(), c.labeled};
      break;
    }
    case Kind::omp: {
      auto c = enumerate_omps(n);
      fast = {c.up_to_iso(), c.labeled};
      break;
    }
  }
  const Counts naive = naive_counts(kind, n);
  if (fast == naive) return Verdict::ok();
  std::ostringstream detail;
  detail << name_of(kind) << " n=" << n << ": catalog " << fast.up_to_iso << "/"
         << fast.labeled << " vs naive " << naive.up_to_iso << "/" << naive.labeled
         << " (up to iso/labeled)";
  return Verdict::fail("Mismatch", {}, detail.str());
}

// ---------------------------------------------------------------------------
// Exhaustive (plus, minus) search

namespace {

class TableSearch {
 public:
  TableSearch(const InvolutivePoset& p, AxiomOptions checker, std::uint64_t cap)
      : p_(p), on_(checker), cap_(cap), plus_(p.size()), minus_(p.size()) {
    const std::size_t n = p.size();
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        if (p.orthogonal(x, y)) plus_cells_.emplace_back(x, y);
        if (p.leq(x, y)) interval_cells_.emplace_back(x, y);
      }
  }

  TableSearchResult run() {
    assign_plus(0);
    return std::move(result_);
  }

 private:
  bool on(AClause c) const { return on_.on(c); }

  bool plus_admissible(Element x, Element y, Element v) const {
    const Element zero = p_.zero();
    if (on(AClause::A0) && y == zero && v != x) return false;
    if (on(AClause::A1) && y < x && plus_.get(y, x) != v) return false;
    if (on(AClause::A4) && y == p_.prime(x) && v != p_.one()) return false;
    if (on(AClause::A3)) {
      if (!p_.leq(x, v)) return false;
      if (on(AClause::A1) && !p_.leq(y, v)) return false;
    }
    if (on(AClause::IsoPlus)) {
      for (std::size_t i = 0; i < cursor_; ++i) {
        const auto [u, w] = plus_cells_[i];
        const Element other = plus_.at(u, w);
        if (p_.leq(u, x) && p_.leq(w, y) && !p_.leq(other, v)) return false;
        if (p_.leq(x, u) && p_.leq(y, w) && !p_.leq(v, other)) return false;
      }
    }
    return true;
  }

  void assign_plus(std::size_t i) {
    if (i == plus_cells_.size()) {
      complete_plus();
      return;
    }
    const auto [x, y] = plus_cells_[i];
    for (Element v = 0; v < p_.size(); ++v) {
      if (!plus_admissible(x, y, v)) continue;
      plus_.set(x, y, v);
      cursor_ = i + 1;
      assign_plus(i + 1);
      cursor_ = i;
    }
    plus_.set(x, y, std::nullopt);
  }

  void complete_plus() {
    ++result_.plus_tables;
    for (AClause c : {AClause::IsoPlus, AClause::A0, AClause::A1, AClause::A2, AClause::A4})
      if (on(c) && !check_A_clause(p_, plus_, minus_, c)) return;

    minus_ = PartialOpTable(p_.size());
    std::vector<bool> forced(p_.size() * p_.size(), false);
    if (on(AClause::A3)) {
      for (const auto& [a, b] : plus_cells_) {
        const Element s = plus_.at(a, b);
        if (!p_.leq(a, s)) return;
        const auto prev = minus_.get(s, a);
        if (prev && *prev != b) return;
        minus_.set(s, a, b);
        forced[static_cast<std::size_t>(s) * p_.size() + a] = true;
      }
    }
    free_cells_.clear();
    for (const auto& [a, b] : interval_cells_)
      if (!forced[static_cast<std::size_t>(b) * p_.size() + a]) free_cells_.emplace_back(a, b);

    completions_ = 0;
    first_minus_.reset();
    assign_minus(0);
    if (completions_ > 0) {
      ++result_.structures;
      result_.tables += completions_;
      result_.passing_plus.push_back(plus_);
      result_.passing_minus.push_back(*first_minus_);
    }
  }

  bool minus_admissible(Element a, Element b, Element v) const {
    if (!on(AClause::IsoMinus)) return true;
    // Interval [a <= b] carries b - a = v.
    for (const auto& [c, d] : interval_cells_) {
      const auto other = minus_.get(d, c);
      if (!other || (c == a && d == b)) continue;
      if (p_.leq(c, a) && p_.leq(b, d) && !p_.leq(v, *other)) return false;
      if (p_.leq(a, c) && p_.leq(d, b) && !p_.leq(*other, v)) return false;
    }
    return true;
  }

  void assign_minus(std::size_t i) {
    if (completions_ >= cap_) return;
    if (i == free_cells_.size()) {
      if (check_A_axioms(p_, plus_, minus_, on_)) {
        ++completions_;
        if (!first_minus_) first_minus_ = minus_;
      }
      return;
    }
    const auto [a, b] = free_cells_[i];
    for (Element v = 0; v < p_.size() && completions_ < cap_; ++v) {
      if (!minus_admissible(a, b, v)) continue;
      minus_.set(b, a, v);
      assign_minus(i + 1);
    }
    minus_.set(b, a, std::nullopt);
  }

  const InvolutivePoset& p_;
  AxiomOptions on_;
  std::uint64_t cap_;
  PartialOpTable plus_, minus_;
  std::vector<std::pair<Element, Element>> plus_cells_;
  std::vector<std::pair<Element, Element>> interval_cells_;
  std::vector<std::pair<Element, Element>> free_cells_;
  std::size_t cursor_ = 0;
  std::uint64_t completions_ = 0;
  std::optional<PartialOpTable> first_minus_;
  TableSearchResult result_;
};

std::string label(std::size_t n, std::size_t index) {
  return "n=" + std::to_string(n) + "#" + std::to_string(index);
}

}  // namespace

TableSearchResult search_partial_ops(const InvolutivePoset& p, AxiomOptions checker,
                                     std::uint64_t completion_cap) {
  return TableSearch(p, checker, completion_cap).run();
}

std::string Prop1Report::summary() const {
  std::ostringstream out;
  out << "prop1 max_n=" << max_n << ": forward " << forward_checked << " checked, "
      << forward_failures.size() << " failures; converse " << converse_carriers
      << " carriers, " << converse_plus_tables << " plus tables, " << converse_structures
      << " structures, " << converse_tables << " tables, " << converse_failures.size()
      << " failures; isotonicity gap " << isotonicity_gap;
  return out.str();
}

Prop1Report prop1_sweep(std::size_t max_n, Prop1Options opts) {
  require_size("prop1_sweep", max_n, 8);
  Prop1Report report;
  report.max_n = max_n;

  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto cat = enumerate_omps(n);
    for (std::size_t i = 0; i < cat.representatives.size(); ++i) {
      const auto& a = cat.representatives[i];
      ++report.forward_checked;
      if (auto v = check_A_axioms(a.base(), a.plus(), a.minus(), opts.checker); !v)
        report.forward_failures.push_back(label(n, i) + ": " + describe(v));
    }
  }

  AxiomOptions no_iso = opts.checker;
  no_iso.without(AClause::IsoPlus).without(AClause::IsoMinus);

  const std::size_t converse_max = std::min(max_n, opts.exhaustive_max);
  for (std::size_t n = 1; n <= converse_max; ++n) {
    const auto cat = enumerate_involutive(n);
    for (std::size_t i = 0; i < cat.representatives.size(); ++i) {
      const auto& p = cat.representatives[i];
      ++report.converse_carriers;
      const auto found = search_partial_ops(p, opts.checker, opts.completion_cap);
      report.converse_plus_tables += found.plus_tables;
      report.converse_structures += found.structures;
      report.converse_tables += found.tables;
      for (const auto& plus : found.passing_plus) {
        if (auto v = check_omp(p); !v) {
          report.converse_failures.push_back(label(n, i) + ": " + describe(v));
          continue;
        }
        for (const auto& [x, y] : ortho_poset(p).pairs)
          if (plus.get(x, y) != lub(p.poset(), x, y)) {
            report.converse_failures.push_back(label(n, i) + ": plus is not the join at (" +
                                               std::to_string(x) + "," + std::to_string(y) +
                                               ")");
            break;
          }
      }
      if (opts.isotonicity_gap) {
        const auto loose = search_partial_ops(p, no_iso, opts.completion_cap);
        for (const auto& plus : loose.passing_plus) {
          if (std::find(found.passing_plus.begin(), found.passing_plus.end(), plus) !=
              found.passing_plus.end())
            continue;
          ++report.isotonicity_gap;
          report.isotonicity_gap_examples.push_back(
              label(n, i) + (check_omp(p) ? " (omp carrier)" : " (not an omp)"));
        }
      }
    }
  }
  return report;
}

}  // namespace omplab
