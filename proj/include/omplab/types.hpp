#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace omplab {

/// Elements of every finite carrier are the indices 0..n-1.
using Element = std::uint32_t;

/// A function between carriers, map[x] is the image of x.
using Map = std::vector<Element>;

/// Outcome of a checker: pass, or the first counterexample found under the
/// checker's documented scan order.
struct Verdict {
  bool pass = true;
  std::string tag;
  std::vector<std::pair<std::string, Element>> witness;
  std::string detail;

  static Verdict ok() { return {}; }
  static Verdict fail(std::string tag,
                      std::vector<std::pair<std::string, Element>> witness = {},
                      std::string detail = {});

  explicit operator bool() const { return pass; }

  /// Witness element recorded under `role`, if any.
  std::optional<Element> at(std::string_view role) const;
};

/// "pass", or "<tag> witness x=a y=b (detail)". Names are used for element
/// labels when given, indices otherwise.
std::string describe(const Verdict& v,
                     const std::vector<std::string>* names = nullptr);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input rejected by a validator; carries the failing verdict.
class ValidationError : public Error {
 public:
  explicit ValidationError(Verdict v);
  const Verdict& verdict() const noexcept { return verdict_; }

 private:
  Verdict verdict_;
};

/// A postcondition that a proved statement guarantees has failed. Reaching
/// this means the implementation is wrong, not the input.
class ContractViolation : public Error {
 public:
  explicit ContractViolation(Verdict v);
  const Verdict& verdict() const noexcept { return verdict_; }

 private:
  Verdict verdict_;
};

class SizeOverflow : public Error {
 public:
  SizeOverflow(std::string_view what, std::size_t requested, std::size_t limit);
};

class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& message);
  const std::string& field() const noexcept { return field_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string field_;
  std::string message_;
};

/// Global carrier cap: OMPLAB_MAX_CARRIER if set, 1'000'000 otherwise.
std::size_t max_carrier();

/// Throws SizeOverflow when n > limit.
void require_size(std::string_view what, std::size_t n, std::size_t limit);

}  // namespace omplab
