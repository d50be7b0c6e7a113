#include "omplab/types.hpp"

#include <cstdlib>
#include <sstream>

namespace omplab {

Verdict Verdict::fail(std::string tag,
                      std::vector<std::pair<std::string, Element>> witness,
                      std::string detail) {
  Verdict v;
  v.pass = false;
  v.tag = std::move(tag);
  v.witness = std::move(witness);
  v.detail = std::move(detail);
  return v;
}

std::optional<Element> Verdict::at(std::string_view role) const {
  for (const auto& [name, value] : witness)
    if (name == role) return value;
  return std::nullopt;
}

std::string describe(const Verdict& v, const std::vector<std::string>* names) {
  if (v.pass) return "pass";
  std::ostringstream out;
  out << v.tag;
  if (!v.witness.empty()) {
    out << " witness";
    for (const auto& [role, value] : v.witness) {
      out << ' ' << role << '=';
      if (names && value < names->size())
        out << (*names)[value];
      else
        out << value;
    }
  }
  if (!v.detail.empty()) out << " (" << v.detail << ')';
  return out.str();
}

ValidationError::ValidationError(Verdict v)
    : Error("validation failed: " + describe(v)), verdict_(std::move(v)) {}

ContractViolation::ContractViolation(Verdict v)
    : Error("contract violated: " + describe(v)), verdict_(std::move(v)) {}

namespace {
std::string overflow_message(std::string_view what, std::size_t requested,
                             std::size_t limit) {
  std::ostringstream out;
  out << "size overflow in " << what << ": " << requested << " exceeds limit "
      << limit;
  return out.str();
}
}  // namespace

SizeOverflow::SizeOverflow(std::string_view what, std::size_t requested,
                           std::size_t limit)
    : Error(overflow_message(what, requested, limit)) {}

ParseError::ParseError(std::string field, const std::string& message)
    : Error("parse error in '" + field + "': " + message), field_(std::move(field)), message_(message) {}

std::size_t max_carrier() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("OMPLAB_MAX_CARRIER")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1'000'000};
  }();
  return cap;
}

void require_size(std::string_view what, std::size_t n, std::size_t limit) {
  if (n > limit) throw SizeOverflow(what, n, limit);
}

}  // namespace omplab
