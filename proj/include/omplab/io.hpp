#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omplab/quantum.hpp"

namespace omplab::io {

using Table = std::vector<std::vector<std::optional<Element>>>;

/// JSON structure file. Field order of the canonical form: kind, size, names,
/// leq, zero, one, involution, plus, minus.
struct StructureDocument {
  std::string kind;  // bposet, bposinv, omp, ea
  std::size_t size = 0;
  std::optional<std::vector<std::string>> names;
  std::vector<std::string> leq;  // may be empty for ea
  Element zero = 0;
  Element one = 0;
  std::optional<Map> involution;
  std::optional<Table> plus;
  std::optional<Table> minus;  // minus[y][x] = y - x

  friend bool operator==(const StructureDocument&, const StructureDocument&) = default;
};

/// Throws ParseError naming the offending field (JSON syntax errors carry the
/// parser's line and column).
StructureDocument parse_structure(std::string_view text);
std::string serialize(const StructureDocument& doc);

struct ValidationOptions {
  bool forbid_trivial = false;
};

/// Conversions; each throws ValidationError with the failing verdict.
BoundedPoset to_bounded(const StructureDocument& doc, ValidationOptions opts = {});
InvolutivePoset to_involutive(const StructureDocument& doc, ValidationOptions opts = {});
/// Tables, when present, must equal the join / relative complement tables
/// (tags PlusMismatch, MinusMismatch with witness x y).
OmpStructure to_omp(const StructureDocument& doc, ValidationOptions opts = {});
/// Checks E1..E4; leq and involution, when present, must equal the derived
/// ones (DerivedOrderMismatch, DerivedInvolutionMismatch).
EffectAlgebraCandidate to_effect_algebra(const StructureDocument& doc,
                                         ValidationOptions opts = {});

/// Verdict of reading `doc` as `kind` (defaults to doc.kind). Never throws
/// ValidationError.
Verdict check_structure(const StructureDocument& doc, std::optional<std::string> kind = {},
                        ValidationOptions opts = {});

StructureDocument document_of(const BoundedPoset& p,
                              std::optional<std::vector<std::string>> names = {});
StructureDocument document_of(const InvolutivePoset& p,
                              std::optional<std::vector<std::string>> names = {});
StructureDocument document_of(const OmpStructure& p, bool with_tables = true,
                              std::optional<std::vector<std::string>> names = {});
StructureDocument document_of(const EffectAlgebraCandidate& e,
                              std::optional<std::vector<std::string>> names = {});

Table to_table(const PartialOpTable& t);
PartialOpTable from_table(const Table& t);

/// A morphism file endpoint: a path (relative to the morphism file) or an
/// embedded structure. `doc` is always populated after loading.
struct Endpoint {
  std::optional<std::string> path;
  StructureDocument doc;
};

struct MorphismDocument {
  std::string claims;  // isotone, bposinv, omp, ea
  Endpoint source;
  Endpoint target;
  Map map;
};

/// Endpoint paths are resolved against `base_dir`.
MorphismDocument parse_morphism(std::string_view text,
                                const std::filesystem::path& base_dir = {});
std::string serialize(const MorphismDocument& doc);

/// Checks the map against the claimed class. Endpoint validation failures
/// are returned as the verdict.
Verdict verify_claim(const MorphismDocument& doc, ValidationOptions opts = {});

/// True iff the JSON text has a "map" field.
bool is_morphism_text(std::string_view text);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, std::string_view text);
StructureDocument load_structure(const std::filesystem::path& p);
MorphismDocument load_morphism(const std::filesystem::path& p);

struct DotOptions {
  bool involution = false;
};

/// Hasse diagram: covers only, drawn bottom to top, labelled by names or
/// indices. With `involution`, x -- x' for x < x' as dashed edges.
std::string export_dot(const Poset& p, const std::vector<std::string>* names = nullptr,
                       const Map* involution = nullptr, DotOptions opts = {});
std::string export_dot(const StructureDocument& doc, DotOptions opts = {});

}  // namespace omplab::io
