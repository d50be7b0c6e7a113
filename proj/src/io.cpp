#include "omplab/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace omplab::io {

using nlohmann::json;

namespace {

const std::set<std::string> kStructureKinds{"bposet", "bposinv", "omp", "ea"};
const std::set<std::string> kClaims{"isotone", "bposinv", "omp", "ea"};

std::size_t get_count(const json& j, const char* field) {
  if (!j.is_number_unsigned()) throw ParseError(field, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Element get_element(const json& j, const std::string& field, std::size_t n) {
  if (!j.is_number_unsigned()) throw ParseError(field, "expected a non-negative integer");
  const auto v = j.get<std::uint64_t>();
  if (v >= n) throw ParseError(field, "element " + std::to_string(v) + " outside carrier");
  return static_cast<Element>(v);
}

Map get_map(const json& j, const std::string& field, std::size_t n, std::size_t length) {
  if (!j.is_array()) throw ParseError(field, "expected an array");
  if (j.size() != length)
    throw ParseError(field, "expected " + std::to_string(length) + " entries, got " +
                                std::to_string(j.size()));
  Map m;
  for (std::size_t i = 0; i < j.size(); ++i)
    m.push_back(get_element(j[i], field + "[" + std::to_string(i) + "]", n));
  return m;
}

Table get_table(const json& j, const std::string& field, std::size_t n) {
  if (!j.is_array() || j.size() != n)
    throw ParseError(field, "expected " + std::to_string(n) + " rows");
  Table t(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = j[i];
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != n)
      throw ParseError(where, "expected " + std::to_string(n) + " cells");
    for (std::size_t k = 0; k < n; ++k) {
      if (row[k].is_null())
        t[i].push_back(std::nullopt);
      else
        t[i].push_back(get_element(row[k], where + "[" + std::to_string(k) + "]", n));
    }
  }
  return t;
}

StructureDocument structure_from_json(const json& j, const std::string& prefix = {}) {
  auto field = [&](const char* name) { return prefix + name; };
  if (!j.is_object()) throw ParseError(prefix.empty() ? "<root>" : prefix, "expected an object");
  static const std::set<std::string> known{"kind", "size", "names", "leq", "zero",
                                           "one",  "involution", "plus", "minus"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw ParseError(field(key.c_str()), "unknown field");
  for (const char* required : {"kind", "size", "zero", "one"})
    if (!j.contains(required)) throw ParseError(field(required), "missing");

  StructureDocument doc;
  if (!j["kind"].is_string()) throw ParseError(field("kind"), "expected a string");
  doc.kind = j["kind"].get<std::string>();
  if (!kStructureKinds.count(doc.kind))
    throw ParseError(field("kind"), "unknown kind '" + doc.kind + "'");
  doc.size = get_count(j["size"], field("size").c_str());
  if (doc.size == 0) throw ParseError(field("size"), "carrier must be nonempty");
  require_size("document", doc.size, max_carrier());
  const std::size_t n = doc.size;

  if (j.contains("names")) {
    const auto& names = j["names"];
    if (!names.is_array() || names.size() != n)
      throw ParseError(field("names"), "expected " + std::to_string(n) + " strings");
    std::vector<std::string> v;
    for (const auto& s : names) {
      if (!s.is_string()) throw ParseError(field("names"), "expected strings");
      v.push_back(s.get<std::string>());
    }
    doc.names = std::move(v);
  }

  if (j.contains("leq")) {
    const auto& rows = j["leq"];
    if (!rows.is_array() || rows.size() != n)
      throw ParseError(field("leq"), "expected " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < n; ++i) {
      const std::string where = field("leq") + "[" + std::to_string(i) + "]";
      if (!rows[i].is_string()) throw ParseError(where, "expected a string");
      auto row = rows[i].get<std::string>();
      if (row.size() != n)
        throw ParseError(where, "expected " + std::to_string(n) + " characters");
      if (row.find_first_not_of("01") != std::string::npos)
        throw ParseError(where, "only '0' and '1' allowed");
      doc.leq.push_back(std::move(row));
    }
  } else if (doc.kind != "ea") {
    throw ParseError(field("leq"), "missing");
  }

  doc.zero = get_element(j["zero"], field("zero"), n);
  doc.one = get_element(j["one"], field("one"), n);

  const bool needs_inv = doc.kind == "bposinv" || doc.kind == "omp";
  if (j.contains("involution")) {
    if (doc.kind == "bposet") throw ParseError(field("involution"), "not allowed for bposet");
    doc.involution = get_map(j["involution"], field("involution"), n, n);
  } else if (needs_inv) {
    throw ParseError(field("involution"), "missing");
  }

  const bool tables_allowed = doc.kind == "omp" || doc.kind == "ea";
  for (const char* name : {"plus", "minus"}) {
    if (!j.contains(name)) continue;
    if (!tables_allowed) throw ParseError(field(name), "not allowed for " + doc.kind);
    auto t = get_table(j[name], field(name), n);
    (std::string_view(name) == "plus" ? doc.plus : doc.minus) = std::move(t);
  }
  if (doc.kind == "ea" && !doc.plus) throw ParseError(field("plus"), "missing");
  return doc;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("<json>", e.what());
  }
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string cell(const std::optional<Element>& v) { return v ? std::to_string(*v) : "null"; }

void write_table(std::ostringstream& out, const char* name, const Table& t) {
  out << ",\n  \"" << name << "\": [\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << "    [";
    for (std::size_t k = 0; k < t[i].size(); ++k) out << (k ? ", " : "") << cell(t[i][k]);
    out << "]" << (i + 1 < t.size() ? "," : "") << "\n";
  }
  out << "  ]";
}

std::string map_line(const Map& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? ", " : "") + std::to_string(m[i]);
  return s + "]";
}

Relation relation_of(const StructureDocument& doc) {
  Relation r(doc.size, Bitset(doc.size));
  for (std::size_t i = 0; i < doc.size; ++i)
    for (std::size_t k = 0; k < doc.size; ++k)
      if (doc.leq[i][k] == '1') r[i].set(k);
  return r;
}

std::vector<std::string> rows_of(const Poset& p) {
  std::vector<std::string> rows;
  for (Element i = 0; i < p.size(); ++i) {
    std::string row(p.size(), '0');
    for (Element k = 0; k < p.size(); ++k)
      if (p.leq(i, k)) row[k] = '1';
    rows.push_back(std::move(row));
  }
  return rows;
}

Verdict first_table_mismatch(const char* tag, const Table& given, const PartialOpTable& expected) {
  for (Element x = 0; x < given.size(); ++x)
    for (Element y = 0; y < given.size(); ++y)
      if (given[x][y] != expected.get(x, y)) return Verdict::fail(tag, {{"x", x}, {"y", y}});
  return Verdict::ok();
}

EffectAlgebraCandidate candidate_of(const StructureDocument& doc, ValidationOptions opts) {
  if (doc.plus) return to_effect_algebra(doc, opts);
  const auto omp = to_omp(doc, opts);
  return {omp.size(), omp.plus(), omp.zero(), omp.one()};
}

Endpoint endpoint_from_json(const json& j, const char* field,
                            const std::filesystem::path& base_dir) {
  Endpoint e;
  if (j.is_string()) {
    e.path = j.get<std::string>();
    const auto full = base_dir / *e.path;
    try {
      e.doc = parse_structure(read_file(full));
    } catch (const ParseError& err) {
      throw ParseError(std::string(field) + "." + err.field(), err.message());
    } catch (const Error& err) {
      throw ParseError(field, err.what());
    }
  } else {
    e.doc = structure_from_json(j, std::string(field) + ".");
  }
  return e;
}

std::string indent_tail(const std::string& text, const std::string& pad) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    out += text[i];
    if (text[i] == '\n' && i + 1 < text.size()) out += pad;
  }
  return out;
}

std::string endpoint_text(const Endpoint& e) {
  if (e.path) return quoted(*e.path);
  std::string s = serialize(e.doc);
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return indent_tail(s, "  ");
}

}  // namespace

StructureDocument parse_structure(std::string_view text) {
  return structure_from_json(parse_json(text));
}

std::string serialize(const StructureDocument& doc) {
  std::ostringstream out;
  out << "{\n  \"kind\": " << quoted(doc.kind) << ",\n  \"size\": " << doc.size;
  if (doc.names) {
    out << ",\n  \"names\": [";
    for (std::size_t i = 0; i < doc.names->size(); ++i)
      out << (i ? ", " : "") << quoted((*doc.names)[i]);
    out << "]";
  }
  if (!doc.leq.empty()) {
    out << ",\n  \"leq\": [\n";
    for (std::size_t i = 0; i < doc.leq.size(); ++i)
      out << "    " << quoted(doc.leq[i]) << (i + 1 < doc.leq.size() ? "," : "") << "\n";
    out << "  ]";
  }
  out << ",\n  \"zero\": " << doc.zero << ",\n  \"one\": " << doc.one;
  if (doc.involution) out << ",\n  \"involution\": " << map_line(*doc.involution);
  if (doc.plus) write_table(out, "plus", *doc.plus);
  if (doc.minus) write_table(out, "minus", *doc.minus);
  out << "\n}\n";
  return out.str();
}

Table to_table(const PartialOpTable& t) {
  Table out(t.size());
  for (Element x = 0; x < t.size(); ++x)
    for (Element y = 0; y < t.size(); ++y) out[x].push_back(t.get(x, y));
  return out;
}

PartialOpTable from_table(const Table& t) {
  PartialOpTable out(t.size());
  for (Element x = 0; x < t.size(); ++x)
    for (Element y = 0; y < t.size(); ++y) out.set(x, y, t[x][y]);
  return out;
}

BoundedPoset to_bounded(const StructureDocument& doc, ValidationOptions opts) {
  if (doc.leq.empty())
    throw ValidationError(Verdict::fail("MissingOrder", {}, "document has no leq rows"));
  auto b = validate_bounded(validate_poset(relation_of(doc)), {opts.forbid_trivial});
  if (b.zero() != doc.zero)
    throw ValidationError(Verdict::fail("ZeroMismatch", {{"zero", doc.zero}, {"least", b.zero()}}));
  if (b.one() != doc.one)
    throw ValidationError(Verdict::fail("OneMismatch", {{"one", doc.one}, {"greatest", b.one()}}));
  return b;
}

InvolutivePoset to_involutive(const StructureDocument& doc, ValidationOptions opts) {
  if (!doc.involution)
    throw ValidationError(Verdict::fail("MissingInvolution", {}, "document has no involution"));
  return validate_involutive(to_bounded(doc, opts), *doc.involution);
}

OmpStructure to_omp(const StructureDocument& doc, ValidationOptions opts) {
  const auto p = to_involutive(doc, opts);
  if (auto v = check_omp(p); !v) throw ValidationError(v);
  auto omp = omp_to_partial_ops(p);
  if (doc.plus)
    if (auto v = first_table_mismatch("PlusMismatch", *doc.plus, omp.plus()); !v)
      throw ValidationError(v);
  if (doc.minus)
    if (auto v = first_table_mismatch("MinusMismatch", *doc.minus, omp.minus()); !v)
      throw ValidationError(v);
  return omp;
}

EffectAlgebraCandidate to_effect_algebra(const StructureDocument& doc, ValidationOptions opts) {
  if (!doc.plus) throw ValidationError(Verdict::fail("MissingPlus"));
  EffectAlgebraCandidate c{doc.size, from_table(*doc.plus), doc.zero, doc.one};
  auto check = check_effect_algebra(c);
  if (!check.verdict) throw ValidationError(check.verdict);
  const auto& derived = *check.derived;
  if (opts.forbid_trivial && doc.size == 1)
    throw ValidationError(Verdict::fail("Trivial", {}, "one-element structure"));
  if (!doc.leq.empty() && rows_of(derived.poset()) != doc.leq)
    throw ValidationError(Verdict::fail("DerivedOrderMismatch"));
  if (doc.involution && *doc.involution != derived.involution())
    throw ValidationError(Verdict::fail("DerivedInvolutionMismatch"));
  return c;
}

Verdict check_structure(const StructureDocument& doc, std::optional<std::string> kind,
                        ValidationOptions opts) {
  const std::string k = kind.value_or(doc.kind);
  if (!kStructureKinds.count(k)) throw ParseError("kind", "unknown kind '" + k + "'");
  try {
    if (k == "bposet") {
      to_bounded(doc, opts);
    } else if (k == "bposinv") {
      to_involutive(doc, opts);
    } else if (k == "omp") {
      to_omp(doc, opts);
    } else {
      const auto c = candidate_of(doc, opts);
      return check_effect_algebra(c).verdict;
    }
  } catch (const ValidationError& e) {
    return e.verdict();
  } catch (const ContractViolation& e) {
    return e.verdict();
  }
  return Verdict::ok();
}

StructureDocument document_of(const BoundedPoset& p, std::optional<std::vector<std::string>> names) {
  StructureDocument doc;
  doc.kind = "bposet";
  doc.size = p.size();
  doc.names = std::move(names);
  doc.leq = rows_of(p.poset());
  doc.zero = p.zero();
  doc.one = p.one();
  return doc;
}

StructureDocument document_of(const InvolutivePoset& p,
                              std::optional<std::vector<std::string>> names) {
  auto doc = document_of(p.base(), std::move(names));
  doc.kind = "bposinv";
  doc.involution = p.involution();
  return doc;
}

StructureDocument document_of(const OmpStructure& p, bool with_tables,
                              std::optional<std::vector<std::string>> names) {
  auto doc = document_of(p.base(), std::move(names));
  doc.kind = "omp";
  if (with_tables) {
    doc.plus = to_table(p.plus());
    doc.minus = to_table(p.minus());
  }
  return doc;
}

StructureDocument document_of(const EffectAlgebraCandidate& e,
                              std::optional<std::vector<std::string>> names) {
  StructureDocument doc;
  doc.kind = "ea";
  doc.size = e.size;
  doc.names = std::move(names);
  doc.zero = e.zero;
  doc.one = e.one;
  doc.plus = to_table(e.plus);
  if (auto check = check_effect_algebra(e); check.verdict) {
    doc.leq = rows_of(check.derived->poset());
    doc.involution = check.derived->involution();
  }
  return doc;
}

MorphismDocument parse_morphism(std::string_view text, const std::filesystem::path& base_dir) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("<root>", "expected an object");
  static const std::set<std::string> known{"claims", "source", "target", "map"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw ParseError(key, "unknown field");
  for (const char* required : {"claims", "source", "target", "map"})
    if (!j.contains(required)) throw ParseError(required, "missing");

  MorphismDocument doc;
  if (!j["claims"].is_string()) throw ParseError("claims", "expected a string");
  doc.claims = j["claims"].get<std::string>();
  if (!kClaims.count(doc.claims)) throw ParseError("claims", "unknown class '" + doc.claims + "'");
  doc.source = endpoint_from_json(j["source"], "source", base_dir);
  doc.target = endpoint_from_json(j["target"], "target", base_dir);
  doc.map = get_map(j["map"], "map", doc.target.doc.size, doc.source.doc.size);
  return doc;
}

std::string serialize(const MorphismDocument& doc) {
  std::ostringstream out;
  out << "{\n  \"claims\": " << quoted(doc.claims) << ",\n  \"source\": "
      << endpoint_text(doc.source) << ",\n  \"target\": " << endpoint_text(doc.target)
      << ",\n  \"map\": " << map_line(doc.map) << "\n}\n";
  return out.str();
}

Verdict verify_claim(const MorphismDocument& doc, ValidationOptions opts) {
  const auto& s = doc.source.doc;
  const auto& t = doc.target.doc;
  try {
    if (doc.claims == "isotone")
      return is_isotone(to_bounded(s, opts).poset(), to_bounded(t, opts).poset(), doc.map);
    if (doc.claims == "bposinv")
      return is_bposinv_morphism(to_involutive(s, opts), to_involutive(t, opts), doc.map);
    if (doc.claims == "omp") return is_omp_morphism(to_omp(s, opts), to_omp(t, opts), doc.map);
    return is_ea_morphism(candidate_of(s, opts), candidate_of(t, opts), doc.map);
  } catch (const ValidationError& e) {
    return e.verdict();
  }
}

bool is_morphism_text(std::string_view text) {
  const json j = parse_json(text);
  return j.is_object() && j.contains("map");
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& p, std::string_view text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + p.string());
  out << text;
  if (!out) throw Error("write failed for " + p.string());
}

StructureDocument load_structure(const std::filesystem::path& p) {
  return parse_structure(read_file(p));
}

MorphismDocument load_morphism(const std::filesystem::path& p) {
  return parse_morphism(read_file(p), p.parent_path());
}

std::string export_dot(const Poset& p, const std::vector<std::string>* names,
                       const Map* involution, DotOptions opts) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (Element x = 0; x < p.size(); ++x)
    out << "  n" << x << " [label=" << quoted(names ? (*names)[x] : std::to_string(x)) << "];\n";
  for (const auto& [a, b] : covers(p)) out << "  n" << a << " -> n" << b << ";\n";
  if (opts.involution && involution)
    for (Element x = 0; x < p.size(); ++x)
      if (x < (*involution)[x])
        out << "  n" << x << " -> n" << (*involution)[x]
            << " [style=dashed, dir=none, constraint=false];\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const StructureDocument& doc, DotOptions opts) {
  const Poset p = doc.leq.empty() ? check_effect_algebra(to_effect_algebra(doc)).derived->poset()
                                  : validate_poset(relation_of(doc));
  return export_dot(p, doc.names ? &*doc.names : nullptr,
                    doc.involution ? &*doc.involution : nullptr, opts);
}

}  // namespace omplab::io
