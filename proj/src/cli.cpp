#include "omplab/cli.hpp"

#include <filesystem>
#include <sstream>

#include "CLI11.hpp"
#include "omplab/beck.hpp"
#include "omplab/enumeration.hpp"
#include "omplab/io.hpp"
#include "omplab/kalmbach.hpp"

namespace omplab {

namespace fs = std::filesystem;

namespace {

enum Exit : int { kPass = 0, kFail = 1, kUsage = 2 };

struct Settings {
  bool forbid_trivial = false;

  std::string file, file2, out, kind;
  std::size_t size = 0;
  std::size_t max_size = 0;
  std::size_t count = 50;
  std::uint64_t seed = 0;
  std::size_t exhaustive_max = 5;
  std::size_t universality_max = 6;
  unsigned threads = 0;
  bool involution = false;

  io::ValidationOptions validation() const { return {forbid_trivial}; }
};

std::vector<std::string> labels(const io::StructureDocument& doc) {
  if (doc.names) return *doc.names;
  std::vector<std::string> v;
  for (std::size_t i = 0; i < doc.size; ++i) v.push_back(std::to_string(i));
  return v;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string map_text(const Map& m) {
  std::vector<std::string> parts;
  for (auto v : m) parts.push_back(std::to_string(v));
  return "[" + join(parts, ", ") + "]";
}

// Structure of the strongest kind the document supports.
struct Loaded {
  io::StructureDocument doc;
  std::optional<BoundedPoset> bounded;
  std::optional<InvolutivePoset> involutive;
  std::optional<OmpStructure> omp;
};

Loaded load(const std::string& path, const Settings& s) {
  Loaded l{io::load_structure(path), {}, {}, {}};
  const auto v = s.validation();
  if (l.doc.kind == "omp") {
    l.omp = io::to_omp(l.doc, v);
    l.involutive = l.omp->base();
    l.bounded = l.omp->base().base();
  } else if (l.doc.kind == "bposinv") {
    l.involutive = io::to_involutive(l.doc, v);
    l.bounded = l.involutive->base();
  } else if (l.doc.kind == "bposet") {
    l.bounded = io::to_bounded(l.doc, v);
  } else {
    throw Error(path + ": an effect algebra document has no order to operate on");
  }
  return l;
}

int cmd_check(const Settings& s, std::ostream& out) {
  const auto text = io::read_file(s.file);
  if (io::is_morphism_text(text)) {
    auto doc = io::parse_morphism(text, fs::path(s.file).parent_path());
    if (!s.kind.empty()) doc.claims = s.kind;
    const auto names = labels(doc.source.doc);
    const auto v = io::verify_claim(doc, s.validation());
    out << doc.claims << " morphism: " << describe(v, &names) << "\n";
    return v ? kPass : kFail;
  }
  const auto doc = io::parse_structure(text);
  const std::string kind = s.kind.empty() ? doc.kind : s.kind;
  const auto names = labels(doc);
  const auto v = io::check_structure(doc, kind, s.validation());
  out << kind << ": " << describe(v, &names) << "\n";
  return v ? kPass : kFail;
}

template <class T>
int write_catalog(const Catalog<T>& cat, const Settings& s, std::ostream& out) {
  out << name_of(cat.kind) << " n=" << cat.size << ": " << cat.up_to_iso()
      << " up to isomorphism, " << cat.labeled << " labeled\n";
  if (s.out.empty()) return kPass;
  fs::create_directories(s.out);
  for (std::size_t i = 0; i < cat.representatives.size(); ++i) {
    const auto path = fs::path(s.out) / (std::string(name_of(cat.kind)) + "-" +
                                         std::to_string(cat.size) + "-" + std::to_string(i) +
                                         ".json");
    io::write_file(path, io::serialize(io::document_of(cat.representatives[i])));
  }
  out << "wrote " << cat.representatives.size() << " files to " << s.out << "\n";
  return kPass;
}

int cmd_enumerate(const Settings& s, std::ostream& out) {
  const auto kind = kind_from_string(s.kind);
  if (!kind) throw CLI::ValidationError("--kind", "expected bposet, bposinv or omp");
  EnumerationOptions opts;
  opts.forbid_trivial = s.forbid_trivial;
  switch (*kind) {
    case Kind::bposet: return write_catalog(enumerate_bounded_posets(s.size, opts), s, out);
    case Kind::bposinv: return write_catalog(enumerate_involutive(s.size, opts), s, out);
    case Kind::omp: return write_catalog(enumerate_omps(s.size, opts), s, out);
  }
  return kUsage;
}

int cmd_kalmbach(const Settings& s, std::ostream& out) {
  const auto l = load(s.file, s);
  const auto r = kalmbach_extension(*l.bounded, s.max_size);
  const auto base = labels(l.doc);
  std::vector<std::string> names;
  for (const auto& c : r.chains) {
    if (c.empty()) {
      names.push_back("{}");
      continue;
    }
    std::string n;
    for (std::size_t i = 0; i < c.size(); i += 2) n += "[" + base[c[i]] + "," + base[c[i + 1]] + "]";
    names.push_back(n);
  }
  io::write_file(s.out, io::serialize(io::document_of(r.omp, true, names)));
  out << "K(P): " << r.omp.size() << " elements, embedding " << map_text(r.embedding) << "\n";
  return kPass;
}

int cmd_product(const Settings& s, std::ostream& out) {
  const auto a = load(s.file, s);
  const auto b = load(s.file2, s);
  std::vector<std::string> names;
  for (const auto& x : labels(a.doc))
    for (const auto& y : labels(b.doc)) names.push_back("(" + x + "," + y + ")");
  io::StructureDocument doc;
  if (a.omp && b.omp) {
    const std::vector<OmpStructure> f{*a.omp, *b.omp};
    doc = io::document_of(omp_product(f), true, names);
  } else if (a.involutive && b.involutive) {
    const std::vector<InvolutivePoset> f{*a.involutive, *b.involutive};
    doc = io::document_of(involutive_product(f), names);
  } else {
    const std::vector<BoundedPoset> f{*a.bounded, *b.bounded};
    doc = io::document_of(product(f), names);
  }
  io::write_file(s.out, io::serialize(doc));
  out << doc.kind << " product: " << doc.size << " elements\n";
  return kPass;
}

struct ParallelPair {
  io::MorphismDocument f, g;
};

ParallelPair load_pair(const Settings& s) {
  ParallelPair p{io::load_morphism(s.file), io::load_morphism(s.file2)};
  if (!(p.f.source.doc == p.g.source.doc) || !(p.f.target.doc == p.g.target.doc))
    throw Error("morphisms must share source and target");
  return p;
}

int cmd_equalizer(const Settings& s, std::ostream& out) {
  const auto p = load_pair(s);
  const auto a = io::to_omp(p.f.source.doc, s.validation());
  const auto b = io::to_omp(p.f.target.doc, s.validation());
  const auto eq = omp_equalizer(a, b, p.f.map, p.g.map);
  const auto base = labels(p.f.source.doc);
  std::vector<std::string> names;
  for (auto e : eq.elements) names.push_back(base[e]);
  io::write_file(s.out, io::serialize(io::document_of(eq.sub, true, names)));
  out << "equalizer: " << eq.elements.size() << " elements {" << join(names, ", ") << "}\n";
  return kPass;
}

int cmd_coeq(const Settings& s, std::ostream& out) {
  const auto p = load_pair(s);
  const auto a = io::to_involutive(p.f.source.doc, s.validation());
  const auto b = io::to_involutive(p.f.target.doc, s.validation());
  const auto co = coequalizer_bposinv(a, b, p.f.map, p.g.map);
  const auto base = labels(p.f.target.doc);
  std::vector<std::string> names(co.quotient.size());
  for (Element x = static_cast<Element>(b.size()); x-- > 0;) names[co.projection[x]] = base[x];
  io::write_file(s.out, io::serialize(io::document_of(co.quotient, names)));
  out << "coequalizer: " << co.quotient.size() << " classes, projection "
      << map_text(co.projection) << "\n";
  return kPass;
}

int cmd_morphisms(const Settings& s, std::ostream& out) {
  std::vector<Map> maps;
  if (s.kind == "omp") {
    maps = enumerate_omp_morphisms(io::to_omp(io::load_structure(s.file), s.validation()),
                                   io::to_omp(io::load_structure(s.file2), s.validation()));
  } else if (s.kind == "bposinv") {
    maps = enumerate_bposinv_morphisms(
        io::to_involutive(io::load_structure(s.file), s.validation()),
        io::to_involutive(io::load_structure(s.file2), s.validation()));
  } else {
    throw CLI::ValidationError("--kind", "expected bposinv or omp");
  }
  out << maps.size() << " " << s.kind << " morphisms\n";
  for (const auto& m : maps) out << map_text(m) << "\n";
  return kPass;
}

int cmd_prop1(const Settings& s, std::ostream& out) {
  Prop1Options opts;
  opts.exhaustive_max = s.exhaustive_max;
  const auto rep = prop1_sweep(s.max_size, opts);
  for (const auto& f : rep.forward_failures) out << "forward failure " << f << "\n";
  for (const auto& f : rep.converse_failures) out << "converse failure " << f << "\n";
  out << rep.summary() << "\n";
  return rep.ok() ? kPass : kFail;
}

int cmd_beck(const Settings& s, std::ostream& out) {
  const auto instances = generate_instances(s.max_size, s.count, s.seed);
  BeckOptions opts;
  opts.universality_max = s.universality_max;
  const auto reports = verify_instances(instances, opts, s.threads);
  std::size_t failures = 0;
  std::uint64_t tests = 0;
  for (const auto& r : reports) {
    const auto status = r.first_failure();
    failures += status != "pass";
    tests += r.coequalizing_tests;
    out << r.label << ": " << status << "\n";
  }
  out << "beck: " << reports.size() << " instances, " << failures << " failures, " << tests
      << " coequalizing morphisms checked\n";
  return failures == 0 ? kPass : kFail;
}

int cmd_dot(const Settings& s, std::ostream& out) {
  const auto doc = io::load_structure(s.file);
  const auto dot = io::export_dot(doc, {s.involution});
  if (s.out.empty())
    out << dot;
  else
    io::write_file(s.out, dot);
  return kPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Finite orthomodular posets, effect algebras and their constructions", "omplab"};
  app.require_subcommand(1);
  app.add_flag("--forbid-trivial", s.forbid_trivial, "Reject one-element bounded posets");

  auto* check = app.add_subcommand("check", "Validate a structure or morphism file");
  check->add_option("FILE", s.file)->required();
  check->add_option("--kind", s.kind, "bposet, bposinv, omp or ea (morphisms: isotone too)");

  auto* enumerate = app.add_subcommand("enumerate", "Catalog structures up to isomorphism");
  enumerate->add_option("--size", s.size)->required();
  enumerate->add_option("--kind", s.kind)->required();
  enumerate->add_option("--out", s.out, "Directory for one JSON file per representative");

  auto* kalmbach = app.add_subcommand("kalmbach", "Kalmbach extension of a bounded poset");
  kalmbach->add_option("FILE", s.file)->required();
  kalmbach->add_option("--out", s.out)->required();
  s.max_size = 6;
  kalmbach->add_option("--max-size", s.max_size, "Largest admissible input");

  auto* prod = app.add_subcommand("product", "Product of two structures");
  prod->add_option("A", s.file)->required();
  prod->add_option("B", s.file2)->required();
  prod->add_option("--out", s.out)->required();

  auto* equalizer = app.add_subcommand("equalizer", "Equalizer of two OMP morphisms");
  equalizer->add_option("F", s.file)->required();
  equalizer->add_option("G", s.file2)->required();
  equalizer->add_option("--out", s.out)->required();

  auto* coeq = app.add_subcommand("coeq", "Coequalizer of two BPosInv morphisms");
  coeq->add_option("F", s.file)->required();
  coeq->add_option("G", s.file2)->required();
  coeq->add_option("--out", s.out)->required();

  auto* morphisms = app.add_subcommand("morphisms", "List all morphisms A -> B");
  morphisms->add_option("A", s.file)->required();
  morphisms->add_option("B", s.file2)->required();
  morphisms->add_option("--kind", s.kind)->required();

  auto* verify = app.add_subcommand("verify", "Exhaustive verification sweeps");
  verify->require_subcommand(1);
  auto* prop1 = verify->add_subcommand("prop1", "Partial-operation characterization sweep");
  prop1->add_option("--max-size", s.max_size)->required();
  prop1->add_option("--exhaustive-max", s.exhaustive_max, "Largest carrier for table search");
  auto* beck = verify->add_subcommand("beck", "Created-coequalizer replay on kernel pairs");
  beck->add_option("--max-size", s.max_size)->required();
  beck->add_option("--count", s.count);
  beck->add_option("--seed", s.seed);
  beck->add_option("--universality-max", s.universality_max);
  beck->add_option("--threads", s.threads, "Worker threads (0 = all cores)");

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram in DOT format");
  dot->add_option("FILE", s.file)->required();
  dot->add_option("--out", s.out);
  dot->add_flag("--involution", s.involution, "Draw x -- x' as dashed edges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*check) return cmd_check(s, out);
    if (*enumerate) return cmd_enumerate(s, out);
    if (*kalmbach) return cmd_kalmbach(s, out);
    if (*prod) return cmd_product(s, out);
    if (*equalizer) return cmd_equalizer(s, out);
    if (*coeq) return cmd_coeq(s, out);
    if (*morphisms) return cmd_morphisms(s, out);
    if (*prop1) return cmd_prop1(s, out);
    if (*beck) return cmd_beck(s, out);
    if (*dot) return cmd_dot(s, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    out << "invalid input: " << describe(e.verdict()) << "\n";
    return kFail;
  } catch (const ContractViolation& e) {
    out << "internal check failed: " << describe(e.verdict()) << "\n";
    return kFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace omplab
