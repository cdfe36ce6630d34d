#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>

#include "cache.hpp"
#include "cpt/catalog.hpp"
#include "cpt/chern.hpp"
#include "cpt/error.hpp"
#include "cpt/iso_search.hpp"
#include "cpt/serialize.hpp"
#include "cpt/sweep.hpp"
#include "cpt/tower_ring.hpp"

namespace cpt::cli {

namespace {

/// Input error already carrying its location prefix.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A ring given on the command line, with the tower when one is known.
struct Resolved {
  std::string label;
  std::optional<TowerSpec> tower;
  RingPresentation pres;
};

std::string read_file(const std::string& path) {
  std::ifstream in{path, std::ios::binary};
  if (!in) throw InputError(path + ": cannot read file");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// 1-based ordinal from a schema path such as "stages[2].chern[0]: ...", or 0.
std::size_t leading_ordinal(std::string_view what, std::string_view key) {
  const std::string prefix = std::string(key) + "[";
  if (what.substr(0, prefix.size()) != prefix) return 0;
  std::size_t i = prefix.size();
  if (i >= what.size() || what[i] < '0' || what[i] > '9') return 0;
  std::size_t k = 0;
  for (; i < what.size() && what[i] >= '0' && what[i] <= '9'; ++i) k = 10 * k + (what[i] - '0');
  return k + 1;
}

/// "path:line: " for the element with 1-based `ordinal` of array `key`,
/// falling back to "path: ".
std::string anchor(const std::string& path, const std::string& text, std::string_view key,
                   std::size_t ordinal) {
  if (ordinal != 0) {
    if (std::size_t line = locate_array_element(text, key, ordinal - 1); line != 0) {
      return path + ":" + std::to_string(line) + ": ";
    }
  }
  return path + ": ";
}

Resolved resolve_file(const std::string& path) {
  const std::string text = read_file(path);
  Json j;
  try {
    j = parse_json_text(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
  if (!j.is_object()) throw InputError(path + ": expected an object with \"stages\" or \"caps\"");
  if (j.contains("stages")) {
    try {
      TowerSpec spec = tower_from_json(j);
      return {path, spec, presentation(spec)};
    } catch (const SpecError& e) {
      throw InputError(anchor(path, text, "stages", e.stage()) + e.what());
    } catch (const ParseError& e) {
      throw InputError(anchor(path, text, "stages", leading_ordinal(e.what(), "stages")) + e.what());
    }
  }
  if (j.contains("caps")) {
    try {
      return {path, std::nullopt, presentation_from_json(j)};
    } catch (const ParseError& e) {
      throw InputError(anchor(path, text, "relations", leading_ordinal(e.what(), "relations")) + e.what());
    } catch (const SpecError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  throw InputError(path + ": expected an object with \"stages\" or \"caps\"");
}

bool looks_like_path(std::string_view s) {
  return s.find('/') != std::string_view::npos || s.find('\\') != std::string_view::npos ||
         (s.size() > 5 && s.substr(s.size() - 5) == ".json");
}

/// A catalog id or a JSON file; an existing file wins over an id.
Resolved resolve(const std::string& input) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec) || looks_like_path(input)) return resolve_file(input);
  try {
    const FamilyId id = parse_family(input);
    TowerSpec spec = build(id);
    return {to_string(id), spec, presentation(spec)};
  } catch (const Error& e) {
    throw InputError(input + ": " + e.what());
  }
}

Poly parse_flag_poly(const std::string& flag, const std::string& text, std::size_t ngens) {
  try {
    return parse_poly(text, ngens);
  } catch (const ParseError& e) {
    throw InputError(flag + " '" + text + "': " + e.what());
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ring ----------------------------------------------------------------------

struct RingArgs {
  std::string input;
  bool poincare = false;
  std::optional<std::uint64_t> basis;
  bool json = false;
  bool tower = false;
};

int cmd_ring(const RingArgs& a, std::ostream& out) {
  const Resolved r = resolve(a.input);
  const auto names = default_generator_names(r.pres.gens);
  if (a.tower) {
    if (!r.tower) throw InputError(a.input + ": no tower to print, the input is a presentation");
    emit(out, with_schema(to_json(*r.tower)));
    return kExitOk;
  }
  std::optional<PoincarePoly> pp;
  if (a.poincare) pp = poincare(r.pres);
  std::vector<Monomial> basis;
  if (a.basis) basis = graded_basis(r.pres, *a.basis);

  if (a.json) {
    Json j{{"input", r.label}, {"generators", names}, {"presentation", to_json(r.pres)}};
    if (pp) j["poincare"] = pp->betti;
    if (a.basis) {
      Json mons = Json::array();
      for (const Monomial& m : basis) mons.push_back(Json(std::vector<unsigned>(m.exps().begin(), m.exps().end())));
      j["basis"] = Json{{"degree", *a.basis}, {"monomials", std::move(mons)}};
    }
    emit(out, with_schema(std::move(j)));
    return kExitOk;
  }

  out << "ring " << r.label << '\n';
  out << "generators:";
  for (const auto& n : names) out << ' ' << n;
  out << " (degree 2)\n";
  out << "caps:";
  for (unsigned c : r.pres.caps) out << ' ' << c;
  out << '\n';
  out << "relations:\n";
  for (const Poly& rel : r.pres.relations) out << "  " << to_string(rel, names) << '\n';
  if (pp) {
    out << "poincare: (";
    for (std::size_t d = 0; d < pp->betti.size(); ++d) out << (d ? "," : "") << pp->betti[d];
    out << ")\n";
  }
  if (a.basis) {
    out << "basis[" << *a.basis << "]:";
    for (std::size_t i = 0; i < basis.size(); ++i) out << (i ? ", " : " ") << to_string(basis[i], names);
    out << '\n';
  }
  return kExitOk;
}

// iso -----------------------------------------------------------------------

struct IsoArgs {
  std::string a;
  std::string b;
  int bound = 3;
  bool all = false;
  unsigned jobs = 1;
  bool no_cache = false;
};

int cmd_iso(const IsoArgs& args, std::ostream& out) {
  const Resolved ra = resolve(args.a);
  const Resolved rb = resolve(args.b);
  const SearchOptions opts{args.jobs, true};
  if (args.all) {
    const auto certs = poincare(ra.pres) == poincare(rb.pres)
                           ? search_all(ra.pres, rb.pres, args.bound, opts)
                           : std::vector<IsoCertificate>{};
    Json list = Json::array();
    for (const auto& c : certs) list.push_back(to_json(c));
    emit(out, with_schema(Json{{"result", "all"},
                               {"bound", args.bound},
                               {"count", certs.size()},
                               {"certificates", std::move(list)}}));
    return certs.empty() ? kExitNegative : kExitOk;
  }
  std::optional<VerdictCache> cache = args.no_cache ? std::nullopt : VerdictCache::from_env();
  const SearchVerdict v =
      cache ? cache->search(ra.pres, rb.pres, args.bound, opts) : search(ra.pres, rb.pres, args.bound, opts);
  emit(out, with_schema(to_json(v)));
  return v.found() ? kExitOk : kExitNegative;
}

// sweep ---------------------------------------------------------------------

struct SweepArgs {
  std::string theorem;
  int range = 4;
  int bound = 3;
  std::string out = "-";
  unsigned jobs = 1;
  bool no_timing = false;
  bool no_cache = false;
};

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  // Open the destination first so an unwritable path fails before the run.
  std::ofstream file;
  if (args.out != "-") {
    file.open(args.out, std::ios::binary | std::ios::trunc);
    if (!file) throw InputError(args.out + ": cannot open for writing");
  }
  SweepOptions opts;
  opts.jobs = args.jobs;
  std::optional<VerdictCache> cache = args.no_cache ? std::nullopt : VerdictCache::from_env();
  if (cache) {
    opts.searcher = [&cache](const RingPresentation& a, const RingPresentation& b, int bound) {
      return cache->search(a, b, bound);
    };
  }
  const Report report = run_sweep(args.theorem, args.range, args.bound, opts);
  // Jobs are left out so reports are identical whatever the parallelism.
  const Json flags{{"theorem", args.theorem}, {"range", args.range}, {"bound", args.bound}};
  const std::string text = to_json(report, flags, !args.no_timing).dump(2) + "\n";
  if (args.out == "-") {
    out << text;
  } else {
    file << text;
    file.close();
    if (!file) throw InputError(args.out + ": write failed");
  }
  const std::size_t failures = report.failures();
  err << report.theorem << ": " << report.rows.size() << " pairs, " << failures << " failing";
  if (cache) err << ", cache " << cache->hits() << " hit(s) " << cache->misses() << " miss(es)";
  err << '\n';
  return failures == 0 ? kExitOk : kExitNegative;
}

// chern ---------------------------------------------------------------------

struct ChernArgs {
  std::string base = "CP2";
  std::string c1 = "0";
  std::string c2 = "0";
  std::optional<int> alpha;
  std::string by = "0";
  std::vector<std::string> roots;
  int i = 1;
  int j = 2;
};

RingPresentation chern_base(const ChernArgs& a, Resolved& r) {
  r = resolve(a.base);
  return r.pres;
}

Json bundle_json(const BundleDescriptor& b, const std::vector<std::string>& names) {
  Json j = to_json(b);
  Json text = Json::array();
  for (const Poly& c : b.chern) text.push_back(to_string(c, names));
  j["text"] = std::move(text);
  return j;
}

BundleDescriptor rank2_from_flags(const ChernArgs& a, const RingPresentation& base) {
  std::vector<Poly> chern{parse_flag_poly("--c1", a.c1, base.gens), parse_flag_poly("--c2", a.c2, base.gens)};
  return make_bundle(base, 2, std::move(chern), a.alpha);
}

int cmd_chern(const std::string& op, const ChernArgs& a, std::ostream& out) {
  if (op == "milnor") {
    const TowerSpec spec = dual_complement_of_tautological(a.i, a.j);
    Json j{{"i", a.i}, {"j", a.j}, {"tower", to_json(spec)}, {"presentation", to_json(presentation(spec))}};
    emit(out, with_schema(std::move(j)));
    return kExitOk;
  }
  Resolved r;
  const RingPresentation base = chern_base(a, r);
  const auto names = default_generator_names(base.gens);
  Json j{{"base", r.label}};
  if (op == "tensor") {
    const BundleDescriptor xi = rank2_from_flags(a, base);
    const Poly gamma = parse_flag_poly("--by", a.by, base.gens);
    j["by"] = to_json(gamma);
    j["bundle"] = bundle_json(tensor_line(base, xi, gamma), names);
  } else if (op == "normalize") {
    const NormalizedBundle nb = normalize_c1(base, rank2_from_flags(a, base));
    j["shift"] = to_json(nb.shift);
    j["shift_text"] = to_string(nb.shift, names);
    j["bundle"] = bundle_json(nb.bundle, names);
  } else {
    std::vector<Poly> c1s;
    for (std::size_t k = 0; k < a.roots.size(); ++k) {
      c1s.push_back(parse_flag_poly("--roots[" + std::to_string(k) + "]", a.roots[k], base.gens));
    }
    if (c1s.empty()) throw InputError("--roots: at least one line bundle is required");
    j["bundle"] = bundle_json(whitney_sum_of_lines(base, c1s), names);
  }
  emit(out, with_schema(std::move(j)));
  return kExitOk;
}

// catalog-list --------------------------------------------------------------

struct CatalogEntry {
  const char* grammar;
  const char* description;
};

constexpr CatalogEntry kCatalog[] = {
    {"CP3", "CP^3"},
    {"GB2:k", "P(gamma_1^k + e + e) over CP^1"},
    {"Eta2:s,a", "P(eta_(s,a)) over CP^2, s in {0,1}"},
    {"Zeta3:s,r,a", "P(zeta_(s,r,a)) over H_0, s,r in {0,1}"},
    {"Xi3:s,r,b", "P(xi_(s,r,b)) over H_1, s,r in {0,1}"},
    {"M8:a,u", "M_a(u) over CP^3, alpha tag a in {0,1}"},
    {"N8:u", "N(u) over CP^3"},
    {"CP:n", "CP^n (also CP1, CP2, ...)"},
    {"H:k", "Hirzebruch surface H_k (also H0, H1, ...)"},
    {"Milnor:i,j", "Milnor hypersurface H_(i,j), 1 <= i <= j, j >= 2"},
};

int cmd_catalog_list(std::optional<int> range, bool json, std::ostream& out) {
  if (range) {
    const auto ids = canonical_list(*range);
    if (json) {
      Json list = Json::array();
      for (const auto& id : ids) list.push_back(to_string(id));
      emit(out, with_schema(Json{{"range", *range}, {"ids", std::move(list)}}));
    } else {
      for (const auto& id : ids) out << to_string(id) << '\n';
    }
    return kExitOk;
  }
  if (json) {
    Json list = Json::array();
    for (const auto& e : kCatalog) list.push_back(Json{{"id", e.grammar}, {"description", e.description}});
    emit(out, with_schema(Json{{"families", std::move(list)}}));
  } else {
    for (const auto& e : kCatalog) {
      std::string g = e.grammar;
      g.resize(std::max<std::size_t>(g.size(), 14), ' ');
      out << g << e.description << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology rings of CP-towers: presentations, Chern classes, isomorphism search", "cpt"};
  app.set_version_flag("--version", std::string("cpt ") + library_version());
  app.require_subcommand(1);

  RingArgs ring;
  auto* ring_cmd = app.add_subcommand("ring", "Print the presentation of a tower or catalog id");
  ring_cmd->add_option("input", ring.input, "Catalog id (e.g. M8:0,2) or JSON file")->required();
  ring_cmd->add_flag("--poincare", ring.poincare, "Print graded ranks");
  ring_cmd->add_option("--basis", ring.basis, "Print the reduced basis in this cohomological degree");
  ring_cmd->add_flag("--json", ring.json, "Emit JSON");
  ring_cmd->add_flag("--tower", ring.tower, "Emit the tower spec as JSON");

  IsoArgs iso;
  auto* iso_cmd = app.add_subcommand("iso", "Search for a graded ring isomorphism A -> B");
  iso_cmd->add_option("a", iso.a, "Source ring")->required();
  iso_cmd->add_option("b", iso.b, "Target ring")->required();
  iso_cmd->add_option("--bound", iso.bound, "Entry bound B")->capture_default_str()->check(CLI::Range(0, 64));
  iso_cmd->add_flag("--all", iso.all, "List every certificate within the bound");
  iso_cmd->add_option("--jobs", iso.jobs, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  iso_cmd->add_flag("--no-cache", iso.no_cache, "Ignore CPT_CACHE_DIR");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a classification sweep and write a report");
  sweep_cmd->add_option("--theorem", sweep.theorem, "main, two-stage, three-stage or eight-dim")
      ->required()
      ->check(CLI::IsMember({"main", "two-stage", "three-stage", "eight-dim"}));
  sweep_cmd->add_option("--range", sweep.range, "Parameters in [-N, N]")->capture_default_str()->check(CLI::Range(0, 64));
  sweep_cmd->add_option("--bound", sweep.bound, "Entry bound B")->capture_default_str()->check(CLI::Range(0, 64));
  sweep_cmd->add_option("--out", sweep.out, "Report path, '-' for stdout")->capture_default_str();
  sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  sweep_cmd->add_flag("--no-timing", sweep.no_timing, "Omit wall-clock time from the report");
  sweep_cmd->add_flag("--no-cache", sweep.no_cache, "Ignore CPT_CACHE_DIR");

  ChernArgs chern;
  std::string chern_op;
  auto* chern_cmd = app.add_subcommand("chern", "Chern-class calculus on bundles over a base");
  chern_cmd->require_subcommand(1);
  auto add_rank2 = [&chern](CLI::App* c) {
    c->add_option("--base", chern.base, "Base ring")->capture_default_str();
    c->add_option("--c1", chern.c1, "First Chern class")->capture_default_str();
    c->add_option("--c2", chern.c2, "Second Chern class")->capture_default_str();
    c->add_option("--alpha", chern.alpha, "Atiyah-Rees tag (rank 2 over CP3)")->check(CLI::Range(0, 1));
  };
  auto* tensor_cmd = chern_cmd->add_subcommand("tensor", "Tensor a rank-2 bundle with a line bundle");
  add_rank2(tensor_cmd);
  tensor_cmd->add_option("--by", chern.by, "c1 of the line bundle")->capture_default_str();
  auto* normalize_cmd = chern_cmd->add_subcommand("normalize", "Shift c1 into {0,1} coordinates");
  add_rank2(normalize_cmd);
  auto* sum_cmd = chern_cmd->add_subcommand("sum", "Whitney sum of line bundles");
  sum_cmd->add_option("--base", chern.base, "Base ring")->capture_default_str();
  sum_cmd->add_option("--roots", chern.roots, "c1 of each line bundle, comma separated")->delimiter(',');
  auto* milnor_cmd = chern_cmd->add_subcommand("milnor", "Milnor hypersurface H_(i,j) as a tower");
  milnor_cmd->add_option("--i", chern.i)->capture_default_str();
  milnor_cmd->add_option("--j", chern.j)->capture_default_str();
  for (auto* c : {tensor_cmd, normalize_cmd, sum_cmd, milnor_cmd}) {
    c->callback([&chern_op, c] { chern_op = c->get_name(); });
  }

  std::optional<int> list_range;
  bool list_json = false;
  auto* list_cmd = app.add_subcommand("catalog-list", "List catalog families, or every id within a range");
  list_cmd->add_option("--range", list_range, "List canonical ids with parameters in [-N, N]")->check(CLI::Range(0, 64));
  list_cmd->add_flag("--json", list_json, "Emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*ring_cmd) return cmd_ring(ring, out);
    if (*iso_cmd) return cmd_iso(iso, out);
    if (*sweep_cmd) return cmd_sweep(sweep, out, err);
    if (*chern_cmd) return cmd_chern(chern_op, chern, out);
    return cmd_catalog_list(list_range, list_json, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace cpt::cli
