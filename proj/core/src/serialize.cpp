#include "cpt/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "cpt/error.hpp"

namespace cpt {

const char* library_version() { return CPT_VERSION_STRING; }

namespace {

std::string describe(const Json& j) { return std::string(j.type_name()); }

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object, got " + describe(j));
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + ": missing \"" + key + "\"");
  return *it;
}

const Json& array_member(const Json& j, const char* key, const std::string& path) {
  const Json& v = member(j, key, path);
  if (!v.is_array()) throw ParseError(path + "." + key + ": expected an array, got " + describe(v));
  return v;
}

Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  }
  throw ParseError(path + ": expected an integer string, got " + describe(j));
}

std::uint64_t count_from_json(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    const std::int64_t v = j.get<std::int64_t>();
    if (v < 0) throw ParseError(path + ": expected a non-negative integer, got " + std::to_string(v));
    return static_cast<std::uint64_t>(v);
  }
  if (j.is_string()) {
    Integer v = integer_from_json(j, path);
    if (v < 0 || v > Integer(std::numeric_limits<std::uint32_t>::max())) {
      throw ParseError(path + ": value out of range");
    }
    return v.convert_to<std::uint64_t>();
  }
  throw ParseError(path + ": expected a non-negative integer, got " + describe(j));
}

Poly poly_at(const Json& j, std::size_t ngens, const std::string& path) {
  try {
    return poly_from_json(j, ngens);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::array();
    for (auto e : m.exps()) exps.push_back(e);
    out.push_back(Json{{"coeff", to_string(c)}, {"exps", std::move(exps)}});
  }
  return out;
}

Poly poly_from_json(const Json& j, std::size_t ngens) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of terms, got " + describe(j));
  if (j.empty()) return Poly(ngens);
  std::vector<std::pair<Monomial, Integer>> terms;
  std::size_t width = 0;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string path = "term " + std::to_string(t);
    const Json& e = array_member(j[t], "exps", path);
    std::vector<Monomial::Exponent> exps;
    for (std::size_t k = 0; k < e.size(); ++k) {
      exps.push_back(static_cast<Monomial::Exponent>(count_from_json(e[k], path + ".exps")));
    }
    if (t == 0) width = exps.size();
    if (exps.size() != width) throw ParseError(path + ": exponent lists have different lengths");
    terms.emplace_back(Monomial(std::move(exps)), integer_from_json(member(j[t], "coeff", path), path + ".coeff"));
  }
  return Poly::from_terms(width, std::move(terms));
}

Json to_json(const TowerSpec& spec) {
  Json stages = Json::array();
  for (std::size_t k = 0; k < spec.ngens(); ++k) {
    const Stage& st = spec.stages()[k];
    Json chern = Json::array();
    for (const Poly& c : st.chern) chern.push_back(to_json(c.resized(k)));
    stages.push_back(Json{{"fiber_dim", st.fiber_dim}, {"chern", std::move(chern)}});
  }
  return Json{{"stages", std::move(stages)}};
}

TowerSpec tower_from_json(const Json& j) {
  const Json& stages = array_member(j, "stages", "spec");
  std::vector<Stage> out;
  for (std::size_t k = 0; k < stages.size(); ++k) {
    const std::string path = "stages[" + std::to_string(k) + "]";
    const std::uint64_t n = count_from_json(member(stages[k], "fiber_dim", path), path + ".fiber_dim");
    Stage st{static_cast<unsigned>(n), {}};
    if (stages[k].contains("chern")) {
      const Json& chern = array_member(stages[k], "chern", path);
      for (std::size_t i = 0; i < chern.size(); ++i) {
        st.chern.push_back(poly_at(chern[i], k, path + ".chern[" + std::to_string(i) + "]"));
      }
    }
    out.push_back(std::move(st));
  }
  return TowerSpec::make(std::move(out));
}

Json to_json(const RingPresentation& pres) {
  Json rels = Json::array();
  for (const Poly& r : pres.relations) rels.push_back(to_json(r));
  return Json{{"caps", pres.caps}, {"relations", std::move(rels)}};
}

RingPresentation presentation_from_json(const Json& j) {
  const Json& caps_json = array_member(j, "caps", "presentation");
  const Json& rels_json = array_member(j, "relations", "presentation");
  std::vector<unsigned> caps;
  for (const auto& c : caps_json) caps.push_back(static_cast<unsigned>(count_from_json(c, "caps")));
  std::vector<Poly> rels;
  for (std::size_t k = 0; k < rels_json.size(); ++k) {
    rels.push_back(poly_at(rels_json[k], caps.size(), "relations[" + std::to_string(k) + "]"));
  }
  return presentation_from_relations(std::move(caps), std::move(rels));
}

Json to_json(const BundleDescriptor& b) {
  Json chern = Json::array();
  for (const Poly& c : b.chern) chern.push_back(to_json(c));
  Json out{{"rank", b.rank}, {"chern", std::move(chern)}};
  out["alpha"] = b.alpha ? Json(*b.alpha) : Json(nullptr);
  return out;
}

BundleDescriptor bundle_from_json(const Json& j, const RingPresentation& base) {
  const std::uint64_t rank = count_from_json(member(j, "rank", "bundle"), "bundle.rank");
  const Json& chern_json = array_member(j, "chern", "bundle");
  std::vector<Poly> chern;
  for (std::size_t i = 0; i < chern_json.size(); ++i) {
    chern.push_back(poly_at(chern_json[i], base.gens, "bundle.chern[" + std::to_string(i) + "]"));
  }
  std::optional<int> alpha;
  if (auto it = j.find("alpha"); it != j.end() && !it->is_null()) {
    const Integer v = integer_from_json(*it, "bundle.alpha");
    if (v != 0 && v != 1) throw SpecError("alpha must be 0, 1 or null");
    alpha = v.convert_to<int>();
  }
  return make_bundle(base, static_cast<unsigned>(rank), std::move(chern), alpha);
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const IsoCertificate& cert) {
  return Json{{"matrix", to_json(cert.matrix)}, {"det", to_string(cert.det)}};
}

Json to_json(const SearchVerdict& v) {
  if (v.found()) {
    return Json{{"result", "found"}, {"matrix", to_json(v.certificate->matrix)}, {"det", to_string(v.certificate->det)}};
  }
  return Json{{"result", "none_within_bound"},
              {"bound", v.bound},
              {"reason", v.reason == NoneReason::Exhausted ? "exhausted" : "betti_mismatch"}};
}

SearchVerdict verdict_from_json(const Json& j) {
  const Json& result = member(j, "result", "verdict");
  if (result == "found") {
    const Json& rows = array_member(j, "matrix", "verdict");
    const std::size_t n = rows.size();
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!rows[r].is_array() || rows[r].size() != n) throw ParseError("verdict.matrix: not square");
      for (std::size_t c = 0; c < n; ++c) m(r, c) = integer_from_json(rows[r][c], "verdict.matrix");
    }
    Integer det = integer_from_json(member(j, "det", "verdict"), "verdict.det");
    return SearchVerdict::of(IsoCertificate{std::move(m), std::move(det)}, 0);
  }
  if (result == "none_within_bound") {
    const int bound = static_cast<int>(count_from_json(member(j, "bound", "verdict"), "verdict.bound"));
    const Json& reason = member(j, "reason", "verdict");
    if (reason == "exhausted") return SearchVerdict::none(bound, NoneReason::Exhausted);
    if (reason == "betti_mismatch") return SearchVerdict::none(bound, NoneReason::BettiMismatch);
    throw ParseError("verdict.reason: unknown value");
  }
  throw ParseError("verdict.result: unknown value");
}

Json to_json(const Pi6Comparison& cmp) {
  auto rec = [](const Pi6Record& r) {
    return Json{{"family", to_string(r.family)}, {"divisibility_ok", r.divisibility_ok}, {"pi6", to_string(r.pi6)}};
  };
  return Json{{"verdict", to_string(cmp.verdict)}, {"a", rec(cmp.a)}, {"b", rec(cmp.b)}};
}

Json to_json(const Report& r, const Json& flags, bool timing) {
  Json rows = Json::array();
  std::size_t discrepancies = 0;
  for (const ReportRow& row : r.rows) {
    Json jr{{"a", to_string(row.a)},
            {"b", to_string(row.b)},
            {"expected", to_string(row.expected)},
            {"verdict", to_json(row.verdict)},
            {"pass", row.pass}};
    if (row.discrepancy) {
      jr["discrepancy"] = true;
      ++discrepancies;
    }
    if (!row.note.empty()) jr["note"] = row.note;
    if (row.pi6) jr["pi6"] = to_json(*row.pi6);
    rows.push_back(std::move(jr));
  }
  const std::size_t failures = r.failures();
  Json out{{"tool", "cpt"},
           {"version", library_version()},
           {"theorem", r.theorem},
           {"flags", flags},
           {"rows", std::move(rows)},
           {"summary",
            Json{{"pairs", r.rows.size()},
                 {"passed", r.rows.size() - failures},
                 {"failures", failures},
                 {"discrepancies", discrepancies},
                 {"note", "none_within_bound is bounded non-existence, not a proof"}}}};
  if (timing) out["wall_seconds"] = std::round(r.seconds * 1000.0) / 1000.0;
  return with_schema(std::move(out));
}

Json with_schema(Json body) {
  Json out{{"schema", kSchema}};
  for (auto it = body.begin(); it != body.end(); ++it) {
    if (it.key() != "schema") out[it.key()] = it.value();
  }
  return out;
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // Byte offset to line and column.
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
}

std::size_t locate_array_element(std::string_view text, std::string_view key, std::size_t index) {
  std::size_t line = 1;
  int depth = 0;
  int array_depth = -1;  // depth of the target array once entered
  bool expect_element = false;
  std::size_t seen = 0;
  std::string last_string;
  bool last_was_key = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (expect_element) {
      if (c == ']') return 0;
      if (seen == index) return line;
      expect_element = false;
    }
    if (c == '"') {
      std::string s;
      for (++i; i < text.size() && text[i] != '"'; ++i) {
        if (text[i] == '\\' && i + 1 < text.size()) ++i;
        if (text[i] == '\n') ++line;
        s += text[i];
      }
      last_string = std::move(s);
      last_was_key = true;
      continue;
    }
    if (c == ':') continue;
    if (c == '[' || c == '{') {
      if (c == '[' && array_depth < 0 && depth == 1 && last_was_key && last_string == key) {
        array_depth = depth + 1;
        expect_element = true;
      }
      ++depth;
    } else if (c == ']' || c == '}') {
      if (depth == array_depth) return 0;
      --depth;
    } else if (c == ',' && depth == array_depth) {
      ++seen;
      expect_element = true;
    }
    last_was_key = false;
  }
  return 0;
}

}  // namespace cpt
