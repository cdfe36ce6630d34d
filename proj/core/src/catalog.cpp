#include "cpt/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "cpt/error.hpp"

namespace cpt {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  std::size_t nparams;
};

constexpr std::array<FamilyInfo, 10> kFamilies{{
    {Family::CP3, "CP3", 0},
    {Family::GB2, "GB2", 1},
    {Family::Eta2, "Eta2", 2},
    {Family::Zeta3, "Zeta3", 3},
    {Family::Xi3, "Xi3", 3},
    {Family::M8, "M8", 2},
    {Family::N8, "N8", 1},
    {Family::CP, "CP", 1},
    {Family::Hirzebruch, "H", 1},
    {Family::Milnor, "Milnor", 2},
}};

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilies) {
    if (fi.family == f) return fi;
  }
  throw SpecError("unknown family");
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int small_param(const Integer& v, const char* what) {
  if (v < -1000000 || v > 1000000) throw SpecError(std::string(what) + " is out of range");
  return v.convert_to<int>();
}

Poly lin(std::size_t g, const Integer& a, const Integer& b = 0) {
  Poly p(g);
  p.add_term(Monomial::generator(g, 0), a);
  if (g > 1) p.add_term(Monomial::generator(g, 1), b);
  return p;
}

Poly mono(std::size_t g, std::vector<Monomial::Exponent> exps, const Integer& c) {
  exps.resize(g, 0);
  return Poly::monomial(Monomial(std::move(exps)), c);
}

TowerSpec cp(unsigned n) { return TowerSpec::make({Stage{n, {}}}); }

TowerSpec h0() { return TowerSpec::make({Stage{1, {}}, Stage{1, {}}}); }

TowerSpec hirzebruch(const Integer& k) {
  // c_1 = -k x gives y^2 + k x y.
  return TowerSpec::make({Stage{1, {}}, Stage{1, {lin(1, -k)}}});
}

// Base of the last stage and its rank 2 Chern classes (c_1, c_2), in the
// base's own generators.
struct TopData {
  TowerSpec base;
  std::vector<Poly> chern;
  std::optional<int> alpha;
};

TopData top_data(const FamilyId& id) {
  const auto& p = id.params;
  switch (id.family) {
    case Family::Eta2:
      return {cp(2), {lin(1, -p[0]), mono(1, {2}, p[1])}, std::nullopt};
    case Family::Zeta3:
      return {h0(), {lin(2, -p[0], -p[1]), mono(2, {1, 1}, p[2])}, std::nullopt};
    case Family::Xi3:
      return {hirzebruch(1), {lin(2, -p[0], -p[1]), mono(2, {1, 1}, p[2])}, std::nullopt};
    case Family::M8: {
      if (p[0] != 0 && p[0] != 1) throw SpecError("M8 alpha must be 0 or 1");
      return {cp(3), {Poly(1), mono(1, {2}, p[1])}, small_param(p[0], "alpha")};
    }
    case Family::N8:
      return {cp(3), {lin(1, -1), mono(1, {2}, p[0])}, 0};
    default:
      throw SpecError(to_string(id) + " is not a rank 2 bundle family");
  }
}

// Tensors the top bundle so that (s, r) lands in {0, 1}^2 and reads the
// parameters back.
FamilyId normalize_params(const FamilyId& id) {
  if (id.family != Family::Eta2 && id.family != Family::Zeta3 && id.family != Family::Xi3) return id;
  TopData td = top_data(id);
  const RingPresentation base = presentation(td.base);
  const std::size_t g = base.gens;
  const BundleDescriptor xi = make_bundle(base, 2, td.chern);
  // Our c_1 is -(s x + r y); choose gamma = floor(s/2) x + floor(r/2) y.
  Poly gamma(g);
  for (std::size_t k = 0; k < g; ++k) {
    const Integer s = -xi.chern[0].coeff(Monomial::generator(g, k));
    Integer t = s / 2;
    if (s < 0 && t * 2 != s) t -= 1;
    gamma.add_term(Monomial::generator(g, k), t);
  }
  const BundleDescriptor out = tensor_line(base, xi, gamma);
  FamilyId res = id;
  res.params[0] = -out.chern[0].coeff(Monomial::generator(g, 0));
  if (g == 2) res.params[1] = -out.chern[0].coeff(Monomial::generator(g, 1));
  std::vector<Monomial::Exponent> top(g == 1 ? std::vector<Monomial::Exponent>{2}
                                             : std::vector<Monomial::Exponent>{1, 1});
  res.params.back() = out.chern[1].coeff(Monomial(top));
  return res;
}

Integer iabs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

}  // namespace

FamilyId make_id(Family f, std::vector<Integer> params) {
  if (params.size() != info(f).nparams) {
    throw ParseError(std::string(info(f).name) + " takes " + std::to_string(info(f).nparams) +
                     " parameters");
  }
  return FamilyId{f, std::move(params)};
}

FamilyId parse_family(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  const std::string_view name = trim(text.substr(0, colon));
  std::vector<Integer> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      params.push_back(parse_integer(trim(rest.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  // Shorthands CP1, CP2, ... and H0, H1, ... for the unparameterized names.
  if (colon == std::string_view::npos && name.size() >= 2) {
    const bool cp_short = name.size() > 2 && iequals(name.substr(0, 2), "CP") && !iequals(name, "CP3");
    const bool h_short = iequals(name.substr(0, 1), "H");
    const std::string_view digits = name.substr(cp_short ? 2 : 1);
    if ((cp_short || h_short) && std::all_of(digits.begin(), digits.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      return FamilyId{cp_short ? Family::CP : Family::Hirzebruch, {parse_integer(digits)}};
    }
  }
  for (const auto& fi : kFamilies) {
    if (iequals(name, fi.name)) {
      if (params.size() != fi.nparams) {
        throw ParseError("family id '" + std::string(text) + "': " + fi.name + " takes " +
                         std::to_string(fi.nparams) + " parameters");
      }
      return FamilyId{fi.family, std::move(params)};
    }
  }
  throw ParseError("unknown family '" + std::string(name) + "'");
}

bool looks_like_family(std::string_view text) {
  try {
    parse_family(text);
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

std::string to_string(const FamilyId& id) {
  std::string out = info(id.family).name;
  for (std::size_t i = 0; i < id.params.size(); ++i) {
    out += i == 0 ? ":" : ",";
    out += to_string(id.params[i]);
  }
  return out;
}

TowerSpec build(const FamilyId& id) {
  const auto& p = id.params;
  if (p.size() != info(id.family).nparams) throw SpecError("wrong parameter count for " + to_string(id));
  switch (id.family) {
    case Family::CP3:
      return cp(3);
    case Family::CP: {
      if (p[0] < 1) throw SpecError("CP:n needs n >= 1");
      return cp(static_cast<unsigned>(small_param(p[0], "n")));
    }
    case Family::Hirzebruch:
      return hirzebruch(p[0]);
    case Family::Milnor:
      return dual_complement_of_tautological(small_param(p[0], "i"), small_param(p[1], "j"));
    case Family::GB2: {
      // gamma_1^k + e + e over CP^1, with x = -c_1(gamma_1).
      const TowerSpec base = cp(1);
      const RingPresentation bp = presentation(base);
      const BundleDescriptor xi = whitney_sum_of_lines(bp, {lin(1, -p[0]), Poly(1), Poly(1)});
      return append_stage(base, xi);
    }
    default: {
      const BundleDescriptor xi = top_bundle(id);
      return append_stage(top_data(id).base, xi);
    }
  }
}

RingPresentation build_presentation(const FamilyId& id) { return presentation(build(id)); }

BundleDescriptor top_bundle(const FamilyId& id) {
  if (id.family == Family::CP3 || id.family == Family::CP) throw SpecError(to_string(id) + " has no bundle stage");
  if (id.family == Family::GB2 || id.family == Family::Hirzebruch || id.family == Family::Milnor) {
    const TowerSpec spec = build(id);
    const Stage& top = spec.stages().back();
    std::vector<Poly> chern;
    for (const Poly& c : top.chern) chern.push_back(c.resized(spec.ngens() - 1));
    return make_bundle(presentation(TowerSpec::make({spec.stages().begin(), spec.stages().end() - 1})),
                       top.fiber_dim + 1, std::move(chern));
  }
  TopData td = top_data(id);
  return make_bundle(presentation(td.base), 2, std::move(td.chern), td.alpha);
}

FamilyId ring_class(const FamilyId& raw) {
  const FamilyId id = normalize_params(raw);
  const auto& p = id.params;
  switch (id.family) {
    case Family::CP:
      if (p[0] == 3) return make_id(Family::CP3, {});
      return id;
    case Family::GB2: {
      Integer k = p[0] % 3;
      if (k < 0) k += 3;
      return make_id(Family::GB2, {k});
    }
    case Family::Hirzebruch: {
      Integer k = p[0] % 2;
      if (k < 0) k += 2;
      return make_id(Family::Hirzebruch, {k});
    }
    case Family::Eta2:
      if (p[0] == 0 && p[1] == 0) return make_id(Family::GB2, {0});
      return id;
    case Family::Zeta3: {
      const Integer& a = p[2];
      if (p[0] == 1 && p[1] == 1) return make_id(Family::Zeta3, {1, 1, a >= 1 ? a : Integer(1 - a)});
      if (p[0] == 0 && p[1] == 0) return make_id(Family::Zeta3, {0, 0, iabs(a)});
      return make_id(Family::Zeta3, {1, 0, iabs(a)});
    }
    case Family::Xi3: {
      const Integer& b = p[2];
      if (p[0] == 0 && p[1] == 0) {
        if (b == 0) return make_id(Family::Zeta3, {1, 0, 0});
        return make_id(Family::Xi3, {0, 0, iabs(b)});
      }
      if (p[0] == 1 && p[1] == 0) return make_id(Family::Xi3, {1, 0, iabs(b)});
      if (p[0] == 1 && p[1] == 1) return make_id(Family::Xi3, {0, 1, Integer(-b)});
      return id;
    }
    case Family::M8:
      // Both alpha values give literally the same ring.
      return make_id(Family::M8, {0, p[1]});
    default:
      return id;
  }
}

std::vector<FamilyId> canonical_list(int n) {
  std::vector<FamilyId> out;
  out.push_back(make_id(Family::CP3, {}));
  for (int k = 0; k <= 2; ++k) out.push_back(make_id(Family::GB2, {k}));
  for (int a = -n; a <= n; ++a) {
    if (a != 0) out.push_back(make_id(Family::Eta2, {0, a}));
  }
  for (int a = -n; a <= n; ++a) out.push_back(make_id(Family::Eta2, {1, a}));
  for (int a = 0; a <= n; ++a) out.push_back(make_id(Family::Zeta3, {0, 0, a}));
  for (int a = 0; a <= n; ++a) out.push_back(make_id(Family::Zeta3, {1, 0, a}));
  for (int a = 1; a <= n; ++a) out.push_back(make_id(Family::Zeta3, {1, 1, a}));
  for (int b = 1; b <= n; ++b) out.push_back(make_id(Family::Xi3, {0, 0, b}));
  for (int b = 0; b <= n; ++b) out.push_back(make_id(Family::Xi3, {1, 0, b}));
  for (int b = -n; b <= n; ++b) out.push_back(make_id(Family::Xi3, {0, 1, b}));
  return out;
}

namespace {

IsoCertificate frozen(std::initializer_list<std::initializer_list<Integer>> rows) {
  Matrix m(rows);
  Integer det = m.det();
  return IsoCertificate{std::move(m), det};
}

}  // namespace

std::vector<CoincidenceFixture> coincidence_fixtures() {
  using F = Family;
  std::vector<CoincidenceFixture> out;
  out.push_back({make_id(F::Zeta3, {1, 0, 2}), make_id(F::Zeta3, {0, 1, 2}),
                 frozen({{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}}), false, "base factor swap"});
  out.push_back({make_id(F::Zeta3, {0, 0, 3}), make_id(F::Zeta3, {0, 0, -3}),
                 frozen({{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}), false, "sign flip of alpha"});
  out.push_back({make_id(F::Zeta3, {1, 0, 2}), make_id(F::Zeta3, {1, 0, -2}),
                 frozen({{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}), false, "sign flip of alpha"});
  out.push_back({make_id(F::Zeta3, {1, 1, 2}), make_id(F::Zeta3, {1, 1, -1}),
                 frozen({{-1, 0, 0}, {0, 1, -1}, {0, 0, -1}}), false, "alpha to 1 - alpha"});
  out.push_back({make_id(F::Xi3, {0, 0, 2}), make_id(F::Xi3, {0, 0, -2}),
                 frozen({{-1, 1, 0}, {-2, 1, 0}, {0, 0, -1}}), false, "sign flip of beta"});
  out.push_back({make_id(F::Xi3, {1, 0, 2}), make_id(F::Xi3, {1, 0, -2}),
                 frozen({{-1, 1, 0}, {-2, 1, 1}, {0, 0, -1}}), false, "sign flip of beta"});
  out.push_back({make_id(F::Xi3, {0, 1, 2}), make_id(F::Xi3, {1, 1, -2}),
                 frozen({{-1, 1, -1}, {-2, 1, -1}, {0, 0, -1}}), false, "(0,1,b) and (1,1,-b)"});
  out.push_back({make_id(F::GB2, {0}), make_id(F::Eta2, {0, 0}),
                 frozen({{0, -1}, {-1, 0}}), false, "both are CP^1 x CP^2"});
  out.push_back({make_id(F::Zeta3, {1, 0, 0}), make_id(F::Xi3, {0, 0, 0}),
                 frozen({{-1, 0, 0}, {-2, 0, 1}, {0, -1, 0}}), true,
                 "cross-base coincidence as proved for the lemma on H_0 versus H_1 bases"});
  out.push_back({make_id(F::Zeta3, {0, 0, 1}), make_id(F::Xi3, {0, 0, 0}), std::nullopt, true,
                 "cross-base coincidence as stated in the three-stage theorem"});
  return out;
}

Pi6Record pi6_record(const FamilyId& id) {
  if (id.family != Family::M8) throw SpecError("pi_6 data is only recorded for M8");
  const Integer& alpha = id.params[0];
  const Integer& u = id.params[1];
  Pi6Record rec{id, false, Pi6::Unknown};
  const Integer prod = u * (u + 1);
  if (prod % 12 != 0) return rec;
  rec.divisibility_ok = true;
  const Integer q = prod / 12;
  Integer diff = (alpha - q) % 2;
  rec.pi6 = diff == 0 ? Pi6::Z12 : Pi6::Z6;
  return rec;
}

Pi6Comparison pi6_distinguish(const FamilyId& a, const FamilyId& b) {
  if (a.family != Family::M8 || b.family != Family::M8) throw SpecError("pi6_distinguish needs two M8 ids");
  if (a.params[1] != b.params[1]) {
    throw SpecError("pi6_distinguish needs equal u; different u are separated by the ring search");
  }
  Pi6Comparison cmp{Pi6Verdict::Unknown, pi6_record(a), pi6_record(b)};
  if (a.params[0] == b.params[0]) {
    cmp.verdict = Pi6Verdict::SameRing;
  } else if (cmp.a.divisibility_ok) {
    cmp.verdict = Pi6Verdict::Distinct;
  }
  return cmp;
}

std::string to_string(Pi6 v) {
  switch (v) {
    case Pi6::Z12:
      return "Z12";
    case Pi6::Z6:
      return "Z6";
    default:
      return "unknown";
  }
}

std::string to_string(Pi6Verdict v) {
  switch (v) {
    case Pi6Verdict::Distinct:
      return "distinct";
    case Pi6Verdict::SameRing:
      return "same_ring";
    default:
      return "unknown";
  }
}

}  // namespace cpt
