#include <doctest.h>

#include <random>

#include "cpt/catalog.hpp"
#include "cpt/error.hpp"
#include "cpt/tower_ring.hpp"
#include "oracle/dense_ring.hpp"
#include "support.hpp"

using cpt::Matrix;
using cpt::Poly;
using cpt::RingPresentation;
using test::P;
using test::pres;

namespace {

std::vector<std::string> basis_text(const RingPresentation& r, std::uint64_t degree) {
  const auto names = cpt::default_generator_names(r.gens);
  std::vector<std::string> out;
  for (const auto& m : cpt::graded_basis(r, degree)) out.push_back(to_string(m, names));
  return out;
}

cpt::TowerSpec spec(std::vector<cpt::Stage> stages) { return cpt::TowerSpec::make(std::move(stages)); }

}  // namespace

TEST_CASE("presentations of small towers") {
  const auto cp3 = pres("CP3");
  CHECK(cp3.caps == std::vector<unsigned>{3});
  CHECK(cp3.relations[0] == P("x^4", 1));

  for (int a = -3; a <= 3; ++a) {
    const auto r = pres("Eta2:0," + std::to_string(a));
    CHECK(r.relations[0] == P("x^3", 2));
    CHECK(r.relations[1] == P("y^2", 2) + P(std::to_string(a) + "x^2", 2));
  }

  for (int s = 0; s <= 1; ++s) {
    for (int r = 0; r <= 1; ++r) {
      for (int b = -2; b <= 2; ++b) {
        const auto id = "Xi3:" + std::to_string(s) + "," + std::to_string(r) + "," + std::to_string(b);
        const auto p = pres(id);
        CHECK(p.relations[0] == P("x^2", 3));
        CHECK(p.relations[1] == P("y^2 + xy", 3));
        Poly third = P("z^2", 3) + P(std::to_string(s) + "zx", 3) + P(std::to_string(r) + "zy", 3) +
                     P(std::to_string(b) + "xy", 3);
        CHECK(p.relations[2] == third);
      }
    }
  }
}

TEST_CASE("tower validation") {
  CHECK_THROWS_AS(spec({}), cpt::SpecError);
  CHECK_THROWS_AS(spec({{0, {}}}), cpt::SpecError);
  // Stage 2 may only use x.
  try {
    spec({{1, {}}, {1, {P("z", 3)}}});
    FAIL("expected SpecError");
  } catch (const cpt::SpecError& e) {
    CHECK(std::string(e.what()) == "stage 2 chern references generator 3");
    CHECK(e.stage() == 2);
  }
  // c_1 must have degree 2.
  CHECK_THROWS_AS(spec({{2, {}}, {1, {P("x^2", 2)}}}), cpt::SpecError);
  // More classes than the rank allows.
  CHECK_THROWS_AS(spec({{1, {}}, {1, {P("x", 2), P("0", 2), P("0", 2)}}}), cpt::SpecError);
  CHECK(spec({{2, {}}, {1, {P("x", 2)}}}).real_dim() == 6);
}

TEST_CASE("presentation_from_relations checks the tower shape") {
  CHECK(cpt::presentation_from_relations({1, 1}, {P("x^2", 2), P("y^2 + 2xy", 2)}) == pres("H:2"));
  CHECK_THROWS_AS(cpt::presentation_from_relations({1, 1}, {P("x^2", 2), P("2y^2", 2)}), cpt::SpecError);
  CHECK_THROWS_AS(cpt::presentation_from_relations({1, 1}, {P("x^2 + xy", 2), P("y^2", 2)}), cpt::SpecError);
  CHECK_THROWS_AS(cpt::presentation_from_relations({1}, {P("x^2", 1), P("x^2", 1)}), cpt::SpecError);
}

TEST_CASE("normal form examples") {
  CHECK(normal_form(pres("Eta2:0,2"), P("y^2", 2)) == P("-2x^2", 2));
  CHECK(normal_form(pres("H:2"), P("(x + y)^2", 2)).is_zero());
  CHECK(normal_form(pres("H:0"), P("x^2 y", 2)).is_zero());
  CHECK(normal_form(pres("CP3"), P("x^3 + x^4 + x^9", 1)) == P("x^3", 1));
}

TEST_CASE("graded basis examples") {
  CHECK(basis_text(pres("Eta2:0,5"), 4) == std::vector<std::string>{"x^2", "x*y"});
  CHECK(basis_text(pres("CP3"), 8).empty());
  CHECK(basis_text(pres("Zeta3:0,0,1"), 2) == std::vector<std::string>{"x", "y", "z"});
  CHECK(basis_text(pres("CP3"), 3).empty());
}

TEST_CASE("poincare examples") {
  CHECK(poincare(pres("CP3")).betti == std::vector<std::uint64_t>{1, 1, 1, 1});
  CHECK(poincare(pres("Xi3:1,1,-3")).betti == std::vector<std::uint64_t>{1, 3, 3, 1});
  CHECK(poincare(pres("Eta2:1,2")).betti == std::vector<std::uint64_t>{1, 2, 2, 1});
  CHECK(poincare(pres("GB2:1")).betti == std::vector<std::uint64_t>{1, 2, 2, 1});
  CHECK(poincare(pres("M8:0,2")).betti == std::vector<std::uint64_t>{1, 2, 2, 2, 1});
}

TEST_CASE("pairing matrix examples") {
  CHECK(top_pairing_matrix(pres("H:0"), 2) == Matrix{{0, 1}, {1, 0}});
  CHECK(top_pairing_matrix(pres("H:1"), 2) == Matrix{{0, 1}, {1, -1}});
  CHECK(top_pairing_matrix(pres("CP3"), 2) == Matrix{{1}});
  CHECK_THROWS_AS(top_pairing_matrix(pres("CP3"), 8), cpt::ShapeError);
}

TEST_CASE("property: invariants across the catalog") {
  std::vector<cpt::FamilyId> ids = cpt::canonical_list(3);
  for (int u = -3; u <= 3; ++u) {
    ids.push_back(cpt::make_id(cpt::Family::M8, {0, u}));
    ids.push_back(cpt::make_id(cpt::Family::N8, {u}));
  }
  for (const auto& id : ids) {
    CAPTURE(to_string(id));
    const auto r = cpt::build_presentation(id);
    for (const Poly& rel : r.relations) CHECK(normal_form(r, rel).is_zero());
    const auto betti = poincare(r).betti;
    std::uint64_t sum = 0;
    for (auto b : betti) sum += b;
    std::uint64_t prod = 1;
    for (unsigned c : r.caps) prod *= c + 1;
    CHECK(sum == prod);
    CHECK(std::equal(betti.begin(), betti.end(), betti.rbegin()));
    for (std::uint64_t d = 0; d <= r.top_degree(); d += 2) {
      const auto det = top_pairing_matrix(r, d).det();
      CHECK((det == 1 || det == -1));
    }
  }
}

TEST_CASE("property: normal form is idempotent and multiplicative") {
  std::mt19937_64 rng(3);
  for (const char* id : {"CP3", "Eta2:1,-3", "Zeta3:1,1,2", "Xi3:0,1,-4", "M8:1,3", "N8:-2", "Milnor:2,3"}) {
    const auto r = pres(id);
    for (int i = 0; i < 60; ++i) {
      const Poly p = test::random_poly(rng, r.gens, 4, 5, 9);
      const Poly q = test::random_poly(rng, r.gens, 4, 5, 9);
      const Poly np = normal_form(r, p);
      CHECK(normal_form(r, np) == np);
      CHECK(normal_form(r, p * q) == normal_form(r, np * normal_form(r, q)));
      CHECK(multiply(r, p, q) == normal_form(r, p * q));
    }
  }
}

// Dense multiplication table built independently from the raw stages.
TEST_CASE("oracle: dense table agrees with normal form on every basis product") {
  std::vector<cpt::FamilyId> ids;
  for (const char* id : {"CP3", "GB2:2", "Eta2:0,-2", "Eta2:1,3", "H:3", "Zeta3:1,1,-2", "Xi3:1,0,3",
                         "M8:0,-4", "N8:4", "Milnor:1,3", "Milnor:2,2"}) {
    ids.push_back(cpt::parse_family(id));
  }
  for (const auto& id : ids) {
    CAPTURE(to_string(id));
    const auto spec = cpt::build(id);
    const auto r = cpt::presentation(spec);
    oracle::DenseRing dense = oracle::DenseRing::from_tower(spec);
    REQUIRE(dense.size() == r.rank());
    REQUIRE(dense.size() <= 8);
    for (std::size_t i = 0; i < dense.size(); ++i) {
      for (std::size_t j = 0; j < dense.size(); ++j) {
        const auto ei = dense.exps_at(i);
        const auto ej = dense.exps_at(j);
        const Poly a = Poly::monomial(cpt::Monomial(std::vector<cpt::Monomial::Exponent>(ei.begin(), ei.end())));
        const Poly b = Poly::monomial(cpt::Monomial(std::vector<cpt::Monomial::Exponent>(ej.begin(), ej.end())));
        const auto expect = dense.multiply(dense.reduce(a), dense.reduce(b));
        CHECK(dense.embed_reduced(multiply(r, a, b)) == expect);
      }
    }
    // Relations built from reduced classes vanish in the raw-stage ring.
    for (const Poly& rel : r.relations) CHECK(oracle::DenseRing::is_zero(dense.reduce(rel)));
  }
}
