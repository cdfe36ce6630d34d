#include <doctest.h>

#include <algorithm>
#include <set>

#include "cpt/catalog.hpp"
#include "cpt/error.hpp"
#include "cpt/sweep.hpp"
#include "support.hpp"

using cpt::Family;
using cpt::FamilyId;
using cpt::make_id;
using test::P;
using test::pres;

TEST_CASE("family ids parse and print") {
  CHECK(to_string(cpt::parse_family("M8:0,2")) == "M8:0,2");
  CHECK(to_string(cpt::parse_family("eta2:1,-3")) == "Eta2:1,-3");
  CHECK(cpt::parse_family("CP3") == make_id(Family::CP3, {}));
  CHECK(cpt::parse_family("CP2") == make_id(Family::CP, {2}));
  CHECK(cpt::parse_family("H1") == make_id(Family::Hirzebruch, {1}));
  CHECK(cpt::parse_family(" Xi3 : 0, 1, -2 ") == make_id(Family::Xi3, {0, 1, -2}));
  CHECK_THROWS_AS(cpt::parse_family("M8:0"), cpt::ParseError);
  CHECK_THROWS_AS(cpt::parse_family("Foo:1"), cpt::ParseError);
  CHECK_THROWS_AS(cpt::parse_family("GB2:x"), cpt::ParseError);
  CHECK(cpt::looks_like_family("Zeta3:1,0,2"));
  CHECK_FALSE(cpt::looks_like_family("towers/a.json"));
}

TEST_CASE("built presentations") {
  for (int u = -3; u <= 3; ++u) {
    const auto us = std::to_string(u);
    for (int a = 0; a <= 1; ++a) {
      const auto m = pres("M8:" + std::to_string(a) + "," + us);
      CHECK(m.relations[0] == P("x^4", 2));
      CHECK(m.relations[1] == P("y^2", 2) + P(us + "x^2", 2));
    }
    const auto n = pres("N8:" + us);
    CHECK(n.relations[0] == P("x^4", 2));
    CHECK(n.relations[1] == P("y^2 + xy", 2) + P(us + "x^2", 2));
  }
  const auto gb0 = pres("GB2:0");
  CHECK(gb0.relations[0] == P("x^2", 2));
  CHECK(gb0.relations[1] == P("y^3", 2));
  CHECK(pres("GB2:1").relations[1] == P("y^3 + xy^2", 2));
  CHECK(pres("H:3").relations[1] == P("y^2 + 3xy", 2));
  for (int s = 0; s <= 1; ++s) {
    for (int a = -2; a <= 2; ++a) {
      const auto e = pres("Eta2:" + std::to_string(s) + "," + std::to_string(a));
      CHECK(e.relations[1] == P("y^2", 2) + P(std::to_string(s) + "xy", 2) + P(std::to_string(a) + "x^2", 2));
    }
  }
  CHECK_THROWS_AS(cpt::build(make_id(Family::M8, {2, 0})), cpt::SpecError);
  CHECK_THROWS_AS(cpt::build(make_id(Family::CP, {0})), cpt::SpecError);
}

TEST_CASE("alpha tag rides on the top bundle only") {
  const auto b0 = cpt::top_bundle(make_id(Family::M8, {0, 3}));
  const auto b1 = cpt::top_bundle(make_id(Family::M8, {1, 3}));
  CHECK(b0.alpha == 0);
  CHECK(b1.alpha == 1);
  CHECK(b0.chern == b1.chern);
  CHECK(cpt::build_presentation(make_id(Family::M8, {0, 3})) == cpt::build_presentation(make_id(Family::M8, {1, 3})));
}

TEST_CASE("coincidence fixtures re-verify") {
  std::size_t flagged = 0;
  for (const auto& fx : cpt::coincidence_fixtures()) {
    CAPTURE(to_string(fx.a));
    CAPTURE(to_string(fx.b));
    if (fx.discrepancy) ++flagged;
    if (fx.certificate) {
      CHECK(verify(*fx.certificate, cpt::build_presentation(fx.a), cpt::build_presentation(fx.b)));
      CHECK(cpt::ring_class(fx.a) == cpt::ring_class(fx.b));
    } else {
      CHECK_FALSE(cpt::ring_class(fx.a) == cpt::ring_class(fx.b));
    }
  }
  CHECK(flagged == 2);
}

TEST_CASE("ring classes") {
  CHECK(cpt::ring_class(make_id(Family::Eta2, {0, 0})) == make_id(Family::GB2, {0}));
  CHECK(cpt::ring_class(make_id(Family::Zeta3, {1, 1, 2})) == cpt::ring_class(make_id(Family::Zeta3, {1, 1, -1})));
  CHECK(cpt::ring_class(make_id(Family::Xi3, {0, 1, 3})) == cpt::ring_class(make_id(Family::Xi3, {1, 1, -3})));
  CHECK(cpt::ring_class(make_id(Family::Xi3, {0, 0, 0})) == cpt::ring_class(make_id(Family::Zeta3, {1, 0, 0})));
  CHECK_FALSE(cpt::ring_class(make_id(Family::Eta2, {0, 3})) == cpt::ring_class(make_id(Family::Eta2, {0, -3})));
  // c_1 is normalized before classifying.
  CHECK(cpt::ring_class(make_id(Family::Eta2, {3, 1})) == cpt::ring_class(make_id(Family::Eta2, {1, -1})));
}

TEST_CASE("canonical list has one id per parameter") {
  const auto ids = cpt::canonical_list(2);
  CHECK(ids.front() == make_id(Family::CP3, {}));
  std::set<FamilyId> unique(ids.begin(), ids.end());
  CHECK(unique.size() == ids.size());
  CHECK(std::find(ids.begin(), ids.end(), make_id(Family::Eta2, {0, 0})) == ids.end());
}

TEST_CASE("pi6 records") {
  const auto z = cpt::pi6_distinguish(make_id(Family::M8, {0, 0}), make_id(Family::M8, {1, 0}));
  CHECK(z.verdict == cpt::Pi6Verdict::Distinct);
  CHECK(z.a.pi6 == cpt::Pi6::Z12);
  CHECK(z.b.pi6 == cpt::Pi6::Z6);
  const auto t = cpt::pi6_distinguish(make_id(Family::M8, {0, 3}), make_id(Family::M8, {1, 3}));
  CHECK(t.verdict == cpt::Pi6Verdict::Distinct);
  CHECK(t.a.pi6 == cpt::Pi6::Z6);
  CHECK(t.b.pi6 == cpt::Pi6::Z12);
  const auto one = cpt::pi6_distinguish(make_id(Family::M8, {0, 1}), make_id(Family::M8, {1, 1}));
  CHECK(one.verdict == cpt::Pi6Verdict::Unknown);
  CHECK_FALSE(one.a.divisibility_ok);
  CHECK(cpt::pi6_distinguish(make_id(Family::M8, {1, 3}), make_id(Family::M8, {1, 3})).verdict ==
        cpt::Pi6Verdict::SameRing);
  CHECK_THROWS_AS(cpt::pi6_distinguish(make_id(Family::M8, {0, 1}), make_id(Family::M8, {0, 2})), cpt::SpecError);
  CHECK_THROWS_AS(cpt::pi6_record(make_id(Family::N8, {0})), cpt::SpecError);
}

TEST_CASE("sweeps") {
  const auto three = cpt::sweep_three_stage(0, 2);
  CHECK(three.failures() == 0);
  std::size_t discrepancies = 0;
  for (const auto& row : three.rows) {
    if (row.verdict.found()) {
      CHECK(verify(*row.verdict.certificate, cpt::build_presentation(row.a), cpt::build_presentation(row.b)));
    }
    if (row.discrepancy) ++discrepancies;
  }
  CHECK(discrepancies == 2);

  const auto main = cpt::sweep_distinctness(1, 2);
  std::vector<std::pair<std::string, std::string>> failing;
  for (const auto& row : main.rows) {
    if (!row.pass) failing.emplace_back(to_string(row.a), to_string(row.b));
  }
  CHECK(failing == std::vector<std::pair<std::string, std::string>>{{"GB2:1", "GB2:2"}});
  for (const auto& row : main.rows) {
    if (row.a == make_id(Family::CP3, {}) && row.b == make_id(Family::GB2, {1})) {
      CHECK(row.verdict.reason == cpt::NoneReason::BettiMismatch);
    }
    if (row.a == row.b) CHECK(row.verdict.found());
  }
  CHECK_THROWS_AS(cpt::run_sweep("nope", 1, 2), cpt::SpecError);
  CHECK_THROWS_AS(cpt::run_sweep("main", -1, 2), cpt::SpecError);
}

TEST_CASE("sweep rows do not depend on the number of jobs") {
  const auto one = cpt::sweep_eight_dim(2, 2, {1, {}});
  const auto four = cpt::sweep_eight_dim(2, 2, {4, {}});
  REQUIRE(one.rows.size() == four.rows.size());
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    CHECK(one.rows[i].a == four.rows[i].a);
    CHECK(one.rows[i].b == four.rows[i].b);
    CHECK(one.rows[i].verdict == four.rows[i].verdict);
  }
}
