#include <doctest.h>

#include "cpt/catalog.hpp"
#include "cpt/error.hpp"
#include "cpt/serialize.hpp"
#include "support.hpp"

using cpt::Json;
using test::P;
using test::pres;

TEST_CASE("poly json uses decimal strings and canonical order") {
  const auto j = cpt::to_json(P("y^2 + 2x^2 - 3", 2));
  CHECK(j.dump() ==
        R"([{"coeff":"-3","exps":[0,0]},{"coeff":"2","exps":[2,0]},{"coeff":"1","exps":[0,2]}])");
  CHECK(cpt::poly_from_json(j, 2) == P("y^2 + 2x^2 - 3", 2));
  CHECK(cpt::poly_from_json(Json::array(), 3) == cpt::Poly(3));
  // Coefficients beyond 64 bits survive.
  const auto big = P("x", 1).pow(1) * cpt::parse_integer("123456789012345678901234567890");
  CHECK(cpt::poly_from_json(cpt::to_json(big), 1) == big);
}

TEST_CASE("poly json rejects malformed input") {
  CHECK_THROWS_AS(cpt::poly_from_json(Json::parse(R"([{"coeff":"0","exps":[1]}])"), 1), cpt::ParseError);
  CHECK_THROWS_AS(cpt::poly_from_json(Json::parse(R"([{"coeff":"1","exps":[1]},{"coeff":"2","exps":[1]}])"), 1),
                  cpt::ParseError);
  CHECK_THROWS_AS(cpt::poly_from_json(Json::parse(R"([{"coeff":"1","exps":[1]},{"coeff":"2","exps":[1,0]}])"), 1),
                  cpt::ParseError);
  CHECK_THROWS_AS(cpt::poly_from_json(Json::parse(R"([{"coeff":"1.5","exps":[1]}])"), 1), cpt::ParseError);
  CHECK_THROWS_AS(cpt::poly_from_json(Json::parse(R"([{"coeff":"1","exps":[-1]}])"), 1), cpt::ParseError);
  CHECK_THROWS_AS(cpt::poly_from_json(Json::parse(R"({"coeff":"1"})"), 1), cpt::ParseError);
  // Plain integer numbers are accepted on input.
  CHECK(cpt::poly_from_json(Json::parse(R"([{"coeff":2,"exps":[1]}])"), 1) == P("2x", 1));
}

TEST_CASE("tower and presentation round trips") {
  for (const char* id : {"CP3", "GB2:2", "Eta2:1,-3", "Zeta3:1,1,2", "Xi3:0,1,-4", "M8:1,3", "N8:-2", "Milnor:2,3"}) {
    const auto spec = cpt::build(cpt::parse_family(id));
    const auto again = cpt::tower_from_json(Json::parse(cpt::to_json(spec).dump()));
    CHECK(cpt::presentation(again) == cpt::presentation(spec));
    const auto r = pres(id);
    CHECK(cpt::presentation_from_json(Json::parse(cpt::to_json(r).dump())) == r);
  }
}

TEST_CASE("tower json errors") {
  CHECK_THROWS_AS(cpt::tower_from_json(Json::parse(R"({"stage":[]})")), cpt::ParseError);
  CHECK_THROWS_AS(cpt::tower_from_json(Json::parse(R"({"stages":[{"fiber_dim":-1}]})")), cpt::ParseError);
  CHECK_THROWS_AS(cpt::tower_from_json(Json::parse(R"({"stages":[{"fiber_dim":0}]})")), cpt::SpecError);
  CHECK_THROWS_AS(
      cpt::tower_from_json(Json::parse(R"({"stages":[{"fiber_dim":1},{"fiber_dim":1,"chern":[[{"coeff":"1","exps":[0,1]}]]}]})")),
      cpt::SpecError);
}

TEST_CASE("bundle json") {
  const auto cp3 = pres("CP3");
  const auto b = cpt::top_bundle(cpt::parse_family("M8:1,3"));
  const auto j = cpt::to_json(b);
  CHECK(j["alpha"] == 1);
  CHECK(cpt::bundle_from_json(j, cp3) == b);
  // c_1 is odd for N8, which forces alpha to 0.
  CHECK(cpt::to_json(cpt::top_bundle(cpt::parse_family("N8:1")))["alpha"] == 0);
  CHECK(cpt::to_json(cpt::top_bundle(cpt::parse_family("Eta2:0,1")))["alpha"].is_null());
  auto bad = j;
  bad["alpha"] = 2;
  CHECK_THROWS_AS(cpt::bundle_from_json(bad, cp3), cpt::SpecError);
}

TEST_CASE("verdict json") {
  const auto found = search(pres("H:0"), pres("H:2"), 1);
  const auto j = cpt::to_json(found);
  CHECK(j["result"] == "found");
  CHECK(j["det"].is_string());
  CHECK(j["matrix"][0][0].is_string());
  CHECK(cpt::verdict_from_json(j).certificate == found.certificate);
  const auto none = cpt::SearchVerdict::none(3, cpt::NoneReason::BettiMismatch);
  CHECK(cpt::to_json(none).dump() == R"({"result":"none_within_bound","bound":3,"reason":"betti_mismatch"})");
  CHECK(cpt::verdict_from_json(cpt::to_json(none)) == none);
  CHECK_THROWS_AS(cpt::verdict_from_json(Json::parse(R"({"result":"maybe"})")), cpt::ParseError);
}

TEST_CASE("schema tag comes first") {
  const auto j = cpt::with_schema(Json{{"a", 1}, {"schema", "old"}});
  CHECK(j.begin().key() == "schema");
  CHECK(j["schema"] == cpt::kSchema);
  CHECK(j.size() == 2);
}

TEST_CASE("report json is deterministic without timing") {
  const auto r = cpt::sweep_three_stage(0, 2);
  const Json flags{{"theorem", "three-stage"}};
  const auto a = cpt::to_json(r, flags, false).dump();
  const auto b = cpt::to_json(cpt::sweep_three_stage(0, 2, {3, {}}), flags, false).dump();
  CHECK(a == b);
  const auto j = Json::parse(a);
  CHECK(j["schema"] == "cpt/1");
  CHECK(j["summary"]["failures"] == 0);
  CHECK(j["summary"]["discrepancies"] == 2);
  CHECK_FALSE(j.contains("wall_seconds"));
  CHECK(cpt::to_json(r, flags, true).contains("wall_seconds"));
}

TEST_CASE("syntax errors carry line and column") {
  try {
    cpt::parse_json_text("{\n  \"stages\": [,]\n}");
    FAIL("expected ParseError");
  } catch (const cpt::ParseError& e) {
    CHECK(std::string(e.what()).rfind("2:14: syntax error", 0) == 0);
  }
}

TEST_CASE("array elements are located by line") {
  const std::string text = "{\n  \"stages\": [\n    {\"fiber_dim\": 1},\n\n    {\"fiber_dim\": 2,\n     \"chern\": []}\n  ]\n}";
  CHECK(cpt::locate_array_element(text, "stages", 0) == 3);
  CHECK(cpt::locate_array_element(text, "stages", 1) == 5);
  CHECK(cpt::locate_array_element(text, "stages", 2) == 0);
  CHECK(cpt::locate_array_element(text, "caps", 0) == 0);
}
