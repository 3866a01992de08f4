#include <doctest.h>

#include "helpers.hpp"
#include "jetinv/document.hpp"
#include "jetinv/errors.hpp"
#include "jetinv/random.hpp"

using namespace jetinv;
using namespace jetinv::test;

namespace {

Json fixture_doc() {
  return parse_json(R"({
    "kind": "velocity", "n": 1, "m": 1, "r": 2, "scalar_mode": "rational",
    "coords": [
      {"component": 1, "index": [], "value": "0"},
      {"component": 1, "index": [1], "value": "2"},
      {"component": 1, "index": [1, 1], "value": "3"},
      {"component": 2, "index": [], "value": "0"},
      {"component": 2, "index": [1], "value": "4"},
      {"component": 2, "index": [1, 1], "value": "10"}
    ]})");
}

void expect_parse_error(const Json& doc) { CHECK_THROWS_AS(velocity_from_json<Q>(doc), ParseError); }

}  // namespace

TEST_CASE("velocity document round trip") {
  const auto v = velocity_from_json<Q>(fixture_doc());
  CHECK(v.n() == 1);
  CHECK(v.m() == 1);
  CHECK(v(1, ix(1, {0, 0})) == q(10));
  CHECK(velocity_from_json<Q>(to_json(v)) == v);

  RandomSource rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto w = random_velocity<Q>(rng, 1 + trial % 3, trial % 3, 1 + trial % 4);
    CHECK(velocity_from_json<Q>(parse_json(to_json(w).dump())) == w);
  }
}

TEST_CASE("group, Grassmann, chart and polynomial documents round trip") {
  RandomSource rng(2);
  const auto g = random_group<Q>(rng, 2, 3);
  CHECK(group_from_json<Q>(parse_json(to_json(g).dump())) == g);

  const auto v = random_velocity<Q>(rng, 2, 2, 2);
  const std::vector<int> nu{0, 1};
  const auto p = extract_recurrence(v, nu);
  const auto p_doc = to_json(p);
  CHECK(p_doc["chart"] == Json::array({1, 2}));
  CHECK(p_doc["coords"].size() == p.coordinate_count());
  CHECK(grassmann_from_json<Q>(parse_json(p_doc.dump())) == p);

  std::vector<Q> base;
  for (int a = 0; a < 4; ++a) base.push_back(v(a, MultiIndex{}));
  const auto f = random_chart<Q>(rng, base, 2);
  const auto f_back = chart_from_json<Q>(parse_json(to_json(f).dump()));
  CHECK(f_back.base == f.base);
  CHECK(f_back.derivs == f.derivs);

  const auto map = random_polynomial_map<Q>(rng, 2, 3, 3);
  const auto map_back = polynomial_map_from_json<Q>(parse_json(to_json(map).dump()));
  CHECK(map_back.source_dim == 2);
  CHECK(map_back.components == map.components);
}

TEST_CASE("Grassmann documents in a non-leading chart") {
  auto doc = parse_json(R"({
    "kind": "grassmann", "n": 1, "m": 1, "r": 1, "chart": [2],
    "coords": [
      {"component": 2, "index": [], "value": "5"},
      {"component": 1, "index": [], "value": "1/2"},
      {"component": 1, "index": [1], "value": "-3"}
    ]})");
  const auto p = grassmann_from_json<Q>(doc);
  CHECK(p.nu == std::vector<int>{1});
  CHECK(p.base == std::vector<Q>{q(5)});
  CHECK(p.w.at(0, MultiIndex{}) == q(1, 2));
  CHECK(p.w.at(0, ix(1, {0})) == q(-3));

  doc["coords"].push_back(Json{{"component", 2}, {"index", {1}}, {"value", "1"}});
  CHECK_THROWS_AS(grassmann_from_json<Q>(doc), ParseError);
}

TEST_CASE("float documents") {
  auto doc = fixture_doc();
  doc["scalar_mode"] = "float";
  doc["coords"][1]["value"] = "2.5";
  doc["coords"][2]["value"] = 0.125;
  const auto v = velocity_from_json<double>(doc);
  CHECK(v(0, ix(1, {0})) == 2.5);
  CHECK(v(0, ix(1, {0, 0})) == 0.125);
  CHECK(velocity_from_json<double>(parse_json(to_json(v).dump())) == v);
  CHECK_THROWS_AS(velocity_from_json<Q>(doc), ParseError);
  CHECK(document_mode(doc) == ScalarMode::floating);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_json("{not json"), ParseError);

  auto missing = fixture_doc();
  missing["coords"].erase(3);
  expect_parse_error(missing);

  auto duplicate = fixture_doc();
  duplicate["coords"][3] = duplicate["coords"][0];
  expect_parse_error(duplicate);

  auto unsorted = parse_json(R"({"kind": "velocity", "n": 2, "m": 0, "r": 2, "coords": []})");
  unsorted["coords"].push_back(Json{{"component", 1}, {"index", {2, 1}}, {"value", "1"}});
  expect_parse_error(unsorted);

  auto bad_value = fixture_doc();
  bad_value["coords"][0]["value"] = "1/0";
  expect_parse_error(bad_value);
  bad_value["coords"][0]["value"] = "abc";
  expect_parse_error(bad_value);

  auto bad_component = fixture_doc();
  bad_component["coords"][0]["component"] = 3;
  expect_parse_error(bad_component);

  auto bad_index = fixture_doc();
  bad_index["coords"][1]["index"] = Json::array({2});
  expect_parse_error(bad_index);

  auto too_long = fixture_doc();
  too_long["coords"][1]["index"] = Json::array({1, 1, 1});
  expect_parse_error(too_long);

  auto wrong_kind = fixture_doc();
  wrong_kind["kind"] = "group";
  expect_parse_error(wrong_kind);
  wrong_kind["kind"] = "tensor";
  CHECK_THROWS_AS(document_kind(wrong_kind), ParseError);

  auto no_n = fixture_doc();
  no_n.erase("n");
  expect_parse_error(no_n);

  auto group_with_base = parse_json(R"({"kind": "group", "n": 1, "r": 1, "coords": [
      {"component": 1, "index": [], "value": "0"},
      {"component": 1, "index": [1], "value": "2"}]})");
  CHECK_THROWS_AS(group_from_json<Q>(group_with_base), ParseError);
}

TEST_CASE("rational values are written in lowest terms") {
  auto doc = fixture_doc();
  doc["coords"][1]["value"] = "6/4";
  const auto v = velocity_from_json<Q>(doc);
  CHECK(v(0, ix(1, {0})) == q(3, 2));
  CHECK(to_json(v)["coords"][1]["value"] == "3/2");
}
