#include <doctest.h>

#include <json.hpp>

#include "balkan/errors.hpp"
#include "balkan/verifier.hpp"

using namespace balkan;

namespace {

std::string result(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.results)
    if (k == key) return v;
  return "";
}

}  // namespace

TEST_CASE("report json shape") {
  Report r;
  r.command = "demo";
  r.parameters.push_back({"j", "5"});
  r.add_exact("same", "3", "3");
  r.add_exact("different", "3", "4");
  r.depths_used.push_back(12);
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["command"] == "demo");
  CHECK(j["parameters"]["j"] == "5");
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["mode"] == "exact");
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["checks"][1]["pass"] == false);
  CHECK(j["depthsUsed"][0] == 12);
  CHECK(j.contains("wallTime"));
  CHECK(j["pass"] == false);
  CHECK(r.failures() == 1);
  CHECK(r.to_text().find("FAIL") != std::string::npos);
}

TEST_CASE("argument parsing") {
  CHECK(parse_box("2", 4) == cube(2, 4));
  const Box b = parse_box("-1:1,0:2,-3:0,5:5", 4);
  CHECK(b[1] == std::make_pair(0L, 2L));
  CHECK(b[3] == std::make_pair(5L, 5L));
  CHECK_THROWS_AS(parse_box("1:2,3:4", 4), DomainError);
  CHECK_THROWS_AS(parse_box("a", 4), DomainError);
  CHECK(parse_value_format("both") == ValueFormat::Both);
  CHECK_THROWS_AS(parse_value_format("hex"), DomainError);
}

TEST_CASE("compute") {
  const Report a = cmd_compute(5, 1, 3, ValueFormat::Exact, 50);
  CHECK(a.passed());
  CHECK(result(a, "exact") == "3");

  const Report b = cmd_compute(1, 1, 3, ValueFormat::Both, 50);
  CHECK(b.passed());
  CHECK(result(b, "triple") == "(288, -31, 90)");

  const Report c = cmd_compute(3, 2, 3, ValueFormat::Decimal, 30);
  CHECK(c.passed());
  CHECK(result(c, "decimal").rfind("6.511259917749138569401952000774", 0) == 0);
  CHECK(result(c, "exact").empty());

  const Report d = cmd_compute(4, 3, 1, ValueFormat::Both, 50);
  CHECK(d.passed());
  CHECK(result(d, "kind") == "log2");

  CHECK_THROWS_AS(cmd_compute(5, -1, 3, ValueFormat::Exact, 50), DomainError);
}

TEST_CASE("decimate command") {
  const Report r = cmd_decimate("", "empty", Family::Affine, cube(3, 4));
  CHECK(r.passed());
  CHECK(result(r, "survivors") == "2401");
  CHECK_THROWS_AS(cmd_decimate("11 6 x 1\n", "bad", Family::Affine, cube(3, 4)), DomainError);
}

TEST_CASE("small tables and areas") {
  CHECK(cmd_table("13").passed());
  CHECK(cmd_table("14").passed());
  CHECK(cmd_verify("bosnia").passed());
  CHECK_THROWS_AS(cmd_verify("nowhere"), DomainError);
  CHECK_THROWS_AS(cmd_table("1"), DomainError);
}

TEST_CASE("derive command") {
  const Report r = cmd_derive("alphabeta", 3, 2, 400);
  CHECK(r.passed());
  CHECK_THROWS_AS(cmd_derive("gamma", 3, 2, 400), DomainError);
}

TEST_CASE("grid results do not depend on the thread count") {
  CommandOptions one, many;
  one.threads = 1;
  many.threads = 4;
  one.c_max = many.c_max = 6;
  const Report a = cmd_verify("montenegro", one), b = cmd_verify("montenegro", many);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].actual == b.checks[i].actual);
  }
  CHECK(a.depths_used == b.depths_used);
}
