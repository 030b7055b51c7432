#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "krull");
  std::ostringstream out, err;
  const int code = krull::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Parse preserving document order and check every object is key-sorted.
bool keys_sorted(const nlohmann::ordered_json& j) {
  if (j.is_object()) {
    std::string prev;
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first && !(prev < k)) return false;
      prev = k;
      first = false;
      if (!keys_sorted(v)) return false;
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (!keys_sorted(v)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("lattice over F_2^12") {
  const auto r = run({"lattice", "--p", "2", "--n", "12"});
  REQUIRE(r.code == 0);
  const auto j = r.doc();
  CHECK(j["status"] == "ok");
  const auto& lat = j["lattice"];
  REQUIRE(lat.size() == 6);
  for (const auto& e : lat) {
    const auto d = e["degree"].get<std::uint64_t>();
    CHECK(12 % d == 0);
    CHECK(e["subgroup_order"].get<std::uint64_t>() * d == 12);
    // Subgroup of Z/12 fixing F_{2^d} is dZ/12.
    std::vector<std::uint64_t> expected;
    for (std::uint64_t k = 0; k < 12; k += d) expected.push_back(k);
    CHECK(e["subgroup"].get<std::vector<std::uint64_t>>() == expected);
  }
  CHECK(lat[4]["covers"] == json::array({2, 3}));
}

TEST_CASE("lattice rejects non-prime p") {
  const auto r = run({"lattice", "--p", "4", "--n", "2"});
  CHECK(r.code == 2);
  CHECK(r.doc()["status"] == "error");
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"lattice", "--p", "2"}).code == 2);
  CHECK(run({"lattice", "--p", "x", "--n", "2"}).code == 2);
  CHECK(run({"correspondence"}).code == 2);
  CHECK(run({"correspondence", "--p", "2", "--n", "3", "--cyclotomic", "5"}).code == 2);
  CHECK(run({"gfb-check", "--group", "zmod:4", "--basis", "[[0,"}).code == 2);
  CHECK(run({"gfb-check", "--group", "weird:4", "--basis", "[[0]]"}).code == 2);
  CHECK(run({"gfb-check", "--group", "zmod:4", "--basis", "[[9]]"}).code == 2);
  CHECK(run({"glue", "--bound", "24", "--generators", "{\"8\":5}", "--tower", "q"}).code == 2);
  CHECK(run({"supernatural", "--op", "frobnicate", "--args", "{}"}).code == 2);
  CHECK(run({"topology", "--level", "21"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("correspondence reports") {
  for (auto [p, n] : {std::pair{"2", "12"}, std::pair{"3", "8"}}) {
    const auto r = run({"correspondence", "--p", p, "--n", n});
    REQUIRE(r.code == 0);
    const auto j = r.doc();
    CHECK(j["violations"].empty());
    for (const auto& pair : j["pairs"]) CHECK(pair["roundtrip_ok"] == true);
  }
  const auto r = run({"correspondence", "--cyclotomic", "5"});
  REQUIRE(r.code == 0);
  const auto j = r.doc();
  std::vector<int> degrees;
  for (const auto& pair : j["pairs"]) degrees.push_back(pair["field"]["degree"].get<int>());
  CHECK(degrees == std::vector<int>{1, 2, 4});
}

TEST_CASE("gfb-check") {
  const auto ok = run({"gfb-check", "--group", "zmod:4", "--basis", "[[0,2]]"});
  CHECK(ok.code == 0);
  CHECK(ok.doc()["valid"] == true);
  // {0, 2} and the whole group: 4 opens, the unions of cosets of 2Z/4.
  CHECK(ok.doc()["open_count"] == 4);
  CHECK(ok.doc()["continuity"]["continuous"] == true);

  const auto bad = run({"gfb-check", "--group", "zmod:4", "--basis", "[[0,1]]"});
  CHECK(bad.code == 1);
  CHECK(bad.doc()["valid"] == false);
  CHECK(bad.doc()["violation"]["witness"] == json::array({json::array({0, 1})}));

  const auto missing_identity = run({"gfb-check", "--group", "zmod:4", "--basis", "[[1,2]]"});
  CHECK(missing_identity.code == 1);

  const auto units = run({"gfb-check", "--group", "units:8", "--basis", "[[1,3]]"});
  CHECK(units.code == 0);
}

TEST_CASE("topology matches coset unions") {
  for (int level : {1, 4, 6, 12}) {
    const auto r = run({"topology", "--level", std::to_string(level)});
    REQUIRE(r.code == 0);
    const auto j = r.doc();
    CHECK(j["krull_equal"] == true);
    const auto oracle = krull::oracle::coset_unions(static_cast<std::size_t>(level));
    CHECK(j["open_count"].get<std::size_t>() == oracle.size());
    CHECK(j["opens"].size() == oracle.size());
  }
}

TEST_CASE("glue example") {
  const auto r = run({"glue", "--bound", "24", "--generators", "{\"8\":5,\"3\":1}"});
  REQUIRE(r.code == 0);
  const auto sigma = r.doc()["sigma"];
  CHECK(sigma["24"] == 13);
  // Independent CRT: 13 is the unique residue mod 24 with 13 = 5 mod 8 and 13 = 1 mod 3.
  for (const auto& [d, v] : sigma.items()) CHECK(v.get<int>() == 13 % std::stoi(d));

  const auto conflict = run({"glue", "--bound", "24", "--generators", "{\"4\":2,\"2\":1}"});
  CHECK(conflict.code == 1);
  CHECK(conflict.doc()["status"] == "violation");
}

TEST_CASE("separate") {
  const auto r = run({"separate", "--bound", "60", "--a", "1", "--b", "7"});
  REQUIRE(r.code == 0);
  const auto j = r.doc();
  const int level = j["level"];
  CHECK(60 % level == 0);
  CHECK(j["first"]["residue"] == 1 % level);
  CHECK(j["second"]["residue"] == 7 % level);
  CHECK(j["first"]["residue"] != j["second"]["residue"]);
  // No proper divisor of 4 separates 1 and 7.
  CHECK(level == 4);
  CHECK(run({"separate", "--bound", "60", "--a", "1", "--b", "61"}).code == 1);
}

TEST_CASE("supernatural") {
  const auto rt = run({"supernatural", "--op", "roundtrip", "--args", "{\"s\":{\"2\":3},\"bound\":360}"});
  REQUIRE(rt.code == 0);
  CHECK(rt.doc()["levels"] == json::array({1, 2, 4, 8}));
  const auto bare = run({"supernatural", "--op", "roundtrip", "--args", "{\"2\":3}"});
  CHECK(bare.code == 0);
  CHECK(bare.doc()["levels"] == rt.doc()["levels"]);

  const auto lat = run({"supernatural", "--op", "lattice", "--args", "[{\"2\":3,\"3\":1},{\"2\":1,\"5\":2}]"});
  REQUIRE(lat.code == 0);
  CHECK(lat.doc()["gcd"] == json{{"2", 1}});
  CHECK(lat.doc()["lcm"] == json{{"2", 3}, {"3", 1}, {"5", 2}});
}

TEST_CASE("compactness and verify-all") {
  const auto c = run({"compactness", "--bound", "24"});
  CHECK(c.code == 0);
  CHECK(c.doc()["cases"] == 24);
  const auto u = run({"compactness", "--bound", "24", "--tower", "zhat_units"});
  CHECK(u.code == 0);

  const auto v = run({"verify-all", "--bound", "60"});
  CHECK(v.code == 0);
  CHECK(v.doc()["passed"] == 11);
  CHECK(v.doc()["total"] == 11);
}

TEST_CASE("sorted keys, pretty output and determinism") {
  const std::vector<std::vector<std::string>> cases = {
      {"lattice", "--p", "3", "--n", "6"},
      {"correspondence", "--cyclotomic", "12"},
      {"topology", "--level", "8"},
      {"glue", "--bound", "24", "--generators", "{\"8\":5,\"3\":1}"},
      {"supernatural", "--op", "roundtrip", "--args", "{\"2\":\"inf\"}"},
      {"compactness", "--bound", "12"},
  };
  for (const auto& args : cases) {
    const auto a = run(args);
    CHECK(keys_sorted(nlohmann::ordered_json::parse(a.out)));
    auto serial_args = args;
    serial_args.insert(serial_args.begin(), "--serial");
    const auto b = run(serial_args);
    CHECK(a.out == b.out);
    CHECK(run(args).out == a.out);

    auto pretty_args = args;
    pretty_args.insert(pretty_args.begin(), "--pretty");
    const auto p = run(pretty_args);
    CHECK(p.out.find("\n  ") != std::string::npos);
    CHECK(json::parse(p.out) == json::parse(a.out));
  }
}
