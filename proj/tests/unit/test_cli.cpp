#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "invsys/cli.hpp"
#include "json.hpp"

using invsys::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kExample1 = "X^3*Y*Z^4*T*U^2*V^6*(X^2*Y*Z*T^2*U - V^7)";
const char* kExample2 = "XYZTUV^2(XYZ - V^3)";

}  // namespace

TEST_CASE("classify") {
  const auto one = call({"classify", "--poly", kExample1, "--verify", "--json"});
  REQUIRE(one.code == 0);
  const auto j = nlohmann::json::parse(one.out);
  CHECK(j["schema_version"] == "1");
  CHECK(j["command"] == "classify");
  CHECK(j["result"]["is_ci"] == true);

  const auto two = call({"classify", "--poly", kExample2, "--verify", "--json"});
  REQUIRE(two.code == 0);
  const auto k = nlohmann::json::parse(two.out);
  CHECK(k["result"]["is_ci"] == false);

  CHECK(call({"classify", "--poly", "x1^2"}).code == 3);
  CHECK(call({"classify", "--poly", "x^(2)"}).code == 2);
  CHECK(call({"classify", "--poly", "x^2 - y"}).code == 3);
  CHECK(call({"classify"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
}

TEST_CASE("hilbert and lefschetz") {
  const auto h = call({"hilbert", "--poly", "X1^2X2 - X1X2^2", "--json"});
  REQUIRE(h.code == 0);
  CHECK(nlohmann::json::parse(h.out)["result"]["h_vector"] == nlohmann::json::array({1, 2, 2, 1}));

  const auto slp = call({"lefschetz", "--poly", "X1X2", "--mode", "slp", "--json"});
  REQUIRE(slp.code == 0);
  CHECK(nlohmann::json::parse(slp.out)["result"]["slp"] == true);

  const auto wlp = call({"lefschetz", "--ideal", "x^2;y^2;z^2", "--char", "2", "--mode", "wlp", "--json"});
  REQUIRE(wlp.code == 0);
  const auto w = nlohmann::json::parse(wlp.out)["result"];
  CHECK(w["wlp"] == false);
  CHECK(w["certified"] == true);

  CHECK(call({"lefschetz", "--ideal", "x^2;xy"}).code == 5);
  CHECK(call({"lefschetz", "--poly", "x", "--char", "4"}).code == 2);
}

TEST_CASE("sweep") {
  const auto s = call({"sweep", "--n", "2", "--max-a", "2", "--max-b", "2", "--json"});
  REQUIRE(s.code == 0);
  const auto r = nlohmann::json::parse(s.out)["result"];
  CHECK(r["mismatches"] == 0);
  CHECK(r["ci_count"] == r["cases"]);
  CHECK(call({"sweep", "--n", "3", "--max-b", "0"}).code == 2);
}

TEST_CASE("json output is deterministic and replayable") {
  const std::vector<std::string> args{"classify", "--poly", "X1^2X2^2X3^5(X1X2 - 3X3^2)", "--verify", "--json"};
  const auto a = call(args), b = call(args);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"3/1\"") != std::string::npos);

  const std::string path = "cli_replay_test.json";
  REQUIRE(call({"classify", "--poly", "X1^2X2^2X3^5(X1X2 - 3X3^2)", "--json", "--out", path}).code == 0);
  CHECK(call({"--replay", path}).code == 0);

  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  in.close();
  std::string text = buf.str();
  const auto at = text.find("\"is_ci\": true");
  REQUIRE(at != std::string::npos);
  text.replace(at, 13, "\"is_ci\": false");
  std::ofstream(path) << text;
  CHECK(call({"--replay", path}).code == 4);
  std::remove(path.c_str());
}
