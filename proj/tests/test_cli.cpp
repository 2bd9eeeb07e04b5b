#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "symtensor/cli/run.hpp"

using symtensor::cli::run;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Outcome o = invoke(std::move(args));
  REQUIRE(o.status == 0);
  REQUIRE(nlohmann::json::accept(o.out));
  return nlohmann::json::parse(o.out);
}

}  // namespace

TEST_CASE("documented invocations") {
  auto o = invoke({"norm", "--ring", "ZZ", "--F", "X^2-3*X+2", "--f", "X-4"});
  CHECK(o.status == 0);
  CHECK(o.out == "6\n");
  o = invoke({"count", "--ring", "GF:3", "--n", "2", "--multset", "trivial"});
  CHECK(o.status == 0);
  CHECK(o.out == "9\n");
  o = invoke({"membership", "--ring", "GF:5", "--F", "X^2", "--multset", "local-at:0"});
  CHECK(o.status == 0);
  CHECK(o.out == "true\n");
}

TEST_CASE("human output of every verb") {
  const std::vector<std::pair<std::vector<std::string>, std::string>> golden = {
      {{"norm", "--ring", "QQ", "--F", "X^2-3*X+2", "--f", "X/3+1/2"}, "35/36\n"},
      {{"norm", "--ring", "GF:5", "--F", "X^2+1", "--f", "X"}, "1\n"},
      {{"charpoly", "--ring", "ZZ", "--F", "X^2-3*X+2", "--f", "X^2"}, "X^2 - 5*X + 4\n"},
      {{"charpoly", "--ring", "ZZ", "--matrix", "0,-2;1,3"}, "X^2 - 3*X + 2\n"},
      {{"sym-ops", "--ring", "ZZ", "--f", "X^2", "--n", "2"}, "s1 = e1^2 - 2*e2\ns2 = e2^2\n"},
      {{"decompose", "--ring", "ZZ", "--n", "3", "--poly", "X1^2+X2^2+X3^2"}, "e1^2 - 2*e2\n"},
      {{"resultant-check", "--ring", "ZZ", "--P", "X^2-3*X+2", "--Q", "X-4"},
       "N_P(Q) = 6\nN_Q(P) = 6\nsign = 1\nholds = true\n"},
      {{"push-norm", "--ring", "ZZ", "--F", "X^2-3*X+2", "--f", "X-4", "--hom", "to:GF:5"},
       "phi(N_F(f)) = 1\nN_F'(f') = 1\ns1: 0 | 0\ns2: 1 | 1\nholds = true\n"},
      {{"membership", "--ring", "ZZ", "--F", "X^2-3*X+2", "--multset", "gens:X"}, "false\n"},
      {{"membership", "--ring", "GF:5", "--F", "X^2-3*X+2", "--multset", "gens:X"}, "true\n"},
      {{"recover", "--ring", "ZZ", "--matrix", "0,-2;1,3"}, "X^2 - 3*X + 2\n"},
      {{"addition", "--ring", "ZZ", "--n", "3", "--s", "e1*e3"}, "e2*X^2 + e1*e2*X\n"},
      {{"addition", "--ring", "ZZ", "--n", "2", "--s", "e2"}, "e1*X\n"},
      {{"section", "--ring", "ZZ", "--n", "3", "--t", "e1*X + e2"}, "e2\n"},
      {{"section", "--ring", "ZZ", "--n", "2", "--t", "e1"}, "-X + e1\n"},
      {{"count", "--ring", "GF:3", "--n", "2", "--multset", "gens:X"}, "6\n"},
      {{"count", "--ring", "GF:5", "--n", "3", "--multset", "all-nonzero"}, "0\n"},
  };
  for (const auto& [args, expected] : golden) {
    const Outcome o = invoke(args);
    CHECK_MESSAGE(o.status == 0, args[0] << ": " << o.err);
    CHECK_MESSAGE(o.out == expected, args[0]);
  }
}

TEST_CASE("json objects have the stable fields") {
  const auto j = invoke_json({"norm", "--ring", "ZZ", "--F", "X^2-3*X+2", "--f", "X-4"});
  CHECK(j.is_object());
  CHECK(j["verb"] == "norm");
  CHECK(j["inputs"]["ring"] == "ZZ");
  CHECK(j["inputs"]["F"] == "X^2-3*X+2");
  CHECK(j["result"] == "6");
  CHECK(j["oracle"]["agrees"] == true);
  CHECK(j["elapsed-ms"].is_number());
  CHECK(j.size() == 5);

  const auto m = invoke_json({"membership", "--ring", "GF:5", "--F", "X^2", "--multset", "local-at:0"});
  CHECK(m["result"] == true);

  const auto d = invoke_json({"decompose", "--ring", "ZZ", "--n", "2", "--poly", "X1*X2"});
  CHECK(d["result"] == "e2");
  CHECK(d["oracle"]["agrees"] == true);
}

TEST_CASE("census record") {
  const auto j = invoke_json({"count", "--ring", "GF:3", "--n", "2", "--multset", "gens:X"});
  const auto& r = j["result"];
  CHECK(r["q"] == 3);
  CHECK(r["n"] == 2);
  CHECK(r["multset"] == "gens:X");
  CHECK(r["count"] == 6);
  CHECK(r["elapsed"].is_number());
  CHECK(j["oracle"]["value"] == 6);
  CHECK(j["oracle"]["agrees"] == true);
}

TEST_CASE("census is independent of the thread count") {
  const std::vector<std::string> args = {"count", "--ring", "GF:5", "--n", "4", "--multset", "gens:X,X^2+2"};
  const std::string single = invoke(args).out;
  ::setenv(symtensor::cli::kThreadsEnv, "4", 1);
  const Outcome many = invoke(args);
  ::unsetenv(symtensor::cli::kThreadsEnv);
  CHECK(many.status == 0);
  CHECK(many.out == single);
}

TEST_CASE("exit status 2 on parse errors") {
  const std::vector<std::vector<std::string>> bad = {
      {"norm", "--ring", "GF:4", "--F", "X", "--f", "X"},
      {"norm", "--ring", "ZZ", "--F", "X^2", "--f", "Y"},
      {"norm", "--ring", "ZZ", "--F", "X^-2", "--f", "X"},
      {"count", "--ring", "GF:3", "--n", "2", "--multset", "bogus"},
      {"frobnicate"},
      {},
      {"norm", "--ring", "ZZ", "--F", "X^2"},
  };
  for (const auto& args : bad) {
    const Outcome o = invoke(args);
    CHECK(o.status == 2);
    CHECK_FALSE(o.err.empty());
  }
  const Outcome o = invoke({"norm", "--ring", "GF:4", "--F", "X", "--f", "X"});
  CHECK(o.err.find("parse-error") != std::string::npos);
  CHECK(o.err.find("position 3") != std::string::npos);
}

TEST_CASE("exit status 1 on domain errors") {
  const std::vector<std::pair<std::vector<std::string>, std::string>> bad = {
      {{"norm", "--ring", "ZZ", "--F", "2*X^2", "--f", "X"}, "precondition-error"},
      {{"count", "--ring", "ZZ", "--n", "2", "--multset", "trivial"}, "unsupported-ring"},
      {{"membership", "--ring", "Zmod:4", "--F", "X", "--multset", "local-at:0"}, "unsupported-kind"},
      {{"count", "--ring", "GF:2", "--n", "30", "--multset", "trivial"}, "enumeration-too-large"},
      {{"push-norm", "--ring", "ZZ", "--F", "X", "--f", "X", "--hom", "eval:1"}, "usage-error"},
  };
  for (const auto& [args, name] : bad) {
    const Outcome o = invoke(args);
    CHECK_MESSAGE(o.status == 1, args[0]);
    CHECK_MESSAGE(o.err.find(name) != std::string::npos, o.err);
  }
  const Outcome j = invoke({"norm", "--ring", "ZZ", "--F", "2*X^2", "--f", "X", "--json"});
  CHECK(j.status == 1);
  REQUIRE(nlohmann::json::accept(j.out));
  const auto obj = nlohmann::json::parse(j.out);
  CHECK(obj["error"]["name"] == "precondition-error");
}

TEST_CASE("help exits cleanly") {
  const Outcome o = invoke({"--help"});
  CHECK(o.status == 0);
  CHECK(o.out.find("selftest") != std::string::npos);
}

TEST_CASE("selftest is deterministic under a seed") {
  auto strip = [](nlohmann::json j) {
    j.erase("elapsed-ms");
    return j;
  };
  const auto a = invoke_json({"selftest", "--seed", "11"});
  const auto b = invoke_json({"selftest", "--seed", "11"});
  CHECK(strip(a) == strip(b));
  REQUIRE(a["result"].is_array());
  CHECK(a["result"].size() >= 30);
  for (const auto& suite : a["result"]) {
    CHECK_MESSAGE(suite["passed"] == true, suite["name"]);
    CHECK(suite["trials"].get<int>() > 0);
  }
  const Outcome text = invoke({"selftest"});
  CHECK(text.status == 0);
  CHECK(text.out.find("FAIL") == std::string::npos);
}
