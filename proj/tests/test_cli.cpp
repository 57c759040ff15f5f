#include <doctest.h>

#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "gencomp/cli.hpp"
#include "gencomp/counting.hpp"

using namespace gencomp;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("parse_weight_list") {
  CHECK(cli::parse_weight_list("2,1,3") == std::vector<std::int64_t>{2, 1, 3});
  CHECK(cli::parse_weight_list("1,-2") == std::vector<std::int64_t>{1, -2});
  CHECK_THROWS_AS(cli::parse_weight_list(""), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_weight_list("1,,2"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_weight_list("1,x"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_weight_list("1.5"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_weight_list("1,"), cli::UsageError);
}

TEST_CASE("count") {
  CHECK(invoke({"count", "--weights", "2,1", "--parts", "2", "--total", "3"}).out == "4\n");
  CHECK(invoke({"count", "--weights", "1,1", "--parts", "3", "--total", "4"}).out == "3\n");
  CHECK(invoke({"count", "--weights", "1,1", "--parts", "2", "--total", "5"}).out == "0\n");
}

TEST_CASE("total") {
  CHECK(invoke({"total", "--weights", "1,1", "--n", "4"}).out == "5\n");
  CHECK(invoke({"total", "--weights", "2,1", "--n", "0"}).out == "1\n");
  CHECK(invoke({"total", "--weights", "0,0", "--n", "3"}).out == "0\n");
}

TEST_CASE("coeff") {
  CHECK(invoke({"coeff", "--weights", "2,1", "--k", "2", "--i", "1"}).out == "4\n");
  CHECK(invoke({"coeff", "--weights", "1,1,1", "--k", "2", "--i", "2"}).out == "3\n");
  CHECK(invoke({"coeff", "--weights", "2,1", "--k", "2", "--i", "9"}).out == "0\n");
  CHECK(invoke({"coeff", "--weights", "2,1", "--k", "2", "--i", "-1"}).out == "0\n");
}

TEST_CASE("table csv") {
  const auto r = invoke({"table", "--weights", "1,1", "--n-max", "3", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "k,n,count\n"
        "1,1,1\n"
        "total,1,1\n"
        "1,2,1\n"
        "2,2,1\n"
        "total,2,2\n"
        "2,3,2\n"
        "3,3,1\n"
        "total,3,3\n");
  CHECK(invoke({"table", "--weights", "1", "--n-max", "2"}).out ==
        "k,n,count\n1,1,1\ntotal,1,1\n2,2,1\ntotal,2,1\n");
}

TEST_CASE("table csv and jsonl carry the same triples") {
  const auto csv = invoke({"table", "--weights", "2,0,1", "--n-max", "7", "--format", "csv"});
  const auto jsonl = invoke({"table", "--weights", "2,0,1", "--n-max", "7", "--format", "jsonl"});
  REQUIRE(csv.code == 0);
  REQUIRE(jsonl.code == 0);
  std::multiset<std::tuple<std::string, std::string, std::string>> a, c;
  for (const auto& line : lines(csv.out)) {
    if (line == "k,n,count") continue;
    const auto p1 = line.find(','), p2 = line.find(',', p1 + 1);
    a.emplace(line.substr(0, p1), line.substr(p1 + 1, p2 - p1 - 1), line.substr(p2 + 1));
  }
  for (const auto& line : lines(jsonl.out)) {
    const auto j = nlohmann::json::parse(line);
    if (j.contains("total"))
      c.emplace("total", j["n"].dump(), j["total"].dump());
    else
      c.emplace(j["k"].dump(), j["n"].dump(), j["count"].dump());
  }
  CHECK(a == c);
}

TEST_CASE("enumerate") {
  const auto r = invoke({"enumerate", "--weights", "2,1", "--total", "2"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"1.1+1.1", "1.1+1.2", "1.2+1.1", "1.2+1.2", "2.1"});
  const auto empty = invoke({"enumerate", "--weights", "1,1", "--total", "5", "--parts", "2"});
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
  CHECK(lines(invoke({"enumerate", "--weights", "2,1", "--total", "2", "--limit", "2"}).out).size() == 2);
  const auto jsonl = invoke({"enumerate", "--weights", "2,1", "--total", "3", "--parts", "2",
                             "--format", "jsonl"});
  CHECK(lines(jsonl.out).front() == R"({"index":1,"parts":[{"value":1,"type":1},{"value":2,"type":1}]})");
}

TEST_CASE("verify") {
  const auto r = invoke({"verify", "--weights", "2,1,3", "--n-max", "20", "--k-max", "8"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);

  const auto fib = invoke({"verify", "--weights", "1,1", "--n-max", "30"});
  CHECK(fib.code == 0);
  CHECK(fib.out.find("fibonacci-binomial") != std::string::npos);
  CHECK(fib.out.find("binomial") != std::string::npos);

  const auto rr = invoke({"verify", "--r", "4", "--n-max", "20", "--format", "jsonl"});
  CHECK(rr.code == 0);
  bool saw_r = false;
  for (const auto& line : lines(rr.out)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["failures"].empty());
    saw_r = saw_r || j["identity"] == "r-fibonacci";
  }
  CHECK(saw_r);

  const auto one = invoke({"verify", "--weights", "2,1", "--n-max", "10", "--identity", "row-sum"});
  CHECK(one.code == 0);
  CHECK(lines(one.out).size() == 2);
}

TEST_CASE("verify exit code on failed reports") {
  IdentityReport bad{"parts-coefficient", "b=(2,1)", 3, {{{{"k", 1}, {"n", 1}}, Count(3), Count(2)}}};
  IdentityReport good{"row-sum", "b=(2,1)", 3, {}};
  std::ostringstream out;
  const std::vector<IdentityReport> reports{good, bad};
  CHECK(cli::print_verify(reports, "text", out) == cli::kExitIdentityFailed);
  CHECK(out.str().find("k=1 n=1: 3 != 2") != std::string::npos);
  std::ostringstream json;
  CHECK(cli::print_verify(reports, "jsonl", json) == cli::kExitIdentityFailed);
  CHECK(lines(json.str()).back() ==
        R"j({"identity":"parts-coefficient","grid":"b=(2,1)","checked":3,"failures":[{"params":{"k":1,"n":1},"left":3,"right":2}]})j");
  std::ostringstream ok;
  CHECK(cli::print_verify(std::vector<IdentityReport>{good}, "text", ok) == cli::kExitOk);
}

TEST_CASE("usage errors exit 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--weights", "1,-2", "--n-max", "5"},
           {"count", "--weights", "", "--parts", "1", "--total", "1"},
           {"count", "--weights", "1,a", "--parts", "1", "--total", "1"},
           {"count", "--weights", "1", "--parts", "-1", "--total", "1"},
           {"table", "--weights", "1,1", "--n-max", "3", "--format", "xml"},
           {"table", "--weights", "1,1", "--n-max", "0"},
           {"verify", "--n-max", "5"},
           {"verify", "--weights", "1", "--r", "2", "--n-max", "5"},
           {"verify", "--weights", "1", "--n-max", "5", "--identity", "theorem9"},
           {"coeff", "--weights", "1", "--k", "0", "--i", "0"},
           {"frobnicate"},
           {}}) {
    const auto r = invoke(args);
    const std::string label = args.empty() ? "<none>" : args[0];
    CHECK_MESSAGE(r.code == cli::kExitUsage, label);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("printed counts are exact decimals") {
  const WeightVector b{3, 1, 2};
  for (std::size_t n : {10u, 60u, 150u})
    CHECK(invoke({"total", "--weights", "3,1,2", "--n", std::to_string(n)}).out ==
          to_decimal(count_all(b, n)) + "\n");
  CHECK(invoke({"count", "--weights", "3,1,2", "--parts", "40", "--total", "70"}).out ==
        to_decimal(count_compositions(b, 40, 70)) + "\n");
}
