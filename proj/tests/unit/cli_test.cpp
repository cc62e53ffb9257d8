#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "sgr/serialize.hpp"
#include "verify.hpp"

namespace sgr::cli {
namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = main_entry(args, out, err);
  return {status, out.str(), err.str()};
}

Polynomial P(std::initializer_list<int> c) {
  std::vector<BigInt> v;
  for (int x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

TEST(FormatPolynomial, Plain) {
  EXPECT_EQ(format_polynomial(P({1, 3}), OutputFormat::plain), "1 + 3*t");
  EXPECT_EQ(format_polynomial(Polynomial(), OutputFormat::plain), "0");
  EXPECT_EQ(format_polynomial(P({0, -1, 0, 2}), OutputFormat::plain, "z"), "-z + 2*z^3");
  EXPECT_EQ(format_polynomial(P({1, 3, 6, 10, 15}), OutputFormat::plain), "1 + 3*t + 6*t^2 + 10*t^3 + 15*t^4");
}

TEST(FormatPolynomial, CsvAndJson) {
  EXPECT_EQ(format_polynomial(P({1, 1, 2, 1, 1}), OutputFormat::csv, "z"), "0,1\n1,1\n2,2\n3,1\n4,1\n");
  EXPECT_EQ(format_polynomial(P({1, 1}), OutputFormat::json), R"(["1","1"])");
}

TEST(Cli, FigureCaptions) {
  auto a = invoke({"dilation-poly", "--d", "3", "--r", "4", "--format", "plain"});
  EXPECT_EQ(a.status, kExitOk);
  EXPECT_EQ(a.out, "1 + 3*t + 6*t^2 + 10*t^3 + 15*t^4\n");
  EXPECT_EQ(invoke({"dilation-poly", "--d", "3", "--r", "3"}).out, "1 + 3*t + 6*t^2 + 10*t^3\n");
  EXPECT_EQ(invoke({"poincare", "--d", "1", "--r", "0"}).out, "1\n");
}

TEST(Cli, WeightedPolynomial) {
  EXPECT_EQ(invoke({"weighted-poly", "--d", "2", "--r", "2", "--weight", "staircase"}).out, "1 + z + 2*z^2 + z^3 + z^4\n");
  EXPECT_EQ(invoke({"weighted-poly", "--d", "2", "--r", "1", "--weight", "1,2", "--format", "csv"}).out,
            "0,1\n1,1\n2,1\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"dilation-poly", "--d", "0", "--r", "2"}).status, kExitUsage);
  EXPECT_EQ(invoke({"dilation-poly", "--d", "2", "--r", "-1"}).status, kExitUsage);
  EXPECT_EQ(invoke({"grade", "--d", "3", "--r", "2", "--weight", "1,2"}).status, kExitUsage);
  EXPECT_EQ(invoke({"grade", "--d", "2", "--r", "2", "--weight", "1,0"}).status, kExitUsage);
  EXPECT_EQ(invoke({"enumerate", "--d", "2"}).status, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).status, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--inject-fault", "no-such-check"}).status, kExitUsage);
  EXPECT_FALSE(invoke({"dilation-poly", "--d", "0", "--r", "2"}).err.empty());
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"bijection", "--d", "3", "--r", "3", "--format", "json"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, JsonRoundTripsByteExact) {
  const std::vector<std::vector<std::string>> commands = {
      {"enumerate", "--d", "3", "--r", "2"},
      {"grade", "--d", "3", "--r", "3", "--weight", "2,1,3"},
      {"dilation-poly", "--d", "4", "--r", "5"},
      {"weighted-poly", "--d", "3", "--r", "3", "--weight", "staircase"},
      {"poincare", "--d", "3", "--r", "3"},
      {"bijection", "--d", "2", "--r", "3"},
      {"series", "--d", "2", "--max-t", "3", "--max-z", "4"},
      {"verify", "--d-max", "2", "--r-max", "2"},
  };
  for (auto args : commands) {
    args.insert(args.end(), {"--format", "json"});
    const auto o = invoke(args);
    ASSERT_EQ(o.status, kExitOk) << args[0] << ": " << o.err;
    const auto j = nlohmann::ordered_json::parse(o.out);
    EXPECT_EQ(j.dump() + "\n", o.out) << args[0];
  }
}

TEST(Cli, JsonSchemas) {
  const auto grade = nlohmann::ordered_json::parse(invoke({"grade", "--d", "2", "--r", "2", "--weight", "staircase", "--format", "json"}).out);
  EXPECT_EQ(grade["d"], 2);
  EXPECT_EQ(grade["classes"].size(), 5u);
  EXPECT_EQ(grade["classes"][2]["count"], "2");
  EXPECT_EQ(polynomial_from_json(grade["polynomial"]), P({1, 1, 2, 1, 1}));

  const auto series = nlohmann::ordered_json::parse(invoke({"series", "--d", "3", "--max-t", "3", "--max-z", "3", "--format", "json"}).out);
  const auto s = biseries_from_json(series["series"]);
  EXPECT_EQ(s.z_coefficient(3), P({1, 3, 6, 10}));

  const auto bij = nlohmann::ordered_json::parse(invoke({"bijection", "--d", "3", "--r", "3", "--format", "json"}).out);
  ASSERT_EQ(bij["rows"].size(), 20u);
  for (const auto& row : bij["rows"]) {
    const auto point = uint_vector_from_json(row["point"]);
    const auto tableau = uint_vector_from_json(row["tableau"]);
    std::uint32_t sum = 0;
    for (auto x : point) sum += x;
    EXPECT_EQ(sum, tableau.size());
  }
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "sgr_cli_test_out.txt";
  std::filesystem::remove(path);
  const auto o = invoke({"poincare", "--d", "2", "--r", "2", "--out", path.string()});
  EXPECT_EQ(o.status, kExitOk);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), "1 + t + 2*t^2 + t^3 + t^4\n");
  std::filesystem::remove(path);
}

TEST(Verify, CleanRunPasses) {
  const auto o = invoke({"verify", "--d-max", "4", "--r-max", "5"});
  EXPECT_EQ(o.status, kExitOk);
  for (const auto& name : check_names()) EXPECT_NE(o.out.find("PASS  " + name), std::string::npos) << name;
  EXPECT_NE(o.out.find("verify: 12/12 checks passed"), std::string::npos);
}

TEST(Verify, EveryInjectedFaultIsCaughtAlone) {
  for (const auto& name : check_names()) {
    const auto results = run_verification({3, 3, name});
    for (const auto& r : results) {
      if (r.name == name) {
        EXPECT_FALSE(r.passed) << name;
        EXPECT_FALSE(r.counterexample.empty()) << name;
      } else {
        EXPECT_TRUE(r.passed) << name << " disturbed " << r.name;
      }
    }
    EXPECT_EQ(invoke({"verify", "--d-max", "3", "--r-max", "3", "--inject-fault", name}).status, kExitVerifyFailed);
  }
}

}  // namespace
}  // namespace sgr::cli
