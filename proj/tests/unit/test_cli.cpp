#include "cli/cli.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "fermat/bsigma.hpp"
#include "fermat/json_io.hpp"

using namespace fermat;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bsigma", "--p", "5"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bsigma", "--c0", "x"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"psi", "--p", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"psi", "--p", "3", "--c", "1,2,3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"psi", "--p", "3", "--c", "1,a"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"homology", "--which", "closed"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"homology", "--n", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"cohomology"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"cohomology", "--module", "regular"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"cyclotomic", "--p", "9"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"cyclotomic", "--p", "29"}).code, cli::kExitUsage);
  const auto r = run({"frobnicate"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, cli::kExitOk); }

TEST(Cli, BsigmaGrid) {
  const auto r = run({"bsigma", "--p", "3", "--c0", "1", "--c1", "0"});
  EXPECT_EQ(r.code, cli::kExitOk);
  std::istringstream grid(format_grid(bsigma_p3(1, 0)));
  std::string line;
  int rows = 0;
  while (std::getline(grid, line)) {
    EXPECT_NE(r.out.find(line + "\n"), std::string::npos) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 3);
}

TEST(Cli, BsigmaJsonRoundTrips) {
  for (int c0 = 0; c0 < 3; ++c0)
    for (int c1 = 0; c1 < 3; ++c1) {
      const auto r = run({"bsigma", "--c0", std::to_string(c0), "--c1", std::to_string(c1), "--json"});
      ASSERT_EQ(r.code, cli::kExitOk);
      const auto j = Json::parse(r.out);
      EXPECT_EQ(group_ring_from_json(j.at("element")), bsigma_p3(c0, c1));
      EXPECT_EQ(kummer_from_json(j), KummerCoordinates::make(3, {c0, c1}));
      EXPECT_TRUE(j.at("verification").at("all").get<bool>());
    }
}

TEST(Cli, BsigmaVerifyAll) {
  const auto r = run({"bsigma", "--verify-all"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, PsiJson) {
  const auto r = run({"psi", "--p", "3", "--c", "0,1", "--json"});
  ASSERT_EQ(r.code, cli::kExitOk);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(psi_from_json(j.at("psi")).entries, (std::vector<Coeff>{1, 1}));
  EXPECT_EQ(run({"psi", "--p", "7", "--c", "1,2,3,4"}).code, cli::kExitOk);
}

TEST(Cli, HomologyRanks) {
  const std::pair<const char*, std::size_t> expected[] = {{"relative", 9}, {"affine", 4}, {"stab", 2}, {"projective", 2}};
  for (const auto& [which, rank] : expected) {
    const auto r = run({"homology", "--n", "3", "--which", which, "--json"});
    ASSERT_EQ(r.code, cli::kExitOk) << which;
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j.at("rank").get<std::size_t>(), rank) << which;
    for (const auto& b : j.at("basis")) EXPECT_EQ(group_ring_from_json(b).n(), 3u);
  }
  const auto composite = Json::parse(run({"homology", "--n", "6", "--which", "projective", "--json"}).out);
  EXPECT_EQ(composite.at("rank").get<std::size_t>(), 20u);
  EXPECT_EQ(composite.at("basis").size(), 20u);
}

TEST(Cli, CohomologyDimensions) {
  const std::tuple<const char*, std::size_t, std::size_t> expected[] = {
      {"lambda1", 9, 13}, {"h1u", 6, 9}, {"wedge", 8, 12}};
  for (const auto& [module, h1, h2] : expected) {
    const auto r = run({"cohomology", "--module", module, "--json"});
    ASSERT_EQ(r.code, cli::kExitOk);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j.at("h1").get<std::size_t>(), h1) << module;
    EXPECT_EQ(j.at("h2").get<std::size_t>(), h2) << module;
    EXPECT_EQ(j.at("h1_basis").size(), h1);
    EXPECT_EQ(fp_matrix_from_json(j.at("sigma")).rows(), j.at("dim").get<std::size_t>());
  }
}

TEST(Cli, BasisValidationReportsKnownMisprints) {
  const auto r = run({"cohomology", "--validate-paper", "--json"});
  EXPECT_EQ(r.code, cli::kExitCheckFailed);
  const auto j = Json::parse(r.out);
  std::set<std::string> failed;
  for (const auto& c : j.at("checks"))
    if (!c.at("passed").get<bool>()) failed.insert(c.at("name").get<std::string>());
  EXPECT_EQ(failed, (std::set<std::string>{"group ring: listed image of X", "group ring: H^1 list as printed",
                                           "H_1(U): H^1 list"}));
}

TEST(Cli, ReproduceFailsExactlyOnMisprints) {
  const auto r = run({"reproduce-paper", "--json"});
  EXPECT_EQ(r.code, cli::kExitCheckFailed);
  const auto j = Json::parse(r.out);
  EXPECT_FALSE(j.at("all_passed").get<bool>());
  std::set<std::string> failed;
  for (const auto& c : j.at("checks"))
    if (!c.at("passed").get<bool>()) failed.insert(c.at("group").get<std::string>() + " / " + c.at("name").get<std::string>());
  EXPECT_EQ(failed, (std::set<std::string>{"cohomology / wedge H^1", "cohomology / wedge H^2",
                                           "bases / group ring: listed image of X",
                                           "bases / group ring: H^1 list as printed", "bases / H_1(U): H^1 list"}));
  EXPECT_GT(j.at("checks").size(), 40u);
}

TEST(Cli, CyclotomicVerify) {
  for (const char* p : {"3", "5", "7", "11", "13"}) {
    const auto r = run({"cyclotomic", "--p", p, "--verify", "--json"});
    EXPECT_EQ(r.code, cli::kExitOk) << p;
    EXPECT_TRUE(Json::parse(r.out).at("all_passed").get<bool>());
  }
  EXPECT_EQ(run({"cyclotomic", "--p", "29", "--bound", "31", "--verify"}).code, cli::kExitOk);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"reproduce-paper"}, {"cohomology", "--module", "h1x", "--json"}, {"homology", "--n", "5", "--which", "projective"}};
  for (const auto& c : commands) {
    const auto a = run(c), b = run(c);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}
