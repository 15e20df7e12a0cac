#include <gtest/gtest.h>

#include <cstdlib>

#include "app.hpp"
#include "subsetfactor/cfs.hpp"

namespace {

namespace sf = subsetfactor;
namespace cli = subsetfactor::cli;

cli::CommandRequest request(std::string command, std::string group = {}) {
  cli::CommandRequest r;
  r.command = std::move(command);
  r.group = std::move(group);
  return r;
}

nlohmann::json without_elapsed(const sf::ReportEnvelope& env) {
  auto j = sf::to_json(env);
  j.erase("elapsed_ms");
  return j;
}

TEST(Cli, FactorLeftSide) {
  auto r = request("factor", "C4");
  r.set_words = "1,a";
  r.side = cli::SideFlag::left;
  const auto out = cli::run(r);
  EXPECT_EQ(out.exit_code, cli::kExitHolds);
  EXPECT_EQ(out.envelope.complement, (std::vector<std::string>{"1", "a^2"}));
  EXPECT_EQ(out.envelope.group_order, 4U);
}

TEST(Cli, FactorBothSidesReportsEvidence) {
  auto r = request("factor", "D4");
  r.set_words = "1,a,b,a^2*b";
  const auto out = cli::run(r);
  EXPECT_EQ(out.exit_code, cli::kExitFails);
  EXPECT_EQ(out.envelope.verdict, "none");
  EXPECT_EQ(out.envelope.details["evidence"]["kind"], "index2_failure");
  ASSERT_TRUE(out.envelope.witness.has_value());
}

TEST(Cli, CountsAllComplements) {
  auto r = request("factor", "C2xC2");
  r.set_words = "1,a";
  r.side = cli::SideFlag::left;
  r.all = true;
  const auto out = cli::run(r);
  // {1,a}*B = C2xC2 for B = {1,b}, {1,a*b}, {a,b}, {a,a*b}
  EXPECT_EQ(out.envelope.counters.at("complements"), 4U);
}

TEST(Cli, SameComplement) {
  auto r = request("same-complement", "C2xC2xC2");
  r.set_words = "1,b,c,a*c";
  EXPECT_EQ(cli::run(r).exit_code, cli::kExitHolds);
}

TEST(Cli, StrongCfsExitCodes) {
  const auto fails = cli::run(request("strong-cfs", "S3"));
  EXPECT_EQ(fails.exit_code, cli::kExitFails);
  ASSERT_TRUE(fails.envelope.witness.has_value());
  const std::size_t size = fails.envelope.witness->size();
  EXPECT_TRUE(size == 2 || size == 3);
  EXPECT_EQ(cli::run(request("strong-cfs", "C3xC3")).exit_code, cli::kExitHolds);
  auto tight = request("strong-cfs", "C2xC2xC2xC2");
  tight.budget = 1;
  const auto inconclusive = cli::run(tight);
  EXPECT_EQ(inconclusive.exit_code, cli::kExitInconclusive);
  EXPECT_EQ(inconclusive.envelope.verdict, "inconclusive");
}

TEST(Cli, BudgetFromEnvironment) {
  ::setenv("SUBSETFACTOR_BUDGET", "1", 1);
  EXPECT_EQ(cli::default_budget(), 1U);
  EXPECT_EQ(cli::run(request("strong-cfs", "C2xC2xC2xC2")).exit_code, cli::kExitInconclusive);
  ::setenv("SUBSETFACTOR_BUDGET", "garbage", 1);
  EXPECT_EQ(cli::default_budget(), sf::kDefaultClassifyBudget);
  ::unsetenv("SUBSETFACTOR_BUDGET");
}

TEST(Cli, ThreadsDoNotChangeOutput) {
  for (const char* spec : {"C12", "A4", "D6"}) {
    auto one = request("strong-cfs", spec);
    auto many = one;
    many.threads = 4;
    EXPECT_EQ(without_elapsed(cli::run(one).envelope), without_elapsed(cli::run(many).envelope)) << spec;
  }
}

TEST(Cli, RepeatedRunsAreIdenticalExceptElapsed) {
  auto r = request("cfs", "A4");
  EXPECT_EQ(without_elapsed(cli::run(r).envelope), without_elapsed(cli::run(r).envelope));
  auto v = request("verify-paper");
  EXPECT_EQ(without_elapsed(cli::run(v).envelope), without_elapsed(cli::run(v).envelope));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli::run(request("factor", "C4")).exit_code, cli::kExitUsage);  // no set
  EXPECT_EQ(cli::run(request("info", "Z4")).exit_code, cli::kExitUsage);
  EXPECT_EQ(cli::run(request("info")).exit_code, cli::kExitUsage);
  EXPECT_EQ(cli::run(request("frobnicate", "C4")).exit_code, cli::kExitUsage);
  auto bad_word = request("factor", "C4");
  bad_word.set_words = "1,q";
  const auto out = cli::run(bad_word);
  EXPECT_EQ(out.exit_code, cli::kExitUsage);
  EXPECT_FALSE(out.message.empty());
}

TEST(Cli, CapExceededIsInconclusive) {
  EXPECT_EQ(cli::run(request("cfs", "C211")).exit_code, cli::kExitInconclusive);
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(cli::run(request("info", "Q8")).envelope.details["order"], 8);
  auto lag = request("lagrange", "C3xC3");
  lag.size = 3;
  lag.canon = sf::CanonLevel::none;
  EXPECT_EQ(cli::run(lag).envelope.counters.at("representatives"), 28U);
  auto ball = request("ball", "C5xC5");
  EXPECT_EQ(cli::run(ball).envelope.counters.at("size"), 13U);
  auto tilde = request("tilde", "D9");
  tilde.size = 9;
  EXPECT_EQ(cli::run(tilde).exit_code, cli::kExitHolds);
  const auto verify = cli::run(request("verify-paper"));
  EXPECT_EQ(verify.exit_code, cli::kExitHolds);
  EXPECT_EQ(verify.envelope.counters.at("failed"), 0U);
  const auto catalog = cli::run(request("catalog", "D4"));
  EXPECT_EQ(catalog.envelope.counters.at("entries"), 1U);
  EXPECT_FALSE(cli::render_text(verify.envelope).empty());
}

}  // namespace
