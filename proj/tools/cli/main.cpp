#include <iostream>
#include <map>
#include <thread>

#include <CLI11.hpp>

#include "app.hpp"

namespace sf = subsetfactor;
namespace cli = subsetfactor::cli;

int main(int argc, char** argv) {
  CLI::App app{"Direct subset factorizations of finite groups"};
  app.set_version_flag("--version", "1.0.0");

  cli::CommandRequest req;
  std::string canon = "L1";
  std::string side = "both";
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  std::uint64_t budget = 0;

  app.add_option("command", req.command,
                 "info | factor | same-complement | strong-cfs | cfs | lagrange | ball | tilde | verify-paper | catalog")
      ->required()
      ->check(CLI::IsMember({"info", "factor", "same-complement", "strong-cfs", "cfs", "lagrange", "ball", "tilde",
                             "verify-paper", "catalog"}));
  app.add_option("group", req.group, "group spec, e.g. C4, C2xC2, D5, sd(7,3,2), Heis3, perm:[(1,2,3);(1,2)]");
  app.add_option("--set", req.set_words, "subset as comma-separated words, identity written 1");
  app.add_option("--set-file", req.set_file, "JSON subset file")->check(CLI::ExistingFile);
  app.add_option("--side", side, "left | right | both | same")
      ->check(CLI::IsMember({"left", "right", "both", "same"}));
  app.add_option("--canon", canon, "canonical level for enumeration")
      ->check(CLI::IsMember({"none", "L0", "L1", "L2", "L3"}));
  app.add_option("--threads", threads, "worker threads for enumeration")->check(CLI::Range(1U, 1024U));
  app.add_option("--budget", budget, "maximum factor tests (default: SUBSETFACTOR_BUDGET or 1e8)")
      ->check(CLI::PositiveNumber);
  app.add_option("--size", req.size, "subset size for lagrange and tilde")->check(CLI::PositiveNumber);
  app.add_option("--radius", req.radius, "ball radius (default 2)")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", req.json, "print one JSON document");
  app.add_flag("--all", req.all, "count every complement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitUsage;
  }

  static const std::map<std::string, cli::SideFlag> sides{{"left", cli::SideFlag::left},
                                                          {"right", cli::SideFlag::right},
                                                          {"both", cli::SideFlag::both},
                                                          {"same", cli::SideFlag::same}};
  req.side = sides.at(side);
  req.canon = *sf::canon_level_from_string(canon);
  req.threads = threads;
  req.budget = budget;

  const cli::RunResult result = cli::run(req);
  if (req.json) {
    std::cout << sf::to_json(result.envelope).dump(2) << "\n";
  } else {
    std::cout << cli::render_text(result.envelope);
  }
  if (!result.message.empty()) std::cerr << "subsetfactor: " << result.message << "\n";
  return result.exit_code;
}
