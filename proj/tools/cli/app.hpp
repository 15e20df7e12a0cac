#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subsetfactor/algebra.hpp"
#include "subsetfactor/notation.hpp"

namespace subsetfactor::cli {

enum class SideFlag { left, right, both, same };

struct CommandRequest {
  std::string command;
  std::string group;
  std::optional<std::string> set_words;
  std::optional<std::string> set_file;
  std::optional<std::size_t> size;    // lagrange / tilde
  std::optional<std::size_t> radius;  // ball
  SideFlag side = SideFlag::both;
  CanonLevel canon = CanonLevel::L1;
  unsigned threads = 1;
  bool json = false;
  bool all = false;
  std::uint64_t budget = 0;
};

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

struct RunResult {
  ReportEnvelope envelope;
  int exit_code = kExitHolds;
  std::string message;  // diagnostics for exit codes 2 and 3
};

/// Dispatches one command. Library errors become exit codes 2 and 3.
RunResult run(const CommandRequest& request);

/// Human-readable rendering of an envelope.
std::string render_text(const ReportEnvelope& envelope);

/// SUBSETFACTOR_BUDGET if set and valid, else the built-in default.
std::uint64_t default_budget();

}  // namespace subsetfactor::cli
