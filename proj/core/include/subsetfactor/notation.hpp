#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "subsetfactor/group.hpp"
#include "subsetfactor/subset.hpp"

namespace subsetfactor {

/// Parses a group description. Grammar (case-insensitive):
///
///   spec   := term ('x' term)*              left-associative direct product
///   term   := 'C' n | 'D' m | 'Q8' | 'S' k | 'A' k | 'Heis' p
///           | 'sd(' m ',' k ',' t ')' | 'file:' path | 'perm:[' perm (';' perm)* ']'
///           | '(' spec ')'
///   perm   := '()' | ('(' n (',' n)* ')')+
///
/// `file:` consumes the rest of the input. Family parameters are validated.
GroupSpec parse_group_spec(std::string_view text);

/// One factor of a word: generator symbol raised to a nonzero exponent.
struct WordFactor {
  std::string name;
  long long exponent = 1;
};

/// Parses `1` or `name(^e)?(*name(^e)?)*`. Juxtaposition is not accepted.
std::vector<WordFactor> parse_word(std::string_view text);

/// Evaluates a word left to right. Exact element names (as printed by
/// format_subset) are accepted as well, so every emitted name parses back.
Element parse_element_word(const Group& g, std::string_view text);

/// Splits a comma-separated list at bracket depth zero, so cycle names like
/// "(1,2,3)" stay intact. Surrounding braces are stripped.
std::vector<std::string> split_word_list(std::string_view text);

Subset parse_subset(const Group& g, std::string_view comma_separated);
Subset parse_subset(const Group& g, const std::vector<std::string>& words);

/// "{x, y, ...}" in increasing index order.
std::string format_subset(const Group& g, const Subset& a);
std::vector<std::string> subset_names(const Group& g, const Subset& a);

/// JSON subset file: { "group": <spec string>, "elements": [<word>, ...] }.
struct SubsetFile {
  std::string group;
  std::vector<std::string> elements;
};

SubsetFile load_subset_file(const std::string& path);
nlohmann::json to_json(const SubsetFile& file);

/// JSON group file: { "name", "order", "elements", "table", "generators"? }.
nlohmann::json group_to_json(const Group& g);

/// Machine-readable command result.
struct ReportEnvelope {
  std::string command;
  std::string group;
  std::size_t group_order = 0;
  std::string verdict;
  std::optional<std::vector<std::string>> witness;
  std::optional<std::vector<std::string>> complement;
  std::map<std::string, std::uint64_t> counters;
  nlohmann::json details = nlohmann::json::object();
  double elapsed_ms = 0.0;
};

nlohmann::json to_json(const ReportEnvelope& report);

}  // namespace subsetfactor
