#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "subsetfactor/group.hpp"

namespace subsetfactor {

enum class Claim { positive_factorization, non_factor };

std::string_view to_string(Claim c);

struct WitnessCatalogEntry {
  std::string group;                    // group spec text
  std::vector<std::string> elements;    // A as words
  Claim claim = Claim::non_factor;
  std::vector<std::string> complement;  // B with G = A*B, positive entries only
  std::string locus;                    // where the set is listed
  std::string certificate;              // argument named for non-factors
  std::string note;                     // editorial repairs, if any
};

/// How one of the remaining groups is ruled out: by its own witness, or by a
/// subgroup isomorphic to a group that has one.
struct EliminationRoute {
  std::string name;
  std::string group;                // spec text
  std::string route;                // witness | subgroup
  std::string via;                  // spec of the subgroup's group
  std::vector<std::string> images;  // images of via's generators, as words of `group`
  std::string note;
};

struct Catalog {
  std::vector<WitnessCatalogEntry> entries;
  std::vector<EliminationRoute> eliminations;
  std::vector<std::string> strong_cfs;  // groups with the property
};

Catalog parse_catalog(const nlohmann::json& doc);
nlohmann::json to_json(const Catalog& catalog);

/// The embedded catalog, parsed once.
const Catalog& builtin_catalog();
std::vector<WitnessCatalogEntry> witness_catalog();

/// One spec per isomorphism type of order at most 15.
std::vector<GroupSpec> small_group_catalog();

/// small_group_catalog together with every group named in the witness
/// catalog, without repeats, sorted by order.
std::vector<GroupSpec> catalog_groups();

struct CheckResult {
  std::string item;   // i .. v
  std::string locus;
  bool passed = false;
  std::string detail;
};

struct CatalogVerification {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// (i) positive factorizations verify, (ii) non-factor entries fail both
/// exact-cover searches, (iii) the strong-CFS groups pass the decider,
/// (iv) subgroup eliminations carry their witness into the larger group,
/// (v) the case lists are complete.
CatalogVerification verify_paper(const Catalog& catalog = builtin_catalog());

}  // namespace subsetfactor
