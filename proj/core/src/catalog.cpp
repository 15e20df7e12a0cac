#include "subsetfactor/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "subsetfactor/algebra.hpp"
#include "subsetfactor/cfs.hpp"
#include "subsetfactor/error.hpp"
#include "subsetfactor/factor.hpp"
#include "subsetfactor/notation.hpp"

namespace subsetfactor {

namespace detail {
extern const std::string_view kCatalogJson;
}

std::string_view to_string(Claim c) {
  return c == Claim::positive_factorization ? "positive_factorization" : "non_factor";
}

Catalog parse_catalog(const nlohmann::json& doc) {
  Catalog out;
  for (const auto& e : doc.at("entries")) {
    WitnessCatalogEntry entry;
    entry.group = e.at("group").get<std::string>();
    entry.elements = e.at("elements").get<std::vector<std::string>>();
    const auto claim = e.at("claim").get<std::string>();
    if (claim == "positive_factorization") {
      entry.claim = Claim::positive_factorization;
      entry.complement = e.at("complement").get<std::vector<std::string>>();
    } else if (claim == "non_factor") {
      entry.claim = Claim::non_factor;
    } else {
      throw Error("unknown catalog claim '" + claim + "'");
    }
    entry.locus = e.value("locus", "");
    entry.certificate = e.value("certificate", "");
    entry.note = e.value("note", "");
    out.entries.push_back(std::move(entry));
  }
  for (const auto& e : doc.value("eliminations", nlohmann::json::array())) {
    EliminationRoute r;
    r.name = e.at("name").get<std::string>();
    r.group = e.at("group").get<std::string>();
    r.route = e.at("route").get<std::string>();
    r.via = e.value("via", "");
    r.images = e.value("images", std::vector<std::string>{});
    r.note = e.value("note", "");
    out.eliminations.push_back(std::move(r));
  }
  out.strong_cfs = doc.value("strong_cfs", std::vector<std::string>{});
  return out;
}

nlohmann::json to_json(const Catalog& catalog) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : catalog.entries) {
    nlohmann::json j{{"group", e.group}, {"elements", e.elements}, {"claim", to_string(e.claim)}, {"locus", e.locus}};
    if (e.claim == Claim::positive_factorization) j["complement"] = e.complement;
    if (!e.certificate.empty()) j["certificate"] = e.certificate;
    if (!e.note.empty()) j["note"] = e.note;
    entries.push_back(std::move(j));
  }
  nlohmann::json routes = nlohmann::json::array();
  for (const auto& r : catalog.eliminations) {
    nlohmann::json j{{"name", r.name}, {"group", r.group}, {"route", r.route}};
    if (!r.via.empty()) {
      j["via"] = r.via;
      j["images"] = r.images;
    }
    if (!r.note.empty()) j["note"] = r.note;
    routes.push_back(std::move(j));
  }
  return {{"entries", entries}, {"eliminations", routes}, {"strong_cfs", catalog.strong_cfs}};
}

const Catalog& builtin_catalog() {
  static const Catalog catalog = parse_catalog(nlohmann::json::parse(detail::kCatalogJson));
  return catalog;
}

std::vector<WitnessCatalogEntry> witness_catalog() { return builtin_catalog().entries; }

std::vector<GroupSpec> small_group_catalog() {
  static const char* const kSpecs[] = {
      "C1",  "C2",    "C3",   "C4",       "C5",        "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14",
      "C15", "C2xC2", "C4xC2", "C2xC2xC2", "C3xC3",    "D4", "Q8", "S3", "D5", "D6",  "D7",  "A4",  "sd(3,4,2)",
      "C6xC2",
  };
  std::vector<GroupSpec> out;
  for (const char* s : kSpecs) out.push_back(parse_group_spec(s));
  return out;
}

std::vector<GroupSpec> catalog_groups() {
  std::vector<std::pair<std::size_t, GroupSpec>> found;
  std::set<std::string> seen;
  auto add = [&](const GroupSpec& spec) {
    if (!seen.insert(spec.to_string()).second) return;
    found.emplace_back(build_group(spec).order(), spec);
  };
  for (const auto& spec : small_group_catalog()) add(spec);
  for (const auto& e : builtin_catalog().entries) add(parse_group_spec(e.group));
  for (const auto& r : builtin_catalog().eliminations) add(parse_group_spec(r.group));
  std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<GroupSpec> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

bool CatalogVerification::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

class GroupCache {
 public:
  const Group& get(const std::string& spec) {
    auto it = groups_.find(spec);
    if (it == groups_.end()) it = groups_.emplace(spec, build_group(parse_group_spec(spec))).first;
    return it->second;
  }

 private:
  std::map<std::string, Group> groups_;
};

std::string format_list(const std::vector<std::string>& words) {
  std::string out = "{";
  for (std::size_t i = 0; i < words.size(); ++i) out += (i ? "," : "") + words[i];
  return out + "}";
}

std::string entry_locus(const WitnessCatalogEntry& e) {
  std::string out = e.group + " " + format_list(e.elements);
  if (!e.locus.empty()) out += " [" + e.locus + "]";
  return out;
}

template <typename Fn>
void run_check(CatalogVerification& report, std::string item, std::string locus, Fn&& fn) {
  CheckResult r{std::move(item), std::move(locus), false, {}};
  try {
    r.detail = fn();
    r.passed = r.detail.empty();
  } catch (const std::exception& ex) {
    r.detail = ex.what();
  }
  report.checks.push_back(std::move(r));
}

std::string check_non_factor(const Group& g, const Subset& a) {
  if (a.size() == 0 || g.order() % a.size() != 0) return "not a Lagrange subset";
  if (find_left_complement(g, a)) return "has a left complement";
  if (find_right_complement(g, a)) return "has a right complement";
  const FactorReport report = classify_factor(g, a);
  if (report.is_factor()) return "classified as a factor";
  if (!recheck_evidence(g, a, *report.evidence)) return "certificate does not recheck";
  return {};
}

}  // namespace

CatalogVerification verify_paper(const Catalog& catalog) {
  CatalogVerification report;
  GroupCache cache;

  for (const auto& e : catalog.entries) {
    if (e.claim != Claim::positive_factorization) continue;
    run_check(report, "i", entry_locus(e), [&]() -> std::string {
      const Group& g = cache.get(e.group);
      const Subset a = parse_subset(g, e.elements);
      const Subset b = parse_subset(g, e.complement);
      if (!verify_direct_factorization(g, a, b)) return "A*B is not a direct factorization";
      return {};
    });
  }

  std::map<std::string, Subset> witnesses;
  for (const auto& e : catalog.entries) {
    if (e.claim != Claim::non_factor) continue;
    run_check(report, "ii", entry_locus(e), [&]() -> std::string {
      const Group& g = cache.get(e.group);
      const Subset a = parse_subset(g, e.elements);
      witnesses.insert_or_assign(e.group, a);
      return check_non_factor(g, a);
    });
  }

  for (const auto& name : catalog.strong_cfs) {
    run_check(report, "iii", name, [&]() -> std::string {
      const StrongCfsReport r = decide_strong_cfs(cache.get(name));
      if (r.inconclusive) return "budget exhausted";
      if (!r.holds) return "non-factor found: " + format_subset(cache.get(name), *r.witness);
      return {};
    });
  }

  for (const auto& r : catalog.eliminations) {
    run_check(report, "iv", r.name + " (" + r.route + ")", [&]() -> std::string {
      const Group& g = cache.get(r.group);
      if (r.route == "witness") {
        if (!witnesses.count(r.group)) return "no witness entry for " + r.group;
        return {};
      }
      if (r.route != "subgroup") return "unknown route '" + r.route + "'";
      const Group& h = cache.get(r.via);
      auto it = witnesses.find(r.via);
      if (it == witnesses.end()) return "no witness entry for " + r.via;
      std::vector<Element> images;
      for (const auto& w : r.images) images.push_back(parse_element_word(g, w));
      const auto phi = extend_homomorphism(h, g, images);
      if (!phi) return "generator images do not define a homomorphism";
      if (std::set<Element>(phi->begin(), phi->end()).size() != h.order()) return "homomorphism is not injective";
      Subset lifted(g.order());
      it->second.for_each([&](Element x) { lifted.insert((*phi)[x]); });
      const std::string failure = check_non_factor(g, lifted);
      return failure.empty() ? std::string{} : "embedded witness: " + failure;
    });
  }

  // (v) The listed cases are exactly the sets containing 1 of the given size.
  const std::pair<const char*, std::size_t> lists[] = {{"C2xC2xC2", 2}, {"C2xC2xC2", 4}, {"C3xC3", 3}};
  for (const auto& [spec, d] : lists) {
    run_check(report, "v", std::string(spec) + " size " + std::to_string(d), [&]() -> std::string {
      const Group& g = cache.get(spec);
      std::set<Subset> listed;
      std::size_t rows = 0;
      for (const auto& e : catalog.entries) {
        if (e.claim != Claim::positive_factorization || e.group != spec || e.elements.size() != d) continue;
        ++rows;
        listed.insert(parse_subset(g, e.elements));
      }
      const auto all = enumerate_lagrange_subsets(g, d, CanonLevel::none);
      const std::uint64_t expected = lagrange_candidate_count(g.order(), d);
      if (rows != expected) return std::to_string(rows) + " listed, expected " + std::to_string(expected);
      if (listed.size() != rows) return "repeated sets in the list";
      if (listed != std::set<Subset>(all.begin(), all.end())) return "list differs from the enumeration";
      return {};
    });
  }
  return report;
}

}  // namespace subsetfactor
