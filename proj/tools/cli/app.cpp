#include "app.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "subsetfactor/catalog.hpp"
#include "subsetfactor/cfs.hpp"
#include "subsetfactor/error.hpp"
#include "subsetfactor/factor.hpp"
#include "subsetfactor/geometry.hpp"

namespace subsetfactor::cli {

namespace {

using nlohmann::json;

struct Outcome {
  ReportEnvelope env;
  int code = kExitHolds;
};

Subset read_subset(const Group& g, const CommandRequest& r) {
  if (r.set_words && r.set_file) throw PreconditionError("give either --set or --set-file, not both");
  if (r.set_words) return parse_subset(g, *r.set_words);
  if (r.set_file) {
    const SubsetFile file = load_subset_file(*r.set_file);
    if (!file.group.empty() && parse_group_spec(file.group) != parse_group_spec(r.group)) {
      throw PreconditionError("subset file is for " + file.group + ", not " + r.group);
    }
    return parse_subset(g, file.elements);
  }
  throw PreconditionError(r.command + " needs --set or --set-file");
}

std::size_t require_size(const CommandRequest& r) {
  if (!r.size) throw PreconditionError(r.command + " needs --size");
  return *r.size;
}

json subsets_json(const Group& g, const std::vector<Subset>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(subset_names(g, s));
  return out;
}

Outcome cmd_info(const Group& g) {
  Outcome o;
  o.env.verdict = "ok";
  o.env.details = group_to_json(g);
  o.env.details["abelian"] = g.is_abelian();
  o.env.details["standard_generators"] = g.generator_names();
  return o;
}

Outcome cmd_factor(const Group& g, const CommandRequest& r) {
  Outcome o;
  const Subset a = read_subset(g, r);
  o.env.details["set"] = subset_names(g, a);
  o.env.details["side"] = r.side == SideFlag::left ? "left" : r.side == SideFlag::right ? "right"
                          : r.side == SideFlag::same                                   ? "same"
                                                                                       : "both";
  if (r.side == SideFlag::same) {
    const auto b = find_same_complement(g, a);
    o.env.verdict = b ? "same_complement" : "no_same_complement";
    if (b) o.env.complement = subset_names(g, *b);
    o.code = b ? kExitHolds : kExitFails;
    return o;
  }
  if (r.side == SideFlag::left || r.side == SideFlag::right) {
    const Side side = r.side == SideFlag::left ? Side::left : Side::right;
    const ComplementSearch s = search_complement(g, a, side, r.all);
    o.env.verdict = s.complement ? (side == Side::left ? "left_factor" : "right_factor") : "not_a_factor";
    if (s.complement) o.env.complement = subset_names(g, *s.complement);
    o.env.counters["search_nodes"] = s.nodes;
    if (r.all) o.env.counters["complements"] = s.solutions;
    o.code = s.complement ? kExitHolds : kExitFails;
    return o;
  }
  const FactorReport rep = classify_factor(g, a);
  o.env.verdict = std::string(to_string(rep.classification));
  o.env.counters["search_nodes"] = rep.search_nodes;
  if (rep.left_complement) o.env.details["left_complement"] = subset_names(g, *rep.left_complement);
  if (rep.right_complement) o.env.details["right_complement"] = subset_names(g, *rep.right_complement);
  if (rep.left_complement) {
    o.env.complement = subset_names(g, *rep.left_complement);
  } else if (rep.right_complement) {
    o.env.complement = subset_names(g, *rep.right_complement);
  }
  if (rep.evidence) {
    o.env.witness = subset_names(g, a);
    o.env.details["evidence"] = {{"kind", to_string(rep.evidence->kind)},
                                 {"left", to_string(rep.evidence->left)},
                                 {"right", to_string(rep.evidence->right)}};
  }
  if (r.all) {
    const auto left = search_complement(g, a, Side::left, true);
    const auto right = search_complement(g, a, Side::right, true);
    o.env.counters["left_complements"] = left.solutions;
    o.env.counters["right_complements"] = right.solutions;
  }
  o.code = rep.is_factor() ? kExitHolds : kExitFails;
  return o;
}

Outcome cmd_same(const Group& g, const CommandRequest& r) {
  CommandRequest copy = r;
  copy.side = SideFlag::same;
  return cmd_factor(g, copy);
}

Outcome cmd_strong(const Group& g, const CommandRequest& r) {
  Outcome o;
  StrongCfsOptions opts;
  opts.level = r.canon;
  opts.threads = r.threads;
  opts.budget = r.budget;
  const StrongCfsReport rep = decide_strong_cfs(g, opts);
  o.env.counters["subsets_examined"] = rep.subsets_examined;
  o.env.details["canon_level"] = to_string(rep.canon_level);
  o.env.details["divisors_checked"] = rep.divisors_checked;
  if (rep.inconclusive) {
    o.env.verdict = "inconclusive";
    o.code = kExitInconclusive;
  } else if (rep.holds) {
    o.env.verdict = "holds";
  } else {
    o.env.verdict = "fails";
    o.env.witness = subset_names(g, *rep.witness);
    o.code = kExitFails;
  }
  return o;
}

Outcome cmd_cfs(const Group& g) {
  Outcome o;
  const CfsReport rep = decide_cfs(g);
  json per = json::array();
  for (const auto& [d, entry] : rep.per_divisor) {
    per.push_back({{"d", d},
                   {"route", entry.route},
                   {"left_factor", subset_names(g, entry.left.factor)},
                   {"left_complement", subset_names(g, entry.left.complement)},
                   {"right_factor", subset_names(g, entry.right.factor)},
                   {"right_complement", subset_names(g, entry.right.complement)}});
  }
  o.env.details["per_divisor"] = per;
  if (rep.failed_divisor) o.env.details["failed_divisor"] = *rep.failed_divisor;
  o.env.verdict = rep.holds ? "holds" : "fails";
  o.code = rep.holds ? kExitHolds : kExitFails;
  return o;
}

Outcome cmd_lagrange(const Group& g, const CommandRequest& r) {
  Outcome o;
  if (r.set_words || r.set_file) {
    const Subset a = read_subset(g, r);
    const bool lagrange = is_lagrange(g, a);
    o.env.verdict = lagrange ? "lagrange" : "not_lagrange";
    o.env.details["set"] = subset_names(g, a);
    o.code = lagrange ? kExitHolds : kExitFails;
    return o;
  }
  const std::size_t d = require_size(r);
  const auto reps = enumerate_lagrange_subsets(g, d, r.canon);
  o.env.verdict = "ok";
  o.env.counters["representatives"] = reps.size();
  o.env.details["canon_level"] = to_string(r.canon);
  o.env.details["size"] = d;
  o.env.details["subsets"] = subsets_json(g, reps);
  return o;
}

Outcome cmd_ball(const Group& g, const CommandRequest& r) {
  Outcome o;
  const auto gens = GeneratingSet::standard(g);
  const Ball b = ball(gens, r.radius.value_or(2));
  o.env.verdict = "ok";
  o.env.counters["size"] = b.members.size();
  o.env.details["radius"] = b.radius;
  o.env.details["generators"] = g.generator_names();
  o.env.details["members"] = subset_names(g, b.members);
  return o;
}

Outcome cmd_tilde(const Group& g, const CommandRequest& r) {
  Outcome o;
  Subset tilde(g.order());
  if (r.set_words || r.set_file) {
    tilde = read_subset(g, r);
  } else {
    const auto gens = GeneratingSet::standard(g);
    const auto built = construct_tilde(gens, require_size(r));
    if (!built) {
      o.env.verdict = "not_applicable";
      o.code = kExitFails;
      return o;
    }
    tilde = *built;
    o.env.details["connected"] = is_connected_subset(gens, tilde);
  }
  const bool one = tilde_condition(g, tilde);
  const bool two = tilde_condition_two_sided(g, tilde);
  o.env.details["tilde"] = subset_names(g, tilde);
  o.env.details["one_sided"] = one;
  o.env.details["two_sided"] = two;
  o.env.verdict = two ? "two_sided" : one ? "one_sided" : "fails";
  if (two) {
    Subset a = tilde;
    a.erase(g.identity());
    o.env.witness = subset_names(g, a);
  }
  o.code = one ? kExitHolds : kExitFails;
  return o;
}

Outcome cmd_verify_paper() {
  Outcome o;
  const CatalogVerification rep = verify_paper();
  json checks = json::array();
  std::size_t failed = 0;
  for (const auto& c : rep.checks) {
    json j{{"item", c.item}, {"locus", c.locus}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
    if (!c.passed) ++failed;
  }
  o.env.details["checks"] = checks;
  o.env.counters["checks"] = rep.checks.size();
  o.env.counters["failed"] = failed;
  o.env.verdict = rep.all_passed() ? "passed" : "failed";
  o.code = rep.all_passed() ? kExitHolds : kExitFails;
  return o;
}

Outcome cmd_catalog(const CommandRequest& r) {
  Outcome o;
  json doc = to_json(builtin_catalog());
  if (!r.group.empty()) {
    const std::string want = parse_group_spec(r.group).to_string();
    json kept = json::array();
    for (const auto& e : doc["entries"]) {
      if (parse_group_spec(e["group"].get<std::string>()).to_string() == want) kept.push_back(e);
    }
    doc["entries"] = kept;
  }
  o.env.counters["entries"] = doc["entries"].size();
  o.env.details = std::move(doc);
  o.env.verdict = "ok";
  return o;
}

}  // namespace

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SUBSETFACTOR_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultClassifyBudget;
}

RunResult run(const CommandRequest& request) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  CommandRequest r = request;
  if (r.budget == 0) r.budget = default_budget();
  try {
    Outcome o;
    if (r.command == "catalog") {
      o = cmd_catalog(r);
    } else if (r.command == "verify-paper") {
      o = cmd_verify_paper();
    } else {
      if (r.group.empty()) throw PreconditionError(r.command + " needs a group");
      const Group g = build_group(parse_group_spec(r.group));
      if (r.command == "info") {
        o = cmd_info(g);
      } else if (r.command == "factor") {
        o = cmd_factor(g, r);
      } else if (r.command == "same-complement") {
        o = cmd_same(g, r);
      } else if (r.command == "strong-cfs") {
        o = cmd_strong(g, r);
      } else if (r.command == "cfs") {
        o = cmd_cfs(g);
      } else if (r.command == "lagrange") {
        o = cmd_lagrange(g, r);
      } else if (r.command == "ball") {
        o = cmd_ball(g, r);
      } else if (r.command == "tilde") {
        o = cmd_tilde(g, r);
      } else {
        throw PreconditionError("unknown command '" + r.command + "'");
      }
      o.env.group = g.name();
      o.env.group_order = g.order();
    }
    result.envelope = std::move(o.env);
    result.exit_code = o.code;
  } catch (const CapExceeded& ex) {
    result.envelope.verdict = "inconclusive";
    result.exit_code = kExitInconclusive;
    result.message = ex.what();
  } catch (const ParseError& ex) {
    result.envelope.verdict = "error";
    result.exit_code = kExitUsage;
    result.message = std::string(ex.what()) + " (at offset " + std::to_string(ex.position()) + ")";
  } catch (const std::exception& ex) {
    result.envelope.verdict = "error";
    result.exit_code = kExitUsage;
    result.message = ex.what();
  }
  result.envelope.command = r.command;
  if (!result.message.empty()) result.envelope.details["error"] = result.message;
  result.envelope.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string render_text(const ReportEnvelope& e) {
  std::ostringstream out;
  out << e.command;
  if (!e.group.empty()) out << " " << e.group << " (order " << e.group_order << ")";
  out << ": " << e.verdict << "\n";
  auto list = [&](const char* label, const std::vector<std::string>& words) {
    out << "  " << label << ": {";
    for (std::size_t i = 0; i < words.size(); ++i) out << (i ? ", " : "") << words[i];
    out << "}\n";
  };
  if (e.witness) list("witness", *e.witness);
  if (e.complement) list("complement", *e.complement);
  for (const auto& [k, v] : e.counters) out << "  " << k << ": " << v << "\n";
  if (e.command == "verify-paper" && e.details.contains("checks")) {
    for (const auto& c : e.details["checks"]) {
      out << "  [" << (c["passed"].get<bool>() ? "pass" : "FAIL") << "] (" << c["item"].get<std::string>() << ") "
          << c["locus"].get<std::string>();
      if (c.contains("detail")) out << ": " << c["detail"].get<std::string>();
      out << "\n";
    }
  } else if (e.command == "cfs" && e.details.contains("per_divisor")) {
    for (const auto& d : e.details["per_divisor"]) {
      out << "  d=" << d["d"] << " via " << d["route"].get<std::string>() << "\n";
    }
  } else if (e.details.contains("members")) {
    out << "  members: " << e.details["members"].dump() << "\n";
  } else if (e.details.contains("subsets")) {
    for (const auto& s : e.details["subsets"]) out << "  " << s.dump() << "\n";
  } else if (e.command == "info" && e.details.contains("elements")) {
    out << "  elements: " << e.details["elements"].dump() << "\n";
    out << "  generators: " << e.details["standard_generators"].dump() << "\n";
  } else if (e.details.contains("tilde")) {
    out << "  tilde: " << e.details["tilde"].dump() << "\n";
  }
  if (e.details.contains("error")) out << "  error: " << e.details["error"].get<std::string>() << "\n";
  return out.str();
}

}  // namespace subsetfactor::cli
