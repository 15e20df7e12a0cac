#include "subsetfactor/factor.hpp"

#include <algorithm>
#include <unordered_map>

#include "subsetfactor/algebra.hpp"
#include "subsetfactor/error.hpp"

namespace subsetfactor {

std::string_view to_string(FactorClass c) {
  switch (c) {
    case FactorClass::two_sided: return "two_sided";
    case FactorClass::left_only: return "left_only";
    case FactorClass::right_only: return "right_only";
    case FactorClass::none: return "none";
  }
  return "?";
}

std::string_view to_string(EvidenceKind k) {
  switch (k) {
    case EvidenceKind::exhausted_search: return "exhausted_search";
    case EvidenceKind::index2_failure: return "index2_failure";
    case EvidenceKind::hole_failure: return "hole_failure";
    case EvidenceKind::all_translates_meet: return "all_translates_meet";
    case EvidenceKind::lagrange_obstruction: return "lagrange_obstruction";
  }
  return "?";
}

namespace {

void require_nonempty(const Group& g, const Subset& a) {
  if (a.parent_order() != g.order()) throw PreconditionError("subset does not belong to " + g.name());
  if (a.empty()) throw PreconditionError("subset must be nonempty");
}

Element tile_product(const Group& g, Side side, Element a, Element b) {
  return side == Side::left ? g.mul(a, b) : g.mul(b, a);
}

// Exact cover of G by the translates tile(b) = A*b (left) or b*A (right).
class TileSearch {
 public:
  TileSearch(const Group& g, const Subset& a, Side side, bool dedup)
      : g_(g), n_(g.order()), covered_(g.order()) {
    const auto members = a.members();
    tiles_.reserve(n_);
    std::vector<bool> representative(n_, true);
    std::unordered_map<Subset, Element, SubsetHash> seen;
    for (Element b = 0; b < n_; ++b) {
      Subset t(n_);
      for (Element x : members) t.insert(tile_product(g, side, x, b));
      if (dedup) {
        auto [it, inserted] = seen.try_emplace(t, b);
        representative[b] = inserted;
      }
      tiles_.push_back(std::move(t));
    }
    // x lies in tile(b) iff b = a^-1 x (left) or b = x a^-1 (right).
    by_cell_.resize(n_);
    for (Element x = 0; x < n_; ++x) {
      auto& list = by_cell_[x];
      for (Element y : members) {
        const Element b = side == Side::left ? g.mul(g.inv(y), x) : g.mul(x, g.inv(y));
        if (representative[b]) list.push_back(b);
      }
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  ComplementSearch run(bool normalize, bool enumerate_all) {
    enumerate_all_ = enumerate_all;
    result_ = {};
    covered_ = Subset(n_);
    chosen_.clear();
    if (normalize) {
      chosen_.push_back(g_.identity());
      covered_ |= tiles_[g_.identity()];
    }
    dfs();
    return result_;
  }

 private:
  // Returns true to stop the whole search.
  bool dfs() {
    ++result_.nodes;
    const Element x = covered_.first_missing();
    if (x == n_) {
      Subset b(n_, std::span<const Element>(chosen_));
      ++result_.solutions;
      if (!result_.complement || b < *result_.complement) result_.complement = std::move(b);
      return !enumerate_all_;
    }
    for (Element b : by_cell_[x]) {
      const Subset& t = tiles_[b];
      if (t.intersects(covered_)) continue;
      covered_ |= t;
      chosen_.push_back(b);
      const bool stop = dfs();
      chosen_.pop_back();
      covered_ -= t;
      if (stop) return true;
    }
    return false;
  }

  const Group& g_;
  std::size_t n_;
  std::vector<Subset> tiles_;
  std::vector<std::vector<Element>> by_cell_;
  Subset covered_;
  std::vector<Element> chosen_;
  bool enumerate_all_ = false;
  ComplementSearch result_;
};

}  // namespace

ComplementSearch search_complement(const Group& g, const Subset& a, Side side, bool enumerate_all) {
  require_nonempty(g, a);
  if (g.order() % a.size() != 0) return {};
  TileSearch search(g, a, side, /*dedup=*/!enumerate_all);
  return search.run(/*normalize=*/!enumerate_all, enumerate_all);
}

std::optional<Subset> find_left_complement(const Group& g, const Subset& a) {
  return search_complement(g, a, Side::left).complement;
}

std::optional<Subset> find_right_complement(const Group& g, const Subset& a) {
  return search_complement(g, a, Side::right).complement;
}

std::optional<Subset> find_same_complement(const Group& g, const Subset& a) {
  require_nonempty(g, a);
  const std::size_t n = g.order();
  if (n % a.size() != 0) return std::nullopt;
  const auto members = a.members();
  std::vector<Subset> left_tiles, right_tiles;
  for (Element b = 0; b < n; ++b) {
    left_tiles.push_back(translate(g, a, b, Side::right));
    right_tiles.push_back(translate(g, a, b, Side::left));
  }
  std::vector<std::vector<Element>> by_cell(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y : members) by_cell[x].push_back(g.mul(g.inv(y), x));
    std::sort(by_cell[x].begin(), by_cell[x].end());
  }
  Subset left_cov(n), right_cov(n);
  std::vector<Element> chosen;
  auto dfs = [&](auto&& self) -> bool {
    const Element x = left_cov.first_missing();
    if (x == n) return right_cov.first_missing() == n;
    for (Element b : by_cell[x]) {
      if (left_tiles[b].intersects(left_cov) || right_tiles[b].intersects(right_cov)) continue;
      left_cov |= left_tiles[b];
      right_cov |= right_tiles[b];
      chosen.push_back(b);
      if (self(self)) return true;
      chosen.pop_back();
      left_cov -= left_tiles[b];
      right_cov -= right_tiles[b];
    }
    return false;
  };
  if (!dfs(dfs)) return std::nullopt;
  return Subset(n, std::span<const Element>(chosen));
}

std::optional<Element> index2_criterion(const Group& g, const Subset& a, Side side) {
  require_nonempty(g, a);
  if (2 * a.size() != g.order()) throw PreconditionError("index-2 criterion needs |A| = |G|/2");
  const Subset rest = a.complement();
  for (Element x = 0; x < g.order(); ++x) {
    if (translate(g, a, x, side == Side::left ? Side::right : Side::left) == rest) return x;
  }
  return std::nullopt;
}

std::optional<Element> hole_criterion(const Group& g, const Subset& a, Side side) {
  require_nonempty(g, a);
  if (a.contains(g.identity())) throw PreconditionError("hole criterion needs 1 outside A");
  for (Element x = 0; x < g.order(); ++x) {
    const Subset t = translate(g, a, x, side == Side::left ? Side::right : Side::left);
    if (t.contains(g.identity()) && !t.intersects(a)) return x;
  }
  return std::nullopt;
}

bool all_translates_meet(const Group& g, const Subset& a) {
  require_nonempty(g, a);
  for (Element x = 0; x < g.order(); ++x) {
    if (!translate(g, a, x, Side::right).intersects(a)) return false;
    if (!translate(g, a, x, Side::left).intersects(a)) return false;
  }
  return true;
}

std::optional<Subgroup> lagrange_obstruction(const Group& g, const Subset& a) {
  require_nonempty(g, a);
  Subgroup h = generated_subgroup(g, a);
  if (h.order() % a.size() != 0) return h;
  return std::nullopt;
}

namespace {

struct SideOutcome {
  std::optional<Subset> complement;
  EvidenceKind why_not = EvidenceKind::exhausted_search;
  bool decided = false;
};

}  // namespace

FactorReport classify_factor(const Group& g, const Subset& a, const ClassifyOptions& options) {
  require_nonempty(g, a);
  FactorReport report;
  const std::size_t n = g.order();

  if (auto h = lagrange_obstruction(g, a)) {
    report.evidence = NonFactorEvidence{EvidenceKind::lagrange_obstruction, EvidenceKind::lagrange_obstruction,
                                        EvidenceKind::lagrange_obstruction, std::move(*h), 0};
    return report;
  }

  SideOutcome left, right;
  if (!a.contains(g.identity())) {
    if (all_translates_meet(g, a)) {
      report.evidence = NonFactorEvidence{EvidenceKind::all_translates_meet, EvidenceKind::all_translates_meet,
                                          EvidenceKind::all_translates_meet, std::nullopt, 0};
      return report;
    }
    for (auto [side, out] : {std::pair{Side::left, &left}, std::pair{Side::right, &right}}) {
      if (!hole_criterion(g, a, side)) {
        out->decided = true;
        out->why_not = EvidenceKind::hole_failure;
      }
    }
  }
  if (2 * a.size() == n) {
    for (auto [side, out] : {std::pair{Side::left, &left}, std::pair{Side::right, &right}}) {
      if (out->decided) continue;
      out->decided = true;
      if (auto x = index2_criterion(g, a, side)) {
        Subset b(n);
        b.insert(g.identity());
        b.insert(*x);
        out->complement = std::move(b);
      } else {
        out->why_not = EvidenceKind::index2_failure;
      }
    }
  }
  for (auto [side, out] : {std::pair{Side::left, &left}, std::pair{Side::right, &right}}) {
    if (out->decided) continue;
    auto r = search_complement(g, a, side);
    report.search_nodes += r.nodes;
    out->complement = std::move(r.complement);
    out->why_not = EvidenceKind::exhausted_search;
  }

  report.left_complement = left.complement;
  report.right_complement = right.complement;
  if (left.complement && right.complement) {
    report.classification = FactorClass::two_sided;
  } else if (left.complement) {
    report.classification = FactorClass::left_only;
  } else if (right.complement) {
    report.classification = FactorClass::right_only;
  } else {
    const EvidenceKind kind = left.why_not == right.why_not ? left.why_not : EvidenceKind::exhausted_search;
    report.evidence = NonFactorEvidence{kind, left.why_not, right.why_not, std::nullopt, report.search_nodes};
  }
  if (options.same_complement && report.is_factor()) report.same_complement = find_same_complement(g, a);
  return report;
}

bool is_factor(const Group& g, const Subset& a, std::uint64_t* nodes) {
  require_nonempty(g, a);
  const std::size_t n = g.order();
  if (n % a.size() != 0) return false;
  if (lagrange_obstruction(g, a)) return false;
  bool try_left = true, try_right = true;
  if (!a.contains(g.identity())) {
    try_left = hole_criterion(g, a, Side::left).has_value();
    try_right = hole_criterion(g, a, Side::right).has_value();
  }
  if (2 * a.size() == n) {
    return (try_left && index2_criterion(g, a, Side::left)) || (try_right && index2_criterion(g, a, Side::right));
  }
  for (auto [side, enabled] : {std::pair{Side::left, try_left}, std::pair{Side::right, try_right}}) {
    if (!enabled) continue;
    auto r = search_complement(g, a, side);
    if (nodes) *nodes += r.nodes;
    if (r.complement) return true;
  }
  return false;
}

Subset restrict_complement(const Group& g, const Subgroup& h, const Subset& a, const Subset& b) {
  require_nonempty(g, a);
  if (!is_subgroup(g, h.elements)) throw PreconditionError("H is not a subgroup");
  if (!a.is_subset_of(h.elements)) throw PreconditionError("A is not contained in H");
  if (!verify_direct_factorization(g, a, b)) throw PreconditionError("G = A*B does not hold");
  return b & h.elements;
}

Subset extend_complement(const Group& g, const Subgroup& h, const Subset& a, const Subset& b,
                         const Transversal& x) {
  require_nonempty(g, a);
  if (!is_subgroup(g, h.elements)) throw PreconditionError("H is not a subgroup");
  if (!a.is_subset_of(h.elements) || !b.is_subset_of(h.elements)) {
    throw PreconditionError("A and B must lie in H");
  }
  if (a.size() * b.size() != h.order() || !(product(g, a, b).product == h.elements)) {
    throw PreconditionError("H = A*B does not hold");
  }
  if (x.side != Side::right || !(x.subgroup.elements == h.elements) ||
      !verify_direct_factorization(g, h.elements, x.reps)) {
    throw PreconditionError("X is not a right transversal of H");
  }
  return product(g, b, x.reps).product;
}

// ---------------------------------------------------------------------------
// Independent certificate checks. Plain vectors and direct table lookups only.

namespace {

using Flags = std::vector<char>;

Flags to_flags(const Subset& a) {
  Flags f(a.parent_order(), 0);
  for (Element x = 0; x < a.parent_order(); ++x) f[x] = a.contains(x) ? 1 : 0;
  return f;
}

std::size_t naive_closure_size(const Group& g, const Flags& a) {
  Flags in(g.order(), 0);
  in[g.identity()] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (Element x = 0; x < g.order(); ++x) {
      if (!in[x]) continue;
      for (Element y = 0; y < g.order(); ++y) {
        if (a[y] && !in[g.mul(x, y)]) {
          in[g.mul(x, y)] = 1;
          grew = true;
        }
      }
    }
  }
  return static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
}

// Translate of A by x used as a tile on `side` (A*x for left factors).
Flags naive_tile(const Group& g, const Flags& a, Side side, Element x) {
  Flags t(g.order(), 0);
  for (Element y = 0; y < g.order(); ++y) {
    if (a[y]) t[side == Side::left ? g.mul(y, x) : g.mul(x, y)] = 1;
  }
  return t;
}

bool naive_disjoint(const Flags& s, const Flags& t) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] && t[i]) return false;
  }
  return true;
}

bool naive_cover_exists(const Group& g, const Flags& a, Side side, Flags& covered) {
  const auto it = std::find(covered.begin(), covered.end(), 0);
  if (it == covered.end()) return true;
  const auto cell = static_cast<Element>(it - covered.begin());
  for (Element x = 0; x < g.order(); ++x) {
    const Flags t = naive_tile(g, a, side, x);
    if (!t[cell] || !naive_disjoint(t, covered)) continue;
    for (std::size_t i = 0; i < t.size(); ++i) covered[i] |= t[i];
    const bool ok = naive_cover_exists(g, a, side, covered);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i]) covered[i] = 0;
    }
    if (ok) return true;
  }
  return false;
}

bool recheck_side(const Group& g, const Flags& a, std::size_t size, EvidenceKind kind, Side side) {
  const std::size_t n = g.order();
  switch (kind) {
    case EvidenceKind::lagrange_obstruction:
      return naive_closure_size(g, a) % size != 0;
    case EvidenceKind::all_translates_meet:
      if (a[g.identity()]) return false;
      for (Element x = 0; x < n; ++x) {
        if (naive_disjoint(a, naive_tile(g, a, Side::left, x)) || naive_disjoint(a, naive_tile(g, a, Side::right, x))) {
          return false;
        }
      }
      return true;
    case EvidenceKind::hole_failure:
      if (a[g.identity()]) return false;
      for (Element x = 0; x < n; ++x) {
        const Flags t = naive_tile(g, a, side, x);
        if (t[g.identity()] && naive_disjoint(a, t)) return false;
      }
      return true;
    case EvidenceKind::index2_failure:
      if (2 * size != n) return false;
      for (Element x = 0; x < n; ++x) {
        const Flags t = naive_tile(g, a, side, x);
        bool is_rest = true;
        for (Element y = 0; y < n && is_rest; ++y) is_rest = (t[y] != 0) == (a[y] == 0);
        if (is_rest) return false;
      }
      return true;
    case EvidenceKind::exhausted_search: {
      if (n % size != 0) return true;
      Flags covered(n, 0);
      return !naive_cover_exists(g, a, side, covered);
    }
  }
  return false;
}

}  // namespace

bool recheck_evidence(const Group& g, const Subset& a, const NonFactorEvidence& evidence) {
  require_nonempty(g, a);
  const Flags flags = to_flags(a);
  return recheck_side(g, flags, a.size(), evidence.left, Side::left) &&
         recheck_side(g, flags, a.size(), evidence.right, Side::right);
}

}  // namespace subsetfactor
