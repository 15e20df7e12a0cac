#include "subsetfactor/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "subsetfactor/error.hpp"

namespace subsetfactor {

std::string_view to_string(Side side) { return side == Side::left ? "left" : "right"; }

// ---------------------------------------------------------------------------
// Permutations

bool Permutation::is_identity() const noexcept {
  for (std::uint32_t x = 0; x < images.size(); ++x) {
    if (images[x] != x) return false;
  }
  return true;
}

Permutation Permutation::then(const Permutation& q) const {
  const std::size_t deg = std::max(degree(), q.degree());
  Permutation out;
  out.images.resize(deg);
  for (std::uint32_t x = 0; x < deg; ++x) {
    const std::uint32_t px = x < degree() ? images[x] : x;
    out.images[x] = px < q.degree() ? q.images[px] : px;
  }
  return out;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(images.size(), false);
  for (std::uint32_t start = 0; start < images.size(); ++start) {
    if (seen[start] || images[start] == start) continue;
    out += '(';
    std::uint32_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ',';
      out += std::to_string(x + 1);
      first = false;
      x = images[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation permutation_from_cycles(const std::vector<std::vector<std::uint32_t>>& cycles,
                                    std::size_t degree) {
  Permutation p;
  p.images.resize(degree);
  std::iota(p.images.begin(), p.images.end(), 0U);
  std::vector<bool> moved(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::uint32_t from = cycle[i];
      const std::uint32_t to = cycle[(i + 1) % cycle.size()];
      if (from == 0 || from > degree || to == 0 || to > degree) {
        throw InvalidGroup("cycle point out of range 1.." + std::to_string(degree));
      }
      if (moved[from - 1]) throw InvalidGroup("point " + std::to_string(from) + " repeated in cycles");
      moved[from - 1] = true;
      p.images[from - 1] = to - 1;
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Table validation

std::optional<TableViolation> check_table(std::size_t n, std::span<const Element> table) {
  using K = TableViolation::Kind;
  if (n == 0 || table.size() != n * n) {
    return TableViolation{K::shape, "table must be a non-empty square array", {}};
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (table[i] >= n) {
      return TableViolation{K::range, "entry out of range in row " + std::to_string(i / n),
                            {static_cast<Element>(i / n), static_cast<Element>(i % n)}};
    }
  }
  auto at = [&](std::size_t x, std::size_t y) { return table[x * n + y]; };
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t r = 0; r < n; ++r) {
    ++stamp;
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[at(r, c)] == stamp) {
        return TableViolation{K::latin_row, "row " + std::to_string(r) + " is not a permutation",
                              {static_cast<Element>(r)}};
      }
      seen[at(r, c)] = stamp;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    ++stamp;
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[at(r, c)] == stamp) {
        return TableViolation{K::latin_column, "column " + std::to_string(c) + " is not a permutation",
                              {static_cast<Element>(c)}};
      }
      seen[at(r, c)] = stamp;
    }
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = at(e, j) == j && at(j, e) == j;
    if (ok) identity = e;
  }
  if (!identity) return TableViolation{K::no_identity, "no two-sided identity", {}};

  auto assoc_fails = [&](std::size_t x, std::size_t y, std::size_t z) {
    return at(at(x, y), z) != at(x, at(y, z));
  };
  auto violation = [&](std::size_t x, std::size_t y, std::size_t z) {
    return TableViolation{K::associativity,
                          "associativity fails for (" + std::to_string(x) + ", " + std::to_string(y) +
                              ", " + std::to_string(z) + ")",
                          {static_cast<Element>(x), static_cast<Element>(y), static_cast<Element>(z)}};
  };
  if (n <= kFullAssociativityCheckLimit) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (assoc_fails(x, y, z)) return violation(x, y, z);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t trial = 0; trial < 10 * n * n; ++trial) {
      const auto x = pick(rng), y = pick(rng), z = pick(rng);
      if (assoc_fails(x, y, z)) return violation(x, y, z);
    }
  }
  // Latin rows plus an identity give right inverses; with associativity they
  // are two-sided, so nothing further can fail.
  return std::nullopt;
}

namespace {

std::vector<Element> greedy_generators(std::size_t n, auto&& mul, auto&& order_of, Element identity) {
  std::vector<Element> gens;
  Subset closure(n);
  closure.insert(identity);
  std::vector<Element> members{identity};
  while (members.size() < n) {
    Element best = identity;
    std::size_t best_order = 0;
    for (Element x = 0; x < n; ++x) {
      if (closure.contains(x)) continue;
      const std::size_t o = order_of(x);
      if (o > best_order) {
        best = x;
        best_order = o;
      }
    }
    gens.push_back(best);
    // Re-close from scratch with the enlarged generating list.
    closure = Subset(n);
    closure.insert(identity);
    members.assign(1, identity);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Element g : gens) {
        const Element y = mul(members[i], g);
        if (!closure.contains(y)) {
          closure.insert(y);
          members.push_back(y);
        }
      }
    }
  }
  return gens;
}

}  // namespace

Group::Group(std::string name, std::size_t order, std::vector<Element> table,
             std::vector<std::string> element_names, std::vector<Symbol> symbols,
             std::vector<Element> generators)
    : name_(std::move(name)),
      order_(order),
      table_(std::move(table)),
      names_(std::move(element_names)),
      symbols_(std::move(symbols)),
      generators_(std::move(generators)) {
  if (order_ > kMaxGroupOrder) throw CapExceeded("group order " + std::to_string(order_) + " exceeds cap");
  if (auto v = check_table(order_, table_)) throw InvalidGroup(v->message);
  for (Element e = 0; e < order_; ++e) {
    if (mul(e, 0) == 0 && mul(0, e) == 0) {
      identity_ = e;
      break;
    }
  }
  inverse_.resize(order_);
  for (Element x = 0; x < order_; ++x) {
    for (Element y = 0; y < order_; ++y) {
      if (mul(x, y) == identity_) {
        inverse_[x] = y;
        break;
      }
    }
  }
  if (names_.empty()) {
    for (Element x = 0; x < order_; ++x) names_.push_back(x == identity_ ? "1" : "e" + std::to_string(x));
  }
  if (names_.size() != order_) throw InvalidGroup("element name count does not match order");
  {
    std::unordered_set<std::string> distinct(names_.begin(), names_.end());
    if (distinct.size() != order_) throw InvalidGroup("element names are not distinct");
  }
  for (const auto& s : symbols_) {
    if (s.element >= order_) throw InvalidGroup("symbol '" + s.name + "' out of range");
  }
  for (Element g : generators_) {
    if (g >= order_) throw InvalidGroup("generator index out of range");
  }
  if (generators_.empty() && order_ > 1) {
    generators_ = greedy_generators(
        order_, [this](Element x, Element y) { return mul(x, y); },
        [this](Element x) { return element_order(x); }, identity_);
  }
}

Element Group::pow(Element x, long long e) const noexcept {
  Element base = e < 0 ? inv(x) : x;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
  k %= element_order(x);
  Element acc = identity_;
  while (k > 0) {
    if (k & 1U) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return acc;
}

std::optional<Element> Group::find_element(std::string_view name) const {
  for (Element x = 0; x < order_; ++x) {
    if (names_[x] == name) return x;
  }
  return std::nullopt;
}

std::optional<Element> Group::symbol(std::string_view name) const {
  for (const auto& s : symbols_) {
    if (s.name == name) return s.element;
  }
  return std::nullopt;
}

std::vector<std::string> Group::generator_names() const {
  std::vector<std::string> out;
  for (Element g : generators_) {
    auto it = std::find_if(symbols_.begin(), symbols_.end(), [&](const Symbol& s) { return s.element == g; });
    out.push_back(it != symbols_.end() ? it->name : names_[g]);
  }
  return out;
}

std::size_t Group::element_order(Element x) const noexcept {
  std::size_t k = 1;
  for (Element y = x; y != identity_; y = mul(y, x)) ++k;
  return k;
}

bool Group::is_abelian() const noexcept {
  for (Element x = 0; x < order_; ++x)
    for (Element y = x + 1; y < order_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

Group validate_table(const std::vector<std::vector<Element>>& table, std::string name) {
  const std::size_t n = table.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidGroup("table must be a non-empty square array");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  if (auto v = check_table(n, flat)) throw InvalidGroup(v->message);
  return Group(std::move(name), n, std::move(flat), {}, {}, {});
}

// ---------------------------------------------------------------------------
// Permutation closure

namespace {

struct PermHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

std::string letter_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "g" + std::to_string(i);
}

}  // namespace

Group close_permutations(std::span<const Permutation> generators, std::size_t cap, std::string name) {
  std::size_t degree = 1;
  for (const auto& g : generators) degree = std::max(degree, g.degree());
  auto widen = [&](const Permutation& p) {
    Permutation q = p;
    for (std::size_t x = q.images.size(); x < degree; ++x) q.images.push_back(static_cast<std::uint32_t>(x));
    return q;
  };
  std::vector<Permutation> gens;
  for (const auto& g : generators) gens.push_back(widen(g));

  Permutation id;
  id.images.resize(degree);
  std::iota(id.images.begin(), id.images.end(), 0U);

  std::vector<Permutation> elems{id};
  std::unordered_map<std::vector<std::uint32_t>, Element, PermHash> index{{id.images, 0}};
  // right_mult[i][g] = index of elems[i] * gens[g]
  std::vector<std::vector<Element>> right_mult;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    right_mult.emplace_back();
    for (const auto& g : gens) {
      Permutation y = elems[i].then(g);
      auto [it, inserted] = index.try_emplace(y.images, static_cast<Element>(elems.size()));
      if (inserted) {
        if (elems.size() >= cap) {
          throw CapExceeded("permutation closure exceeds " + std::to_string(cap) + " elements");
        }
        elems.push_back(std::move(y));
      }
      right_mult[i].push_back(it->second);
    }
  }

  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      table[x * n + y] = index.at(elems[x].then(elems[y]).images);
    }
  }
  std::vector<std::string> names;
  for (const auto& p : elems) names.push_back(p.cycle_string());
  std::vector<Symbol> symbols;
  std::vector<Element> gen_idx;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Element e = index.at(gens[i].images);
    symbols.push_back({letter_name(i), e});
    gen_idx.push_back(e);
  }
  return Group(std::move(name), n, std::move(table), std::move(names), std::move(symbols), std::move(gen_idx));
}

// ---------------------------------------------------------------------------
// Direct product

namespace {

// Splits a word-shaped element name ("1", "a", "a^2*b^-1") into factors over
// the group's symbols. Returns nullopt when the name is not of that shape.
std::optional<std::vector<std::pair<std::size_t, std::string>>> split_word_name(const Group& g,
                                                                               const std::string& name) {
  std::vector<std::pair<std::size_t, std::string>> parts;
  if (name == "1") return parts;
  std::size_t pos = 0;
  while (pos <= name.size()) {
    const std::size_t star = std::min(name.find('*', pos), name.size());
    const std::string factor = name.substr(pos, star - pos);
    const std::size_t caret = factor.find('^');
    const std::string sym = factor.substr(0, caret);
    const std::string exp = caret == std::string::npos ? "" : factor.substr(caret);
    auto it = std::find_if(g.symbols().begin(), g.symbols().end(), [&](const Symbol& s) { return s.name == sym; });
    if (it == g.symbols().end()) return std::nullopt;
    parts.emplace_back(static_cast<std::size_t>(it - g.symbols().begin()), exp);
    pos = star + 1;
  }
  return parts;
}

}  // namespace

Group direct_product(const Group& left, const Group& right, std::string name) {
  const std::size_t nl = left.order(), nr = right.order(), n = nl * nr;
  if (n > kMaxGroupOrder) throw CapExceeded("direct product order " + std::to_string(n) + " exceeds cap");
  auto idx = [&](Element x, Element y) { return static_cast<Element>(x + nl * y); };
  std::vector<Element> table(n * n);
  for (Element y1 = 0; y1 < nr; ++y1)
    for (Element x1 = 0; x1 < nl; ++x1)
      for (Element y2 = 0; y2 < nr; ++y2)
        for (Element x2 = 0; x2 < nl; ++x2)
          table[idx(x1, y1) * n + idx(x2, y2)] = idx(left.mul(x1, x2), right.mul(y1, y2));

  std::vector<Symbol> symbols;
  for (const auto& s : left.symbols()) symbols.push_back({letter_name(symbols.size()), idx(s.element, left.identity())});
  const std::size_t offset = symbols.size();
  for (const auto& s : right.symbols()) symbols.push_back({letter_name(symbols.size()), idx(left.identity(), s.element)});

  std::vector<Element> generators;
  for (Element g : left.generators()) generators.push_back(idx(g, left.identity()));
  for (Element g : right.generators()) generators.push_back(idx(left.identity(), g));

  // Word-shaped names are rewritten over the renamed symbols; anything else
  // falls back to pair notation.
  std::vector<std::optional<std::vector<std::pair<std::size_t, std::string>>>> lw, rw;
  bool words = true;
  for (Element x = 0; x < nl && words; ++x) words = (lw.emplace_back(split_word_name(left, left.element_name(x)))).has_value();
  for (Element y = 0; y < nr && words; ++y) words = (rw.emplace_back(split_word_name(right, right.element_name(y)))).has_value();

  std::vector<std::string> names(n);
  for (Element y = 0; y < nr; ++y) {
    for (Element x = 0; x < nl; ++x) {
      std::string s;
      if (words) {
        auto append = [&](std::size_t sym, const std::string& exp) {
          if (!s.empty()) s += '*';
          s += symbols[sym].name + exp;
        };
        for (const auto& [sym, exp] : *lw[x]) append(sym, exp);
        for (const auto& [sym, exp] : *rw[y]) append(offset + sym, exp);
        if (s.empty()) s = "1";
      } else {
        s = "[" + left.element_name(x) + "," + right.element_name(y) + "]";
      }
      names[idx(x, y)] = std::move(s);
    }
  }
  if (name.empty()) name = left.name() + "x" + right.name();
  return Group(std::move(name), n, std::move(table), std::move(names), std::move(symbols), std::move(generators));
}

// ---------------------------------------------------------------------------
// Subgroups and transversals

Subgroup generated_subgroup(const Group& g, const Subset& generators) {
  Subset closure(g.order());
  closure.insert(g.identity());
  std::vector<Element> members{g.identity()};
  const auto gens = generators.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : gens) {
      const Element y = g.mul(members[i], s);
      if (!closure.contains(y)) {
        closure.insert(y);
        members.push_back(y);
      }
    }
  }
  return Subgroup{std::move(closure)};
}

bool is_subgroup(const Group& g, const Subset& s) {
  if (!s.contains(g.identity())) return false;
  const auto m = s.members();
  for (Element x : m) {
    if (!s.contains(g.inv(x))) return false;
    for (Element y : m) {
      if (!s.contains(g.mul(x, y))) return false;
    }
  }
  return true;
}

namespace {

Transversal transversal(const Group& g, const Subgroup& h, Side side) {
  Subset covered(g.order());
  Subset reps(g.order());
  const auto hm = h.elements.members();
  for (Element x = 0; x < g.order(); ++x) {
    if (covered.contains(x)) continue;
    reps.insert(x);
    for (Element y : hm) covered.insert(side == Side::right ? g.mul(y, x) : g.mul(x, y));
  }
  return Transversal{h, std::move(reps), side};
}

}  // namespace

Transversal right_transversal(const Group& g, const Subgroup& h) { return transversal(g, h, Side::right); }
Transversal left_transversal(const Group& g, const Subgroup& h) { return transversal(g, h, Side::left); }

Subset SubgroupView::to_local(const Subset& parent_subset) const {
  Subset out(embedding.size());
  for (Element i = 0; i < embedding.size(); ++i) {
    if (parent_subset.contains(embedding[i])) out.insert(i);
  }
  return out;
}

Subset SubgroupView::to_parent(const Subset& local_subset, std::size_t parent_order) const {
  Subset out(parent_order);
  local_subset.for_each([&](Element i) { out.insert(embedding[i]); });
  return out;
}

SubgroupView subgroup_as_group(const Group& g, const Subgroup& h) {
  if (!is_subgroup(g, h.elements)) throw PreconditionError("subset is not a subgroup");
  std::vector<Element> embedding{g.identity()};
  h.elements.for_each([&](Element x) {
    if (x != g.identity()) embedding.push_back(x);
  });
  const std::size_t m = embedding.size();
  std::vector<Element> local(g.order(), 0);
  for (Element i = 0; i < m; ++i) local[embedding[i]] = i;
  std::vector<Element> table(m * m);
  for (Element i = 0; i < m; ++i)
    for (Element j = 0; j < m; ++j) table[i * m + j] = local[g.mul(embedding[i], embedding[j])];
  std::vector<std::string> names;
  for (Element x : embedding) names.push_back(g.element_name(x));
  std::vector<Symbol> symbols;
  for (const auto& s : g.symbols()) {
    if (h.elements.contains(s.element)) symbols.push_back({s.name, local[s.element]});
  }
  Group sub(g.name() + "[sub" + std::to_string(m) + "]", m, std::move(table), std::move(names), std::move(symbols), {});
  return SubgroupView{std::move(sub), std::move(embedding)};
}

// ---------------------------------------------------------------------------
// Homomorphisms and automorphisms

namespace {

std::optional<std::vector<Element>> extend_map(const Group& source, std::span<const Element> gens,
                                               const Group& target, std::span<const Element> images) {
  constexpr Element unset = ~Element{0};
  std::vector<Element> phi(source.order(), unset);
  phi[source.identity()] = target.identity();
  std::vector<Element> queue{source.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Element y = source.mul(x, gens[k]);
      const Element val = target.mul(phi[x], images[k]);
      if (phi[y] == unset) {
        phi[y] = val;
        queue.push_back(y);
      } else if (phi[y] != val) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != source.order()) return std::nullopt;
  return phi;
}

}  // namespace

std::optional<std::vector<Element>> extend_homomorphism(const Group& source, const Group& target,
                                                        std::span<const Element> generator_images) {
  if (generator_images.size() != source.generators().size()) {
    throw PreconditionError("need one image per source generator");
  }
  return extend_map(source, source.generators(), target, generator_images);
}

std::vector<Element> minimal_generating_sequence(const Group& g) {
  if (g.order() == 1) return {};
  return greedy_generators(
      g.order(), [&](Element x, Element y) { return g.mul(x, y); },
      [&](Element x) { return g.element_order(x); }, g.identity());
}

std::vector<std::vector<Element>> automorphisms(const Group& g, std::size_t order_cap) {
  if (g.order() > order_cap) {
    throw CapExceeded("automorphism enumeration limited to order " + std::to_string(order_cap));
  }
  const auto gens = minimal_generating_sequence(g);
  std::vector<std::vector<Element>> candidates;
  double tuples = 1.0;
  for (Element s : gens) {
    auto& c = candidates.emplace_back();
    const std::size_t o = g.element_order(s);
    for (Element x = 0; x < g.order(); ++x) {
      if (g.element_order(x) == o) c.push_back(x);
    }
    tuples *= static_cast<double>(c.size());
  }
  constexpr double kTupleCap = 2e7;
  if (tuples > kTupleCap) throw CapExceeded("automorphism image search too large");

  std::vector<std::vector<Element>> out;
  std::vector<Element> images(gens.size());
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      auto phi = extend_map(g, gens, g, images);
      if (!phi) return;
      Subset image(g.order());
      for (Element y : *phi) image.insert(y);
      if (image.size() == g.order()) out.push_back(std::move(*phi));
      return;
    }
    for (Element x : candidates[k]) {
      images[k] = x;
      self(self, k + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace subsetfactor
