#include "subsetfactor/geometry.hpp"

#include <algorithm>
#include <deque>

#include "subsetfactor/algebra.hpp"
#include "subsetfactor/error.hpp"

namespace subsetfactor {

GeneratingSet::GeneratingSet(const Group& g, std::vector<Element> gens) : group_(&g), gens_(std::move(gens)) {
  Subset s(g.order());
  for (Element x : gens_) {
    if (x >= g.order()) throw PreconditionError("generator index out of range");
    s.insert(x);
  }
  if (g.order() > 1 && generated_subgroup(g, s).order() != g.order()) {
    throw PreconditionError("elements do not generate " + g.name());
  }
  symmetric_ = gens_;
  for (Element x : gens_) {
    const Element xi = g.inv(x);
    if (std::find(symmetric_.begin(), symmetric_.end(), xi) == symmetric_.end()) symmetric_.push_back(xi);
  }
}

GeneratingSet GeneratingSet::standard(const Group& g) {
  const auto gens = g.generators();
  return GeneratingSet(g, std::vector<Element>(gens.begin(), gens.end()));
}

Ball ball(const GeneratingSet& gens, std::size_t r) {
  const Group& g = gens.parent();
  Ball out{g.identity(), r, Subset(g.order())};
  out.members.insert(g.identity());
  std::vector<Element> layer{g.identity()};
  for (std::size_t step = 0; step < r && !layer.empty(); ++step) {
    std::vector<Element> next;
    for (Element x : layer) {
      for (Element s : gens.symmetric()) {
        const Element y = g.mul(x, s);
        if (!out.members.contains(y)) {
          out.members.insert(y);
          next.push_back(y);
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

bool is_connected_subset(const GeneratingSet& gens, const Subset& a) {
  const Group& g = gens.parent();
  if (a.parent_order() != g.order()) throw PreconditionError("subset belongs to a different group");
  if (a.empty()) throw PreconditionError("connectivity of the empty set");
  Subset seen(g.order());
  std::deque<Element> queue{a.first()};
  seen.insert(a.first());
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element s : gens.symmetric()) {
      const Element y = g.mul(x, s);
      if (a.contains(y) && !seen.contains(y)) {
        seen.insert(y);
        queue.push_back(y);
      }
    }
  }
  return seen.size() == a.size();
}

namespace {

// `side` says where the translating element sits: Side::right is T*x.
bool translates_ok(const Group& g, const Subset& tilde, Side side) {
  if (tilde.parent_order() != g.order()) throw PreconditionError("subset belongs to a different group");
  if (!tilde.contains(g.identity())) throw PreconditionError("the identity must belong to the set");
  for (Element x = 0; x < g.order(); ++x) {
    const Subset meet = tilde & translate(g, tilde, x, side);
    if (meet.size() <= 2 && meet.contains(g.identity())) return false;
  }
  return true;
}

}  // namespace

bool tilde_condition(const Group& g, const Subset& tilde) { return translates_ok(g, tilde, Side::right); }

bool tilde_condition_two_sided(const Group& g, const Subset& tilde) {
  return translates_ok(g, tilde, Side::right) && translates_ok(g, tilde, Side::left);
}

std::optional<Subset> construct_tilde(const GeneratingSet& gens, std::size_t d) {
  const Group& g = gens.parent();
  const std::size_t n = g.order();
  if (d == 0 || n % d != 0 || d + 1 > n) return std::nullopt;
  Subset tilde = ball(gens, 2).members;
  if (tilde.size() > d + 1) return std::nullopt;
  while (tilde.size() < d + 1) {
    std::optional<Element> pick;
    tilde.for_each([&](Element x) {
      for (Element s : gens.symmetric()) {
        const Element y = g.mul(x, s);
        if (!tilde.contains(y) && (!pick || y < *pick)) pick = y;
      }
    });
    tilde.insert(*pick);
  }
  return tilde;
}

}  // namespace subsetfactor
