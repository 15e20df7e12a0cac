#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subsetfactor/group.hpp"
#include "subsetfactor/subset.hpp"

namespace subsetfactor {

/// Ordered generators of the whole group.
class GeneratingSet {
 public:
  /// Throws PreconditionError unless the elements generate `g`.
  GeneratingSet(const Group& g, std::vector<Element> gens);

  /// The group's standard generators.
  static GeneratingSet standard(const Group& g);

  const Group& parent() const noexcept { return *group_; }
  const std::vector<Element>& gens() const noexcept { return gens_; }
  /// gens followed by the inverses not already listed.
  const std::vector<Element>& symmetric() const noexcept { return symmetric_; }

 private:
  const Group* group_;
  std::vector<Element> gens_;
  std::vector<Element> symmetric_;
};

struct Ball {
  Element center = 0;
  std::size_t radius = 0;
  Subset members;
};

/// Elements of word length at most r over gens and their inverses.
Ball ball(const GeneratingSet& gens, std::size_t r);

/// A is connected in the undirected Cayley graph (x ~ xs) restricted to A.
bool is_connected_subset(const GeneratingSet& gens, const Subset& a);

/// For every g: |T n Tg| > 2 or 1 not in T n Tg.
bool tilde_condition(const Group& g, const Subset& tilde);

/// tilde_condition together with the same test for left translates gT.
bool tilde_condition_two_sided(const Group& g, const Subset& tilde);

/// Grows ball_2 one element at a time (least index adjacent to the current
/// set) until it has d+1 elements. Absent unless d divides |G| and
/// |ball_2| <= d+1 <= |G|.
std::optional<Subset> construct_tilde(const GeneratingSet& gens, std::size_t d);

}  // namespace subsetfactor
