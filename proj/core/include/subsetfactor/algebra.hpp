#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "subsetfactor/group.hpp"
#include "subsetfactor/subset.hpp"

namespace subsetfactor {

/// Two distinct pairs with the same product x = a*b = a2*b2.
struct Collision {
  Element x;
  Element a, b;
  Element a2, b2;
};

struct ProductResult {
  Subset product;
  std::optional<Collision> collision;  // first repeat in (a, b) lexicographic order
  bool direct = true;
};

ProductResult product(const Group& g, const Subset& a, const Subset& b);

/// G = A*B with every element represented once: AB covers G and |A||B| = |G|.
bool verify_direct_factorization(const Group& g, const Subset& a, const Subset& b);

/// g*A for Side::left, A*g for Side::right.
Subset translate(const Group& g, const Subset& a, Element x, Side side);
Subset invert_set(const Group& g, const Subset& a);

/// |A| divides |G|. Throws PreconditionError for the empty set.
bool is_lagrange(const Group& g, const Subset& a);

/// Symmetry used to deduplicate subsets that are factors together.
///
///  none: no reduction (every set containing the identity is its own class)
///  L1:   left translates a^-1 A, a in A
///  L2:   all two-sided translates x A y and x A^-1 y that contain 1
///  L3:   L2 closed under the automorphism group
///
/// Each level is an orbit of a group action intersected with "contains 1";
/// the canonical form is the least member of that set in Subset order.
enum class CanonLevel { none, L1, L2, L3 };

std::string_view to_string(CanonLevel level);
std::optional<CanonLevel> canon_level_from_string(std::string_view text);

using AutomorphismList = std::vector<std::vector<Element>>;

Subset canonical_form(const Group& g, const Subset& a, CanonLevel level,
                      const AutomorphismList* autos = nullptr);

/// canonical_form(a) == a, with early exit. `a` must contain the identity.
bool is_canonical(const Group& g, const Subset& a, CanonLevel level, const AutomorphismList* autos = nullptr);

}  // namespace subsetfactor
