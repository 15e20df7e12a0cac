#include "subsetfactor/algebra.hpp"

#include "subsetfactor/error.hpp"

namespace subsetfactor {

namespace {

void require_same_parent(const Group& g, const Subset& a) {
  if (a.parent_order() != g.order()) {
    throw PreconditionError("subset of order-" + std::to_string(a.parent_order()) + " group used with " + g.name());
  }
}

}  // namespace

ProductResult product(const Group& g, const Subset& a, const Subset& b) {
  require_same_parent(g, a);
  require_same_parent(g, b);
  ProductResult out{Subset(g.order()), std::nullopt, true};
  constexpr Element unset = ~Element{0};
  std::vector<std::pair<Element, Element>> first_pair(g.order(), {unset, unset});
  const auto bm = b.members();
  a.for_each([&](Element x) {
    const auto row = g.row(x);
    for (Element y : bm) {
      const Element z = row[y];
      if (first_pair[z].first == unset) {
        first_pair[z] = {x, y};
        out.product.insert(z);
      } else if (!out.collision) {
        out.collision = Collision{z, first_pair[z].first, first_pair[z].second, x, y};
      }
    }
  });
  out.direct = !out.collision.has_value();
  return out;
}

bool verify_direct_factorization(const Group& g, const Subset& a, const Subset& b) {
  require_same_parent(g, a);
  require_same_parent(g, b);
  if (a.size() * b.size() != g.order()) return false;
  return product(g, a, b).product.size() == g.order();
}

Subset translate(const Group& g, const Subset& a, Element x, Side side) {
  require_same_parent(g, a);
  Subset out(g.order());
  a.for_each([&](Element y) { out.insert(side == Side::left ? g.mul(x, y) : g.mul(y, x)); });
  return out;
}

Subset invert_set(const Group& g, const Subset& a) {
  require_same_parent(g, a);
  Subset out(g.order());
  a.for_each([&](Element y) { out.insert(g.inv(y)); });
  return out;
}

bool is_lagrange(const Group& g, const Subset& a) {
  require_same_parent(g, a);
  const std::size_t k = a.size();
  if (k == 0) throw PreconditionError("the empty set has no Lagrange status");
  return g.order() % k == 0;
}

std::string_view to_string(CanonLevel level) {
  switch (level) {
    case CanonLevel::none: return "none";
    case CanonLevel::L1: return "L1";
    case CanonLevel::L2: return "L2";
    case CanonLevel::L3: return "L3";
  }
  return "?";
}

std::optional<CanonLevel> canon_level_from_string(std::string_view text) {
  if (text == "none" || text == "L0" || text == "l0") return CanonLevel::none;
  if (text == "L1" || text == "l1") return CanonLevel::L1;
  if (text == "L2" || text == "l2") return CanonLevel::L2;
  if (text == "L3" || text == "l3") return CanonLevel::L3;
  return std::nullopt;
}

namespace {

// Calls visit(candidate) for every member of the level's orbit that contains
// the identity (with repetitions). Stops early when visit returns false.
template <typename Visit>
void for_each_orbit_member(const Group& g, const Subset& a, CanonLevel level, const AutomorphismList* autos,
                           Visit&& visit) {
  const std::size_t n = g.order();
  const auto members = a.members();
  if (level == CanonLevel::none) {
    visit(a);
    return;
  }
  if (level == CanonLevel::L1) {
    Subset t(n);
    for (Element s : members) {
      t = Subset(n);
      const auto row = g.row(g.inv(s));
      for (Element x : members) t.insert(row[x]);
      if (!visit(t)) return;
    }
    return;
  }
  const Subset inverse = invert_set(g, a);
  const auto inv_members = inverse.members();
  std::vector<Element> base(members.size());
  Subset t(n);
  for (const auto* source : {&members, &inv_members}) {
    for (Element s : *source) {
      // base = s^-1 * source, which contains 1
      const auto row = g.row(g.inv(s));
      for (std::size_t i = 0; i < source->size(); ++i) base[i] = row[(*source)[i]];
      for (Element y = 0; y < n; ++y) {
        const Element yi = g.inv(y);
        if (level == CanonLevel::L2) {
          t = Subset(n);
          for (Element x : base) t.insert(g.mul(g.mul(yi, x), y));
          if (!visit(t)) return;
        } else {
          for (const auto& phi : *autos) {
            t = Subset(n);
            for (Element x : base) t.insert(phi[g.mul(g.mul(yi, x), y)]);
            if (!visit(t)) return;
          }
        }
      }
    }
  }
}

}  // namespace

Subset canonical_form(const Group& g, const Subset& a, CanonLevel level, const AutomorphismList* autos) {
  require_same_parent(g, a);
  if (a.empty()) throw PreconditionError("canonical form of the empty set");
  AutomorphismList local;
  if (level == CanonLevel::L3 && autos == nullptr) {
    local = automorphisms(g);
    autos = &local;
  }
  if (level == CanonLevel::none) {
    // No symmetry, but the result still has to contain the identity.
    if (a.contains(g.identity())) return a;
    return translate(g, a, g.inv(a.first()), Side::left);
  }
  std::optional<Subset> best;
  for_each_orbit_member(g, a, level, autos, [&](const Subset& t) {
    if (!best || t < *best) best = t;
    return true;
  });
  return *best;
}

bool is_canonical(const Group& g, const Subset& a, CanonLevel level, const AutomorphismList* autos) {
  require_same_parent(g, a);
  if (!a.contains(g.identity())) return false;
  AutomorphismList local;
  if (level == CanonLevel::L3 && autos == nullptr) {
    local = automorphisms(g);
    autos = &local;
  }
  bool canonical = true;
  for_each_orbit_member(g, a, level, autos, [&](const Subset& t) {
    if (t < a) canonical = false;
    return canonical;
  });
  return canonical;
}

}  // namespace subsetfactor
