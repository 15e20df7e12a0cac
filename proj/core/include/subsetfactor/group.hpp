#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "subsetfactor/subset.hpp"

namespace subsetfactor {

inline constexpr std::size_t kMaxGroupOrder = 20000;
inline constexpr std::size_t kFullAssociativityCheckLimit = 512;
inline constexpr std::size_t kDefaultAutomorphismCap = 64;

enum class Side { left, right };

std::string_view to_string(Side side);

/// Named element usable in words. Generators are always symbols; some
/// families register extra symbols (e.g. the central `c` of a Heisenberg
/// group) that are handy in element names but not needed to generate.
struct Symbol {
  std::string name;
  Element element;
};

/// Permutation of the points {0, ..., degree-1}; printed 1-based.
/// Products act on the right: (p * q)(x) = q(p(x)).
struct Permutation {
  std::vector<std::uint32_t> images;

  std::size_t degree() const noexcept { return images.size(); }
  bool is_identity() const noexcept;
  Permutation then(const Permutation& q) const;
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// Builds a permutation of the given degree from 1-based cycles.
Permutation permutation_from_cycles(const std::vector<std::vector<std::uint32_t>>& cycles,
                                    std::size_t degree);

/// Finite group stored as a validated Cayley table. Immutable after
/// construction.
class Group {
 public:
  /// Validates `table` (row-major, order*order entries) and throws
  /// InvalidGroup on the first violated axiom.
  Group(std::string name, std::size_t order, std::vector<Element> table,
        std::vector<std::string> element_names, std::vector<Symbol> symbols,
        std::vector<Element> generators);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element x, Element y) const noexcept { return table_[x * order_ + y]; }
  Element inv(Element x) const noexcept { return inverse_[x]; }
  Element pow(Element x, long long e) const noexcept;
  std::span<const Element> row(Element x) const noexcept { return {table_.data() + x * order_, order_}; }
  std::span<const Element> table() const noexcept { return table_; }
  std::span<const Element> inverses() const noexcept { return inverse_; }

  const std::string& element_name(Element x) const { return names_.at(x); }
  std::span<const std::string> element_names() const noexcept { return names_; }
  std::optional<Element> find_element(std::string_view name) const;

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::optional<Element> symbol(std::string_view name) const;
  /// Standard generating sequence (indices into the group).
  std::span<const Element> generators() const noexcept { return generators_; }
  std::vector<std::string> generator_names() const;

  std::size_t element_order(Element x) const noexcept;
  bool is_abelian() const noexcept;

 private:
  std::string name_;
  std::size_t order_;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::vector<std::string> names_;
  std::vector<Symbol> symbols_;
  std::vector<Element> generators_;
};

/// First violated axiom found while scanning a candidate Cayley table.
struct TableViolation {
  enum class Kind { shape, range, latin_row, latin_column, no_identity, associativity };
  Kind kind;
  std::string message;
  // The offending triple for associativity; row/column index otherwise.
  std::vector<Element> where;
};

std::optional<TableViolation> check_table(std::size_t order, std::span<const Element> table);

/// Validates a square table and wraps it as a group with default names
/// `e0, e1, ...`. Throws InvalidGroup describing the first violation.
Group validate_table(const std::vector<std::vector<Element>>& table, std::string name = "table");

// ---------------------------------------------------------------------------
// Group specifications

struct GroupSpec;

namespace spec {
struct Cyclic { unsigned n; };
struct Dihedral { unsigned m; };
struct Quaternion8 {};
struct Symmetric { unsigned k; };
struct Alternating { unsigned k; };
struct SemidirectCyclic { unsigned m, k, t; };
struct Heisenberg { unsigned p; };
struct FromTable { std::string path; };
struct FromPermutations { std::vector<Permutation> generators; };
struct DirectProduct {
  std::shared_ptr<const GroupSpec> left;
  std::shared_ptr<const GroupSpec> right;
};
}  // namespace spec

struct GroupSpec {
  using Variant = std::variant<spec::Cyclic, spec::DirectProduct, spec::Dihedral, spec::Quaternion8,
                               spec::Symmetric, spec::Alternating, spec::SemidirectCyclic,
                               spec::Heisenberg, spec::FromTable, spec::FromPermutations>;
  Variant variant;

  static GroupSpec product(GroupSpec left, GroupSpec right);

  /// Canonical spec string, accepted back by parse_group_spec.
  std::string to_string() const;
  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.to_string() == b.to_string(); }
};

/// Checks family parameter constraints; throws InvalidGroup.
void validate_spec(const GroupSpec& spec);

/// Realizes a spec as a concrete Cayley table.
///
/// Parametric families use tuple arithmetic with the first coordinate varying
/// fastest, so C2xC2 is ordered 1, a, b, a*b. For sd(m,k,t) the pair (i, j)
/// stands for a^i*b^j and b*a*b^-1 = a^t.
Group build_group(const GroupSpec& spec);

/// Closes a set of permutations under composition. Elements are numbered in
/// breadth-first order from the identity, expanding generators in the given
/// order. Throws CapExceeded past `cap` elements.
Group close_permutations(std::span<const Permutation> generators, std::size_t cap = kMaxGroupOrder,
                         std::string name = "perm");

/// Loads the JSON group file format and validates its table.
Group load_group_file(const std::string& path);

/// Direct product; left factor varies fastest in the element numbering.
Group direct_product(const Group& left, const Group& right, std::string name = {});

// ---------------------------------------------------------------------------
// Subgroups, transversals, automorphisms

struct Subgroup {
  Subset elements;
  std::size_t order() const noexcept { return elements.size(); }
};

struct Transversal {
  Subgroup subgroup;
  Subset reps;
  Side side = Side::right;
};

/// Smallest subgroup containing `generators` (closure under products).
Subgroup generated_subgroup(const Group& g, const Subset& generators);
bool is_subgroup(const Group& g, const Subset& s);

/// Scans elements in index order and keeps x whenever the coset Hx (right)
/// or xH (left) is not yet covered.
Transversal right_transversal(const Group& g, const Subgroup& h);
Transversal left_transversal(const Group& g, const Subgroup& h);

/// A subgroup re-indexed as a group in its own right. `embedding[i]` is the
/// parent index of local element i; local 0 is the identity.
struct SubgroupView {
  Group group;
  std::vector<Element> embedding;

  Subset to_local(const Subset& parent_subset) const;
  Subset to_parent(const Subset& local_subset, std::size_t parent_order) const;
};

SubgroupView subgroup_as_group(const Group& g, const Subgroup& h);

/// Extends generator images to a homomorphism source -> target, if one
/// exists. Returns the full element map.
std::optional<std::vector<Element>> extend_homomorphism(const Group& source, const Group& target,
                                                        std::span<const Element> generator_images);

/// Greedy short generating sequence, used as the domain of automorphism
/// enumeration.
std::vector<Element> minimal_generating_sequence(const Group& g);

/// All automorphisms as element maps, sorted lexicographically (identity first).
/// Throws CapExceeded when |G| > order_cap or the image search is too large.
std::vector<std::vector<Element>> automorphisms(const Group& g, std::size_t order_cap = kDefaultAutomorphismCap);

}  // namespace subsetfactor
