#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "subsetfactor/group.hpp"
#include "subsetfactor/subset.hpp"

namespace subsetfactor {

enum class FactorClass { two_sided, left_only, right_only, none };

std::string_view to_string(FactorClass c);

/// Why a subset is not a factor. Each kind names a certificate that
/// recheck_evidence can confirm without the search machinery.
enum class EvidenceKind {
  exhausted_search,
  index2_failure,
  hole_failure,
  all_translates_meet,
  lagrange_obstruction,
};

std::string_view to_string(EvidenceKind k);

struct NonFactorEvidence {
  EvidenceKind kind;
  // Certificate for each side on its own; `kind` is the common one when both
  // sides agree and exhausted_search otherwise.
  EvidenceKind left;
  EvidenceKind right;
  std::optional<Subgroup> generated;  // <A>, for lagrange_obstruction
  std::uint64_t search_nodes = 0;
};

struct FactorReport {
  FactorClass classification = FactorClass::none;
  std::optional<Subset> left_complement;   // G = A * left_complement
  std::optional<Subset> right_complement;  // G = right_complement * A
  std::optional<Subset> same_complement;   // G = A * B = B * A
  std::optional<NonFactorEvidence> evidence;
  std::uint64_t search_nodes = 0;

  bool is_factor() const noexcept { return classification != FactorClass::none; }
};

struct ComplementSearch {
  std::optional<Subset> complement;
  std::uint64_t solutions = 0;  // only meaningful with enumerate_all
  std::uint64_t nodes = 0;
};

/// Exact cover of G by translates of A: right translates A*b for
/// Side::left (G = A*B), left translates b*A for Side::right (G = B*A).
///
/// The cell to cover next is always the least uncovered element; candidate
/// tiles are tried in increasing b. By default the complement is normalized
/// to contain the identity (B may be replaced by B*b^-1, resp. b^-1*B) and
/// coincident translates are tried once, which settles existence; the first
/// complement found is returned. With `enumerate_all` every complement is
/// counted and the least one (in Subset order) returned.
ComplementSearch search_complement(const Group& g, const Subset& a, Side side, bool enumerate_all = false);

std::optional<Subset> find_left_complement(const Group& g, const Subset& a);
std::optional<Subset> find_right_complement(const Group& g, const Subset& a);

/// Some B with G = A*B = B*A, or nullopt. Not normalized: a common
/// complement cannot in general be translated to contain 1.
std::optional<Subset> find_same_complement(const Group& g, const Subset& a);

struct ClassifyOptions {
  bool same_complement = false;
};

/// Runs the cheap certificates first (Lagrange obstruction via <A>, the hole
/// criterion when 1 is not in A, the index-2 test when |G| = 2|A|) and
/// settles whatever is left by exact-cover search on each side.
FactorReport classify_factor(const Group& g, const Subset& a, const ClassifyOptions& options = {});

/// Left-or-right factor test with the same certificates as classify_factor
/// but stopping at the first side that succeeds.
bool is_factor(const Group& g, const Subset& a, std::uint64_t* nodes = nullptr);

/// Least g with A*g = G\A (Side::left) or g*A = G\A (Side::right).
/// Requires |A| = |G|/2.
std::optional<Element> index2_criterion(const Group& g, const Subset& a, Side side);

/// Least g such that the translate A*g (Side::left) or g*A (Side::right)
/// contains 1 and misses A. Requires 1 not in A. nullopt means A is not a
/// factor on that side.
std::optional<Element> hole_criterion(const Group& g, const Subset& a, Side side);

/// A meets every translate A*g and g*A.
bool all_translates_meet(const Group& g, const Subset& a);

/// <A> when |A| does not divide |<A>|.
std::optional<Subgroup> lagrange_obstruction(const Group& g, const Subset& a);

/// Given A within H and G = A*B, returns C = B n H; then H = A*C.
Subset restrict_complement(const Group& g, const Subgroup& h, const Subset& a, const Subset& b);

/// Given A, B within H with H = A*B and a right transversal X of H,
/// returns B*X; then G = A*(B*X).
Subset extend_complement(const Group& g, const Subgroup& h, const Subset& a, const Subset& b,
                         const Transversal& x);

/// Confirms a non-factor certificate with deliberately naive code that does
/// not share the search's data structures.
bool recheck_evidence(const Group& g, const Subset& a, const NonFactorEvidence& evidence);

}  // namespace subsetfactor
