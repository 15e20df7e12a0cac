#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subsetfactor/algebra.hpp"
#include "subsetfactor/group.hpp"
#include "subsetfactor/subset.hpp"

namespace subsetfactor {

inline constexpr std::uint64_t kDefaultClassifyBudget = 100'000'000;
inline constexpr std::size_t kDefaultCfsOrderCap = 200;

std::vector<std::size_t> divisors(std::size_t n);

/// Number of size-d subsets containing the identity, C(n-1, d-1), saturating
/// at UINT64_MAX.
std::uint64_t lagrange_candidate_count(std::size_t n, std::size_t d);

/// One representative per canonical class of size-d subsets containing the
/// identity, in increasing Subset order. Requires d | |G|.
std::vector<Subset> enumerate_lagrange_subsets(const Group& g, std::size_t d, CanonLevel level,
                                               const AutomorphismList* autos = nullptr);

/// Visits the candidates with colex rank in [first, last) and hands the
/// canonical ones to `visit(rank, subset)`; returning false stops the scan.
void scan_lagrange_range(const Group& g, std::size_t d, std::uint64_t first, std::uint64_t last, CanonLevel level,
                         const AutomorphismList* autos,
                         const std::function<bool(std::uint64_t, const Subset&)>& visit);

struct StrongCfsOptions {
  CanonLevel level = CanonLevel::L1;
  unsigned threads = 1;
  // Counts factor tests. Candidates scanned are capped at 64x this.
  std::uint64_t budget = kDefaultClassifyBudget;
};

struct StrongCfsReport {
  std::string group;
  bool holds = false;
  bool inconclusive = false;  // budget ran out before a verdict
  std::optional<Subset> witness;
  std::vector<std::size_t> divisors_checked;
  std::uint64_t subsets_examined = 0;
  CanonLevel canon_level = CanonLevel::L1;
};

/// Every Lagrange subset is a left or right factor. The witness is the first
/// non-factor representative in enumeration order (divisors ascending).
/// Divisors 1 and |G| are skipped.
StrongCfsReport decide_strong_cfs(const Group& g, const StrongCfsOptions& options = {});

struct SidedFactor {
  Subset factor;
  Subset complement;
};

struct CfsDivisor {
  std::size_t d = 0;
  SidedFactor left;   // G = left.factor * left.complement
  SidedFactor right;  // G = right.complement * right.factor
  std::string route;  // subgroup | transversal | search
};

struct CfsReport {
  std::string group;
  bool holds = false;
  std::map<std::size_t, CfsDivisor> per_divisor;
  std::optional<std::size_t> failed_divisor;
};

/// For every divisor d finds a left and a right factor of size d: a
/// subgroup of order d, else a transversal of a subgroup of order |G|/d,
/// else a canonical search. Every recorded pair is re-verified.
CfsReport decide_cfs(const Group& g, std::size_t order_cap = kDefaultCfsOrderCap);

/// {1, a^2, a^3, ..., a^d} for a generator a of a cyclic group.
/// Requires d a proper divisor of |G| with d >= 3.
Subset cyclic_witness(const Group& g, std::size_t d);

/// One subgroup per order, found by joining cyclic subgroups. Stops early
/// once `wanted` returns true for the collection found so far.
std::map<std::size_t, Subgroup> subgroups_by_order(
    const Group& g, const std::function<bool(const std::map<std::size_t, Subgroup>&)>& wanted = {});

}  // namespace subsetfactor
