#include "subsetfactor/cfs.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <unordered_set>

#include "subsetfactor/error.hpp"
#include "subsetfactor/factor.hpp"

namespace subsetfactor {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kScanFactor = 64;

__extension__ typedef unsigned __int128 Wide;

std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  Wide acc = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    acc = acc * (a - i) / (i + 1);
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

// Size-k combinations of {0..m-1} in colex order, i.e. increasing value of
// sum 2^c_i. Colex rank = sum C(c_i, i+1).
class ColexCombination {
 public:
  ColexCombination(std::size_t m, std::size_t k, std::uint64_t rank) : m_(m), c_(k) {
    for (std::size_t i = k; i-- > 0;) {
      std::size_t c = i;
      while (c + 1 < m_ && binomial(c + 1, i + 1) <= rank) ++c;
      c_[i] = c;
      rank -= binomial(c, i + 1);
    }
  }

  const std::vector<std::size_t>& positions() const noexcept { return c_; }

  bool advance() {
    const std::size_t k = c_.size();
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t limit = i + 1 < k ? c_[i + 1] : m_;
      if (c_[i] + 1 < limit) {
        ++c_[i];
        for (std::size_t j = 0; j < i; ++j) c_[j] = j;
        return true;
      }
    }
    return false;
  }

 private:
  std::size_t m_;
  std::vector<std::size_t> c_;
};

}  // namespace

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

std::uint64_t lagrange_candidate_count(std::size_t n, std::size_t d) {
  if (d == 0 || d > n) return 0;
  return binomial(n - 1, d - 1);
}

void scan_lagrange_range(const Group& g, std::size_t d, std::uint64_t first, std::uint64_t last, CanonLevel level,
                         const AutomorphismList* autos,
                         const std::function<bool(std::uint64_t, const Subset&)>& visit) {
  const std::size_t n = g.order();
  if (d == 0 || n % d != 0) throw PreconditionError("d must divide the group order");
  const std::uint64_t total = lagrange_candidate_count(n, d);
  last = std::min(last, total);
  if (first >= last) return;
  std::vector<Element> others;
  for (Element x = 0; x < n; ++x) {
    if (x != g.identity()) others.push_back(x);
  }
  ColexCombination comb(others.size(), d - 1, first);
  for (std::uint64_t rank = first; rank < last; ++rank) {
    Subset s(n);
    s.insert(g.identity());
    for (std::size_t p : comb.positions()) s.insert(others[p]);
    if (is_canonical(g, s, level, autos) && !visit(rank, s)) return;
    if (rank + 1 < last && !comb.advance()) return;
  }
}

std::vector<Subset> enumerate_lagrange_subsets(const Group& g, std::size_t d, CanonLevel level,
                                               const AutomorphismList* autos) {
  AutomorphismList local;
  if (level == CanonLevel::L3 && autos == nullptr) {
    local = automorphisms(g);
    autos = &local;
  }
  std::vector<Subset> out;
  scan_lagrange_range(g, d, 0, kSaturated, level, autos, [&](std::uint64_t, const Subset& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

StrongCfsReport decide_strong_cfs(const Group& g, const StrongCfsOptions& options) {
  StrongCfsReport report;
  report.group = g.name();
  report.canon_level = options.level;
  const std::size_t n = g.order();

  AutomorphismList autos;
  if (options.level == CanonLevel::L3) autos = automorphisms(g);
  const AutomorphismList* autos_ptr = options.level == CanonLevel::L3 ? &autos : nullptr;
  const unsigned threads = std::max(1U, options.threads);

  std::uint64_t calls_so_far = 0;
  for (std::size_t d : divisors(n)) {
    if (d == 1 || d == n) continue;
    report.divisors_checked.push_back(d);
    const std::uint64_t total = lagrange_candidate_count(n, d);
    if (total == kSaturated || total / kScanFactor > options.budget) {
      report.inconclusive = true;
      return report;
    }

    const std::uint64_t chunk = std::clamp<std::uint64_t>(total / (threads * 8ULL), 1, 4096);
    const std::uint64_t chunks = (total + chunk - 1) / chunk;
    struct ChunkResult {
      std::uint64_t examined = 0;
      std::optional<std::uint64_t> witness_rank;
      std::optional<Subset> witness;
    };
    std::vector<ChunkResult> results(chunks);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{kSaturated};
    std::atomic<std::uint64_t> calls{calls_so_far};
    std::atomic<bool> aborted{false};
    const std::uint64_t limit = options.budget + threads * chunk;

    auto worker = [&] {
      for (;;) {
        const std::uint64_t c = next.fetch_add(1);
        if (c >= chunks || aborted.load()) return;
        const std::uint64_t start = c * chunk;
        if (start > best.load()) return;
        ChunkResult& slot = results[c];
        scan_lagrange_range(g, d, start, start + chunk, options.level, autos_ptr,
                            [&](std::uint64_t rank, const Subset& s) {
                              if (rank > best.load()) return false;
                              if (calls.fetch_add(1) + 1 > limit) {
                                aborted.store(true);
                                return false;
                              }
                              ++slot.examined;
                              if (is_factor(g, s)) return true;
                              slot.witness_rank = rank;
                              slot.witness = s;
                              std::uint64_t cur = best.load();
                              while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
                              }
                              return false;
                            });
      }
    };
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (aborted.load()) {
      report.inconclusive = true;
      return report;
    }

    // Only ranks up to the first witness count, so the totals do not depend
    // on how chunks were scheduled.
    std::optional<std::uint64_t> witness_chunk;
    for (std::uint64_t c = 0; c < chunks; ++c) {
      if (results[c].witness_rank) {
        witness_chunk = c;
        break;
      }
    }
    const std::uint64_t counted_until = witness_chunk ? *witness_chunk + 1 : chunks;
    for (std::uint64_t c = 0; c < counted_until; ++c) report.subsets_examined += results[c].examined;
    calls_so_far = report.subsets_examined;
    if (witness_chunk) {
      report.witness = results[*witness_chunk].witness;
      report.holds = false;
      return report;
    }
  }
  report.holds = true;
  return report;
}

std::map<std::size_t, Subgroup> subgroups_by_order(
    const Group& g, const std::function<bool(const std::map<std::size_t, Subgroup>&)>& wanted) {
  std::map<std::size_t, Subgroup> found;
  std::unordered_set<Subset, SubsetHash> seen;
  std::vector<Subgroup> queue;
  std::vector<Element> cyclic_generators;
  auto add = [&](Subgroup h) {
    if (!seen.insert(h.elements).second) return false;
    found.try_emplace(h.order(), h);
    queue.push_back(std::move(h));
    return true;
  };
  for (Element x = 0; x < g.order(); ++x) {
    Subset s(g.order());
    s.insert(x);
    if (add(generated_subgroup(g, s))) cyclic_generators.push_back(x);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    if (wanted && wanted(found)) break;
    const Subset base = queue[i].elements;
    for (Element x : cyclic_generators) {
      if (base.contains(x)) continue;
      Subset gens = base;
      gens.insert(x);
      add(generated_subgroup(g, gens));
    }
  }
  return found;
}

CfsReport decide_cfs(const Group& g, std::size_t order_cap) {
  const std::size_t n = g.order();
  if (n > order_cap) throw CapExceeded("CFS decision limited to order " + std::to_string(order_cap));
  CfsReport report;
  report.group = g.name();
  const auto divs = divisors(n);
  const auto subgroups = subgroups_by_order(g, [&](const std::map<std::size_t, Subgroup>& found) {
    return std::all_of(divs.begin(), divs.end(), [&](std::size_t d) { return found.count(d) || found.count(n / d); });
  });

  for (std::size_t d : divs) {
    CfsDivisor entry;
    entry.d = d;
    bool ok = false;
    if (auto it = subgroups.find(d); it != subgroups.end()) {
      const auto& h = it->second;
      entry.left = {h.elements, right_transversal(g, h).reps};
      entry.right = {h.elements, left_transversal(g, h).reps};
      entry.route = "subgroup";
      ok = true;
    } else if (auto jt = subgroups.find(n / d); jt != subgroups.end()) {
      const auto& k = jt->second;
      // G = Y*K for a left transversal Y and G = K*X for a right one.
      entry.left = {left_transversal(g, k).reps, k.elements};
      entry.right = {right_transversal(g, k).reps, k.elements};
      entry.route = "transversal";
      ok = true;
    } else {
      for (const Subset& a : enumerate_lagrange_subsets(g, d, CanonLevel::L1)) {
        if (auto b = find_left_complement(g, a)) {
          entry.left = {a, *b};
          entry.right = {invert_set(g, a), invert_set(g, *b)};
          entry.route = "search";
          ok = true;
          break;
        }
      }
    }
    ok = ok && verify_direct_factorization(g, entry.left.factor, entry.left.complement) &&
         verify_direct_factorization(g, entry.right.complement, entry.right.factor);
    if (!ok) {
      report.failed_divisor = d;
      report.holds = false;
      return report;
    }
    report.per_divisor.emplace(d, std::move(entry));
  }
  report.holds = true;
  return report;
}

Subset cyclic_witness(const Group& g, std::size_t d) {
  const std::size_t n = g.order();
  if (d < 3 || d >= n || n % d != 0) throw PreconditionError("cyclic witness needs a proper divisor d >= 3");
  std::optional<Element> gen;
  if (auto a = g.symbol("a"); a && g.element_order(*a) == n) gen = a;
  for (Element x = 0; x < n && !gen; ++x) {
    if (g.element_order(x) == n) gen = x;
  }
  if (!gen) throw PreconditionError(g.name() + " is not cyclic");
  Subset s(n);
  s.insert(g.identity());
  for (std::size_t k = 2; k <= d; ++k) s.insert(g.pow(*gen, static_cast<long long>(k)));
  return s;
}

}  // namespace subsetfactor
