#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace subsetfactor {

using Element = std::uint32_t;

/// Dense set of element indices over a parent group of fixed order.
///
/// Subsets are totally ordered by their bit-vector read as a little-endian
/// binary number: element i contributes 2^i, so the comparison is decided by
/// the largest index on which two subsets differ (the set lacking it is
/// smaller). All "least" and "first" notions in the library use this order.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t parent_order);
  Subset(std::size_t parent_order, std::initializer_list<Element> members);
  Subset(std::size_t parent_order, std::span<const Element> members);

  static Subset full(std::size_t parent_order);

  std::size_t parent_order() const noexcept { return order_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  bool contains(Element x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void insert(Element x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Element x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  // Members in increasing index order.
  std::vector<Element> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<Element>(std::countr_zero(bits));
        f(static_cast<Element>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  // Least member; parent_order() if empty.
  Element first() const noexcept;
  // Least non-member; parent_order() if full.
  Element first_missing() const noexcept;

  bool intersects(const Subset& other) const noexcept;
  bool is_subset_of(const Subset& other) const noexcept;
  Subset complement() const;

  Subset& operator|=(const Subset& other) noexcept;
  Subset& operator&=(const Subset& other) noexcept;
  Subset& operator^=(const Subset& other) noexcept;
  Subset& operator-=(const Subset& other) noexcept;

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  friend bool operator==(const Subset& a, const Subset& b) noexcept = default;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) noexcept;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::size_t hash() const noexcept;

 private:
  void clear_tail() noexcept;

  std::size_t order_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept { return s.hash(); }
};

}  // namespace subsetfactor
