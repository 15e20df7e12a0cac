#include "subsetfactor/subset.hpp"

#include <algorithm>

#include "subsetfactor/error.hpp"

namespace subsetfactor {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

}  // namespace

Subset::Subset(std::size_t parent_order) : order_(parent_order), words_(word_count(parent_order), 0) {}

Subset::Subset(std::size_t parent_order, std::initializer_list<Element> members)
    : Subset(parent_order, std::span<const Element>(members.begin(), members.size())) {}

Subset::Subset(std::size_t parent_order, std::span<const Element> members) : Subset(parent_order) {
  for (Element x : members) {
    if (x >= parent_order) {
      throw PreconditionError("element index " + std::to_string(x) + " out of range for order " +
                              std::to_string(parent_order));
    }
    insert(x);
  }
}

Subset Subset::full(std::size_t parent_order) {
  Subset s(parent_order);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.clear_tail();
  return s;
}

void Subset::clear_tail() noexcept {
  const std::size_t rem = order_ % 64;
  if (rem != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

std::size_t Subset::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Element> Subset::members() const {
  std::vector<Element> out;
  out.reserve(size());
  for_each([&](Element x) { out.push_back(x); });
  return out;
}

Element Subset::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<Element>(w * 64 + std::countr_zero(words_[w]));
  }
  return static_cast<Element>(order_);
}

Element Subset::first_missing() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (~words_[w] != 0) {
      const auto x = static_cast<Element>(w * 64 + std::countr_one(words_[w]));
      return x < order_ ? x : static_cast<Element>(order_);
    }
  }
  return static_cast<Element>(order_);
}

bool Subset::intersects(const Subset& other) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

bool Subset::is_subset_of(const Subset& other) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

Subset Subset::complement() const {
  Subset out(order_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
  out.clear_tail();
  return out;
}

Subset& Subset::operator|=(const Subset& other) noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Subset& Subset::operator&=(const Subset& other) noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Subset& Subset::operator^=(const Subset& other) noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

Subset& Subset::operator-=(const Subset& other) noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) noexcept {
  if (auto c = a.order_ <=> b.order_; c != 0) return c;
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
  }
  return std::strong_ordering::equal;
}

std::size_t Subset::hash() const noexcept {
  std::size_t h = order_ * 0x9E3779B97F4A7C15ULL;
  for (auto w : words_) h = (h ^ w) * 0x100000001B3ULL + (h >> 29);
  return h;
}

}  // namespace subsetfactor
