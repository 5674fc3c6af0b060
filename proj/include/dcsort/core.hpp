// Element ordering, slice windows, snapshots, and the sequence predicates
// (sortedness, multiset permutation, uniform bounds, outside-slice equality)
// that every algorithm contract in this library is phrased in.
#pragma once

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ranges>
#include <span>
#include <stdexcept>
#include <vector>

namespace dcsort {

/// Total order required of array elements. The CLI instantiates
/// std::int64_t; any copyable type with a total <, <=, == works.
template <typename T>
concept Element = std::totally_ordered<T> && std::copyable<T>;

template <typename R>
concept ElementRange =
    std::ranges::random_access_range<R> && Element<std::ranges::range_value_t<R>>;

/// Validated half-open index window [l, r) over an array of length n.
/// Invariant: 0 <= l <= r <= n.
class SliceBounds {
public:
  SliceBounds() = default;
  SliceBounds(std::size_t l, std::size_t r, std::size_t n) : l_(l), r_(r), n_(n) {
    if (l > r || r > n)
      throw std::invalid_argument("SliceBounds: require l <= r <= n");
  }
  static SliceBounds whole(std::size_t n) { return SliceBounds(0, n, n); }

  std::size_t l() const { return l_; }
  std::size_t r() const { return r_; }
  std::size_t n() const { return n_; }
  std::size_t length() const { return r_ - l_; }
  bool empty() const { return l_ == r_; }

  friend bool operator==(const SliceBounds&, const SliceBounds&) = default;

private:
  std::size_t l_ = 0, r_ = 0, n_ = 0;
};

/// Immutable copy of an array's contents, taken at the entry of a call.
/// Stands in for the before-state that postconditions refer to.
template <Element T>
class Snapshot {
public:
  Snapshot() = default;
  explicit Snapshot(std::span<const T> source) : elems_(source.begin(), source.end()) {}
  explicit Snapshot(const std::vector<T>& source) : elems_(source) {}

  std::size_t size() const { return elems_.size(); }
  const T& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<T>& elems() const { return elems_; }
  std::span<const T> view() const { return elems_; }
  std::span<const T> view(std::size_t l, std::size_t r) const {
    if (l > r || r > elems_.size())
      throw std::invalid_argument("Snapshot::view: require l <= r <= size");
    return std::span<const T>(elems_.data() + l, r - l);
  }

private:
  std::vector<T> elems_;
};

template <Element T>
std::span<const T> slice(const std::vector<T>& v, std::size_t l, std::size_t r) {
  if (l > r || r > v.size())
    throw std::invalid_argument("slice: require l <= r <= size");
  return std::span<const T>(v.data() + l, r - l);
}

template <Element T>
std::span<const T> slice(std::span<const T> v, std::size_t l, std::size_t r) {
  if (l > r || r > v.size())
    throw std::invalid_argument("slice: require l <= r <= size");
  return v.subspan(l, r - l);
}

template <ElementRange R1, ElementRange R2>
  requires std::same_as<std::ranges::range_value_t<R1>, std::ranges::range_value_t<R2>>
std::vector<std::ranges::range_value_t<R1>> concat(const R1& x, const R2& y) {
  std::vector<std::ranges::range_value_t<R1>> out;
  out.reserve(std::ranges::size(x) + std::ranges::size(y));
  out.insert(out.end(), std::ranges::begin(x), std::ranges::end(x));
  out.insert(out.end(), std::ranges::begin(y), std::ranges::end(y));
  return out;
}

/// Non-strict ascending order over the whole range.
template <ElementRange R>
bool is_sorted(const R& s) {
  const std::size_t n = std::ranges::size(s);
  for (std::size_t i = 1; i < n; ++i)
    if (!(s[i - 1] <= s[i])) return false;
  return true;
}

/// Multiset equality of two sequences.
template <ElementRange R1, ElementRange R2>
  requires std::same_as<std::ranges::range_value_t<R1>, std::ranges::range_value_t<R2>>
bool is_perm(const R1& s, const R2& t) {
  if (std::ranges::size(s) != std::ranges::size(t)) return false;
  std::map<std::ranges::range_value_t<R1>, std::int64_t> counts;
  for (const auto& x : s) ++counts[x];
  for (const auto& x : t)
    if (--counts[x] < 0) return false;
  return true;
}

/// Every element of s <= every element of t (vacuously true when either
/// side is empty).
template <ElementRange R1, ElementRange R2>
  requires std::same_as<std::ranges::range_value_t<R1>, std::ranges::range_value_t<R2>>
bool uniformly_leq(const R1& s, const R2& t) {
  if (std::ranges::empty(s) || std::ranges::empty(t)) return true;
  auto max_s = s[0];
  for (const auto& x : s)
    if (max_s < x) max_s = x;
  for (const auto& y : t)
    if (!(max_s <= y)) return false;
  return true;
}

/// True iff `after` agrees with `before` everywhere outside [b.l, b.r).
template <Element T, ElementRange R>
  requires std::same_as<std::ranges::range_value_t<R>, T>
bool outside_unchanged(const Snapshot<T>& before, const R& after, const SliceBounds& b) {
  if (before.size() != std::ranges::size(after) || before.size() != b.n())
    throw std::invalid_argument("outside_unchanged: length mismatch");
  for (std::size_t i = 0; i < b.l(); ++i)
    if (!(before[i] == after[i])) return false;
  for (std::size_t i = b.r(); i < b.n(); ++i)
    if (!(before[i] == after[i])) return false;
  return true;
}

// The sequence lemmas used by the sorting proofs, as executable laws.
// Each encodes premise => conclusion, so generators may feed arbitrary
// inputs; tests additionally generate premise-satisfying cases.

/// Equal sequences have equal sub-slices.
template <Element T>
bool law_sub_eq(std::span<const T> u, std::span<const T> v, std::size_t p, std::size_t q) {
  if (u.size() != v.size() || !std::ranges::equal(u, v)) return true;
  if (p > q || q > u.size()) throw std::invalid_argument("law_sub_eq: require p <= q <= size");
  return std::ranges::equal(slice(u, p, q), slice(v, p, q));
}

/// The permutation relation is preserved by concatenation.
template <Element T>
bool law_perm_sum(std::span<const T> a, std::span<const T> b,
                  std::span<const T> c, std::span<const T> d) {
  if (!is_perm(a, b) || !is_perm(c, d)) return true;
  return is_perm(concat(a, c), concat(b, d));
}

/// Sortedness is preserved when taking sub-slices.
template <Element T>
bool law_sub_sorted(std::span<const T> s, std::size_t p, std::size_t q) {
  if (!is_sorted(s)) return true;
  return is_sorted(slice(s, p, q));
}

/// A uniform bound between two sequences survives permuting either side.
template <Element T>
bool law_perm_leqs(std::span<const T> s, std::span<const T> t,
                   std::span<const T> s2, std::span<const T> t2) {
  if (!uniformly_leq(s, t) || !is_perm(s, s2) || !is_perm(t, t2)) return true;
  return uniformly_leq(s2, t2);
}

/// Smallest k such that 2^k >= x (0 for x <= 1).
constexpr std::size_t ceil_log2(std::size_t x) {
  return x <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(x - 1));
}

}  // namespace dcsort
