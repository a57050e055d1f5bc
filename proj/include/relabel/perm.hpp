#pragma once

// Permutations of {0, ..., n-1}: composition, cycle structure, inversions, parity.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relabel/errors.hpp"

namespace relabel {

/// A bijection on {0, ..., n-1}; `p[i]` is the image of `i`.
class Permutation {
 public:
  using value_type = std::size_t;

  Permutation() = default;

  /// Throws InvalidArgument unless `map` is a bijection on {0, ..., map.size()-1}.
  explicit Permutation(std::vector<value_type> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (auto image : map_) {
      if (image >= map_.size() || seen[image]) {
        throw InvalidArgument("not a permutation of {0.." + std::to_string(map_.size()) +
                              "-1}");
      }
      seen[image] = true;
    }
  }

  Permutation(std::initializer_list<value_type> map)
      : Permutation(std::vector<value_type>(map)) {}

  static Permutation identity(std::size_t n) {
    std::vector<value_type> map(n);
    std::iota(map.begin(), map.end(), value_type{0});
    return Permutation(std::move(map), unchecked{});
  }

  /// The transposition exchanging `a` and `b` on n points.
  static Permutation transposition(std::size_t n, value_type a, value_type b) {
    if (a >= n || b >= n) throw InvalidArgument("transposition point out of range");
    auto t = identity(n);
    std::swap(t.map_[a], t.map_[b]);
    return t;
  }

  std::size_t size() const noexcept { return map_.size(); }
  value_type operator[](std::size_t i) const { return map_[i]; }
  value_type operator()(std::size_t i) const { return map_[i]; }
  std::span<const value_type> images() const noexcept { return map_; }
  const std::vector<value_type>& vector() const noexcept { return map_; }

  Permutation inverse() const {
    std::vector<value_type> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
    return Permutation(std::move(inv), unchecked{});
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < map_.size(); ++i)
      if (map_[i] != i) return false;
    return true;
  }

  std::size_t fixed_point_count() const noexcept {
    std::size_t fixed = 0;
    for (std::size_t i = 0; i < map_.size(); ++i) fixed += map_[i] == i;
    return fixed;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct unchecked {};
  Permutation(std::vector<value_type> map, unchecked) : map_(std::move(map)) {}

  friend Permutation compose(const Permutation&, const Permutation&);

  std::vector<value_type> map_;
};

/// (p o q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InvalidArgument("compose: permutation sizes differ");
  std::vector<Permutation::value_type> map(p.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = p[q[i]];
  return Permutation(std::move(map), Permutation::unchecked{});
}

using Cycle = std::vector<std::size_t>;

/// Nontrivial disjoint cycles in canonical form: each cycle starts at its smallest
/// element and cycles are sorted by that element. A cycle (a b c) means a->b->c->a.
struct CycleDecomposition {
  std::size_t n = 0;
  std::vector<Cycle> cycles;

  /// Number of moved points.
  std::size_t support_size() const noexcept {
    std::size_t total = 0;
    for (const auto& c : cycles) total += c.size();
    return total;
  }
  std::size_t cycle_count() const noexcept { return cycles.size(); }

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

inline CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition result{p.size(), {}};
  std::vector<bool> visited(p.size(), false);
  // Scanning starts in increasing order, so each cycle is found from its minimum.
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (visited[start] || p[start] == start) continue;
    Cycle cycle;
    for (auto i = start; !visited[i]; i = p[i]) {
      visited[i] = true;
      cycle.push_back(i);
    }
    result.cycles.push_back(std::move(cycle));
  }
  return result;
}

/// Rebuilds the permutation a decomposition describes.
inline Permutation from_cycles(const CycleDecomposition& d) {
  std::vector<std::size_t> map(d.n);
  std::iota(map.begin(), map.end(), std::size_t{0});
  for (const auto& cycle : d.cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (cycle[k] >= d.n) throw InvalidArgument("cycle element out of range");
      map[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(map));
}

namespace detail {

inline std::uint64_t merge_count(std::vector<std::size_t>& a, std::vector<std::size_t>& buf,
                                 std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t count = merge_count(a, buf, lo, mid) + merge_count(a, buf, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[j] < a[i]) {
      count += mid - i;
      buf[k++] = a[j++];
    } else {
      buf[k++] = a[i++];
    }
  }
  while (i < mid) buf[k++] = a[i++];
  while (j < hi) buf[k++] = a[j++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
            buf.begin() + static_cast<std::ptrdiff_t>(hi),
            a.begin() + static_cast<std::ptrdiff_t>(lo));
  return count;
}

}  // namespace detail

/// Number of pairs i < j with s[i] > s[j], by merge sort in O(n log n).
inline std::uint64_t inversions(std::span<const std::size_t> s) {
  std::vector<std::size_t> a(s.begin(), s.end());
  std::vector<std::size_t> buf(a.size());
  return detail::merge_count(a, buf, 0, a.size());
}

inline std::uint64_t inversions(const Permutation& p) { return inversions(p.images()); }

enum class Parity { even, odd };

inline Parity operator^(Parity a, Parity b) { return a == b ? Parity::even : Parity::odd; }

/// n minus the number of cycles (fixed points included) has the same parity as the
/// inversion count.
inline Parity parity(const Permutation& p) {
  const auto d = cycle_decomposition(p);
  const std::size_t transpositions = d.support_size() - d.cycle_count();
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

/// Normalizes p to fix 0: p itself when p(0) = 0, otherwise p o (0 j) where p(j) = 0.
inline Permutation pi_zero(const Permutation& p) {
  if (p.size() == 0 || p[0] == 0) return p;
  const auto j = p.inverse()[0];
  return compose(p, Permutation::transposition(p.size(), 0, j));
}

/// Lehmer-code rank of a permutation of {0..n-1}, n <= 20; a bijection onto [0, n!).
inline std::uint64_t lehmer_rank(std::span<const std::size_t> s) {
  std::uint64_t rank = 0;
  std::uint32_t unused = s.size() >= 32 ? ~0u : ((1u << s.size()) - 1u);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto below = std::popcount(unused & ((1u << s[i]) - 1u));
    rank = rank * (s.size() - i) + static_cast<std::uint64_t>(below);
    unused &= ~(1u << s[i]);
  }
  return rank;
}

/// Inverse of lehmer_rank; writes the permutation of {0..out.size()-1} into `out`.
inline void lehmer_unrank(std::uint64_t rank, std::span<std::size_t> out) {
  const std::size_t n = out.size();
  std::vector<std::size_t> digits(n);
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t base = n - i;
    digits[i] = static_cast<std::size_t>(rank % base);
    rank /= base;
  }
  std::uint32_t unused = n >= 32 ? ~0u : ((1u << n) - 1u);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t mask = unused;
    for (std::size_t skip = digits[i]; skip > 0; --skip) mask &= mask - 1;
    const auto value = static_cast<std::size_t>(std::countr_zero(mask));
    out[i] = value;
    unused &= ~(1u << value);
  }
}

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace relabel
