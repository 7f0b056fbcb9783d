#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chainface/errors.hpp"

namespace chainface {

/// Finite poset on elements {1, ..., p}, stored as its Hasse diagram plus
/// the precomputed strict reachability relation. Immutable after
/// construction; all queries are const and safe for concurrent readers.
class Poset {
 public:
  Poset() = default;

  int size() const { return p_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  bool less(int x, int y) const { return less_[idx(x, y)]; }
  bool leq(int x, int y) const { return x == y || less(x, y); }
  bool comparable(int x, int y) const { return x == y || less(x, y) || less(y, x); }
  bool covers_rel(int x, int y) const;  // x is covered by y

  const std::vector<int>& up_covers(int x) const { return up_[x]; }
  const std::vector<int>& down_covers(int x) const { return down_[x]; }
  const std::vector<int>& minimal_elements() const { return minimal_; }
  const std::vector<int>& maximal_elements() const { return maximal_; }

  friend Poset build_poset(int p, const std::vector<std::pair<int, int>>& relations);

 private:
  int idx(int x, int y) const { return x * (p_ + 1) + y; }

  int p_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<char> less_;  // (p+1)^2 strict-order matrix
  std::vector<std::vector<int>> up_, down_;
  std::vector<int> minimal_, maximal_;
};

/// A chain as the sequence of its elements in poset order (min first).
struct Chain {
  std::vector<int> elems;

  Chain() = default;
  explicit Chain(std::vector<int> e) : elems(std::move(e)) {}

  bool operator==(const Chain&) const = default;
  auto operator<=>(const Chain& o) const { return elems <=> o.elems; }

  bool contains(int x) const;
  int position_of(int x) const;  // -1 if absent
  /// Elements up to and including x: (-inf, x] along the chain.
  std::vector<int> prefix_through(int x) const;
  /// Elements from x on: [x, inf) along the chain.
  std::vector<int> suffix_from(int x) const;
  /// Elements strictly after x: (x, inf) along the chain.
  std::vector<int> suffix_after(int x) const;
  /// Elements strictly between x and y along the chain.
  std::vector<int> open_interval(int x, int y) const;
};

/// Duplicate-free set of maximal chains of one poset, kept sorted in the
/// canonical (lexicographic by element sequence) order.
struct ChainFamily {
  std::vector<Chain> chains;

  ChainFamily() = default;
  explicit ChainFamily(std::vector<Chain> cs);

  bool operator==(const ChainFamily&) const = default;

  std::size_t size() const { return chains.size(); }
  bool empty() const { return chains.empty(); }
  bool contains(const Chain& c) const;
  void insert(const Chain& c);
  bool subset_of(const ChainFamily& o) const;

  auto begin() const { return chains.begin(); }
  auto end() const { return chains.end(); }
};

/// Validates labels and acyclicity, transitively reduces the supplied
/// relation, and precomputes reachability.
Poset build_poset(int p, const std::vector<std::pair<int, int>>& relations);

bool is_chain(const Poset& P, const std::vector<int>& elems);
bool is_maximal_chain(const Poset& P, const Chain& c);
/// Sorts a set of pairwise comparable elements into chain order.
Chain chain_from_set(const Poset& P, std::vector<int> elems);

/// All maximal chains, canonically ordered, each exactly once.
ChainFamily maximal_chains(const Poset& P);

enum class ComposeKind { DisjointUnion, OrdinalSum, DirectProduct };

struct Composite {
  Poset poset;
  // Disjoint union / ordinal sum: new label of x in P1 is map1[x], of y in
  // P2 is map2[y]. Direct product: (x, y) maps to product_map[x-1][y-1]
  // (row-major, i.e. (x-1)*p2 + y).
  std::vector<int> map1, map2;
  std::vector<std::vector<int>> product_map;
};

Composite compose(ComposeKind kind, const Poset& P1, const Poset& P2);

enum class IntervalKind { Open, Closed, DownClosed, UpClosed };

/// Interval of P; lo = nullopt means -inf, hi = nullopt means +inf.
/// DownClosed is (lo, hi], UpClosed is [lo, hi).
std::vector<int> interval(const Poset& P, IntervalKind kind,
                          std::optional<int> lo, std::optional<int> hi);

/// The m-by-n grid: pairs (x, y), x in 1..m, y in 1..n, ordered
/// coordinatewise, labeled row-major as (x-1)*n + y.
Poset grid_poset(int m, int n);

}  // namespace chainface
