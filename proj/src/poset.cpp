#include "chainface/poset.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace chainface {

bool Poset::covers_rel(int x, int y) const {
  return std::binary_search(up_[x].begin(), up_[x].end(), y);
}

bool Chain::contains(int x) const {
  return std::find(elems.begin(), elems.end(), x) != elems.end();
}

int Chain::position_of(int x) const {
  auto it = std::find(elems.begin(), elems.end(), x);
  return it == elems.end() ? -1 : static_cast<int>(it - elems.begin());
}

std::vector<int> Chain::prefix_through(int x) const {
  int pos = position_of(x);
  if (pos < 0) throw WitnessError("element not on chain");
  return {elems.begin(), elems.begin() + pos + 1};
}

std::vector<int> Chain::suffix_from(int x) const {
  int pos = position_of(x);
  if (pos < 0) throw WitnessError("element not on chain");
  return {elems.begin() + pos, elems.end()};
}

std::vector<int> Chain::suffix_after(int x) const {
  int pos = position_of(x);
  if (pos < 0) throw WitnessError("element not on chain");
  return {elems.begin() + pos + 1, elems.end()};
}

std::vector<int> Chain::open_interval(int x, int y) const {
  int px = position_of(x), py = position_of(y);
  if (px < 0 || py < 0 || px >= py) return {};
  return {elems.begin() + px + 1, elems.begin() + py};
}

ChainFamily::ChainFamily(std::vector<Chain> cs) : chains(std::move(cs)) {
  std::sort(chains.begin(), chains.end());
  chains.erase(std::unique(chains.begin(), chains.end()), chains.end());
}

bool ChainFamily::contains(const Chain& c) const {
  return std::binary_search(chains.begin(), chains.end(), c);
}

void ChainFamily::insert(const Chain& c) {
  auto it = std::lower_bound(chains.begin(), chains.end(), c);
  if (it == chains.end() || *it != c) chains.insert(it, c);
}

bool ChainFamily::subset_of(const ChainFamily& o) const {
  return std::includes(o.chains.begin(), o.chains.end(), chains.begin(),
                       chains.end());
}

Poset build_poset(int p, const std::vector<std::pair<int, int>>& relations) {
  if (p < 1) throw LabelError("poset size must be positive");
  Poset P;
  P.p_ = p;
  P.less_.assign((p + 1) * (p + 1), 0);

  std::vector<std::vector<int>> adj(p + 1);
  for (auto [x, y] : relations) {
    if (x < 1 || x > p || y < 1 || y > p)
      throw LabelError("cover label out of range: (" + std::to_string(x) +
                       ", " + std::to_string(y) + ")");
    if (x == y) throw CycleError("reflexive pair (" + std::to_string(x) + ")");
    adj[x].push_back(y);
  }

  // Strict reachability by DFS from each element.
  for (int s = 1; s <= p; ++s) {
    std::vector<int> stack = adj[s];
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (P.less_[P.idx(s, v)]) continue;
      P.less_[P.idx(s, v)] = 1;
      for (int w : adj[v]) stack.push_back(w);
    }
    if (P.less_[P.idx(s, s)])
      throw CycleError("directed cycle through " + std::to_string(s));
  }

  // Covers = transitive reduction of the reachability relation.
  for (int x = 1; x <= p; ++x)
    for (int y = 1; y <= p; ++y) {
      if (!P.less(x, y)) continue;
      bool direct = true;
      for (int z = 1; z <= p && direct; ++z)
        if (P.less(x, z) && P.less(z, y)) direct = false;
      if (direct) P.covers_.emplace_back(x, y);
    }
  std::sort(P.covers_.begin(), P.covers_.end());

  P.up_.assign(p + 1, {});
  P.down_.assign(p + 1, {});
  for (auto [x, y] : P.covers_) {
    P.up_[x].push_back(y);
    P.down_[y].push_back(x);
  }
  for (int x = 1; x <= p; ++x) {
    if (P.down_[x].empty()) P.minimal_.push_back(x);
    if (P.up_[x].empty()) P.maximal_.push_back(x);
  }
  return P;
}

bool is_chain(const Poset& P, const std::vector<int>& elems) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!P.comparable(elems[i], elems[j])) return false;
  return true;
}

bool is_maximal_chain(const Poset& P, const Chain& c) {
  const auto& e = c.elems;
  if (e.empty()) return false;
  if (!P.down_covers(e.front()).empty()) return false;
  if (!P.up_covers(e.back()).empty()) return false;
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    if (!P.covers_rel(e[i], e[i + 1])) return false;
  return true;
}

Chain chain_from_set(const Poset& P, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!is_chain(P, elems)) throw WitnessError("element set is not a chain");
  std::sort(elems.begin(), elems.end(),
            [&](int a, int b) { return P.less(a, b); });
  return Chain(std::move(elems));
}

ChainFamily maximal_chains(const Poset& P) {
  std::vector<Chain> out;
  std::vector<int> path;
  auto dfs = [&](auto&& self, int v) -> void {
    path.push_back(v);
    if (P.up_covers(v).empty())
      out.emplace_back(path);
    else
      for (int w : P.up_covers(v)) self(self, w);
    path.pop_back();
  };
  for (int s : P.minimal_elements()) dfs(dfs, s);
  return ChainFamily(std::move(out));
}

Composite compose(ComposeKind kind, const Poset& P1, const Poset& P2) {
  int p1 = P1.size(), p2 = P2.size();
  Composite result;
  if (kind == ComposeKind::DirectProduct) {
    result.product_map.assign(p1, std::vector<int>(p2));
    for (int x = 1; x <= p1; ++x)
      for (int y = 1; y <= p2; ++y)
        result.product_map[x - 1][y - 1] = (x - 1) * p2 + y;
    std::vector<std::pair<int, int>> covers;
    // Covers of a product: cover in one coordinate, equal in the other.
    for (int x = 1; x <= p1; ++x)
      for (int y = 1; y <= p2; ++y) {
        for (int xu : P1.up_covers(x))
          covers.emplace_back(result.product_map[x - 1][y - 1],
                              result.product_map[xu - 1][y - 1]);
        for (int yu : P2.up_covers(y))
          covers.emplace_back(result.product_map[x - 1][y - 1],
                              result.product_map[x - 1][yu - 1]);
      }
    result.poset = build_poset(p1 * p2, covers);
    return result;
  }

  result.map1.resize(p1 + 1);
  result.map2.resize(p2 + 1);
  for (int x = 1; x <= p1; ++x) result.map1[x] = x;
  for (int y = 1; y <= p2; ++y) result.map2[y] = p1 + y;
  std::vector<std::pair<int, int>> covers(P1.covers());
  for (auto [x, y] : P2.covers()) covers.emplace_back(p1 + x, p1 + y);
  if (kind == ComposeKind::OrdinalSum)
    for (int t : P1.maximal_elements())
      for (int b : P2.minimal_elements()) covers.emplace_back(t, p1 + b);
  result.poset = build_poset(p1 + p2, covers);
  return result;
}

std::vector<int> interval(const Poset& P, IntervalKind kind,
                          std::optional<int> lo, std::optional<int> hi) {
  auto check = [&](std::optional<int> v) {
    if (v && (*v < 1 || *v > P.size()))
      throw LabelError("interval bound out of range");
  };
  check(lo);
  check(hi);
  bool lo_closed = kind == IntervalKind::Closed || kind == IntervalKind::UpClosed;
  bool hi_closed = kind == IntervalKind::Closed || kind == IntervalKind::DownClosed;
  std::vector<int> out;
  for (int z = 1; z <= P.size(); ++z) {
    bool above = !lo || (lo_closed ? P.leq(*lo, z) : P.less(*lo, z));
    bool below = !hi || (hi_closed ? P.leq(z, *hi) : P.less(z, *hi));
    if (above && below) out.push_back(z);
  }
  return out;
}

Poset grid_poset(int m, int n) {
  if (m < 1 || n < 1) throw LabelError("grid dimensions must be positive");
  std::vector<std::pair<int, int>> covers;
  auto lab = [n](int x, int y) { return (x - 1) * n + y; };
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= n; ++y) {
      if (x < m) covers.emplace_back(lab(x, y), lab(x + 1, y));
      if (y < n) covers.emplace_back(lab(x, y), lab(x, y + 1));
    }
  return build_poset(m * n, covers);
}

}  // namespace chainface
