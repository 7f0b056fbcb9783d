#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "chainface/io.hpp"
#include "chainface/poset.hpp"

namespace cf = chainface;

inline cf::Poset load_poset(const std::string& name) {
  return cf::read_poset_file(std::string(CHAINFACE_DATA_DIR) + "/" + name +
                             ".poset");
}

inline cf::ChainFamily fam(const cf::Poset& P, const std::string& text) {
  return cf::parse_family(P, text);
}

inline cf::Chain ch(const cf::Poset& P, const std::string& token) {
  return cf::parse_chain(P, token);
}

// Backtracking poset isomorphism for desk-scale tests.
inline bool isomorphic(const cf::Poset& A, const cf::Poset& B) {
  int p = A.size();
  if (p != B.size() || A.covers().size() != B.covers().size()) return false;
  std::vector<int> map(p + 1, 0);
  std::vector<char> used(p + 1, 0);
  auto degree_key = [](const cf::Poset& P, int x) {
    return std::pair(P.up_covers(x).size(), P.down_covers(x).size());
  };
  auto rec = [&](auto&& self, int x) -> bool {
    if (x > p) return true;
    for (int y = 1; y <= p; ++y) {
      if (used[y] || degree_key(A, x) != degree_key(B, y)) continue;
      bool ok = true;
      for (int z = 1; z < x && ok; ++z) {
        if (A.less(x, z) != B.less(y, map[z])) ok = false;
        if (ok && A.less(z, x) != B.less(map[z], y)) ok = false;
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = 1;
      if (self(self, x + 1)) return true;
      used[y] = 0;
      map[x] = 0;
    }
    return false;
  };
  return rec(rec, 1);
}

// Deterministic random poset: labels are a topological order.
inline cf::Poset random_poset(std::mt19937_64& rng, int max_p = 8) {
  std::uniform_int_distribution<int> psize(2, max_p);
  int p = psize(rng);
  std::vector<std::pair<int, int>> covers;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  double density = 0.15 + 0.5 * coin(rng);
  for (int i = 1; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j)
      if (coin(rng) < density / (1.0 + 0.3 * (j - i))) covers.emplace_back(i, j);
  return cf::build_poset(p, covers);
}

inline cf::ChainFamily random_family(std::mt19937_64& rng, const cf::Poset& P) {
  cf::ChainFamily all = cf::maximal_chains(P);
  int n = static_cast<int>(all.size());
  std::uniform_int_distribution<int> pick(0, 1);
  std::vector<cf::Chain> cs;
  while (cs.empty())
    for (const auto& c : all)
      if (pick(rng)) cs.push_back(c);
  return cf::ChainFamily(std::move(cs));
}

inline std::vector<std::string> corpus_names() {
  return {"p1", "p2", "p3", "p4", "p5"};
}
