#include "chainface/crown.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace chainface {

namespace {

using Pair = std::pair<int, int>;

// Cover pairs realized inside members of F, with the list of member indices
// through each pair. A chain containing both ends of a cover contains them
// consecutively.
std::map<Pair, std::vector<int>> realized_pairs(const ChainFamily& F) {
  std::map<Pair, std::vector<int>> out;
  for (std::size_t k = 0; k < F.chains.size(); ++k) {
    const auto& e = F.chains[k].elems;
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
      out[{e[i], e[i + 1]}].push_back(static_cast<int>(k));
  }
  return out;
}

// Members of F through both x and y (not necessarily consecutive).
std::vector<int> members_through(const ChainFamily& F, int x, int y) {
  std::vector<int> out;
  for (std::size_t k = 0; k < F.chains.size(); ++k)
    if (F.chains[k].contains(x) && F.chains[k].contains(y))
      out.push_back(static_cast<int>(k));
  return out;
}

Chain glue(const std::vector<int>& prefix, const std::vector<int>& suffix) {
  std::vector<int> e(prefix);
  e.insert(e.end(), suffix.begin(), suffix.end());
  return Chain(std::move(e));
}

}  // namespace

std::vector<int> GuidedStar::gammas() const {
  std::vector<int> out;
  for (const auto& [c1, c2, g] : witness_pairs) out.push_back(g);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GuidedStar> find_stars(const Poset& P, const ChainFamily& F) {
  if (F.empty()) throw WitnessError("empty chain family");
  using Key = std::array<int, 4>;
  std::map<Key, std::set<std::tuple<Chain, Chain, int>>> found;

  for (std::size_t i = 0; i < F.chains.size(); ++i)
    for (std::size_t j = i + 1; j < F.chains.size(); ++j) {
      const Chain& X = F.chains[i];
      const Chain& Y = F.chains[j];
      for (std::size_t gp = 0; gp < X.elems.size(); ++gp) {
        int gamma = X.elems[gp];
        int gq = Y.position_of(gamma);
        if (gq < 0) continue;
        for (std::size_t ap = 0; ap < gp; ++ap)
          for (int aq = 0; aq < gq; ++aq) {
            int a1 = X.elems[ap], a2 = Y.elems[aq];
            if (P.comparable(a1, a2)) continue;
            for (std::size_t bp = gp + 1; bp < X.elems.size(); ++bp)
              for (std::size_t bq = gq + 1; bq < Y.elems.size(); ++bq) {
                int b1 = X.elems[bp], b2 = Y.elems[bq];
                if (P.comparable(b1, b2)) continue;
                if (Pair{a1, b1} < Pair{a2, b2})
                  found[{a1, b1, a2, b2}].insert({X, Y, gamma});
                else
                  found[{a2, b2, a1, b1}].insert({Y, X, gamma});
              }
          }
      }
    }

  std::vector<GuidedStar> out;
  for (auto& [key, wits] : found) {
    GuidedStar s;
    s.a1 = key[0];
    s.b1 = key[1];
    s.a2 = key[2];
    s.b2 = key[3];
    s.witness_pairs.assign(wits.begin(), wits.end());
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<GuidedCrown> find_crowns(const Poset& P, const ChainFamily& F,
                                     std::optional<int> max_rho) {
  if (F.empty()) throw WitnessError("empty chain family");
  int cap = max_rho.value_or(P.size());
  auto realized = realized_pairs(F);

  // Guided edges a -> b grouped by a, ascending.
  std::vector<std::vector<int>> guided(P.size() + 1);
  for (const auto& [pr, idx] : realized) guided[pr.first].push_back(pr.second);

  std::set<std::vector<int>> seen;
  std::vector<GuidedCrown> out;

  std::vector<int> alphas, betas;
  std::vector<char> in_alpha(P.size() + 1, 0), in_beta(P.size() + 1, 0);

  auto record = [&](int) {
    std::vector<int> seq;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      seq.push_back(alphas[i]);
      seq.push_back(betas[i]);
    }
    if (!seen.insert(seq).second) return;
    GuidedCrown w;
    w.rho = static_cast<int>(alphas.size());
    w.alphas = alphas;
    w.betas = betas;
    for (int i = 0; i < w.rho; ++i) {
      const auto& idx = realized.at({w.alphas[i], w.betas[i]});
      w.witnesses.push_back(F.chains[idx.front()]);
    }
    out.push_back(std::move(w));
  };

  // Alternating cycle search. Each crown is discovered once, from the
  // rotation starting at its smallest alpha: extensions below the start
  // alpha are pruned.
  auto dfs = [&](auto&& self, int a0, int last_beta) -> void {
    if (alphas.size() >= 2 && P.covers_rel(a0, last_beta)) record(a0);
    if (static_cast<int>(alphas.size()) >= cap) return;
    for (int a : P.down_covers(last_beta)) {
      if (a <= a0 || in_alpha[a]) continue;
      for (int b : guided[a]) {
        if (in_beta[b]) continue;
        alphas.push_back(a);
        betas.push_back(b);
        in_alpha[a] = 1;
        in_beta[b] = 1;
        self(self, a0, b);
        in_alpha[a] = 0;
        in_beta[b] = 0;
        alphas.pop_back();
        betas.pop_back();
      }
    }
  };

  for (const auto& [pr, idx] : realized) {
    auto [a0, b0] = pr;
    alphas = {a0};
    betas = {b0};
    in_alpha[a0] = 1;
    in_beta[b0] = 1;
    dfs(dfs, a0, b0);
    in_alpha[a0] = 0;
    in_beta[b0] = 0;
  }

  std::sort(out.begin(), out.end(), [](const GuidedCrown& a, const GuidedCrown& b) {
    return std::pair(a.rho, a.interleaved()) < std::pair(b.rho, b.interleaved());
  });
  return out;
}

std::pair<bool, std::vector<Chain>> check_complete(const Poset& P,
                                                   const ChainFamily& F,
                                                   const GuidedCrown& w) {
  for (const Chain& c : w.witnesses)
    if (!F.contains(c)) throw WitnessError("crown witness not in family");
  auto realized = realized_pairs(F);
  std::set<Chain> missing;
  for (int i = 0; i < w.rho; ++i) {
    int prev = (i + w.rho - 1) % w.rho;
    auto ci_it = realized.find({w.alphas[i], w.betas[i]});
    auto cp_it = realized.find({w.alphas[prev], w.betas[prev]});
    if (ci_it == realized.end() || cp_it == realized.end())
      throw WitnessError("crown pair not realized in family");
    for (int ki : ci_it->second)
      for (int kp : cp_it->second) {
        Chain swapped = glue(F.chains[ki].prefix_through(w.alphas[i]),
                             F.chains[kp].suffix_from(w.betas[prev]));
        if (!F.contains(swapped)) missing.insert(std::move(swapped));
      }
  }
  std::vector<Chain> miss(missing.begin(), missing.end());
  return {miss.empty(), miss};
}

std::pair<bool, std::vector<Chain>> check_complete(const Poset& P,
                                                   const ChainFamily& F,
                                                   const GuidedStar& s) {
  auto w1 = members_through(F, s.a1, s.b1);
  auto w2 = members_through(F, s.a2, s.b2);
  if (w1.empty() || w2.empty())
    throw WitnessError("star pair not realized in family");
  std::set<Chain> missing;
  for (int k1 : w1)
    for (int k2 : w2) {
      const Chain& c1 = F.chains[k1];
      const Chain& c2 = F.chains[k2];
      auto i1 = c1.open_interval(s.a1, s.b1);
      auto i2 = c2.open_interval(s.a2, s.b2);
      for (int g : i1) {
        if (std::find(i2.begin(), i2.end(), g) == i2.end()) continue;
        Chain u = glue(c1.prefix_through(g), c2.suffix_after(g));
        Chain v = glue(c2.prefix_through(g), c1.suffix_after(g));
        if (!F.contains(u)) missing.insert(std::move(u));
        if (!F.contains(v)) missing.insert(std::move(v));
      }
    }
  std::vector<Chain> miss(missing.begin(), missing.end());
  return {miss.empty(), miss};
}

StructureReport classify_structure(const Poset& P, const ChainFamily& F,
                                   std::optional<int> max_rho) {
  if (F.empty()) throw WitnessError("empty chain family");
  StructureReport r;
  for (const auto& w : find_crowns(P, F, max_rho)) {
    auto [ok, miss] = check_complete(P, F, w);
    r.crowns.push_back({w, ok, std::move(miss)});
  }
  for (const auto& s : find_stars(P, F)) {
    auto [ok, miss] = check_complete(P, F, s);
    r.stars.push_back({s, ok, std::move(miss)});
  }
  if (r.crowns.empty() && r.stars.empty())
    r.verdict = Verdict::NoStructure;
  else {
    bool all = std::all_of(r.crowns.begin(), r.crowns.end(),
                           [](const auto& c) { return c.complete; }) &&
               std::all_of(r.stars.begin(), r.stars.end(),
                           [](const auto& s) { return s.complete; });
    r.verdict = all ? Verdict::CompleteStructure : Verdict::IncompleteStructure;
  }
  return r;
}

Diamond diamond_poset(const Poset& P, const Chain& c1, const Chain& c2) {
  if (c1 == c2) throw EqualChainsError("chains are equal");
  if (!is_maximal_chain(P, c1) || !is_maximal_chain(P, c2))
    throw WitnessError("diamond requires maximal chains");

  std::set<int> u(c1.elems.begin(), c1.elems.end());
  u.insert(c2.elems.begin(), c2.elems.end());
  std::set<int> s1(c1.elems.begin(), c1.elems.end());
  std::set<int> s2(c2.elems.begin(), c2.elems.end());

  Diamond d;
  for (int x : u)
    if (!s1.count(x) || !s2.count(x)) d.labels.push_back(x);
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < d.labels.size(); ++i)
    relabel[d.labels[i]] = static_cast<int>(i) + 1;

  // Order via covering sequences inside the union: reachability of the
  // cover digraph restricted to the union, then restricted to the
  // symmetric difference.
  std::map<int, std::vector<int>> adj;
  for (int x : u)
    for (int y : P.up_covers(x))
      if (u.count(y)) adj[x].push_back(y);
  std::vector<std::pair<int, int>> rel;
  for (int s : d.labels) {
    std::set<int> reach;
    std::vector<int> stack(adj[s]);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (!reach.insert(v).second) continue;
      for (int w : adj[v]) stack.push_back(w);
    }
    for (int t : d.labels)
      if (reach.count(t)) rel.emplace_back(relabel[s], relabel[t]);
  }
  d.poset = build_poset(static_cast<int>(d.labels.size()), rel);

  auto project = [&](const Chain& a, const std::set<int>& other) {
    std::vector<int> e;
    for (int x : a.elems)
      if (!other.count(x)) e.push_back(relabel[x]);
    return Chain(std::move(e));
  };
  d.d1 = project(c1, s2);
  d.d2 = project(c2, s1);
  ChainFamily fam({d.d1, d.d2});
  d.has_two_crown = !find_crowns(d.poset, fam, 2).empty();
  return d;
}

std::vector<Chain> swap_chains(const Poset& P, const ChainFamily& F,
                               const GuidedCrown& w,
                               const std::vector<Chain>& choices) {
  if (static_cast<int>(choices.size()) != w.rho)
    throw WitnessError("need one witness chain per crown index");
  for (int i = 0; i < w.rho; ++i) {
    const Chain& c = choices[i];
    if (!F.contains(c)) throw WitnessError("witness chain not in family");
    if (!c.contains(w.alphas[i]) || !c.contains(w.betas[i]))
      throw WitnessError("witness chain misses its crown pair");
  }
  std::vector<Chain> out;
  for (int i = 0; i < w.rho; ++i) {
    int prev = (i + w.rho - 1) % w.rho;
    out.push_back(glue(choices[i].prefix_through(w.alphas[i]),
                       choices[prev].suffix_from(w.betas[prev])));
  }
  bool fresh = std::any_of(out.begin(), out.end(), [&](const Chain& d) {
    return std::find(choices.begin(), choices.end(), d) == choices.end();
  });
  if (!fresh)
    throw std::logic_error("crown swap produced no chain outside the selection");
  return out;
}

std::vector<Chain> swap_chains(const Poset& P, const ChainFamily& F,
                               const GuidedStar& s, const Chain& c1,
                               const Chain& c2, int gamma) {
  if (!F.contains(c1) || !F.contains(c2))
    throw WitnessError("witness chain not in family");
  if (!c1.contains(s.a1) || !c1.contains(s.b1) || !c2.contains(s.a2) ||
      !c2.contains(s.b2))
    throw WitnessError("witness chain misses its star pair");
  auto i1 = c1.open_interval(s.a1, s.b1);
  auto i2 = c2.open_interval(s.a2, s.b2);
  if (std::find(i1.begin(), i1.end(), gamma) == i1.end() ||
      std::find(i2.begin(), i2.end(), gamma) == i2.end())
    throw WitnessError("gamma not interior to both witness chains");
  return {glue(c1.prefix_through(gamma), c2.suffix_after(gamma)),
          glue(c2.prefix_through(gamma), c1.suffix_after(gamma))};
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NoStructure:
      return "NoStructure";
    case Verdict::CompleteStructure:
      return "CompleteStructure";
    default:
      return "IncompleteStructure";
  }
}

}  // namespace chainface
