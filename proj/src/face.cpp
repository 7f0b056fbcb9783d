#include "chainface/face.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

#include "chainface/linalg.hpp"
#include "chainface/oracle.hpp"

namespace chainface {

namespace {

std::vector<RatVec> family_points(const Poset& P, const ChainFamily& F) {
  std::vector<RatVec> pts;
  for (const Chain& c : F) pts.push_back(incidence(P, c));
  return pts;
}

Chain glue(const std::vector<int>& prefix, const std::vector<int>& suffix) {
  std::vector<int> e(prefix);
  e.insert(e.end(), suffix.begin(), suffix.end());
  return Chain(std::move(e));
}

}  // namespace

FaceClass face_class(const Poset& P, const ChainFamily& F) {
  StructureReport r = classify_structure(P, F);
  switch (r.verdict) {
    case Verdict::NoStructure:
      return {FaceTag::SimplexFace, static_cast<int>(F.size()) - 1};
    case Verdict::CompleteStructure:
      return {FaceTag::NonSimplexFace, affine_rank(family_points(P, F))};
    default:
      return {FaceTag::NotFace, std::nullopt};
  }
}

ChainFamily star_step(const Poset& P, const ChainFamily& F) {
  if (F.empty()) throw WitnessError("empty chain family");
  ChainFamily out = F;
  StructureReport r = classify_structure(P, F);
  for (const auto& fc : r.crowns)
    for (const Chain& d : fc.missing) out.insert(d);
  for (const auto& fs : r.stars)
    for (const Chain& d : fs.missing) out.insert(d);
  return out;
}

std::vector<ChainFamily> closure_trace(const Poset& P, const ChainFamily& F) {
  std::vector<ChainFamily> steps{F};
  for (;;) {
    ChainFamily next = star_step(P, steps.back());
    if (next == steps.back()) return steps;
    if (next.size() <= steps.back().size())
      throw std::logic_error("closure step must strictly grow");
    steps.push_back(std::move(next));
  }
}

ChainFamily closure(const Poset& P, const ChainFamily& F) {
  return closure_trace(P, F).back();
}

bool is_edge(const Poset& P, const Chain& c1, const Chain& c2) {
  return !diamond_poset(P, c1, c2).has_two_crown;
}

std::pair<Chain, Chain> rectangle_completion(const Poset& P, const Chain& c1,
                                             const Chain& c2) {
  if (c1 == c2) throw EqualChainsError("chains are equal");
  ChainFamily pair({c1, c2});
  auto crowns = find_crowns(P, pair, 2);
  if (!crowns.empty()) {
    const GuidedCrown& w = crowns.front();
    // Orient so that (alpha_1, beta_1) lies on c1.
    int a1 = w.alphas[0], b1 = w.betas[0], a2 = w.alphas[1], b2 = w.betas[1];
    if (!c1.contains(a1)) {
      std::swap(a1, a2);
      std::swap(b1, b2);
    }
    return {glue(c1.prefix_through(a1), c2.suffix_from(b2)),
            glue(c2.prefix_through(a2), c1.suffix_from(b1))};
  }
  auto stars = find_stars(P, pair);
  for (const auto& s : stars) {
    for (const auto& [w1, w2, gamma] : s.witness_pairs) {
      const Chain& first = w1 == c1 ? c1 : c2;
      const Chain& second = w1 == c1 ? c2 : c1;
      return {glue(first.prefix_through(gamma), second.suffix_after(gamma)),
              glue(second.prefix_through(gamma), first.suffix_after(gamma))};
    }
  }
  throw NotApplicableError("conv(C1, C2) is an edge");
}

int polytope_dim(const Poset& P) {
  return affine_rank(family_points(P, maximal_chains(P)));
}

namespace {

using Mask = std::uint32_t;

struct ClosureSystem {
  const Poset& P;
  ChainFamily all;
  int n;
  std::map<Mask, Mask> memo;

  explicit ClosureSystem(const Poset& p, int cap) : P(p), all(maximal_chains(p)) {
    n = static_cast<int>(all.size());
    if (n > cap)
      throw CapExceededError("maximal chain count " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap),
                             n);
  }

  ChainFamily to_family(Mask m) const {
    std::vector<Chain> cs;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) cs.push_back(all.chains[i]);
    return ChainFamily(std::move(cs));
  }

  Mask to_mask(const ChainFamily& F) const {
    Mask m = 0;
    for (const Chain& c : F) {
      auto it = std::lower_bound(all.chains.begin(), all.chains.end(), c);
      m |= Mask(1) << (it - all.chains.begin());
    }
    return m;
  }

  Mask close(Mask m) {
    if (m == 0) return 0;
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    Mask c = to_mask(closure(P, to_family(m)));
    memo.emplace(m, c);
    return c;
  }
};

}  // namespace

FaceLattice face_lattice(const Poset& P, int max_chains, bool brute_force) {
  ClosureSystem sys(P, max_chains);
  int n = sys.n;
  std::vector<Mask> closed;

  if (brute_force) {
    for (Mask m = 0; m < (Mask(1) << n); ++m)
      if (sys.close(m) == m) closed.push_back(m);
  } else {
    // Lectic (next-closure) enumeration over the canonical chain order.
    Mask a = 0;
    closed.push_back(a);
    Mask full = n == 32 ? ~Mask(0) : (Mask(1) << n) - 1;
    while (a != full) {
      for (int i = n - 1; i >= 0; --i) {
        Mask bit = Mask(1) << i;
        if (a & bit) {
          a &= ~bit;
          continue;
        }
        Mask below = bit - 1;
        Mask b = sys.close((a & below) | bit);
        if (((b ^ (a & below)) & below) == 0) {
          a = b;
          closed.push_back(a);
          break;
        }
      }
    }
  }

  std::sort(closed.begin(), closed.end(), [&](Mask x, Mask y) {
    int px = std::popcount(x), py = std::popcount(y);
    if (px != py) return px < py;
    return sys.to_family(x).chains < sys.to_family(y).chains;
  });

  FaceLattice L;
  std::map<Mask, int> index;
  for (Mask m : closed) {
    index[m] = static_cast<int>(L.faces.size());
    ChainFamily f = sys.to_family(m);
    L.dims.push_back(f.empty() ? -1
                               : affine_rank(family_points(P, f)));
    L.faces.push_back(std::move(f));
  }
  // Covers of F: the inclusion-minimal closures of one-chain extensions.
  for (Mask m : closed) {
    std::vector<Mask> ups;
    for (int i = 0; i < n; ++i) {
      if (m >> i & 1) continue;
      ups.push_back(sys.close(m | (Mask(1) << i)));
    }
    std::sort(ups.begin(), ups.end());
    ups.erase(std::unique(ups.begin(), ups.end()), ups.end());
    for (Mask u : ups) {
      bool minimal = std::none_of(ups.begin(), ups.end(), [&](Mask v) {
        return v != u && (v & u) == v;
      });
      if (minimal) L.covers.emplace_back(index[m], index[u]);
    }
  }
  std::sort(L.covers.begin(), L.covers.end());
  return L;
}

std::vector<long long> f_vector(const Poset& P, int max_chains) {
  FaceLattice L = face_lattice(P, max_chains);
  int dim = 0;
  for (int d : L.dims) dim = std::max(dim, d);
  std::vector<long long> f(dim + 1, 0);
  for (int d : L.dims)
    if (d >= 0) ++f[d];
  return f;
}

bool is_covering_in_K(const Poset& P, const ChainFamily& F1,
                      const ChainFamily& F2) {
  if (!F1.empty() && closure(P, F1) != F1)
    throw NotClosedError("lower family is not closed");
  if (F2.empty() || closure(P, F2) != F2)
    throw NotClosedError("upper family is not closed");
  if (!(F1.subset_of(F2)) || F1 == F2)
    throw NotNestedError("families must be strictly nested");
  for (const Chain& d : F2) {
    if (F1.contains(d)) continue;
    ChainFamily ext = F1;
    ext.insert(d);
    if (closure(P, ext) != F2) return false;
  }
  return true;
}

GridFlag grid_flag(int m, int n) {
  if (m < 1 || n < 1) throw LabelError("grid dimensions must be positive");
  Poset G = grid_poset(m, n);
  ChainFamily all = maximal_chains(G);
  auto lab = [n](int s, int t) { return (s - 1) * n + t; };

  auto s_set = [&](int x, int y) {
    std::vector<int> out;
    for (int s = 1; s <= m; ++s)
      for (int t = 1; t <= n; ++t) {
        bool hook = t == 1 || s == m;
        bool wedge = y >= 2 && (t - s < y - x || (t - s == y - x && t <= y));
        if (hook || wedge) out.push_back(lab(s, t));
      }
    return out;
  };
  auto family_in = [&](const std::vector<int>& s) {
    std::set<int> allow(s.begin(), s.end());
    std::vector<Chain> cs;
    for (const Chain& c : all)
      if (std::all_of(c.elems.begin(), c.elems.end(),
                      [&](int e) { return allow.count(e) > 0; }))
        cs.push_back(c);
    return ChainFamily(std::move(cs));
  };

  GridFlag g;
  g.m = m;
  g.n = n;
  g.stages.push_back({0, 0, {}, ChainFamily{}});

  std::vector<std::pair<int, int>> coords{{m, 1}};
  if (!(m == 1 || n == 1)) {
    int x = m - 1, y = 2;
    for (;;) {
      coords.emplace_back(x, y);
      if (x == 1 && y == n) break;
      if (x == m - 1 || y == n) {
        if (x > y) {
          x = x - y + 1;
          y = 2;
        } else {
          y = y - x + 2;
          x = 1;
        }
      } else {
        ++x;
        ++y;
      }
    }
  }
  for (auto [x, y] : coords) {
    auto s = s_set(x, y);
    g.stages.push_back({x, y, s, family_in(s)});
  }

  for (std::size_t i = 0; i + 1 < g.stages.size(); ++i) {
    const auto& lo = g.stages[i].family;
    const auto& hi = g.stages[i + 1].family;
    if (!lo.subset_of(hi) || lo == hi)
      throw std::logic_error("grid flag stages must strictly increase");
    if (!is_covering_in_K(G, lo, hi))
      throw std::logic_error("grid flag stage is not a covering");
  }
  if (g.stages.back().family != all)
    throw std::logic_error("grid flag must end at all maximal chains");
  g.dim = affine_rank(family_points(G, all));
  return g;
}

const char* face_tag_name(FaceTag t) {
  switch (t) {
    case FaceTag::SimplexFace:
      return "SimplexFace";
    case FaceTag::NonSimplexFace:
      return "NonSimplexFace";
    default:
      return "NotFace";
  }
}

}  // namespace chainface
