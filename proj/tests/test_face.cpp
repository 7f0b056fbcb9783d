#include <doctest.h>

#include "chainface/face.hpp"
#include "chainface/linalg.hpp"
#include "chainface/oracle.hpp"
#include "helpers.hpp"

using namespace chainface;

namespace {

std::vector<RatVec> points_of(const Poset& P, const ChainFamily& F) {
  std::vector<RatVec> pts;
  for (const Chain& c : F) pts.push_back(incidence(P, c));
  return pts;
}

}  // namespace

TEST_SUITE_BEGIN("face");

TEST_CASE("face trichotomy") {
  Poset p2 = load_poset("p2");
  auto fc = face_class(p2, fam(p2, "1278;135;1368;478"));
  CHECK(fc.tag == FaceTag::SimplexFace);
  CHECK(fc.dim == 3);

  Poset p4 = load_poset("p4");
  auto sq = face_class(p4, fam(p4, "12579;12589;13579;13589"));
  CHECK(sq.tag == FaceTag::NonSimplexFace);
  CHECK(sq.dim == 2);

  auto nf = face_class(p2, fam(p2, "125;1368;478"));
  CHECK(nf.tag == FaceTag::NotFace);
  CHECK_FALSE(nf.dim.has_value());
}

TEST_CASE("star_step") {
  Poset p5 = load_poset("p5");
  // Both 2-crowns of the family fire, so one step reaches everything.
  CHECK(star_step(p5, fam(p5, "14;25;26;34")) == maximal_chains(p5));

  Poset p2 = load_poset("p2");
  auto closed = fam(p2, "1278;135;1368;478");
  CHECK(star_step(p2, closed) == closed);

  Poset p1 = load_poset("p1");
  CHECK(star_step(p1, fam(p1, "1356;2456")) == fam(p1, "1356;1456;2356;2456"));
}

TEST_CASE("closure") {
  Poset p5 = load_poset("p5");
  auto trace = closure_trace(p5, fam(p5, "14;25;26;34"));
  CHECK(trace.back() == maximal_chains(p5));

  Poset p3 = load_poset("p3");
  auto cl = closure(p3, fam(p3, "146;257;38"));
  CHECK(cl == maximal_chains(p3));
  CHECK(cl == minimal_face_oracle(p3, fam(p3, "146;257;38")));

  // Idempotence on a closed family.
  Poset p4 = load_poset("p4");
  auto square = fam(p4, "12579;12589;13579;13589");
  CHECK(closure(p4, square) == square);
  CHECK(closure_trace(p4, square).size() == 1);
}

TEST_CASE("closure of an intermediate family settles the completion set") {
  // {148, 246} forces 146 and 248 via stars; nothing else.
  Poset p3 = load_poset("p3");
  CHECK(closure(p3, fam(p3, "146;148;17;246")) == fam(p3, "146;148;17;246;248"));
  CHECK(closure(p3, fam(p3, "146;148;17;248")) == fam(p3, "146;148;17;246;248"));
}

TEST_CASE("edges") {
  Poset p1 = load_poset("p1");
  CHECK(is_edge(p1, ch(p1, "1356"), ch(p1, "1357")));
  CHECK_FALSE(is_edge(p1, ch(p1, "1356"), ch(p1, "2456")));

  Poset p4 = load_poset("p4");
  CHECK_FALSE(is_edge(p4, ch(p4, "12579"), ch(p4, "13589")));

  // Edge test agrees with exact geometry on every pair of every bundled
  // poset: conv of a pair is an edge iff the pair family is a face.
  for (const auto& name : corpus_names()) {
    Poset P = load_poset(name);
    auto all = maximal_chains(P);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        ChainFamily pair({all.chains[i], all.chains[j]});
        bool edge = is_edge(P, all.chains[i], all.chains[j]);
        CHECK(edge == face_oracle(P, pair).has_value());
      }
  }
}

TEST_CASE("rectangle completion") {
  Poset p1 = load_poset("p1");
  auto [a, b] = rectangle_completion(p1, ch(p1, "1356"), ch(p1, "2456"));
  CHECK(a == ch(p1, "1456"));
  CHECK(b == ch(p1, "2356"));

  Poset p4 = load_poset("p4");
  auto [c, d] = rectangle_completion(p4, ch(p4, "12579"), ch(p4, "13589"));
  CHECK(c == ch(p4, "12589"));
  CHECK(d == ch(p4, "13579"));

  CHECK_THROWS_AS(rectangle_completion(p1, ch(p1, "1356"), ch(p1, "1357")),
                  NotApplicableError);

  // Rectangle identities, exactly.
  for (auto [P, c1, c2] : std::vector<std::tuple<Poset, Chain, Chain>>{
           {p1, ch(p1, "1356"), ch(p1, "2456")},
           {p4, ch(p4, "12579"), ch(p4, "13589")}}) {
    auto [x, y] = rectangle_completion(P, c1, c2);
    RatVec e1 = incidence(P, c1), e2 = incidence(P, c2);
    RatVec ex = incidence(P, x), ey = incidence(P, y);
    Rat dot(0);
    for (std::size_t k = 0; k < e1.size(); ++k) {
      CHECK(e1[k] + e2[k] == ex[k] + ey[k]);
      dot += (ex[k] - e1[k]) * (ey[k] - e1[k]);
    }
    CHECK(dot == 0);
  }
}

TEST_CASE("polytope dimension and f-vector") {
  CHECK(polytope_dim(grid_poset(3, 3)) == 4);
  CHECK(polytope_dim(load_poset("p3")) == 6);
  Poset p1 = load_poset("p1");
  CHECK(polytope_dim(p1) == 3);
  CHECK(f_vector(p1) == std::vector<long long>{8, 12, 6, 1});
}

TEST_CASE("face lattice of simple posets") {
  // Antichain: every nonempty subset is closed (a simplex).
  Poset a3 = build_poset(3, {});
  auto L = face_lattice(a3);
  CHECK(L.faces.size() == 8);
  CHECK(f_vector(a3) == std::vector<long long>{3, 3, 1});

  // A single chain: the polytope is a point.
  Poset chain = build_poset(3, {{1, 2}, {2, 3}});
  auto Lc = face_lattice(chain);
  CHECK(Lc.faces.size() == 2);
  CHECK(Lc.dims == std::vector<int>{-1, 0});
}

TEST_CASE("face lattice of the grid poset") {
  Poset p4 = load_poset("p4");
  auto L = face_lattice(p4);
  int vertices = 0, top_dim = 0;
  for (int d : L.dims) {
    if (d == 0) ++vertices;
    top_dim = std::max(top_dim, d);
  }
  CHECK(vertices == 6);
  CHECK(top_dim == 4);

  // Next-closure enumeration matches plain subset filtering.
  auto B = face_lattice(p4, 20, /*brute_force=*/true);
  CHECK(L.faces == B.faces);
  CHECK(L.covers == B.covers);
  CHECK(L.dims == B.dims);
}

TEST_CASE("lattice covers step dimension by exactly one") {
  for (const auto& name : corpus_names()) {
    Poset P = load_poset(name);
    if (maximal_chains(P).size() > 10) continue;
    auto L = face_lattice(P);
    for (auto [lo, hi] : L.covers) CHECK(L.dims[hi] == L.dims[lo] + 1);
    // Strict inclusions strictly increase dimension.
    for (std::size_t i = 0; i < L.faces.size(); ++i)
      for (std::size_t j = 0; j < L.faces.size(); ++j)
        if (i != j && L.faces[i].subset_of(L.faces[j]))
          CHECK(L.dims[i] < L.dims[j]);
  }
}

TEST_CASE("cone rank growth over faces") {
  Poset p4 = load_poset("p4");
  auto L = face_lattice(p4);
  auto all = maximal_chains(p4);
  for (std::size_t i = 0; i < L.faces.size(); ++i) {
    const auto& F = L.faces[i];
    if (F.empty() || F == all) continue;
    for (const Chain& d : all) {
      if (F.contains(d)) continue;
      ChainFamily ext = F;
      ext.insert(d);
      CHECK(affine_rank(points_of(p4, ext)) ==
            affine_rank(points_of(p4, F)) + 1);
    }
  }
}

TEST_CASE("coverings in the closed-family lattice") {
  Poset p3 = load_poset("p3");
  CHECK(is_covering_in_K(p3, fam(p3, "146;148;17"),
                         fam(p3, "146;148;17;246;248")));
  CHECK_FALSE(is_covering_in_K(p3, fam(p3, "146"), fam(p3, "146;148;17")));

  CHECK_THROWS_AS(is_covering_in_K(p3, fam(p3, "146;257;38"),
                                   maximal_chains(p3)),
                  NotClosedError);
  CHECK_THROWS_AS(is_covering_in_K(p3, fam(p3, "146;148"), fam(p3, "146;148")),
                  NotNestedError);
}

TEST_CASE("lattice cap") {
  Poset g = grid_poset(4, 4);
  CHECK_THROWS_AS(face_lattice(g, 10), CapExceededError);
  try {
    face_lattice(g, 10);
  } catch (const CapExceededError& e) {
    CHECK(e.count == 20);
  }
}

TEST_CASE("grid flags") {
  auto g33 = grid_flag(3, 3);
  CHECK(g33.stages.size() == 6);
  CHECK(g33.dim == 4);
  CHECK(g33.stages[1].family.size() == 1);

  auto g22 = grid_flag(2, 2);
  CHECK(g22.dim == 1);
  CHECK(g22.stages.size() == 3);
  CHECK(g22.stages.back().family.size() == 2);

  auto degenerate = grid_flag(3, 1);
  CHECK(degenerate.dim == 0);
  CHECK(degenerate.stages.size() == 2);
  CHECK(degenerate.stages.back().family.size() == 1);
}

TEST_SUITE_END();
