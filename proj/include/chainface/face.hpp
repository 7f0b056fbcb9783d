#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chainface/crown.hpp"
#include "chainface/poset.hpp"

namespace chainface {

enum class FaceTag { SimplexFace, NonSimplexFace, NotFace };

struct FaceClass {
  FaceTag tag = FaceTag::NotFace;
  std::optional<int> dim;  // absent for NotFace
};

struct FaceLattice {
  std::vector<ChainFamily> faces;            // includes the empty family
  std::vector<std::pair<int, int>> covers;   // indices into faces, lower->upper
  std::vector<int> dims;                     // -1 for the empty face
};

struct GridFlag {
  int m = 0, n = 0;
  struct Stage {
    int x = 0, y = 0;           // (0,0) for the initial empty stage
    std::vector<int> s_set;     // elements of S^(x,y), row-major labels
    ChainFamily family;         // maximal chains inside S^(x,y)
  };
  std::vector<Stage> stages;    // empty, (m,1), ..., (1,n)
  int dim = 0;                  // dimension of the final (whole) polytope
};

/// Simplex face with dim #F-1 iff no crown structure; non-simplex face
/// (dimension = exact affine rank) iff complete structure; not a face iff
/// incomplete structure.
FaceClass face_class(const Poset& P, const ChainFamily& F);

/// F together with every crown swap and star swap, over every structure of
/// F and every witness selection.
ChainFamily star_step(const Poset& P, const ChainFamily& F);

/// Least fixpoint of star_step containing F; its hull is the minimum face
/// containing conv(F).
ChainFamily closure(const Poset& P, const ChainFamily& F);

/// The families visited on the way to the fixpoint, starting with F itself;
/// strictly increasing.
std::vector<ChainFamily> closure_trace(const Poset& P, const ChainFamily& F);

/// conv(C1, C2) is an edge iff the symmetric-difference poset carries no
/// 2-crown.
bool is_edge(const Poset& P, const Chain& c1, const Chain& c2);

/// For a non-edge pair, the two chains completing it to a rectangle:
/// e_C1 + e_C2 = e_C1' + e_C2' with orthogonal edge vectors.
std::pair<Chain, Chain> rectangle_completion(const Poset& P, const Chain& c1,
                                             const Chain& c2);

/// Affine rank of all vertex incidence vectors.
int polytope_dim(const Poset& P);

/// Face counts by dimension, excluding the empty face, including the
/// polytope itself.
std::vector<long long> f_vector(const Poset& P, int max_chains = 20);

/// All closed chain families enumerated closure-system style (lectic /
/// next-closure order over the canonical chain order), with covering pairs
/// and dimensions. brute_force enumerates all subsets instead, for
/// cross-validation on tiny instances.
FaceLattice face_lattice(const Poset& P, int max_chains = 20,
                         bool brute_force = false);

/// True iff closure(F1 + {D}) = F2 for every D in F2 \ F1; this both is the
/// sufficient covering criterion and detects any intermediate closed family.
bool is_covering_in_K(const Poset& P, const ChainFamily& F1,
                      const ChainFamily& F2);

/// The staged flag of closed families of the m-by-n grid, from the hook
/// chain family to all maximal chains, each consecutive inclusion verified
/// to be a covering.
GridFlag grid_flag(int m, int n);

const char* face_tag_name(FaceTag t);

}  // namespace chainface
