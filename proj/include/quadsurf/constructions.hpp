#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "quadsurf/diamond.hpp"
#include "quadsurf/ncbg.hpp"
#include "quadsurf/rotation_system.hpp"

namespace quadsurf {

struct ColoredEmbedding {
  RotationSystem system;
  Coloring coloring;

  std::vector<VertexId> whites() const { return white_vertices(coloring); }
  std::vector<VertexId> blacks() const;
};

/// Renumbers so that whites come first, then blacks, each in their current order.
ColoredEmbedding whites_first(const ColoredEmbedding& e);

/// Exhaustive search over all rotations and gauge-fixed signatures of K_{m,t}
/// for a quadrangular embedding (nonorientable or orientable as requested).
/// Deterministic: returns the first hit in odometer order. Only for tiny graphs.
std::optional<ColoredEmbedding> exhaustive_quadrangulation(int m, int t, bool nonorientable);

/// Quadrangular embedding of K_{3,4} in N_1 (whites 0..2, blacks 3..6).
const ColoredEmbedding& build_k34_base();

/// Nonorientable quadrangular K_{3,t}, t even >= 4, by summing copies of the
/// K_{3,4} base at black vertices.
ColoredEmbedding build_k3_even(int t);

/// Nonorientable quadrangular K_{m,t}, m >= 3, t even >= 4, by summing copies of
/// K_{3,t} at white vertices. `variant` changes the gluing shifts, giving
/// different embeddings of the same graph.
ColoredEmbedding build_kbip(int m, int t, unsigned variant = 0);

/// Adds a black vertex of degree 2 inside the quadrilateral face `face`,
/// joined to the face's corner `white` and to the opposite white. The new vertex
/// takes id vertex_count().
ColoredEmbedding insert_degree2_black(const ColoredEmbedding& e, const FaceWalk& face, VertexId white);

/// In every quadrangular embedding of K_{3,t}, the opposite white of the faces
/// around `a` alternates between the other two whites.
bool alternation_holds(const ColoredEmbedding& k3t, VertexId a);

struct SeparationParams {
  int n = 0;  // the graph is G(3, 2n, 2)
  int p = 0;  // odd, 1 <= p < 2n-2
  void check() const;
};

struct SeparatedEmbedding {
  ColoredEmbedding embedding;
  VertexId saturated_white = 0;
  VertexId first_unsaturated = 0;   // adjacent to a and b
  VertexId second_unsaturated = 0;  // adjacent to a and c
};

/// Quadrangular G(3,2n,2) whose saturated white separates the two unsaturated
/// blacks by exactly p vertices (counted forward from first to second).
SeparatedEmbedding build_g3_2n_2(SeparationParams params);

struct OddPairing {
  struct Entry {
    VertexId i = 0;
    VertexId j = 0;
    VertexId white = 0;
  };
  std::vector<Entry> entries;
};

/// Checks the odd pairing invariants against the embedding's white rotations.
bool is_valid_odd_pairing(const ColoredEmbedding& e, const OddPairing& pairing);

/// Backtracking search for an odd pairing of an embedding of K_{m,2n}, m >= n.
std::optional<OddPairing> find_odd_pairing(const ColoredEmbedding& e, std::uint64_t node_budget = 50'000'000);

using PipelineObserver = std::function<void(int step, const ColoredEmbedding& current)>;

/// Desaturates the pairs of an odd pairing one at a time by diamond sums with
/// G(3,2n,2) embeddings, turning K_{m,2n} into G(m+n,2n,2n). Every intermediate
/// embedding is certified and surviving white rotations are checked.
ColoredEmbedding apply_odd_pairing(const ColoredEmbedding& kbip, const OddPairing& pairing,
                                   const PipelineObserver& observer = {});

/// G(2n+1, 2n, 2n), n >= 3, from Ringel's K_{n+1,2n} rotations when signature
/// completion succeeds within budget, from generic diamond sums otherwise.
ColoredEmbedding build_imbalanced(int n);

/// G(2n, 2n, 2n), n >= 4, from a generic K_{n,2n}.
ColoredEmbedding build_balanced_even(int n);

/// G(6,6,6) from Ringel's K_{3,6} rotations and the pairing {1,3}->a {2,5}->b {4,6}->c.
ColoredEmbedding build_g666();

}  // namespace quadsurf
