#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadsurf/constructions.hpp"

namespace quadsurf {

/// White rotations of a K_{m,N} embedding without signatures or black
/// rotations. Blacks are labelled 1..N. In the derived vertex layout white w has
/// id w and black label b has id m + b - 1.
struct RotationsOnly {
  int blacks = 0;
  std::vector<std::vector<int>> white_rotations;
  std::vector<std::string> white_names;

  int whites() const { return static_cast<int>(white_rotations.size()); }
  VertexId black_id(int label) const { return static_cast<VertexId>(whites() + label - 1); }
  /// White rotation translated to vertex ids.
  std::vector<VertexId> rotation_ids(int white) const;
};

/// Rotations of Ringel's K_{n+1,2n} embedding: whites a (id 0), b (id 1),
/// then n-1 whites with the identity rotation.
RotationsOnly ringel_rotations(int n);

/// The three white rotations of Ringel's K_{3,6}.
RotationsOnly ringel_k36();

enum class CompletionStatus { found, budget_exhausted, unsatisfiable };

struct CompletionResult {
  CompletionStatus status = CompletionStatus::unsatisfiable;
  std::optional<ColoredEmbedding> embedding;
  std::uint64_t nodes = 0;
};

/// Finds black rotations and edge signatures making the white rotations a
/// quadrangular embedding (nonorientable when requested). The search pairs up
/// white corners into quadrilateral faces, pruning any black vertex whose
/// corner cycle would close early; signatures then follow from the face set.
CompletionResult complete_signatures(const RotationsOnly& rotations, bool require_nonorientable = true,
                                     std::uint64_t node_budget = 100'000'000);

/// The standard odd pairing for Ringel's K_{n+1,2n}, in the RotationsOnly layout.
OddPairing ringel_odd_pairing(int n);

/// Odd pairing invariants checked against rotations alone.
bool pairing_valid_for_rotations(const RotationsOnly& rotations, const OddPairing& pairing);

}  // namespace quadsurf
