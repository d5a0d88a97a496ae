#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quadsurf/ncbg.hpp"
#include "quadsurf/rotation_system.hpp"

namespace quadsurf {

/// How two excised vertices of equal degree d are glued. Writing the rotation
/// of v as (u_0 .. u_{d-1}) and the reversed rotation of v' as (u'_0 .. u'_{d-1}),
/// both read from the first arc of the stored rotation, shift t merges u_i with
/// u'_{(i+t) mod d}.
struct GluingPlan {
  VertexId excised_first = 0;
  VertexId excised_second = 0;
  std::size_t degree = 0;
  std::size_t shift = 0;
  std::vector<std::pair<VertexId, VertexId>> merge;  // (vertex of first, vertex of second)
};

struct DiamondSumResult {
  RotationSystem system;
  std::vector<std::optional<VertexId>> first_map;   // vertices of the first input
  std::vector<std::optional<VertexId>> second_map;  // vertices of the second input
  GluingPlan plan;

  /// Colouring of the result induced by colourings of the inputs.
  Coloring coloring(const Coloring& first, const Coloring& second) const;
};

std::vector<GluingPlan> gluing_plans(const RotationSystem& first, VertexId v, const RotationSystem& second,
                                     VertexId v2);

/// Result vertices are the first input's vertices (minus v) in order, then the
/// second input's unmerged vertices (minus v2). Merged vertices keep the first
/// input's position. The surfaces add (chi drops by 2) whenever one of v, v2
/// meets deg distinct faces; otherwise a glued face can be an annulus, which the
/// result caps with a disk.
DiamondSumResult diamond_sum(const RotationSystem& first, VertexId v, const RotationSystem& second, VertexId v2,
                             std::size_t shift);

/// Shifts whose merge map never identifies two unsaturated black vertices. Both
/// excised vertices must be saturated white vertices.
std::vector<GluingPlan> valid_shifts(const RotationSystem& first, VertexId v, const Coloring& first_color,
                                     const RotationSystem& second, VertexId v2, const Coloring& second_color);

/// Every vertex of `before` with the excised vertex's colour, other than the
/// excised one and the merged ones, keeps its rotation up to reversal.
bool check_rotations_preserved(const RotationSystem& before, const Coloring& before_color, const DiamondSumResult& result);

}  // namespace quadsurf
