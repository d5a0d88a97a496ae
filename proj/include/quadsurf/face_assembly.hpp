#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quadsurf/rotation_system.hpp"

namespace quadsurf {

/// A closed face boundary: edges[i] joins vertices[i] to vertices[i+1 mod len].
struct FaceSpec {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

/// Glues faces into a closed surface and returns the rotation system describing
/// it. Every edge side must be used by exactly one face, and the corners at each
/// vertex must form a single cycle. `preferred` optionally fixes the rotation of
/// a vertex (as a cyclic edge order, accepted up to reversal); other vertices
/// start at their least edge. Loops are not supported. Throws EmbeddingError
/// when the faces do not form a surface.
RotationSystem assemble_surface(std::size_t vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges,
                                const std::vector<FaceSpec>& faces,
                                const std::vector<std::optional<std::vector<EdgeId>>>& preferred = {});

}  // namespace quadsurf
