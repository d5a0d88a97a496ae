#pragma once

#include <cstdint>
#include <vector>

#include "quadsurf/rotation_system.hpp"

namespace quadsurf {

/// Flag (crossing) representation of a general map: three fixed-point-free
/// involutions on 4|E| flags. Flag 4e+k belongs to edge e. For maps built from a
/// rotation system the flag of face state (a, s) has index 2a + (s == plus).
///   t0 swaps the two ends of an edge, t1 swaps the two darts of a corner,
///   t2 swaps the two sides of a dart.
struct FlagMap {
  std::vector<std::uint32_t> t0, t1, t2;

  std::size_t edge_count() const { return t0.size() / 4; }
};

inline std::uint32_t flag_of(FaceState s) {
  return 2 * s.arc.id() + (s.sign == Sign::plus ? 1U : 0U);
}

FlagMap to_flags(const RotationSystem& rs);

struct FlagRealization {
  RotationSystem system;
  std::vector<FaceState> state_of_flag;  // input flag -> face state in `system`
};

/// Builds a rotation system realizing the map. Vertices are the <t1,t2>
/// orbits ordered by least flag.
FlagRealization from_flags(const FlagMap& flags);

/// Dual map: vertex i of the result is face i of trace_faces(rs); edge e of the
/// result crosses edge e of rs.
FlagRealization dual(const RotationSystem& rs);

}  // namespace quadsurf
