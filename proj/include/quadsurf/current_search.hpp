#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quadsurf/current_graph.hpp"

namespace quadsurf {

// The search runs on the dual side. An index-2 current graph with faces [0] and
// [1] is dual to a dipole: vertices X = 0 and Y = 1 joined by n-1 parallel edges,
// edge i carrying voltage voltages[i] on its X -> Y arc. X's rotation is
// e_0 e_1 ... e_{n-2}, so the voltages read in order are the log of face [0];
// every face of the dipole is an X-Y-X-Y quadrilateral with net voltage 0.

/// Lifts a dipole to Z_{2n}: the even residues are the copies of X, the odd ones
/// the copies of Y in the component of X's copy 0.
ColoredEmbedding lift_dipole(const RotationSystem& dipole, const std::vector<std::int64_t>& voltages, int n);

struct DualCurrentGraph {
  CurrentGraph graph;
  int x_face = 0;  // index in trace_faces of the face dual to X
};

/// Current graph dual to the dipole, with currents chosen so the log of the face
/// around X reproduces the voltages.
DualCurrentGraph current_graph_from_dipole(const RotationSystem& dipole, const std::vector<std::int64_t>& voltages,
                                           int n);

enum class SearchStatus { found, budget_exhausted, exhausted };

struct CurrentSearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::uint64_t nodes = 0;              // nodes charged against the budget
  std::vector<std::int64_t> voltages;   // dipole voltages of the hit
  std::optional<RotationSystem> dipole;
  std::optional<CurrentGraph> graph;
  int x_face = 0;
  std::optional<DerivedEmbedding> derived;
};

/// Serial reference: depth-first over voltage sequences, then over corner
/// matchings of X, in canonical order. For n = 1 mod 4 only nonorientable
/// derived embeddings are accepted.
CurrentSearchResult search_current_graphs_serial(int n, std::uint64_t budget);

/// Same search with the top two levels split across OpenMP threads. The result
/// (including the node count) equals the serial one for every thread count.
/// threads <= 0 uses the OpenMP default.
CurrentSearchResult search_current_graphs(int n, std::uint64_t budget, int threads = 0);

}  // namespace quadsurf
