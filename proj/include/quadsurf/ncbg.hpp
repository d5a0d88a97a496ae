#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quadsurf/rotation_system.hpp"

namespace quadsurf {

enum class Color : std::uint8_t { white, black };
using Coloring = std::vector<Color>;

class NcbgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters of G(m,n,k): K_{m,n} minus k independent edges. Deleted pairs are
/// (white, black) vertex ids of whatever graph the spec describes.
struct NcbgSpec {
  int m = 0;
  int n = 0;
  int k = 0;
  std::vector<std::pair<VertexId, VertexId>> deleted;

  /// Canonical layout: whites 0..m-1, blacks m..m+n-1, white i paired with black m+i.
  static NcbgSpec canonical(int m, int n, int k);
  void check() const;
  std::string name() const;
  bool same_parameters(const NcbgSpec& other) const { return m == other.m && n == other.n && k == other.k; }
};

struct BipartiteGraph {
  int m = 0;
  int n = 0;
  std::vector<std::vector<VertexId>> adjacency;
  Coloring color;

  std::size_t edge_count() const;
};

BipartiteGraph build_graph(const NcbgSpec& spec);

/// Embedding of a simple graph using adjacency order as rotations, all
/// signatures +1.
RotationSystem adjacency_embedding(const std::vector<std::vector<VertexId>>& adjacency);

struct GenusBound {
  int genus = 0;
  bool exceptional = false;
  bool exact = true;  // known to equal the nonorientable genus for all inputs in range
};

GenusBound nonorientable_genus(int m, int n, int k);
int genus_lower_bound(int m, int n, int k);

struct Classification {
  NcbgSpec spec;
  std::vector<bool> saturated;  // per vertex
};

/// Identifies the underlying graph as some G(m,n,k). Throws NcbgError when it is
/// not simple bipartite with respect to `coloring`, or the missing edges are not
/// independent.
Classification classify_embedding(const RotationSystem& rs, const Coloring& coloring);

Coloring coloring_from_white(std::size_t vertex_count, const std::vector<VertexId>& white);
std::vector<VertexId> white_vertices(const Coloring& coloring);

/// Two-colours a connected bipartite system, choosing the class sizes (m, n)
/// when given; the class of vertex 0 is white otherwise.
std::optional<Coloring> infer_coloring(const RotationSystem& rs, std::optional<std::pair<int, int>> sizes = {});

struct CertificationReport {
  std::string graph;  // "G(m,n,k)" actually found, or "invalid"
  std::string expected_graph;
  int m = 0, n = 0, k = 0;
  std::size_t vertices = 0, edges = 0, faces = 0;
  int chi = 0;
  bool graph_matches = false;
  bool quadrangular = false;
  bool orientable = false;
  SurfaceClass surface;
  int expected_genus = 0;
  bool surface_matches = false;
  bool pass = false;
  std::string note;

  std::string to_text() const;
};

/// Checks that the embedding is a quadrangular nonorientable embedding of the
/// expected G(m,n,k) on N_h with h equal to the genus lower bound. When the bound
/// is 0 the sphere is expected instead.
CertificationReport certify(const RotationSystem& rs, const Coloring& coloring, const NcbgSpec& expected);

/// Assertion helper for pipelines: throws NcbgError with the report text on failure.
void require_certified(const RotationSystem& rs, const Coloring& coloring, const NcbgSpec& expected);

}  // namespace quadsurf
