#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quadsurf {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// +1 / -1 valued sign used for edge signatures and local face orientation.
enum class Sign : std::int8_t { minus = -1, plus = 1 };

constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
constexpr Sign operator-(Sign a) { return a == Sign::plus ? Sign::minus : Sign::plus; }
constexpr int to_int(Sign s) { return static_cast<int>(s); }

/// Directed half of an edge. Arc 2e leaves the edge's first endpoint, arc 2e+1
/// leaves its second endpoint.
class Arc {
 public:
  constexpr Arc() = default;
  constexpr explicit Arc(std::uint32_t id) : id_(id) {}
  static constexpr Arc forward(EdgeId e) { return Arc(2 * e); }
  static constexpr Arc backward(EdgeId e) { return Arc(2 * e + 1); }

  constexpr std::uint32_t id() const { return id_; }
  constexpr EdgeId edge() const { return id_ / 2; }
  constexpr bool is_forward() const { return (id_ & 1U) == 0; }
  constexpr Arc reverse() const { return Arc(id_ ^ 1U); }

  friend constexpr auto operator<=>(Arc, Arc) = default;

 private:
  std::uint32_t id_ = 0;
};

struct Edge {
  VertexId first = 0;
  VertexId second = 0;
  Sign sign = Sign::plus;

  bool is_loop() const { return first == second; }
};

enum class ErrorKind {
  dangling_arc,
  duplicate_arc,
  missing_arc,
  rotation_length,
  missing_signature,
  unknown_vertex,
  disconnected,
  loop_at_vertex,
  not_simple,
  odd_rotation,
  bad_argument,
};

std::string to_string(ErrorKind kind);

class EmbeddingError : public std::runtime_error {
 public:
  EmbeddingError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct ValidationError {
  ErrorKind kind;
  std::string message;
};

/// One step of a face boundary walk: the arc being traversed and the local
/// orientation the walk carries when it leaves the arc's tail.
struct FaceState {
  Arc arc;
  Sign sign = Sign::plus;

  friend bool operator==(const FaceState&, const FaceState&) = default;
  friend bool operator<(const FaceState& a, const FaceState& b) {
    if (a.arc != b.arc) return a.arc < b.arc;
    return to_int(a.sign) < to_int(b.sign);
  }
};

using FaceWalk = std::vector<FaceState>;

struct SurfaceClass {
  enum class Kind { orientable, nonorientable };
  Kind kind = Kind::orientable;
  int genus = 0;

  int euler_characteristic() const { return kind == Kind::orientable ? 2 - 2 * genus : 2 - genus; }
  std::string name() const;
  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

/// A general rotation system: per-vertex cyclic order of outgoing arcs plus an
/// edge signature. Loops and multi-edges are allowed. Instances are immutable
/// once built; every constructor validates.
class RotationSystem {
 public:
  RotationSystem() = default;

  /// Dart-level constructor. `rotations[v]` lists the arcs leaving v.
  RotationSystem(std::size_t vertex_count, std::vector<Edge> edges,
                 std::vector<std::vector<Arc>> rotations);

  /// Simple-graph facade: `rotations[v]` lists neighbours of v in cyclic order;
  /// `twisted` lists the edges with signature -1.
  static RotationSystem from_neighbors(const std::vector<std::vector<VertexId>>& rotations,
                                       const std::vector<std::pair<VertexId, VertexId>>& twisted = {});

  static std::optional<ValidationError> validate(std::size_t vertex_count, const std::vector<Edge>& edges,
                                                 const std::vector<std::vector<Arc>>& rotations);

  std::size_t vertex_count() const { return rotations_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t degree(VertexId v) const { return rotations_.at(v).size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Arc>& rotation(VertexId v) const { return rotations_.at(v); }
  const std::vector<std::vector<Arc>>& rotations() const { return rotations_; }
  Sign sign(EdgeId e) const { return edges_[e].sign; }

  VertexId tail(Arc a) const {
    const auto& e = edges_[a.edge()];
    return a.is_forward() ? e.first : e.second;
  }
  VertexId head(Arc a) const { return tail(a.reverse()); }

  /// Index of `a` in the rotation of its tail.
  std::size_t position(Arc a) const { return position_[a.id()]; }
  /// The arc `steps` positions after `a` in the rotation of its tail.
  Arc step(Arc a, int steps) const;

  /// Neighbour sequence of v (head of each outgoing arc), in rotation order.
  std::vector<VertexId> neighbors(VertexId v) const;

  bool is_simple() const;
  bool is_connected() const;

  /// Edge joining u and v in a simple system.
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(VertexId v) const;
  RotationSystem with_labels(std::vector<std::string> labels) const;

 private:
  void index();

  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> rotations_;
  std::vector<std::uint32_t> position_;
  std::vector<std::string> labels_;
};

/// Successor of a face-walk state under the tracing rule.
FaceState next_state(const RotationSystem& rs, FaceState s);

/// The state describing the same walk traversed backwards.
FaceState mirror_state(const RotationSystem& rs, FaceState s);

/// Traces every face. Each face is reported once, as the orbit (of the mirror
/// pair) containing the least state, starting at that state. Faces are sorted
/// by their first state.
std::vector<FaceWalk> trace_faces(const RotationSystem& rs);

std::vector<std::size_t> face_lengths(const RotationSystem& rs);
std::size_t face_count(const RotationSystem& rs);

/// Vertex sequence visited by a face walk (tails of its arcs).
std::vector<VertexId> face_vertices(const RotationSystem& rs, const FaceWalk& face);

int euler_characteristic(const RotationSystem& rs);
bool is_orientable(const RotationSystem& rs);
SurfaceClass surface_of(const RotationSystem& rs);
bool is_quadrangular(const RotationSystem& rs);

RotationSystem vertex_flip(const RotationSystem& rs, VertexId v);

/// Flips the neighbours of v joined by twisted edges so every edge at v has
/// signature +1.
RotationSystem normalize_at(const RotationSystem& rs, VertexId v);

/// Renames vertex v to perm[v]. `perm` must be a permutation.
RotationSystem relabel(const RotationSystem& rs, std::span<const VertexId> perm);

/// Returns a system with the same embedding in which every edge of a BFS
/// spanning forest has signature +1.
RotationSystem tree_gauge(const RotationSystem& rs);

/// Canonical face set of a simple system: each face as the vertex cycle
/// rotated to start at its least vertex and read in the lesser direction.
std::vector<std::vector<VertexId>> canonical_face_set(const RotationSystem& rs);

struct SeparationCounts {
  std::size_t forward = 0;   // vertices strictly between i and j going forward from i
  std::size_t backward = 0;  // the remaining vertices other than i and j
};

SeparationCounts separation_counts(std::span<const VertexId> rotation, VertexId i, VertexId j);
bool odd_separated(std::span<const VertexId> rotation, VertexId i, VertexId j);

/// True when `a` equals `b` as cyclic sequences, optionally allowing reversal.
bool cyclic_equal(std::span<const VertexId> a, std::span<const VertexId> b, bool allow_reversal);

}  // namespace quadsurf
