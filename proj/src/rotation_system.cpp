#include "quadsurf/rotation_system.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace quadsurf {

std::string to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dangling_arc: return "dangling arc";
    case ErrorKind::duplicate_arc: return "arc appears twice";
    case ErrorKind::missing_arc: return "arc missing from rotations";
    case ErrorKind::rotation_length: return "rotation length mismatch";
    case ErrorKind::missing_signature: return "missing signature";
    case ErrorKind::unknown_vertex: return "unknown vertex";
    case ErrorKind::disconnected: return "disconnected";
    case ErrorKind::loop_at_vertex: return "loop at vertex";
    case ErrorKind::not_simple: return "not simple";
    case ErrorKind::odd_rotation: return "odd rotation length";
    case ErrorKind::bad_argument: return "bad argument";
  }
  return "unknown error";
}

std::string SurfaceClass::name() const {
  return (kind == Kind::orientable ? "S_" : "N_") + std::to_string(genus);
}

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& detail) {
  throw EmbeddingError(kind, to_string(kind) + ": " + detail);
}

}  // namespace

std::optional<ValidationError> RotationSystem::validate(std::size_t vertex_count, const std::vector<Edge>& edges,
                                                        const std::vector<std::vector<Arc>>& rotations) {
  auto error = [](ErrorKind kind, std::string msg) {
    return std::optional<ValidationError>(ValidationError{kind, to_string(kind) + ": " + std::move(msg)});
  };
  if (rotations.size() != vertex_count) {
    return error(ErrorKind::rotation_length, "expected " + std::to_string(vertex_count) + " rotations");
  }
  std::vector<std::size_t> degree(vertex_count, 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].first >= vertex_count || edges[e].second >= vertex_count) {
      return error(ErrorKind::unknown_vertex, "edge " + std::to_string(e));
    }
    if (edges[e].sign != Sign::plus && edges[e].sign != Sign::minus) {
      return error(ErrorKind::missing_signature, "edge " + std::to_string(e));
    }
    ++degree[edges[e].first];
    ++degree[edges[e].second];
  }
  std::vector<bool> seen(2 * edges.size(), false);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    for (Arc a : rotations[v]) {
      if (a.id() >= seen.size()) {
        return error(ErrorKind::dangling_arc, "arc " + std::to_string(a.id()) + " at vertex " + std::to_string(v));
      }
      const Edge& e = edges[a.edge()];
      VertexId tail = a.is_forward() ? e.first : e.second;
      if (tail != v) {
        return error(ErrorKind::dangling_arc, "arc " + std::to_string(a.id()) + " listed at vertex " +
                                                  std::to_string(v) + " but leaves " + std::to_string(tail));
      }
      if (seen[a.id()]) {
        return error(ErrorKind::duplicate_arc, "arc " + std::to_string(a.id()));
      }
      seen[a.id()] = true;
    }
    if (rotations[v].size() != degree[v]) {
      return error(ErrorKind::rotation_length, "vertex " + std::to_string(v) + " has rotation of length " +
                                                   std::to_string(rotations[v].size()) + ", degree " +
                                                   std::to_string(degree[v]));
    }
  }
  return std::nullopt;
}

RotationSystem::RotationSystem(std::size_t vertex_count, std::vector<Edge> edges,
                               std::vector<std::vector<Arc>> rotations)
    : edges_(std::move(edges)), rotations_(std::move(rotations)) {
  if (auto err = validate(vertex_count, edges_, rotations_)) {
    throw EmbeddingError(err->kind, err->message);
  }
  index();
}

void RotationSystem::index() {
  position_.assign(2 * edges_.size(), 0);
  for (const auto& rot : rotations_) {
    for (std::size_t i = 0; i < rot.size(); ++i) position_[rot[i].id()] = static_cast<std::uint32_t>(i);
  }
}

RotationSystem RotationSystem::from_neighbors(const std::vector<std::vector<VertexId>>& rotations,
                                              const std::vector<std::pair<VertexId, VertexId>>& twisted) {
  const std::size_t n = rotations.size();
  std::map<std::pair<VertexId, VertexId>, EdgeId> ids;
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : rotations[u]) {
      if (v >= n) fail(ErrorKind::dangling_arc, "vertex " + std::to_string(u) + " lists unknown neighbour " +
                                                    std::to_string(v));
      if (v == u) fail(ErrorKind::not_simple, "loop at vertex " + std::to_string(u));
      auto key = std::minmax(u, v);
      if (!ids.contains(key)) {
        ids.emplace(key, static_cast<EdgeId>(edges.size()));
        edges.push_back(Edge{key.first, key.second, Sign::plus});
      }
    }
  }
  std::vector<std::vector<Arc>> rot(n);
  std::vector<int> uses(2 * edges.size(), 0);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : rotations[u]) {
      EdgeId e = ids.at(std::minmax(u, v));
      Arc a = edges[e].first == u ? Arc::forward(e) : Arc::backward(e);
      if (++uses[a.id()] > 1) {
        fail(ErrorKind::duplicate_arc, "vertex " + std::to_string(u) + " lists " + std::to_string(v) + " twice");
      }
      rot[u].push_back(a);
    }
  }
  for (EdgeId e = 0; e < edges.size(); ++e) {
    if (uses[2 * e] == 0 || uses[2 * e + 1] == 0) {
      VertexId missing_at = uses[2 * e] == 0 ? edges[e].first : edges[e].second;
      VertexId other = uses[2 * e] == 0 ? edges[e].second : edges[e].first;
      fail(ErrorKind::dangling_arc, "vertex " + std::to_string(other) + " lists " + std::to_string(missing_at) +
                                        " but not conversely");
    }
  }
  for (auto [u, v] : twisted) {
    auto it = ids.find(std::minmax(u, v));
    if (it == ids.end()) {
      fail(ErrorKind::bad_argument, "twisted pair " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
    }
    edges[it->second].sign = Sign::minus;
  }
  return RotationSystem(n, std::move(edges), std::move(rot));
}

Arc RotationSystem::step(Arc a, int steps) const {
  const auto& rot = rotations_[tail(a)];
  const long d = static_cast<long>(rot.size());
  long p = (static_cast<long>(position_[a.id()]) + steps) % d;
  if (p < 0) p += d;
  return rot[static_cast<std::size_t>(p)];
}

std::vector<VertexId> RotationSystem::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(rotations_.at(v).size());
  for (Arc a : rotations_[v]) out.push_back(head(a));
  return out;
}

bool RotationSystem::is_simple() const {
  std::vector<std::pair<VertexId, VertexId>> keys;
  keys.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (e.is_loop()) return false;
    keys.push_back(std::minmax(e.first, e.second));
  }
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

bool RotationSystem::is_connected() const {
  if (rotations_.empty()) return true;
  std::vector<bool> seen(rotations_.size(), false);
  std::queue<VertexId> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (Arc a : rotations_[u]) {
      VertexId w = head(a);
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
    }
  }
  return count == rotations_.size();
}

std::optional<EdgeId> RotationSystem::find_edge(VertexId u, VertexId v) const {
  for (Arc a : rotations_.at(u)) {
    if (head(a) == v) return a.edge();
  }
  return std::nullopt;
}

std::string RotationSystem::label(VertexId v) const {
  if (v < labels_.size() && !labels_[v].empty()) return labels_[v];
  return std::to_string(v);
}

RotationSystem RotationSystem::with_labels(std::vector<std::string> labels) const {
  RotationSystem out = *this;
  labels.resize(vertex_count());
  out.labels_ = std::move(labels);
  return out;
}

FaceState next_state(const RotationSystem& rs, FaceState s) {
  const Sign next_sign = s.sign * rs.sign(s.arc.edge());
  return FaceState{rs.step(s.arc.reverse(), to_int(next_sign)), next_sign};
}

FaceState mirror_state(const RotationSystem& rs, FaceState s) {
  return FaceState{s.arc.reverse(), -(s.sign * rs.sign(s.arc.edge()))};
}

namespace {

std::size_t state_index(FaceState s) { return 2 * s.arc.id() + (s.sign == Sign::plus ? 1 : 0); }
FaceState state_at(std::size_t idx) {
  return FaceState{Arc(static_cast<std::uint32_t>(idx / 2)), (idx & 1U) ? Sign::plus : Sign::minus};
}

}  // namespace

std::vector<FaceWalk> trace_faces(const RotationSystem& rs) {
  const std::size_t states = 4 * rs.edge_count();
  std::vector<bool> visited(states, false);
  std::vector<FaceWalk> faces;
  for (std::size_t idx = 0; idx < states; ++idx) {
    if (visited[idx]) continue;
    FaceWalk walk;
    FaceState start = state_at(idx);
    FaceState s = start;
    do {
      visited[state_index(s)] = true;
      walk.push_back(s);
      s = next_state(rs, s);
    } while (!(s == start));
    for (const auto& st : walk) visited[state_index(mirror_state(rs, st))] = true;
    faces.push_back(std::move(walk));
  }
  return faces;
}

std::vector<std::size_t> face_lengths(const RotationSystem& rs) {
  std::vector<std::size_t> out;
  for (const auto& f : trace_faces(rs)) out.push_back(f.size());
  return out;
}

std::size_t face_count(const RotationSystem& rs) { return trace_faces(rs).size(); }

std::vector<VertexId> face_vertices(const RotationSystem& rs, const FaceWalk& face) {
  std::vector<VertexId> out;
  out.reserve(face.size());
  for (const auto& s : face) out.push_back(rs.tail(s.arc));
  return out;
}

int euler_characteristic(const RotationSystem& rs) {
  if (!rs.is_connected()) fail(ErrorKind::disconnected, "euler characteristic needs a connected system");
  return static_cast<int>(rs.vertex_count()) - static_cast<int>(rs.edge_count()) +
         static_cast<int>(face_count(rs));
}

bool is_orientable(const RotationSystem& rs) {
  std::vector<int> sigma(rs.vertex_count(), 0);
  for (VertexId root = 0; root < rs.vertex_count(); ++root) {
    if (sigma[root] != 0) continue;
    sigma[root] = 1;
    std::queue<VertexId> q;
    q.push(root);
    while (!q.empty()) {
      VertexId u = q.front();
      q.pop();
      for (Arc a : rs.rotation(u)) {
        VertexId w = rs.head(a);
        if (sigma[w] == 0) {
          sigma[w] = sigma[u] * to_int(rs.sign(a.edge()));
          q.push(w);
        }
      }
    }
  }
  for (const auto& e : rs.edges()) {
    if (sigma[e.first] * sigma[e.second] != to_int(e.sign)) return false;
  }
  return true;
}

SurfaceClass surface_of(const RotationSystem& rs) {
  const int chi = euler_characteristic(rs);
  if (is_orientable(rs)) return SurfaceClass{SurfaceClass::Kind::orientable, (2 - chi) / 2};
  return SurfaceClass{SurfaceClass::Kind::nonorientable, 2 - chi};
}

bool is_quadrangular(const RotationSystem& rs) {
  if (rs.edge_count() == 0) return false;
  for (const auto& f : trace_faces(rs)) {
    if (f.size() != 4) return false;
  }
  return true;
}

namespace {

std::vector<Arc> reversed_cycle(const std::vector<Arc>& rot) {
  std::vector<Arc> out;
  out.reserve(rot.size());
  if (rot.empty()) return out;
  out.push_back(rot[0]);
  for (std::size_t i = rot.size() - 1; i >= 1; --i) out.push_back(rot[i]);
  return out;
}

RotationSystem flip_set(const RotationSystem& rs, const std::vector<bool>& flipped) {
  std::vector<Edge> edges = rs.edges();
  for (auto& e : edges) {
    if (flipped[e.first] != flipped[e.second]) e.sign = -e.sign;
  }
  std::vector<std::vector<Arc>> rot = rs.rotations();
  for (VertexId v = 0; v < rot.size(); ++v) {
    if (flipped[v]) rot[v] = reversed_cycle(rot[v]);
  }
  return RotationSystem(rs.vertex_count(), std::move(edges), std::move(rot)).with_labels(rs.labels());
}

}  // namespace

RotationSystem vertex_flip(const RotationSystem& rs, VertexId v) {
  if (v >= rs.vertex_count()) fail(ErrorKind::unknown_vertex, std::to_string(v));
  std::vector<bool> flipped(rs.vertex_count(), false);
  flipped[v] = true;
  return flip_set(rs, flipped);
}

RotationSystem normalize_at(const RotationSystem& rs, VertexId v) {
  if (v >= rs.vertex_count()) fail(ErrorKind::unknown_vertex, std::to_string(v));
  std::vector<bool> flipped(rs.vertex_count(), false);
  bool any = false;
  for (Arc a : rs.rotation(v)) {
    if (rs.edge(a.edge()).is_loop()) fail(ErrorKind::loop_at_vertex, std::to_string(v));
    if (rs.sign(a.edge()) == Sign::minus) {
      VertexId w = rs.head(a);
      if (flipped[w]) fail(ErrorKind::not_simple, "parallel edges with mixed signatures at " + std::to_string(v));
      flipped[w] = true;
      any = true;
    }
  }
  if (!any) return rs;
  return flip_set(rs, flipped);
}

RotationSystem relabel(const RotationSystem& rs, std::span<const VertexId> perm) {
  const std::size_t n = rs.vertex_count();
  if (perm.size() != n) fail(ErrorKind::bad_argument, "permutation size");
  std::vector<bool> hit(n, false);
  for (VertexId p : perm) {
    if (p >= n || hit[p]) fail(ErrorKind::bad_argument, "not a permutation");
    hit[p] = true;
  }
  std::vector<Edge> edges = rs.edges();
  for (auto& e : edges) {
    e.first = perm[e.first];
    e.second = perm[e.second];
  }
  std::vector<std::vector<Arc>> rot(n);
  std::vector<std::string> labels(n);
  for (VertexId v = 0; v < n; ++v) {
    rot[perm[v]] = rs.rotation(v);
    if (v < rs.labels().size()) labels[perm[v]] = rs.labels()[v];
  }
  return RotationSystem(n, std::move(edges), std::move(rot)).with_labels(std::move(labels));
}

RotationSystem tree_gauge(const RotationSystem& rs) {
  std::vector<int> sigma(rs.vertex_count(), 0);
  for (VertexId root = 0; root < rs.vertex_count(); ++root) {
    if (sigma[root] != 0) continue;
    sigma[root] = 1;
    std::queue<VertexId> q;
    q.push(root);
    while (!q.empty()) {
      VertexId u = q.front();
      q.pop();
      for (Arc a : rs.rotation(u)) {
        VertexId w = rs.head(a);
        if (sigma[w] == 0) {
          sigma[w] = sigma[u] * to_int(rs.sign(a.edge()));
          q.push(w);
        }
      }
    }
  }
  std::vector<bool> flipped(rs.vertex_count());
  for (VertexId v = 0; v < rs.vertex_count(); ++v) flipped[v] = sigma[v] < 0;
  return flip_set(rs, flipped);
}

std::vector<std::vector<VertexId>> canonical_face_set(const RotationSystem& rs) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& f : trace_faces(rs)) {
    auto cyc = face_vertices(rs, f);
    const std::size_t len = cyc.size();
    std::vector<VertexId> best;
    for (std::size_t start = 0; start < len; ++start) {
      for (int dir : {1, -1}) {
        std::vector<VertexId> cand(len);
        for (std::size_t i = 0; i < len; ++i) {
          long idx = (static_cast<long>(start) + dir * static_cast<long>(i)) % static_cast<long>(len);
          if (idx < 0) idx += static_cast<long>(len);
          cand[i] = cyc[static_cast<std::size_t>(idx)];
        }
        if (best.empty() || cand < best) best = std::move(cand);
      }
    }
    out.push_back(std::move(best));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SeparationCounts separation_counts(std::span<const VertexId> rotation, VertexId i, VertexId j) {
  if (i == j) fail(ErrorKind::bad_argument, "separation of a vertex from itself");
  if (rotation.size() % 2 != 0) fail(ErrorKind::odd_rotation, "length " + std::to_string(rotation.size()));
  std::size_t pi = rotation.size(), pj = rotation.size();
  for (std::size_t k = 0; k < rotation.size(); ++k) {
    if (rotation[k] == i) {
      if (pi != rotation.size()) fail(ErrorKind::bad_argument, "vertex " + std::to_string(i) + " duplicated");
      pi = k;
    } else if (rotation[k] == j) {
      if (pj != rotation.size()) fail(ErrorKind::bad_argument, "vertex " + std::to_string(j) + " duplicated");
      pj = k;
    }
  }
  if (pi == rotation.size() || pj == rotation.size()) fail(ErrorKind::bad_argument, "vertex absent from rotation");
  const std::size_t len = rotation.size();
  const std::size_t fwd = (pj + len - pi - 1) % len;
  return SeparationCounts{fwd, len - 2 - fwd};
}

bool odd_separated(std::span<const VertexId> rotation, VertexId i, VertexId j) {
  return separation_counts(rotation, i, j).forward % 2 == 1;
}

bool cyclic_equal(std::span<const VertexId> a, std::span<const VertexId> b, bool allow_reversal) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n == 0) return true;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool fwd = true, bwd = allow_reversal;
    for (std::size_t k = 0; k < n && (fwd || bwd); ++k) {
      if (a[k] != b[(shift + k) % n]) fwd = false;
      if (bwd && a[k] != b[(shift + n - k) % n]) bwd = false;
    }
    if (fwd || bwd) return true;
  }
  return false;
}

}  // namespace quadsurf
