#include "quadsurf/face_assembly.hpp"

#include <algorithm>
#include <map>

namespace quadsurf {

namespace {

[[noreturn]] void not_a_surface(const std::string& why) {
  throw EmbeddingError(ErrorKind::bad_argument, "faces do not form a surface: " + why);
}

struct Occurrence {
  VertexId vertex;
  EdgeId in;
  EdgeId out;
};

}  // namespace

RotationSystem assemble_surface(std::size_t vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges,
                                const std::vector<FaceSpec>& faces,
                                const std::vector<std::optional<std::vector<EdgeId>>>& preferred) {
  std::vector<std::size_t> offset(faces.size() + 1, 0);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (faces[f].vertices.size() != faces[f].edges.size() || faces[f].edges.empty()) not_a_surface("malformed face");
    offset[f + 1] = offset[f] + faces[f].edges.size();
  }
  std::vector<Occurrence> occ(offset.back());
  // occurrences at (vertex, edge)
  std::vector<std::map<EdgeId, std::vector<std::size_t>>> at(vertex_count);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& fs = faces[f];
    const std::size_t len = fs.edges.size();
    for (std::size_t i = 0; i < len; ++i) {
      const EdgeId in = fs.edges[(i + len - 1) % len];
      const EdgeId out = fs.edges[i];
      const VertexId v = fs.vertices[i];
      if (v >= vertex_count || out >= edges.size()) not_a_surface("index out of range");
      const auto [a, b] = edges[out];
      const VertexId w = fs.vertices[(i + 1) % len];
      if (!((a == v && b == w) || (a == w && b == v))) not_a_surface("face edge does not join its vertices");
      if (a == b) not_a_surface("loops are unsupported");
      if (in == out) not_a_surface("face reverses along an edge");
      const std::size_t id = offset[f] + i;
      occ[id] = Occurrence{v, in, out};
      at[v][in].push_back(id);
      at[v][out].push_back(id);
    }
  }

  std::vector<std::vector<EdgeId>> rot(vertex_count);
  std::vector<std::vector<std::size_t>> corner_after(vertex_count);
  std::vector<std::map<EdgeId, std::size_t>> pos(vertex_count);
  std::vector<std::size_t> degree(vertex_count, 0);
  for (const auto& [a, b] : edges) {
    ++degree[a];
    ++degree[b];
  }
  for (VertexId v = 0; v < vertex_count; ++v) {
    if (at[v].size() != degree[v]) not_a_surface("vertex " + std::to_string(v) + " has unused edge sides");
    if (degree[v] == 0) continue;
    for (const auto& [e, list] : at[v]) {
      if (list.size() != 2) not_a_surface("edge " + std::to_string(e) + " side count at vertex " + std::to_string(v));
    }
    auto other = [&](std::size_t c, EdgeId e) { return occ[c].in == e ? occ[c].out : occ[c].in; };
    const std::optional<std::vector<EdgeId>>* pref = v < preferred.size() && preferred[v] ? &preferred[v] : nullptr;
    EdgeId start = pref ? (*pref)->front() : at[v].begin()->first;
    if (!at[v].contains(start)) not_a_surface("preferred rotation edge not at vertex");
    const auto& first_list = at[v][start];
    std::size_t c = first_list[0];
    if (pref && (*pref)->size() > 1) {
      if (other(first_list[0], start) != (**pref)[1]) c = first_list[1];
    } else if (other(first_list[1], start) < other(first_list[0], start)) {
      c = first_list[1];
    }
    EdgeId cur = start;
    do {
      rot[v].push_back(cur);
      corner_after[v].push_back(c);
      const EdgeId nxt = other(c, cur);
      const auto& l = at[v][nxt];
      c = l[0] == c ? l[1] : l[0];
      cur = nxt;
    } while (cur != start && rot[v].size() <= degree[v]);
    if (rot[v].size() != degree[v]) not_a_surface("corners at vertex " + std::to_string(v) + " form several cycles");
    if (pref && **pref != rot[v]) not_a_surface("rotation differs from the preferred one at " + std::to_string(v));
    for (std::size_t i = 0; i < rot[v].size(); ++i) pos[v][rot[v][i]] = i;
  }

  std::vector<Edge> out_edges(edges.size());
  std::vector<int> decided(edges.size(), 0);
  for (EdgeId e = 0; e < edges.size(); ++e) out_edges[e] = Edge{edges[e].first, edges[e].second, Sign::plus};
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& fs = faces[f];
    const std::size_t len = fs.edges.size();
    for (std::size_t i = 0; i < len; ++i) {
      const EdgeId e = fs.edges[i];
      const VertexId u = fs.vertices[i];
      const VertexId w = fs.vertices[(i + 1) % len];
      const std::size_t cu = offset[f] + i;
      const std::size_t cw = offset[f] + (i + 1) % len;
      const std::size_t pu = pos[u][e];
      const std::size_t pw = pos[w][e];
      const bool after_u = corner_after[u][pu] == cu;
      const bool before_w = corner_after[w][(pw + rot[w].size() - 1) % rot[w].size()] == cw;
      const int s = after_u == before_w ? 1 : -1;
      if (decided[e] != 0 && decided[e] != s) not_a_surface("inconsistent sides along edge " + std::to_string(e));
      decided[e] = s;
    }
  }

  std::vector<std::vector<Arc>> arcs(vertex_count);
  for (EdgeId e = 0; e < edges.size(); ++e) out_edges[e].sign = decided[e] < 0 ? Sign::minus : Sign::plus;
  for (VertexId v = 0; v < vertex_count; ++v) {
    for (EdgeId e : rot[v]) arcs[v].push_back(edges[e].first == v ? Arc::forward(e) : Arc::backward(e));
  }
  return RotationSystem(vertex_count, std::move(out_edges), std::move(arcs));
}

}  // namespace quadsurf
