#include "quadsurf/ncbg.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace quadsurf {

NcbgSpec NcbgSpec::canonical(int m, int n, int k) {
  NcbgSpec s{m, n, k, {}};
  for (int i = 0; i < k; ++i) s.deleted.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(m + i));
  s.check();
  return s;
}

void NcbgSpec::check() const {
  if (m < 0 || n < 0 || k < 0) throw NcbgError("negative parameter in " + name());
  if (k > std::min(m, n)) throw NcbgError("k exceeds min(m,n) in " + name());
  if (static_cast<int>(deleted.size()) != k) throw NcbgError("deleted matching size differs from k in " + name());
  std::set<VertexId> seen;
  for (auto [w, b] : deleted) {
    if (!seen.insert(w).second || !seen.insert(b).second) {
      throw NcbgError("deleted edges are not independent in " + name());
    }
  }
}

std::string NcbgSpec::name() const {
  return "G(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) + ")";
}

std::size_t BipartiteGraph::edge_count() const {
  std::size_t deg = 0;
  for (const auto& a : adjacency) deg += a.size();
  return deg / 2;
}

BipartiteGraph build_graph(const NcbgSpec& spec) {
  spec.check();
  const auto m = static_cast<VertexId>(spec.m);
  const auto total = static_cast<VertexId>(spec.m + spec.n);
  std::set<std::pair<VertexId, VertexId>> removed(spec.deleted.begin(), spec.deleted.end());
  for (auto [w, b] : spec.deleted) {
    if (w >= m || b < m || b >= total) throw NcbgError("deleted pair outside the canonical layout");
  }
  BipartiteGraph g{spec.m, spec.n, std::vector<std::vector<VertexId>>(total), Coloring(total, Color::black)};
  for (VertexId w = 0; w < m; ++w) {
    g.color[w] = Color::white;
    for (VertexId b = m; b < total; ++b) {
      if (removed.contains({w, b})) continue;
      g.adjacency[w].push_back(b);
      g.adjacency[b].push_back(w);
    }
  }
  return g;
}

RotationSystem adjacency_embedding(const std::vector<std::vector<VertexId>>& adjacency) {
  return RotationSystem::from_neighbors(adjacency);
}

GenusBound nonorientable_genus(int m, int n, int k) {
  if (m < 3 || n < 3 || k < 0 || k > std::min(m, n)) {
    throw NcbgError("genus bound needs m,n >= 3 and 0 <= k <= min(m,n); got (" + std::to_string(m) + "," +
                    std::to_string(n) + "," + std::to_string(k) + ")");
  }
  struct Exception {
    int m, n, k, genus;
  };
  // G(m,n,k) and G(n,m,k) are the same graph.
  static constexpr Exception table[] = {{3, 3, 3, 0}, {5, 4, 4, 2}, {4, 5, 4, 2}, {5, 5, 5, 3}};
  for (const auto& e : table) {
    if (e.m == m && e.n == n && e.k == k) return GenusBound{e.genus, true, true};
  }
  const int numerator = (m - 2) * (n - 2) - k;
  // ceiling division that also behaves for negative numerators
  const int ceil_half = numerator >= 0 ? (numerator + 1) / 2 : -((-numerator) / 2);
  return GenusBound{std::max(0, ceil_half), false, true};
}

int genus_lower_bound(int m, int n, int k) { return nonorientable_genus(m, n, k).genus; }

Coloring coloring_from_white(std::size_t vertex_count, const std::vector<VertexId>& white) {
  Coloring c(vertex_count, Color::black);
  for (VertexId v : white) {
    if (v >= vertex_count) throw NcbgError("white vertex out of range");
    c[v] = Color::white;
  }
  return c;
}

std::vector<VertexId> white_vertices(const Coloring& coloring) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < coloring.size(); ++v) {
    if (coloring[v] == Color::white) out.push_back(v);
  }
  return out;
}

std::optional<Coloring> infer_coloring(const RotationSystem& rs, std::optional<std::pair<int, int>> sizes) {
  const std::size_t nv = rs.vertex_count();
  std::vector<int> side(nv, -1);
  for (VertexId root = 0; root < nv; ++root) {
    if (side[root] >= 0) continue;
    if (root != 0) return std::nullopt;  // disconnected: the split is ambiguous
    side[root] = 0;
    std::queue<VertexId> q;
    q.push(root);
    while (!q.empty()) {
      VertexId u = q.front();
      q.pop();
      for (Arc a : rs.rotation(u)) {
        VertexId w = rs.head(a);
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          q.push(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  const auto zeros = static_cast<int>(std::count(side.begin(), side.end(), 0));
  int white_side = 0;
  if (sizes && sizes->first != zeros) white_side = 1;
  Coloring c(nv);
  for (VertexId v = 0; v < nv; ++v) c[v] = side[v] == white_side ? Color::white : Color::black;
  return c;
}

Classification classify_embedding(const RotationSystem& rs, const Coloring& coloring) {
  if (coloring.size() != rs.vertex_count()) throw NcbgError("colouring size differs from vertex count");
  if (!rs.is_simple()) throw NcbgError("graph is not simple");
  for (const auto& e : rs.edges()) {
    if (coloring[e.first] == coloring[e.second]) {
      throw NcbgError("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) + " joins equal colours");
    }
  }
  std::vector<VertexId> whites, blacks;
  for (VertexId v = 0; v < coloring.size(); ++v) (coloring[v] == Color::white ? whites : blacks).push_back(v);

  std::vector<std::set<VertexId>> adj(rs.vertex_count());
  for (const auto& e : rs.edges()) {
    adj[e.first].insert(e.second);
    adj[e.second].insert(e.first);
  }
  Classification out;
  out.saturated.assign(rs.vertex_count(), true);
  std::vector<int> missing_count(rs.vertex_count(), 0);
  for (VertexId w : whites) {
    for (VertexId b : blacks) {
      if (adj[w].contains(b)) continue;
      out.spec.deleted.emplace_back(w, b);
      if (++missing_count[w] > 1 || ++missing_count[b] > 1) {
        throw NcbgError("missing edges share vertex " + std::to_string(missing_count[w] > 1 ? w : b));
      }
      out.saturated[w] = out.saturated[b] = false;
    }
  }
  out.spec.m = static_cast<int>(whites.size());
  out.spec.n = static_cast<int>(blacks.size());
  out.spec.k = static_cast<int>(out.spec.deleted.size());
  return out;
}

std::string CertificationReport::to_text() const {
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "graph: " << graph << '\n'
      << "expected: " << expected_graph << '\n'
      << "m: " << m << '\n'
      << "n: " << n << '\n'
      << "k: " << k << '\n'
      << "vertices: " << vertices << '\n'
      << "edges: " << edges << '\n'
      << "faces: " << faces << '\n'
      << "chi: " << chi << '\n'
      << "quadrangular: " << yn(quadrangular) << '\n'
      << "orientable: " << yn(orientable) << '\n'
      << "surface: " << surface.name() << '\n'
      << "expected_genus: " << expected_genus << '\n';
  if (!note.empty()) out << "note: " << note << '\n';
  out << "verdict: " << (pass ? "pass" : "fail") << '\n';
  return out.str();
}

CertificationReport certify(const RotationSystem& rs, const Coloring& coloring, const NcbgSpec& expected) {
  CertificationReport r;
  r.expected_graph = expected.name();
  r.vertices = rs.vertex_count();
  r.edges = rs.edge_count();
  r.graph = "invalid";
  std::vector<std::string> notes;
  try {
    const auto cls = classify_embedding(rs, coloring);
    r.graph = cls.spec.name();
    r.m = cls.spec.m;
    r.n = cls.spec.n;
    r.k = cls.spec.k;
    r.graph_matches = cls.spec.same_parameters(expected);
    if (!r.graph_matches) notes.push_back("graph differs from expected");
  } catch (const NcbgError& e) {
    notes.emplace_back(e.what());
  }
  if (!rs.is_connected()) {
    notes.emplace_back("embedding is disconnected");
    r.note = notes.front();
    return r;
  }
  r.faces = face_count(rs);
  r.chi = euler_characteristic(rs);
  r.quadrangular = is_quadrangular(rs);
  r.orientable = is_orientable(rs);
  r.surface = surface_of(rs);
  try {
    r.expected_genus = genus_lower_bound(expected.m, expected.n, expected.k);
    const SurfaceClass want = r.expected_genus == 0 ? SurfaceClass{SurfaceClass::Kind::orientable, 0}
                                                    : SurfaceClass{SurfaceClass::Kind::nonorientable, r.expected_genus};
    r.surface_matches = r.surface == want;
    if (!r.surface_matches) notes.push_back("surface " + r.surface.name() + " differs from " + want.name());
  } catch (const NcbgError& e) {
    notes.emplace_back(e.what());
  }
  if (!r.quadrangular) notes.emplace_back("not quadrangular");
  r.pass = r.graph_matches && r.quadrangular && r.surface_matches;
  for (std::size_t i = 0; i < notes.size(); ++i) r.note += (i ? "; " : "") + notes[i];
  return r;
}

void require_certified(const RotationSystem& rs, const Coloring& coloring, const NcbgSpec& expected) {
  const auto report = certify(rs, coloring, expected);
  if (!report.pass) throw NcbgError("certification failed for " + expected.name() + ":\n" + report.to_text());
}

}  // namespace quadsurf
