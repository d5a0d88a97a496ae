#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "quadsurf/rotation_system.hpp"

namespace testsupport {

using quadsurf::Arc;
using quadsurf::Edge;
using quadsurf::RotationSystem;
using quadsurf::Sign;
using quadsurf::VertexId;

/// Random connected multigraph embedding (loops and parallel edges allowed).
inline RotationSystem random_system(std::mt19937& rng, int max_vertices, int max_edges, bool simple = false) {
  for (;;) {
    std::uniform_int_distribution<int> vd(2, max_vertices);
    const int v = vd(rng);
    std::vector<Edge> edges;
    for (int i = 1; i < v; ++i) {
      std::uniform_int_distribution<int> pick(0, i - 1);
      edges.push_back({static_cast<VertexId>(pick(rng)), static_cast<VertexId>(i), Sign::plus});
    }
    if (static_cast<int>(edges.size()) > max_edges) continue;
    std::uniform_int_distribution<int> extra_d(0, max_edges - static_cast<int>(edges.size()));
    const int extra = extra_d(rng);
    std::uniform_int_distribution<int> vert(0, v - 1);
    for (int i = 0; i < extra; ++i) {
      const auto a = static_cast<VertexId>(vert(rng));
      const auto b = static_cast<VertexId>(vert(rng));
      if (simple) {
        if (a == b) continue;
        const bool dup = std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
          return (e.first == a && e.second == b) || (e.first == b && e.second == a);
        });
        if (dup) continue;
      }
      edges.push_back({a, b, Sign::plus});
    }
    std::bernoulli_distribution twist(0.35);
    for (auto& e : edges) e.sign = twist(rng) ? Sign::minus : Sign::plus;
    std::vector<std::vector<Arc>> rot(v);
    for (std::uint32_t e = 0; e < edges.size(); ++e) {
      rot[edges[e].first].push_back(Arc::forward(e));
      rot[edges[e].second].push_back(Arc::backward(e));
    }
    for (auto& r : rot) std::shuffle(r.begin(), r.end(), rng);
    return RotationSystem(static_cast<std::size_t>(v), edges, rot);
  }
}

/// Random connected bipartite simple embedding with whites 0..m-1.
inline RotationSystem random_bipartite(std::mt19937& rng, int m, int n, int max_edges) {
  // needs m + n - 1 <= max_edges
  std::vector<std::pair<VertexId, VertexId>> edges;
  {
    std::vector<VertexId> whites, blacks;
    for (int i = 1; i < m; ++i) whites.push_back(static_cast<VertexId>(i));
    for (int i = 0; i < n; ++i) blacks.push_back(static_cast<VertexId>(m + i));
    std::shuffle(whites.begin(), whites.end(), rng);
    std::shuffle(blacks.begin(), blacks.end(), rng);
    std::vector<VertexId> seen_w{0}, seen_b;
    std::size_t wi = 0, bi = 0;
    while (wi < whites.size() || bi < blacks.size()) {
      std::bernoulli_distribution coin(0.5);
      const bool add_black = bi < blacks.size() && (seen_b.empty() || wi == whites.size() || coin(rng));
      if (add_black) {
        std::uniform_int_distribution<std::size_t> p(0, seen_w.size() - 1);
        edges.push_back({seen_w[p(rng)], blacks[bi]});
        seen_b.push_back(blacks[bi++]);
      } else {
        std::uniform_int_distribution<std::size_t> p(0, seen_b.size() - 1);
        edges.push_back({whites[wi], seen_b[p(rng)]});
        seen_w.push_back(whites[wi++]);
      }
    }
    std::vector<std::pair<VertexId, VertexId>> rest;
    for (int w = 0; w < m; ++w)
      for (int b = m; b < m + n; ++b)
        if (std::find(edges.begin(), edges.end(), std::pair{VertexId(w), VertexId(b)}) == edges.end())
          rest.push_back({VertexId(w), VertexId(b)});
    std::shuffle(rest.begin(), rest.end(), rng);
    std::uniform_int_distribution<std::size_t> extra(0, std::min(rest.size(), max_edges - edges.size()));
    rest.resize(extra(rng));
    edges.insert(edges.end(), rest.begin(), rest.end());
  }
  std::vector<std::vector<VertexId>> nb(m + n);
  for (auto [a, b] : edges) {
    nb[a].push_back(b);
    nb[b].push_back(a);
  }
  for (auto& r : nb) std::shuffle(r.begin(), r.end(), rng);
  std::vector<std::pair<VertexId, VertexId>> twisted;
  std::bernoulli_distribution twist(0.35);
  for (auto e : edges)
    if (twist(rng)) twisted.push_back(e);
  return RotationSystem::from_neighbors(nb, twisted);
}

/// Face enumeration written directly from the tracing rule, without the
/// library's state machinery: walk darts, turn by the current orientation,
/// flip the orientation on twisted edges. Returns each face's vertex cycle,
/// canonicalized up to rotation and reversal, and each face once per
/// direction.
inline std::multiset<std::vector<VertexId>> oracle_faces(const RotationSystem& rs) {
  struct Dart {
    std::size_t edge;
    int end;  // 0: first endpoint, 1: second
  };
  const std::size_t n = rs.vertex_count();
  std::vector<std::vector<Dart>> rot(n);
  for (std::size_t v = 0; v < n; ++v)
    for (Arc a : rs.rotation(static_cast<VertexId>(v))) rot[v].push_back({a.edge(), a.is_forward() ? 0 : 1});
  auto where = [&](std::size_t v, Dart d) {
    for (std::size_t i = 0; i < rot[v].size(); ++i)
      if (rot[v][i].edge == d.edge && rot[v][i].end == d.end) return i;
    return rot[v].size();
  };
  auto endpoint = [&](Dart d) {
    const auto& e = rs.edge(static_cast<quadsurf::EdgeId>(d.edge));
    return static_cast<std::size_t>(d.end == 0 ? e.first : e.second);
  };
  // state: dart leaving its vertex, orientation (+1/-1)
  std::map<std::pair<std::size_t, int>, bool> used;
  auto key = [](Dart d) { return 2 * d.edge + static_cast<std::size_t>(d.end); };
  std::multiset<std::vector<VertexId>> out;
  for (std::size_t v = 0; v < n; ++v) {
    for (Dart start : rot[v]) {
      for (int o0 : {1, -1}) {
        if (used[{key(start), o0}]) continue;
        std::vector<VertexId> cycle;
        Dart d = start;
        int o = o0;
        while (!used[{key(d), o}]) {
          used[{key(d), o}] = true;
          cycle.push_back(static_cast<VertexId>(endpoint(d)));
          const auto& e = rs.edge(static_cast<quadsurf::EdgeId>(d.edge));
          if (e.sign == Sign::minus) o = -o;
          const Dart arrive{d.edge, 1 - d.end};
          const std::size_t w = endpoint(arrive);
          const std::size_t i = where(w, arrive);
          const std::size_t len = rot[w].size();
          d = rot[w][(i + (o > 0 ? 1 : len - 1)) % len];
        }
        // canonical form up to rotation and reversal
        std::vector<VertexId> best;
        for (int dir = 0; dir < 2; ++dir) {
          std::vector<VertexId> c = cycle;
          if (dir) std::reverse(c.begin(), c.end());
          for (std::size_t r = 0; r < c.size(); ++r) {
            std::rotate(c.begin(), c.begin() + 1, c.end());
            if (best.empty() || c < best) best = c;
          }
        }
        out.insert(best);
      }
    }
  }
  return out;
}

inline std::vector<VertexId> canonical_cycle(std::vector<VertexId> c) {
  std::vector<VertexId> best;
  for (int dir = 0; dir < 2; ++dir) {
    if (dir) std::reverse(c.begin(), c.end());
    for (std::size_t r = 0; r < c.size(); ++r) {
      std::rotate(c.begin(), c.begin() + 1, c.end());
      if (best.empty() || c < best) best = c;
    }
  }
  return best;
}

}  // namespace testsupport
