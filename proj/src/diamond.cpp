#include "quadsurf/diamond.hpp"

#include <algorithm>
#include <set>

namespace quadsurf {

namespace {

void check_excisable(const RotationSystem& rs, VertexId v) {
  if (v >= rs.vertex_count()) throw EmbeddingError(ErrorKind::unknown_vertex, "excised vertex " + std::to_string(v));
  std::set<VertexId> seen;
  for (Arc a : rs.rotation(v)) {
    if (rs.edge(a.edge()).is_loop()) {
      throw EmbeddingError(ErrorKind::loop_at_vertex, "loop at excised vertex " + std::to_string(v));
    }
    if (!seen.insert(rs.head(a)).second) {
      throw EmbeddingError(ErrorKind::not_simple, "parallel edges at excised vertex " + std::to_string(v));
    }
  }
  if (!rs.is_connected()) throw EmbeddingError(ErrorKind::disconnected, "diamond sum input");
}

std::vector<VertexId> reversed_neighbors(const RotationSystem& rs, VertexId v) {
  const auto nb = rs.neighbors(v);
  std::vector<VertexId> out(nb.size());
  for (std::size_t i = 0; i < nb.size(); ++i) out[i] = nb[(nb.size() - i) % nb.size()];
  return out;
}

}  // namespace

std::vector<GluingPlan> gluing_plans(const RotationSystem& first, VertexId v, const RotationSystem& second,
                                     VertexId v2) {
  check_excisable(first, v);
  check_excisable(second, v2);
  const std::size_t d = first.degree(v);
  if (second.degree(v2) != d) {
    throw EmbeddingError(ErrorKind::bad_argument, "degree mismatch: " + std::to_string(d) + " vs " +
                                                      std::to_string(second.degree(v2)));
  }
  const auto u = first.neighbors(v);
  const auto u2 = reversed_neighbors(second, v2);
  std::vector<GluingPlan> plans;
  for (std::size_t t = 0; t < d; ++t) {
    GluingPlan p{v, v2, d, t, {}};
    for (std::size_t i = 0; i < d; ++i) p.merge.emplace_back(u[i], u2[(i + t) % d]);
    plans.push_back(std::move(p));
  }
  return plans;
}

DiamondSumResult diamond_sum(const RotationSystem& first_in, VertexId v, const RotationSystem& second_in,
                             VertexId v2, std::size_t shift) {
  auto plans = gluing_plans(first_in, v, second_in, v2);
  if (shift >= plans.size()) throw EmbeddingError(ErrorKind::bad_argument, "shift out of range");
  const RotationSystem a = normalize_at(first_in, v);
  const RotationSystem b = normalize_at(second_in, v2);

  DiamondSumResult out;
  out.plan = std::move(plans[shift]);
  out.first_map.assign(a.vertex_count(), std::nullopt);
  out.second_map.assign(b.vertex_count(), std::nullopt);

  VertexId next = 0;
  for (VertexId x = 0; x < a.vertex_count(); ++x) {
    if (x != v) out.first_map[x] = next++;
  }
  std::vector<std::optional<VertexId>> partner_of_second(b.vertex_count());
  for (auto [x, y] : out.plan.merge) {
    partner_of_second[y] = x;
    out.second_map[y] = out.first_map[x];
  }
  for (VertexId y = 0; y < b.vertex_count(); ++y) {
    if (y != v2 && !partner_of_second[y]) out.second_map[y] = next++;
  }
  const std::size_t vertex_count = next;

  // New edge ids: surviving edges of `a`, then surviving edges of `b`.
  std::vector<Edge> edges;
  std::vector<std::optional<EdgeId>> a_edge(a.edge_count()), b_edge(b.edge_count());
  for (EdgeId e = 0; e < a.edge_count(); ++e) {
    const Edge& ed = a.edge(e);
    if (ed.first == v || ed.second == v) continue;
    a_edge[e] = static_cast<EdgeId>(edges.size());
    edges.push_back(Edge{*out.first_map[ed.first], *out.first_map[ed.second], ed.sign});
  }
  for (EdgeId e = 0; e < b.edge_count(); ++e) {
    const Edge& ed = b.edge(e);
    if (ed.first == v2 || ed.second == v2) continue;
    b_edge[e] = static_cast<EdgeId>(edges.size());
    edges.push_back(Edge{*out.second_map[ed.first], *out.second_map[ed.second], ed.sign});
  }
  auto map_a = [&](Arc x) { return Arc(2 * *a_edge[x.edge()] + (x.is_forward() ? 0 : 1)); };
  auto map_b = [&](Arc x) { return Arc(2 * *b_edge[x.edge()] + (x.is_forward() ? 0 : 1)); };

  std::vector<std::vector<Arc>> rot(vertex_count);
  std::vector<std::optional<VertexId>> partner_of_first(a.vertex_count());
  for (auto [x, y] : out.plan.merge) partner_of_first[x] = y;

  for (VertexId x = 0; x < a.vertex_count(); ++x) {
    if (x == v) continue;
    auto& target = rot[*out.first_map[x]];
    for (Arc arc : a.rotation(x)) {
      if (a.head(arc) == v) {
        // splice in the partner's rotation, read forward from just after its arc to v2
        const VertexId y = *partner_of_first[x];
        const auto& ry = b.rotation(y);
        std::size_t at = ry.size();
        for (std::size_t i = 0; i < ry.size(); ++i) {
          if (b.head(ry[i]) == v2) at = i;
        }
        for (std::size_t k = 1; k < ry.size(); ++k) target.push_back(map_b(ry[(at + k) % ry.size()]));
      } else {
        target.push_back(map_a(arc));
      }
    }
  }
  for (VertexId y = 0; y < b.vertex_count(); ++y) {
    if (y == v2 || partner_of_second[y]) continue;
    auto& target = rot[*out.second_map[y]];
    for (Arc arc : b.rotation(y)) target.push_back(map_b(arc));
  }

  std::vector<std::string> labels(vertex_count);
  for (VertexId x = 0; x < a.vertex_count(); ++x) {
    if (out.first_map[x] && x < a.labels().size()) labels[*out.first_map[x]] = a.labels()[x];
  }
  for (VertexId y = 0; y < b.vertex_count(); ++y) {
    if (out.second_map[y] && !partner_of_second[y] && y < b.labels().size()) labels[*out.second_map[y]] = b.labels()[y];
  }
  out.system = RotationSystem(vertex_count, std::move(edges), std::move(rot)).with_labels(std::move(labels));
  return out;
}

Coloring DiamondSumResult::coloring(const Coloring& first, const Coloring& second) const {
  Coloring c(system.vertex_count(), Color::black);
  for (VertexId y = 0; y < second_map.size(); ++y) {
    if (second_map[y]) c[*second_map[y]] = second[y];
  }
  for (VertexId x = 0; x < first_map.size(); ++x) {
    if (first_map[x]) c[*first_map[x]] = first[x];
  }
  return c;
}

std::vector<GluingPlan> valid_shifts(const RotationSystem& first, VertexId v, const Coloring& first_color,
                                     const RotationSystem& second, VertexId v2, const Coloring& second_color) {
  const auto ca = classify_embedding(first, first_color);
  const auto cb = classify_embedding(second, second_color);
  if (first_color.at(v) != Color::white || second_color.at(v2) != Color::white) {
    throw NcbgError("excised vertices must be white");
  }
  if (!ca.saturated[v] || !cb.saturated[v2]) throw NcbgError("excised vertex is unsaturated");
  std::vector<GluingPlan> out;
  for (auto& p : gluing_plans(first, v, second, v2)) {
    const bool ok = std::none_of(p.merge.begin(), p.merge.end(), [&](const auto& pr) {
      return !ca.saturated[pr.first] && !cb.saturated[pr.second];
    });
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

bool check_rotations_preserved(const RotationSystem& before, const Coloring& before_color, const DiamondSumResult& result) {
  const VertexId excised = result.plan.excised_first;
  std::set<VertexId> merged;
  for (auto [x, y] : result.plan.merge) merged.insert(x);
  for (VertexId w = 0; w < before.vertex_count(); ++w) {
    if (w == excised || merged.contains(w) || before_color.at(w) != before_color.at(excised)) continue;
    std::vector<VertexId> old_rot;
    for (VertexId x : before.neighbors(w)) {
      if (!result.first_map[x]) return false;
      old_rot.push_back(*result.first_map[x]);
    }
    const auto now = result.system.neighbors(*result.first_map[w]);
    if (!cyclic_equal(old_rot, now, true)) return false;
  }
  return true;
}

}  // namespace quadsurf
