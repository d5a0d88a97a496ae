#include "quadsurf/flag_map.hpp"

#include <limits>

namespace quadsurf {

FlagMap to_flags(const RotationSystem& rs) {
  const std::size_t flags = 4 * rs.edge_count();
  FlagMap fm;
  fm.t0.resize(flags);
  fm.t1.resize(flags);
  fm.t2.resize(flags);
  for (std::uint32_t a = 0; a < 2 * rs.edge_count(); ++a) {
    const Arc arc(a);
    for (Sign s : {Sign::minus, Sign::plus}) {
      const std::uint32_t f = flag_of({arc, s});
      fm.t2[f] = flag_of({arc, -s});
      fm.t0[f] = flag_of(mirror_state(rs, {arc, s}));
      // (a,+) sits in the corner before a, (a,-) in the corner after it
      fm.t1[f] = s == Sign::plus ? flag_of({rs.step(arc, -1), Sign::minus}) : flag_of({rs.step(arc, 1), Sign::plus});
    }
  }
  return fm;
}

FlagRealization from_flags(const FlagMap& fm) {
  constexpr auto none = std::numeric_limits<std::uint32_t>::max();
  const std::size_t flags = fm.t0.size();
  const std::size_t edge_count = flags / 4;

  std::vector<std::uint32_t> vertex_of(flags, none);
  std::vector<bool> positive(flags, false);
  std::vector<std::vector<std::uint32_t>> chains;
  for (std::uint32_t f = 0; f < flags; ++f) {
    if (vertex_of[f] != none) continue;
    const auto v = static_cast<std::uint32_t>(chains.size());
    std::vector<std::uint32_t> chain;
    std::uint32_t g = f;
    do {
      chain.push_back(g);
      positive[g] = true;
      vertex_of[g] = v;
      vertex_of[fm.t2[g]] = v;
      g = fm.t1[fm.t2[g]];
    } while (g != f);
    chains.push_back(std::move(chain));
  }

  // Dart of a flag: the forward dart of edge e is the t2-pair holding flag 4e.
  auto arc_of = [&](std::uint32_t f) {
    const EdgeId e = f / 4;
    const bool forward = f == 4 * e || fm.t2[f] == 4 * e;
    return forward ? Arc::forward(e) : Arc::backward(e);
  };

  std::vector<Edge> edges(edge_count);
  for (EdgeId e = 0; e < edge_count; ++e) {
    std::uint32_t p = 4 * e;
    if (!positive[p]) p = fm.t2[p];
    const std::uint32_t across = fm.t0[p];
    edges[e].first = vertex_of[p];
    edges[e].second = vertex_of[across];
    edges[e].sign = positive[across] ? Sign::minus : Sign::plus;
  }

  std::vector<std::vector<Arc>> rot(chains.size());
  for (std::size_t v = 0; v < chains.size(); ++v) {
    for (std::uint32_t f : chains[v]) rot[v].push_back(arc_of(f));
  }

  FlagRealization out{RotationSystem(chains.size(), std::move(edges), std::move(rot)), {}};
  out.state_of_flag.resize(flags);
  for (std::uint32_t f = 0; f < flags; ++f) {
    out.state_of_flag[f] = FaceState{arc_of(f), positive[f] ? Sign::plus : Sign::minus};
  }
  return out;
}

FlagRealization dual(const RotationSystem& rs) {
  FlagMap fm = to_flags(rs);
  std::swap(fm.t0, fm.t2);
  return from_flags(fm);
}

}  // namespace quadsurf
