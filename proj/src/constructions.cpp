#include "quadsurf/constructions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "quadsurf/ringel.hpp"

namespace quadsurf {

std::vector<VertexId> ColoredEmbedding::blacks() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < coloring.size(); ++v) {
    if (coloring[v] == Color::black) out.push_back(v);
  }
  return out;
}

ColoredEmbedding whites_first(const ColoredEmbedding& e) {
  std::vector<VertexId> perm(e.system.vertex_count());
  VertexId next = 0;
  for (VertexId v : e.whites()) perm[v] = next++;
  for (VertexId v : e.blacks()) perm[v] = next++;
  Coloring c(perm.size());
  for (VertexId v = 0; v < perm.size(); ++v) c[perm[v]] = e.coloring[v];
  return ColoredEmbedding{relabel(e.system, perm), std::move(c)};
}

namespace {

Coloring bipartite_coloring(int m, int t) {
  Coloring c(static_cast<std::size_t>(m + t), Color::black);
  std::fill_n(c.begin(), m, Color::white);
  return c;
}

// Position in v's rotation of the corner a face passes through at state k.
// Corner c lies between rotation positions c and c+1.
std::size_t corner_index(const RotationSystem& rs, const FaceWalk& face, std::size_t k) {
  const FaceState& here = face[k];
  const FaceState& prev = face[(k + face.size() - 1) % face.size()];
  if (here.sign == Sign::plus) return rs.position(prev.arc.reverse());
  return rs.position(here.arc);
}

struct CornerFace {
  std::size_t face = 0;
  std::size_t state = 0;  // index of the state leaving the white vertex
  std::size_t corner = 0;
  VertexId opposite = 0;
};

std::vector<CornerFace> faces_at(const RotationSystem& rs, const std::vector<FaceWalk>& faces, VertexId a) {
  std::vector<CornerFace> out;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& fw = faces[f];
    if (fw.size() != 4) continue;
    for (std::size_t k = 0; k < 4; ++k) {
      if (rs.tail(fw[k].arc) != a) continue;
      out.push_back(CornerFace{f, k, corner_index(rs, fw, k), rs.tail(fw[(k + 2) % 4].arc)});
    }
  }
  std::sort(out.begin(), out.end(), [](const CornerFace& x, const CornerFace& y) { return x.corner < y.corner; });
  return out;
}

}  // namespace

std::optional<ColoredEmbedding> exhaustive_quadrangulation(int m, int t, bool nonorientable) {
  if (m < 1 || t < 1) throw NcbgError("exhaustive_quadrangulation needs m, t >= 1");
  const int nv = m + t;
  // per vertex: fixed first neighbour, permuted tail
  std::vector<std::vector<VertexId>> tails(static_cast<std::size_t>(nv));
  std::vector<VertexId> heads(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    std::vector<VertexId> nb;
    if (v < m) {
      for (int b = m; b < nv; ++b) nb.push_back(static_cast<VertexId>(b));
    } else {
      for (int w = 0; w < m; ++w) nb.push_back(static_cast<VertexId>(w));
    }
    heads[static_cast<std::size_t>(v)] = nb.front();
    tails[static_cast<std::size_t>(v)].assign(nb.begin() + 1, nb.end());
  }
  // spanning tree: white 0 to every black, black m to every white; the rest are free
  std::vector<std::pair<VertexId, VertexId>> free_edges;
  for (int w = 1; w < m; ++w) {
    for (int b = m + 1; b < nv; ++b) free_edges.emplace_back(static_cast<VertexId>(w), static_cast<VertexId>(b));
  }
  if (free_edges.size() > 30) throw NcbgError("exhaustive_quadrangulation: graph too large");
  const std::uint64_t masks = std::uint64_t{1} << free_edges.size();

  while (true) {
    std::vector<std::vector<VertexId>> rot(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) {
      rot[static_cast<std::size_t>(v)].push_back(heads[static_cast<std::size_t>(v)]);
      const auto& tl = tails[static_cast<std::size_t>(v)];
      rot[static_cast<std::size_t>(v)].insert(rot[static_cast<std::size_t>(v)].end(), tl.begin(), tl.end());
    }
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      std::vector<std::pair<VertexId, VertexId>> twisted;
      for (std::size_t i = 0; i < free_edges.size(); ++i) {
        if ((mask >> i) & 1U) twisted.push_back(free_edges[i]);
      }
      RotationSystem rs = RotationSystem::from_neighbors(rot, twisted);
      if (!is_quadrangular(rs) || is_orientable(rs) == nonorientable) continue;
      std::vector<std::string> labels(static_cast<std::size_t>(nv));
      for (int w = 0; w < m; ++w) labels[static_cast<std::size_t>(w)] = std::string(1, static_cast<char>('a' + w));
      for (int b = 0; b < t; ++b) labels[static_cast<std::size_t>(m + b)] = std::to_string(b + 1);
      return ColoredEmbedding{rs.with_labels(std::move(labels)), bipartite_coloring(m, t)};
    }
    // odometer over the permuted tails, last vertex fastest
    int v = nv - 1;
    for (; v >= 0; --v) {
      auto& tl = tails[static_cast<std::size_t>(v)];
      if (std::next_permutation(tl.begin(), tl.end())) break;
    }
    if (v < 0) return std::nullopt;
  }
}

const ColoredEmbedding& build_k34_base() {
  static const ColoredEmbedding base = [] {
    auto found = exhaustive_quadrangulation(3, 4, true);
    if (!found) throw NcbgError("no nonorientable quadrangular embedding of K_{3,4} found");
    require_certified(found->system, found->coloring, NcbgSpec::canonical(3, 4, 0));
    return *found;
  }();
  return base;
}

ColoredEmbedding build_k3_even(int t) {
  if (t < 4 || t % 2 != 0) throw NcbgError("build_k3_even needs even t >= 4, got " + std::to_string(t));
  ColoredEmbedding cur = build_k34_base();
  const ColoredEmbedding& base = build_k34_base();
  for (int have = 4; have < t; have += 2) {
    // excise the last black of cur and the first black of the base
    const auto v = static_cast<VertexId>(cur.system.vertex_count() - 1);
    auto sum = diamond_sum(cur.system, v, base.system, 3, 0);
    ColoredEmbedding next{sum.system, sum.coloring(cur.coloring, base.coloring)};
    cur = whites_first(next);
    require_certified(cur.system, cur.coloring, NcbgSpec::canonical(3, have + 2, 0));
  }
  return cur;
}

ColoredEmbedding build_kbip(int m, int t, unsigned variant) {
  if (m < 3) throw NcbgError("build_kbip needs m >= 3");
  const ColoredEmbedding k3 = build_k3_even(t);
  ColoredEmbedding cur = k3;
  for (int have = 3; have < m; ++have) {
    const auto whites = cur.whites();
    const VertexId v = whites[(variant + static_cast<unsigned>(have)) % whites.size()];
    const std::size_t shift = (static_cast<std::size_t>(variant) * static_cast<std::size_t>(have + 1)) %
                              static_cast<std::size_t>(t);
    auto sum = diamond_sum(cur.system, v, k3.system, 0, shift);
    cur = whites_first(ColoredEmbedding{sum.system, sum.coloring(cur.coloring, k3.coloring)});
    require_certified(cur.system, cur.coloring, NcbgSpec::canonical(have + 1, t, 0));
  }
  return cur;
}

ColoredEmbedding insert_degree2_black(const ColoredEmbedding& e, const FaceWalk& face, VertexId white) {
  const RotationSystem& rs = e.system;
  if (face.size() != 4) throw NcbgError("insert_degree2_black: face is not a quadrilateral");
  std::size_t k = 4;
  for (std::size_t i = 0; i < 4; ++i) {
    if (rs.tail(face[i].arc) == white) k = i;
  }
  if (k == 4) throw NcbgError("insert_degree2_black: white vertex not on the face");
  const auto faces = trace_faces(rs);
  // the face must be one of the traced faces (either direction)
  const bool is_face = std::any_of(faces.begin(), faces.end(), [&](const FaceWalk& f) {
    if (f.size() != 4) return false;
    for (const FaceState& s : f) {
      if (s == face[0] || s == mirror_state(rs, face[0])) return true;
    }
    return false;
  });
  if (!is_face) throw NcbgError("insert_degree2_black: not a face of the embedding");

  const VertexId a = white;
  const VertexId w = rs.tail(face[(k + 2) % 4].arc);
  const std::size_t ca = corner_index(rs, face, k);
  const std::size_t cw = corner_index(rs, face, (k + 2) % 4);
  const auto z = static_cast<VertexId>(rs.vertex_count());
  const auto ea = static_cast<EdgeId>(rs.edge_count());
  const EdgeId ew = ea + 1;
  const std::size_t f0 = faces.size();
  const bool orientable = is_orientable(rs);

  for (Sign second : {Sign::plus, Sign::minus}) {
    std::vector<Edge> edges = rs.edges();
    edges.push_back(Edge{a, z, Sign::plus});
    edges.push_back(Edge{w, z, second});
    auto rot = rs.rotations();
    rot[a].insert(rot[a].begin() + static_cast<std::ptrdiff_t>(ca + 1), Arc::forward(ea));
    rot[w].insert(rot[w].begin() + static_cast<std::ptrdiff_t>(cw + 1), Arc::forward(ew));
    rot.push_back({Arc::backward(ea), Arc::backward(ew)});
    RotationSystem out(rs.vertex_count() + 1, std::move(edges), std::move(rot));
    if (face_count(out) != f0 + 1 || !is_quadrangular(out) || is_orientable(out) != orientable) continue;
    auto labels = rs.labels();
    labels.resize(rs.vertex_count());
    labels.push_back("z" + std::to_string(z));
    Coloring c = e.coloring;
    c.push_back(Color::black);
    return ColoredEmbedding{out.with_labels(std::move(labels)), std::move(c)};
  }
  throw NcbgError("insert_degree2_black: no signature keeps the embedding quadrangular");
}

bool alternation_holds(const ColoredEmbedding& k3t, VertexId a) {
  const auto faces = trace_faces(k3t.system);
  const auto at = faces_at(k3t.system, faces, a);
  if (at.size() != k3t.system.degree(a) || at.empty()) return false;
  for (std::size_t i = 0; i < at.size(); ++i) {
    if (at[i].corner != i) return false;
    if (at[i].opposite == at[(i + 1) % at.size()].opposite) return false;
  }
  return true;
}

void SeparationParams::check() const {
  if (n < 2) throw NcbgError("G(3,2n,2) parameters need n >= 2");
  if (p < 1 || p % 2 == 0 || p >= 2 * n - 2) {
    throw NcbgError("G(3,2n,2) parameters need odd p with 1 <= p < 2n-2; got n=" + std::to_string(n) +
                    " p=" + std::to_string(p));
  }
}

namespace {

ColoredEmbedding k3_start(int t) {
  if (t == 2) {
    static const ColoredEmbedding planar = [] {
      auto found = exhaustive_quadrangulation(3, 2, false);
      if (!found) throw NcbgError("no planar quadrangulation of K_{3,2} found");
      return *found;
    }();
    return planar;
  }
  return build_k3_even(t);
}

}  // namespace

SeparatedEmbedding build_g3_2n_2(SeparationParams params) {
  params.check();
  const int n = params.n;
  const ColoredEmbedding base = k3_start(2 * n - 2);
  const VertexId a = 0, b = 1, c = 2;
  if (!alternation_holds(base, a)) throw NcbgError("alternation fails at the saturated white");
  const auto faces0 = trace_faces(base.system);
  for (const CornerFace& f1 : faces_at(base.system, faces0, a)) {
    if (f1.opposite != b) continue;
    const ColoredEmbedding one = insert_degree2_black(base, faces0[f1.face], a);
    const auto z1 = static_cast<VertexId>(base.system.vertex_count());
    const auto faces1 = trace_faces(one.system);
    for (const CornerFace& f2 : faces_at(one.system, faces1, a)) {
      if (f2.opposite != c) continue;
      ColoredEmbedding two = insert_degree2_black(one, faces1[f2.face], a);
      const VertexId z2 = z1 + 1;
      const auto rot = two.system.neighbors(a);
      if (separation_counts(rot, z1, z2).forward != static_cast<std::size_t>(params.p)) continue;
      NcbgSpec expected{3, 2 * n, 2, {{c, z1}, {b, z2}}};
      require_certified(two.system, two.coloring, expected);
      return SeparatedEmbedding{std::move(two), a, z1, z2};
    }
  }
  throw NcbgError("no face pair realizes separation " + std::to_string(params.p));
}

bool is_valid_odd_pairing(const ColoredEmbedding& e, const OddPairing& pairing) {
  Classification cls;
  try {
    cls = classify_embedding(e.system, e.coloring);
  } catch (const NcbgError&) {
    return false;
  }
  const auto blacks = e.blacks();
  if (pairing.entries.size() * 2 != blacks.size()) return false;
  std::set<VertexId> used_black, used_white;
  for (const auto& entry : pairing.entries) {
    if (entry.white >= e.coloring.size() || e.coloring[entry.white] != Color::white) return false;
    if (!cls.saturated[entry.white] || !used_white.insert(entry.white).second) return false;
    for (VertexId x : {entry.i, entry.j}) {
      if (x >= e.coloring.size() || e.coloring[x] != Color::black) return false;
      if (!used_black.insert(x).second) return false;
    }
    if (!odd_separated(e.system.neighbors(entry.white), entry.i, entry.j)) return false;
  }
  return true;
}

namespace {

class PairingSearch {
 public:
  PairingSearch(const ColoredEmbedding& e, std::uint64_t budget) : budget_(budget) {
    const auto cls = classify_embedding(e.system, e.coloring);
    blacks_ = e.blacks();
    for (VertexId w : e.whites()) {
      if (cls.saturated[w]) whites_.push_back(w);
    }
    std::map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < blacks_.size(); ++i) index[blacks_[i]] = i;
    // odd[w][i][j]: the pair (i, j) is odd-separated at white w
    odd_.resize(whites_.size());
    for (std::size_t w = 0; w < whites_.size(); ++w) {
      const auto rot = e.system.neighbors(whites_[w]);
      odd_[w].assign(blacks_.size(), std::vector<bool>(blacks_.size(), false));
      for (std::size_t x = 0; x < rot.size(); ++x) {
        for (std::size_t y = x + 1; y < rot.size(); ++y) {
          if ((y - x - 1) % 2 == 1) {
            const std::size_t i = index.at(rot[x]), j = index.at(rot[y]);
            odd_[w][i][j] = odd_[w][j][i] = true;
          }
        }
      }
    }
    paired_.assign(blacks_.size(), false);
    used_.assign(whites_.size(), false);
  }

  std::optional<OddPairing> run() {
    if (blacks_.size() % 2 != 0 || whites_.size() < blacks_.size() / 2) return std::nullopt;
    if (!dfs()) return std::nullopt;
    return result_;
  }

 private:
  bool dfs() {
    if (++nodes_ > budget_) return false;
    std::size_t i = 0;
    while (i < paired_.size() && paired_[i]) ++i;
    if (i == paired_.size()) return true;
    paired_[i] = true;
    for (std::size_t j = i + 1; j < paired_.size(); ++j) {
      if (paired_[j]) continue;
      for (std::size_t w = 0; w < whites_.size(); ++w) {
        if (used_[w] || !odd_[w][i][j]) continue;
        paired_[j] = true;
        used_[w] = true;
        result_.entries.push_back({blacks_[i], blacks_[j], whites_[w]});
        if (dfs()) return true;
        result_.entries.pop_back();
        used_[w] = false;
        paired_[j] = false;
        if (nodes_ > budget_) break;
      }
    }
    paired_[i] = false;
    return false;
  }

  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<VertexId> blacks_, whites_;
  std::vector<std::vector<std::vector<bool>>> odd_;
  std::vector<bool> paired_, used_;
  OddPairing result_;
};

const SeparatedEmbedding& cached_separated(int n, int p) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, SeparatedEmbedding> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({n, p});
  if (it == cache.end()) it = cache.emplace(std::pair{n, p}, build_g3_2n_2({n, p})).first;
  return it->second;
}

}  // namespace

std::optional<OddPairing> find_odd_pairing(const ColoredEmbedding& e, std::uint64_t node_budget) {
  PairingSearch search(e, node_budget);
  return search.run();
}

ColoredEmbedding apply_odd_pairing(const ColoredEmbedding& kbip, const OddPairing& pairing,
                                   const PipelineObserver& observer) {
  const auto cls = classify_embedding(kbip.system, kbip.coloring);
  if (cls.spec.k != 0) throw NcbgError("apply_odd_pairing needs a complete bipartite input");
  const int m = cls.spec.m;
  const int blacks = cls.spec.n;
  if (blacks % 2 != 0 || m < blacks / 2) throw NcbgError("apply_odd_pairing needs K_{m,2n} with m >= n");
  const int n = blacks / 2;
  if (!is_valid_odd_pairing(kbip, pairing)) throw NcbgError("invalid odd pairing");
  require_certified(kbip.system, kbip.coloring, NcbgSpec::canonical(m, blacks, 0));

  ColoredEmbedding cur = kbip;
  std::vector<std::optional<VertexId>> where(kbip.system.vertex_count());
  std::iota(where.begin(), where.end(), VertexId{0});
  if (observer) observer(0, cur);

  int step = 0;
  for (const auto& entry : pairing.entries) {
    ++step;
    const VertexId alpha = *where[entry.white];
    const VertexId i = *where[entry.i];
    const VertexId j = *where[entry.j];
    const auto sep = separation_counts(cur.system.neighbors(alpha), i, j);
    std::optional<DiamondSumResult> chosen;
    const SeparatedEmbedding* g3 = nullptr;
    for (std::size_t p : {sep.forward, sep.backward}) {
      const SeparatedEmbedding& cand = cached_separated(n, static_cast<int>(p));
      const auto plans = valid_shifts(cur.system, alpha, cur.coloring, cand.embedding.system, cand.saturated_white,
                                      cand.embedding.coloring);
      for (const auto& plan : plans) {
        std::map<VertexId, VertexId> m2;
        for (auto [x, y] : plan.merge) m2[x] = y;
        const VertexId zi = m2.at(i), zj = m2.at(j);
        const VertexId z1 = cand.first_unsaturated, z2 = cand.second_unsaturated;
        if ((zi == z1 && zj == z2) || (zi == z2 && zj == z1)) {
          chosen = diamond_sum(cur.system, alpha, cand.embedding.system, cand.saturated_white, plan.shift);
          g3 = &cand;
          break;
        }
      }
      if (chosen) break;
    }
    if (!chosen) {
      throw NcbgError("step " + std::to_string(step) + ": no shift glues the pair onto the unsaturated blacks");
    }
    if (!check_rotations_preserved(cur.system, cur.coloring, *chosen)) {
      throw NcbgError("step " + std::to_string(step) + ": white rotations not preserved");
    }
    Coloring color = chosen->coloring(cur.coloring, g3->embedding.coloring);
    ColoredEmbedding next{chosen->system, std::move(color)};
    const auto cls_next = classify_embedding(next.system, next.coloring);
    NcbgSpec expected{m + step, blacks, 2 * step, cls_next.spec.deleted};
    require_certified(next.system, next.coloring, expected);
    for (auto& w : where) {
      if (w) w = chosen->first_map[*w];
    }
    cur = std::move(next);
    if (observer) observer(step, cur);
  }
  return whites_first(cur);
}

namespace {

ColoredEmbedding pipeline_from_variants(int whites, int blacks, const char* what) {
  for (unsigned variant = 0; variant < 64; ++variant) {
    const ColoredEmbedding kbip = build_kbip(whites, blacks, variant);
    if (auto pairing = find_odd_pairing(kbip)) return apply_odd_pairing(kbip, *pairing);
  }
  throw NcbgError(std::string(what) + ": no odd pairing found on any generated embedding");
}

}  // namespace

ColoredEmbedding build_imbalanced(int n) {
  if (n < 3) throw NcbgError("build_imbalanced needs n >= 3");
  const auto rot = ringel_rotations(n);
  const auto done = complete_signatures(rot, true);
  ColoredEmbedding out;
  if (done.status == CompletionStatus::found) {
    const ColoredEmbedding& kbip = *done.embedding;
    OddPairing pairing = ringel_odd_pairing(n);
    if (!is_valid_odd_pairing(kbip, pairing)) {
      auto found = find_odd_pairing(kbip);
      if (!found) throw NcbgError("completed Ringel embedding has no odd pairing");
      pairing = *found;
    }
    out = apply_odd_pairing(kbip, pairing);
  } else {
    out = pipeline_from_variants(n + 1, 2 * n, "build_imbalanced");
  }
  require_certified(out.system, out.coloring, NcbgSpec::canonical(2 * n + 1, 2 * n, 2 * n));
  return out;
}

ColoredEmbedding build_balanced_even(int n) {
  if (n < 4) throw NcbgError("build_balanced_even needs n >= 4 (use build_g666 for n = 3)");
  auto out = pipeline_from_variants(n, 2 * n, "build_balanced_even");
  require_certified(out.system, out.coloring, NcbgSpec::canonical(2 * n, 2 * n, 2 * n));
  return out;
}

ColoredEmbedding build_g666() {
  const auto rot = ringel_k36();
  const auto done = complete_signatures(rot, true);
  if (done.status != CompletionStatus::found) throw NcbgError("K_{3,6} signature completion failed");
  const ColoredEmbedding& kbip = *done.embedding;
  OddPairing pairing;
  pairing.entries = {{rot.black_id(1), rot.black_id(3), 0}, {rot.black_id(2), rot.black_id(5), 1},
                     {rot.black_id(4), rot.black_id(6), 2}};
  auto out = apply_odd_pairing(kbip, pairing);
  require_certified(out.system, out.coloring, NcbgSpec::canonical(6, 6, 6));
  return out;
}

}  // namespace quadsurf
