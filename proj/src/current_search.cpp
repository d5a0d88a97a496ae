#include "quadsurf/current_search.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>

#include "quadsurf/face_assembly.hpp"
#include "quadsurf/flag_map.hpp"

namespace quadsurf {

ColoredEmbedding lift_dipole(const RotationSystem& dipole, const std::vector<std::int64_t>& voltages, int n) {
  const std::int64_t m = 2 * static_cast<std::int64_t>(n);
  const std::size_t edges = dipole.edge_count();
  if (voltages.size() != edges || dipole.vertex_count() != 2) {
    throw EmbeddingError(ErrorKind::bad_argument, "lift_dipole: dipole and voltages disagree");
  }
  auto lifted_edge = [&](EdgeId e, std::int64_t g) {
    return static_cast<EdgeId>(e * static_cast<std::size_t>(n) + static_cast<std::size_t>(g / 2));
  };
  std::vector<Edge> out_edges(edges * static_cast<std::size_t>(n));
  for (EdgeId e = 0; e < edges; ++e) {
    if (dipole.edge(e).first != 0 || dipole.edge(e).second != 1) {
      throw EmbeddingError(ErrorKind::bad_argument, "lift_dipole: edges must run from X to Y");
    }
    if (mod_floor(voltages[e], 2) != 1) throw EmbeddingError(ErrorKind::bad_argument, "lift_dipole: even voltage");
    for (std::int64_t g = 0; g < m; g += 2) {
      out_edges[lifted_edge(e, g)] =
          Edge{static_cast<VertexId>(g), static_cast<VertexId>(mod_floor(g + voltages[e], m)), dipole.sign(e)};
    }
  }
  std::vector<std::vector<Arc>> rot(static_cast<std::size_t>(m));
  for (std::int64_t g = 0; g < m; ++g) {
    auto& r = rot[static_cast<std::size_t>(g)];
    if (g % 2 == 0) {
      for (Arc a : dipole.rotation(0)) r.push_back(Arc::forward(lifted_edge(a.edge(), g)));
    } else {
      for (Arc a : dipole.rotation(1)) {
        r.push_back(Arc::backward(lifted_edge(a.edge(), mod_floor(g - voltages[a.edge()], m))));
      }
    }
  }
  RotationSystem rs(static_cast<std::size_t>(m), std::move(out_edges), std::move(rot));
  std::vector<std::string> labels;
  Coloring c;
  for (std::int64_t g = 0; g < m; ++g) {
    labels.push_back(std::to_string(g));
    c.push_back(g % 2 == 0 ? Color::white : Color::black);
  }
  return ColoredEmbedding{rs.with_labels(std::move(labels)), std::move(c)};
}

DualCurrentGraph current_graph_from_dipole(const RotationSystem& dipole, const std::vector<std::int64_t>& voltages,
                                           int n) {
  const FlagRealization fr = dual(dipole);
  CurrentGraph cg;
  cg.n = n;
  cg.system = fr.system;
  cg.current.assign(dipole.edge_count(), 0);
  const auto faces = trace_faces(cg.system);
  const FaceState x = fr.state_of_flag[flag_of(FaceState{dipole.rotation(0).front(), Sign::plus})];
  const FaceState xm = mirror_state(cg.system, x);
  const auto it = std::find_if(faces.begin(), faces.end(), [&](const FaceWalk& f) {
    return std::find(f.begin(), f.end(), x) != f.end() || std::find(f.begin(), f.end(), xm) != f.end();
  });
  if (it == faces.end()) throw EmbeddingError(ErrorKind::bad_argument, "dual face of X not found");
  const std::int64_t m = 2 * static_cast<std::int64_t>(n);
  for (const FaceState& s : *it) {
    const EdgeId e = s.arc.edge();
    const std::int64_t value = to_int(s.sign) * voltages[e];
    const std::int64_t fwd = s.arc.is_forward() ? value : -to_int(cg.system.sign(e)) * value;
    std::int64_t c = mod_floor(fwd, m);
    if (c > n) c -= m;
    cg.current[e] = c;
  }
  return DualCurrentGraph{std::move(cg), static_cast<int>(it - faces.begin())};
}

namespace {

constexpr int kSplitDepth = 2;  // voltage positions fixed by a parallel branch

class DipoleSearch {
 public:
  DipoleSearch(int n, std::uint64_t budget, const std::atomic<std::size_t>* stop_after = nullptr,
               std::size_t branch = 0)
      : n_(n), e_(n - 1), m_(2 * n), budget_(budget), stop_after_(stop_after), branch_(branch) {
    for (int c = 1; c <= n - 2; c += 2) {
      values_.push_back(c);
      values_.push_back(m_ - c);
    }
    std::sort(values_.begin(), values_.end());
    used_.assign(values_.size(), false);
    v_.assign(static_cast<std::size_t>(e_), 0);
    d_.assign(static_cast<std::size_t>(e_), 0);
    partner_.assign(static_cast<std::size_t>(e_), -1);
    crossing_.assign(static_cast<std::size_t>(e_), 0);
    end_.resize(static_cast<std::size_t>(e_));
  }

  std::uint64_t nodes() const { return nodes_; }
  bool over_budget() const { return over_; }
  bool cancelled() const { return cancelled_; }
  CurrentSearchResult take_result() { return std::move(result_); }

  /// Serial entry: full search from the root.
  bool run_all() { return start() && voltage_dfs(1); }

  /// Branch entry: fixes v_1 .. v_{kSplitDepth} to the given value indices.
  bool run_prefix(const std::vector<std::size_t>& prefix) {
    if (!start()) return false;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      if (used_[prefix[k]]) return false;
      used_[prefix[k]] = true;
      v_[k + 1] = values_[prefix[k]];
    }
    return voltage_dfs(static_cast<int>(prefix.size()) + 1);
  }

  /// Value indices available for position 1.., given v_0 = 1.
  std::vector<std::vector<std::size_t>> prefixes() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::vector<bool> used(values_.size(), false);
    used[0] = true;
    enumerate_prefixes(cur, used, out);
    return out;
  }

 private:
  void enumerate_prefixes(std::vector<std::size_t>& cur, std::vector<bool>& used,
                          std::vector<std::vector<std::size_t>>& out) const {
    if (static_cast<int>(cur.size()) == std::min(kSplitDepth, e_ - 1)) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.push_back(i);
      enumerate_prefixes(cur, used, out);
      cur.pop_back();
      used[i] = false;
    }
  }

  bool start() {
    if (n_ < 5 || n_ % 2 == 0) return false;
    // v_0 = 1 is the least value; any X rotation can start at the edge carrying 1
    used_[0] = true;
    v_[0] = values_[0];
    return true;
  }

  bool charge() {
    if (stop_after_ && stop_after_->load(std::memory_order_relaxed) < branch_) {
      cancelled_ = true;
      return false;
    }
    if (++nodes_ > budget_) {
      over_ = true;
      return false;
    }
    return true;
  }

  bool halted() const { return over_ || cancelled_; }

  bool voltage_dfs(int pos) {
    if (pos > kSplitDepth && !charge()) return false;
    if (pos == e_) return corners();
    for (std::size_t i = 1; i < values_.size(); ++i) {
      if (used_[i]) continue;
      used_[i] = true;
      v_[static_cast<std::size_t>(pos)] = values_[i];
      if (voltage_dfs(pos + 1)) return true;
      used_[i] = false;
      if (halted()) return false;
    }
    return false;
  }

  std::int64_t neg(std::int64_t x) const { return x == 0 ? 0 : m_ - x; }

  bool corners() {
    for (int i = 0; i < e_; ++i) {
      d_[static_cast<std::size_t>(i)] =
          mod_floor(v_[static_cast<std::size_t>(i)] - v_[static_cast<std::size_t>((i + 1) % e_)], m_);
    }
    // every class {d, -d} needs an even number of corners
    std::vector<int> cls(static_cast<std::size_t>(m_), 0);
    for (std::int64_t d : d_) ++cls[static_cast<std::size_t>(std::min(d, neg(d)))];
    if (std::any_of(cls.begin(), cls.end(), [](int c) { return c % 2 != 0; })) return false;
    for (int k = 0; k < e_; ++k) end_[static_cast<std::size_t>(k)] = k;
    y_count_ = 0;
    return match_dfs();
  }

  // Y corners as a union of paths over the edges; closing a path is allowed
  // only for the last corner.
  struct Undo {
    int a, old_a, b, old_b;
    bool linked;
  };

  bool can_link(int p, int q) const {
    if (p == q) return e_ == 1;
    if (end_[static_cast<std::size_t>(p)] == q) return y_count_ == e_ - 1;
    return true;
  }

  Undo link(int p, int q) {
    ++y_count_;
    if (end_[static_cast<std::size_t>(p)] == q) return Undo{0, 0, 0, 0, false};
    const int a = end_[static_cast<std::size_t>(p)];
    const int b = end_[static_cast<std::size_t>(q)];
    Undo u{a, end_[static_cast<std::size_t>(a)], b, end_[static_cast<std::size_t>(b)], true};
    end_[static_cast<std::size_t>(a)] = b;
    end_[static_cast<std::size_t>(b)] = a;
    return u;
  }

  void unlink(const Undo& u) {
    --y_count_;
    if (!u.linked) return;
    end_[static_cast<std::size_t>(u.b)] = u.old_b;
    end_[static_cast<std::size_t>(u.a)] = u.old_a;
  }

  bool match_dfs() {
    if (!charge()) return false;
    int i = 0;
    while (i < e_ && partner_[static_cast<std::size_t>(i)] >= 0) ++i;
    if (i == e_) return leaf();
    const std::int64_t di = d_[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < e_; ++j) {
      if (partner_[static_cast<std::size_t>(j)] >= 0) continue;
      const std::int64_t dj = d_[static_cast<std::size_t>(j)];
      const int i1 = (i + 1) % e_, j1 = (j + 1) % e_;
      int p1, q1, p2, q2, kind;
      if (dj == di) {
        kind = 1;  // faces e_i e_j e_{j+1} e_{i+1}
        p1 = i, q1 = j, p2 = j1, q2 = i1;
      } else if (dj == neg(di)) {
        kind = 2;  // faces e_i e_{j+1} e_j e_{i+1}
        p1 = i, q1 = j1, p2 = j, q2 = i1;
      } else {
        continue;
      }
      if (!can_link(p1, q1)) continue;
      const Undo u1 = link(p1, q1);
      if (!can_link(p2, q2)) {
        unlink(u1);
        continue;
      }
      const Undo u2 = link(p2, q2);
      partner_[static_cast<std::size_t>(i)] = j;
      partner_[static_cast<std::size_t>(j)] = i;
      crossing_[static_cast<std::size_t>(i)] = kind;
      if (match_dfs()) return true;
      partner_[static_cast<std::size_t>(i)] = -1;
      partner_[static_cast<std::size_t>(j)] = -1;
      unlink(u2);
      unlink(u1);
      if (halted()) return false;
    }
    return false;
  }

  bool leaf() {
    std::vector<std::pair<VertexId, VertexId>> edges(static_cast<std::size_t>(e_), {0, 1});
    std::vector<FaceSpec> faces;
    for (int i = 0; i < e_; ++i) {
      const int j = partner_[static_cast<std::size_t>(i)];
      if (j < i) continue;
      const auto ei = static_cast<EdgeId>(i), ej = static_cast<EdgeId>(j);
      const auto ei1 = static_cast<EdgeId>((i + 1) % e_), ej1 = static_cast<EdgeId>((j + 1) % e_);
      FaceSpec f;
      f.vertices = {0, 1, 0, 1};
      if (crossing_[static_cast<std::size_t>(i)] == 1) {
        f.edges = {ei, ej, ej1, ei1};
      } else {
        f.edges = {ei, ej1, ej, ei1};
      }
      faces.push_back(std::move(f));
    }
    std::vector<EdgeId> x_order(static_cast<std::size_t>(e_));
    for (int i = 0; i < e_; ++i) x_order[static_cast<std::size_t>(i)] = static_cast<EdgeId>(i);
    std::vector<std::optional<std::vector<EdgeId>>> preferred{x_order, std::nullopt};
    RotationSystem dipole = assemble_surface(2, edges, faces, preferred);
    ColoredEmbedding lifted = lift_dipole(dipole, v_, n_);
    if (n_ % 4 == 1 && is_orientable(lifted.system)) return false;

    auto [cg, x_face] = current_graph_from_dipole(dipole, v_, n_);
    DerivedEmbedding derived = derive_embedding(cg, x_face);
    if (canonical_face_set(derived.embedding.system) != canonical_face_set(lifted.system) ||
        surface_of(derived.embedding.system) != surface_of(lifted.system)) {
      throw NcbgError("derived embedding disagrees with the lifted dipole");
    }
    result_.status = SearchStatus::found;
    result_.voltages = v_;
    result_.dipole = std::move(dipole);
    result_.graph = std::move(cg);
    result_.x_face = x_face;
    result_.derived = std::move(derived);
    return true;
  }

  int n_;
  int e_;
  std::int64_t m_;
  std::uint64_t budget_;
  const std::atomic<std::size_t>* stop_after_;
  std::size_t branch_;
  std::uint64_t nodes_ = 0;
  bool over_ = false;
  bool cancelled_ = false;
  std::vector<std::int64_t> values_;
  std::vector<bool> used_;
  std::vector<std::int64_t> v_;
  std::vector<std::int64_t> d_;
  std::vector<int> partner_;
  std::vector<int> crossing_;
  std::vector<int> end_;
  int y_count_ = 0;
  CurrentSearchResult result_;
};

void check_n(int n) {
  if (n < 5 || n % 2 == 0) throw NcbgError("current graph search needs odd n >= 5, got " + std::to_string(n));
}

}  // namespace

CurrentSearchResult search_current_graphs_serial(int n, std::uint64_t budget) {
  check_n(n);
  DipoleSearch s(n, budget);
  const bool found = s.run_all();
  CurrentSearchResult r = s.take_result();
  r.nodes = std::min(s.nodes(), budget);
  if (!found) r.status = s.over_budget() ? SearchStatus::budget_exhausted : SearchStatus::exhausted;
  return r;
}

CurrentSearchResult search_current_graphs(int n, std::uint64_t budget, int threads) {
  check_n(n);
  const auto prefixes = DipoleSearch(n, budget).prefixes();
  const std::size_t count = prefixes.size();
  struct Outcome {
    bool found = false;
    bool over = false;
    bool done = false;
    std::uint64_t nodes = 0;
    CurrentSearchResult result;
    std::exception_ptr error;
  };
  std::vector<Outcome> out(count);
  std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};
  if (threads <= 0) threads = omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t b = 0; b < count; ++b) {
    if (first_found.load() < b) continue;
    try {
      DipoleSearch s(n, budget, &first_found, b);
      const bool found = s.run_prefix(prefixes[b]);
      if (s.cancelled()) continue;
      out[b].found = found;
      out[b].over = s.over_budget();
      out[b].nodes = s.nodes();
      out[b].done = true;
      if (found) {
        out[b].result = s.take_result();
        std::size_t cur = first_found.load();
        while (b < cur && !first_found.compare_exchange_weak(cur, b)) {
        }
      }
    } catch (...) {
      out[b].error = std::current_exception();
      out[b].done = true;
      std::size_t cur = first_found.load();
      while (b < cur && !first_found.compare_exchange_weak(cur, b)) {
      }
    }
  }

  // replay in serial order
  std::uint64_t spent = 0;
  for (std::size_t b = 0; b < count; ++b) {
    Outcome& o = out[b];
    if (!o.done) break;  // only branches after a hit are skipped
    if (o.error) std::rethrow_exception(o.error);
    if (o.over || spent + o.nodes > budget) {
      CurrentSearchResult r;
      r.status = SearchStatus::budget_exhausted;
      r.nodes = std::min<std::uint64_t>(budget, spent + o.nodes);
      return r;
    }
    spent += o.nodes;
    if (o.found) {
      CurrentSearchResult r = std::move(o.result);
      r.nodes = spent;
      return r;
    }
  }
  CurrentSearchResult r;
  r.status = SearchStatus::exhausted;
  r.nodes = spent;
  return r;
}

}  // namespace quadsurf
