#include "quadsurf/ringel.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quadsurf/face_assembly.hpp"

namespace quadsurf {

std::vector<VertexId> RotationsOnly::rotation_ids(int white) const {
  std::vector<VertexId> out;
  for (int b : white_rotations.at(static_cast<std::size_t>(white))) out.push_back(black_id(b));
  return out;
}

namespace {

std::string white_name(int i) { return i < 26 ? std::string(1, static_cast<char>('a' + i)) : "w" + std::to_string(i); }

std::vector<int> identity_rotation(int count) {
  std::vector<int> r(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) r[static_cast<std::size_t>(i)] = i + 1;
  return r;
}

}  // namespace

RotationsOnly ringel_rotations(int n) {
  if (n < 3) throw NcbgError("ringel_rotations needs n >= 3");
  const int blacks = 2 * n;
  std::vector<int> a, b;
  if (n % 2 == 0) {
    // a: 1 2 | 2n 2n-1 | 3 4 | 2n-2 2n-3 | ... | n+2 n+1
    int lo = 1, hi = blacks;
    for (int block = 0; block < n; ++block) {
      if (block % 2 == 0) {
        a.push_back(lo++);
        a.push_back(lo++);
      } else {
        a.push_back(hi--);
        a.push_back(hi--);
      }
    }
    // b: 1 | 2n | 2 3 | 2n-1 2n-2 | 4 5 | ... | n n+1
    b.push_back(1);
    b.push_back(blacks);
    lo = 2;
    hi = blacks - 1;
    for (int block = 0; lo <= n; ++block) {
      if (block % 2 == 0) {
        b.push_back(lo++);
        b.push_back(lo++);
      } else {
        b.push_back(hi--);
        b.push_back(hi--);
      }
    }
  } else {
    a = identity_rotation(blacks);
    std::swap(a[1], a[2]);
    b = a;
  }
  RotationsOnly r;
  r.blacks = blacks;
  r.white_rotations.push_back(a);
  r.white_rotations.push_back(b);
  for (int i = 2; i <= n; ++i) r.white_rotations.push_back(identity_rotation(blacks));
  for (int i = 0; i <= n; ++i) r.white_names.push_back(white_name(i));
  return r;
}

RotationsOnly ringel_k36() {
  RotationsOnly r;
  r.blacks = 6;
  r.white_rotations = {{1, 2, 6, 5, 3, 4}, {1, 6, 2, 3, 5, 4}, {1, 2, 3, 4, 5, 6}};
  r.white_names = {"a", "b", "c"};
  return r;
}

namespace {

class CornerSearch {
 public:
  CornerSearch(const RotationsOnly& r, bool nonorientable, std::uint64_t budget)
      : rot_(r), m_(r.whites()), blacks_(r.blacks), nonorientable_(nonorientable), budget_(budget) {
    for (int w = 0; w < m_; ++w) {
      const auto& rw = r.white_rotations[static_cast<std::size_t>(w)];
      if (static_cast<int>(rw.size()) != blacks_) throw NcbgError("white rotation length differs from black count");
      std::set<int> distinct(rw.begin(), rw.end());
      if (static_cast<int>(distinct.size()) != blacks_ || *distinct.begin() < 1 || *distinct.rbegin() > blacks_) {
        throw NcbgError("white rotation is not a permutation of the blacks");
      }
      for (int k = 0; k < blacks_; ++k) {
        corners_.push_back(Corner{w, rw[static_cast<std::size_t>(k)] - 1,
                                  rw[static_cast<std::size_t>((k + 1) % blacks_)] - 1});
      }
    }
    std::map<std::pair<int, int>, std::vector<int>> by_key;
    for (int c = 0; c < static_cast<int>(corners_.size()); ++c) by_key[key(c)].push_back(c);
    candidates_.resize(corners_.size());
    for (int c = 0; c < static_cast<int>(corners_.size()); ++c) {
      for (int d : by_key[key(c)]) {
        if (corners_[static_cast<std::size_t>(d)].white != corners_[static_cast<std::size_t>(c)].white) {
          candidates_[static_cast<std::size_t>(c)].push_back(d);
        }
      }
    }
    partner_.assign(corners_.size(), -1);
    end_.assign(static_cast<std::size_t>(blacks_), std::vector<int>(static_cast<std::size_t>(m_)));
    for (auto& e : end_) {
      for (int w = 0; w < m_; ++w) e[static_cast<std::size_t>(w)] = w;
    }
    count_.assign(static_cast<std::size_t>(blacks_), 0);
  }

  CompletionResult run() {
    CompletionResult res;
    const bool done = dfs();
    res.nodes = nodes_;
    if (done) {
      res.status = CompletionStatus::found;
      res.embedding = std::move(found_);
    } else {
      res.status = exhausted_ ? CompletionStatus::budget_exhausted : CompletionStatus::unsatisfiable;
    }
    return res;
  }

 private:
  struct Corner {
    int white;
    int x;
    int y;
  };
  struct Undo {
    int black;
    int a, old_a, b, old_b;
    bool linked;
  };

  std::pair<int, int> key(int c) const {
    const auto& k = corners_[static_cast<std::size_t>(c)];
    return std::minmax(k.x, k.y);
  }

  bool can_add(int black, int u, int v) const {
    const auto& e = end_[static_cast<std::size_t>(black)];
    if (e[static_cast<std::size_t>(u)] == v) return count_[static_cast<std::size_t>(black)] == m_ - 1;
    return true;
  }

  Undo add(int black, int u, int v) {
    auto& e = end_[static_cast<std::size_t>(black)];
    ++count_[static_cast<std::size_t>(black)];
    if (e[static_cast<std::size_t>(u)] == v) return Undo{black, 0, 0, 0, 0, false};
    const int a = e[static_cast<std::size_t>(u)];
    const int b = e[static_cast<std::size_t>(v)];
    Undo undo{black, a, e[static_cast<std::size_t>(a)], b, e[static_cast<std::size_t>(b)], true};
    e[static_cast<std::size_t>(a)] = b;
    e[static_cast<std::size_t>(b)] = a;
    return undo;
  }

  void undo(const Undo& u) {
    auto& e = end_[static_cast<std::size_t>(u.black)];
    --count_[static_cast<std::size_t>(u.black)];
    if (!u.linked) return;
    e[static_cast<std::size_t>(u.b)] = u.old_b;
    e[static_cast<std::size_t>(u.a)] = u.old_a;
  }

  bool viable(int c, int d) const {
    if (partner_[static_cast<std::size_t>(d)] >= 0) return false;
    const auto& cc = corners_[static_cast<std::size_t>(c)];
    const int w2 = corners_[static_cast<std::size_t>(d)].white;
    if (cc.x == cc.y) return false;
    return can_add(cc.x, cc.white, w2) && can_add(cc.y, cc.white, w2);
  }

  bool dfs() {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    int best = -1;
    std::size_t best_count = SIZE_MAX;
    for (int c = 0; c < static_cast<int>(corners_.size()); ++c) {
      if (partner_[static_cast<std::size_t>(c)] >= 0) continue;
      std::size_t cnt = 0;
      for (int d : candidates_[static_cast<std::size_t>(c)]) cnt += viable(c, d) ? 1 : 0;
      if (cnt < best_count) {
        best_count = cnt;
        best = c;
        if (cnt == 0) return false;
      }
    }
    if (best < 0) return leaf();
    const auto& cc = corners_[static_cast<std::size_t>(best)];
    for (int d : candidates_[static_cast<std::size_t>(best)]) {
      if (!viable(best, d)) continue;
      const int w2 = corners_[static_cast<std::size_t>(d)].white;
      const Undo u1 = add(cc.x, cc.white, w2);
      const Undo u2 = add(cc.y, cc.white, w2);
      partner_[static_cast<std::size_t>(best)] = d;
      partner_[static_cast<std::size_t>(d)] = best;
      if (dfs()) return true;
      partner_[static_cast<std::size_t>(best)] = -1;
      partner_[static_cast<std::size_t>(d)] = -1;
      undo(u2);
      undo(u1);
      if (exhausted_) return false;
    }
    return false;
  }

  bool leaf() {
    const std::size_t nv = static_cast<std::size_t>(m_ + blacks_);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::map<std::pair<int, int>, EdgeId> edge_id;
    for (int w = 0; w < m_; ++w) {
      for (int b = 0; b < blacks_; ++b) {
        edge_id[{w, b}] = static_cast<EdgeId>(edges.size());
        edges.emplace_back(static_cast<VertexId>(w), static_cast<VertexId>(m_ + b));
      }
    }
    std::vector<FaceSpec> faces;
    for (int c = 0; c < static_cast<int>(corners_.size()); ++c) {
      const int d = partner_[static_cast<std::size_t>(c)];
      if (d < c) continue;
      const auto& cc = corners_[static_cast<std::size_t>(c)];
      const int w2 = corners_[static_cast<std::size_t>(d)].white;
      FaceSpec f;
      f.vertices = {static_cast<VertexId>(cc.white), static_cast<VertexId>(m_ + cc.x), static_cast<VertexId>(w2),
                    static_cast<VertexId>(m_ + cc.y)};
      f.edges = {edge_id[{cc.white, cc.x}], edge_id[{w2, cc.x}], edge_id[{w2, cc.y}], edge_id[{cc.white, cc.y}]};
      faces.push_back(std::move(f));
    }
    std::vector<std::optional<std::vector<EdgeId>>> preferred(nv);
    for (int w = 0; w < m_; ++w) {
      std::vector<EdgeId> order;
      for (int b : rot_.white_rotations[static_cast<std::size_t>(w)]) order.push_back(edge_id[{w, b - 1}]);
      preferred[static_cast<std::size_t>(w)] = std::move(order);
    }
    RotationSystem rs = assemble_surface(nv, edges, faces, preferred);
    if (nonorientable_ && is_orientable(rs)) return false;
    std::vector<std::string> labels(nv);
    for (int w = 0; w < m_; ++w) {
      labels[static_cast<std::size_t>(w)] =
          static_cast<std::size_t>(w) < rot_.white_names.size() ? rot_.white_names[static_cast<std::size_t>(w)] : "";
    }
    for (int b = 0; b < blacks_; ++b) labels[static_cast<std::size_t>(m_ + b)] = std::to_string(b + 1);
    Coloring color(nv, Color::black);
    for (int w = 0; w < m_; ++w) color[static_cast<std::size_t>(w)] = Color::white;
    found_ = ColoredEmbedding{rs.with_labels(std::move(labels)), std::move(color)};
    return true;
  }

  const RotationsOnly& rot_;
  int m_;
  int blacks_;
  bool nonorientable_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Corner> corners_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> partner_;
  std::vector<std::vector<int>> end_;
  std::vector<int> count_;
  std::optional<ColoredEmbedding> found_;
};

}  // namespace

CompletionResult complete_signatures(const RotationsOnly& rotations, bool require_nonorientable,
                                     std::uint64_t node_budget) {
  CornerSearch search(rotations, require_nonorientable, node_budget);
  return search.run();
}

OddPairing ringel_odd_pairing(int n) {
  if (n < 3) throw NcbgError("ringel_odd_pairing needs n >= 3");
  const int m = n + 1;
  auto black = [m](int label) { return static_cast<VertexId>(m + label - 1); };
  std::vector<std::pair<int, int>> pairs;
  if (n % 2 == 0) {
    for (int s = 1; s < 2 * n; s += 4) {
      pairs.emplace_back(s, s + 2);
      pairs.emplace_back(s + 1, s + 3);
    }
  } else {
    pairs.emplace_back(1, 2);
    for (int s = 3; s < 2 * n; s += 4) {
      pairs.emplace_back(s, s + 2);
      pairs.emplace_back(s + 1, s + 3);
    }
  }
  OddPairing out;
  // first pair to a (id 0); the rest to the identity whites 2..n, never b (id 1)
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const VertexId white = k == 0 ? 0 : static_cast<VertexId>(k + 1);
    out.entries.push_back({black(pairs[k].first), black(pairs[k].second), white});
  }
  return out;
}

bool pairing_valid_for_rotations(const RotationsOnly& rotations, const OddPairing& pairing) {
  const int m = rotations.whites();
  const int blacks = rotations.blacks;
  if (static_cast<int>(pairing.entries.size()) * 2 != blacks) return false;
  std::set<VertexId> used_black, used_white;
  for (const auto& e : pairing.entries) {
    if (e.white >= static_cast<VertexId>(m)) return false;
    if (!used_white.insert(e.white).second) return false;
    for (VertexId b : {e.i, e.j}) {
      if (b < static_cast<VertexId>(m) || b >= static_cast<VertexId>(m + blacks)) return false;
      if (!used_black.insert(b).second) return false;
    }
    const auto rot = rotations.rotation_ids(static_cast<int>(e.white));
    if (!odd_separated(rot, e.i, e.j)) return false;
  }
  return true;
}

}  // namespace quadsurf
