#include "quadsurf/current_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "quadsurf/embedding_io.hpp"
#include "text_lines.hpp"

namespace quadsurf {

using detail::Line;
using detail::parse_fail;
using detail::parse_index;
using detail::parse_long;
using detail::Token;

std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t CurrentGraph::alpha(Arc a) const {
  const std::int64_t c = current.at(a.edge());
  if (a.is_forward()) return mod_floor(c, modulus());
  return mod_floor(-to_int(system.sign(a.edge())) * c, modulus());
}

std::vector<std::int64_t> face_log(const CurrentGraph& cg, const FaceWalk& face, LogConvention conv) {
  std::vector<std::int64_t> out;
  out.reserve(face.size());
  for (const FaceState& s : face) {
    Sign o = s.sign;
    if (conv == LogConvention::after) o = o * cg.system.sign(s.arc.edge());
    out.push_back(mod_floor(to_int(o) * cg.alpha(s.arc), cg.modulus()));
  }
  return out;
}

std::string CurrentGraphReport::to_text() const {
  std::ostringstream out;
  auto pf = [](bool b) { return b ? "pass" : "fail"; };
  out << "C1: " << pf(c1) << '\n' << "C2: " << pf(c2) << '\n' << "C3: " << pf(c3) << '\n' << "C4: " << pf(c4) << '\n';
  for (const auto& p : problems) out << "problem: " << p << '\n';
  out << "current_graph: " << pf(pass()) << '\n';
  return out.str();
}

namespace {

std::vector<std::int64_t> generator_values(int n) {
  std::vector<std::int64_t> out;
  const std::int64_t m = 2 * static_cast<std::int64_t>(n);
  for (std::int64_t c = 1; c <= n - 2; c += 2) {
    out.push_back(c);
    out.push_back(m - c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CurrentGraphReport verify_c1_c4(const CurrentGraph& cg, LogConvention conv) {
  CurrentGraphReport r;
  const auto& rs = cg.system;
  const auto faces = trace_faces(rs);
  r.c1 = faces.size() == 2;
  if (!r.c1) r.problems.push_back("embedding has " + std::to_string(faces.size()) + " faces");

  r.c2 = true;
  for (VertexId v = 0; v < rs.vertex_count(); ++v) {
    if (rs.degree(v) != 4) {
      r.c2 = false;
      r.problems.push_back("vertex " + std::to_string(v) + " has degree " + std::to_string(rs.degree(v)));
      continue;
    }
    std::int64_t sum = 0;
    for (Arc a : rs.rotation(v)) sum += cg.alpha(a);
    if (mod_floor(sum, cg.modulus()) != 0) {
      r.c2 = false;
      r.problems.push_back("Kirchhoff's law fails at vertex " + std::to_string(v));
    }
  }

  const auto want = generator_values(cg.n);
  r.c3 = cg.n >= 3 && cg.n % 2 == 1 && !faces.empty();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    auto log = face_log(cg, faces[f], conv);
    std::sort(log.begin(), log.end());
    if (log != want) {
      r.c3 = false;
      r.problems.push_back("log of face " + std::to_string(f) + " is not +-1, +-3, ..., +-(n-2)");
    }
  }

  r.c4 = r.c1;
  if (r.c1) {
    for (EdgeId e = 0; e < rs.edge_count(); ++e) {
      for (const auto& face : faces) {
        const auto hits = std::count_if(face.begin(), face.end(), [e](const FaceState& s) { return s.arc.edge() == e; });
        if (hits != 1) {
          r.c4 = false;
          r.problems.push_back("edge " + std::to_string(e) + " is not on both faces");
          break;
        }
      }
    }
  }
  return r;
}

ColoredEmbedding derive_with(const CurrentGraph& cg, int face_zero, LogConvention conv) {
  const auto& rs = cg.system;
  const auto faces = trace_faces(rs);
  if (faces.size() != 2) throw EmbeddingError(ErrorKind::bad_argument, "current graph must have two faces");
  const FaceWalk& f0 = faces[static_cast<std::size_t>(face_zero)];
  const FaceWalk& f1 = faces[static_cast<std::size_t>(1 - face_zero)];
  const auto log0 = face_log(cg, f0, conv);
  const auto log1 = face_log(cg, f1, conv);

  std::vector<std::optional<Arc>> arc0(rs.edge_count()), arc1(rs.edge_count());
  for (const FaceState& s : f0) arc0[s.arc.edge()] = s.arc;
  for (const FaceState& s : f1) arc1[s.arc.edge()] = s.arc;

  const std::int64_t m = cg.modulus();
  std::vector<std::vector<VertexId>> rot(static_cast<std::size_t>(m));
  std::vector<std::pair<VertexId, VertexId>> twisted;
  for (std::int64_t g = 0; g < m; ++g) {
    const auto& log = g % 2 == 0 ? log0 : log1;
    for (std::int64_t c : log) rot[static_cast<std::size_t>(g)].push_back(static_cast<VertexId>(mod_floor(g + c, m)));
    if (g % 2 != 0) continue;
    for (std::size_t k = 0; k < f0.size(); ++k) {
      const EdgeId e = f0[k].arc.edge();
      if (arc1[e] && *arc0[e] == *arc1[e]) {
        twisted.emplace_back(static_cast<VertexId>(g), static_cast<VertexId>(mod_floor(g + log0[k], m)));
      }
    }
  }
  RotationSystem derived = RotationSystem::from_neighbors(rot, twisted);
  std::vector<std::string> labels;
  for (std::int64_t g = 0; g < m; ++g) labels.push_back(std::to_string(g));
  Coloring c(static_cast<std::size_t>(m));
  for (std::int64_t g = 0; g < m; ++g) c[static_cast<std::size_t>(g)] = g % 2 == 0 ? Color::white : Color::black;
  return ColoredEmbedding{derived.with_labels(std::move(labels)), std::move(c)};
}

DerivedEmbedding derive_embedding(const CurrentGraph& cg, std::optional<int> face_zero) {
  if (face_zero && *face_zero != 0 && *face_zero != 1) throw NcbgError("face label must be 0 or 1");
  std::vector<std::string> why;
  bool any_valid = false;
  for (LogConvention conv : {LogConvention::before, LogConvention::after}) {
    const auto report = verify_c1_c4(cg, conv);
    if (!report.pass()) continue;
    any_valid = true;
    for (int f : {0, 1}) {
      if (face_zero && f != *face_zero) continue;
      try {
        auto e = derive_with(cg, f, conv);
        const auto cert = certify(e.system, e.coloring, NcbgSpec::canonical(cg.n, cg.n, cg.n));
        if (cert.pass) return DerivedEmbedding{std::move(e), f, conv};
        why.push_back(cert.note);
      } catch (const EmbeddingError& err) {
        why.emplace_back(err.what());
      }
    }
  }
  if (!any_valid) throw NcbgError("current graph fails (C1)-(C4):\n" + verify_c1_c4(cg).to_text());
  std::string msg = "no labeling or log convention gives a quadrangular G(n,n,n)";
  for (const auto& w : why) msg += "; " + w;
  throw NcbgError(msg);
}

std::string serialize_current_graph(const CurrentGraph& cg) {
  std::ostringstream out;
  const auto& rs = cg.system;
  out << "currentgraph n=" << cg.n << '\n' << "edges:\n";
  const std::int64_t m = cg.modulus();
  for (EdgeId e = 0; e < rs.edge_count(); ++e) {
    std::int64_t c = mod_floor(cg.current[e], m);
    if (c > cg.n) c -= m;
    const Edge& ed = rs.edge(e);
    out << 'e' << e << ": " << ed.first << ' ' << ed.second << " current=" << c
        << " twisted=" << (ed.sign == Sign::minus ? 1 : 0) << '\n';
  }
  for (VertexId v = 0; v < rs.vertex_count(); ++v) {
    out << "rot " << v << ':';
    const auto& rot = rs.rotation(v);
    const auto start = static_cast<std::size_t>(std::min_element(rot.begin(), rot.end()) - rot.begin());
    for (std::size_t k = 0; k < rot.size(); ++k) {
      const Arc a = rot[(start + k) % rot.size()];
      out << " e" << a.edge() << (a.is_forward() ? '+' : '-');
    }
    out << '\n';
  }
  return out.str();
}

namespace {

Arc parse_dart(const Line& line, const Token& tok) {
  const auto t = tok.text;
  if (t.size() < 3 || t[0] != 'e' || (t.back() != '+' && t.back() != '-')) parse_fail(line, tok, "expected e<k>+ or e<k>-");
  const auto k = static_cast<EdgeId>(parse_index(line, tok, t.substr(1, t.size() - 2)));
  return t.back() == '+' ? Arc::forward(k) : Arc::backward(k);
}

}  // namespace

CurrentGraph parse_current_graph(const std::string& text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty current graph file");
  const Line& head = lines[0];
  if (head.tokens.size() != 2 || head.tokens[0].text != "currentgraph") {
    parse_fail(head, "expected 'currentgraph n=<n>'");
  }
  CurrentGraph cg;
  const long n = parse_long(head, head.tokens[1], detail::expect_key(head, head.tokens[1], "n"));
  if (n < 1) parse_fail(head, head.tokens[1], "n must be positive");
  cg.n = static_cast<int>(n);

  std::size_t i = 1;
  if (i >= lines.size() || lines[i].tokens.size() != 1 || lines[i].tokens[0].text != "edges:") {
    parse_fail(i < lines.size() ? lines[i] : head, "expected 'edges:'");
  }
  ++i;
  std::vector<Edge> edges;
  VertexId max_vertex = 0;
  bool any_vertex = false;
  for (; i < lines.size() && lines[i].tokens[0].text != "rot"; ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 5) parse_fail(l, "expected 'e<k>: <u> <v> current=<c> twisted=<0|1>'");
    const auto& name = l.tokens[0];
    if (name.text.size() < 3 || name.text[0] != 'e' || name.text.back() != ':') parse_fail(l, name, "expected e<k>:");
    const auto k = parse_index(l, name, name.text.substr(1, name.text.size() - 2));
    if (k != edges.size()) parse_fail(l, name, "edges must be numbered consecutively from 0");
    const auto u = static_cast<VertexId>(parse_index(l, l.tokens[1], l.tokens[1].text));
    const auto v = static_cast<VertexId>(parse_index(l, l.tokens[2], l.tokens[2].text));
    const long c = parse_long(l, l.tokens[3], detail::expect_key(l, l.tokens[3], "current"));
    if (c % 2 == 0) parse_fail(l, l.tokens[3], "currents must be odd");
    const auto tw = detail::expect_key(l, l.tokens[4], "twisted");
    if (tw != "0" && tw != "1") parse_fail(l, l.tokens[4], "twisted must be 0 or 1");
    edges.push_back(Edge{u, v, tw == "1" ? Sign::minus : Sign::plus});
    std::int64_t cur = mod_floor(c, cg.modulus());
    if (cur > cg.n) cur -= cg.modulus();
    cg.current.push_back(cur);
    max_vertex = std::max({max_vertex, u, v});
    any_vertex = true;
  }
  const std::size_t vertex_count = any_vertex ? max_vertex + 1 : 0;
  std::vector<std::vector<Arc>> rot(vertex_count);
  std::vector<bool> seen(vertex_count, false);
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() < 2 || l.tokens[0].text != "rot") parse_fail(l, l.tokens[0], "expected 'rot <v>: ...'");
    const auto& vt = l.tokens[1];
    if (vt.text.empty() || vt.text.back() != ':') parse_fail(l, vt, "expected <v>:");
    const auto v = parse_index(l, vt, vt.text.substr(0, vt.text.size() - 1));
    if (v >= vertex_count) parse_fail(l, vt, "vertex not used by any edge");
    if (seen[v]) parse_fail(l, vt, "duplicate rotation");
    seen[v] = true;
    for (std::size_t t = 2; t < l.tokens.size(); ++t) {
      const Arc a = parse_dart(l, l.tokens[t]);
      if (a.edge() >= edges.size()) parse_fail(l, l.tokens[t], "unknown edge");
      rot[v].push_back(a);
    }
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (!seen[v]) throw ParseError(lines.back().number, 1, "missing rotation for vertex " + std::to_string(v));
  }
  try {
    cg.system = RotationSystem(vertex_count, std::move(edges), std::move(rot));
  } catch (const EmbeddingError& e) {
    throw ParseError(lines.back().number, 1, e.what());
  }
  return cg;
}

}  // namespace quadsurf
