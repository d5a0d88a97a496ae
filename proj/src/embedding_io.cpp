#include "quadsurf/embedding_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "text_lines.hpp"

namespace quadsurf {

using detail::Line;
using detail::parse_fail;
using detail::parse_index;
using detail::Token;

std::string serialize_embedding(const RotationSystem& rs, const std::optional<std::vector<VertexId>>& white) {
  std::ostringstream out;
  const bool simple = rs.is_simple();
  out << "embedding v=" << rs.vertex_count() << '\n';
  if (!simple) {
    out << "edges:";
    for (const auto& e : rs.edges()) out << ' ' << e.first << '-' << e.second;
    out << '\n';
  }
  if (white) {
    auto w = *white;
    std::sort(w.begin(), w.end());
    out << "white:";
    for (VertexId v : w) out << ' ' << v;
    out << '\n';
  }
  for (VertexId v = 0; v < rs.vertex_count(); ++v) {
    out << "rot " << v << ':';
    const auto& rot = rs.rotation(v);
    if (!rot.empty()) {
      std::size_t start = 0;
      for (std::size_t i = 1; i < rot.size(); ++i) {
        const bool better = simple ? rs.head(rot[i]) < rs.head(rot[start]) : rot[i] < rot[start];
        if (better) start = i;
      }
      for (std::size_t k = 0; k < rot.size(); ++k) {
        Arc a = rot[(start + k) % rot.size()];
        if (simple) {
          out << ' ' << rs.head(a);
        } else {
          out << ' ' << a.edge() << (a.is_forward() ? '+' : '-');
        }
      }
    }
    out << '\n';
  }
  out << "twisted:";
  if (simple) {
    std::vector<std::pair<VertexId, VertexId>> tw;
    for (const auto& e : rs.edges()) {
      if (e.sign == Sign::minus) tw.push_back(std::minmax(e.first, e.second));
    }
    std::sort(tw.begin(), tw.end());
    for (auto [u, v] : tw) out << ' ' << u << '-' << v;
  } else {
    for (EdgeId e = 0; e < rs.edge_count(); ++e) {
      if (rs.sign(e) == Sign::minus) out << " e" << e;
    }
  }
  out << '\n';
  for (VertexId v = 0; v < rs.labels().size(); ++v) {
    if (!rs.labels()[v].empty()) out << "label " << v << ": " << rs.labels()[v] << '\n';
  }
  return out.str();
}

namespace {

std::pair<VertexId, VertexId> parse_pair(const Line& line, const Token& tok) {
  const auto dash = tok.text.find('-');
  if (dash == std::string_view::npos || dash == 0) parse_fail(line, tok, "expected <u>-<v>");
  const auto u = parse_index(line, tok, tok.text.substr(0, dash));
  const auto v = parse_index(line, tok, tok.text.substr(dash + 1));
  return {static_cast<VertexId>(u), static_cast<VertexId>(v)};
}

std::size_t parse_rot_head(const Line& line, std::size_t vertex_count) {
  if (line.tokens.size() < 2 || line.tokens[1].text.back() != ':') parse_fail(line, "expected 'rot <id>:'");
  const Token& t = line.tokens[1];
  const auto v = parse_index(line, t, t.text.substr(0, t.text.size() - 1));
  if (v >= vertex_count) parse_fail(line, t, "vertex id out of range");
  return v;
}

}  // namespace

EmbeddingFile parse_embedding(const std::string& text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty embedding file");
  const Line& header = lines.front();
  if (header.tokens.size() != 2 || header.tokens[0].text != "embedding") {
    parse_fail(header, "expected 'embedding v=<count>'");
  }
  const std::size_t n = parse_index(header, header.tokens[1], detail::expect_key(header, header.tokens[1], "v"));

  const Line* edges_line = nullptr;
  for (const auto& l : lines) {
    if (l.tokens[0].text == "edges:") {
      if (edges_line) parse_fail(l, "duplicate edges section");
      edges_line = &l;
    }
  }

  std::vector<Edge> edges;
  if (edges_line) {
    for (std::size_t i = 1; i < edges_line->tokens.size(); ++i) {
      auto [u, v] = parse_pair(*edges_line, edges_line->tokens[i]);
      if (u >= n || v >= n) parse_fail(*edges_line, edges_line->tokens[i], "vertex id out of range");
      edges.push_back(Edge{u, v, Sign::plus});
    }
  }

  std::vector<std::vector<VertexId>> nbrs(n);
  std::vector<std::vector<Arc>> darts(n);
  std::vector<bool> have_rot(n, false);
  std::vector<std::pair<VertexId, VertexId>> twisted;
  std::optional<std::vector<VertexId>> white;
  std::vector<std::string> labels;
  bool have_twisted = false;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& l = lines[li];
    const auto key = l.tokens[0].text;
    if (key == "edges:") continue;
    if (key == "white:") {
      if (white) parse_fail(l, "duplicate white section");
      white.emplace();
      for (std::size_t i = 1; i < l.tokens.size(); ++i) {
        const auto v = parse_index(l, l.tokens[i], l.tokens[i].text);
        if (v >= n) parse_fail(l, l.tokens[i], "vertex id out of range");
        white->push_back(static_cast<VertexId>(v));
      }
    } else if (key == "rot") {
      const auto v = parse_rot_head(l, n);
      if (have_rot[v]) parse_fail(l, l.tokens[1], "duplicate rotation");
      have_rot[v] = true;
      for (std::size_t i = 2; i < l.tokens.size(); ++i) {
        const Token& t = l.tokens[i];
        if (edges_line) {
          const char dir = t.text.back();
          if (dir != '+' && dir != '-') parse_fail(l, t, "expected dart <k>+ or <k>-");
          const auto e = parse_index(l, t, t.text.substr(0, t.text.size() - 1));
          if (e >= edges.size()) parse_fail(l, t, "edge id out of range");
          darts[v].push_back(dir == '+' ? Arc::forward(static_cast<EdgeId>(e)) : Arc::backward(static_cast<EdgeId>(e)));
        } else {
          const auto w = parse_index(l, t, t.text);
          if (w >= n) parse_fail(l, t, "vertex id out of range");
          nbrs[v].push_back(static_cast<VertexId>(w));
        }
      }
    } else if (key == "twisted:") {
      if (have_twisted) parse_fail(l, "duplicate twisted section");
      have_twisted = true;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) {
        const Token& t = l.tokens[i];
        if (edges_line) {
          if (t.text.size() < 2 || t.text[0] != 'e') parse_fail(l, t, "expected e<k>");
          const auto e = parse_index(l, t, t.text.substr(1));
          if (e >= edges.size()) parse_fail(l, t, "edge id out of range");
          edges[e].sign = Sign::minus;
        } else {
          twisted.push_back(parse_pair(l, t));
        }
      }
    } else if (key == "label") {
      const auto v = parse_rot_head(l, n);
      labels.resize(n);
      std::string text;
      for (std::size_t i = 2; i < l.tokens.size(); ++i) {
        if (!text.empty()) text += ' ';
        text += l.tokens[i].text;
      }
      labels[v] = text;
    } else {
      parse_fail(l, l.tokens[0], "unknown section");
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!have_rot[v]) throw ParseError(lines.back().number, 1, "missing rotation for vertex " + std::to_string(v));
  }
  if (!have_twisted) throw ParseError(lines.back().number, 1, "missing twisted section");

  try {
    RotationSystem rs = edges_line ? RotationSystem(n, std::move(edges), std::move(darts))
                                   : RotationSystem::from_neighbors(nbrs, twisted);
    if (!labels.empty()) rs = rs.with_labels(std::move(labels));
    return EmbeddingFile{std::move(rs), std::move(white)};
  } catch (const EmbeddingError& e) {
    throw ParseError(header.number, 1, std::string("invalid rotation system: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

EmbeddingFile read_embedding_file(const std::string& path) { return parse_embedding(read_text_file(path)); }

}  // namespace quadsurf
