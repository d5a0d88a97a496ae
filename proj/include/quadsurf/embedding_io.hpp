#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadsurf/rotation_system.hpp"

namespace quadsurf {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct EmbeddingFile {
  RotationSystem system;
  std::optional<std::vector<VertexId>> white;  // optional colour class
};

// Text format:
//   embedding v=<count>
//   [edges: <u>-<v> ...]           multigraphs only; edge k is the k-th token
//   [white: <id> ...]
//   rot <id>: <neighbour ids>      simple graphs, or <k>+ / <k>- darts
//   twisted: <u>-<v> ...           simple graphs, or e<k> for multigraphs
//   [label <id>: <text>]
std::string serialize_embedding(const RotationSystem& rs, const std::optional<std::vector<VertexId>>& white = {});
EmbeddingFile parse_embedding(const std::string& text);

EmbeddingFile read_embedding_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace quadsurf
