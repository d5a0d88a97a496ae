#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadsurf/constructions.hpp"
#include "quadsurf/rotation_system.hpp"

namespace quadsurf {

/// Embedded multigraph with currents in Z_{2n}. `current[e]` is the value on the
/// forward arc of edge e; the backward arc carries -sign(e) * current[e].
struct CurrentGraph {
  int n = 0;
  RotationSystem system;
  std::vector<std::int64_t> current;

  std::int64_t modulus() const { return 2 * static_cast<std::int64_t>(n); }
  /// Residue in [0, 2n).
  std::int64_t alpha(Arc a) const;
};

/// Reduces x into [0, m).
std::int64_t mod_floor(std::int64_t x, std::int64_t m);

/// Whether a log entry uses the walk's orientation before or after it crosses
/// the edge's twist.
enum class LogConvention { before, after };

std::vector<std::int64_t> face_log(const CurrentGraph& cg, const FaceWalk& face,
                                   LogConvention conv = LogConvention::before);

struct CurrentGraphReport {
  bool c1 = false;  // two faces
  bool c2 = false;  // quartic, Kirchhoff's law
  bool c3 = false;  // log content
  bool c4 = false;  // every edge on both faces
  std::vector<std::string> problems;

  bool pass() const { return c1 && c2 && c3 && c4; }
  std::string to_text() const;
};

CurrentGraphReport verify_c1_c4(const CurrentGraph& cg, LogConvention conv = LogConvention::before);

struct DerivedEmbedding {
  ColoredEmbedding embedding;  // vertex g is the residue g; evens are white
  int face_zero = 0;           // which traced face supplied the even rotations
  LogConvention convention = LogConvention::before;
};

/// Builds the derived embedding on Z_{2n}. Tries both log conventions and, unless
/// `face_zero` fixes it, both face labelings, returning the first that
/// certifies as G(n,n,n). Throws NcbgError when none does or when the current
/// graph fails (C1)-(C4) under every convention.
DerivedEmbedding derive_embedding(const CurrentGraph& cg, std::optional<int> face_zero = {});

/// Derived embedding for one fixed labeling and convention, without the
/// certification step. Throws EmbeddingError when the rotations do not fit.
ColoredEmbedding derive_with(const CurrentGraph& cg, int face_zero, LogConvention conv);

std::string serialize_current_graph(const CurrentGraph& cg);
/// Throws ParseError with line/column on malformed input.
CurrentGraph parse_current_graph(const std::string& text);

}  // namespace quadsurf
