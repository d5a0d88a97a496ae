#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "quadsurf/diamond.hpp"
#include "quadsurf/flag_map.hpp"
#include "quadsurf/ncbg.hpp"
#include "support.hpp"

using namespace quadsurf;

namespace {

constexpr int kCases = 250;
constexpr int kMaxEdges = 12;

// Whether v lies on deg(v) distinct faces. When this holds on at least one side
// the glued surface is cellular.
bool meets_distinct_faces(const RotationSystem& rs, VertexId v) {
  std::set<std::size_t> seen;
  const auto faces = trace_faces(rs);
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (const auto& st : faces[i])
      if (rs.tail(st.arc) == v) seen.insert(i);
  return seen.size() == rs.degree(v);
}

std::multiset<std::size_t> length_multiset(const RotationSystem& rs) {
  const auto l = face_lengths(rs);
  return {l.begin(), l.end()};
}

}  // namespace

TEST_CASE("face lengths sum to twice the edge count") {
  std::mt19937 rng(101);
  for (int c = 0; c < kCases; ++c) {
    const auto rs = testsupport::random_system(rng, 7, kMaxEdges);
    std::size_t total = 0;
    for (auto l : face_lengths(rs)) total += l;
    CHECK(total == 2 * rs.edge_count());
  }
}

TEST_CASE("vertex flips preserve face lengths, chi and orientability") {
  std::mt19937 rng(202);
  for (int c = 0; c < kCases; ++c) {
    const auto rs = testsupport::random_system(rng, 7, kMaxEdges);
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(rs.vertex_count() - 1));
    const VertexId v = pick(rng);
    const auto flipped = vertex_flip(rs, v);
    CHECK(length_multiset(flipped) == length_multiset(rs));
    CHECK(euler_characteristic(flipped) == euler_characteristic(rs));
    CHECK(is_orientable(flipped) == is_orientable(rs));
    CHECK(is_quadrangular(flipped) == is_quadrangular(rs));
    const auto back = vertex_flip(flipped, v);
    CHECK(back.rotations() == rs.rotations());
    for (std::size_t e = 0; e < rs.edge_count(); ++e) CHECK(back.sign(e) == rs.sign(e));
  }
}

TEST_CASE("trace_faces matches the brute-force orbit oracle") {
  std::mt19937 rng(303);
  for (int c = 0; c < kCases; ++c) {
    const auto rs = testsupport::random_system(rng, 7, kMaxEdges);
    std::multiset<std::vector<VertexId>> traced;
    for (const auto& f : trace_faces(rs)) {
      const auto cyc = testsupport::canonical_cycle(face_vertices(rs, f));
      traced.insert(cyc);
      traced.insert(cyc);
    }
    CHECK(traced == testsupport::oracle_faces(rs));
  }
}

TEST_CASE("orientability agrees with the fundamental cycle test") {
  std::mt19937 rng(404);
  for (int c = 0; c < kCases; ++c) {
    const auto rs = testsupport::random_system(rng, 7, kMaxEdges);
    const auto gauged = tree_gauge(rs);
    // after the gauge every non-tree edge closes one fundamental cycle
    const bool any_twist = std::any_of(gauged.edges().begin(), gauged.edges().end(),
                                       [](const Edge& e) { return e.sign == Sign::minus; });
    CHECK(is_orientable(rs) == !any_twist);
  }
}

TEST_CASE("flag map duality") {
  std::mt19937 rng(505);
  for (int c = 0; c < kCases; ++c) {
    const auto rs = testsupport::random_system(rng, 7, kMaxEdges);
    const auto d = dual(rs).system;
    CHECK(d.vertex_count() == face_count(rs));
    CHECK(d.edge_count() == rs.edge_count());
    CHECK(face_count(d) == rs.vertex_count());
    CHECK(euler_characteristic(d) == euler_characteristic(rs));
    CHECK(is_orientable(d) == is_orientable(rs));
    const auto again = from_flags(to_flags(rs)).system;
    CHECK(length_multiset(again) == length_multiset(rs));
    CHECK(euler_characteristic(again) == euler_characteristic(rs));
  }
}

TEST_CASE("diamond sum bookkeeping and rotation preservation") {
  std::mt19937 rng(606);
  int done = 0, capped = 0;
  while (done < kCases || capped < 20) {
    std::uniform_int_distribution<int> size(2, 5);
    const int m1 = size(rng), n1 = size(rng), m2 = size(rng), n2 = size(rng);
    const auto a = testsupport::random_bipartite(rng, m1, n1, kMaxEdges);
    const auto b = testsupport::random_bipartite(rng, m2, n2, kMaxEdges);
    std::uniform_int_distribution<VertexId> pa(0, static_cast<VertexId>(m1 - 1));
    const VertexId v = pa(rng);
    std::optional<VertexId> v2;
    for (VertexId w = 0; w < static_cast<VertexId>(m2); ++w)
      if (b.degree(w) == a.degree(v)) v2 = w;
    if (!v2) continue;
    const std::size_t d = a.degree(v);
    std::uniform_int_distribution<std::size_t> ps(0, d - 1);
    const auto res = diamond_sum(a, v, b, *v2, ps(rng));
    if (!res.system.is_connected()) continue;
    CHECK(res.system.vertex_count() == a.vertex_count() + b.vertex_count() - 2 - d);
    CHECK(res.system.edge_count() == a.edge_count() + b.edge_count() - 2 * d);
    const Coloring ca = *infer_coloring(a, std::pair{m1, n1});
    CHECK(check_rotations_preserved(a, ca, res));
    if (!meets_distinct_faces(a, v) && !meets_distinct_faces(b, *v2)) {
      // some glued face may be an annulus; the rotation system caps it
      ++capped;
      CHECK(euler_characteristic(res.system) >= euler_characteristic(a) + euler_characteristic(b) - 2);
      continue;
    }
    ++done;
    CHECK(face_count(res.system) + d == face_count(a) + face_count(b));
    CHECK(euler_characteristic(res.system) == euler_characteristic(a) + euler_characteristic(b) - 2);
    if (!is_orientable(a) || !is_orientable(b)) CHECK_FALSE(is_orientable(res.system));
    if (is_quadrangular(a) && is_quadrangular(b)) CHECK(is_quadrangular(res.system));
  }
}

TEST_CASE("separation parity is well defined on even rotations") {
  std::mt19937 rng(707);
  for (int c = 0; c < kCases; ++c) {
    std::uniform_int_distribution<int> half(2, 8);
    const int len = 2 * half(rng);
    std::vector<VertexId> rot(len);
    for (int i = 0; i < len; ++i) rot[i] = static_cast<VertexId>(i + 1);
    std::shuffle(rot.begin(), rot.end(), rng);
    std::uniform_int_distribution<int> pick(0, len - 1);
    const int x = pick(rng);
    int y = pick(rng);
    while (y == x) y = pick(rng);
    const auto sc = separation_counts(rot, rot[x], rot[y]);
    CHECK(sc.forward + sc.backward == static_cast<std::size_t>(len - 2));
    CHECK(sc.forward % 2 == sc.backward % 2);
    CHECK(odd_separated(rot, rot[x], rot[y]) == odd_separated(rot, rot[y], rot[x]));
    std::vector<VertexId> rev(rot.rbegin(), rot.rend());
    CHECK(odd_separated(rev, rot[x], rot[y]) == odd_separated(rot, rot[x], rot[y]));
  }
}
