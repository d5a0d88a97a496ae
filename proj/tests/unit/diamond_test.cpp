#include <doctest.h>

#include "quadsurf/constructions.hpp"
#include "quadsurf/diamond.hpp"

using namespace quadsurf;

namespace {

RotationSystem c4() { return RotationSystem::from_neighbors({{1, 3}, {0, 2}, {1, 3}, {2, 0}}); }

}  // namespace

TEST_CASE("spheres sum to a sphere") {
  for (std::size_t t = 0; t < 2; ++t) {
    const auto res = diamond_sum(c4(), 0, c4(), 0, t);
    CHECK(res.system.vertex_count() == 4);
    CHECK(res.system.edge_count() == 4);
    CHECK(euler_characteristic(res.system) == 2 + 2 - 2);
    CHECK(is_quadrangular(res.system));
  }
}

TEST_CASE("K34 plus K34 at whites is K44 in N_2") {
  const auto& k34 = build_k34_base();
  for (std::size_t t = 0; t < 4; ++t) {
    const auto res = diamond_sum(k34.system, 0, k34.system, 0, t);
    const Coloring c = res.coloring(k34.coloring, k34.coloring);
    const auto r = certify(res.system, c, NcbgSpec::canonical(4, 4, 0));
    CHECK(r.pass);
    CHECK(r.surface.name() == "N_2");
    CHECK(check_rotations_preserved(k34.system, k34.coloring, res));
    // reversal is allowed, so flips of surviving whites keep it true
    DiamondSumResult flipped = res;
    flipped.system = vertex_flip(res.system, *res.first_map[1]);
    CHECK(check_rotations_preserved(k34.system, k34.coloring, flipped));
  }
}

TEST_CASE("gluing plans are anti-parallel") {
  const auto& k34 = build_k34_base();
  const auto plans = gluing_plans(k34.system, 0, k34.system, 0);
  REQUIRE(plans.size() == 4);
  for (std::size_t t = 0; t < plans.size(); ++t) {
    CHECK(plans[t].shift == t);
    CHECK(plans[t].merge.size() == 4);
  }
  CHECK(plans[0].merge[1].second != plans[1].merge[1].second);
}

TEST_CASE("degree mismatch is rejected") {
  const auto& k34 = build_k34_base();
  CHECK_THROWS_AS(gluing_plans(k34.system, 0, k34.system, 3), EmbeddingError);
}

TEST_CASE("valid shifts") {
  const auto& k34 = build_k34_base();
  // no unsaturated blacks: every shift is valid
  CHECK(valid_shifts(k34.system, 0, k34.coloring, k34.system, 0, k34.coloring).size() == 4);

  // G(3,6,2) has two unsaturated blacks; summing with K_{3,6} at saturated whites
  const auto l3 = build_g3_2n_2({3, 1});
  const auto k36 = build_k3_even(6);
  const auto shifts =
      valid_shifts(k36.system, 0, k36.coloring, l3.embedding.system, l3.saturated_white, l3.embedding.coloring);
  CHECK(shifts.size() == 6);
  const auto two = valid_shifts(l3.embedding.system, l3.saturated_white, l3.embedding.coloring,
                                l3.embedding.system, l3.saturated_white, l3.embedding.coloring);
  CHECK_FALSE(two.empty());
  CHECK(two.size() < 6);
  for (const auto& plan : two) {
    const auto res = diamond_sum(l3.embedding.system, l3.saturated_white, l3.embedding.system,
                                 l3.saturated_white, plan.shift);
    const auto c = res.coloring(l3.embedding.coloring, l3.embedding.coloring);
    CHECK(certify(res.system, c, NcbgSpec::canonical(4, 6, 4)).pass);
  }
}

TEST_CASE("G(4,6,2) plus G(5,6,2) gives G(7,6,4)") {
  const auto k36 = build_k3_even(6);
  const auto l3 = build_g3_2n_2({3, 1});
  auto sum_at_saturated = [](const ColoredEmbedding& a, VertexId va, const ColoredEmbedding& b, VertexId vb) {
    const auto plans = valid_shifts(a.system, va, a.coloring, b.system, vb, b.coloring);
    REQUIRE_FALSE(plans.empty());
    const auto res = diamond_sum(a.system, va, b.system, vb, plans.front().shift);
    return ColoredEmbedding{res.system, res.coloring(a.coloring, b.coloring)};
  };
  const auto g462 = sum_at_saturated(k36, 0, l3.embedding, l3.saturated_white);
  CHECK(certify(g462.system, g462.coloring, NcbgSpec::canonical(4, 6, 2)).pass);
  const auto k46 = sum_at_saturated(k36, 0, k36, 0);
  const auto g562 = sum_at_saturated(k46, 0, l3.embedding, l3.saturated_white);
  CHECK(certify(g562.system, g562.coloring, NcbgSpec::canonical(5, 6, 2)).pass);
  const auto sat = classify_embedding(g462.system, g462.coloring).saturated;
  VertexId w = 0;
  while (g462.coloring[w] != Color::white || !sat[w]) ++w;
  const auto sat2 = classify_embedding(g562.system, g562.coloring).saturated;
  VertexId w2 = 0;
  while (g562.coloring[w2] != Color::white || !sat2[w2]) ++w2;
  const auto g764 = sum_at_saturated(g462, w, g562, w2);
  CHECK(certify(g764.system, g764.coloring, NcbgSpec::canonical(7, 6, 4)).pass);
}
