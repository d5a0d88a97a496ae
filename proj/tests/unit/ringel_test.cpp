#include <doctest.h>

#include "quadsurf/ringel.hpp"

using namespace quadsurf;

namespace {

std::vector<VertexId> as_ids(std::vector<int> v) { return {v.begin(), v.end()}; }

bool same_cycle(const std::vector<int>& a, std::vector<int> b) {
  const auto x = as_ids(a), y = as_ids(std::move(b));
  return cyclic_equal(x, y, false);
}

}  // namespace

TEST_CASE("Ringel rotations") {
  const auto r4 = ringel_rotations(4);
  CHECK(r4.whites() == 5);
  CHECK(r4.blacks == 8);
  CHECK(same_cycle(r4.white_rotations[0], {1, 2, 8, 7, 3, 4, 6, 5}));
  CHECK(same_cycle(r4.white_rotations[1], {1, 8, 2, 3, 7, 6, 4, 5}));
  for (int w = 2; w < 5; ++w) CHECK(same_cycle(r4.white_rotations[w], {1, 2, 3, 4, 5, 6, 7, 8}));

  const auto r3 = ringel_rotations(3);
  CHECK(r3.whites() == 4);
  CHECK(same_cycle(r3.white_rotations[0], {1, 3, 2, 4, 5, 6}));
  CHECK(same_cycle(r3.white_rotations[1], {1, 3, 2, 4, 5, 6}));
  CHECK(same_cycle(r3.white_rotations[3], {4, 5, 6, 1, 2, 3}));

  const auto k36 = ringel_k36();
  CHECK(k36.whites() == 3);
  CHECK(same_cycle(k36.white_rotations[0], {1, 2, 6, 5, 3, 4}));
  CHECK(same_cycle(k36.white_rotations[1], {1, 6, 2, 3, 5, 4}));
  CHECK(same_cycle(k36.white_rotations[2], {1, 2, 3, 4, 5, 6}));
  for (const auto& r : k36.white_rotations) CHECK(r.size() == 6);
}

TEST_CASE("signature completion") {
  const auto k36 = complete_signatures(ringel_k36());
  REQUIRE(k36.status == CompletionStatus::found);
  const auto& e = *k36.embedding;
  const auto r = certify(e.system, e.coloring, NcbgSpec::canonical(3, 6, 0));
  CHECK(r.pass);
  CHECK(r.surface.name() == "N_2");
  const auto rot = ringel_k36();
  for (int w = 0; w < 3; ++w) CHECK(cyclic_equal(e.system.neighbors(w), rot.rotation_ids(w), true));

  const auto k46 = complete_signatures(ringel_rotations(3));
  REQUIRE(k46.embedding);
  const auto r46 = certify(k46.embedding->system, k46.embedding->coloring, NcbgSpec::canonical(4, 6, 0));
  CHECK(r46.pass);
  CHECK(r46.surface.name() == "N_4");
}

TEST_CASE("completion of a 4-cycle gives the sphere") {
  RotationsOnly c4;
  c4.blacks = 2;
  c4.white_rotations = {{1, 2}, {1, 2}};
  c4.white_names = {"a", "b"};
  const auto res = complete_signatures(c4, false);
  REQUIRE(res.embedding);
  CHECK(surface_of(res.embedding->system).name() == "S_0");
  CHECK(complete_signatures(c4, true).status == CompletionStatus::unsatisfiable);
}

TEST_CASE("tiny budget reports exhaustion") {
  CHECK(complete_signatures(ringel_rotations(5), true, 3).status == CompletionStatus::budget_exhausted);
}

TEST_CASE("Ringel odd pairings") {
  for (int n = 3; n <= 10; ++n) {
    const auto rot = ringel_rotations(n);
    const auto pairing = ringel_odd_pairing(n);
    CHECK(pairing.entries.size() == static_cast<std::size_t>(n));
    CHECK(pairing_valid_for_rotations(rot, pairing));
  }
  const auto r4 = ringel_rotations(4);
  const auto a = r4.rotation_ids(0);
  CHECK(separation_counts(a, r4.black_id(1), r4.black_id(3)).forward == 3);
  const auto r3 = ringel_rotations(3);
  const auto a3 = r3.rotation_ids(0);
  CHECK(separation_counts(a3, r3.black_id(1), r3.black_id(2)).forward == 1);
  const auto p3 = ringel_odd_pairing(3);
  CHECK(p3.entries[0].white == 0);
  for (std::size_t k = 1; k < p3.entries.size(); ++k) CHECK(p3.entries[k].white != 1);
  // same-parity pairs on an identity rotation
  const auto id = r4.rotation_ids(2);
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 2; j <= 8; j += 2) CHECK(odd_separated(id, r4.black_id(i), r4.black_id(j)));
}
