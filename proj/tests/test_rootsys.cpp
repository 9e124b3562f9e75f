#include <doctest.h>

#include <set>

#include "rootleib/rootsys.hpp"

using namespace rootleib;

TEST_CASE("root counts and basic structure") {
  struct Row {
    SLType t;
    int rank;
    long count;
  };
  for (auto [t, rank, count] : {Row{SLType::A, 2, 6}, Row{SLType::A, 3, 12},
                                Row{SLType::D, 4, 24}, Row{SLType::D, 5, 40},
                                Row{SLType::E, 6, 72}}) {
    RootSystem rs = build_root_system(t, rank);
    CHECK(rs.nroots() == count);
    CHECK(rs.npos() == count / 2);
    for (long i = 0; i < rs.nroots(); ++i) {
      CHECK(rs.pairing(i, i) == 2);
      CHECK(rs.neg(i) == (i < rs.npos() ? i + rs.npos() : i - rs.npos()));
      CHECK(rs.height(rs.neg(i)) == -rs.height(i));
      // Coordinates in the base reproduce the root.
      IVec sum(rs.amb, 0);
      for (int s = 0; s < rs.rank; ++s)
        for (int c = 0; c < rs.amb; ++c)
          sum[c] += rs.simple_coords_of[i][s] * rs.roots[rs.simple_idx[s]][c];
      CHECK(sum == rs.roots[i]);
    }
    // Positives ordered by height; simple roots first.
    for (long i = 0; i + 1 < rs.npos(); ++i) CHECK(rs.height(i) <= rs.height(i + 1));
    for (int s = 0; s < rs.rank; ++s) CHECK(rs.height(rs.simple_idx[s]) == 1);
  }
}

TEST_CASE("simple labels are diagram-adjacent where required") {
  std::vector<std::pair<SLType, int>> cases{
      {SLType::A, 3}, {SLType::D, 4}, {SLType::E, 6}};
  for (auto [t, rank] : cases) {
    RootSystem rs = build_root_system(t, rank);
    CHECK(rs.pairing(rs.simple_idx[0], rs.simple_idx[1]) == -1);
  }
  // E6: walk a1-a2-a3-a4-a5 with a6 hanging off a3.
  RootSystem e6 = build_root_system(SLType::E, 6);
  auto p = [&](int i, int j) { return e6.pairing(e6.simple_idx[i], e6.simple_idx[j]); };
  CHECK(p(0, 1) == -1);
  CHECK(p(1, 2) == -1);
  CHECK(p(2, 3) == -1);
  CHECK(p(3, 4) == -1);
  CHECK(p(2, 5) == -1);
  CHECK(p(0, 2) == 0);
  CHECK(p(4, 5) == 0);
}

TEST_CASE("names round-trip") {
  RootSystem rs = build_root_system(SLType::A, 2);
  long hi = rs.npos() - 1;  // highest root a1+a2
  CHECK(rs.name(hi) == "a1+a2");
  CHECK(rs.id_by_name("a1+a2") == hi);
  CHECK(rs.name(rs.neg(hi)) == "-a1-a2");
  CHECK(rs.id_by_name("missing") == -1);
}

TEST_CASE("type A slot coordinates") {
  RootSystem rs = build_root_system(SLType::A, 3);
  for (long i = 0; i < rs.nroots(); ++i) {
    auto [a, b] = rs.type_a_slots(i);
    CHECK(rs.type_a_root(a, b) == i);
  }
  RootSystem d4 = build_root_system(SLType::D, 4);
  CHECK_THROWS_WITH_AS(d4.type_a_slots(0), doctest::Contains("UnsupportedType"),
                       ToolkitError);
}

TEST_CASE("reflections and sums") {
  RootSystem rs = build_root_system(SLType::A, 2);
  long a1 = rs.simple_idx[0], a2 = rs.simple_idx[1];
  long sum = rs.sum_id(a1, a2);
  CHECK(sum >= 0);
  CHECK(rs.name(sum) == "a1+a2");
  CHECK(rs.sum_id(a1, a1) == -1);       // 2a1 is not a root
  CHECK(rs.sum_id(a1, rs.neg(a1)) == -1);  // zero is not a root
  CHECK(rs.reflect(a1, 0) == rs.neg(a1));
  CHECK(rs.reflect(a1, 1) == sum);
}

TEST_CASE("shortest Weyl words are deterministic") {
  RootSystem rs = build_root_system(SLType::A, 2);
  long a1 = rs.simple_idx[0], a2 = rs.simple_idx[1];
  CHECK(word_mapping_root(rs, a1, a1).empty());
  // Applying word left-to-right: only [1,0] maps a1 to a2 in two steps.
  CHECK(word_mapping_root(rs, a1, a2) == std::vector<int>{1, 0});
  RootSystem d4 = build_root_system(SLType::D, 4);
  for (long b = 0; b < d4.nroots(); ++b) {
    auto w = word_mapping_root(d4, d4.simple_idx[0], b);
    long v = d4.simple_idx[0];
    for (int i : w) v = d4.reflect(v, i);
    CHECK(v == b);
  }
}

TEST_CASE("A2-pair enumeration and classes") {
  RootSystem a2 = build_root_system(SLType::A, 2);
  A2PairSet pa2 = enumerate_a2_pairs(a2);
  CHECK(pa2.pairs.size() == 12);
  CHECK(pa2.positive_count == 6);
  CHECK(pa2.negative_count == 6);

  RootSystem a3 = build_root_system(SLType::A, 3);
  A2PairSet pa3 = enumerate_a2_pairs(a3);
  CHECK(pa3.positive_count > 0);
  CHECK(pa3.negative_count > 0);
  CHECK(pa3.positive_count + pa3.negative_count == static_cast<long>(pa3.pairs.size()));

  RootSystem d4 = build_root_system(SLType::D, 4);
  A2PairSet pd4 = enumerate_a2_pairs(d4);
  CHECK(pd4.negative_count == 0);
  CHECK(pd4.positive_count == static_cast<long>(pd4.pairs.size()));

  // Same-class and opposite-class relations, exhaustively on A2:
  // (b,g) ~ (-g,-b), and (b,g) never ~ (g,b).
  for (std::size_t k = 0; k < pa2.pairs.size(); ++k) {
    long b = pa2.pairs[k].beta, g = pa2.pairs[k].gamma;
    long mirror = pa2.index_of(a2.neg(g), a2.neg(b));
    REQUIRE(mirror >= 0);
    CHECK(pa2.cls[k] == pa2.cls[mirror]);
    long swapped = pa2.index_of(g, b);
    REQUIRE(swapped >= 0);
    CHECK(pa2.cls[k] != pa2.cls[swapped]);
  }
}
