#include <doctest.h>

#include <random>

#include "rootleib/linalg.hpp"

using namespace rootleib;

namespace {

Mat from_rows(std::vector<QVec> rows) {
  Mat m(static_cast<long>(rows.size()), static_cast<long>(rows[0].size()));
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("sparse vector basics") {
  QVec v{Q(0), Q(3), Q(0), Q(-2)};
  SVec s = to_svec(v);
  CHECK(s.size() == 2);
  CHECK(svec_get(s, 1) == 3);
  CHECK(svec_get(s, 2) == 0);
  CHECK(to_qvec(s, 4) == v);
  SVec t = svec_axpy(s, Q(2), SVec{{0, Q(1)}, {1, Q(-1)}});  // s + 2*(e0 - e1)
  CHECK(svec_get(t, 0) == 2);
  CHECK(svec_get(t, 1) == 1);
  SVec cancel = svec_axpy(s, Q(-1), s);
  CHECK(cancel.empty());
  CHECK(svec_str(s, {"a", "b", "c", "d"}) == "3*b + -2*d");
  CHECK(svec_str(SVec{}, {}) == "0");
}

TEST_CASE("rank and kernel, frozen 2x2") {
  Mat m = from_rows({{Q(1), Q(2)}, {Q(2), Q(4)}});
  CHECK(rank_of(m) == 1);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(to_qvec(ker[0], 2) == QVec{Q(-2), Q(1)});
}

TEST_CASE("rank and kernel, frozen 3x3") {
  Mat m = from_rows({{Q(1), Q(2), Q(3)}, {Q(4), Q(5), Q(6)}, {Q(7), Q(8), Q(9)}});
  CHECK(rank_of(m) == 2);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(to_qvec(ker[0], 3) == QVec{Q(1), Q(-2), Q(1)});
}

TEST_CASE("rref is canonical") {
  // Two generating sets of the same plane must give identical rows.
  Rref a = rref_rows({SVec{{0, Q(2)}, {1, Q(2)}}, SVec{{1, Q(3)}}}, 2);
  Rref b = rref_rows({SVec{{0, Q(1)}}, SVec{{0, Q(5)}, {1, Q(-1)}}}, 2);
  CHECK(a == b);
  CHECK(a.rank() == 2);
  // A proper subspace reduces its own rows to zero.
  Rref line = rref_rows({SVec{{0, Q(3)}, {2, Q(6)}}}, 3);
  CHECK(line.rank() == 1);
  CHECK(line.rows[0] == SVec{{0, Q(1)}, {2, Q(2)}});
  CHECK(line.reduce(SVec{{0, Q(-5)}, {2, Q(-10)}}).empty());
  CHECK(line.contains(QVec{Q(1), Q(0), Q(2)}));
  CHECK(!line.contains(QVec{Q(1), Q(0), Q(3)}));
  CHECK(line.free_cols() == (std::vector<long>{1, 2}));
}

TEST_CASE("solve and coords") {
  Mat m = from_rows({{Q(2), Q(0)}, {Q(0), Q(3)}});
  auto x = solve(m, QVec{Q(4), Q(9)});
  REQUIRE(x.has_value());
  CHECK(*x == QVec{Q(2), Q(3)});

  Mat inc = from_rows({{Q(1)}, {Q(1)}});
  CHECK(!solve(inc, QVec{Q(1), Q(2)}).has_value());

  Mat wide = from_rows({{Q(1), Q(1)}});
  auto free0 = solve(wide, QVec{Q(3)});
  REQUIRE(free0.has_value());
  CHECK(*free0 == QVec{Q(3), Q(0)});  // free variables pinned to zero

  Mat basis = Mat::from_cols(2, {QVec{Q(1), Q(0)}, QVec{Q(1), Q(1)}});
  CHECK(coords_in(basis, QVec{Q(3), Q(2)}) == QVec{Q(1), Q(2)});
  CHECK_THROWS_WITH_AS(coords_in(from_rows({{Q(1)}, {Q(0)}}), QVec{Q(0), Q(1)}),
                       doctest::Contains("NotContained"), ToolkitError);
}

TEST_CASE("inverse") {
  Mat m = from_rows({{Q(1), Q(2)}, {Q(3), Q(4)}});
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m.mul(*inv).is_identity());
  CHECK(inv->at(1, 0) == Q(3, 2));
  CHECK(!inverse(from_rows({{Q(1), Q(2)}, {Q(2), Q(4)}})).has_value());
}

TEST_CASE("quotient dimension") {
  Rref sub = rref_rows({SVec{{0, Q(1)}}}, 2);
  Rref sup = rref_rows({SVec{{0, Q(1)}}, SVec{{1, Q(1)}}}, 2);
  CHECK(quotient_dim(sub, sup) == 1);
  Rref other = rref_rows({SVec{{1, Q(1)}}}, 2);
  CHECK_THROWS_WITH_AS(quotient_dim(other, sub), doctest::Contains("NotContained"),
                       ToolkitError);
}

TEST_CASE("sparse matrix round trip and spaces") {
  SparseMat m{3, 4, {{0, 0, Q(1)}, {0, 2, Q(2)}, {1, 1, Q(1)}, {2, 0, Q(3)}, {2, 2, Q(6)}}};
  CHECK(rank_of(m) == 2);
  CHECK(col_space(m).rank() == 2);
  auto rows = m.to_rows();
  CHECK(rows[2] == SVec{{0, Q(3)}, {2, Q(6)}});
  auto cols = m.to_cols();
  CHECK(cols[2] == SVec{{0, Q(2)}, {2, Q(6)}});
  Mat d = Mat::dense(m);
  CHECK(d.at(2, 2) == 6);
  CHECK(rank_of(d) == 2);
  auto ker = kernel_basis(m);
  CHECK(ker.size() == 2);
  for (const auto& k : ker)
    for (const auto& row : rows) {
      Q dot(0);
      for (const auto& e : row) dot += Q(e.v * svec_get(k, e.idx));
      CHECK(dot == 0);
    }
}

TEST_CASE("randomized: rref canonical, rank-nullity, parallel = serial") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> val(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    long rows = 3 + static_cast<long>(rng() % 12), cols = 3 + static_cast<long>(rng() % 10);
    std::vector<SVec> rs(rows);
    for (auto& r : rs) {
      QVec v(cols, Q(0));
      for (auto& x : v) x = val(rng);
      r = to_svec(v);
    }
    Rref a = rref_rows(rs, cols, false);
    Rref b = rref_rows(rs, cols, true);
    CHECK(a == b);
    auto shuffled = rs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(rref_rows(shuffled, cols) == a);
    for (const auto& r : rs) CHECK(a.reduce(r).empty());
    SparseMat m = SparseMat::from_rows(cols, rs);
    CHECK(rank_of(m) == a.rank());
    auto ker = kernel_basis(m);
    CHECK(static_cast<long>(ker.size()) == cols - a.rank());
  }
}
