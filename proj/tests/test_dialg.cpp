#include <doctest.h>

#include "fixtures.hpp"
#include "rootleib/dialg.hpp"

using namespace rootleib;

TEST_CASE("coordinate 2-space over K") {
  Dialgebra d = fixtures::k2();
  CHECK(d.dim == 2);
  CHECK(check_associative(d).pass());
  CHECK(check_alternative(d).pass());

  // (1,0) -| (0,1) = (1,0) and (1,0) |- (0,1) = (0,1).
  QVec e1{Q(1), Q(0)}, e2{Q(0), Q(1)};
  CHECK(d.left_mul(e1, e2) == e1);
  CHECK(d.right_mul(e1, e2) == e2);
  // Bilinearity: 0 -| y = 0.
  CHECK(d.left_mul(QVec{Q(0), Q(0)}, e2) == QVec{Q(0), Q(0)});
  // Designated bar-unit is (1,0); bar-side laws were validated on build.
  REQUIRE(d.bar_unit.has_value());
  CHECK(*d.bar_unit == e1);
  // Bar-units are not unique: exactly the vectors with coordinate sum 1.
  Dialgebra d2 = d;
  d2.bar_unit = QVec{Q(1, 2), Q(1, 2)};
  Dialgebra d3 = d;
  d3.bar_unit = QVec{Q(1), Q(2)};
  CHECK_NOTHROW(d2.validate());
  CHECK_THROWS_WITH_AS(d3.validate(), doctest::Contains("BarUnitLawFailure"), ToolkitError);

  AxiomReport comm = is_commutative(d);
  CHECK(!comm.pass());
  REQUIRE(comm.laws[0].witness.has_value());
  // Lexicographically first witness: e1 -| e2 = e1 vs e2 -| e1 = e2.
  CHECK(comm.laws[0].witness->idx == Triple{0, 1, -1});
  CHECK(comm.laws[0].witness->lhs == "1[1]");
  CHECK(comm.laws[0].witness->rhs == "1[2]");
}

TEST_CASE("n-space for n = 1 is the base algebra") {
  Dialgebra d = from_nspace(fixtures::algebra_K(), 1);
  CHECK(d.dim == 1);
  CHECK(d.left[0] == SVec{{0, Q(1)}});
  CHECK(d.right[0] == SVec{{0, Q(1)}});
  CHECK(check_associative(d).pass());
}

TEST_CASE("n-space over K for n = 3") {
  Dialgebra d = from_nspace(fixtures::algebra_K(), 3);
  CHECK(d.dim == 3);
  CHECK(check_associative(d).pass());
  CHECK(check_alternative(d).pass());
}

TEST_CASE("associative algebras embed with equal products") {
  Dialgebra d = from_associative_algebra(fixtures::dual_numbers());
  CHECK(d.left == d.right);
  CHECK(check_associative(d).pass());
  CHECK(is_commutative(d).pass());
  REQUIRE(d.bar_unit.has_value());

  Dialgebra m = from_associative_algebra(fixtures::mat2());
  CHECK(check_associative(m).pass());
  CHECK(!is_commutative(m).pass());

  // A genuinely nonassociative table is rejected.
  Algebra bad;
  bad.dim = 2;
  bad.basis = {"u", "v"};
  bad.mult.assign(4, SVec{});
  bad.mult[0] = {{1, Q(1)}};      // u*u = v
  bad.mult[0 * 2 + 1] = {{0, Q(1)}};  // u*v = u
  bad.unit = {Q(1), Q(0)};
  CHECK_THROWS_WITH_AS(from_associative_algebra(bad), doctest::Contains("NotAssociative"),
                       ToolkitError);
}

TEST_CASE("differential dialgebra") {
  // A = K1 + span{a,b}, products among {a,b} all zero, d(b) = a.
  Algebra A;
  A.dim = 3;
  A.basis = {"1", "a", "b"};
  A.mult.assign(9, SVec{});
  for (long i = 0; i < 3; ++i) {
    A.mult[0 * 3 + i] = {{i, Q(1)}};
    A.mult[i * 3 + 0] = {{i, Q(1)}};
  }
  A.unit = {Q(1), Q(0), Q(0)};
  Mat d(3, 3);
  d.at(1, 2) = 1;  // d(b) = a
  Dialgebra D = from_differential_algebra(A, d);
  // 1 -| b = 1*d(b) = a;  b |- 1 = d(b)*1 = a;  b -| 1 = b*d(1) = 0.
  QVec one{Q(1), Q(0), Q(0)}, b{Q(0), Q(0), Q(1)}, a{Q(0), Q(1), Q(0)}, zero(3, Q(0));
  CHECK(D.left_mul(one, b) == a);
  CHECK(D.right_mul(b, one) == a);
  CHECK(D.left_mul(b, one) == zero);
  CHECK(!D.bar_unit.has_value());
  CHECK(check_associative(D).pass());

  // d with d^2 != 0 is rejected.
  Mat dbad(3, 3);
  dbad.at(1, 1) = 1;  // d(a) = a
  CHECK_THROWS_WITH_AS(from_differential_algebra(A, dbad),
                       doctest::Contains("NotADifferential"), ToolkitError);
  // d violating the product rule is rejected.
  Mat dleib(3, 3);
  dleib.at(1, 0) = 1;  // d(1) = a breaks d(1*1) = d(1)*1 + 1*d(1)
  CHECK_THROWS_WITH_AS(from_differential_algebra(A, dleib),
                       doctest::Contains("NotADifferential"), ToolkitError);

  // Zero differential: both products vanish.
  Dialgebra Z = from_differential_algebra(A, Mat(3, 3));
  for (const auto& v : Z.left) CHECK(v.empty());
  for (const auto& v : Z.right) CHECK(v.empty());
}

TEST_CASE("tensor product of dialgebras") {
  Dialgebra k2 = fixtures::k2();
  Dialgebra t = tensor(k2, k2);
  CHECK(t.dim == 4);
  CHECK(check_associative(t).pass());
  REQUIRE(t.bar_unit.has_value());
  CHECK(*t.bar_unit == QVec{Q(1), Q(0), Q(0), Q(0)});

  // d (x) K has the same tables as d under the index identification.
  Dialgebra k = from_nspace(fixtures::algebra_K(), 1);
  Dialgebra tk = tensor(k2, k);
  CHECK(tk.dim == k2.dim);
  CHECK(tk.left == k2.left);
  CHECK(tk.right == k2.right);
}

TEST_CASE("corrupted table fails with the first counterexample") {
  Dialgebra d = fixtures::k2();
  d.bar_unit.reset();           // the corrupted table no longer admits one
  d.left[0] = {{1, Q(1)}};      // e1 -| e1 := e2
  AxiomReport rep = check_associative(d);
  CHECK(!rep.pass());
  const LawResult* f = rep.first_failure();
  REQUIRE(f != nullptr);
  REQUIRE(f->witness.has_value());
  CHECK(f->witness->idx == Triple{0, 0, 0});
}

TEST_CASE("every associative dialgebra is alternative") {
  for (const Dialgebra& d :
       {fixtures::k2(), from_associative_algebra(fixtures::dual_numbers()),
        from_associative_algebra(fixtures::mat2())}) {
    CHECK(check_associative(d).pass());
    AxiomReport alt = check_alternative(d);
    CHECK(alt.pass());
    CHECK(alt.laws.size() == 9);  // five laws + four consequences
  }
}
