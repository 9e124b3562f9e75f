#include <doctest.h>

#include <rootleib/matrixleib.hpp>

#include "fixtures.hpp"

using namespace rootleib;

namespace {

Dialgebra k_dialgebra() { return from_associative_algebra(fixtures::algebra_K()); }

}  // namespace

TEST_CASE("gl(n,K): commutator Lie algebra on matrix units") {
  MatrixLeibnizAlgebra gl = build_gl(3, k_dialgebra());
  CHECK(gl.carrier.dim == 9);
  CHECK(is_lie(gl.carrier));
  // [E12, E23] = E13, [E12, E21] = E11 - E22, [E12, E34-slot analogue] = 0.
  long e12 = gl.gl_coord(0, 1, 0), e23 = gl.gl_coord(1, 2, 0);
  long e13 = gl.gl_coord(0, 2, 0), e21 = gl.gl_coord(1, 0, 0);
  CHECK(gl.carrier.bb(e12, e23) == SVec{{e13, Q(1)}});
  CHECK(gl.carrier.bb(e12, e21) ==
        (SVec{{gl.gl_coord(0, 0, 0), Q(1)}, {gl.gl_coord(1, 1, 0), Q(-1)}}));
  CHECK(gl.carrier.bb(e12, e13).empty());
  CHECK(gl.carrier.basis[e12] == "E12(1)");
}

TEST_CASE("gl(3,K2): dim 18 Leibniz, not Lie") {
  MatrixLeibnizAlgebra gl = build_gl(3, fixtures::k2());
  CHECK(gl.carrier.dim == 18);
  CHECK_FALSE(is_lie(gl.carrier));
  // [E12(a), E21(b)] = E11(a -| b) - E22(b |- a) with a = e1, b = e2:
  // a -| b = e1 and b |- a = e1 in the 2-space over K.
  long lhs = gl.gl_coord(0, 1, 0), rhs = gl.gl_coord(1, 0, 1);
  CHECK(gl.carrier.bb(lhs, rhs) ==
        (SVec{{gl.gl_coord(0, 0, 0), Q(1)}, {gl.gl_coord(1, 1, 0), Q(-1)}}));
}

TEST_CASE("gl rejects a non-associative dialgebra") {
  Dialgebra bad = fixtures::k2();
  bad.left[0 * 2 + 0] = SVec{{1, Q(1)}};  // corrupt e1 -| e1
  bad.bar_unit.reset();  // keep shape validation out of the way
  CHECK_THROWS_WITH_AS(build_gl(3, bad), doctest::Contains("NotAssociative"),
                       ToolkitError);
}

TEST_CASE("sl(n,D): derived subalgebra with frozen dimensions") {
  MatrixLeibnizAlgebra sl3k = build_sl(3, k_dialgebra());
  CHECK(sl3k.carrier.dim == 8);
  CHECK(is_lie(sl3k.carrier));
  CHECK(is_perfect(sl3k.carrier));

  MatrixLeibnizAlgebra sl = build_sl(3, fixtures::k2());
  CHECK(sl.carrier.dim == 16);
  CHECK(is_perfect(sl.carrier));
  CHECK_FALSE(is_lie(sl.carrier));
  MatrixLeibnizAlgebra sl4 = build_sl(4, fixtures::k2());
  CHECK(sl4.carrier.dim == 30);

  // Off-diagonal units live inside sl; a lone diagonal unit does not.
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j)
      if (i != j)
        for (long a = 0; a < 2; ++a) CHECK_NOTHROW(sl.elem_basis(i, j, a));
  CHECK_THROWS_WITH_AS(sl.elem_basis(0, 0, 0), doctest::Contains("NotContained"),
                       ToolkitError);

  // Bracket through carrier coordinates matches the gl bracket.
  MatrixLeibnizAlgebra gl = build_gl(3, fixtures::k2());
  QVec x = sl.elem_basis(0, 1, 0), y = sl.elem_basis(1, 0, 1);
  SVec br_sl;
  {
    QVec b = sl.carrier.bracket(x, y);
    for (long t = 0; t < sl.carrier.dim; ++t)
      if (b[t] != 0) br_sl.push_back({t, b[t]});
  }
  SVec in_gl = sl.gl_of_carrier(br_sl);
  CHECK(svec_eq(in_gl, gl.carrier.bb(gl.gl_coord(0, 1, 0), gl.gl_coord(1, 0, 1))));
}

TEST_CASE("sl needs a bar-unit for its generator set") {
  // A differential dialgebra with no bar-unit.
  Algebra A;
  A.dim = 3;
  A.basis = {"1", "a", "b"};
  A.mult.assign(9, SVec{});
  for (long i = 0; i < 3; ++i) {
    A.mult[0 * 3 + i] = SVec{{i, Q(1)}};
    if (i != 0) A.mult[i * 3 + 0] = SVec{{i, Q(1)}};
  }
  A.unit = QVec{Q(1), Q(0), Q(0)};
  Mat d(3, 3);
  d.at(1, 2) = 1;  // d(b) = a, d(1) = d(a) = 0
  Dialgebra diff = from_differential_algebra(A, d);
  REQUIRE_FALSE(diff.bar_unit.has_value());
  CHECK_THROWS_WITH_AS(build_sl(3, diff), doctest::Contains("MissingBarUnit"),
                       ToolkitError);
}

TEST_CASE("HL2 regression values for sl over K2") {
  Homology h3 = homology(build_sl(3, fixtures::k2()).carrier, 2);
  CHECK(h3.dim == 0);
  CHECK(h3.rank_dn == 16);
  CHECK(h3.rank_dn1 == 240);
  Homology hk = homology(build_sl(3, k_dialgebra()).carrier, 2);
  CHECK(hk.dim == 0);
}

TEST_CASE("Steinberg model over K and K2") {
  SteinbergModel st = build_steinberg_model(3, k_dialgebra());
  CHECK(st.dim() == 8);
  CHECK(st.kernel_dim() == 0);

  SteinbergModel s2 = build_steinberg_model(3, fixtures::k2());
  CHECK(s2.dim() == 16);
  CHECK(s2.kernel_dim() == 0);
  CHECK(is_perfect(s2.ext.total));

  // psi sends the lift back to the matrix unit (also certified at build).
  QVec v = s2.v_basis(0, 2, 1);
  CHECK(s2.psi(v) == s2.base.elem_basis(0, 2, 1));

  // Same-slot lifts bracket to zero.
  QVec w = s2.ext.total.bracket(s2.v_basis(0, 1, 0), s2.v_basis(0, 1, 1));
  CHECK(w == QVec(s2.dim(), Q(0)));

  // H elements project to gl-diagonal vectors.
  QVec h = s2.ext.total.bracket(s2.v_basis(0, 1, 0), s2.v_basis(1, 0, 1));
  QVec p = s2.psi(h);
  SVec sp;
  for (long t = 0; t < s2.base.carrier.dim; ++t)
    if (p[t] != 0) sp.push_back({t, p[t]});
  for (const auto& e : s2.base.gl_of_carrier(sp)) {
    long ij = e.idx / 2;
    CHECK(ij / 3 == ij % 3);
  }

  SteinbergModel s4 = build_steinberg_model(4, fixtures::k2());
  CHECK(s4.dim() == 30);
  CHECK(s4.kernel_dim() == 0);

  CHECK_THROWS_WITH_AS(build_steinberg_model(2, k_dialgebra()),
                       doctest::Contains("MalformedInput"), ToolkitError);
}

TEST_CASE("tensor algebra over commutative dialgebras") {
  ChevalleyAlgebra a2 = build_chevalley(build_root_system(SLType::A, 2));

  // R = K reproduces the Lie algebra itself.
  LeibnizAlgebra same = build_tensor_algebra(a2, k_dialgebra());
  REQUIRE(same.dim == a2.alg.dim);
  for (long i = 0; i < same.dim; ++i)
    for (long j = 0; j < same.dim; ++j)
      CHECK(svec_eq(same.bb(i, j), a2.alg.bb(i, j)));

  // Dual numbers: dim doubles; spot-check [e(a1)(x)x, e(-a1)(x)1] = coroot(x)x.
  Dialgebra dual = from_associative_algebra(fixtures::dual_numbers());
  LeibnizAlgebra t = build_tensor_algebra(a2, dual);
  CHECK(t.dim == 16);
  long a1 = a2.rs.id_by_name("a1");
  long lhs = a2.e_index(a1) * 2 + 1, rhs = a2.e_index(a2.rs.neg(a1)) * 2 + 0;
  CHECK(t.bb(lhs, rhs) == SVec{{a2.h_index(0) * 2 + 1, Q(1)}});
  CHECK(t.basis[lhs] == "e(a1)(x)x");

  // D4 tensor dual numbers: the dimension-56 algebra.
  ChevalleyAlgebra d4 = build_chevalley(build_root_system(SLType::D, 4));
  LeibnizAlgebra big = build_tensor_algebra(d4, dual);
  CHECK(big.dim == 56);
  CHECK(check_leibniz(big).pass());

  // Rejections: non-commutative coordinates, missing bar-unit.
  CHECK_THROWS_WITH_AS(build_tensor_algebra(a2, fixtures::k2()),
                       doctest::Contains("NotCommutative"), ToolkitError);
  Dialgebra no_unit = dual;
  no_unit.bar_unit.reset();
  CHECK_THROWS_WITH_AS(build_tensor_algebra(a2, no_unit),
                       doctest::Contains("MissingBarUnit"), ToolkitError);
}
