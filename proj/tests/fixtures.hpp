#pragma once

// Shared hand-built fixtures for the test suite.

#include "rootleib/dialg.hpp"
#include "rootleib/leibniz.hpp"

namespace fixtures {

using namespace rootleib;

// The ground field as a 1-dim unital algebra.
inline Algebra algebra_K() {
  Algebra A;
  A.dim = 1;
  A.basis = {"1"};
  A.mult = {SVec{{0, Q(1)}}};
  A.unit = {Q(1)};
  return A;
}

// K[x]/(x^2): basis {1, x}, x*x = 0.
inline Algebra dual_numbers() {
  Algebra A;
  A.dim = 2;
  A.basis = {"1", "x"};
  A.mult.assign(4, SVec{});
  A.mult[0 * 2 + 0] = {{0, Q(1)}};
  A.mult[0 * 2 + 1] = {{1, Q(1)}};
  A.mult[1 * 2 + 0] = {{1, Q(1)}};
  A.unit = {Q(1), Q(0)};
  return A;
}

// 2x2 matrix algebra on the unit basis E11, E12, E21, E22.
inline Algebra mat2() {
  Algebra A;
  A.dim = 4;
  A.basis = {"E11", "E12", "E21", "E22"};
  A.mult.assign(16, SVec{});
  auto id = [](long i, long j) { return i * 2 + j; };
  for (long i = 0; i < 2; ++i)
    for (long j = 0; j < 2; ++j)
      for (long k = 0; k < 2; ++k)
        for (long l = 0; l < 2; ++l)
          if (j == k) A.mult[id(i, j) * 4 + id(k, l)] = {{id(i, l), Q(1)}};
  A.unit = {Q(1), Q(0), Q(0), Q(1)};
  return A;
}

// Coordinate 2-space over K (left product keeps the slot of x, right of y).
inline Dialgebra k2() { return from_nspace(algebra_K(), 2); }

// sl2 with basis {e, f, h}: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline LeibnizAlgebra sl2() {
  long E = 0, F = 1, H = 2;
  std::vector<SVec> t(9);
  t[E * 3 + F] = {{H, Q(1)}};
  t[F * 3 + E] = {{H, Q(-1)}};
  t[H * 3 + E] = {{E, Q(2)}};
  t[E * 3 + H] = {{E, Q(-2)}};
  t[H * 3 + F] = {{F, Q(-2)}};
  t[F * 3 + H] = {{F, Q(2)}};
  return make_leibniz(3, {"e", "f", "h"}, t);
}

// Smallest non-Lie Leibniz algebra: [y,y] = x, all other brackets zero.
inline LeibnizAlgebra nonlie2() {
  std::vector<SVec> t(4);
  t[1 * 2 + 1] = {{0, Q(1)}};
  return make_leibniz(2, {"x", "y"}, t);
}

}  // namespace fixtures
