#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootleib/base.hpp"
#include "rootleib/linalg.hpp"
#include "rootleib/report.hpp"

namespace rootleib {

// A finite-dimensional unital associative algebra given by structure
// constants: mult[i*dim+j] is the product basis[i]*basis[j] in coordinates.
struct Algebra {
  long dim = 0;
  std::vector<std::string> basis;
  std::vector<SVec> mult;
  QVec unit;  // coordinates of 1

  const SVec& bb(long i, long j) const { return mult[i * dim + j]; }
  QVec mul(const QVec& x, const QVec& y) const;
  void validate() const;
};

AxiomReport check_algebra(const Algebra& A);  // associativity + unit laws

// A dialgebra: two products (written -| and |- in law names) on one space,
// plus an optional bar-unit e with e |- a = a = a -| e.
struct Dialgebra {
  long dim = 0;
  std::vector<std::string> basis;
  std::vector<SVec> left;   // left[i*dim+j]  = basis[i] -| basis[j]
  std::vector<SVec> right;  // right[i*dim+j] = basis[i] |- basis[j]
  std::optional<QVec> bar_unit;

  const SVec& left_bb(long i, long j) const { return left[i * dim + j]; }
  const SVec& right_bb(long i, long j) const { return right[i * dim + j]; }
  QVec left_mul(const QVec& x, const QVec& y) const;
  QVec right_mul(const QVec& x, const QVec& y) const;
  void validate() const;  // shapes + bar-unit laws when present
};

// The five defining identities of an associative dialgebra.
AxiomReport check_associative(const Dialgebra& D);

// The five defining identities of an alternative dialgebra plus the four
// derived consequences used downstream.
AxiomReport check_alternative(const Dialgebra& D);

// Commutativity in the two-product sense: x -| y = y -| x and x -| y = y |- x.
AxiomReport is_commutative(const Dialgebra& D);

// Constructions.
Dialgebra from_associative_algebra(const Algebra& A);
// d is a square matrix acting on A; requires d∘d = 0 and the product rule
// d(xy) = d(x)y + x d(y).  Products: x -| y = x·d(y), x |- y = d(x)·y.
// A bar-unit is any e with d(e) a two-sided unit for A; found by solving.
Dialgebra from_differential_algebra(const Algebra& A, const Mat& d);
// Componentwise tensor product of two associative dialgebras.
Dialgebra tensor(const Dialgebra& a, const Dialgebra& b);
// Coordinate n-space over A: (x -| y)_i = x_i (Σ_j y_j), (x |- y)_i = (Σ_j x_j) y_i.
Dialgebra from_nspace(const Algebra& A, long n);

}  // namespace rootleib
