#pragma once

// Exact rational linear algebra: sparse vectors, dense matrices, canonical
// reduced row echelon form, rank / kernel / image / solve.  Everything is
// deterministic; subspaces compare equal iff their RREF rows are identical.

#include <map>
#include <optional>
#include <vector>

#include "rootleib/base.hpp"

namespace rootleib {

struct SEnt {
  long idx;
  Q v;
  bool operator==(const SEnt& o) const { return idx == o.idx && v == o.v; }
};
// Sparse vector: entries sorted by idx, no zero values.
using SVec = std::vector<SEnt>;

SVec to_svec(const QVec& v);
QVec to_qvec(const SVec& v, long n);
SVec svec_scaled(const SVec& v, const Q& c);
SVec svec_sum(const SVec& a, const SVec& b);           // a + b
SVec svec_axpy(const SVec& a, const Q& c, const SVec& b);  // a + c*b
bool svec_eq(const SVec& a, const SVec& b);
Q svec_get(const SVec& v, long idx);
// "2*x + -1/2*y" against basis names; "0" when empty.
std::string svec_str(const SVec& v, const std::vector<std::string>& names);

struct Trip {
  long r, c;
  Q v;
};

// Coordinate-format sparse matrix; (r,c) pairs unique once assembled.
struct SparseMat {
  long rows = 0, cols = 0;
  std::vector<Trip> t;
  std::vector<SVec> to_rows() const;
  std::vector<SVec> to_cols() const;
  static SparseMat from_cols(long rows, const std::vector<SVec>& cols);
  static SparseMat from_rows(long cols, const std::vector<SVec>& rows);
};

// Dense row-major matrix for small operators (adjoints, charts, projections).
struct Mat {
  long rows = 0, cols = 0;
  QVec a;
  Mat() = default;
  Mat(long r, long c) : rows(r), cols(c), a(r * c, Q(0)) {}
  static Mat identity(long n);
  Q& at(long r, long c) { return a[r * cols + c]; }
  const Q& at(long r, long c) const { return a[r * cols + c]; }
  QVec apply(const QVec& v) const;  // M·v
  Mat mul(const Mat& o) const;
  Mat plus(const Mat& o) const;
  Mat scaled(const Q& c) const;
  QVec col(long j) const;
  void set_col(long j, const QVec& v);
  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  SparseMat sparse() const;
  static Mat from_cols(long rows, const std::vector<QVec>& cols);
  static Mat dense(const SparseMat& m);
};

// Canonical reduced row echelon set of rows; doubles as a subspace of K^ncols.
struct Rref {
  long ncols = 0;
  std::vector<long> pivots;            // strictly increasing
  std::vector<SVec> rows;              // rows[k]: 1 at pivots[k], 0 at other pivots
  std::vector<long> pivot_row_of_col;  // ncols entries; -1 if col is free

  long rank() const { return static_cast<long>(rows.size()); }
  SVec reduce(const SVec& v) const;  // canonical residual mod row span
  bool contains(const SVec& v) const;
  bool contains(const QVec& v) const;
  std::vector<long> free_cols() const;
  bool operator==(const Rref& o) const;
};

// Engine: echelonizes the given rows.  Duplicate rows are merged up to scale,
// independent column blocks are detected (union-find) and eliminated
// separately, and blocks may run in parallel; the result is canonical.
Rref rref_rows(std::vector<SVec> rows, long ncols, bool parallel = true);

Rref rref_of_rows_of(const SparseMat& m);  // row space
Rref col_space(const SparseMat& m);        // column space (image)

long rank_of(const SparseMat& m);
long rank_of(const Mat& m);

// Basis of {v : M v = 0}; debug mode asserts rank + nullity = cols.
std::vector<SVec> kernel_basis(const SparseMat& m);
std::vector<SVec> kernel_basis(const Mat& m);

Rref span_of(const std::vector<QVec>& vectors, long ambient);
Rref span_of_svecs(const std::vector<SVec>& vectors, long ambient);

// dim(sup) - dim(sub); requires sub ⊆ sup (error NotContained otherwise).
long quotient_dim(const Rref& sub, const Rref& sup);

// Solve A x = b; nullopt when inconsistent.  Free variables are set to 0.
std::optional<QVec> solve(const Mat& A, const QVec& b);

// Coordinates of v in the given (independent) columns; error NotContained
// if v is outside their span.
QVec coords_in(const Mat& basis_cols, const QVec& v);

std::optional<Mat> inverse(const Mat& A);

}  // namespace rootleib
