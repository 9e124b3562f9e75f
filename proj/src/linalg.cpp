#include "rootleib/linalg.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rootleib {

SVec to_svec(const QVec& v) {
  SVec out;
  for (long i = 0; i < static_cast<long>(v.size()); ++i)
    if (v[i] != 0) out.push_back({i, v[i]});
  return out;
}

QVec to_qvec(const SVec& v, long n) {
  QVec out(n, Q(0));
  for (const auto& e : v) {
    invariant(e.idx >= 0 && e.idx < n, "sparse index out of range");
    out[e.idx] = e.v;
  }
  return out;
}

SVec svec_scaled(const SVec& v, const Q& c) {
  if (c == 0) return {};
  SVec out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back({e.idx, Q(e.v * c)});
  return out;
}

SVec svec_axpy(const SVec& a, const Q& c, const SVec& b) {
  if (c == 0) return a;
  SVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].idx < b[j].idx)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].idx < a[i].idx) {
      out.push_back({b[j].idx, Q(c * b[j].v)});
      ++j;
    } else {
      Q s(a[i].v + c * b[j].v);
      if (s != 0) out.push_back({a[i].idx, s});
      ++i;
      ++j;
    }
  }
  return out;
}

SVec svec_sum(const SVec& a, const SVec& b) { return svec_axpy(a, Q(1), b); }

bool svec_eq(const SVec& a, const SVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].idx != b[i].idx || a[i].v != b[i].v) return false;
  return true;
}

Q svec_get(const SVec& v, long idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const SEnt& e, long i) { return e.idx < i; });
  if (it != v.end() && it->idx == idx) return it->v;
  return Q(0);
}

std::string svec_str(const SVec& v, const std::vector<std::string>& names) {
  if (v.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& e : v) {
    std::string nm = e.idx < static_cast<long>(names.size())
                         ? names[e.idx]
                         : "#" + std::to_string(e.idx);
    if (e.v == 1)
      parts.push_back(nm);
    else if (e.v == -1)
      parts.push_back("-" + nm);
    else
      parts.push_back(q_str(e.v) + "*" + nm);
  }
  return join(parts, " + ");
}

std::vector<SVec> SparseMat::to_rows() const {
  std::vector<std::vector<Trip>> buckets(rows);
  for (const auto& e : t) {
    invariant(e.r >= 0 && e.r < rows && e.c >= 0 && e.c < cols, "triplet out of range");
    buckets[e.r].push_back(e);
  }
  std::vector<SVec> out(rows);
  for (long r = 0; r < rows; ++r) {
    auto& b = buckets[r];
    std::sort(b.begin(), b.end(), [](const Trip& x, const Trip& y) { return x.c < y.c; });
    for (auto& e : b) {
      invariant(out[r].empty() || out[r].back().idx != e.c, "duplicate triplet");
      if (e.v != 0) out[r].push_back({e.c, e.v});
    }
  }
  return out;
}

std::vector<SVec> SparseMat::to_cols() const {
  std::vector<std::vector<Trip>> buckets(cols);
  for (const auto& e : t) {
    invariant(e.r >= 0 && e.r < rows && e.c >= 0 && e.c < cols, "triplet out of range");
    buckets[e.c].push_back(e);
  }
  std::vector<SVec> out(cols);
  for (long c = 0; c < cols; ++c) {
    auto& b = buckets[c];
    std::sort(b.begin(), b.end(), [](const Trip& x, const Trip& y) { return x.r < y.r; });
    for (auto& e : b) {
      invariant(out[c].empty() || out[c].back().idx != e.r, "duplicate triplet");
      if (e.v != 0) out[c].push_back({e.r, e.v});
    }
  }
  return out;
}

SparseMat SparseMat::from_cols(long rows, const std::vector<SVec>& cols) {
  SparseMat m;
  m.rows = rows;
  m.cols = static_cast<long>(cols.size());
  for (long c = 0; c < m.cols; ++c)
    for (const auto& e : cols[c]) m.t.push_back({e.idx, c, e.v});
  return m;
}

SparseMat SparseMat::from_rows(long cols, const std::vector<SVec>& rows) {
  SparseMat m;
  m.rows = static_cast<long>(rows.size());
  m.cols = cols;
  for (long r = 0; r < m.rows; ++r)
    for (const auto& e : rows[r]) m.t.push_back({r, e.idx, e.v});
  return m;
}

Mat Mat::identity(long n) {
  Mat m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QVec Mat::apply(const QVec& v) const {
  check(static_cast<long>(v.size()) == cols, "DimensionMismatch", "Mat::apply");
  QVec out(rows, Q(0));
  for (long r = 0; r < rows; ++r) {
    Q s(0);
    for (long c = 0; c < cols; ++c)
      if (a[r * cols + c] != 0 && v[c] != 0) s += a[r * cols + c] * v[c];
    out[r] = s;
  }
  return out;
}

Mat Mat::mul(const Mat& o) const {
  check(cols == o.rows, "DimensionMismatch", "Mat::mul");
  Mat out(rows, o.cols);
  for (long r = 0; r < rows; ++r)
    for (long k = 0; k < cols; ++k) {
      const Q& x = a[r * cols + k];
      if (x == 0) continue;
      for (long c = 0; c < o.cols; ++c)
        if (o.a[k * o.cols + c] != 0) out.at(r, c) += x * o.a[k * o.cols + c];
    }
  return out;
}

Mat Mat::plus(const Mat& o) const {
  check(rows == o.rows && cols == o.cols, "DimensionMismatch", "Mat::plus");
  Mat out = *this;
  for (std::size_t i = 0; i < a.size(); ++i) out.a[i] += o.a[i];
  return out;
}

Mat Mat::scaled(const Q& c) const {
  Mat out = *this;
  for (auto& x : out.a) x *= c;
  return out;
}

QVec Mat::col(long j) const {
  QVec out(rows);
  for (long r = 0; r < rows; ++r) out[r] = at(r, j);
  return out;
}

void Mat::set_col(long j, const QVec& v) {
  check(static_cast<long>(v.size()) == rows, "DimensionMismatch", "Mat::set_col");
  for (long r = 0; r < rows; ++r) at(r, j) = v[r];
}

bool Mat::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows != cols) return false;
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c)
      if (at(r, c) != ((r == c) ? 1 : 0)) return false;
  return true;
}

SparseMat Mat::sparse() const {
  SparseMat m;
  m.rows = rows;
  m.cols = cols;
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c)
      if (at(r, c) != 0) m.t.push_back({r, c, at(r, c)});
  return m;
}

Mat Mat::from_cols(long rows, const std::vector<QVec>& cols) {
  Mat m(rows, static_cast<long>(cols.size()));
  for (long j = 0; j < m.cols; ++j) m.set_col(j, cols[j]);
  return m;
}

Mat Mat::dense(const SparseMat& s) {
  Mat m(s.rows, s.cols);
  for (const auto& e : s.t) m.at(e.r, e.c) += e.v;
  return m;
}

namespace {

// Dense accumulator for sparse row arithmetic.
class Scratch {
 public:
  explicit Scratch(long n) : vals_(n), used_(n, 0) {}

  void load(const SVec& v) {
    for (const auto& e : v) {
      if (!used_[e.idx]) {
        used_[e.idx] = 1;
        touched_.push_back(e.idx);
        vals_[e.idx] = e.v;
      } else {
        vals_[e.idx] += e.v;
      }
    }
  }

  void axpy(const Q& c, const SVec& v) {
    for (const auto& e : v) {
      if (!used_[e.idx]) {
        used_[e.idx] = 1;
        touched_.push_back(e.idx);
        vals_[e.idx] = Q(c * e.v);
      } else {
        vals_[e.idx] += c * e.v;
      }
    }
  }

  bool nonzero_at(long i) const { return used_[i] && vals_[i] != 0; }
  const Q& at(long i) const { return vals_[i]; }

  // Smallest touched index with a nonzero value; -1 when empty.
  long lead() const {
    long best = -1;
    for (long i : touched_)
      if (vals_[i] != 0 && (best == -1 || i < best)) best = i;
    return best;
  }

  SVec take() {
    std::sort(touched_.begin(), touched_.end());
    SVec out;
    for (long i : touched_) {
      if (vals_[i] != 0) out.push_back({i, vals_[i]});
      used_[i] = 0;
      vals_[i] = 0;
    }
    touched_.clear();
    return out;
  }

  void clear() {
    for (long i : touched_) {
      used_[i] = 0;
      vals_[i] = 0;
    }
    touched_.clear();
  }

 private:
  QVec vals_;
  std::vector<char> used_;
  std::vector<long> touched_;
};

// Incremental row echelon (lead-1 rows, not mutually reduced).
class RowEchelon {
 public:
  explicit RowEchelon(long ncols) : ncols_(ncols), scratch_(ncols) {}

  bool add(const SVec& v) {
    scratch_.load(v);
    for (;;) {
      long lead = scratch_.lead();
      if (lead == -1) return false;
      auto it = by_pivot_.find(lead);
      if (it == by_pivot_.end()) {
        Q inv(1 / scratch_.at(lead));
        SVec row = scratch_.take();
        if (inv != 1)
          for (auto& e : row) e.v *= inv;
        by_pivot_.emplace(lead, std::move(row));
        return true;
      }
      scratch_.axpy(Q(-scratch_.at(lead)), it->second);
    }
  }

  // Back-substitute into canonical RREF.
  Rref finalize() {
    Rref out;
    out.ncols = ncols_;
    for (const auto& [p, row] : by_pivot_) out.pivots.push_back(p);
    // Process pivots from the largest down; reduce each row against the
    // already-finalized rows below it.
    std::map<long, SVec> reduced;
    for (auto it = by_pivot_.rbegin(); it != by_pivot_.rend(); ++it) {
      scratch_.load(it->second);
      for (auto jt = reduced.begin(); jt != reduced.end(); ++jt)
        if (scratch_.nonzero_at(jt->first)) scratch_.axpy(Q(-scratch_.at(jt->first)), jt->second);
      reduced.emplace(it->first, scratch_.take());
    }
    for (long p : out.pivots) out.rows.push_back(std::move(reduced[p]));
    out.pivot_row_of_col.assign(ncols_, -1);
    for (std::size_t k = 0; k < out.pivots.size(); ++k)
      out.pivot_row_of_col[out.pivots[k]] = static_cast<long>(k);
    return out;
  }

 private:
  long ncols_;
  Scratch scratch_;
  std::map<long, SVec> by_pivot_;
};

struct ColUnionFind {
  std::vector<long> parent;
  explicit ColUnionFind(long n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  long find(long x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(long a, long b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

SVec Rref::reduce(const SVec& v) const {
  Scratch s(ncols);
  s.load(v);
  // RREF rows only touch their own pivot plus free columns, so one sweep
  // over the pivot list is a full reduction.
  for (std::size_t k = 0; k < pivots.size(); ++k)
    if (s.nonzero_at(pivots[k])) s.axpy(Q(-s.at(pivots[k])), rows[k]);
  return s.take();
}

bool Rref::contains(const SVec& v) const { return reduce(v).empty(); }
bool Rref::contains(const QVec& v) const { return contains(to_svec(v)); }

std::vector<long> Rref::free_cols() const {
  std::vector<long> out;
  for (long c = 0; c < ncols; ++c)
    if (pivot_row_of_col[c] == -1) out.push_back(c);
  return out;
}

bool Rref::operator==(const Rref& o) const {
  if (ncols != o.ncols || pivots != o.pivots) return false;
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (!svec_eq(rows[k], o.rows[k])) return false;
  return true;
}

Rref rref_rows(std::vector<SVec> rows, long ncols, bool parallel) {
  // Drop zero rows, normalize leading coefficient to 1, then dedupe.
  std::vector<SVec> work;
  work.reserve(rows.size());
  for (auto& r : rows) {
    if (r.empty()) continue;
    if (r.front().v != 1) {
      Q inv(1 / r.front().v);
      for (auto& e : r) e.v *= inv;
    }
    work.push_back(std::move(r));
  }
  std::sort(work.begin(), work.end(), [](const SVec& a, const SVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].idx != b[i].idx) return a[i].idx < b[i].idx;
      int c = cmp(a[i].v, b[i].v);
      if (c != 0) return c < 0;
    }
    return false;
  });
  work.erase(std::unique(work.begin(), work.end(), svec_eq), work.end());

  // Group rows by connected column blocks; blocks eliminate independently.
  ColUnionFind uf(ncols);
  for (const auto& r : work)
    for (std::size_t i = 1; i < r.size(); ++i) uf.unite(r[0].idx, r[i].idx);
  std::map<long, std::vector<const SVec*>> groups;
  for (const auto& r : work) groups[uf.find(r[0].idx)].push_back(&r);

  std::vector<std::vector<const SVec*>> blocks;
  blocks.reserve(groups.size());
  for (auto& [root, g] : groups) blocks.push_back(std::move(g));

  std::vector<Rref> partial(blocks.size());
  auto run_block = [&](std::size_t b) {
    RowEchelon ech(ncols);
    for (const SVec* r : blocks[b]) ech.add(*r);
    partial[b] = ech.finalize();
  };
#ifdef _OPENMP
  if (parallel && blocks.size() > 1) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t b = 0; b < blocks.size(); ++b) run_block(b);
  } else
#endif
  {
    (void)parallel;
    for (std::size_t b = 0; b < blocks.size(); ++b) run_block(b);
  }

  // Merge: pivot sets are disjoint, rows touch only their own block's
  // columns, so concatenation sorted by pivot is already canonical.
  std::vector<std::pair<long, SVec>> merged;
  for (auto& p : partial)
    for (std::size_t k = 0; k < p.rows.size(); ++k)
      merged.emplace_back(p.pivots[k], std::move(p.rows[k]));
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  Rref out;
  out.ncols = ncols;
  out.pivot_row_of_col.assign(ncols, -1);
  for (auto& [p, row] : merged) {
    out.pivot_row_of_col[p] = static_cast<long>(out.rows.size());
    out.pivots.push_back(p);
    out.rows.push_back(std::move(row));
  }
  return out;
}

Rref rref_of_rows_of(const SparseMat& m) { return rref_rows(m.to_rows(), m.cols); }
Rref col_space(const SparseMat& m) { return rref_rows(m.to_cols(), m.rows); }

long rank_of(const SparseMat& m) { return rref_of_rows_of(m).rank(); }
long rank_of(const Mat& m) { return rank_of(m.sparse()); }

std::vector<SVec> kernel_basis(const SparseMat& m) {
  Rref r = rref_of_rows_of(m);
  // One generator per free column f: 1 at f, -row[f] at each pivot column.
  std::vector<long> free = r.free_cols();
  std::map<long, long> gen_of_col;
  for (std::size_t i = 0; i < free.size(); ++i) gen_of_col[free[i]] = static_cast<long>(i);
  std::vector<SVec> gens(free.size());
  for (std::size_t i = 0; i < free.size(); ++i) gens[i].push_back({free[i], Q(1)});
  for (std::size_t k = 0; k < r.rows.size(); ++k)
    for (const auto& e : r.rows[k])
      if (e.idx != r.pivots[k]) gens[gen_of_col[e.idx]].push_back({r.pivots[k], Q(-e.v)});
  for (auto& g : gens)
    std::sort(g.begin(), g.end(), [](const SEnt& a, const SEnt& b) { return a.idx < b.idx; });
#ifndef NDEBUG
  invariant(r.rank() + static_cast<long>(gens.size()) == m.cols,
            "rank-nullity violated");
  for (const auto& g : gens)
    for (const auto& row : m.to_rows()) {
      Q dot(0);
      for (const auto& e : g) dot += e.v * svec_get(row, e.idx);
      invariant(dot == 0, "kernel generator fails M v = 0");
    }
#endif
  return gens;
}

std::vector<SVec> kernel_basis(const Mat& m) { return kernel_basis(m.sparse()); }

Rref span_of(const std::vector<QVec>& vectors, long ambient) {
  std::vector<SVec> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    check(static_cast<long>(v.size()) == ambient, "DimensionMismatch", "span_of");
    rows.push_back(to_svec(v));
  }
  return rref_rows(std::move(rows), ambient);
}

Rref span_of_svecs(const std::vector<SVec>& vectors, long ambient) {
  return rref_rows(vectors, ambient);
}

long quotient_dim(const Rref& sub, const Rref& sup) {
  check(sub.ncols == sup.ncols, "DimensionMismatch", "quotient_dim");
  for (const auto& row : sub.rows)
    check(sup.contains(row), "NotContained", "subspace not inside the larger space");
  return sup.rank() - sub.rank();
}

std::optional<QVec> solve(const Mat& A, const QVec& b) {
  check(static_cast<long>(b.size()) == A.rows, "DimensionMismatch", "solve");
  // Gaussian elimination on the augmented matrix, exact pivoting on the
  // first nonzero entry of each column.
  long n = A.rows, m = A.cols;
  Mat w = A;
  QVec rhs = b;
  std::vector<long> pivot_col_of_row;
  long row = 0;
  for (long c = 0; c < m && row < n; ++c) {
    long p = -1;
    for (long r = row; r < n; ++r)
      if (w.at(r, c) != 0) {
        p = r;
        break;
      }
    if (p == -1) continue;
    if (p != row) {
      for (long cc = 0; cc < m; ++cc) std::swap(w.at(p, cc), w.at(row, cc));
      std::swap(rhs[p], rhs[row]);
    }
    Q inv(1 / w.at(row, c));
    for (long cc = c; cc < m; ++cc) w.at(row, cc) *= inv;
    rhs[row] *= inv;
    for (long r = 0; r < n; ++r) {
      if (r == row || w.at(r, c) == 0) continue;
      Q f = w.at(r, c);
      for (long cc = c; cc < m; ++cc) w.at(r, cc) -= f * w.at(row, cc);
      rhs[r] -= f * rhs[row];
    }
    pivot_col_of_row.push_back(c);
    ++row;
  }
  for (long r = row; r < n; ++r)
    if (rhs[r] != 0) return std::nullopt;
  QVec x(m, Q(0));
  for (long k = 0; k < row; ++k) x[pivot_col_of_row[k]] = rhs[k];
  return x;
}

QVec coords_in(const Mat& basis_cols, const QVec& v) {
  auto sol = solve(basis_cols, v);
  check(sol.has_value(), "NotContained", "vector outside the given span");
  return *sol;
}

std::optional<Mat> inverse(const Mat& A) {
  if (A.rows != A.cols) return std::nullopt;
  long n = A.rows;
  Mat inv(n, n);
  // Column-by-column solve would redo elimination; do a joint sweep instead.
  Mat w = A;
  Mat id = Mat::identity(n);
  for (long c = 0; c < n; ++c) {
    long p = -1;
    for (long r = c; r < n; ++r)
      if (w.at(r, c) != 0) {
        p = r;
        break;
      }
    if (p == -1) return std::nullopt;
    if (p != c)
      for (long cc = 0; cc < n; ++cc) {
        std::swap(w.at(p, cc), w.at(c, cc));
        std::swap(id.at(p, cc), id.at(c, cc));
      }
    Q f(1 / w.at(c, c));
    for (long cc = 0; cc < n; ++cc) {
      w.at(c, cc) *= f;
      id.at(c, cc) *= f;
    }
    for (long r = 0; r < n; ++r) {
      if (r == c || w.at(r, c) == 0) continue;
      Q g = w.at(r, c);
      for (long cc = 0; cc < n; ++cc) {
        w.at(r, cc) -= g * w.at(c, cc);
        id.at(r, cc) -= g * id.at(c, cc);
      }
    }
  }
  return id;
}

}  // namespace rootleib
