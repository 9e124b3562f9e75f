#include "rootleib/matrixleib.hpp"

#include <map>

namespace rootleib {

namespace {

SVec tensor_sv(const QVec& u, const QVec& w, long dim) {
  SVec t;
  for (long p = 0; p < dim; ++p) {
    if (u[p] == 0) continue;
    for (long q = 0; q < dim; ++q)
      if (w[q] != 0) t.push_back({p * dim + q, Q(u[p] * w[q])});
  }
  return t;
}

void require_associative(const Dialgebra& D) {
  AxiomReport rep = check_associative(D);
  if (!rep.pass())
    fail("NotAssociative", "dialgebra fails '" + rep.first_failure()->name + "'");
}

std::vector<SVec> gl_table(long n, const Dialgebra& D) {
  long dd = D.dim, dim = n * n * dd;
  auto coord = [&](long i, long j, long a) { return (i * n + j) * dd + a; };
  std::vector<SVec> table(dim * dim);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      for (long a = 0; a < dd; ++a)
        for (long k = 0; k < n; ++k)
          for (long l = 0; l < n; ++l)
            for (long b = 0; b < dd; ++b) {
              std::map<long, Q> acc;
              if (j == k)
                for (const auto& e : D.left_bb(a, b)) acc[coord(i, l, e.idx)] += e.v;
              if (i == l)
                for (const auto& e : D.right_bb(b, a)) acc[coord(k, j, e.idx)] -= e.v;
              SVec out;
              for (const auto& [idx, v] : acc)
                if (v != 0) out.push_back({idx, v});
              table[coord(i, j, a) * dim + coord(k, l, b)] = out;
            }
  return table;
}

MatrixLeibnizAlgebra build_gl_unchecked(long n, const Dialgebra& D) {
  check(n >= 2, "MalformedInput", "gl(n,D) needs n >= 2");
  D.validate();
  MatrixLeibnizAlgebra M;
  M.n = n;
  M.D = D;
  M.full = true;
  long dim = M.gl_dim();
  std::vector<std::string> names(dim);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      for (long a = 0; a < D.dim; ++a)
        names[M.gl_coord(i, j, a)] = M.gl_label(i, j, a);
  M.carrier = make_leibniz(dim, names, gl_table(n, D));
  return M;
}

}  // namespace

std::string MatrixLeibnizAlgebra::gl_label(long i, long j, long a) const {
  std::string pos = n <= 9 ? std::to_string(i + 1) + std::to_string(j + 1)
                           : std::to_string(i + 1) + "," + std::to_string(j + 1);
  return "E" + pos + "(" + D.basis[a] + ")";
}

QVec MatrixLeibnizAlgebra::carrier_coords(const SVec& gl_vec) const {
  if (full) return to_qvec(gl_vec, gl_dim());
  QVec c(span.rank(), Q(0));
  for (long k = 0; k < span.rank(); ++k) c[k] = svec_get(gl_vec, span.pivots[k]);
  SVec rebuilt;
  for (long k = 0; k < span.rank(); ++k)
    rebuilt = svec_axpy(rebuilt, c[k], span.rows[k]);
  check(svec_eq(rebuilt, gl_vec), "NotContained",
        "vector lies outside the derived subalgebra");
  return c;
}

SVec MatrixLeibnizAlgebra::gl_of_carrier(const SVec& v) const {
  if (full) return v;
  SVec out;
  for (const auto& e : v) out = svec_axpy(out, e.v, span.rows[e.idx]);
  return out;
}

QVec MatrixLeibnizAlgebra::elem(long i, long j, const QVec& x) const {
  invariant(static_cast<long>(x.size()) == D.dim, "element size mismatch");
  SVec g;
  for (long a = 0; a < D.dim; ++a)
    if (x[a] != 0) g.push_back({gl_coord(i, j, a), x[a]});
  return carrier_coords(g);
}

QVec MatrixLeibnizAlgebra::elem_basis(long i, long j, long a) const {
  QVec x(D.dim, Q(0));
  x[a] = 1;
  return elem(i, j, x);
}

MatrixLeibnizAlgebra build_gl(long n, const Dialgebra& D) {
  require_associative(D);
  return build_gl_unchecked(n, D);
}

namespace {

MatrixLeibnizAlgebra derive_sl(const MatrixLeibnizAlgebra& gl) {
  long n = gl.n;
  const Dialgebra& D = gl.D;
  check(D.bar_unit.has_value(), "MissingBarUnit",
        "sl(n,D) generators need a bar-unit in D");
  MatrixLeibnizAlgebra M;
  M.n = n;
  M.D = D;
  M.full = false;
  M.span = derived_subalgebra(gl.carrier);

  long dim = M.span.rank();
  std::vector<std::string> names(dim);
  for (long k = 0; k < dim; ++k) {
    long p = M.span.pivots[k];
    long a = p % D.dim, ij = p / D.dim;
    names[k] = M.gl_label(ij / n, ij % n, a);
  }
  std::vector<SVec> table(dim * dim);
  for (long p = 0; p < dim; ++p)
    for (long q = 0; q < dim; ++q) {
      SVec br = gl.carrier.bracket_sv(M.span.rows[p], M.span.rows[q]);
      QVec c = M.carrier_coords(br);
      SVec out;
      for (long k = 0; k < dim; ++k)
        if (c[k] != 0) out.push_back({k, c[k]});
      table[p * dim + q] = out;
    }
  M.carrier = make_leibniz(dim, names, table);

  // Generator relations: off-diagonal matrix units land in sl and bracket by
  // the three displayed rules.
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (i == j) continue;
      for (long k = 0; k < n; ++k)
        for (long l = 0; l < n; ++l) {
          if (k == l) continue;
          for (long a = 0; a < D.dim; ++a)
            for (long b = 0; b < D.dim; ++b) {
              QVec lhs = M.carrier.bracket(M.elem_basis(i, j, a),
                                           M.elem_basis(k, l, b));
              QVec want(dim, Q(0));
              if (i != l && j == k)
                want = M.elem(i, l, to_qvec(D.left_bb(a, b), D.dim));
              else if (i == l && j != k) {
                QVec r = M.elem(k, j, to_qvec(D.right_bb(b, a), D.dim));
                for (auto& x : r) x = Q(-x);
                want = r;
              } else if (i != l && j != k)
                ;  // zero
              else
                continue;  // i == l and j == k: diagonal case, no relation
              invariant(lhs == want, "sl generator relation fails at E" +
                                         std::to_string(i + 1) +
                                         std::to_string(j + 1) + ",E" +
                                         std::to_string(k + 1) +
                                         std::to_string(l + 1));
            }
        }
    }
  invariant(is_perfect(M.carrier), "sl(n,D) is not perfect");
  return M;
}

}  // namespace

MatrixLeibnizAlgebra build_sl(long n, const Dialgebra& D) {
  check(n >= 2, "MalformedInput", "sl(n,D) needs n >= 2");
  return derive_sl(build_gl(n, D));
}

QVec SteinbergModel::v(long i, long j, const QVec& x) const {
  invariant(i != j && i >= 0 && j >= 0 && i < n && j < n, "bad v_ij indices");
  long k = 0;
  while (k == i || k == j) ++k;
  QVec u = base.elem(i, k, x);
  QVec w = base.elem(k, j, *base.D.bar_unit);
  return ext.cls(tensor_sv(u, w, base.carrier.dim));
}

QVec SteinbergModel::v_basis(long i, long j, long a) const {
  QVec x(base.D.dim, Q(0));
  x[a] = 1;
  return v(i, j, x);
}

QVec SteinbergModel::psi(const QVec& w) const { return ext.projection.apply(w); }

SteinbergModel build_steinberg_model(long n, const Dialgebra& D, long cap) {
  check(n >= 3, "MalformedInput", "stl(n,D) needs n >= 3");
  check(D.bar_unit.has_value(), "MissingBarUnit", "stl(n,D) needs a bar-unit");
  SteinbergModel S;
  S.n = n;
  if (n == 3) {
    AxiomReport rep = check_alternative(D);
    if (!rep.pass())
      fail("NotAlternative",
           "dialgebra fails '" + rep.first_failure()->name + "'");
    S.base = derive_sl(build_gl_unchecked(n, D));
  } else {
    S.base = build_sl(n, D);
  }
  S.ext = universal_central_extension(S.base.carrier, cap);

  long dd = D.dim, total = S.ext.total.dim;
  // Lift independence of the auxiliary index.
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (i == j) continue;
      for (long a = 0; a < dd; ++a) {
        QVec va = S.v_basis(i, j, a);
        QVec xa(dd, Q(0));
        xa[a] = 1;
        for (long k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          QVec u = S.base.elem(i, k, xa);
          QVec w = S.base.elem(k, j, *D.bar_unit);
          QVec alt = S.ext.cls(tensor_sv(u, w, S.base.carrier.dim));
          invariant(alt == va, "lift depends on the auxiliary index");
        }
        // psi recovers the matrix unit.
        invariant(S.psi(va) == S.base.elem_basis(i, j, a),
                  "psi(v_ij(a)) != E_ij(a)");
      }
    }

  // Scalar linearity of the lift.
  if (dd >= 2) {
    QVec x(dd, Q(0));
    x[0] = 2;
    x[1] = -3;
    QVec got = S.v(0, 1, x);
    QVec want(total, Q(0));
    QVec v0 = S.v_basis(0, 1, 0), v1 = S.v_basis(0, 1, 1);
    for (long t = 0; t < total; ++t) want[t] = Q(2 * v0[t] - 3 * v1[t]);
    invariant(got == want, "lift is not linear");
  }

  // Defining relations in the model.
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (i == j) continue;
      for (long k = 0; k < n; ++k)
        for (long l = 0; l < n; ++l) {
          if (k == l) continue;
          for (long a = 0; a < dd; ++a)
            for (long b = 0; b < dd; ++b) {
              QVec br = S.ext.total.bracket(S.v_basis(i, j, a),
                                            S.v_basis(k, l, b));
              if (i != l && j != k) {
                invariant(br == QVec(total, Q(0)),
                          "stl relation: disjoint units do not commute");
              } else if (i != l && j == k) {
                invariant(br == S.v(i, l, to_qvec(D.left_bb(a, b), dd)),
                          "stl relation: left product fails");
              } else if (i == l && j != k) {
                QVec w = S.v(k, j, to_qvec(D.right_bb(b, a), dd));
                for (auto& x : w) x = Q(-x);
                invariant(br == w, "stl relation: right product fails");
              } else {
                // H-element: psi of [v_ij(a), v_ji(b)] is diagonal in gl.
                SVec g = S.base.gl_of_carrier([&] {
                  QVec p = S.psi(br);
                  SVec sp;
                  for (long t = 0; t < S.base.carrier.dim; ++t)
                    if (p[t] != 0) sp.push_back({t, p[t]});
                  return sp;
                }());
                for (const auto& e : g) {
                  long ij = e.idx / dd;
                  invariant(ij / n == ij % n,
                            "H element is not diagonal in gl");
                }
              }
            }
        }
    }
  return S;
}

LeibnizAlgebra build_tensor_algebra(const ChevalleyAlgebra& g,
                                    const Dialgebra& R) {
  check(R.bar_unit.has_value(), "MissingBarUnit",
        "tensor algebra needs a bar-unit in R");
  AxiomReport comm = is_commutative(R);
  if (!comm.pass())
    fail("NotCommutative", "dialgebra fails '" + comm.first_failure()->name + "'");
  require_associative(R);

  long gd = g.alg.dim, rd = R.dim, dim = gd * rd;
  std::vector<std::string> names(dim);
  for (long p = 0; p < gd; ++p)
    for (long a = 0; a < rd; ++a)
      names[p * rd + a] = g.alg.basis[p] + "(x)" + R.basis[a];
  std::vector<SVec> table(dim * dim);
  for (long p = 0; p < gd; ++p)
    for (long q = 0; q < gd; ++q) {
      const SVec& br = g.alg.bb(p, q);
      if (br.empty()) continue;
      for (long a = 0; a < rd; ++a)
        for (long b = 0; b < rd; ++b) {
          const SVec& prod = R.left_bb(a, b);
          if (prod.empty()) continue;
          std::map<long, Q> acc;
          for (const auto& r : br)
            for (const auto& c : prod) acc[r.idx * rd + c.idx] += Q(r.v * c.v);
          SVec out;
          for (const auto& [idx, vv] : acc)
            if (vv != 0) out.push_back({idx, vv});
          table[(p * rd + a) * dim + (q * rd + b)] = out;
        }
    }
  return make_leibniz(dim, names, table);
}

}  // namespace rootleib
