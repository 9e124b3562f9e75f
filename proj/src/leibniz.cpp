#include "rootleib/leibniz.hpp"

#include <map>

#include "rootleib/scan.hpp"

namespace rootleib {

namespace {

SVec unit_sv(long i) { return SVec{{i, Q(1)}}; }

SVec acc_to_svec(const std::map<long, Q>& acc) {
  SVec out;
  for (const auto& [idx, v] : acc)
    if (v != 0) out.push_back({idx, v});
  return out;
}

}  // namespace

QVec LeibnizAlgebra::bracket(const QVec& x, const QVec& y) const {
  QVec out(dim, Q(0));
  for (long i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (long j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      Q c(x[i] * y[j]);
      for (const auto& e : bb(i, j)) out[e.idx] += Q(c * e.v);
    }
  }
  return out;
}

SVec LeibnizAlgebra::bracket_sv(const SVec& x, const SVec& y) const {
  std::map<long, Q> acc;
  for (const auto& ex : x)
    for (const auto& ey : y) {
      Q c(ex.v * ey.v);
      for (const auto& e : bb(ex.idx, ey.idx)) acc[e.idx] += Q(c * e.v);
    }
  return acc_to_svec(acc);
}

void LeibnizAlgebra::validate() const {
  check(dim >= 1, "MalformedInput", "Leibniz algebra dimension must be positive");
  check(static_cast<long>(basis.size()) == dim, "MalformedInput",
        "need one basis name per dimension");
  check(static_cast<long>(table.size()) == dim * dim, "MalformedInput",
        "bracket table must have dim*dim entries");
  for (const auto& v : table)
    for (std::size_t i = 0; i < v.size(); ++i) {
      check(v[i].idx >= 0 && v[i].idx < dim, "MalformedInput",
            "bracket table index out of range");
      check(v[i].v != 0 && (i == 0 || v[i - 1].idx < v[i].idx), "MalformedInput",
            "bracket table entries must be sorted with nonzero values");
    }
}

LeibnizAlgebra make_leibniz(long dim, std::vector<std::string> basis,
                            std::vector<SVec> table) {
  LeibnizAlgebra L;
  L.dim = dim;
  L.basis = std::move(basis);
  L.table = std::move(table);
  L.validate();
  AxiomReport rep = check_leibniz(L);
  if (!rep.pass()) {
    const auto* f = rep.first_failure();
    std::string msg = "bracket table violates the defining identity";
    if (f && f->witness)
      msg += " at (" + std::to_string(f->witness->idx[0]) + "," +
             std::to_string(f->witness->idx[1]) + "," +
             std::to_string(f->witness->idx[2]) + "): " + f->witness->lhs +
             " != " + f->witness->rhs;
    fail("LeibnizIdentityFailure", msg);
  }
  return L;
}

AxiomReport check_leibniz(const LeibnizAlgebra& L) {
  L.validate();
  auto lhs = [&](long x, long y, long z) { return L.bracket_sv(unit_sv(x), L.bb(y, z)); };
  auto rhs = [&](long x, long y, long z) {
    return svec_axpy(L.bracket_sv(L.bb(x, y), unit_sv(z)), Q(-1),
                     L.bracket_sv(L.bb(x, z), unit_sv(y)));
  };
  auto viol = scan_triples(
      L.dim, [&](long x, long y, long z) { return svec_eq(lhs(x, y, z), rhs(x, y, z)); });
  AxiomReport rep;
  rep.subject = "Leibniz identity";
  LawResult r{"[x,[y,z]] = [[x,y],z] - [[x,z],y]", !viol.has_value(), std::nullopt};
  if (viol) {
    auto [x, y, z] = *viol;
    r.witness = Witness{*viol, svec_str(lhs(x, y, z), L.basis),
                        svec_str(rhs(x, y, z), L.basis)};
  }
  rep.laws.push_back(r);
  return rep;
}

LawResult lie_law(const LeibnizAlgebra& L) {
  auto viol = scan_pairs(L.dim, [&](long i, long j) {
    return svec_axpy(L.bb(i, j), Q(1), L.bb(j, i)).empty();
  });
  LawResult r{"[x,y] + [y,x] = 0", !viol.has_value(), std::nullopt};
  if (viol) {
    long i = (*viol)[0], j = (*viol)[1];
    r.witness = Witness{{i, j, -1},
                        svec_str(svec_axpy(L.bb(i, j), Q(1), L.bb(j, i)), L.basis), "0"};
  }
  return r;
}

bool is_lie(const LeibnizAlgebra& L) { return lie_law(L).pass; }

Mat ad_op(const LeibnizAlgebra& L, const QVec& z) {
  check(static_cast<long>(z.size()) == L.dim, "MalformedInput",
        "ad argument must have length dim");
  Mat A(L.dim, L.dim);
  SVec zs = to_svec(z);
  for (long x = 0; x < L.dim; ++x) {
    SVec v = svec_scaled(L.bracket_sv(unit_sv(x), zs), Q(-1));
    A.set_col(x, to_qvec(v, L.dim));
  }
  // ad z([x,y]) = [ad z(x), y] + [x, ad z(y)] is a consequence of the
  // defining identity; assert it on basis pairs.
  for (long x = 0; x < L.dim; ++x)
    for (long y = 0; y < L.dim; ++y) {
      SVec l = to_svec(A.apply(to_qvec(L.bb(x, y), L.dim)));
      SVec ax = to_svec(A.col(x)), ay = to_svec(A.col(y));
      SVec r = svec_sum(L.bracket_sv(ax, unit_sv(y)), L.bracket_sv(unit_sv(x), ay));
      invariant(svec_eq(l, r), "ad is not a derivation");
    }
  return A;
}

DerivationSpaces derivations(const LeibnizAlgebra& L) {
  long d = L.dim;
  // Unknown p_{rc} (operator entry, row-major index r*d+c); equations indexed
  // by (i,j,k): p([e_i,e_j])_k - [p e_i, e_j]_k - [e_i, p e_j]_k = 0.
  std::vector<SVec> rows;
  rows.reserve(d * d * d);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) {
      std::vector<std::map<long, Q>> acc(d);  // one equation per component k
      for (long k = 0; k < d; ++k)
        for (const auto& e : L.bb(i, j)) acc[k][k * d + e.idx] += e.v;
      for (long r = 0; r < d; ++r) {
        for (const auto& e : L.bb(r, j)) acc[e.idx][r * d + i] -= e.v;
        for (const auto& e : L.bb(i, r)) acc[e.idx][r * d + j] -= e.v;
      }
      for (long k = 0; k < d; ++k) rows.push_back(acc_to_svec(acc[k]));
    }
  SparseMat sys = SparseMat::from_rows(d * d, rows);
  DerivationSpaces out;
  out.der = span_of_svecs(kernel_basis(sys), d * d);
  std::vector<SVec> inn_gens;
  for (long z = 0; z < d; ++z) {
    QVec ez(d, Q(0));
    ez[z] = 1;
    inn_gens.push_back(to_svec(ad_op(L, ez).a));
  }
  out.inn = span_of_svecs(inn_gens, d * d);
  for (const auto& row : out.inn.rows)
    invariant(out.der.contains(row), "inner derivations lie inside Der");
  return out;
}

Rref center(const LeibnizAlgebra& L) {
  long d = L.dim;
  std::vector<SVec> rows;
  for (long x = 0; x < d; ++x) {
    std::vector<std::map<long, Q>> accL(d), accR(d);
    for (long m = 0; m < d; ++m) {
      for (const auto& e : L.bb(x, m)) accL[e.idx][m] += e.v;  // [e_x, z]_k
      for (const auto& e : L.bb(m, x)) accR[e.idx][m] += e.v;  // [z, e_x]_k
    }
    for (long k = 0; k < d; ++k) {
      rows.push_back(acc_to_svec(accL[k]));
      rows.push_back(acc_to_svec(accR[k]));
    }
  }
  return span_of_svecs(kernel_basis(SparseMat::from_rows(d, rows)), d);
}

Rref derived_subalgebra(const LeibnizAlgebra& L) {
  std::vector<SVec> gens(L.table.begin(), L.table.end());
  return span_of_svecs(gens, L.dim);
}

bool is_perfect(const LeibnizAlgebra& L) { return derived_subalgebra(L).rank() == L.dim; }

LeibnizAlgebra quotient_by_ideal(const LeibnizAlgebra& L, const Rref& ideal) {
  check(ideal.ncols == L.dim, "MalformedInput", "ideal lives in the wrong space");
  for (const auto& v : ideal.rows)
    for (long i = 0; i < L.dim; ++i) {
      check(ideal.contains(L.bracket_sv(v, unit_sv(i))), "NotAnIdeal",
            "subspace is not closed under right bracketing");
      check(ideal.contains(L.bracket_sv(unit_sv(i), v)), "NotAnIdeal",
            "subspace is not closed under left bracketing");
    }
  std::vector<long> free = ideal.free_cols();
  long qd = static_cast<long>(free.size());
  check(qd >= 1, "MalformedInput", "quotient by the whole algebra is empty");
  std::vector<long> new_idx(L.dim, -1);
  for (long k = 0; k < qd; ++k) new_idx[free[k]] = k;
  std::vector<std::string> names;
  for (long f : free) names.push_back(L.basis[f]);
  std::vector<SVec> table(qd * qd);
  for (long a = 0; a < qd; ++a)
    for (long b = 0; b < qd; ++b) {
      SVec red = ideal.reduce(L.bb(free[a], free[b]));
      SVec mapped;
      for (const auto& e : red) {
        invariant(new_idx[e.idx] >= 0, "residual must be supported on free columns");
        mapped.push_back({new_idx[e.idx], e.v});
      }
      std::sort(mapped.begin(), mapped.end(),
                [](const SEnt& x, const SEnt& y) { return x.idx < y.idx; });
      table[a * qd + b] = mapped;
    }
  return make_leibniz(qd, names, table);
}

LeibnizAlgebra lie_quotient(const LeibnizAlgebra& L) {
  std::vector<SVec> gens;
  for (long i = 0; i < L.dim; ++i)
    for (long j = i; j < L.dim; ++j) gens.push_back(svec_sum(L.bb(i, j), L.bb(j, i)));
  Rref cur = span_of_svecs(gens, L.dim);
  for (;;) {
    std::vector<SVec> grow = cur.rows;
    bool changed = false;
    for (const auto& v : cur.rows)
      for (long i = 0; i < L.dim; ++i) {
        SVec r1 = L.bracket_sv(v, unit_sv(i));
        SVec r2 = L.bracket_sv(unit_sv(i), v);
        if (!cur.contains(r1)) {
          grow.push_back(r1);
          changed = true;
        }
        if (!cur.contains(r2)) {
          grow.push_back(r2);
          changed = true;
        }
      }
    if (!changed) break;
    cur = rref_rows(grow, L.dim);
  }
  LeibnizAlgebra Q_ = quotient_by_ideal(L, cur);
  invariant(is_lie(Q_), "quotient by the symmetrized-bracket ideal is Lie");
  return Q_;
}

SparseMat boundary(const LeibnizAlgebra& L, long n, long cap) {
  check(n >= 1, "MalformedInput", "boundary degree must be >= 1");
  long d = L.dim;
  long cols = 1;
  for (long i = 0; i < n; ++i) {
    cols *= d;
    check(cols <= cap, "DegreeTooLarge",
          "tensor power has more than cap = " + std::to_string(cap) + " coordinates");
  }
  long rows = (n == 1) ? 1 : cols / d;
  if (n == 1) return SparseMat{1, d, {}};

  std::vector<SVec> colv;
  fill_table(colv, cols, [&](long t) {
    std::vector<long> digit(n);
    long tt = t;
    for (long i = n - 1; i >= 0; --i) {
      digit[i] = tt % d;
      tt /= d;
    }
    std::map<long, Q> acc;
    for (long i = 0; i < n - 1; ++i)
      for (long j = i + 1; j < n; ++j) {
        // 1-based sign (-1)^{j+1} becomes (-1)^j for 0-based j.
        Q sign((j % 2 == 0) ? 1 : -1);
        for (const auto& e : L.bb(digit[i], digit[j])) {
          long r = 0;
          for (long p = 0; p < n; ++p) {
            if (p == j) continue;
            r = r * d + (p == i ? e.idx : digit[p]);
          }
          acc[r] += Q(sign * e.v);
        }
      }
    return acc_to_svec(acc);
  });
  return SparseMat::from_cols(rows, colv);
}

Homology homology(const LeibnizAlgebra& L, long n, long cap, bool want_reps) {
  Homology h;
  h.degree = n;
  SparseMat dn = boundary(L, n, cap);
  SparseMat dn1 = boundary(L, n + 1, cap);
  h.rank_dn = rank_of(dn);
  h.rank_dn1 = rank_of(dn1);
  long ker = dn.cols - h.rank_dn;
  h.dim = ker - h.rank_dn1;
  invariant(h.dim >= 0, "image lies inside the kernel");
  if (want_reps && h.dim > 0) {
    Rref acc = col_space(dn1);
    for (const auto& gen : kernel_basis(dn)) {
      if (static_cast<long>(h.reps.size()) == h.dim) break;
      SVec red = acc.reduce(gen);
      if (red.empty()) continue;
      h.reps.push_back(gen);
      std::vector<SVec> rows = acc.rows;
      rows.push_back(red);
      acc = rref_rows(rows, dn.cols);
    }
    invariant(static_cast<long>(h.reps.size()) == h.dim,
              "found a full set of homology representatives");
  }
  return h;
}

QVec CentralExtension::cls(const SVec& tensor_vec) const {
  SVec red = im_d3.reduce(tensor_vec);
  QVec out(static_cast<long>(pair_of_coord.size()), Q(0));
  for (const auto& e : red) {
    long k = coord_of_col[e.idx];
    invariant(k >= 0, "residual must be supported on free columns");
    out[k] = e.v;
  }
  return out;
}

QVec CentralExtension::cls_pair(long i, long j) const {
  return cls(SVec{{i * base_dim + j, Q(1)}});
}

CentralExtension universal_central_extension(const LeibnizAlgebra& L, long cap) {
  check(is_perfect(L), "NotPerfect",
        "universal central extensions exist only for perfect algebras");
  long d = L.dim;
  SparseMat d2 = boundary(L, 2, cap);
  SparseMat d3 = boundary(L, 3, cap);

  // d_2 ∘ d_3 = 0, which is exactly well-definedness of the quotient bracket:
  // the bracket of classes is built from d_2 of representatives.
  {
    auto cols3 = d3.to_cols();
    for (const auto& c : cols3) {
      std::map<long, Q> acc;
      for (const auto& e : c) {
        long i = e.idx / d, j = e.idx % d;
        for (const auto& t : L.bb(i, j)) acc[t.idx] -= Q(e.v * t.v);
      }
      invariant(acc_to_svec(acc).empty(), "d2 after d3 must vanish");
    }
  }

  CentralExtension ext;
  ext.base_dim = d;
  ext.im_d3 = col_space(d3);
  std::vector<long> free = ext.im_d3.free_cols();
  long td = static_cast<long>(free.size());
  ext.coord_of_col.assign(d * d, -1);
  for (long k = 0; k < td; ++k) {
    ext.coord_of_col[free[k]] = k;
    ext.pair_of_coord.emplace_back(free[k] / d, free[k] % d);
  }

  std::vector<std::string> names;
  for (auto [i, j] : ext.pair_of_coord)
    names.push_back("<" + L.basis[i] + "," + L.basis[j] + ">");

  // Quotient bracket: [cls(e_i(x)e_j), cls(e_k(x)e_l)] = cls([e_i,e_j](x)[e_k,e_l]).
  std::vector<SVec> table(td * td);
  fill_table(table, td * td, [&](long t) {
    long u = t / td, v = t % td;
    auto [i, j] = ext.pair_of_coord[u];
    auto [k, l] = ext.pair_of_coord[v];
    SVec w;
    for (const auto& a : L.bb(i, j))
      for (const auto& b : L.bb(k, l)) w.push_back({a.idx * d + b.idx, Q(a.v * b.v)});
    std::sort(w.begin(), w.end(), [](const SEnt& x, const SEnt& y) { return x.idx < y.idx; });
    QVec q = ext.cls(w);
    return to_svec(q);
  });
  ext.total = make_leibniz(td, names, table);

  // Projection cls(x(x)y) |-> [x,y]; columns are brackets of the pairs.
  ext.projection = Mat(d, td);
  for (long k = 0; k < td; ++k) {
    auto [i, j] = ext.pair_of_coord[k];
    ext.projection.set_col(k, to_qvec(L.bb(i, j), d));
  }
  // Projection is a bracket homomorphism.
  {
    auto viol = scan_pairs(td, [&](long u, long v) {
      QVec lhs = ext.projection.apply(to_qvec(ext.total.bb(u, v), td));
      QVec rhs = L.bracket(ext.projection.col(u), ext.projection.col(v));
      return lhs == rhs;
    });
    invariant(!viol.has_value(), "uce projection is a homomorphism");
  }
  // Kernel: central, and of dimension dim HL_2 = (ker d_2) - rank d_3.
  std::vector<SVec> ker = kernel_basis(ext.projection);
  ext.kernel_dim = static_cast<long>(ker.size());
  long hl2 = (d * d - rank_of(d2)) - ext.im_d3.rank();
  invariant(ext.kernel_dim == hl2, "uce kernel dimension equals dim HL_2");
  for (const auto& g : ker)
    for (long t = 0; t < td; ++t) {
      invariant(ext.total.bracket_sv(g, unit_sv(t)).empty(), "uce kernel is central");
      invariant(ext.total.bracket_sv(unit_sv(t), g).empty(), "uce kernel is central");
    }
  invariant(is_perfect(ext.total), "uce total algebra is perfect");
  return ext;
}

AxiomReport check_right_module(const LeibnizAlgebra& L, const std::vector<SVec>& action,
                               long mdim, const std::vector<std::string>& mbasis) {
  check(static_cast<long>(action.size()) == mdim * L.dim, "MalformedInput",
        "action table must have mdim*dim entries");
  auto act_b = [&](long m, long x) -> const SVec& { return action[m * L.dim + x]; };
  auto act = [&](const SVec& mv, long x) {
    SVec out;
    for (const auto& e : mv) out = svec_axpy(out, e.v, act_b(e.idx, x));
    return out;
  };
  std::vector<std::string> names = mbasis;
  for (long i = static_cast<long>(names.size()); i < mdim; ++i)
    names.push_back("m" + std::to_string(i));

  AxiomReport rep;
  rep.subject = "right module";
  LawResult r{"[m,[x,y]] = [[m,x],y] - [[m,y],x]", true, std::nullopt};
  for (long m = 0; m < mdim && r.pass; ++m)
    for (long x = 0; x < L.dim && r.pass; ++x)
      for (long y = 0; y < L.dim && r.pass; ++y) {
        SVec lhs;
        for (const auto& e : L.bb(x, y)) lhs = svec_axpy(lhs, e.v, act_b(m, e.idx));
        SVec rhs = svec_axpy(act(act_b(m, x), y), Q(-1), act(act_b(m, y), x));
        if (!svec_eq(lhs, rhs)) {
          r.pass = false;
          r.witness = Witness{{m, x, y}, svec_str(lhs, names), svec_str(rhs, names)};
        }
      }
  rep.laws.push_back(r);
  return rep;
}

LeibnizAlgebra dialgebra_to_leibniz(const Dialgebra& D) {
  if (!check_associative(D).pass()) {
    AxiomReport alt = check_alternative(D);
    if (!alt.pass())
      fail("LeibnizIdentityFailure",
           "source dialgebra satisfies neither associative nor alternative laws");
  }
  long d = D.dim;
  std::vector<SVec> table(d * d);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j)
      table[i * d + j] = svec_axpy(D.left_bb(i, j), Q(-1), D.right_bb(j, i));
  return make_leibniz(d, D.basis, table);
}

}  // namespace rootleib
