#include "rootleib/dialg.hpp"

#include <functional>

#include "rootleib/scan.hpp"

namespace rootleib {

namespace {

// Linear extensions of a structure-constant table.
SVec mul_sb(const std::vector<SVec>& tab, long dim, const SVec& x, long k) {
  SVec out;  // x * basis_k
  for (const auto& e : x) out = svec_axpy(out, e.v, tab[e.idx * dim + k]);
  return out;
}

SVec mul_bs(const std::vector<SVec>& tab, long dim, long i, const SVec& y) {
  SVec out;  // basis_i * y
  for (const auto& e : y) out = svec_axpy(out, e.v, tab[i * dim + e.idx]);
  return out;
}

QVec mul_qq(const std::vector<SVec>& tab, long dim, const QVec& x, const QVec& y) {
  QVec out(dim, Q(0));
  for (long i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (long j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      Q c(x[i] * y[j]);
      for (const auto& e : tab[i * dim + j]) out[e.idx] += Q(c * e.v);
    }
  }
  return out;
}

void validate_table(const std::vector<SVec>& tab, long dim, const std::string& what) {
  check(static_cast<long>(tab.size()) == dim * dim, "MalformedInput",
        what + " table must have dim*dim entries");
  for (const auto& v : tab)
    for (std::size_t i = 0; i < v.size(); ++i) {
      check(v[i].idx >= 0 && v[i].idx < dim, "MalformedInput",
            what + " table index out of range");
      check(v[i].v != 0 && (i == 0 || v[i - 1].idx < v[i].idx), "MalformedInput",
            what + " table entries must be sorted with nonzero values");
    }
}

using Side = std::function<SVec(long, long, long)>;

LawResult scan_identity(long dim, const std::vector<std::string>& names,
                        const std::string& name, const Side& lhs, const Side& rhs) {
  auto viol = scan_triples(
      dim, [&](long a, long b, long c) { return svec_eq(lhs(a, b, c), rhs(a, b, c)); });
  LawResult r{name, !viol.has_value(), std::nullopt};
  if (viol) {
    auto [a, b, c] = *viol;
    r.witness = Witness{*viol, svec_str(lhs(a, b, c), names), svec_str(rhs(a, b, c), names)};
  }
  return r;
}

}  // namespace

QVec Algebra::mul(const QVec& x, const QVec& y) const { return mul_qq(mult, dim, x, y); }

void Algebra::validate() const {
  check(dim >= 1, "MalformedInput", "algebra dimension must be positive");
  check(static_cast<long>(basis.size()) == dim, "MalformedInput",
        "algebra needs one basis name per dimension");
  validate_table(mult, dim, "multiplication");
  check(static_cast<long>(unit.size()) == dim, "MalformedInput",
        "unit coordinates must have length dim");
}

AxiomReport check_algebra(const Algebra& A) {
  A.validate();
  AxiomReport rep;
  rep.subject = "algebra";
  rep.laws.push_back(scan_identity(
      A.dim, A.basis, "(ab)c = a(bc)",
      [&](long a, long b, long c) { return mul_sb(A.mult, A.dim, A.bb(a, b), c); },
      [&](long a, long b, long c) { return mul_bs(A.mult, A.dim, a, A.bb(b, c)); }));
  SVec u = to_svec(A.unit);
  LawResult unit_law{"1a = a = a1", true, std::nullopt};
  for (long i = 0; i < A.dim; ++i) {
    SVec ei{{i, Q(1)}};
    SVec ua = mul_sb(A.mult, A.dim, u, i);   // 1 * e_i (u on the left)
    SVec au = mul_bs(A.mult, A.dim, i, u);   // e_i * 1
    if (!svec_eq(ua, ei) || !svec_eq(au, ei)) {
      unit_law.pass = false;
      unit_law.witness = Witness{{i, i, -1}, svec_str(!svec_eq(ua, ei) ? ua : au, A.basis),
                                 svec_str(ei, A.basis)};
      break;
    }
  }
  rep.laws.push_back(unit_law);
  return rep;
}

QVec Dialgebra::left_mul(const QVec& x, const QVec& y) const {
  return mul_qq(left, dim, x, y);
}
QVec Dialgebra::right_mul(const QVec& x, const QVec& y) const {
  return mul_qq(right, dim, x, y);
}

void Dialgebra::validate() const {
  check(dim >= 1, "MalformedInput", "dialgebra dimension must be positive");
  check(static_cast<long>(basis.size()) == dim, "MalformedInput",
        "dialgebra needs one basis name per dimension");
  validate_table(left, dim, "left product");
  validate_table(right, dim, "right product");
  if (bar_unit) {
    check(static_cast<long>(bar_unit->size()) == dim, "MalformedInput",
          "bar-unit coordinates must have length dim");
    SVec e = to_svec(*bar_unit);
    for (long i = 0; i < dim; ++i) {
      SVec ei{{i, Q(1)}};
      check(svec_eq(mul_sb(right, dim, e, i), ei), "BarUnitLawFailure",
            "e |- " + basis[i] + " != " + basis[i]);
      SVec xe;
      for (const auto& t : e) xe = svec_axpy(xe, t.v, left_bb(i, t.idx));
      check(svec_eq(xe, ei), "BarUnitLawFailure", basis[i] + " -| e != " + basis[i]);
    }
  }
}

AxiomReport check_associative(const Dialgebra& D) {
  D.validate();
  const auto& L = D.left;
  const auto& R = D.right;
  long n = D.dim;
  auto lb = [&](long i, long j) -> const SVec& { return D.left_bb(i, j); };
  auto rb = [&](long i, long j) -> const SVec& { return D.right_bb(i, j); };
  AxiomReport rep;
  rep.subject = "associative dialgebra laws";
  auto add = [&](const std::string& name, const Side& lhs, const Side& rhs) {
    rep.laws.push_back(scan_identity(n, D.basis, name, lhs, rhs));
  };
  add("a-|(b-|c) = (a-|b)-|c",
      [&](long a, long b, long c) { return mul_bs(L, n, a, lb(b, c)); },
      [&](long a, long b, long c) { return mul_sb(L, n, lb(a, b), c); });
  add("(a-|b)-|c = a-|(b|-c)",
      [&](long a, long b, long c) { return mul_sb(L, n, lb(a, b), c); },
      [&](long a, long b, long c) { return mul_bs(L, n, a, rb(b, c)); });
  add("(a|-b)-|c = a|-(b-|c)",
      [&](long a, long b, long c) { return mul_sb(L, n, rb(a, b), c); },
      [&](long a, long b, long c) { return mul_bs(R, n, a, lb(b, c)); });
  add("(a|-b)|-c = a|-(b|-c)",
      [&](long a, long b, long c) { return mul_sb(R, n, rb(a, b), c); },
      [&](long a, long b, long c) { return mul_bs(R, n, a, rb(b, c)); });
  add("a|-(b|-c) = (a-|b)|-c",
      [&](long a, long b, long c) { return mul_bs(R, n, a, rb(b, c)); },
      [&](long a, long b, long c) { return mul_sb(R, n, lb(a, b), c); });
  return rep;
}

AxiomReport check_alternative(const Dialgebra& D) {
  D.validate();
  const auto& L = D.left;
  const auto& R = D.right;
  long n = D.dim;
  auto lb = [&](long i, long j) -> const SVec& { return D.left_bb(i, j); };
  auto rb = [&](long i, long j) -> const SVec& { return D.right_bb(i, j); };
  // The three associators.
  auto Jl = [&](long a, long b, long c) {
    return svec_axpy(mul_sb(L, n, lb(a, b), c), Q(-1), mul_bs(L, n, a, lb(b, c)));
  };
  auto Jr = [&](long a, long b, long c) {
    return svec_axpy(mul_sb(R, n, rb(a, b), c), Q(-1), mul_bs(R, n, a, rb(b, c)));
  };
  auto Jx = [&](long a, long b, long c) {
    return svec_axpy(mul_sb(L, n, rb(a, b), c), Q(-1), mul_bs(R, n, a, lb(b, c)));
  };
  auto neg = [](SVec v) { return svec_scaled(v, Q(-1)); };

  AxiomReport rep;
  rep.subject = "alternative dialgebra laws";
  auto add = [&](const std::string& name, const Side& lhs, const Side& rhs) {
    rep.laws.push_back(scan_identity(n, D.basis, name, lhs, rhs));
  };
  add("J-|(a,b,c) = -J|-(c,b,a)",
      [&](long a, long b, long c) { return Jl(a, b, c); },
      [&](long a, long b, long c) { return neg(Jr(c, b, a)); });
  add("J-|(a,b,c) = J|-(b,c,a)",
      [&](long a, long b, long c) { return Jl(a, b, c); },
      [&](long a, long b, long c) { return Jr(b, c, a); });
  add("Jx(a,b,c) = -J|-(a,c,b)",
      [&](long a, long b, long c) { return Jx(a, b, c); },
      [&](long a, long b, long c) { return neg(Jr(a, c, b)); });
  add("(a|-b)|-c = (a-|b)|-c",
      [&](long a, long b, long c) { return mul_sb(R, n, rb(a, b), c); },
      [&](long a, long b, long c) { return mul_sb(R, n, lb(a, b), c); });
  add("a-|(b|-c) = a-|(b-|c)",
      [&](long a, long b, long c) { return mul_bs(L, n, a, rb(b, c)); },
      [&](long a, long b, long c) { return mul_bs(L, n, a, lb(b, c)); });
  // Consequences of the five laws above; reported so that a passing run
  // certifies them exhaustively too.
  add("J-|(a,b,c) = -J-|(a,c,b)",
      [&](long a, long b, long c) { return Jl(a, b, c); },
      [&](long a, long b, long c) { return neg(Jl(a, c, b)); });
  add("J|-(a,b,c) = -J|-(b,a,c)",
      [&](long a, long b, long c) { return Jr(a, b, c); },
      [&](long a, long b, long c) { return neg(Jr(b, a, c)); });
  add("Jx(a,b,c) = -Jx(c,b,a)",
      [&](long a, long b, long c) { return Jx(a, b, c); },
      [&](long a, long b, long c) { return neg(Jx(c, b, a)); });
  {
    LawResult r{"J-|(a,b,b) = 0, J|-(a,a,b) = 0, Jx(a,b,a) = 0", true, std::nullopt};
    auto viol = scan_pairs(n, [&](long a, long b) {
      return Jl(a, b, b).empty() && Jr(a, a, b).empty() && Jx(a, b, a).empty();
    });
    if (viol) {
      long a = (*viol)[0], b = (*viol)[1];
      r.pass = false;
      if (!Jl(a, b, b).empty())
        r.witness = Witness{{a, b, b}, svec_str(Jl(a, b, b), D.basis), "0"};
      else if (!Jr(a, a, b).empty())
        r.witness = Witness{{a, a, b}, svec_str(Jr(a, a, b), D.basis), "0"};
      else
        r.witness = Witness{{a, b, a}, svec_str(Jx(a, b, a), D.basis), "0"};
    }
    rep.laws.push_back(r);
  }
  return rep;
}

AxiomReport is_commutative(const Dialgebra& D) {
  D.validate();
  long n = D.dim;
  AxiomReport rep;
  rep.subject = "commutativity";
  auto record = [&](const std::string& name, auto&& lhs, auto&& rhs) {
    auto viol = scan_pairs(n, [&](long a, long b) { return svec_eq(lhs(a, b), rhs(a, b)); });
    LawResult r{name, !viol.has_value(), std::nullopt};
    if (viol) {
      long a = (*viol)[0], b = (*viol)[1];
      r.witness =
          Witness{{a, b, -1}, svec_str(lhs(a, b), D.basis), svec_str(rhs(a, b), D.basis)};
    }
    rep.laws.push_back(r);
  };
  record("x-|y = y-|x", [&](long a, long b) { return D.left_bb(a, b); },
         [&](long a, long b) { return D.left_bb(b, a); });
  record("x-|y = y|-x", [&](long a, long b) { return D.left_bb(a, b); },
         [&](long a, long b) { return D.right_bb(b, a); });
  return rep;
}

Dialgebra from_associative_algebra(const Algebra& A) {
  AxiomReport rep = check_algebra(A);
  if (!rep.pass()) {
    auto w = rep.first_failure();
    std::string msg = "the product table is not associative/unital";
    if (w && w->witness)
      msg += " (counterexample at basis triple " + std::to_string(w->witness->idx[0]) +
             "," + std::to_string(w->witness->idx[1]) + "," +
             std::to_string(w->witness->idx[2]) + ")";
    fail("NotAssociative", msg);
  }
  Dialgebra D;
  D.dim = A.dim;
  D.basis = A.basis;
  D.left = A.mult;
  D.right = A.mult;
  D.bar_unit = A.unit;
  D.validate();
  return D;
}

Dialgebra from_differential_algebra(const Algebra& A, const Mat& d) {
  A.validate();
  check(d.rows == A.dim && d.cols == A.dim, "MalformedInput",
        "differential must be a dim x dim matrix");
  // d must square to zero and satisfy the product rule on basis pairs.
  check(d.mul(d).is_zero(), "NotADifferential", "d*d != 0");
  for (long i = 0; i < A.dim; ++i)
    for (long j = 0; j < A.dim; ++j) {
      QVec prod = to_qvec(A.bb(i, j), A.dim);
      QVec lhs = d.apply(prod);
      QVec di = d.col(i), dj = d.col(j);
      // d(e_i) e_j + e_i d(e_j)
      QVec ei(A.dim, Q(0)), ej(A.dim, Q(0));
      ei[i] = 1;
      ej[j] = 1;
      QVec rhs = A.mul(di, ej);
      QVec t2 = A.mul(ei, dj);
      bool eq = true;
      for (long k = 0; k < A.dim; ++k) {
        Q r(rhs[k] + t2[k]);
        if (lhs[k] != r) eq = false;
      }
      check(eq, "NotADifferential",
            "product rule fails on basis pair (" + A.basis[i] + ", " + A.basis[j] + ")");
    }

  Dialgebra D;
  D.dim = A.dim;
  D.basis = A.basis;
  D.left.resize(A.dim * A.dim);
  D.right.resize(A.dim * A.dim);
  for (long i = 0; i < A.dim; ++i)
    for (long j = 0; j < A.dim; ++j) {
      QVec ei(A.dim, Q(0)), ej(A.dim, Q(0));
      ei[i] = 1;
      ej[j] = 1;
      D.left[i * A.dim + j] = to_svec(A.mul(ei, d.col(j)));   // x -| y = x d(y)
      D.right[i * A.dim + j] = to_svec(A.mul(d.col(i), ej));  // x |- y = d(x) y
    }

  // A bar-unit is an e with d(e) a two-sided unit of A: solve the linear
  // system d(e)*x = x = x*d(e) over all basis x.
  long n = A.dim;
  // Row index layout: 2*n*n equations, (x, side, component).
  Mat sys(2 * n * n, n);
  QVec target(2 * n * n, Q(0));
  for (long x = 0; x < n; ++x) {
    QVec ex(n, Q(0));
    ex[x] = 1;
    for (long m = 0; m < n; ++m) {
      // coefficient of e_m in d(e): column m of d.
      QVec dm = d.col(m);
      QVec le = A.mul(dm, ex);  // d(e_m) * x
      QVec re = A.mul(ex, dm);  // x * d(e_m)
      for (long comp = 0; comp < n; ++comp) {
        sys.at((2 * x) * n + comp, m) = le[comp];
        sys.at((2 * x + 1) * n + comp, m) = re[comp];
      }
    }
    for (long comp = 0; comp < n; ++comp) {
      target[(2 * x) * n + comp] = ex[comp];
      target[(2 * x + 1) * n + comp] = ex[comp];
    }
  }
  auto e = solve(sys, target);
  if (e) D.bar_unit = *e;
  D.validate();
  return D;
}

Dialgebra tensor(const Dialgebra& a, const Dialgebra& b) {
  check(check_associative(a).pass(), "NotAssociative",
        "left tensor factor fails the associative dialgebra laws");
  check(check_associative(b).pass(), "NotAssociative",
        "right tensor factor fails the associative dialgebra laws");
  Dialgebra D;
  D.dim = a.dim * b.dim;
  auto id = [&](long i, long p) { return i * b.dim + p; };
  for (long i = 0; i < a.dim; ++i)
    for (long p = 0; p < b.dim; ++p) D.basis.push_back(a.basis[i] + "(x)" + b.basis[p]);
  D.left.resize(D.dim * D.dim);
  D.right.resize(D.dim * D.dim);
  auto put = [&](std::vector<SVec>& tab, const std::vector<SVec>& ta,
                 const std::vector<SVec>& tb, long i, long p, long j, long q) {
    SVec out;
    for (const auto& ea : ta[i * a.dim + j])
      for (const auto& eb : tb[p * b.dim + q]) {
        SVec term{{id(ea.idx, eb.idx), Q(ea.v * eb.v)}};
        out = svec_sum(out, term);
      }
    tab[id(i, p) * D.dim + id(j, q)] = out;
  };
  for (long i = 0; i < a.dim; ++i)
    for (long p = 0; p < b.dim; ++p)
      for (long j = 0; j < a.dim; ++j)
        for (long q = 0; q < b.dim; ++q) {
          put(D.left, a.left, b.left, i, p, j, q);
          put(D.right, a.right, b.right, i, p, j, q);
        }
  if (a.bar_unit && b.bar_unit) {
    QVec u(D.dim, Q(0));
    for (long i = 0; i < a.dim; ++i)
      for (long p = 0; p < b.dim; ++p) u[id(i, p)] = Q((*a.bar_unit)[i] * (*b.bar_unit)[p]);
    D.bar_unit = u;
  }
  D.validate();
  return D;
}

Dialgebra from_nspace(const Algebra& A, long n) {
  check(n >= 1, "MalformedInput", "n-space needs n >= 1");
  AxiomReport rep = check_algebra(A);
  check(rep.pass(), "NotAssociative", "n-space base algebra fails associativity/unit laws");
  Dialgebra D;
  long m = A.dim;
  D.dim = n * m;
  auto id = [&](long slot, long a) { return slot * m + a; };
  for (long s = 0; s < n; ++s)
    for (long a = 0; a < m; ++a)
      D.basis.push_back(A.basis[a] + (n > 1 ? "[" + std::to_string(s + 1) + "]" : ""));
  D.left.assign(D.dim * D.dim, SVec{});
  D.right.assign(D.dim * D.dim, SVec{});
  // (x -| y)_i = x_i (Σ_j y_j); on basis vectors x = e_a in slot s, y = e_b in
  // slot t this is the product ab placed in slot s, independent of t.
  for (long s = 0; s < n; ++s)
    for (long a = 0; a < m; ++a)
      for (long t = 0; t < n; ++t)
        for (long b = 0; b < m; ++b) {
          SVec lv, rv;
          for (const auto& e : A.bb(a, b)) {
            lv.push_back({id(s, e.idx), e.v});  // lands in slot s
            rv.push_back({id(t, e.idx), e.v});  // lands in slot t
          }
          D.left[id(s, a) * D.dim + id(t, b)] = lv;
          D.right[id(s, a) * D.dim + id(t, b)] = rv;
        }
  QVec u(D.dim, Q(0));
  for (long a = 0; a < m; ++a) u[id(0, a)] = A.unit[a];
  D.bar_unit = u;
  D.validate();
  return D;
}

}  // namespace rootleib
