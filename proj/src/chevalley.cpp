#include "rootleib/chevalley.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>

#include "rootleib/scan.hpp"

namespace rootleib {

VerifyLevel verify_level_of(const std::string& s) {
  if (s == "off") return VerifyLevel::Off;
  if (s == "sampled") return VerifyLevel::Sampled;
  if (s == "full") return VerifyLevel::Full;
  fail("MalformedInput", "unknown verify level '" + s + "'");
}

AlgebraOperator AlgebraOperator::then(const AlgebraOperator& inner) const {
  return AlgebraOperator{mat.mul(inner.mat), note + "*" + inner.note};
}

QVec ChevalleyAlgebra::e_vec(long root_id) const {
  QVec v(alg.dim, Q(0));
  v[e_index(root_id)] = 1;
  return v;
}

QVec ChevalleyAlgebra::h_vec(long i) const {
  QVec v(alg.dim, Q(0));
  v[h_index(i)] = 1;
  return v;
}

QVec ChevalleyAlgebra::coroot_vec(long root_id) const {
  QVec v(alg.dim, Q(0));
  for (long i = 0; i < rank; ++i) v[h_index(i)] = coroot[root_id][i];
  return v;
}

namespace {

SVec unit_sv(long i) { return SVec{{i, Q(1)}}; }

// ---- type A: matrix units inside sl(l+1) ----------------------------------

// Dense n x n rational matrix as a flat row-major vector.
using Sq = std::vector<Q>;

Sq basis_matrix(const RootSystem& rs, long nroots, long rank, long k) {
  long n = rank + 1;
  Sq m(n * n, Q(0));
  if (k < nroots) {
    auto [i, j] = rs.type_a_slots(k);
    m[i * n + j] = 1;
  } else {
    long i = k - nroots;
    m[i * n + i] = 1;
    m[(i + 1) * n + (i + 1)] = -1;
  }
  return m;
}

Sq commutator(const Sq& x, const Sq& y, long n) {
  Sq c(n * n, Q(0));
  for (long i = 0; i < n; ++i)
    for (long k = 0; k < n; ++k) {
      const Q& a = x[i * n + k];
      const Q& b = y[i * n + k];
      if (a == 0 && b == 0) continue;
      for (long j = 0; j < n; ++j) {
        if (a != 0) c[i * n + j] += Q(a * y[k * n + j]);
        if (b != 0) c[i * n + j] -= Q(b * x[k * n + j]);
      }
    }
  return c;
}

// Write a trace-zero matrix in the basis {E_ij (i != j), H_i = E_ii - E_jj
// with j = i+1}: off-diagonal entries are e-coordinates, and the diagonal
// decomposes through partial sums.
SVec decompose_sl(const RootSystem& rs, long nroots, long rank, const Sq& c) {
  long n = rank + 1;
  std::vector<std::pair<long, Q>> acc;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (i != j && c[i * n + j] != 0)
        acc.push_back({rs.type_a_root(i, j), Q(c[i * n + j])});
  Q run(0);
  for (long i = 0; i + 1 < n; ++i) {
    run += c[i * n + i];
    if (run != 0) acc.push_back({nroots + i, run});
  }
  run += c[(n - 1) * n + (n - 1)];
  invariant(run == 0, "matrix-unit bracket has nonzero trace");
  std::sort(acc.begin(), acc.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SVec out;
  for (auto& [idx, v] : acc) out.push_back({idx, v});
  return out;
}

std::vector<SVec> table_type_a(const RootSystem& rs, long nroots, long rank) {
  long dim = nroots + rank, n = rank + 1;
  std::vector<Sq> mats(dim);
  for (long k = 0; k < dim; ++k) mats[k] = basis_matrix(rs, nroots, rank, k);
  std::vector<SVec> table(dim * dim);
  for (long i = 0; i < dim; ++i)
    for (long j = 0; j < dim; ++j)
      table[i * dim + j] = decompose_sl(rs, nroots, rank, commutator(mats[i], mats[j], n));
  return table;
}

// ---- types D and E: sign cocycle on the root lattice -----------------------

// eps is bimultiplicative with eps(a_i,a_i) = -1, eps(a_i,a_j) = (-1)^(a_i,a_j)
// for i < j and 1 for i > j; then eps(a,b)eps(b,a) = (-1)^(a,b) on the whole
// lattice and eps(a,a) = -1 for every root.
struct Cocycle {
  std::vector<std::vector<int>> bit;  // parity of eps on simple pairs
  explicit Cocycle(const RootSystem& rs) {
    long l = rs.rank;
    bit.assign(l, std::vector<int>(l, 0));
    for (long i = 0; i < l; ++i) {
      bit[i][i] = 1;
      for (long j = i + 1; j < l; ++j)
        bit[i][j] = (rs.pairing(rs.simple_idx[i], rs.simple_idx[j]) % 2) ? 1 : 0;
    }
  }
  int sign(const IVec& a, const IVec& b) const {
    long parity = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] % 2 == 0) continue;
      for (size_t j = 0; j < b.size(); ++j)
        if (b[j] % 2 != 0) parity += bit[i][j];
    }
    return (parity % 2) ? -1 : 1;
  }
};

std::vector<SVec> table_cocycle(const RootSystem& rs, long nroots, long rank) {
  long dim = nroots + rank;
  Cocycle eps(rs);
  auto sigma = [&](long id) { return rs.height(id) > 0 ? 1 : -1; };
  std::vector<SVec> table(dim * dim);
  for (long a = 0; a < nroots; ++a) {
    const IVec& ca = rs.simple_coords_of[a];
    for (long b = 0; b < nroots; ++b) {
      if (b == rs.neg(a)) {
        SVec h;
        for (long i = 0; i < rank; ++i)
          if (ca[i] != 0) h.push_back({nroots + i, Q(ca[i])});
        table[a * dim + b] = h;
        continue;
      }
      long s = rs.sum_id(a, b);
      if (s < 0) continue;
      long c = sigma(a) * sigma(b) * sigma(s) *
               eps.sign(ca, rs.simple_coords_of[b]);
      table[a * dim + b] = SVec{{s, Q(c)}};
    }
    for (long i = 0; i < rank; ++i) {
      long p = rs.pairing(a, rs.simple_idx[i]);
      if (p == 0) continue;
      table[(nroots + i) * dim + a] = SVec{{a, Q(p)}};
      table[a * dim + (nroots + i)] = SVec{{a, Q(-p)}};
    }
  }
  return table;
}

// ---- build-time certification ----------------------------------------------

void certify_pairs(const ChevalleyAlgebra& ch) {
  const auto& L = ch.alg;
  const auto& rs = ch.rs;
  long nroots = ch.nroots, rank = ch.rank;
  for (long i = 0; i < L.dim; ++i)
    for (long j = 0; j <= i; ++j)
      check(svec_eq(L.bb(i, j), svec_scaled(L.bb(j, i), Q(-1))),
            "ConstructionFailure",
            "bracket not antisymmetric at (" + L.basis[i] + ", " + L.basis[j] + ")");
  for (long i = 0; i < rank; ++i)
    for (long j = 0; j < rank; ++j)
      check(L.bb(nroots + i, nroots + j).empty(), "ConstructionFailure",
            "Cartan generators do not commute");
  for (long i = 0; i < rank; ++i)
    for (long a = 0; a < nroots; ++a) {
      Q p(rs.pairing(a, rs.simple_idx[i]));
      SVec want = p == 0 ? SVec{} : SVec{{a, p}};
      check(svec_eq(L.bb(nroots + i, a), want), "ConstructionFailure",
            "[H" + std::to_string(i + 1) + ", " + L.basis[a] +
                "] is not <a,ai>*" + L.basis[a]);
    }
  for (long a = 0; a < nroots; ++a) {
    SVec want;
    for (long i = 0; i < rank; ++i)
      if (ch.coroot[a][i] != 0) want.push_back({nroots + i, ch.coroot[a][i]});
    check(svec_eq(L.bb(a, rs.neg(a)), want), "ConstructionFailure",
          "[" + L.basis[a] + ", " + L.basis[rs.neg(a)] + "] is not the coroot");
    for (long b = 0; b < nroots; ++b) {
      if (b == rs.neg(a)) continue;
      const SVec& v = L.bb(a, b);
      long s = rs.sum_id(a, b);
      if (s < 0) {
        check(v.empty(), "ConstructionFailure",
              "[" + L.basis[a] + ", " + L.basis[b] + "] should vanish");
      } else {
        bool ok = v.size() == 1 && v[0].idx == s && (v[0].v == 1 || v[0].v == -1);
        check(ok, "ConstructionFailure",
              "[" + L.basis[a] + ", " + L.basis[b] + "] is not ±" + L.basis[s]);
      }
    }
  }
}

void certify_jacobi(const LeibnizAlgebra& L, VerifyLevel level,
                    std::uint64_t seed, long samples) {
  if (level == VerifyLevel::Off) return;
  if (level == VerifyLevel::Full) {
    AxiomReport rep = check_leibniz(L);
    if (!rep.pass()) {
      const LawResult* f = rep.first_failure();
      fail("ConstructionFailure",
           "Jacobi fails at (" + std::to_string(f->witness->idx[0]) + "," +
               std::to_string(f->witness->idx[1]) + "," +
               std::to_string(f->witness->idx[2]) + "): " + f->witness->lhs +
               " != " + f->witness->rhs);
    }
    return;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> U(0, L.dim - 1);
  for (long s = 0; s < samples; ++s) {
    long a = U(rng), b = U(rng), c = U(rng);
    SVec lhs = L.bracket_sv(unit_sv(a), L.bb(b, c));
    SVec rhs = svec_axpy(L.bracket_sv(L.bb(a, b), unit_sv(c)), Q(-1),
                         L.bracket_sv(L.bb(a, c), unit_sv(b)));
    check(svec_eq(lhs, rhs), "ConstructionFailure",
          "sampled Jacobi fails at (" + std::to_string(a) + "," +
              std::to_string(b) + "," + std::to_string(c) + ")");
  }
}

std::string table_digest(const LeibnizAlgebra& L) {
  std::ostringstream os;
  for (long i = 0; i < L.dim; ++i)
    for (long j = 0; j < L.dim; ++j)
      for (const auto& e : L.bb(i, j))
        os << i << ',' << j << ',' << e.idx << ',' << rational_str(e.v) << ';';
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(os.str())));
  return std::string(buf);
}

}  // namespace

ChevalleyAlgebra build_chevalley(const RootSystem& rs, VerifyLevel level,
                                 std::uint64_t seed, long samples) {
  ChevalleyAlgebra ch;
  ch.rs = rs;
  ch.nroots = rs.nroots();
  ch.rank = rs.rank;
  long dim = ch.nroots + ch.rank;

  std::vector<std::string> names(dim);
  for (long a = 0; a < ch.nroots; ++a) names[a] = "e(" + rs.name(a) + ")";
  for (long i = 0; i < ch.rank; ++i) names[ch.nroots + i] = "H" + std::to_string(i + 1);

  ch.coroot.resize(ch.nroots);
  for (long a = 0; a < ch.nroots; ++a) {
    QVec cv(ch.rank, Q(0));
    for (long i = 0; i < ch.rank; ++i) cv[i] = Q(rs.simple_coords_of[a][i]);
    ch.coroot[a] = cv;
  }

  ch.alg.dim = dim;
  ch.alg.basis = names;
  ch.alg.table = rs.type == SLType::A ? table_type_a(rs, ch.nroots, ch.rank)
                                      : table_cocycle(rs, ch.nroots, ch.rank);
  ch.alg.validate();

  certify_pairs(ch);
  certify_jacobi(ch.alg, level, seed, samples);
  ch.digest = table_digest(ch.alg);
  return ch;
}

AlgebraOperator exp_ad(const LeibnizAlgebra& L, const QVec& x, const Q& t,
                       bool check_automorphism) {
  Mat A = ad_op(L, x);
  {
    Mat p = A;
    long k = 1;
    while (!p.is_zero()) {
      check(++k <= L.dim + 1, "NotNilpotent",
            "(ad x)^" + std::to_string(L.dim + 1) + " != 0");
      p = p.mul(A);
    }
  }
  Mat result = Mat::identity(L.dim);
  Mat term = Mat::identity(L.dim);
  for (long m = 1;; ++m) {
    term = A.mul(term).scaled(Q(t / m));
    if (term.is_zero()) break;
    result = result.plus(term);
  }
  if (check_automorphism) {
    std::vector<QVec> img(L.dim);
    for (long i = 0; i < L.dim; ++i) img[i] = result.col(i);
    for (long i = 0; i < L.dim; ++i)
      for (long j = 0; j < L.dim; ++j) {
        QVec lhs = result.apply(to_qvec(L.bb(i, j), L.dim));
        QVec rhs = L.bracket(img[i], img[j]);
        invariant(lhs == rhs, "exp_ad does not preserve the bracket");
      }
  }
  return AlgebraOperator{result, "exp(ad t*x)"};
}

AlgebraOperator n_operator(const LeibnizAlgebra& L, const QVec& e,
                           const QVec& f, const Q& t, const std::string& note) {
  check(t != 0, "ZeroParameter", "n(t) needs t != 0");
  AlgebraOperator outer = exp_ad(L, e, t);
  AlgebraOperator middle = exp_ad(L, f, Q(Q(-1) / t));
  Mat m = outer.mat.mul(middle.mat).mul(outer.mat);
  invariant(rank_of(m) == L.dim, "n-operator is singular");
  return AlgebraOperator{m, note.empty() ? "n(t)" : note};
}

AlgebraOperator n_operator(const ChevalleyAlgebra& ch, long root_id, const Q& t) {
  return n_operator(ch.alg, ch.e_vec(root_id), ch.e_vec(ch.rs.neg(root_id)), t,
                    "n_{" + ch.rs.name(root_id) + "}(" + q_str(t) + ")");
}

AlgebraOperator h_operator(const LeibnizAlgebra& L, const QVec& e,
                           const QVec& f, const Q& t, const std::string& note) {
  check(t != 0, "ZeroParameter", "h(t) needs t != 0");
  AlgebraOperator nt = n_operator(L, e, f, t);
  AlgebraOperator n1 = n_operator(L, e, f, Q(1));
  auto inv = inverse(n1.mat);
  invariant(inv.has_value(), "n(1) is singular");
  return AlgebraOperator{nt.mat.mul(*inv), note.empty() ? "h(t)" : note};
}

AlgebraOperator h_operator(const ChevalleyAlgebra& ch, long root_id, const Q& t) {
  return h_operator(ch.alg, ch.e_vec(root_id), ch.e_vec(ch.rs.neg(root_id)), t,
                    "h_{" + ch.rs.name(root_id) + "}(" + q_str(t) + ")");
}

}  // namespace rootleib
