#include "rootleib/recognition.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace rootleib {

namespace {

SVec unit_sv(long i) { return SVec{{i, Q(1)}}; }

QVec unit_qv(long n, long k) {
  QVec v(n, Q(0));
  v[k] = 1;
  return v;
}

bool qv_zero(const QVec& v) {
  for (const Q& x : v)
    if (x != 0) return false;
  return true;
}

void qv_axpy(QVec& a, const Q& c, const QVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += Q(c * b[i]);
}

QVec qv_scaled(QVec v, const Q& c) {
  for (Q& x : v) x *= c;
  return v;
}

QVec qv_sub(const QVec& a, const QVec& b) {
  QVec out(a);
  for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

// idx(i,j) = i*dim + j with the loops ordered so entries come out sorted.
SVec tensor_sv(const QVec& x, const QVec& y, long dim) {
  SVec out;
  for (long i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (long j = 0; j < dim; ++j)
      if (y[j] != 0) out.push_back({i * dim + j, Q(x[i] * y[j])});
  }
  return out;
}

Rref col_span(const Mat& m) {
  std::vector<QVec> cols;
  cols.reserve(m.cols);
  for (long j = 0; j < m.cols; ++j) cols.push_back(m.col(j));
  return span_of(cols, m.rows);
}

// act[i][k] = column k of the operator x -> -[x, h_i].
std::vector<std::vector<SVec>> cartan_action(const LeibnizAlgebra& L,
                                             const std::vector<QVec>& hs) {
  std::vector<std::vector<SVec>> act(hs.size(), std::vector<SVec>(L.dim));
  for (size_t i = 0; i < hs.size(); ++i) {
    SVec h = to_svec(hs[i]);
    for (long k = 0; k < L.dim; ++k)
      act[i][k] = svec_scaled(L.bracket_sv(unit_sv(k), h), Q(-1));
  }
  return act;
}

// Column basis of {x : -[x, h_i] = w_i x for all i}, via the stacked kernel.
Mat weight_space(const LeibnizAlgebra& L,
                 const std::vector<std::vector<SVec>>& act, const QVec& w) {
  long nh = static_cast<long>(act.size());
  std::vector<SVec> cols(L.dim);
  for (long k = 0; k < L.dim; ++k) {
    SVec stacked;
    for (long i = 0; i < nh; ++i) {
      SVec c = svec_axpy(act[i][k], Q(-w[i]), unit_sv(k));
      for (const auto& e : c) stacked.push_back({i * L.dim + e.idx, e.v});
    }
    cols[k] = std::move(stacked);
  }
  std::vector<SVec> ks = kernel_basis(SparseMat::from_cols(nh * L.dim, cols));
  std::vector<QVec> qcols;
  qcols.reserve(ks.size());
  for (const SVec& v : ks) qcols.push_back(to_qvec(v, L.dim));
  return Mat::from_cols(L.dim, qcols);
}

// The unique linear map sending each pair's first member to its second.
// Consistency of the assignment is decided by echelonizing the relation rows
// [v | w]: a pivot in the w-block means some dependency among the v's acts
// nontrivially on the w's.  The v's must span their space.
Mat linear_map_from_pairs(long vdim, long wdim,
                          const std::vector<std::pair<QVec, QVec>>& gens,
                          const std::string& kind, const std::string& what) {
  std::vector<SVec> rows;
  rows.reserve(gens.size());
  for (const auto& [v, w] : gens) {
    SVec row = to_svec(v);
    for (long k = 0; k < wdim; ++k)
      if (w[k] != 0) row.push_back({vdim + k, w[k]});
    rows.push_back(std::move(row));
  }
  Rref rr = rref_rows(std::move(rows), vdim + wdim);
  for (long p : rr.pivots)
    check(p < vdim, kind, what + " is inconsistent on overlapping generators");

  std::vector<QVec> vcols, wcols;
  std::vector<QVec> picked;
  for (const auto& [v, w] : gens) {
    if (static_cast<long>(vcols.size()) == vdim) break;
    if (span_of(picked, vdim).contains(to_svec(v))) continue;
    picked.push_back(v);
    vcols.push_back(v);
    wcols.push_back(w);
  }
  check(static_cast<long>(vcols.size()) == vdim, kind,
        what + " generators do not span the domain");
  std::optional<Mat> vinv = inverse(Mat::from_cols(vdim, vcols));
  invariant(vinv.has_value(), "selected generator columns must be invertible");
  Mat phi = Mat::from_cols(wdim, wcols).mul(*vinv);
  for (const auto& [v, w] : gens)
    invariant(phi.apply(v) == w, "solved map must reproduce every generator");
  return phi;
}

std::string slot_nm(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

// ---- embeddings ------------------------------------------------------------

Embedding adjoint_embedding(const ChevalleyAlgebra& g) {
  Embedding emb;
  for (long b = 0; b < g.nroots; ++b) emb.e.push_back(g.e_vec(b));
  for (long i = 0; i < g.rank; ++i) emb.h.push_back(g.h_vec(i));
  return emb;
}

Embedding sl_embedding(const MatrixLeibnizAlgebra& sl, const RootSystem& rs) {
  check(!sl.full, "MalformedInput", "expected the trace-zero matrix algebra");
  check(rs.type == SLType::A && rs.rank == sl.n - 1, "MalformedInput",
        "matrix algebra on n slots is graded by the type A system of rank n-1");
  check(sl.D.bar_unit.has_value(), "MissingBarUnit",
        "embedding the matrix units requires a bar-unit");
  const QVec& u = *sl.D.bar_unit;
  Embedding emb;
  for (long b = 0; b < rs.nroots(); ++b) {
    auto [i, j] = rs.type_a_slots(b);
    emb.e.push_back(sl.elem(i, j, u));
  }
  for (long i = 0; i + 1 < sl.n; ++i) {
    SVec gl;
    for (long a = 0; a < sl.D.dim; ++a)
      if (u[a] != 0) gl.push_back({sl.gl_coord(i, i, a), u[a]});
    for (long a = 0; a < sl.D.dim; ++a)
      if (u[a] != 0) gl.push_back({sl.gl_coord(i + 1, i + 1, a), Q(-u[a])});
    emb.h.push_back(sl.carrier_coords(gl));
  }
  return emb;
}

Embedding tensor_embedding(const ChevalleyAlgebra& g, const Dialgebra& R) {
  check(R.bar_unit.has_value(), "MissingBarUnit",
        "the tensor embedding requires a bar-unit");
  const QVec& u = *R.bar_unit;
  long d = R.dim, td = g.alg.dim * d;
  Embedding emb;
  for (long b = 0; b < g.nroots; ++b) {
    QVec v(td, Q(0));
    for (long a = 0; a < d; ++a) v[g.e_index(b) * d + a] = u[a];
    emb.e.push_back(std::move(v));
  }
  for (long i = 0; i < g.rank; ++i) {
    QVec v(td, Q(0));
    for (long a = 0; a < d; ++a) v[g.h_index(i) * d + a] = u[a];
    emb.h.push_back(std::move(v));
  }
  return emb;
}

Embedding steinberg_embedding(const SteinbergModel& S, const RootSystem& rs) {
  check(rs.type == SLType::A && rs.rank == S.n - 1, "MalformedInput",
        "the Steinberg model on n slots is graded by the type A system of rank n-1");
  check(S.base.D.bar_unit.has_value(), "MissingBarUnit",
        "the Steinberg generator lift requires a bar-unit");
  const QVec& u = *S.base.D.bar_unit;
  Embedding emb;
  for (long b = 0; b < rs.nroots(); ++b) {
    auto [i, j] = rs.type_a_slots(b);
    emb.e.push_back(S.v(i, j, u));
  }
  for (long i = 0; i + 1 < S.n; ++i)
    emb.h.push_back(S.ext.total.bracket(S.v(i, i + 1, u), S.v(i + 1, i, u)));
  return emb;
}

// ---- grading ----------------------------------------------------------------

GradedDecomposition verify_grading(const LeibnizAlgebra& L, const Embedding& emb,
                                   const RootSystem& rs) {
  L.validate();
  long nroots = rs.nroots(), rank = rs.rank, mdim = nroots + rank;
  check(static_cast<long>(emb.e.size()) == nroots &&
            static_cast<long>(emb.h.size()) == rank,
        "MalformedInput",
        "embedding needs one e per root and one h per simple root");
  for (const QVec& v : emb.e)
    check(static_cast<long>(v.size()) == L.dim, "MalformedInput",
          "embedded vector length differs from the algebra dimension");
  for (const QVec& v : emb.h)
    check(static_cast<long>(v.size()) == L.dim, "MalformedInput",
          "embedded vector length differs from the algebra dimension");

  GradedDecomposition gd{rs, build_chevalley(rs, VerifyLevel::Off), L, emb, {}};

  // The embedded vectors must be independent and close under the model table.
  std::vector<QVec> mv(mdim);
  for (long b = 0; b < nroots; ++b) mv[b] = emb.e[b];
  for (long i = 0; i < rank; ++i) mv[nroots + i] = emb.h[i];
  check(span_of(mv, L.dim).rank() == mdim, "NotASubalgebra",
        "embedded model vectors are linearly dependent");
  std::vector<SVec> msv(mdim);
  for (long k = 0; k < mdim; ++k) msv[k] = to_svec(mv[k]);
  for (long p = 0; p < mdim; ++p)
    for (long q = 0; q < mdim; ++q) {
      SVec want;
      for (const auto& e : gd.g.alg.bb(p, q))
        want = svec_axpy(want, e.v, msv[e.idx]);
      if (!svec_eq(L.bracket_sv(msv[p], msv[q]), want))
        fail("NotASubalgebra",
             "bracket of embedded " + gd.g.alg.basis[p] + " and " +
                 gd.g.alg.basis[q] + " does not match the model table");
    }

  // Weight spaces of the embedded Cartan elements.
  std::vector<std::vector<SVec>> act = cartan_action(L, emb.h);
  gd.space.reserve(nroots + 1);
  long total = 0;
  for (long b = 0; b < nroots; ++b) {
    QVec w(rank);
    for (long i = 0; i < rank; ++i) w[i] = Q(rs.pairing(b, rs.simple_idx[i]));
    gd.space.push_back(weight_space(L, act, w));
    total += gd.space.back().cols;
  }
  gd.space.push_back(weight_space(L, act, QVec(rank, Q(0))));
  total += gd.space.back().cols;
  std::vector<QVec> allcols;
  allcols.reserve(total);
  for (const Mat& m : gd.space)
    for (long c = 0; c < m.cols; ++c) allcols.push_back(m.col(c));
  long jrank = span_of(allcols, L.dim).rank();
  check(total == L.dim && jrank == L.dim, "EigenspaceMismatch",
        "weight spaces have total dimension " + std::to_string(total) +
            " and joint rank " + std::to_string(jrank) +
            " in an algebra of dimension " + std::to_string(L.dim));

  for (long b = 0; b < nroots; ++b) {
    check(gd.space[b].cols >= 1, "EigenspaceMismatch",
          "weight space of " + rs.name(b) + " is zero");
    check(col_span(gd.space[b]).contains(to_svec(emb.e[b])), "EigenspaceMismatch",
          "embedded root vector for " + rs.name(b) +
              " is not in its weight space");
  }

  // The zero part must be exactly the span of all [L_a, L_{-a}].
  std::vector<QVec> products;
  for (long b = 0; b < nroots; ++b) {
    long nb = rs.neg(b);
    for (long x = 0; x < gd.space[b].cols; ++x) {
      QVec ex = gd.space[b].col(x);
      for (long y = 0; y < gd.space[nb].cols; ++y)
        products.push_back(L.bracket(ex, gd.space[nb].col(y)));
    }
  }
  Rref got = span_of(products, L.dim);
  Rref want = col_span(gd.zero_space());
  check(got == want, "ZeroConditionFailure",
        "the span of all [L_a, L_{-a}] has dimension " +
            std::to_string(got.rank()) + " but the zero weight space has " +
            std::to_string(want.rank()));

  check(is_perfect(L), "NotPerfect",
        "a graded algebra must equal its derived algebra");
  return gd;
}

// ---- universal central extension lift ---------------------------------------

Embedding uce_embedding(const CentralExtension& ext, const GradedDecomposition& gd) {
  const LeibnizAlgebra& L = gd.L;
  check(ext.projection.rows == L.dim && ext.projection.cols == ext.total.dim,
        "MalformedInput", "the extension does not project onto the graded algebra");
  long nroots = gd.rs.nroots(), rank = gd.rs.rank;
  long mdim = nroots + rank, udim = ext.total.dim;

  std::vector<QVec> mv(mdim);
  for (long b = 0; b < nroots; ++b) mv[b] = gd.emb.e[b];
  for (long i = 0; i < rank; ++i) mv[nroots + i] = gd.emb.h[i];

  // Naive section: any preimage of each model vector.
  std::vector<QVec> sig(mdim);
  for (long k = 0; k < mdim; ++k) {
    std::optional<QVec> s0 = solve(ext.projection, mv[k]);
    check(s0.has_value(), "ConstructionFailure",
          "the extension misses an embedded model vector");
    sig[k] = std::move(*s0);
  }

  std::vector<SVec> ker = kernel_basis(ext.projection);
  long kd = static_cast<long>(ker.size());
  std::vector<QVec> kcols;
  kcols.reserve(kd);
  for (const SVec& v : ker) kcols.push_back(to_qvec(v, udim));
  Mat Z = Mat::from_cols(udim, kcols);

  // Defect of the section at each model pair: the lifted bracket minus the
  // table combination of lifted vectors.  It is central, and a central
  // correction c_k of the section must satisfy sum_k N^k_pq c_k = defect_pq.
  std::vector<QVec> defc(mdim * mdim);
  for (long p = 0; p < mdim; ++p) {
    for (long q = 0; q < mdim; ++q) {
      QVec v = ext.cls(tensor_sv(mv[p], mv[q], L.dim));
      QVec want(udim, Q(0));
      for (const auto& e : gd.g.alg.bb(p, q)) qv_axpy(want, e.v, sig[e.idx]);
      QVec d = qv_sub(v, want);
      if (kd == 0) {
        check(qv_zero(d), "ConstructionFailure",
              "the lifted copy fails to close and the extension has no "
              "central slack");
      } else {
        invariant(qv_zero(ext.projection.apply(d)),
                  "section defect must be central");
        defc[p * mdim + q] = coords_in(Z, d);
      }
    }
  }

  if (kd > 0) {
    Mat M(mdim * mdim, mdim);
    for (long p = 0; p < mdim; ++p)
      for (long q = 0; q < mdim; ++q)
        for (const auto& e : gd.g.alg.bb(p, q)) M.at(p * mdim + q, e.idx) = e.v;
    for (long m = 0; m < kd; ++m) {
      QVec b(mdim * mdim, Q(0));
      for (long pq = 0; pq < mdim * mdim; ++pq) b[pq] = defc[pq][m];
      std::optional<QVec> y = solve(M, b);
      check(y.has_value(), "ConstructionFailure",
            "no central correction closes the lifted copy");
      QVec zc = Z.col(m);
      for (long k = 0; k < mdim; ++k)
        if ((*y)[k] != 0) qv_axpy(sig[k], (*y)[k], zc);
    }
    for (long k = 0; k < mdim; ++k)
      invariant(ext.projection.apply(sig[k]) == mv[k],
                "corrected section must still project onto the model");
  }

  Embedding out;
  out.e.assign(sig.begin(), sig.begin() + nroots);
  out.h.assign(sig.begin() + nroots, sig.end());
  return out;
}

// ---- charts ------------------------------------------------------------------

QVec CoordinateChart::embed(long root_id, const QVec& r) const {
  return to_root[root_id].apply(r);
}

QVec CoordinateChart::extract(long root_id, const QVec& x) const {
  std::optional<QVec> r = solve(to_root[root_id], x);
  if (!r)
    fail("ValueOutsideRootSpace", "element does not lie in the root space of "
                                  "chart slot " + std::to_string(root_id));
  return *r;
}

CoordinateChart build_chart(const GradedDecomposition& gd, long base_root,
                            long alt_words) {
  const RootSystem& rs = gd.rs;
  const LeibnizAlgebra& L = gd.L;
  long nroots = rs.nroots();
  check(base_root >= 0 && base_root < nroots, "MalformedInput",
        "base root id out of range");

  CoordinateChart ch;
  ch.base_root = base_root;
  ch.R_dim = gd.space[base_root].cols;
  ch.unit = coords_in(gd.space[base_root], gd.emb.e[base_root]);
  ch.to_root.assign(nroots, Mat());
  ch.sign.assign(nroots, Q(0));
  ch.word.assign(nroots, {});

  // One operator per simple root; every chart map is a product of these.
  std::vector<Mat> simple_n(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    long s = rs.simple_idx[i];
    simple_n[i] = n_operator(L, gd.emb.e[s], gd.emb.e[rs.neg(s)], Q(1),
                             "n_{" + rs.name(s) + "}(1)")
                      .mat;
  }
  // Words act by successive operator applications; the full dim x dim
  // product is never materialized.
  auto word_vec = [&](const std::vector<int>& w, QVec v) {
    for (int i : w) v = simple_n[i].apply(v);
    return v;
  };
  auto word_mat = [&](const std::vector<int>& w, Mat m) {
    for (int i : w) m = simple_n[i].mul(m);
    return m;
  };
  auto word_target = [&](long from, const std::vector<int>& w) {
    long cur = from;
    for (int i : w) cur = rs.reflect(cur, i);
    return cur;
  };
  // The scalar with u = eps e_to, required to be an exact sign.
  auto read_sign = [&](const QVec& u, long to, const std::string& what) -> Q {
    const QVec& v = gd.emb.e[to];
    long piv = -1;
    for (long k = 0; k < L.dim; ++k)
      if (v[k] != 0) {
        piv = k;
        break;
      }
    invariant(piv >= 0, "embedded model vector must be nonzero");
    Q eps(u[piv] / v[piv]);
    for (long k = 0; k < L.dim; ++k)
      if (u[k] != eps * v[k])
        fail("SignNotUnit", what + " is not proportional to the root vector "
                            "for " + rs.name(to));
    check(eps == 1 || eps == -1, "SignNotUnit",
          "normalizing scalar for " + rs.name(to) + " is " + q_str(eps) +
              ", not a sign");
    return eps;
  };

  for (long b = 0; b < nroots; ++b) {
    std::vector<int> w =
        b == base_root ? std::vector<int>{} : word_mapping_root(rs, base_root, b);
    invariant(word_target(base_root, w) == b, "chart word must land on its root");
    Q eps = read_sign(word_vec(w, gd.emb.e[base_root]), b,
                      "word image of the root vector for " + rs.name(base_root));
    Mat lam = word_mat(w, gd.space[base_root]).scaled(Q(1) / eps);
    check(gd.space[b].cols == ch.R_dim, "NonInvertibleRestriction",
          "root spaces of " + rs.name(base_root) + " and " + rs.name(b) +
              " have different dimensions");
    Rref sp = col_span(gd.space[b]);
    for (long c = 0; c < lam.cols; ++c)
      check(sp.contains(to_svec(lam.col(c))), "NonInvertibleRestriction",
            "chart image leaves the root space of " + rs.name(b));
    check(rank_of(lam) == ch.R_dim, "NonInvertibleRestriction",
          "chart restriction to the root space of " + rs.name(b) +
              " is singular");
    ch.to_root[b] = std::move(lam);
    ch.sign[b] = eps;
    ch.word[b] = std::move(w);
  }

  // Inverse coherence: the reverse word's normalized map undoes the chart.
  for (long b = 0; b < nroots; ++b) {
    if (b == base_root) continue;
    std::vector<int> back = word_mapping_root(rs, b, base_root);
    Q epsb = read_sign(word_vec(back, gd.emb.e[b]), base_root,
                       "word image of the root vector for " + rs.name(b));
    if (!(word_mat(back, ch.to_root[b]).scaled(Q(1) / epsb) ==
          gd.space[base_root]))
      fail("ChartIncoherence",
           "the chart maps between " + rs.name(base_root) + " and " +
               rs.name(b) + " do not invert each other");
  }

  if (alt_words > 0) {
    // Composition coherence along sampled A2 pairs.
    A2PairSet ps = enumerate_a2_pairs(rs);
    long npairs = static_cast<long>(ps.pairs.size());
    long take = std::min(alt_words, npairs);
    for (long j = 0; j < take; ++j) {
      const A2Pair& p = ps.pairs[(j * npairs) / take];
      std::vector<int> w = word_mapping_root(rs, p.beta, p.gamma);
      Q eps = read_sign(word_vec(w, gd.emb.e[p.beta]), p.gamma,
                        "word image of the root vector for " + rs.name(p.beta));
      if (!(word_mat(w, ch.to_root[p.beta]).scaled(Q(1) / eps) ==
            ch.to_root[p.gamma]))
        fail("ChartIncoherence",
             "composing the chart for " + rs.name(p.beta) + " with the map to " +
                 rs.name(p.gamma) + " disagrees with the direct chart");
    }

    // Independence of the chosen word.
    for (long b = 0; b < nroots; ++b) {
      const std::vector<int>& canon = ch.word[b];
      std::vector<std::vector<int>> alts;
      auto push = [&](std::vector<int> w) {
        if (w != canon && word_target(base_root, w) == b)
          alts.push_back(std::move(w));
      };
      for (int i = 0; i < rs.rank && static_cast<long>(alts.size()) < alt_words;
           ++i) {
        if (!canon.empty() && canon[0] == i) continue;
        std::vector<int> w{i};
        std::vector<int> rest =
            word_mapping_root(rs, rs.reflect(base_root, i), b);
        w.insert(w.end(), rest.begin(), rest.end());
        push(std::move(w));
      }
      for (int j = 0; j < rs.rank && static_cast<long>(alts.size()) < alt_words;
           ++j)
        if (rs.pairing(base_root, rs.simple_idx[j]) == 0) {
          std::vector<int> w{j};
          w.insert(w.end(), canon.begin(), canon.end());
          push(std::move(w));
          break;
        }
      if (static_cast<long>(alts.size()) < alt_words) {
        std::vector<int> w{0, 0};
        w.insert(w.end(), canon.begin(), canon.end());
        push(std::move(w));
      }
      for (const std::vector<int>& w : alts) {
        Q eps = read_sign(word_vec(w, gd.emb.e[base_root]), b,
                          "alternative word image of the root vector for " +
                              rs.name(base_root));
        if (!(word_mat(w, gd.space[base_root]).scaled(Q(1) / eps) ==
              ch.to_root[b]))
          fail("ChartIncoherence", "two reflection words from " +
                                       rs.name(base_root) + " to " + rs.name(b) +
                                       " induce different charts");
      }
    }

    // Sampled operator equivariance: n maps e_beta(r) to (n e_beta)(r).
    for (long k = 0; k < alt_words; ++k) {
      int i = static_cast<int>(k % rs.rank);
      long beta = (3 + 5 * k) % nroots;
      long gamma = rs.reflect(beta, i);
      Q c = read_sign(simple_n[i].apply(gd.emb.e[beta]), gamma,
                      "reflection image of the root vector for " + rs.name(beta));
      if (!(simple_n[i].mul(ch.to_root[beta]) == ch.to_root[gamma].scaled(c)))
        fail("ChartIncoherence",
             "a simple reflection operator does not carry the chart of " +
                 rs.name(beta) + " onto the chart of " + rs.name(gamma));
    }
  }

  return ch;
}

// ---- product recovery --------------------------------------------------------

namespace {

// Coefficient c with [e_beta, e_gamma] = c e_{beta+gamma} in the model.
Q pair_coeff(const ChevalleyAlgebra& g, long b, long c) {
  long s = g.rs.sum_id(b, c);
  const SVec& t = g.alg.bb(g.e_index(b), g.e_index(c));
  invariant(s >= 0 && t.size() == 1 && t[0].idx == g.e_index(s),
            "model bracket at an A2 pair must be a multiple of e_{beta+gamma}");
  return t[0].v;
}

// m[x*d+y] with [e_beta(r_x), e_gamma(r_y)] = [e_beta, e_gamma](m[x*d+y]).
std::vector<QVec> product_table(const GradedDecomposition& gd,
                                const CoordinateChart& ch, long b, long c) {
  long s = gd.rs.sum_id(b, c);
  Q coeff = pair_coeff(gd.g, b, c);
  long d = ch.R_dim;
  std::vector<QVec> m(d * d);
  for (long x = 0; x < d; ++x) {
    QVec ex = ch.to_root[b].col(x);
    for (long y = 0; y < d; ++y) {
      QVec z = gd.L.bracket(ex, ch.to_root[c].col(y));
      if (coeff != 1)
        for (Q& e : z) e /= coeff;
      m[x * d + y] = ch.extract(s, z);
    }
  }
  return m;
}

}  // namespace

RecoveredDialgebra recover_products(const GradedDecomposition& gd,
                                    const CoordinateChart& chart,
                                    long cross_checks) {
  const RootSystem& rs = gd.rs;
  check(rs.rank >= 2, "MalformedInput", "product recovery needs rank >= 2");
  long a1 = rs.simple_idx[0], a2 = rs.simple_idx[1], d = chart.R_dim;
  A2PairSet ps = enumerate_a2_pairs(rs);

  RecoveredDialgebra rd;
  rd.pos_beta = a1;
  rd.pos_gamma = a2;
  std::vector<QVec> left = product_table(gd, chart, a1, a2);
  std::vector<QVec> right(d * d);
  if (ps.negative_count > 0) {
    // [e_beta(r), e_gamma(s)] = [e_beta, e_gamma](s |- r) on the second class.
    rd.neg_beta = a2;
    rd.neg_gamma = a1;
    std::vector<QVec> neg = product_table(gd, chart, a2, a1);
    for (long x = 0; x < d; ++x)
      for (long y = 0; y < d; ++y) right[y * d + x] = neg[x * d + y];
  } else {
    // One pair class: |- is forced to be the flip of -|.
    rd.right_is_flip = true;
    for (long x = 0; x < d; ++x)
      for (long y = 0; y < d; ++y) right[x * d + y] = left[y * d + x];
  }

  rd.R.dim = d;
  for (long i = 0; i < d; ++i) rd.R.basis.push_back("r" + std::to_string(i));
  rd.R.left.resize(d * d);
  rd.R.right.resize(d * d);
  for (long k = 0; k < d * d; ++k) {
    rd.R.left[k] = to_svec(left[k]);
    rd.R.right[k] = to_svec(right[k]);
  }
  rd.R.bar_unit = chart.unit;
  rd.R.validate();

  // The tables must not depend on which pair of each class is solved.
  auto replay = [&](long k) {
    const A2Pair& p = ps.pairs[k];
    std::vector<QVec> m = product_table(gd, chart, p.beta, p.gamma);
    for (long x = 0; x < d; ++x)
      for (long y = 0; y < d; ++y) {
        const QVec& wanted = ps.cls[k] == PairClass::Positive ? left[x * d + y]
                                                              : right[y * d + x];
        if (m[x * d + y] != wanted)
          fail("ProductMismatch",
               "pair (" + rs.name(p.beta) + ", " + rs.name(p.gamma) +
                   ") yields a different product at basis indices (" +
                   std::to_string(x) + "," + std::to_string(y) + ")");
      }
  };
  std::vector<long> pos_idx, neg_idx;
  for (long k = 0; k < static_cast<long>(ps.pairs.size()); ++k) {
    const A2Pair& p = ps.pairs[k];
    if (ps.cls[k] == PairClass::Positive) {
      if (p.beta != a1 || p.gamma != a2) pos_idx.push_back(k);
    } else if (p.beta != a2 || p.gamma != a1) {
      neg_idx.push_back(k);
    }
  }
  auto pick = [&](const std::vector<long>& v) {
    std::vector<long> out;
    long want = std::min<long>(cross_checks, static_cast<long>(v.size()));
    for (long j = 0; j < want; ++j)
      out.push_back(v[(j * static_cast<long>(v.size())) / want]);
    return out;
  };
  for (long k : pick(pos_idx)) replay(k);
  for (long k : pick(neg_idx)) replay(k);
  return rd;
}

CheckReport check_recovered_axioms(const RecoveredDialgebra& rd,
                                   const RootSystem& rs) {
  CheckReport rep;
  rep.subject = "recovered dialgebra";
  bool has_unit = rd.R.bar_unit.has_value();
  rep.add("bar-unit present", has_unit);
  bool lu = has_unit, ru = has_unit;
  if (has_unit)
    for (long i = 0; i < rd.R.dim; ++i) {
      QVec b = unit_qv(rd.R.dim, i);
      if (rd.R.left_mul(b, *rd.R.bar_unit) != b) lu = false;
      if (rd.R.right_mul(*rd.R.bar_unit, b) != b) ru = false;
    }
  rep.add("r -| 1 = r", lu);
  rep.add("1 |- r = r", ru);
  if (rs.rank >= 3)
    rep.merge(check_associative(rd.R));
  else
    rep.merge(check_alternative(rd.R));
  if (rs.type != SLType::A) rep.merge(is_commutative(rd.R));
  return rep;
}

// ---- structural consequences ---------------------------------------------------

CheckReport check_zero_part_action(const GradedDecomposition& gd,
                                   const CoordinateChart& chart,
                                   const RecoveredDialgebra& rd) {
  const RootSystem& rs = gd.rs;
  long d = chart.R_dim, nroots = rs.nroots();
  bool full = rs.type != SLType::A;
  std::vector<QVec> params;
  if (full)
    for (long a = 0; a < d; ++a) params.push_back(unit_qv(d, a));
  else
    params.push_back(chart.unit);

  long count = 0;
  bool ok = true;
  std::string detail;
  for (long a = 0; a < nroots && ok; ++a) {
    long na = rs.neg(a);
    for (const QVec& r : params) {
      if (!ok) break;
      QVec er = chart.embed(a, r);
      for (const QVec& s : params) {
        if (!ok) break;
        QVec x = gd.L.bracket(er, chart.embed(na, s));
        for (long b = 0; b < nroots && ok; ++b) {
          Q pv(rs.pairing(b, a));
          for (long t = 0; t < d; ++t) {
            QVec lhs =
                qv_scaled(gd.L.bracket(chart.to_root[b].col(t), x), Q(-1));
            QVec m = rd.R.left_mul(rd.R.left_mul(unit_qv(d, t), r), s);
            QVec rhs = qv_scaled(chart.embed(b, m), pv);
            if (lhs != rhs) {
              ok = false;
              detail = "fails at alpha=" + rs.name(a) + ", beta=" + rs.name(b) +
                       ", basis t=" + std::to_string(t);
              break;
            }
            ++count;
          }
        }
      }
    }
  }
  if (ok)
    detail = std::to_string(count) + " instances, " +
             (full ? "all basis parameters" : "bar-unit parameters");
  CheckReport rep;
  rep.subject = "zero-part action";
  rep.add("-[e_b(t), [e_a(r), e_{-a}(s)]] = <b,a^vee> e_b((t -| r) -| s)", ok,
          detail);
  return rep;
}

TensorCover build_tensor_cover(const GradedDecomposition& gd,
                               const CoordinateChart& chart,
                               const RecoveredDialgebra& rd) {
  check(gd.rs.type != SLType::A, "MalformedInput",
        "the tensor cover applies to types D and E; type A has the Steinberg "
        "cover");
  TensorCover out;
  out.model = build_tensor_algebra(gd.g, rd.R);
  const RootSystem& rs = gd.rs;
  long ldim = gd.L.dim, tdim = out.model.dim, d = rd.R.dim;
  long nroots = rs.nroots();

  std::vector<std::pair<QVec, QVec>> gens;
  for (long b = 0; b < nroots; ++b)
    for (long a = 0; a < d; ++a) {
      QVec w(tdim, Q(0));
      w[gd.g.e_index(b) * d + a] = 1;
      gens.push_back({chart.to_root[b].col(a), std::move(w)});
    }
  for (long b = 0; b < nroots; ++b) {
    long nb = rs.neg(b);
    const QVec& cr = gd.g.coroot[b];
    for (long a = 0; a < d; ++a) {
      QVec ea = chart.to_root[b].col(a);
      for (long c = 0; c < d; ++c) {
        QVec v = gd.L.bracket(ea, chart.to_root[nb].col(c));
        QVec m = to_qvec(rd.R.left_bb(a, c), d);
        QVec w(tdim, Q(0));
        for (long i = 0; i < rs.rank; ++i) {
          if (cr[i] == 0) continue;
          for (long x = 0; x < d; ++x)
            if (m[x] != 0) w[gd.g.h_index(i) * d + x] += Q(cr[i] * m[x]);
        }
        gens.push_back({std::move(v), std::move(w)});
      }
    }
  }
  out.phi = linear_map_from_pairs(
      ldim, tdim, gens, "L0IllDefined",
      "the zero-part assignment [e_a(r), e_{-a}(s)] -> a^vee (x) (r -| s)");

  CheckReport rep;
  rep.subject = "tensor cover";
  rep.add("defining assignments consistent", true,
          std::to_string(gens.size()) + " generators");

  bool fix = true;
  const QVec& u = chart.unit;
  for (long b = 0; b < nroots && fix; ++b) {
    QVec w(tdim, Q(0));
    for (long a = 0; a < d; ++a) w[gd.g.e_index(b) * d + a] = u[a];
    if (out.phi.apply(gd.emb.e[b]) != w) fix = false;
  }
  for (long i = 0; i < rs.rank && fix; ++i) {
    QVec w(tdim, Q(0));
    for (long a = 0; a < d; ++a) w[gd.g.h_index(i) * d + a] = u[a];
    if (out.phi.apply(gd.emb.h[i]) != w) fix = false;
  }
  rep.add("model vectors map to model (x) bar-unit", fix);

  bool hom = true;
  std::string homdetail = std::to_string(ldim * ldim) + " basis pairs";
  std::vector<QVec> pcol(ldim);
  for (long i = 0; i < ldim; ++i) pcol[i] = out.phi.col(i);
  for (long i = 0; i < ldim && hom; ++i)
    for (long j = 0; j < ldim; ++j) {
      QVec lhs = out.phi.apply(to_qvec(gd.L.bb(i, j), ldim));
      if (lhs != out.model.bracket(pcol[i], pcol[j])) {
        hom = false;
        homdetail = "fails at basis pair (" + std::to_string(i) + "," +
                    std::to_string(j) + ")";
        break;
      }
    }
  rep.add("bracket homomorphism", hom, homdetail);

  long rk = rank_of(out.phi);
  rep.add("surjective onto the tensor model", rk == tdim,
          "rank " + std::to_string(rk) + " of " + std::to_string(tdim));
  out.kernel_dim = ldim - rk;

  std::vector<SVec> ks = kernel_basis(out.phi);
  bool cz = true;
  for (const SVec& z : ks) {
    for (long k = 0; k < ldim; ++k)
      if (!gd.L.bracket_sv(z, unit_sv(k)).empty() ||
          !gd.L.bracket_sv(unit_sv(k), z).empty()) {
        cz = false;
        break;
      }
    if (!cz) break;
  }
  rep.add("kernel is central", cz, std::to_string(ks.size()) + " dimensions");
  out.report = rep;
  return out;
}

CheckReport check_matrix_relations(const GradedDecomposition& gd,
                                   const CoordinateChart& chart,
                                   const RecoveredDialgebra& rd) {
  const RootSystem& rs = gd.rs;
  check(rs.type == SLType::A, "MalformedInput",
        "matrix-unit relations require a type A grading");
  long d = chart.R_dim, nroots = rs.nroots();
  CheckReport rep;
  rep.subject = "matrix-unit relations";

  bool span_ok = true;
  for (long b = 0; b < nroots && span_ok; ++b)
    span_ok = rank_of(chart.to_root[b]) == d && gd.space[b].cols == d;
  rep.add("charts span every root space", span_ok);

  bool lin_ok = true;
  if (d >= 1)
    for (long b = 0; b < nroots && lin_ok; ++b) {
      QVec r(d, Q(0));
      r[0] = 2;
      r[d - 1] -= 3;
      QVec want = qv_scaled(chart.to_root[b].col(0), Q(2));
      qv_axpy(want, Q(-3), chart.to_root[b].col(d - 1));
      lin_ok = chart.embed(b, r) == want;
    }
  rep.add("charts are linear in the parameter", lin_ok);

  long zero_n = 0, chain_n = 0, fold_n = 0;
  for (long p = 0; p < nroots; ++p) {
    auto [i, j] = rs.type_a_slots(p);
    for (long q = 0; q < nroots; ++q) {
      auto [k, l2] = rs.type_a_slots(q);
      bool zero = j != k && i != l2;
      bool chain = j == k && i != l2;
      bool fold = l2 == i && j != k;
      if (!zero && !chain && !fold) continue;  // the (j,i) slot: zero-part pair
      for (long x = 0; x < d; ++x) {
        QVec ex = chart.to_root[p].col(x);
        for (long y = 0; y < d; ++y) {
          QVec z = gd.L.bracket(ex, chart.to_root[q].col(y));
          if (zero) {
            if (!qv_zero(z))
              fail("RelationFailure",
                   "[e_" + slot_nm(i, j) + "(r" + std::to_string(x) + "), e_" +
                       slot_nm(k, l2) + "(r" + std::to_string(y) +
                       ")] is nonzero");
            ++zero_n;
          } else if (chain) {
            QVec want = chart.embed(rs.type_a_root(i, l2),
                                    to_qvec(rd.R.left_bb(x, y), d));
            if (z != want)
              fail("RelationFailure",
                   "[e_" + slot_nm(i, j) + "(r" + std::to_string(x) + "), e_" +
                       slot_nm(k, l2) + "(r" + std::to_string(y) +
                       ")] != e_" + slot_nm(i, l2) + "(r -| s)");
            ++chain_n;
          } else {
            QVec want = qv_scaled(chart.embed(rs.type_a_root(k, j),
                                              to_qvec(rd.R.right_bb(y, x), d)),
                                  Q(-1));
            if (z != want)
              fail("RelationFailure",
                   "[e_" + slot_nm(i, j) + "(r" + std::to_string(x) + "), e_" +
                       slot_nm(k, l2) + "(r" + std::to_string(y) +
                       ")] != -e_" + slot_nm(k, j) + "(s |- r)");
            ++fold_n;
          }
        }
      }
    }
  }
  rep.add("disjoint slots bracket to zero", true,
          std::to_string(zero_n) + " instances");
  rep.add("chained slots multiply with -|", true,
          std::to_string(chain_n) + " instances");
  rep.add("folded slots multiply with |-", true,
          std::to_string(fold_n) + " instances");
  return rep;
}

SteinbergCover build_steinberg_cover(const GradedDecomposition& gd,
                                     const CoordinateChart& chart,
                                     const RecoveredDialgebra& rd, long cap) {
  const RootSystem& rs = gd.rs;
  check(rs.type == SLType::A, "MalformedInput",
        "the Steinberg cover applies to type A gradings");
  long n = rs.rank + 1, d = chart.R_dim;
  SteinbergModel S = build_steinberg_model(n, rd.R, cap);
  const LeibnizAlgebra& U = S.ext.total;

  SteinbergCover out;
  out.model_dim = U.dim;
  std::vector<std::pair<QVec, QVec>> gens;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (i == j) continue;
      long b = rs.type_a_root(static_cast<int>(i), static_cast<int>(j));
      for (long a = 0; a < d; ++a)
        gens.push_back({S.v_basis(i, j, a), chart.to_root[b].col(a)});
    }
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (i == j) continue;
      long b = rs.type_a_root(static_cast<int>(i), static_cast<int>(j));
      long nb = rs.type_a_root(static_cast<int>(j), static_cast<int>(i));
      for (long a = 0; a < d; ++a) {
        QVec va = S.v_basis(i, j, a);
        QVec ea = chart.to_root[b].col(a);
        for (long c = 0; c < d; ++c)
          gens.push_back({U.bracket(va, S.v_basis(j, i, c)),
                          gd.L.bracket(ea, chart.to_root[nb].col(c))});
      }
    }
  out.phi = linear_map_from_pairs(U.dim, gd.L.dim, gens, "RelationFailure",
                                  "the generator assignment v_ij(r) -> e_ij(r)");

  CheckReport rep;
  rep.subject = "Steinberg cover";
  rep.add("generator assignment extends linearly", true,
          std::to_string(gens.size()) + " generators");

  bool hom = true;
  std::string homdetail = std::to_string(U.dim * U.dim) + " basis pairs";
  std::vector<QVec> pcol(U.dim);
  for (long i = 0; i < U.dim; ++i) pcol[i] = out.phi.col(i);
  for (long i = 0; i < U.dim && hom; ++i)
    for (long j = 0; j < U.dim; ++j) {
      QVec lhs = out.phi.apply(to_qvec(U.bb(i, j), U.dim));
      if (lhs != gd.L.bracket(pcol[i], pcol[j])) {
        hom = false;
        homdetail = "fails at basis pair (" + std::to_string(i) + "," +
                    std::to_string(j) + ")";
        break;
      }
    }
  rep.add("bracket homomorphism", hom, homdetail);

  long rk = rank_of(out.phi);
  rep.add("surjective onto the graded algebra", rk == gd.L.dim,
          "rank " + std::to_string(rk) + " of " + std::to_string(gd.L.dim));
  out.kernel_dim = U.dim - rk;

  std::vector<SVec> ks = kernel_basis(out.phi);
  const QVec& un = *rd.R.bar_unit;
  std::vector<QVec> hs;
  for (long i = 0; i + 1 < n; ++i)
    hs.push_back(U.bracket(S.v(i, i + 1, un), S.v(i + 1, i, un)));
  Mat zw = weight_space(U, cartan_action(U, hs), QVec(n - 1, Q(0)));
  Rref zspan = col_span(zw);
  bool inz = true;
  for (const SVec& z : ks)
    if (!zspan.contains(z)) {
      inz = false;
      break;
    }
  rep.add("kernel lies in the zero-weight space", inz,
          std::to_string(ks.size()) + " dimensions");

  bool cz = true;
  for (const SVec& z : ks) {
    for (long k = 0; k < U.dim; ++k)
      if (!U.bracket_sv(z, unit_sv(k)).empty() ||
          !U.bracket_sv(unit_sv(k), z).empty()) {
        cz = false;
        break;
      }
    if (!cz) break;
  }
  rep.add("kernel is central", cz);
  out.report = rep;
  return out;
}

// ---- homomorphism comparison ----------------------------------------------------

CheckReport check_delta_homomorphism(const GradedDecomposition& dom,
                                     const GradedDecomposition& cod,
                                     const Mat& phi) {
  check(dom.rs.type == cod.rs.type && dom.rs.rank == cod.rs.rank,
        "MalformedInput", "the two gradings use different root systems");
  check(phi.rows == cod.L.dim && phi.cols == dom.L.dim, "MalformedInput",
        "map shape does not match the two algebras");
  const RootSystem& rs = dom.rs;
  long nroots = rs.nroots();

  CheckReport rep;
  rep.subject = "graded homomorphism";
  auto gate = [&](const std::string& name, bool ok, const std::string& detail) {
    rep.add(name, ok, detail);
    if (!ok) fail("NotDeltaHom", name + (detail.empty() ? "" : ": " + detail));
  };

  bool hom = true;
  std::string homdetail = std::to_string(dom.L.dim * dom.L.dim) + " basis pairs";
  std::vector<QVec> pcol(dom.L.dim);
  for (long i = 0; i < dom.L.dim; ++i) pcol[i] = phi.col(i);
  for (long i = 0; i < dom.L.dim && hom; ++i)
    for (long j = 0; j < dom.L.dim; ++j) {
      QVec lhs = phi.apply(to_qvec(dom.L.bb(i, j), dom.L.dim));
      if (lhs != cod.L.bracket(pcol[i], pcol[j])) {
        hom = false;
        homdetail = "fails at basis pair (" + std::to_string(i) + "," +
                    std::to_string(j) + ")";
        break;
      }
    }
  gate("bracket homomorphism", hom, homdetail);

  bool fix = true;
  for (long b = 0; b < nroots && fix; ++b)
    fix = phi.apply(dom.emb.e[b]) == cod.emb.e[b];
  for (long i = 0; i < rs.rank && fix; ++i)
    fix = phi.apply(dom.emb.h[i]) == cod.emb.h[i];
  gate("identity on the embedded model", fix, "");

  bool spaces = true;
  for (long s = 0; s <= nroots && spaces; ++s) {
    Rref target = col_span(cod.space[s]);
    for (long c = 0; c < dom.space[s].cols; ++c)
      if (!target.contains(to_svec(phi.apply(dom.space[s].col(c))))) {
        spaces = false;
        break;
      }
  }
  gate("root spaces map into their counterparts", spaces, "");

  long base = rs.simple_idx[0];
  CoordinateChart cd = build_chart(dom, base, 1);
  CoordinateChart cc = build_chart(cod, base, 1);
  std::vector<QVec> mcols;
  for (long a = 0; a < cd.R_dim; ++a)
    mcols.push_back(cc.extract(base, phi.apply(cd.to_root[base].col(a))));
  Mat M = Mat::from_cols(cc.R_dim, mcols);
  bool same = true;
  std::string samedetail;
  for (long b = 0; b < nroots && same; ++b)
    for (long a = 0; a < cd.R_dim; ++a)
      if (cc.extract(b, phi.apply(cd.to_root[b].col(a))) != M.col(a)) {
        same = false;
        samedetail = "differs at " + rs.name(b);
        break;
      }
  gate("induced coordinate map is root-independent", same, samedetail);

  gate("bar-unit maps to bar-unit", M.apply(cd.unit) == cc.unit, "");

  RecoveredDialgebra rdd = recover_products(dom, cd, 1);
  RecoveredDialgebra rdc = recover_products(cod, cc, 1);
  bool lok = true, rok = true;
  for (long a = 0; a < cd.R_dim && (lok && rok); ++a)
    for (long b = 0; b < cd.R_dim; ++b) {
      QVec lv = M.apply(to_qvec(rdd.R.left_bb(a, b), cd.R_dim));
      QVec rv = M.apply(to_qvec(rdd.R.right_bb(a, b), cd.R_dim));
      if (lv != rdc.R.left_mul(M.col(a), M.col(b))) lok = false;
      if (rv != rdc.R.right_mul(M.col(a), M.col(b))) rok = false;
      if (!lok || !rok) break;
    }
  gate("induced map carries -|", lok, "");
  gate("induced map carries |-", rok, "");

  bool bij = cd.R_dim == cc.R_dim && rank_of(M) == cc.R_dim;
  if (bij) {
    bool cz = true;
    for (const SVec& z : kernel_basis(phi)) {
      for (long k = 0; k < dom.L.dim; ++k)
        if (!dom.L.bracket_sv(z, unit_sv(k)).empty() ||
            !dom.L.bracket_sv(unit_sv(k), z).empty()) {
          cz = false;
          break;
        }
      if (!cz) break;
    }
    gate("kernel is central", cz, "induced coordinate map is bijective");
  } else {
    rep.add("kernel is central", true,
            "not applicable: induced coordinate map is not bijective");
  }

  bool centers = true;
  Rref domzero = col_span(dom.zero_space());
  for (const SVec& z : center(dom.L).rows)
    if (!domzero.contains(z)) {
      centers = false;
      break;
    }
  Rref codzero = col_span(cod.zero_space());
  for (const SVec& z : center(cod.L).rows)
    if (!codzero.contains(z)) {
      centers = false;
      break;
    }
  gate("centers lie in the zero parts", centers, "");
  return rep;
}

CheckReport compare_dialgebras(const Dialgebra& src, const Dialgebra& dst,
                               const Mat& ident) {
  CheckReport rep;
  rep.subject = "dialgebra comparison";
  bool shape =
      src.dim == dst.dim && ident.rows == dst.dim && ident.cols == src.dim;
  rep.add("dimensions match", shape,
          std::to_string(src.dim) + " vs " + std::to_string(dst.dim));
  if (!shape) return rep;
  rep.add("identification invertible", rank_of(ident) == src.dim);
  bool bu = src.bar_unit.has_value() && dst.bar_unit.has_value() &&
            ident.apply(*src.bar_unit) == *dst.bar_unit;
  rep.add("bar-unit corresponds", bu);
  bool lok = true, rok = true;
  std::string ldetail, rdetail;
  for (long a = 0; a < src.dim; ++a)
    for (long b = 0; b < src.dim; ++b) {
      QVec lv = ident.apply(to_qvec(src.left_bb(a, b), src.dim));
      QVec rv = ident.apply(to_qvec(src.right_bb(a, b), src.dim));
      if (lok && lv != dst.left_mul(ident.col(a), ident.col(b))) {
        lok = false;
        ldetail = "differs at (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
      if (rok && rv != dst.right_mul(ident.col(a), ident.col(b))) {
        rok = false;
        rdetail = "differs at (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
    }
  rep.add("-| transported", lok, ldetail);
  rep.add("|- transported", rok, rdetail);
  return rep;
}

Mat chart_identification(const CoordinateChart& chart,
                         const std::vector<QVec>& images) {
  std::vector<QVec> cols;
  cols.reserve(images.size());
  for (const QVec& x : images)
    cols.push_back(chart.extract(chart.base_root, x));
  return Mat::from_cols(chart.R_dim, cols);
}

RecognitionResult recognize(const LeibnizAlgebra& L, const Embedding& emb,
                            const RootSystem& rs, long alt_words,
                            long cross_checks) {
  RecognitionResult r{verify_grading(L, emb, rs), {}, {}, {}};
  r.chart = build_chart(r.gd, rs.simple_idx[0], alt_words);
  r.rd = recover_products(r.gd, r.chart, cross_checks);
  r.axioms = check_recovered_axioms(r.rd, rs);
  return r;
}

}  // namespace rootleib
