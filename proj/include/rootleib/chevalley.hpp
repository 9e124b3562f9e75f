#pragma once

// Split simple Lie algebras with a Chevalley basis over a simply-laced root
// system, plus the operators exp(ad tx), n_alpha(t), h_alpha(t) acting on any
// finite-dimensional Leibniz algebra.

#include <cstdint>
#include <string>
#include <vector>

#include "rootleib/leibniz.hpp"
#include "rootleib/linalg.hpp"
#include "rootleib/rootsys.hpp"

namespace rootleib {

// How hard build_chevalley works to certify the Jacobi identity.  The pair
// invariants (antisymmetry, Cartan action, [e_a, e_{-a}] = coroot, root-sum
// brackets) are always checked exhaustively; the level only controls the
// triple scan.
enum class VerifyLevel { Off, Sampled, Full };

VerifyLevel verify_level_of(const std::string& s);  // "off"/"sampled"/"full"

// An invertible-by-construction linear operator on a declared algebra's
// coordinate space, carrying a provenance note such as "n_{a1}(1)".
struct AlgebraOperator {
  Mat mat;
  std::string note;
  long dim() const { return mat.rows; }
  QVec apply(const QVec& v) const { return mat.apply(v); }
  AlgebraOperator then(const AlgebraOperator& inner) const;  // this ∘ inner
};

// Basis layout: slots [0, nroots) are the root vectors e_alpha (slot = root
// id in rs), slots [nroots, nroots+rank) are the Cartan generators H_1..H_l.
struct ChevalleyAlgebra {
  RootSystem rs;
  LeibnizAlgebra alg;  // antisymmetric bracket: a Lie algebra
  long nroots = 0;
  long rank = 0;
  std::vector<QVec> coroot;  // root id -> coroot coordinates in the H basis
  std::string digest;        // stable hash of the canonical bracket table

  long e_index(long root_id) const { return root_id; }
  long h_index(long i) const { return nroots + i; }  // i in [0, rank)
  QVec e_vec(long root_id) const;
  QVec h_vec(long i) const;
  QVec coroot_vec(long root_id) const;  // the coroot as an algebra element
};

// Type A is realized by matrix units inside trace-zero (l+1)x(l+1) matrices;
// types D and E get structure constants from a bimultiplicative sign cocycle
// on the root lattice.  All pair invariants are asserted at build time; a
// failed assertion raises ConstructionFailure (a defect, not a user error).
ChevalleyAlgebra build_chevalley(const RootSystem& rs,
                                 VerifyLevel level = VerifyLevel::Full,
                                 std::uint64_t seed = 1, long samples = 10000);

// exp(t ad x), exact over Q.  Nilpotency of ad x is verified by powering with
// bound dim+1 (error NotNilpotent).  With check_automorphism the result is
// verified to preserve the bracket on all basis pairs.
AlgebraOperator exp_ad(const LeibnizAlgebra& L, const QVec& x, const Q& t,
                       bool check_automorphism = false);

// n(t) = exp(ad te) exp(ad -t^{-1}f) exp(ad te) for an sl_2 pair (e, f);
// the result is checked to be invertible.  Error ZeroParameter if t = 0.
AlgebraOperator n_operator(const LeibnizAlgebra& L, const QVec& e,
                           const QVec& f, const Q& t,
                           const std::string& note = "");
AlgebraOperator n_operator(const ChevalleyAlgebra& ch, long root_id,
                           const Q& t);

// h(t) = n(t) n(1)^{-1}.
AlgebraOperator h_operator(const LeibnizAlgebra& L, const QVec& e,
                           const QVec& f, const Q& t,
                           const std::string& note = "");
AlgebraOperator h_operator(const ChevalleyAlgebra& ch, long root_id,
                           const Q& t);

}  // namespace rootleib
