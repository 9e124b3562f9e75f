#pragma once

// Recognition pipeline for Leibniz algebras graded by a simply-laced finite
// root system: verify the grading conditions, coordinatize every root space
// by normalized Weyl-operator charts, recover the two dialgebra products on
// R = L_base, and certify the structural consequences — bar-unit laws,
// associativity / alternativity / commutativity, the zero-part action law,
// and the central homomorphisms relating the input to the model algebras.

#include <string>
#include <vector>

#include "rootleib/chevalley.hpp"
#include "rootleib/matrixleib.hpp"

namespace rootleib {

// Coordinates inside an ambient Leibniz algebra for every basis element of
// the split simple subalgebra: e[root id] and h[i] for the Cartan part.
struct Embedding {
  std::vector<QVec> e;
  std::vector<QVec> h;
};

// Stock embeddings for the toolkit's own constructions.
Embedding adjoint_embedding(const ChevalleyAlgebra& g);
Embedding sl_embedding(const MatrixLeibnizAlgebra& sl, const RootSystem& rs);
Embedding tensor_embedding(const ChevalleyAlgebra& g, const Dialgebra& R);
Embedding steinberg_embedding(const SteinbergModel& S, const RootSystem& rs);

struct GradedDecomposition {
  RootSystem rs;
  ChevalleyAlgebra g;  // the model whose bracket table the embedding realizes
  LeibnizAlgebra L;
  Embedding emb;
  std::vector<Mat> space;  // root id -> column basis of L_alpha; back() = L_0
  const Mat& zero_space() const { return space.back(); }
  long dim_at(long root_id) const { return space[root_id].cols; }
};

// Checks the grading conditions: the embedded elements are independent and
// close under the model table (NotASubalgebra); every weight space
// {x : -[x,h] = alpha(h) x for all h in H} is computed and the spaces sum
// directly to the whole algebra (EigenspaceMismatch); the zero part equals
// the span of all [L_alpha, L_{-alpha}] (ZeroConditionFailure); each root
// space contains its e_alpha; the algebra is perfect (NotPerfect).
GradedDecomposition verify_grading(const LeibnizAlgebra& L, const Embedding& emb,
                                   const RootSystem& rs);

// Lift of a graded algebra's embedding into its universal central extension:
// a linear preimage section corrected by central elements so that the lifted
// copy closes under the model table exactly.  Error ConstructionFailure if
// no correction exists.
Embedding uce_embedding(const CentralExtension& ext, const GradedDecomposition& gd);

// For each root beta, the normalized restriction to L_base of a product of
// simple n-operators moving base to beta.  to_root[beta] maps chart
// coordinates r to the element e_beta(r) of L; its columns span L_beta.
struct CoordinateChart {
  long base_root = -1;
  long R_dim = 0;
  QVec unit;                           // chart coordinates of e_base
  std::vector<Mat> to_root;            // root id -> L.dim x R_dim
  std::vector<Q> sign;                 // root id -> normalizing sign
  std::vector<std::vector<int>> word;  // root id -> simple-reflection word

  QVec embed(long root_id, const QVec& r) const;
  // Chart coordinates of x in L_root; error ValueOutsideRootSpace.
  QVec extract(long root_id, const QVec& x) const;
};

// Builds the chart at base_root.  The normalizing signs are read off the
// embedded model vectors (SignNotUnit if not ±1) and the restrictions must
// hit all of the target root space (NonInvertibleRestriction).  Also asserts
// the inverse- and composition-coherence of the maps, their independence of
// the chosen word (up to `alt_words` alternatives per root), and the
// equivariance (Ad n)(e_beta(r)) = ((Ad n) e_beta)(r) on sampled operators.
CoordinateChart build_chart(const GradedDecomposition& gd, long base_root,
                            long alt_words = 3);

struct RecoveredDialgebra {
  Dialgebra R;                         // tables on chart coordinates of L_base
  long pos_beta = -1, pos_gamma = -1;  // pair defining -|
  long neg_beta = -1, neg_gamma = -1;  // pair defining |-
  bool right_is_flip = false;          // D/E: |- is the transpose of -|
};

// Solves [e_beta(r), e_gamma(s)] = [e_beta, e_gamma](..) at the ordered-pair
// class representatives (alpha1, alpha2) and (alpha2, alpha1) to fill the -|
// and |- tables, installs the chart unit as the bar-unit (its laws are
// validated), and replays the solve at up to `cross_checks` further pairs of
// each class to confirm the tables are pair-independent (ProductMismatch).
// Error ValueOutsideRootSpace if a bracket leaves the expected root space.
RecoveredDialgebra recover_products(const GradedDecomposition& gd,
                                    const CoordinateChart& chart,
                                    long cross_checks = 3);

// The axiom battery the recovered dialgebra must satisfy: bar-unit laws
// always; associativity at rank >= 3; alternativity at rank 2; commutativity
// for types D and E.  Failures are reported, not thrown.
CheckReport check_recovered_axioms(const RecoveredDialgebra& rd,
                                   const RootSystem& rs);

// The zero-part action law: with rho = ad([e_alpha(r), e_{-alpha}(s)]),
//   rho(e_beta(t)) = <beta, alpha^vee> e_beta((t -| r) -| s),
// swept over all alpha, beta and all basis r, s, t.  Types D and E get the
// full sweep; type A runs the r = s = unit slice (the Cartan action), which
// is the part valid without commutativity.
CheckReport check_zero_part_action(const GradedDecomposition& gd,
                                   const CoordinateChart& chart,
                                   const RecoveredDialgebra& rd);

// Types D and E: the homomorphism phi from L onto the tensor model g (x) R,
// the identity on the embedded copy, defined on root spaces by the chart and
// on the zero part by [e_alpha(r), e_{-alpha}(s)] -> alpha_vee (x) (r -| s).
// The defining linear system must be consistent (L0IllDefined); phi is then
// checked to be a surjective homomorphism with central kernel.
struct TensorCover {
  LeibnizAlgebra model;  // g (x) R
  Mat phi;               // model.dim x L.dim
  long kernel_dim = 0;
  CheckReport report;
};
TensorCover build_tensor_cover(const GradedDecomposition& gd,
                               const CoordinateChart& chart,
                               const RecoveredDialgebra& rd);

// Type A only: the matrix-unit relations of the graded algebra, with roots
// written as slot pairs (i,j) <-> eps_i - eps_j and swept exhaustively over
// chart basis elements:
//   [e_ij(r), e_kl(s)] = 0               if i != l and j != k,
//   [e_ij(r), e_jl(s)] = e_il(r -| s)    if i != l,
//   [e_ij(r), e_ki(s)] = -e_kj(s |- r)   if j != k,
// plus spanning and linearity of the charts.  Error RelationFailure names
// the violated relation and witness; the report carries the sweep counts.
CheckReport check_matrix_relations(const GradedDecomposition& gd,
                                   const CoordinateChart& chart,
                                   const RecoveredDialgebra& rd);

// Type A only: the Steinberg algebra over the recovered dialgebra covers L
// via v_ij(r) -> e_ij(r).  The generator assignment must extend to a linear
// map (RelationFailure), which is then checked to be a surjective
// homomorphism whose kernel lies in the zero-weight space and in the center.
struct SteinbergCover {
  long model_dim = 0;  // dim of the Steinberg algebra over the recovered R
  Mat phi;             // L.dim x model_dim
  long kernel_dim = 0;
  CheckReport report;
};
SteinbergCover build_steinberg_cover(const GradedDecomposition& gd,
                                     const CoordinateChart& chart,
                                     const RecoveredDialgebra& rd,
                                     long cap = 10000000);

// phi must be a homomorphism dom.L -> cod.L between algebras graded over the
// same root system that fixes the embedded model pointwise.  Verifies that
// root spaces map into their counterparts, that the induced coordinate maps
// agree across all roots and carry both products and the bar-unit, that a
// bijective induced map forces a central kernel, and that each center sits
// inside its zero part.  Error NotDeltaHom on the first violated condition;
// the returned report lists everything checked.
CheckReport check_delta_homomorphism(const GradedDecomposition& dom,
                                     const GradedDecomposition& cod,
                                     const Mat& phi);

// Transport comparison: ident's column a gives the dst coordinates of the
// canonical image of src basis vector a; checks ident is invertible and
// carries src's products and bar-unit onto dst's.
CheckReport compare_dialgebras(const Dialgebra& src, const Dialgebra& dst,
                               const Mat& ident);

// Column a = chart coordinates, at the chart's base root, of images[a].
Mat chart_identification(const CoordinateChart& chart,
                         const std::vector<QVec>& images);

// One-call pipeline: grade, chart at the first simple root, recover the
// products, and run the axiom battery.
struct RecognitionResult {
  GradedDecomposition gd;
  CoordinateChart chart;
  RecoveredDialgebra rd;
  CheckReport axioms;
};
RecognitionResult recognize(const LeibnizAlgebra& L, const Embedding& emb,
                            const RootSystem& rs, long alt_words = 3,
                            long cross_checks = 3);

}  // namespace rootleib
