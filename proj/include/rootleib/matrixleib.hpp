#pragma once

// Matrix Leibniz algebras over a dialgebra D: gl(n,D), its derived subalgebra
// sl(n,D), the Steinberg model stl(n,D) realized as the universal central
// extension of sl(n,D), and the tensor algebra g⊗R for commutative R.

#include <string>
#include <vector>

#include "rootleib/chevalley.hpp"
#include "rootleib/dialg.hpp"
#include "rootleib/leibniz.hpp"
#include "rootleib/linalg.hpp"

namespace rootleib {

// gl: carrier coordinate of E_ij(basis a) is (i*n + j)*dim(D) + a.
// sl: the carrier is the derived subalgebra; its basis is the canonical
// reduced row form of the bracket span inside gl coordinates, and carrier
// coordinates are read off at the pivot columns.
struct MatrixLeibnizAlgebra {
  long n = 0;
  Dialgebra D;
  LeibnizAlgebra carrier;
  bool full = true;  // true for gl, false for sl
  Rref span;         // sl only: carrier basis rows in gl coordinates

  long gl_dim() const { return n * n * D.dim; }
  long gl_coord(long i, long j, long a) const {
    return (i * n + j) * D.dim + a;
  }
  std::string gl_label(long i, long j, long a) const;

  // Carrier coordinates of a vector given in gl coordinates; NotContained if
  // it lies outside an sl carrier.
  QVec carrier_coords(const SVec& gl_vec) const;
  // The reverse expansion of a carrier vector into gl coordinates.
  SVec gl_of_carrier(const SVec& v) const;
  // E_ij(x) in carrier coordinates, x in D-coordinates.
  QVec elem(long i, long j, const QVec& x) const;
  QVec elem_basis(long i, long j, long a) const;
};

// Bracket [E_ij(a), E_kl(b)] = δ_jk E_il(a -| b) − δ_il E_kj(b |- a);
// D must satisfy the associative-dialgebra axioms and the Leibniz identity is
// asserted exhaustively.  Errors: NotAssociative.
MatrixLeibnizAlgebra build_gl(long n, const Dialgebra& D);

// The derived subalgebra [gl, gl] with the induced bracket; requires a
// bar-unit so that every off-diagonal E_ij(a) lands inside.  The three
// generator relations and perfectness are asserted.
MatrixLeibnizAlgebra build_sl(long n, const Dialgebra& D);

// stl(n,D) as the universal central extension of sl(n,D), with canonical
// generator lifts v_ij(a) = cls(E_ik(a) ⊗ E_kj(1)), k the least index not in
// {i,j}.  Build verifies: independence of k, the defining relations (scalar
// linearity; vanishing when i≠l, j≠k; products for j=k and for i=l), ψ∘v =
// E_ij, diagonality of the H-elements [v_ij(a), v_ji(b)], and perfectness.
struct SteinbergModel {
  MatrixLeibnizAlgebra base;  // sl(n,D)
  CentralExtension ext;       // uce of the base carrier
  long n = 0;

  long dim() const { return ext.total.dim; }
  long kernel_dim() const { return ext.kernel_dim; }
  QVec v(long i, long j, const QVec& x) const;  // lift, in total coordinates
  QVec v_basis(long i, long j, long a) const;
  QVec psi(const QVec& w) const;  // projection to base carrier coordinates
};

// n = 3 asks D for the alternative axioms, n >= 4 for the associative ones.
SteinbergModel build_steinberg_model(long n, const Dialgebra& D,
                                     long cap = 10000000);

// g⊗R with [x⊗a, y⊗b] = [x,y]⊗(a -| b); coordinate of (basis p, basis a) is
// p*dim(R) + a.  R must be commutative and associative with a bar-unit.
// Errors: NotCommutative, NotAssociative, MissingBarUnit.
LeibnizAlgebra build_tensor_algebra(const ChevalleyAlgebra& g,
                                    const Dialgebra& R);

}  // namespace rootleib
