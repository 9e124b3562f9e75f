#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rootleib/base.hpp"
#include "rootleib/dialg.hpp"
#include "rootleib/linalg.hpp"
#include "rootleib/report.hpp"

namespace rootleib {

// A Leibniz algebra by structure constants: table[i*dim+j] = [e_i, e_j].
// Brackets satisfy [x,[y,z]] = [[x,y],z] - [[x,z],y].
struct LeibnizAlgebra {
  long dim = 0;
  std::vector<std::string> basis;
  std::vector<SVec> table;

  const SVec& bb(long i, long j) const { return table[i * dim + j]; }
  QVec bracket(const QVec& x, const QVec& y) const;
  SVec bracket_sv(const SVec& x, const SVec& y) const;
  void validate() const;  // shape checks only
};

// Shape-validates and asserts the Leibniz identity exhaustively.
LeibnizAlgebra make_leibniz(long dim, std::vector<std::string> basis,
                            std::vector<SVec> table);

// Exhaustive triple check of the defining identity.
AxiomReport check_leibniz(const LeibnizAlgebra& L);
// Symmetrized-table scan: [x,y] + [y,x] = 0 on all basis pairs (over Q this
// is equivalent to [x,x] = 0 for every element, i.e. the algebra is Lie).
LawResult lie_law(const LeibnizAlgebra& L);
bool is_lie(const LeibnizAlgebra& L);

// The operator x |-> -[x,z]; always a derivation (asserted on basis pairs).
Mat ad_op(const LeibnizAlgebra& L, const QVec& z);

// Der = solutions of p([x,y]) = [p(x),y] + [x,p(y)]; Inn = span{ad z};
// both as subspaces of the dim*dim operator space (row-major flattening).
struct DerivationSpaces {
  Rref der;
  Rref inn;
};
DerivationSpaces derivations(const LeibnizAlgebra& L);

Rref center(const LeibnizAlgebra& L);              // {z : [x,z]=0=[z,x] for all x}
Rref derived_subalgebra(const LeibnizAlgebra& L);  // span of all [e_i,e_j]
bool is_perfect(const LeibnizAlgebra& L);

// Quotient by a (validated) two-sided ideal; the quotient basis is the set of
// free columns of the ideal's reduced row form.
LeibnizAlgebra quotient_by_ideal(const LeibnizAlgebra& L, const Rref& ideal);
// Quotient by the ideal generated by all [x,y]+[y,x]; result is Lie (checked).
LeibnizAlgebra lie_quotient(const LeibnizAlgebra& L);

// Boundary map of the chain complex ... -> L^{(x)n} -> L^{(x)(n-1)} -> ...:
//   d(x_1(x)...(x)x_n) = sum_{i<j} (-1)^{j+1}
//                        x_1(x)...(x)[x_i,x_j]_at_i(x)...(x)^x_j...(x)x_n,
// so d_2(x(x)y) = -[x,y] and d_1 = 0.  Tensor index: x_1 is most significant.
SparseMat boundary(const LeibnizAlgebra& L, long n, long cap = 10000000);

struct Homology {
  long degree = 0;
  long dim = 0;  // dim HL_degree
  long rank_dn = 0, rank_dn1 = 0;
  std::vector<SVec> reps;  // independent cycle representatives mod boundaries
};
Homology homology(const LeibnizAlgebra& L, long n, long cap = 10000000,
                  bool want_reps = false);

// Universal central extension of a perfect Leibniz algebra, realized as
// (L(x)L)/im d_3 with bracket [cls(x(x)y), cls(u(x)v)] = cls([x,y](x)[u,v])
// and projection cls(x(x)y) |-> [x,y].
struct CentralExtension {
  LeibnizAlgebra total;
  Mat projection;  // base_dim x total_dim
  long base_dim = 0;
  long kernel_dim = 0;
  std::vector<std::pair<long, long>> pair_of_coord;  // tensor pair per total coord
  std::vector<long> coord_of_col;  // L(x)L column -> total coord, -1 on pivots
  Rref im_d3;                      // image of d_3 inside L(x)L

  QVec cls(const SVec& tensor_vec) const;  // class of an element of L(x)L
  QVec cls_pair(long i, long j) const;     // class of e_i(x)e_j
};
CentralExtension universal_central_extension(const LeibnizAlgebra& L,
                                             long cap = 10000000);

// Right-module axiom [m,[x,y]] = [[m,x],y] - [[m,y],x] for an action table
// action[m*L.dim + x] in M-coordinates.
AxiomReport check_right_module(const LeibnizAlgebra& L,
                               const std::vector<SVec>& action, long mdim,
                               const std::vector<std::string>& mbasis = {});

// [x,y] = x -| y  -  y |- x.  Requires the dialgebra to pass (Ass) or (Alt);
// the Leibniz identity on the result is asserted either way.
LeibnizAlgebra dialgebra_to_leibniz(const Dialgebra& D);

}  // namespace rootleib
