#pragma once

// Simply-laced finite root systems A_l (l>=2), D_l (l>=4), E_6/7/8: exact
// integer coordinates, reflections, Weyl-orbit searches, and the census of
// A2-pairs (ordered pairs of roots with pairing -1) together with their
// diagonal-Weyl equivalence classes.

#include <map>
#include <string>
#include <vector>

#include "rootleib/base.hpp"

namespace rootleib {

enum class SLType { A, D, E };

SLType sl_type_of(const std::string& s);         // "A"/"D"/"E"
std::string sl_type_str(SLType t);

using IVec = std::vector<long>;

struct RootSystem {
  SLType type;
  int rank = 0;
  int amb = 0;     // ambient integer coordinates per vector
  int scale = 1;   // pairing = dot/scale (4 for type E's doubled coordinates)

  std::vector<IVec> roots;        // positives first; roots[i + npos] = -roots[i]
  std::vector<long> simple_idx;   // ids of the base Π, in diagram order
  std::vector<IVec> simple_coords_of;  // root id -> coordinates in the base

  long nroots() const { return static_cast<long>(roots.size()); }
  long npos() const { return nroots() / 2; }
  long id_of(const IVec& v) const;        // -1 if not a root
  long neg(long id) const { return id < npos() ? id + npos() : id - npos(); }
  long pairing(long a, long b) const;     // (α,β), exact integer
  long height(long id) const;
  long reflect(long id, int simple_i) const;      // r_{α_i}(root)
  long reflect_by(long id, long by_root) const;   // r_β(root)
  long sum_id(long a, long b) const;      // id of α+β, or -1
  std::string name(long id) const;        // e.g. "a1+2a2+a3", "-a1-a2"
  long id_by_name(const std::string&) const;  // -1 if unknown
  // Type A only: the (i,j) with root = ε_i − ε_j, 0-based.
  std::pair<int, int> type_a_slots(long id) const;
  long type_a_root(int i, int j) const;

 private:
  std::map<IVec, long> index_;
  friend RootSystem build_root_system(SLType, int);
};

RootSystem build_root_system(SLType type, int rank);

// Shortest word of simple reflections with (r_{i_k} ∘ … ∘ r_{i_1})(from) = to,
// i.e. the word applies left-to-right starting at `from`; ties are broken by
// smallest simple index.  Error NoWord if unreachable (cannot happen for two
// roots of an irreducible system).
std::vector<int> word_mapping_root(const RootSystem& rs, long from, long to);

enum class PairClass { Positive, Negative };

struct A2Pair {
  long beta, gamma;
};

struct A2PairSet {
  std::vector<A2Pair> pairs;          // all ordered pairs with pairing -1
  std::vector<PairClass> cls;         // parallel to pairs
  long positive_count = 0, negative_count = 0;
  long index_of(long beta, long gamma) const;  // -1 if absent
};

// Classes are Weyl orbits of the diagonal action, seeded at (α1,α2) for the
// Positive class and (α2,α1) for the Negative one.  In types D and E the two
// seeds merge and every pair is tagged Positive.
A2PairSet enumerate_a2_pairs(const RootSystem& rs);

}  // namespace rootleib
