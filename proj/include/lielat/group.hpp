#pragma once

#include "lielat/sublattice.hpp"

namespace lielat {

// A point of the uniform pro-p group attached to a powerful lattice, held at
// finite p-adic precision: coordinates are meaningful mod p^e.
struct GroupElement {
  std::vector<Rat> coordinates;
  long long precision = 1;
};

GroupElement make_element(const LieLattice& l, std::vector<Rat> coords, long long precision);

// g * h via the Hausdorff series truncated at the nilpotency class (the
// series terminates exactly for nilpotent lattices). Requires a powerful
// nilpotent lattice of class c < p with c <= 4, and p odd.
GroupElement bch_mul(const LieLattice& l, const GroupElement& g, const GroupElement& h);

// Inverse is coordinate negation.
GroupElement bch_inverse(const LieLattice& l, const GroupElement& g);

GroupElement bch_identity(const LieLattice& l, long long precision);

struct GroupIndexReport {
  Int coset_count = 0;
  long long lattice_index_exponent = 0;
  bool agree = false;  // coset_count == p^exponent
};

// Enumerates cosets of M's reduction in L's reduction mod p^e under bch_mul
// and compares the count with the lattice index. Requires M to be a
// subalgebra closed under bch_mul at precision e, and p^e L contained in M
// (so the reduction is faithful).
GroupIndexReport group_index_check(const LieLattice& l, const Sublattice& m, long long e,
                                   long long budget = 2000000);

}  // namespace lielat
