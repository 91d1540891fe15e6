#pragma once

#include "lielat/lattice.hpp"

namespace lielat {

// A full-rank sublattice of a LieLattice, held in canonical Hermite normal
// form (columns = generators in parent coordinates). Two sublattices are
// equal iff their HNFs are equal. Holds a pointer to the parent lattice:
// the parent must outlive the Sublattice (and any report containing one).
class Sublattice {
 public:
  // Throws SingularMatrix / NotPIntegral for invalid basis matrices.
  Sublattice(const LieLattice& parent, const QMatrix& basis);

  static Sublattice full(const LieLattice& parent);  // B = identity

  const LieLattice& parent() const { return *parent_; }
  const QMatrix& basis() const { return b_; }  // canonical HNF

  // v_p(det B); the index [L:M] is p^exponent.
  long long index_exponent() const;

  // Exact membership of a parent-coordinate vector.
  bool contains(const std::vector<Rat>& v) const;

  bool operator==(const Sublattice& o) const { return b_ == o.b_; }

 private:
  const LieLattice* parent_;
  QMatrix b_;
};

// True iff [m_i, m_j] lies in the column span of B over the local ring at p
// for all i < j.
bool is_subalgebra(const Sublattice& m);

// B^T A B: the parent Killing form restricted to M's basis. (Since M has
// full rank, this is also the intrinsic Killing matrix of M.)
QMatrix gram(const Sublattice& m);
QMatrix gram(const Sublattice& m, const QMatrix& killing_a);

// Sublattice with basis s*B, re-canonicalized. Throws NotASublattice when
// s*B is not p-integral, InvalidInput when s is singular.
Sublattice transform(const Sublattice& m, const QMatrix& s);

// p^e * X.
Sublattice scale_power(const LieLattice& l, long long e);
Sublattice scale_power(const Sublattice& m, long long e);

// Lattice sum and intersection (HNF of concatenation; kernel-based).
Sublattice lattice_sum(const Sublattice& m, const Sublattice& n);
Sublattice lattice_intersect(const Sublattice& m, const Sublattice& n);

// Structure constants of M in its own basis (p-integral iff M is a
// subalgebra; throws NotASublattice otherwise).
LieLattice intrinsic_presentation(const Sublattice& m);

}  // namespace lielat
