#pragma once

#include <vector>

#include "lielat/qmatrix.hpp"

namespace lielat {

// Exponents of the p-power elementary divisors of a full-rank p-integral
// matrix over the local ring at p.
struct SmithProfile {
  std::vector<long long> exponents;  // non-decreasing
  long long total = 0;               // = v_p(det)
};

SmithProfile smith_p(const QMatrix& m, const Int& p);

// Hermite normal form over the local ring at p, by column operations.
// Result is lower-triangular with pivots p^{k_i}; entries to the left of a
// pivot are canonical residues mod that pivot's p-power, entries above the
// diagonal are zero. Canonical: equal column spans give equal HNFs.
// Requires square, p-integral, non-singular input.
QMatrix hnf_p(const QMatrix& b, const Int& p);

// Column HNF of a rectangular full-row-rank p-integral matrix, together with
// the unimodular (over the local ring) transform U such that A*U = [H | 0].
struct HnfResult {
  QMatrix h;  // same shape as input; trailing columns may be zero
  QMatrix u;  // cols x cols, invertible over the local ring at p
  int rank = 0;
};
HnfResult hnf_p_transform(const QMatrix& a, const Int& p);

// Valuations of the roots of a polynomial (Newton polygon lower-hull slopes,
// with multiplicity), sorted ascending. Coefficients are c_0..c_n, constant
// term first. Convention: x - p has slope 1. Requires nonzero polynomial
// with nonzero constant term.
std::vector<Rat> newton_slopes(const std::vector<Rat>& coeffs, const Int& p);

}  // namespace lielat
