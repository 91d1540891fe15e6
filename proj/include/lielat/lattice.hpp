#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lielat/padic.hpp"
#include "lielat/qmatrix.hpp"

namespace lielat {

// A rank-d Zp-Lie lattice given by exact structure constants.
// Brackets are stored only for i < j; antisymmetry is by construction.
struct LieLattice {
  std::string name;
  Int p;
  int dim = 0;
  // (i,j) with i < j  ->  coefficient vector of [a_i, a_j], length dim.
  std::map<std::pair<int, int>, std::vector<Rat>> brackets;
  std::vector<std::string> labels;  // optional basis labels

  // [a_i, a_j] for any i, j (signed lookup; zero for i == j or unlisted pairs).
  std::vector<Rat> bracket_basis(int i, int j) const;

  // Bilinear extension: bracket of two coordinate vectors.
  std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

  void set_bracket(int i, int j, std::vector<Rat> coeffs);
};

struct ValidationReport {
  bool ok = true;
  std::string failure;            // empty when ok
  int i = -1, j = -1, k = -1;     // failing triple / index, when applicable
};

// Checks p-integrality of all structure constants and the exact Jacobi
// identity on all basis triples.
ValidationReport validate(const LieLattice& l);
void validate_or_throw(const LieLattice& l);

// Matrix of y -> [x, y] in the lattice basis.
QMatrix ad_matrix(const LieLattice& l, const std::vector<Rat>& x);

struct KillingData {
  QMatrix a;     // d x d, symmetric, A_ij = tr(ad(a_i) ad(a_j))
  Rat det_a;
  PVal vp_det_a = PVal::infinity();
};

KillingData killing_matrix(const LieLattice& l);

struct SemisimpleCertificate {
  bool semisimple = false;
  Rat det_a;
  PVal vp_det_a = PVal::infinity();
};

// Cartan's criterion: semisimple over Qp iff det of the Killing matrix != 0.
SemisimpleCertificate is_semisimple(const LieLattice& l);

// [L,L] contained in pL (p odd) resp. 4L (p = 2).
bool is_powerful(const LieLattice& l);

struct SeriesProfile {
  std::vector<int> lower_central_ranks;  // ranks over Qp until 0 or stabilization
  std::vector<int> derived_ranks;
  std::optional<int> nilpotency_class;
  bool solvable = false;
};

SeriesProfile series_profile(const LieLattice& l);

struct DerivationAlgebra {
  std::vector<QMatrix> basis;  // kernel basis of the Leibniz system over Qp
  int dim = 0;
  bool nilpotent = false;
  int chain_length = 0;  // length of the bracket-span chain that reached 0
};

DerivationAlgebra derivations(const LieLattice& l);

enum class Verdict { Yes, No, Indeterminate };
std::string verdict_str(Verdict v);

struct SimplicityReport {
  bool semisimple = false;
  int centroid_dim = 0;
  Verdict simple = Verdict::No;
  Verdict just_infinite = Verdict::No;
};

SimplicityReport simplicity_report(const LieLattice& l);

// Built-in catalog: abelian (dim parameter), heisenberg, heisenberg_powerful,
// sl2, so3, sl2_plus_sl2.
LieLattice builtin_lattice(const std::string& name, const Int& p, int dim = 0);
std::vector<std::string> builtin_names();

}  // namespace lielat
