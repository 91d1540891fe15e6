#pragma once

#include <optional>
#include <string>

#include "lielat/sublattice.hpp"

namespace lielat {

// A candidate (iso)morphism of the ambient Qp-algebra as an exact rational
// matrix, with verified/unverified status.
struct AutoMap {
  QMatrix s;
  bool verified = false;
  Rat det;
  PVal det_valuation = PVal::infinity();
};

// verified = true iff S is invertible and bracket-preserving over Qp
// (exact check on all basis pairs).
AutoMap automorphism_check(const LieLattice& l, const QMatrix& s);

struct SerreVerdict {
  long long det_valuation = 0;   // v_p(det s); |det s| = p^{-det_valuation}
  bool passes = false;           // |det s| = 1
  std::vector<Rat> eigen_valuations;
};

// Serre's determinant criterion for a single verified automorphism.
SerreVerdict serre_verdict(const LieLattice& l, const AutoMap& s);

struct IsoIndexReport {
  long long index_m = 0;
  long long index_n = 0;
  bool equal = false;
  bool gram_checked = false;  // only when the parent is semisimple
  bool gram_equal = false;    // B^T A B = C^T A C, entrywise exact
};

// Verifies phi as an isomorphism M -> N of Zp-Lie lattices and reports both
// indices plus the Gram identity when the parent is semisimple.
IsoIndexReport iso_index_check(const LieLattice& l, const Sublattice& m,
                               const Sublattice& n, const QMatrix& phi);

enum class StabilityStatus { Stable, Unstable, Unknown };
enum class CertificateKind { Semisimple, DerNilpotent, Witness, None };

std::string status_str(StabilityStatus s);
std::string certificate_str(CertificateKind c);

struct StabilityVerdict {
  StabilityStatus status = StabilityStatus::Unknown;
  CertificateKind certificate = CertificateKind::None;
  Rat det_killing;          // Semisimple certificate
  int chain_length = 0;     // DerNilpotent certificate
  std::optional<AutoMap> witness;  // Unstable: verified, v_p(det) != 0
  std::string notes;
};

StabilityVerdict stability_certificate(const LieLattice& l, long long budget = 100000);

// Deterministic candidate order: (a) p*I; (b) diagonal p-power scalings
// diag(p^{w_i}) for weight vectors w in {0,1}^d, enumerated in descending
// binary order; (c) user-supplied candidates. Returns the first verified map
// with v_p(det) != 0.
std::optional<AutoMap> search_unstable_witness(const LieLattice& l, long long budget = 100000,
                                               const std::vector<QMatrix>& extra = {});

struct IndexRatio {
  long long numerator_exponent = 0;
  long long denominator_exponent = 0;
  long long ratio_valuation = 0;  // numerator - denominator
};

IndexRatio index_ratio(const LieLattice& l, const Sublattice& m, const Sublattice& n,
                       const QMatrix& phi);

}  // namespace lielat
