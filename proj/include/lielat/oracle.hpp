#pragma once

#include <map>

#include "lielat/stability.hpp"

namespace lielat {

struct EnumEntry {
  Sublattice sub;
  long long index_exp;
  bool subalgebra;
};

struct EnumReport {
  long long max_exponent = 0;
  std::vector<EnumEntry> entries;               // deterministic order
  std::map<long long, long long> counts;        // per index exponent
  std::map<long long, long long> subalgebra_counts;
};

// All sublattices of index exponent <= k, as canonical HNF matrices with
// p-power pivots, each tagged with is_subalgebra. Enumeration order:
// lexicographic over pivot exponent vectors, then over reduced off-pivot
// entries. Throws BudgetError when the enumeration would exceed `budget`
// matrices.
EnumReport enum_subalgebras(const LieLattice& l, long long k, long long budget = 2000000);

// Isomorphism invariants of a subalgebra, optionally capped at precision e
// (capped values are what survive reduction mod p^e).
struct InvariantVector {
  std::vector<long long> gram_profile;      // Smith exponents of B^T A B (nonzero divisors)
  std::vector<long long> bracket_profile;   // Smith exponents of the flattened bracket tensor
  std::vector<int> lc_ranks_modp;           // lower-central ranks of the mod-p reduction
  std::vector<int> derived_ranks_modp;
  bool operator==(const InvariantVector&) const = default;
};

InvariantVector invariant_vector(const Sublattice& m, const QMatrix& killing_a,
                                 long long cap = -1);  // cap < 0: uncapped

struct IsoClassReport {
  long long precision = 1;
  std::vector<InvariantVector> invariants;  // one per input item
  std::vector<std::vector<int>> classes;    // partition by item position
  std::string method;                       // which refinement ran
};

// Partition by invariant vector, refined by exhaustive mod-p isomorphism
// search (d <= 3; for e >= 2 candidates are lifted from mod-p solutions by
// linear correction steps; failure to lift is inconclusive, never a
// negative). Items must be subalgebras.
IsoClassReport classify_mod_pk(const LieLattice& l, const std::vector<Sublattice>& items,
                               long long e, long long budget = 2000000);

struct Violation {
  int m_index, n_index;          // positions in the enumeration report
  QMatrix witness;               // exact rational isomorphism, ambient coordinates
  IsoIndexReport report;         // re-verification by stability.iso_index_check
};

struct OracleReport {
  EnumReport enumeration;
  std::vector<Violation> violations;
  long long pairs_screened = 0;
  long long inconclusive_pairs = 0;  // finite-precision match that did not lift
};

// Desk-scale index-stability verification: enumerates subalgebras up to
// index exponent k and reports every pair that is exactly isomorphic (via a
// verified rational witness) yet has distinct index exponents. Finite
// precision matches that do not lift to exact witnesses are counted as
// inconclusive, never reported.
OracleReport exhaustive_stability_check(const LieLattice& l, long long k, long long e,
                                        long long budget = 2000000);

// Exact isomorphism test between two structure presentations: S maps the
// basis of `a` to `b`-coordinates with [S x, S y]_b = S [x, y]_a.
bool is_exact_presentation_iso(const LieLattice& a, const LieLattice& b, const QMatrix& s);

}  // namespace lielat
