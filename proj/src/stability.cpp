#include "lielat/stability.hpp"

namespace lielat {

AutoMap automorphism_check(const LieLattice& l, const QMatrix& s) {
  if (s.rows() != l.dim || s.cols() != l.dim)
    throw InvalidInput("automorphism_check: dimension mismatch");
  AutoMap am;
  am.s = s;
  am.det = s.det();
  am.det_valuation = vp(am.det, l.p);
  if (am.det == 0) {
    am.verified = false;
    return am;
  }
  for (int i = 0; i < l.dim; ++i)
    for (int j = i + 1; j < l.dim; ++j) {
      auto lhs = s.apply(l.bracket_basis(i, j));
      auto rhs = l.bracket(s.column(i), s.column(j));
      if (lhs != rhs) {
        am.verified = false;
        return am;
      }
    }
  am.verified = true;
  return am;
}

SerreVerdict serre_verdict(const LieLattice& l, const AutoMap& s) {
  if (!s.verified) throw NotAnAutomorphism("serre_verdict: map is not a verified automorphism");
  SerreVerdict v;
  v.det_valuation = s.det_valuation.value();
  v.passes = v.det_valuation == 0;
  v.eigen_valuations = newton_slopes(s.s.char_poly(), l.p);
  return v;
}

IsoIndexReport iso_index_check(const LieLattice& l, const Sublattice& m,
                               const Sublattice& n, const QMatrix& phi) {
  if (phi.rows() != l.dim || phi.cols() != l.dim)
    throw InvalidInput("iso_index_check: dimension mismatch");
  if (phi.det() == 0) throw InvalidIso("iso_index_check: singular map");
  // Bracket preservation on M's basis; by bilinearity this is equivalent to
  // phi being an automorphism of the ambient Qp-algebra.
  for (int i = 0; i < l.dim; ++i)
    for (int j = i + 1; j < l.dim; ++j) {
      auto u = m.basis().column(i);
      auto v = m.basis().column(j);
      auto lhs = phi.apply(l.bracket(u, v));
      auto rhs = l.bracket(phi.apply(u), phi.apply(v));
      if (lhs != rhs) throw InvalidIso("iso_index_check: map does not preserve brackets");
    }
  QMatrix c = phi * m.basis();
  if (!c.is_p_integral(l.p)) throw InvalidIso("iso_index_check: image basis not p-integral");
  if (!(hnf_p(c, l.p) == n.basis()))
    throw BasisMismatch("iso_index_check: N is not the image of M under phi");

  IsoIndexReport rep;
  rep.index_m = m.index_exponent();
  rep.index_n = n.index_exponent();
  rep.equal = rep.index_m == rep.index_n;
  SemisimpleCertificate cert = is_semisimple(l);
  if (cert.semisimple) {
    rep.gram_checked = true;
    const QMatrix a = killing_matrix(l).a;
    rep.gram_equal =
        m.basis().transpose() * a * m.basis() == c.transpose() * a * c;
  }
  return rep;
}

std::string status_str(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::Stable: return "Stable";
    case StabilityStatus::Unstable: return "Unstable";
    default: return "Unknown";
  }
}

std::string certificate_str(CertificateKind c) {
  switch (c) {
    case CertificateKind::Semisimple: return "semisimple";
    case CertificateKind::DerNilpotent: return "der_nilpotent";
    case CertificateKind::Witness: return "witness";
    default: return "none";
  }
}

std::optional<AutoMap> search_unstable_witness(const LieLattice& l, long long budget,
                                               const std::vector<QMatrix>& extra) {
  validate_or_throw(l);
  long long tried = 0;
  auto consider = [&](const QMatrix& cand) -> std::optional<AutoMap> {
    ++tried;
    AutoMap am = automorphism_check(l, cand);
    if (am.verified && !am.det_valuation.is_infinite() && am.det_valuation.value() != 0)
      return am;
    return std::nullopt;
  };

  // (a) p * identity.
  if (auto w = consider(QMatrix::identity(l.dim) * Rat(l.p))) return w;

  // (b) diagonal p-power scalings, weight vectors in {0,1}^d in descending
  // binary order (skipping all-ones = p*I, already tried, and all-zeros).
  if (l.dim <= 62) {
    for (long long mask = (1LL << l.dim) - 2; mask > 0; --mask) {
      if (tried >= budget) break;
      std::vector<Rat> diag(l.dim);
      for (int i = 0; i < l.dim; ++i)
        diag[i] = (mask >> (l.dim - 1 - i)) & 1 ? Rat(l.p) : Rat(1);
      if (auto w = consider(QMatrix::diagonal(diag))) return w;
    }
  }

  // (c) user-supplied candidates.
  for (const auto& cand : extra) {
    if (tried >= budget) break;
    if (auto w = consider(cand)) return w;
  }
  return std::nullopt;
}

StabilityVerdict stability_certificate(const LieLattice& l, long long budget) {
  validate_or_throw(l);
  StabilityVerdict v;
  SemisimpleCertificate ss = is_semisimple(l);
  if (ss.semisimple) {
    v.status = StabilityStatus::Stable;
    v.certificate = CertificateKind::Semisimple;
    v.det_killing = ss.det_a;
    v.notes = "Killing determinant nonzero";
    return v;
  }
  DerivationAlgebra der = derivations(l);
  if (der.nilpotent) {
    v.status = StabilityStatus::Stable;
    v.certificate = CertificateKind::DerNilpotent;
    v.chain_length = der.chain_length;
    v.notes = "derivation algebra nilpotent";
    return v;
  }
  if (auto w = search_unstable_witness(l, budget)) {
    v.status = StabilityStatus::Unstable;
    v.certificate = CertificateKind::Witness;
    v.witness = *w;
    v.notes = "verified automorphism with |det| != 1";
    return v;
  }
  v.status = StabilityStatus::Unknown;
  v.certificate = CertificateKind::None;
  v.notes = "no certificate within budget";
  return v;
}

IndexRatio index_ratio(const LieLattice& l, const Sublattice& m, const Sublattice& n,
                       const QMatrix& phi) {
  IsoIndexReport rep = iso_index_check(l, m, n, phi);
  IndexRatio r;
  r.numerator_exponent = rep.index_m;
  r.denominator_exponent = rep.index_n;
  r.ratio_valuation = rep.index_m - rep.index_n;
  return r;
}

}  // namespace lielat
