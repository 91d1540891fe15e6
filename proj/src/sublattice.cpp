#include "lielat/sublattice.hpp"

namespace lielat {

Sublattice::Sublattice(const LieLattice& parent, const QMatrix& basis) : parent_(&parent), b_(basis) {
  if (basis.rows() != parent.dim || basis.cols() != parent.dim)
    throw InvalidInput("Sublattice: basis must be d x d");
  if (!basis.is_p_integral(parent.p)) throw NotPIntegral("Sublattice: basis not p-integral");
  b_ = hnf_p(basis, parent.p);  // throws SingularMatrix for rank-deficient input
}

Sublattice Sublattice::full(const LieLattice& parent) {
  return Sublattice(parent, QMatrix::identity(parent.dim));
}

long long Sublattice::index_exponent() const {
  // HNF is triangular with p-power pivots.
  long long e = 0;
  for (int i = 0; i < b_.rows(); ++i) e += vp(b_.at(i, i), parent_->p).value();
  return e;
}

bool Sublattice::contains(const std::vector<Rat>& v) const {
  auto x = b_.solve(v);
  if (!x) return false;
  for (const auto& c : *x)
    if (!p_integral(c, parent_->p)) return false;
  return true;
}

bool is_subalgebra(const Sublattice& m) {
  const LieLattice& l = m.parent();
  for (int i = 0; i < l.dim; ++i)
    for (int j = i + 1; j < l.dim; ++j) {
      auto br = l.bracket(m.basis().column(i), m.basis().column(j));
      if (!m.contains(br)) return false;
    }
  return true;
}

QMatrix gram(const Sublattice& m, const QMatrix& killing_a) {
  return m.basis().transpose() * killing_a * m.basis();
}

QMatrix gram(const Sublattice& m) {
  return gram(m, killing_matrix(m.parent()).a);
}

Sublattice transform(const Sublattice& m, const QMatrix& s) {
  if (s.det() == 0) throw InvalidInput("transform: singular map");
  QMatrix sb = s * m.basis();
  if (!sb.is_p_integral(m.parent().p))
    throw NotASublattice("transform: image basis not p-integral");
  return Sublattice(m.parent(), sb);
}

Sublattice scale_power(const LieLattice& l, long long e) {
  if (e < 0) throw InvalidInput("scale_power: negative exponent");
  return Sublattice(l, QMatrix::identity(l.dim) * Rat(pow_p(l.p, e)));
}

Sublattice scale_power(const Sublattice& m, long long e) {
  if (e < 0) throw InvalidInput("scale_power: negative exponent");
  return Sublattice(m.parent(), m.basis() * Rat(pow_p(m.parent().p, e)));
}

Sublattice lattice_sum(const Sublattice& m, const Sublattice& n) {
  int d = m.parent().dim;
  QMatrix cat(d, 2 * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      cat.at(i, j) = m.basis().at(i, j);
      cat.at(i, d + j) = n.basis().at(i, j);
    }
  HnfResult h = hnf_p_transform(cat, m.parent().p);
  QMatrix b(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) b.at(i, j) = h.h.at(i, j);
  return Sublattice(m.parent(), b);
}

Sublattice lattice_intersect(const Sublattice& m, const Sublattice& n) {
  // Saturated kernel of [B_M | -B_N] over the local ring, via the unimodular
  // transform of the column HNF; intersection basis = B_M * (x-parts).
  int d = m.parent().dim;
  QMatrix cat(d, 2 * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      cat.at(i, j) = m.basis().at(i, j);
      cat.at(i, d + j) = -n.basis().at(i, j);
    }
  HnfResult h = hnf_p_transform(cat, m.parent().p);
  if (h.rank != d) throw SingularMatrix("lattice_intersect: unexpected rank");
  QMatrix xpart(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) xpart.at(i, j) = h.u.at(i, d + j);
  return Sublattice(m.parent(), m.basis() * xpart);
}

LieLattice intrinsic_presentation(const Sublattice& m) {
  const LieLattice& l = m.parent();
  LieLattice r;
  r.name = l.name + "/sub";
  r.p = l.p;
  r.dim = l.dim;
  for (int i = 0; i < l.dim; ++i)
    for (int j = i + 1; j < l.dim; ++j) {
      auto br = l.bracket(m.basis().column(i), m.basis().column(j));
      auto x = m.basis().solve(br);
      if (!x) throw NotASublattice("intrinsic_presentation: bracket outside span");
      for (const auto& c : *x)
        if (!p_integral(c, l.p))
          throw NotASublattice("intrinsic_presentation: not a subalgebra");
      r.set_bracket(i, j, *x);
    }
  return r;
}

}  // namespace lielat
