#include "lielat/lattice.hpp"

#include <algorithm>

namespace lielat {

std::vector<Rat> LieLattice::bracket_basis(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim || j >= dim)
    throw InvalidInput("bracket_basis: index out of range");
  std::vector<Rat> r(dim, Rat(0));
  if (i == j) return r;
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = brackets.find({i, j});
  if (it == brackets.end()) return r;
  r = it->second;
  if (flip)
    for (auto& x : r) x = -x;
  return r;
}

std::vector<Rat> LieLattice::bracket(const std::vector<Rat>& x,
                                     const std::vector<Rat>& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw InvalidInput("bracket: dimension mismatch");
  std::vector<Rat> r(dim, Rat(0));
  for (const auto& [ij, c] : brackets) {
    auto [i, j] = ij;
    Rat f = x[i] * y[j] - x[j] * y[i];
    if (f == 0) continue;
    for (int k = 0; k < dim; ++k)
      if (c[k] != 0) r[k] += f * c[k];
  }
  return r;
}

void LieLattice::set_bracket(int i, int j, std::vector<Rat> coeffs) {
  if (!(0 <= i && i < j && j < dim)) throw InvalidInput("set_bracket: need 0 <= i < j < dim");
  if (static_cast<int>(coeffs.size()) != dim)
    throw InvalidInput("set_bracket: coefficient vector length");
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& x) { return x == 0; })) {
    brackets.erase({i, j});
    return;
  }
  brackets[{i, j}] = std::move(coeffs);
}

ValidationReport validate(const LieLattice& l) {
  ValidationReport rep;
  if (l.dim <= 0) {
    rep.ok = false;
    rep.failure = "not-a-lattice: non-positive dimension";
    return rep;
  }
  if (!is_prime(l.p)) {
    rep.ok = false;
    rep.failure = "not-a-lattice: p is not prime";
    return rep;
  }
  for (const auto& [ij, c] : l.brackets) {
    auto [i, j] = ij;
    if (!(0 <= i && i < j && j < l.dim) || static_cast<int>(c.size()) != l.dim) {
      rep.ok = false;
      rep.failure = "not-a-lattice: malformed bracket entry";
      rep.i = i;
      rep.j = j;
      return rep;
    }
    for (int k = 0; k < l.dim; ++k) {
      if (!p_integral(c[k], l.p)) {
        rep.ok = false;
        rep.failure = "not-a-lattice: structure constant with v_p < 0";
        rep.i = i;
        rep.j = j;
        rep.k = k;
        return rep;
      }
    }
  }
  // Jacobi on all basis triples i < j < k.
  for (int i = 0; i < l.dim; ++i)
    for (int j = i + 1; j < l.dim; ++j)
      for (int k = j + 1; k < l.dim; ++k) {
        std::vector<Rat> ei(l.dim, Rat(0)), ej(l.dim, Rat(0)), ek(l.dim, Rat(0));
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        auto s1 = l.bracket(l.bracket(ei, ej), ek);
        auto s2 = l.bracket(l.bracket(ej, ek), ei);
        auto s3 = l.bracket(l.bracket(ek, ei), ej);
        for (int t = 0; t < l.dim; ++t) {
          if (s1[t] + s2[t] + s3[t] != 0) {
            rep.ok = false;
            rep.failure = "not-a-lie-algebra: Jacobi identity fails";
            rep.i = i;
            rep.j = j;
            rep.k = k;
            return rep;
          }
        }
      }
  return rep;
}

void validate_or_throw(const LieLattice& l) {
  ValidationReport r = validate(l);
  if (r.ok) return;
  if (r.failure.rfind("not-a-lie-algebra", 0) == 0)
    throw NotALieAlgebra(r.failure, r.i, r.j, r.k);
  throw NotALattice(r.failure);
}

QMatrix ad_matrix(const LieLattice& l, const std::vector<Rat>& x) {
  if (static_cast<int>(x.size()) != l.dim) throw InvalidInput("ad_matrix: dimension mismatch");
  QMatrix m(l.dim, l.dim);
  for (int j = 0; j < l.dim; ++j) {
    std::vector<Rat> ej(l.dim, Rat(0));
    ej[j] = 1;
    auto col = l.bracket(x, ej);
    for (int i = 0; i < l.dim; ++i) m.at(i, j) = col[i];
  }
  return m;
}

namespace {

QMatrix ad_basis(const LieLattice& l, int i) {
  std::vector<Rat> ei(l.dim, Rat(0));
  ei[i] = 1;
  return ad_matrix(l, ei);
}

}  // namespace

KillingData killing_matrix(const LieLattice& l) {
  std::vector<QMatrix> ads;
  ads.reserve(l.dim);
  for (int i = 0; i < l.dim; ++i) ads.push_back(ad_basis(l, i));
  KillingData kd{QMatrix(l.dim, l.dim), Rat(0), PVal::infinity()};
  for (int i = 0; i < l.dim; ++i)
    for (int j = i; j < l.dim; ++j) {
      Rat t = (ads[i] * ads[j]).trace();
      kd.a.at(i, j) = t;
      kd.a.at(j, i) = t;
    }
  kd.det_a = kd.a.det();
  kd.vp_det_a = vp(kd.det_a, l.p);
  return kd;
}

SemisimpleCertificate is_semisimple(const LieLattice& l) {
  KillingData kd = killing_matrix(l);
  return SemisimpleCertificate{kd.det_a != 0, kd.det_a, kd.vp_det_a};
}

bool is_powerful(const LieLattice& l) {
  long long need = (l.p == 2) ? 2 : 1;
  for (const auto& [ij, c] : l.brackets)
    for (const auto& x : c)
      if (x != 0 && vp(x, l.p).value() < need) return false;
  return true;
}

namespace {

// Span of [L, W] given a basis of W, as coordinate row vectors.
std::vector<std::vector<Rat>> bracket_span(const LieLattice& l,
                                           const std::vector<std::vector<Rat>>& left,
                                           const std::vector<std::vector<Rat>>& right) {
  std::vector<std::vector<Rat>> prods;
  for (const auto& x : left)
    for (const auto& y : right) prods.push_back(l.bracket(x, y));
  return row_space_basis(prods);
}

std::vector<std::vector<Rat>> full_basis(int dim) {
  std::vector<std::vector<Rat>> b;
  for (int i = 0; i < dim; ++i) {
    std::vector<Rat> e(dim, Rat(0));
    e[i] = 1;
    b.push_back(std::move(e));
  }
  return b;
}

}  // namespace

SeriesProfile series_profile(const LieLattice& l) {
  SeriesProfile prof;
  auto all = full_basis(l.dim);

  auto run = [&](bool lower_central) {
    std::vector<int> ranks;
    auto cur = all;
    ranks.push_back(static_cast<int>(cur.size()));
    while (true) {
      auto next = lower_central ? bracket_span(l, all, cur) : bracket_span(l, cur, cur);
      int r = static_cast<int>(next.size());
      ranks.push_back(r);
      if (r == 0 || r == ranks[ranks.size() - 2]) break;
      cur = std::move(next);
    }
    return ranks;
  };

  prof.lower_central_ranks = run(true);
  prof.derived_ranks = run(false);
  if (prof.lower_central_ranks.back() == 0)
    prof.nilpotency_class = static_cast<int>(prof.lower_central_ranks.size()) - 1;
  prof.solvable = prof.derived_ranks.back() == 0;
  return prof;
}

namespace {

// Nilpotency of the matrix algebra spanned by `gens` in the operator sense:
// every element acts nilpotently, decided by the descending column-space
// chain V_0 = full space, V_{m+1} = span{ g v : g in gens, v in V_m }.
// By Engel's theorem it reaches 0 within d steps iff all elements are
// nilpotent matrices (the hypothesis under which automorphism eigenvalues
// are roots of unity).
std::pair<bool, int> matrix_algebra_nilpotent(const std::vector<QMatrix>& gens, int d) {
  std::vector<std::vector<Rat>> cur;
  for (int i = 0; i < d; ++i) {
    std::vector<Rat> e(d, Rat(0));
    e[i] = 1;
    cur.push_back(std::move(e));
  }
  int steps = 0;
  size_t prev = cur.size();
  while (!cur.empty()) {
    std::vector<std::vector<Rat>> next;
    for (const auto& g : gens)
      for (const auto& v : cur) next.push_back(g.apply(v));
    cur = row_space_basis(next);
    ++steps;
    if (cur.size() == prev && !cur.empty()) return {false, steps};
    prev = cur.size();
  }
  return {true, steps};
}

}  // namespace

DerivationAlgebra derivations(const LieLattice& l) {
  int d = l.dim;
  int nunk = d * d;  // D[r][c] at index r*d + c
  std::vector<std::vector<Rat>> eqs;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      auto cij = l.bracket_basis(i, j);
      for (int r = 0; r < d; ++r) {
        // row: (D [a_i,a_j])_r - ([D a_i, a_j] + [a_i, D a_j])_r = 0
        std::vector<Rat> row(nunk, Rat(0));
        for (int k = 0; k < d; ++k) row[r * d + k] += cij[k];
        for (int k = 0; k < d; ++k) {
          auto ckj = l.bracket_basis(k, j);  // [a_k, a_j]
          row[k * d + i] -= ckj[r];
          auto cik = l.bracket_basis(i, k);  // [a_i, a_k]
          row[k * d + j] -= cik[r];
        }
        eqs.push_back(std::move(row));
      }
    }
  DerivationAlgebra der;
  if (eqs.empty()) {
    // Abelian: every matrix is a derivation.
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        QMatrix m(d, d);
        m.at(r, c) = 1;
        der.basis.push_back(std::move(m));
      }
  } else {
    QMatrix sys = QMatrix::from_rows(eqs);
    for (const auto& v : sys.kernel_basis()) {
      QMatrix m(d, d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m.at(r, c) = v[static_cast<size_t>(r) * d + c];
      der.basis.push_back(std::move(m));
    }
  }
  der.dim = static_cast<int>(der.basis.size());
  if (der.dim == 0) {
    der.nilpotent = true;
    der.chain_length = 0;
  } else {
    auto [nil, steps] = matrix_algebra_nilpotent(der.basis, d);
    der.nilpotent = nil;
    der.chain_length = steps;
  }
  return der;
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "indeterminate";
  }
}

namespace {

// Rational roots of a monic-over-Q polynomial given by exact coefficients
// c_0..c_n (candidates via the rational root theorem after clearing
// denominators).
std::vector<Rat> rational_roots(const std::vector<Rat>& c) {
  Int lcm = 1;
  for (const auto& x : c) lcm = boost::multiprecision::lcm(lcm, denominator(x));
  std::vector<Int> ic;
  for (const auto& x : c) ic.push_back(numerator(x * Rat(lcm)));
  while (!ic.empty() && ic.back() == 0) ic.pop_back();
  if (ic.empty()) return {};
  auto eval = [&](const Rat& t) {
    Rat v(0);
    for (auto it = ic.rbegin(); it != ic.rend(); ++it) v = v * t + Rat(*it);
    return v;
  };
  std::vector<Rat> roots;
  if (ic[0] == 0) roots.push_back(Rat(0));
  size_t lead = ic.size() - 1;
  size_t low = 0;
  while (ic[low] == 0) ++low;
  Int a0 = abs(ic[low]), an = abs(ic[lead]);
  std::vector<Int> ps, qs;
  for (Int d = 1; d * d <= a0; ++d)
    if (a0 % d == 0) {
      ps.push_back(d);
      ps.push_back(a0 / d);
    }
  for (Int d = 1; d * d <= an; ++d)
    if (an % d == 0) {
      qs.push_back(d);
      qs.push_back(an / d);
    }
  for (const auto& pnum : ps)
    for (const auto& qden : qs)
      for (int sign : {1, -1}) {
        Rat t(sign * pnum, qden);
        if (eval(t) == 0 && std::find(roots.begin(), roots.end(), t) == roots.end())
          roots.push_back(t);
      }
  return roots;
}

}  // namespace

SimplicityReport simplicity_report(const LieLattice& l) {
  SimplicityReport rep;
  rep.semisimple = is_semisimple(l).semisimple;
  int d = l.dim;
  // Centroid: C with C ad(a_i) = ad(a_i) C for all i.
  std::vector<QMatrix> ads;
  for (int i = 0; i < d; ++i) ads.push_back(ad_basis(l, i));
  std::vector<std::vector<Rat>> eqs;
  for (const auto& adm : ads)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        std::vector<Rat> row(static_cast<size_t>(d) * d, Rat(0));
        for (int k = 0; k < d; ++k) {
          row[static_cast<size_t>(r) * d + k] += adm.at(k, c);  // (C ad)_{rc}
          row[static_cast<size_t>(k) * d + c] -= adm.at(r, k);  // (ad C)_{rc}
        }
        eqs.push_back(std::move(row));
      }
  std::vector<QMatrix> centroid;
  for (const auto& v : QMatrix::from_rows(eqs).kernel_basis()) {
    QMatrix m(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m.at(r, c) = v[static_cast<size_t>(r) * d + c];
    centroid.push_back(std::move(m));
  }
  rep.centroid_dim = static_cast<int>(centroid.size());

  if (d == 1) {
    // The Zp case: abelian, just-infinite.
    rep.simple = Verdict::No;
    rep.just_infinite = Verdict::Yes;
    return rep;
  }
  if (!rep.semisimple) {
    rep.simple = Verdict::No;
    rep.just_infinite = Verdict::No;
    return rep;
  }
  if (rep.centroid_dim == 1) {
    rep.simple = Verdict::Yes;
    rep.just_infinite = Verdict::Yes;
    return rep;
  }
  // Semisimple with centroid_dim > 1: the algebra splits whenever some
  // centroid element has a rational eigenvalue with a proper eigenspace
  // (the eigenspace is an ideal). Otherwise indeterminate.
  for (const auto& c : centroid) {
    for (const auto& lam : rational_roots(c.char_poly())) {
      QMatrix shifted = c;
      for (int i = 0; i < d; ++i) shifted.at(i, i) -= lam;
      int ker = d - shifted.rank();
      if (ker > 0 && ker < d) {
        rep.simple = Verdict::No;
        rep.just_infinite = Verdict::No;
        return rep;
      }
    }
  }
  rep.simple = Verdict::Indeterminate;
  rep.just_infinite = Verdict::Indeterminate;
  return rep;
}

std::vector<std::string> builtin_names() {
  return {"abelian", "heisenberg", "heisenberg_powerful", "sl2", "so3", "sl2_plus_sl2"};
}

LieLattice builtin_lattice(const std::string& name, const Int& p, int dim) {
  if (!is_prime(p)) throw InvalidInput("builtin_lattice: p is not prime");
  LieLattice l;
  l.name = name;
  l.p = p;
  auto vec = [](int d, int k, const Rat& v) {
    std::vector<Rat> r(d, Rat(0));
    r[k] = v;
    return r;
  };
  if (name == "abelian") {
    if (dim <= 0) throw InvalidInput("builtin_lattice: abelian requires dim >= 1");
    l.dim = dim;
    return l;
  }
  if (name == "heisenberg" || name == "heisenberg_powerful") {
    l.dim = 3;
    l.labels = {"x", "y", "z"};
    Rat c = name == "heisenberg" ? Rat(1) : Rat(p == 2 ? Int(4) : p);
    l.set_bracket(0, 1, vec(3, 2, c));
    return l;
  }
  if (name == "sl2") {
    // Basis (e, h, f): [e,h] = -2e, [e,f] = h, [h,f] = -2f.
    l.dim = 3;
    l.labels = {"e", "h", "f"};
    l.set_bracket(0, 1, vec(3, 0, Rat(-2)));
    l.set_bracket(0, 2, vec(3, 1, Rat(1)));
    l.set_bracket(1, 2, vec(3, 2, Rat(-2)));
    return l;
  }
  if (name == "so3") {
    // Cyclic: [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
    l.dim = 3;
    l.labels = {"e1", "e2", "e3"};
    l.set_bracket(0, 1, vec(3, 2, Rat(1)));
    l.set_bracket(1, 2, vec(3, 0, Rat(1)));
    l.set_bracket(0, 2, vec(3, 1, Rat(-1)));
    return l;
  }
  if (name == "sl2_plus_sl2") {
    l.dim = 6;
    l.labels = {"e1", "h1", "f1", "e2", "h2", "f2"};
    for (int b = 0; b < 2; ++b) {
      int o = 3 * b;
      l.set_bracket(o + 0, o + 1, vec(6, o + 0, Rat(-2)));
      l.set_bracket(o + 0, o + 2, vec(6, o + 1, Rat(1)));
      l.set_bracket(o + 1, o + 2, vec(6, o + 2, Rat(-2)));
    }
    return l;
  }
  throw InvalidInput("builtin_lattice: unknown catalog name '" + name + "'");
}

}  // namespace lielat
