#include "lielat/group.hpp"

#include <set>

namespace lielat {

namespace {

// Nilpotency class for the BCH layer; throws for unsupported inputs.
int bch_class(const LieLattice& l) {
  if (!is_powerful(l)) throw NotPowerful("bch: lattice is not powerful");
  if (l.p == 2) throw UnsupportedClass("bch: p = 2 is not supported");
  SeriesProfile sp = series_profile(l);
  if (!sp.nilpotency_class) throw UnsupportedClass("bch: lattice is not nilpotent");
  int c = *sp.nilpotency_class;
  if (Int(c) >= l.p) throw UnsupportedClass("bch: class must satisfy c < p");
  if (c > 4) throw UnsupportedClass("bch: class > 4 is not supported");
  return c;
}

std::vector<Rat> reduce_coords(const std::vector<Rat>& v, const Int& p, long long e) {
  std::vector<Rat> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(residue_mod_pk(v[i], p, e));
  return r;
}

std::vector<Rat> vadd(const std::vector<Rat>& a, const std::vector<Rat>& b, const Rat& f) {
  std::vector<Rat> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + f * b[i];
  return r;
}

std::vector<Rat> hausdorff(const LieLattice& l, int c, const std::vector<Rat>& x,
                           const std::vector<Rat>& y) {
  std::vector<Rat> z = vadd(x, y, Rat(1));
  if (c >= 2) {
    auto xy = l.bracket(x, y);
    z = vadd(z, xy, Rat(1, 2));
    if (c >= 3) {
      auto xxy = l.bracket(x, xy);
      auto yyx = l.bracket(y, l.bracket(y, x));
      z = vadd(z, xxy, Rat(1, 12));
      z = vadd(z, yyx, Rat(1, 12));
      if (c >= 4) z = vadd(z, l.bracket(y, xxy), Rat(-1, 24));
    }
  }
  return z;
}

}  // namespace

GroupElement make_element(const LieLattice& l, std::vector<Rat> coords, long long precision) {
  if (static_cast<int>(coords.size()) != l.dim)
    throw InvalidInput("make_element: dimension mismatch");
  if (precision < 1) throw InvalidInput("make_element: precision must be >= 1");
  for (const auto& c : coords)
    if (!p_integral(c, l.p)) throw NotPIntegral("make_element: coordinate not p-integral");
  return GroupElement{std::move(coords), precision};
}

GroupElement bch_mul(const LieLattice& l, const GroupElement& g, const GroupElement& h) {
  int c = bch_class(l);
  if (g.precision != h.precision) throw InvalidInput("bch_mul: precision mismatch");
  if (static_cast<int>(g.coordinates.size()) != l.dim ||
      static_cast<int>(h.coordinates.size()) != l.dim)
    throw InvalidInput("bch_mul: dimension mismatch");
  auto z = hausdorff(l, c, g.coordinates, h.coordinates);
  return GroupElement{reduce_coords(z, l.p, g.precision), g.precision};
}

GroupElement bch_inverse(const LieLattice& l, const GroupElement& g) {
  std::vector<Rat> neg(g.coordinates.size());
  for (size_t i = 0; i < neg.size(); ++i) neg[i] = -g.coordinates[i];
  return GroupElement{reduce_coords(neg, l.p, g.precision), g.precision};
}

GroupElement bch_identity(const LieLattice& l, long long precision) {
  return GroupElement{std::vector<Rat>(l.dim, Rat(0)), precision};
}

GroupIndexReport group_index_check(const LieLattice& l, const Sublattice& m, long long e,
                                   long long budget) {
  int c = bch_class(l);
  if (e < 1) throw InvalidInput("group_index_check: precision must be >= 1");
  if (!is_subalgebra(m)) throw NotASubgroup("group_index_check: M is not a subalgebra");
  const Int& p = l.p;
  int d = l.dim;
  Int pe = pow_p(p, e);

  // Faithful reduction: p^e L must lie inside M.
  for (int i = 0; i < d; ++i) {
    std::vector<Rat> v(d, Rat(0));
    v[i] = Rat(pe);
    if (!m.contains(v))
      throw InvalidInput("group_index_check: precision too small (p^e L not inside M)");
  }

  Int space = 1;
  for (int i = 0; i < d; ++i) space *= pe;
  if (space > budget) throw BudgetError("group_index_check: budget exceeded", 0);
  long long nspace = space.convert_to<long long>();
  long long pell = pe.convert_to<long long>();

  auto encode = [&](const std::vector<Rat>& v) {
    long long code = 0;
    for (int i = d - 1; i >= 0; --i)
      code = code * pell + residue_mod_pk(v[i], p, e).convert_to<long long>();
    return code;
  };
  auto decode = [&](long long code) {
    std::vector<Rat> v(d);
    for (int i = 0; i < d; ++i) {
      v[i] = Rat(Int(code % pell));
      code /= pell;
    }
    return v;
  };

  // Distinct elements of M's reduction mod p^e.
  std::set<long long> mred;
  {
    std::vector<long long> coeff(d, 0);
    while (true) {
      std::vector<Rat> v(d, Rat(0));
      for (int i = 0; i < d; ++i)
        if (coeff[i] != 0) v = vadd(v, m.basis().column(i), Rat(coeff[i]));
      mred.insert(encode(v));
      int t = d - 1;
      while (t >= 0) {
        if (++coeff[t] < pell) break;
        coeff[t] = 0;
        --t;
      }
      if (t < 0) break;
    }
  }

  // Closure of the reduction under the group law.
  std::vector<std::vector<Rat>> mvecs;
  mvecs.reserve(mred.size());
  for (long long code : mred) mvecs.push_back(decode(code));
  for (const auto& u : mvecs)
    for (const auto& v : mvecs) {
      auto prod = reduce_coords(hausdorff(l, c, u, v), p, e);
      if (!mred.count(encode(prod)))
        throw NotASubgroup("group_index_check: M not closed under bch_mul at this precision");
    }

  // Coset enumeration: expand one coset at a time.
  std::vector<bool> visited(static_cast<size_t>(nspace), false);
  Int cosets = 0;
  for (long long g = 0; g < nspace; ++g) {
    if (visited[static_cast<size_t>(g)]) continue;
    ++cosets;
    auto gv = decode(g);
    for (const auto& mv : mvecs) {
      auto el = reduce_coords(hausdorff(l, c, gv, mv), p, e);
      visited[static_cast<size_t>(encode(el))] = true;
    }
  }

  GroupIndexReport rep;
  rep.coset_count = cosets;
  rep.lattice_index_exponent = m.index_exponent();
  rep.agree = cosets == pow_p(p, rep.lattice_index_exponent);
  return rep;
}

}  // namespace lielat
