#include "lielat/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace lielat {

namespace {

// ---- small F_p linear algebra (p fits in long long) ----

long long fp_norm(long long a, long long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

long long fp_inv(long long a, long long p) {
  long long t = 0, newt = 1, r = p, newr = fp_norm(a, p);
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  return fp_norm(t, p);
}

int fp_rref(std::vector<std::vector<long long>>& m, long long p) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] % p != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[r]);
    long long inv = fp_inv(m[r][c], p);
    for (int j = 0; j < cols; ++j) m[r][j] = fp_norm(m[r][j] * inv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] % p == 0) continue;
      long long f = fp_norm(m[i][c], p);
      for (int j = 0; j < cols; ++j) m[i][j] = fp_norm(m[i][j] - f * m[r][j], p);
    }
    ++r;
  }
  return r;
}

int fp_rank(std::vector<std::vector<long long>> m, long long p) { return fp_rref(m, p); }

// Solve A x = b over F_p; one particular solution or nullopt.
std::optional<std::vector<long long>> fp_solve(const std::vector<std::vector<long long>>& a,
                                               const std::vector<long long>& b, long long p) {
  if (a.empty()) return std::vector<long long>{};
  int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
  std::vector<std::vector<long long>> aug(rows, std::vector<long long>(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = fp_norm(a[i][j], p);
    aug[i][cols] = fp_norm(b[i], p);
  }
  fp_rref(aug, p);
  std::vector<long long> x(cols, 0);
  for (int i = 0; i < rows; ++i) {
    int lead = -1;
    for (int j = 0; j <= cols; ++j)
      if (aug[i][j] != 0) {
        lead = j;
        break;
      }
    if (lead == cols) return std::nullopt;  // 0 = nonzero
    if (lead >= 0 && lead < cols) x[lead] = aug[i][cols];
  }
  return x;
}

long long fp_det3(const std::vector<std::vector<long long>>& s, long long p) {
  int d = static_cast<int>(s.size());
  if (d == 1) return fp_norm(s[0][0], p);
  if (d == 2) return fp_norm(s[0][0] * s[1][1] - s[0][1] * s[1][0], p);
  long long det = s[0][0] * (s[1][1] * s[2][2] - s[1][2] * s[2][1]) -
                  s[0][1] * (s[1][0] * s[2][2] - s[1][2] * s[2][0]) +
                  s[0][2] * (s[1][0] * s[2][1] - s[1][1] * s[2][0]);
  return fp_norm(det, p);
}

// ---- mod-p structure tensors ----

struct FpTensor {
  int d;
  long long p;
  std::vector<long long> c;  // c[(i*d + j)*d + k]

  long long at(int i, int j, int k) const { return c[(static_cast<size_t>(i) * d + j) * d + k]; }

  bool zero() const {
    return std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; });
  }

  std::vector<long long> bracket(const std::vector<long long>& u,
                                 const std::vector<long long>& v) const {
    std::vector<long long> r(d, 0);
    for (int i = 0; i < d; ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (v[j] == 0 || i == j) continue;
        long long f = fp_norm(u[i] * v[j], p);
        if (f == 0) continue;
        for (int k = 0; k < d; ++k) r[k] = fp_norm(r[k] + f * at(i, j, k), p);
      }
    }
    return r;
  }
};

FpTensor reduce_tensor(const LieLattice& l) {
  long long p = l.p.convert_to<long long>();
  FpTensor t{l.dim, p, std::vector<long long>(static_cast<size_t>(l.dim) * l.dim * l.dim, 0)};
  for (int i = 0; i < l.dim; ++i)
    for (int j = i + 1; j < l.dim; ++j) {
      auto c = l.bracket_basis(i, j);
      for (int k = 0; k < l.dim; ++k) {
        long long r = residue_mod_pk(c[k], l.p, 1).convert_to<long long>();
        t.c[(static_cast<size_t>(i) * l.dim + j) * l.dim + k] = r;
        t.c[(static_cast<size_t>(j) * l.dim + i) * l.dim + k] = fp_norm(-r, p);
      }
    }
  return t;
}

// Lower-central / derived ranks of the mod-p reduction.
void modp_series_ranks(const FpTensor& t, std::vector<int>& lc, std::vector<int>& derived) {
  long long p = t.p;
  int d = t.d;
  auto span_rank_basis = [&](std::vector<std::vector<long long>> vecs) {
    fp_rref(vecs, p);
    std::vector<std::vector<long long>> basis;
    for (const auto& v : vecs) {
      if (std::any_of(v.begin(), v.end(), [](long long x) { return x != 0; }))
        basis.push_back(v);
    }
    return basis;
  };
  std::vector<std::vector<long long>> all;
  for (int i = 0; i < d; ++i) {
    std::vector<long long> e(d, 0);
    e[i] = 1;
    all.push_back(e);
  }
  auto run = [&](bool lower_central) {
    std::vector<int> ranks;
    auto cur = all;
    ranks.push_back(d);
    while (true) {
      std::vector<std::vector<long long>> prods;
      const auto& left = lower_central ? all : cur;
      for (const auto& x : left)
        for (const auto& y : cur) prods.push_back(t.bracket(x, y));
      auto next = span_rank_basis(std::move(prods));
      int r = static_cast<int>(next.size());
      ranks.push_back(r);
      if (r == 0 || r == ranks[ranks.size() - 2]) break;
      cur = std::move(next);
    }
    return ranks;
  };
  lc = run(true);
  derived = run(false);
}

// Valuations of the nonzero elementary divisors of a (possibly rectangular,
// possibly rank-deficient) p-integral matrix, sorted ascending.
std::vector<long long> smith_profile_rect(QMatrix m, const Int& p) {
  std::vector<long long> exps;
  int rows = m.rows(), cols = m.cols();
  int s = 0;
  while (s < std::min(rows, cols)) {
    int bi = -1, bj = -1;
    PVal best = PVal::infinity();
    for (int i = s; i < rows; ++i)
      for (int j = s; j < cols; ++j) {
        PVal v = vp(m.at(i, j), p);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best.is_infinite()) break;
    if (bi != s)
      for (int j = 0; j < cols; ++j) std::swap(m.at(bi, j), m.at(s, j));
    if (bj != s)
      for (int i = 0; i < rows; ++i) std::swap(m.at(i, bj), m.at(i, s));
    Rat pivot = m.at(s, s);
    for (int r = s + 1; r < rows; ++r) {
      if (m.at(r, s) == 0) continue;
      Rat f = m.at(r, s) / pivot;
      for (int j = s; j < cols; ++j) m.at(r, j) -= f * m.at(s, j);
    }
    for (int c = s + 1; c < cols; ++c) {
      if (m.at(s, c) == 0) continue;
      Rat f = m.at(s, c) / pivot;
      for (int i = s; i < rows; ++i) m.at(i, c) -= f * m.at(i, s);
    }
    exps.push_back(best.value());
    ++s;
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

// Enumerate invertible mod-p solutions of S * ga(x,y) = gb(Sx, Sy); calls
// `cb` with each found S (entries in [0,p)) until cb returns false or the
// search space is exhausted. Exact for d <= 3.
void find_isos_modp(const FpTensor& ta, const FpTensor& tb, long long& work, long long budget,
                    const std::function<bool(const std::vector<std::vector<long long>>&)>& cb) {
  int d = ta.d;
  long long p = ta.p;
  if (ta.zero() || tb.zero()) {
    if (ta.zero() && tb.zero()) {
      std::vector<std::vector<long long>> id(d, std::vector<long long>(d, 0));
      for (int i = 0; i < d; ++i) id[i][i] = 1;
      cb(id);
    }
    return;
  }
  auto check_all = [&](const std::vector<std::vector<long long>>& s) {
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        std::vector<long long> lhs(d, 0);
        std::vector<long long> si(d), sj(d);
        for (int r = 0; r < d; ++r) {
          si[r] = s[r][i];
          sj[r] = s[r][j];
        }
        for (int r = 0; r < d; ++r) {
          long long acc = 0;
          for (int t = 0; t < d; ++t) acc += ta.at(i, j, t) * s[r][t];
          lhs[r] = fp_norm(acc, p);
        }
        if (lhs != tb.bracket(si, sj)) return false;
      }
    return fp_det3(s, p) != 0;
  };

  // Fast path (d = 3): a bracket with weight on the third basis vector
  // determines the third column from the first two.
  if (d == 3) {
    for (int i0 = 0; i0 < 3; ++i0)
      for (int j0 = i0 + 1; j0 < 3; ++j0) {
        int k0 = 3 - i0 - j0;
        long long ck = ta.at(i0, j0, k0);
        if (ck == 0) continue;
        long long ck_inv = fp_inv(ck, p);
        std::vector<std::vector<long long>> s(3, std::vector<long long>(3, 0));
        std::vector<long long> si(3), sj(3);
        long long total = 1;
        for (int t = 0; t < 6; ++t) total *= p;
        for (long long code = 0; code < total; ++code) {
          if (++work > budget) throw BudgetError("mod-p isomorphism search budget", work);
          long long c = code;
          for (int t = 0; t < 3; ++t) {
            si[t] = c % p;
            c /= p;
          }
          for (int t = 0; t < 3; ++t) {
            sj[t] = c % p;
            c /= p;
          }
          auto w = tb.bracket(si, sj);
          for (int r = 0; r < 3; ++r) {
            long long val = w[r] - ta.at(i0, j0, i0) * si[r] - ta.at(i0, j0, j0) * sj[r];
            s[r][i0] = si[r];
            s[r][j0] = sj[r];
            s[r][k0] = fp_norm(val * ck_inv, p);
          }
          if (check_all(s)) {
            if (!cb(s)) return;
          }
        }
        return;
      }
  }

  // Full scan fallback (degenerate shapes, d <= 3 only by caller contract).
  long long total = 1;
  for (int t = 0; t < d * d; ++t) total *= p;
  std::vector<std::vector<long long>> s(d, std::vector<long long>(d, 0));
  for (long long code = 0; code < total; ++code) {
    if (++work > budget) throw BudgetError("mod-p isomorphism search budget", work);
    long long c = code;
    for (int r = 0; r < d; ++r)
      for (int t = 0; t < d; ++t) {
        s[r][t] = c % p;
        c /= p;
      }
    if (check_all(s)) {
      if (!cb(s)) return;
    }
  }
}

struct LiftResult {
  std::optional<QMatrix> exact;
  bool reached_target = false;
  QMatrix at_target;
};

// Lift a mod-p isomorphism candidate by linear correction steps. Stops with
// an exact rational (integer-entry) isomorphism when one is reached, or with
// the mod-p^target representative when the corrections stay consistent that
// far. Inconsistent corrections end the lift (inconclusive).
LiftResult newton_lift(const LieLattice& ga, const LieLattice& gb,
                       const std::vector<std::vector<long long>>& s0, long long target_m,
                       long long max_m) {
  int d = ga.dim;
  const Int& p = ga.p;
  long long pll = p.convert_to<long long>();
  LiftResult res;

  QMatrix s(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s.at(i, j) = Rat(s0[i][j]);

  auto exact_ok = [&](const QMatrix& cand) {
    return cand.det() != 0 && is_exact_presentation_iso(ga, gb, cand);
  };

  // DF depends on S only mod p, so its rows are fixed across iterations.
  std::vector<std::vector<long long>> df;
  {
    std::vector<std::vector<Rat>> bcol(d);
    for (int k = 0; k < d; ++k) bcol[k] = s.column(k);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        auto cij = ga.bracket_basis(i, j);
        std::vector<std::vector<Rat>> wk(d), vk(d);
        for (int k = 0; k < d; ++k) {
          std::vector<Rat> ek(d, Rat(0));
          ek[k] = 1;
          wk[k] = gb.bracket(ek, bcol[j]);  // [e_k, S e_j]
          vk[k] = gb.bracket(bcol[i], ek);  // [S e_i, e_k]
        }
        for (int r = 0; r < d; ++r) {
          std::vector<long long> row(static_cast<size_t>(d) * d, 0);
          for (int k = 0; k < d; ++k) {
            long long ck = residue_mod_pk(cij[k], p, 1).convert_to<long long>();
            row[static_cast<size_t>(r) * d + k] = fp_norm(row[r * d + k] + ck, pll);
          }
          for (int k = 0; k < d; ++k) {
            long long w = residue_mod_pk(wk[k][r], p, 1).convert_to<long long>();
            row[static_cast<size_t>(k) * d + i] = fp_norm(row[k * d + i] - w, pll);
            long long v = residue_mod_pk(vk[k][r], p, 1).convert_to<long long>();
            row[static_cast<size_t>(k) * d + j] = fp_norm(row[k * d + j] - v, pll);
          }
          df.push_back(std::move(row));
        }
      }
  }

  for (long long m = 1; m <= max_m; ++m) {
    // Exact check on the canonical and balanced representatives.
    if (exact_ok(s)) {
      res.exact = s;
      return res;
    }
    Int pm = pow_p(p, m);
    QMatrix balanced = s;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Int v = numerator(balanced.at(i, j));
        if (2 * v > pm) balanced.at(i, j) = Rat(v - pm);
      }
    if (exact_ok(balanced)) {
      res.exact = balanced;
      return res;
    }
    if (m == target_m) {
      res.reached_target = true;
      res.at_target = s;
    }
    if (m == max_m) break;

    // Correction: DF * T = -F(S)/p^m mod p.
    std::vector<long long> rhs;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        auto lhs = s.apply(ga.bracket_basis(i, j));
        auto rhsv = gb.bracket(s.column(i), s.column(j));
        for (int r = 0; r < d; ++r) {
          Rat f = lhs[r] - rhsv[r];
          Rat scaled = f / Rat(pm);
          if (!p_integral(scaled, p)) return res;  // should not happen
          rhs.push_back(fp_norm(-residue_mod_pk(scaled, p, 1).convert_to<long long>(), pll));
        }
      }
    auto t = fp_solve(df, rhs, pll);
    if (!t) return res;  // lift fails: inconclusive
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rat nv = s.at(i, j) + Rat((*t)[static_cast<size_t>(i) * d + j]) * Rat(pm);
        s.at(i, j) = Rat(residue_mod_pk(nv, p, m + 1));
      }
  }
  if (exact_ok(s)) res.exact = s;
  return res;
}

std::vector<long long> cap_profile(std::vector<long long> prof, long long cap) {
  if (cap >= 0)
    for (auto& k : prof) k = std::min(k, cap);
  return prof;
}

}  // namespace

bool is_exact_presentation_iso(const LieLattice& a, const LieLattice& b, const QMatrix& s) {
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j) {
      if (s.apply(a.bracket_basis(i, j)) != b.bracket(s.column(i), s.column(j))) return false;
    }
  return true;
}

EnumReport enum_subalgebras(const LieLattice& l, long long k, long long budget) {
  validate_or_throw(l);
  if (k < 0) throw InvalidInput("enum_subalgebras: k must be >= 0");
  int d = l.dim;
  const Int& p = l.p;

  // Pivot exponent vectors with sum <= k, lexicographic.
  std::vector<std::vector<long long>> pivot_vecs;
  std::vector<long long> cur(d, 0);
  std::function<void(int, long long)> gen = [&](int pos, long long remaining) {
    if (pos == d) {
      pivot_vecs.push_back(cur);
      return;
    }
    for (long long e = 0; e <= remaining; ++e) {
      cur[pos] = e;
      gen(pos + 1, remaining - e);
    }
    cur[pos] = 0;
  };
  gen(0, k);

  // Budget precheck: off-pivot entry count per vector is prod_i p^{k_i * i}.
  long long total = 0;
  for (const auto& v : pivot_vecs) {
    Int count = 1;
    for (int i = 0; i < d; ++i) count *= pow_p(p, v[i] * i);
    Int next = Int(total) + count;
    if (next > budget) throw BudgetError("enum_subalgebras: budget exceeded", total);
    total = next.convert_to<long long>();
  }

  EnumReport rep;
  rep.max_exponent = k;
  for (const auto& v : pivot_vecs) {
    long long exp = std::accumulate(v.begin(), v.end(), 0LL);
    // Odometer over off-pivot entries, row-major over (i, j<i).
    std::vector<std::pair<int, int>> slots;
    std::vector<Int> limits;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < i; ++j) {
        slots.emplace_back(i, j);
        limits.push_back(pow_p(p, v[i]));
      }
    std::vector<Int> vals(slots.size(), 0);
    while (true) {
      QMatrix b(d, d);
      for (int i = 0; i < d; ++i) b.at(i, i) = Rat(pow_p(p, v[i]));
      for (size_t t = 0; t < slots.size(); ++t) b.at(slots[t].first, slots[t].second) = Rat(vals[t]);
      Sublattice sub(l, b);
      bool alg = is_subalgebra(sub);
      rep.counts[exp] += 1;
      if (alg) rep.subalgebra_counts[exp] += 1;
      rep.entries.push_back(EnumEntry{std::move(sub), exp, alg});
      // advance odometer (last slot fastest)
      size_t t = slots.size();
      while (t > 0) {
        --t;
        vals[t] += 1;
        if (vals[t] < limits[t]) break;
        vals[t] = 0;
        if (t == 0) {
          t = slots.size() + 1;  // done marker
          break;
        }
      }
      if (slots.empty() || t == slots.size() + 1) break;
    }
  }
  return rep;
}

InvariantVector invariant_vector(const Sublattice& m, const QMatrix& killing_a, long long cap) {
  const LieLattice& l = m.parent();
  InvariantVector iv;
  iv.gram_profile = cap_profile(smith_profile_rect(gram(m, killing_a), l.p), cap);

  LieLattice pres = intrinsic_presentation(m);
  int d = l.dim;
  if (d >= 2) {
    QMatrix flat(d * (d - 1) / 2, d);
    int row = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        auto c = pres.bracket_basis(i, j);
        for (int t = 0; t < d; ++t) flat.at(row, t) = c[t];
        ++row;
      }
    iv.bracket_profile = cap_profile(smith_profile_rect(flat, l.p), cap);
  }
  FpTensor t = reduce_tensor(pres);
  modp_series_ranks(t, iv.lc_ranks_modp, iv.derived_ranks_modp);
  return iv;
}

IsoClassReport classify_mod_pk(const LieLattice& l, const std::vector<Sublattice>& items,
                               long long e, long long budget) {
  if (e < 1) throw InvalidInput("classify_mod_pk: precision must be >= 1");
  validate_or_throw(l);
  IsoClassReport rep;
  rep.precision = e;
  QMatrix a = killing_matrix(l).a;
  int n = static_cast<int>(items.size());
  std::vector<LieLattice> pres;
  for (const auto& m : items) {
    rep.invariants.push_back(invariant_vector(m, a, e));
    pres.push_back(intrinsic_presentation(m));
  }

  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
  auto unite = [&](int x, int y) { uf[find(x)] = find(y); };

  bool exhaustive = l.dim <= 3;
  long long work = 0;
  if (exhaustive) {
    rep.method = e == 1 ? "exhaustive mod p" : "mod-p search with linear lift to p^e";
    std::vector<FpTensor> tensors;
    for (const auto& g : pres) tensors.push_back(reduce_tensor(g));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (find(i) == find(j)) continue;
        if (!(rep.invariants[i] == rep.invariants[j])) continue;
        bool same = false;
        int lift_tries = 0;
        find_isos_modp(tensors[i], tensors[j], work, budget,
                       [&](const std::vector<std::vector<long long>>& s) {
                         if (e == 1) {
                           same = true;
                           return false;
                         }
                         LiftResult lr = newton_lift(pres[i], pres[j], s, e, e);
                         if (lr.exact || lr.reached_target) {
                           same = true;
                           return false;
                         }
                         return ++lift_tries < 40;
                       });
        if (same) unite(i, j);
      }
  } else {
    rep.method = "invariants-only";
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rep.invariants[i] == rep.invariants[j]) unite(i, j);
  }

  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  for (auto& [root, members] : groups) rep.classes.push_back(members);
  std::sort(rep.classes.begin(), rep.classes.end());
  return rep;
}

OracleReport exhaustive_stability_check(const LieLattice& l, long long k, long long e,
                                        long long budget) {
  OracleReport rep;
  rep.enumeration = enum_subalgebras(l, k, budget);
  QMatrix a = killing_matrix(l).a;

  std::vector<int> algs;
  for (int i = 0; i < static_cast<int>(rep.enumeration.entries.size()); ++i)
    if (rep.enumeration.entries[i].subalgebra) algs.push_back(i);

  // Exact (uncapped) invariants: sound pruning for exact isomorphism.
  std::map<int, InvariantVector> inv;
  std::map<int, LieLattice> pres;
  for (int i : algs) {
    inv.emplace(i, invariant_vector(rep.enumeration.entries[i].sub, a));
    pres.emplace(i, intrinsic_presentation(rep.enumeration.entries[i].sub));
  }

  long long work = 0;
  long long lift_bound = e + 6;
  for (size_t ai = 0; ai < algs.size(); ++ai)
    for (size_t bi = ai + 1; bi < algs.size(); ++bi) {
      int i = algs[ai], j = algs[bi];
      const EnumEntry& em = rep.enumeration.entries[i];
      const EnumEntry& en = rep.enumeration.entries[j];
      if (em.index_exp == en.index_exp) continue;
      ++rep.pairs_screened;
      if (!(inv.at(i) == inv.at(j))) continue;

      std::optional<QMatrix> exact;
      if (pres.at(i).brackets == pres.at(j).brackets) {
        exact = QMatrix::identity(l.dim);
      } else if (l.dim <= 3) {
        int lift_tries = 0;
        FpTensor ti = reduce_tensor(pres.at(i));
        FpTensor tj = reduce_tensor(pres.at(j));
        find_isos_modp(ti, tj, work, budget,
                       [&](const std::vector<std::vector<long long>>& s) {
                         LiftResult lr = newton_lift(pres.at(i), pres.at(j), s, lift_bound, lift_bound);
                         if (lr.exact) {
                           exact = lr.exact;
                           return false;
                         }
                         return ++lift_tries < 40;
                       });
        if (!exact) ++rep.inconclusive_pairs;
      } else {
        ++rep.inconclusive_pairs;
      }
      if (!exact) continue;

      // Exact presentation iso S: ambient witness phi = B_N S B_M^{-1}.
      QMatrix phi = en.sub.basis() * (*exact) * *em.sub.basis().inverse();
      IsoIndexReport check = iso_index_check(l, em.sub, en.sub, phi);
      rep.violations.push_back(Violation{i, j, phi, check});
    }
  return rep;
}

}  // namespace lielat
