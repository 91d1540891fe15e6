#include "lielat/padic.hpp"

#include <algorithm>
#include <utility>

namespace lielat {

namespace {

void check_prime(const Int& p) {
  if (!is_prime(p)) throw InvalidInput("p is not prime");
}

}  // namespace

SmithProfile smith_p(const QMatrix& m, const Int& p) {
  check_prime(p);
  if (m.rows() != m.cols()) throw InvalidInput("smith_p: not square");
  if (!m.is_p_integral(p)) throw NotPIntegral("smith_p: entry with v_p < 0");
  int n = m.rows();
  QMatrix w = m;
  SmithProfile prof;
  for (int s = 0; s < n; ++s) {
    int bi = -1, bj = -1;
    PVal best = PVal::infinity();
    for (int i = s; i < n; ++i)
      for (int j = s; j < n; ++j) {
        PVal v = vp(w.at(i, j), p);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best.is_infinite()) throw SingularMatrix("smith_p: singular matrix");
    if (bi != s)
      for (int j = 0; j < n; ++j) std::swap(w.at(bi, j), w.at(s, j));
    if (bj != s)
      for (int i = 0; i < n; ++i) std::swap(w.at(i, bj), w.at(i, s));
    Rat pivot = w.at(s, s);
    for (int r = s + 1; r < n; ++r) {
      if (w.at(r, s) == 0) continue;
      Rat f = w.at(r, s) / pivot;
      for (int j = s; j < n; ++j) w.at(r, j) -= f * w.at(s, j);
    }
    for (int c = s + 1; c < n; ++c) {
      if (w.at(s, c) == 0) continue;
      Rat f = w.at(s, c) / pivot;
      for (int i = s; i < n; ++i) w.at(i, c) -= f * w.at(i, s);
    }
    prof.exponents.push_back(best.value());
  }
  std::sort(prof.exponents.begin(), prof.exponents.end());
  for (long long k : prof.exponents) prof.total += k;
  return prof;
}

HnfResult hnf_p_transform(const QMatrix& a, const Int& p) {
  check_prime(p);
  if (!a.is_p_integral(p)) throw NotPIntegral("hnf_p: entry with v_p < 0");
  int rows = a.rows(), cols = a.cols();
  HnfResult res{a, QMatrix::identity(cols), 0};
  QMatrix& h = res.h;
  QMatrix& u = res.u;
  auto col_axpy = [&](int dst, int src, const Rat& f) {
    for (int i = 0; i < rows; ++i) h.at(i, dst) -= f * h.at(i, src);
    for (int i = 0; i < cols; ++i) u.at(i, dst) -= f * u.at(i, src);
  };
  int jc = 0;  // next pivot column
  for (int i = 0; i < rows && jc < cols; ++i) {
    int best_col = -1;
    PVal best = PVal::infinity();
    for (int j = jc; j < cols; ++j) {
      PVal v = vp(h.at(i, j), p);
      if (v < best) {
        best = v;
        best_col = j;
      }
    }
    if (best.is_infinite()) continue;  // no pivot in this row
    if (best_col != jc) {
      for (int r = 0; r < rows; ++r) std::swap(h.at(r, best_col), h.at(r, jc));
      for (int r = 0; r < cols; ++r) std::swap(u.at(r, best_col), u.at(r, jc));
    }
    long long k = best.value();
    Int pk = pow_p(p, k);
    Rat unit = h.at(i, jc) / Rat(pk);  // v_p = 0
    Rat unit_inv = Rat(1) / unit;
    for (int r = 0; r < rows; ++r) h.at(r, jc) *= unit_inv;
    for (int r = 0; r < cols; ++r) u.at(r, jc) *= unit_inv;
    for (int j = jc + 1; j < cols; ++j) {
      if (h.at(i, j) == 0) continue;
      col_axpy(j, jc, h.at(i, j) / Rat(pk));
    }
    for (int j = 0; j < jc; ++j) {
      Int r = residue_mod_pk(h.at(i, j), p, k);
      Rat f = (h.at(i, j) - Rat(r)) / Rat(pk);
      if (f != 0) col_axpy(j, jc, f);
    }
    ++jc;
  }
  res.rank = jc;
  return res;
}

QMatrix hnf_p(const QMatrix& b, const Int& p) {
  if (b.rows() != b.cols()) throw InvalidInput("hnf_p: not square");
  HnfResult r = hnf_p_transform(b, p);
  if (r.rank != b.rows()) throw SingularMatrix("hnf_p: singular matrix");
  return r.h;
}

std::vector<Rat> newton_slopes(const std::vector<Rat>& coeffs, const Int& p) {
  check_prime(p);
  std::vector<Rat> c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw InvalidInput("newton_slopes: zero polynomial");
  if (c[0] == 0) throw InvalidInput("newton_slopes: zero constant term");
  // Points (i, v_p(c_i)) for nonzero coefficients.
  std::vector<std::pair<long long, long long>> pts;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    pts.emplace_back(static_cast<long long>(i), vp(c[i], p).value());
  }
  // Lower convex hull, left to right.
  std::vector<std::pair<long long, long long>> hull;
  for (const auto& q : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // Drop b if it lies on or above segment a-q.
      if ((b.second - a.second) * (q.first - a.first) >=
          (q.second - a.second) * (b.first - a.first)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(q);
  }
  std::vector<Rat> slopes;
  for (size_t s = 0; s + 1 < hull.size(); ++s) {
    long long di = hull[s + 1].first - hull[s].first;
    long long dv = hull[s + 1].second - hull[s].second;
    Rat root_val = Rat(-dv, di);  // root valuation = -slope
    for (long long t = 0; t < di; ++t) slopes.push_back(root_val);
  }
  std::sort(slopes.begin(), slopes.end());
  return slopes;
}

}  // namespace lielat
