#include "lielat/rational.hpp"

#include <cctype>

namespace lielat {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Int pow_p(const Int& p, long long e) {
  if (e < 0) throw InvalidInput("pow_p: negative exponent");
  Int r = 1;
  for (long long i = 0; i < e; ++i) r *= p;
  return r;
}

long long vp_int(const Int& n, const Int& p) {
  if (n == 0) throw InvalidInput("vp_int: zero argument");
  Int m = abs(n);
  long long v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

PVal vp(const Rat& x, const Int& p) {
  if (!is_prime(p)) throw InvalidInput("vp: p is not prime");
  if (x == 0) return PVal::infinity();
  return PVal::finite(vp_int(numerator(x), p) - vp_int(denominator(x), p));
}

bool p_integral(const Rat& x, const Int& p) {
  if (x == 0) return true;
  return denominator(x) % p != 0;
}

Int residue_mod_pk(const Rat& x, const Int& p, long long e) {
  if (!p_integral(x, p)) throw NotPIntegral("residue_mod_pk: not p-integral");
  Int m = pow_p(p, e);
  Int num = numerator(x) % m;
  if (num < 0) num += m;
  Int den = denominator(x) % m;
  // den is a unit mod p^e; invert by extended Euclid.
  Int t = 0, newt = 1, r = m, newr = den;
  while (newr != 0) {
    Int q = r / newr;
    Int tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += m;
  return (num * t) % m;
}

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw InvalidInput("parse_rational: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw InvalidInput("parse_rational: zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw InvalidInput("parse_rational: malformed rational '" + s + "'");
  }
}

std::string rational_str(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace lielat
