#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

#include "lielat/errors.hpp"

namespace lielat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;  // always reduced, denominator > 0

bool is_prime(const Int& n);

// p^e for e >= 0.
Int pow_p(const Int& p, long long e);

// The p-adic valuation of a rational. v_p(0) is a distinct infinity marker,
// never an integer sentinel.
class PVal {
 public:
  static PVal infinity() { return PVal(true, 0); }
  static PVal finite(long long v) { return PVal(false, v); }

  bool is_infinite() const { return inf_; }
  long long value() const {
    if (inf_) throw InvalidInput("PVal: value() on infinite valuation");
    return v_;
  }

  PVal operator+(const PVal& o) const {
    if (inf_ || o.inf_) return infinity();
    return finite(v_ + o.v_);
  }

  bool operator==(const PVal& o) const {
    return inf_ == o.inf_ && (inf_ || v_ == o.v_);
  }
  bool operator<(const PVal& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return v_ < o.v_;
  }
  bool operator<=(const PVal& o) const { return *this == o || *this < o; }

  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

 private:
  PVal(bool inf, long long v) : inf_(inf), v_(v) {}
  bool inf_;
  long long v_;
};

// Exponent of p in an integer; requires n != 0.
long long vp_int(const Int& n, const Int& p);

// v_p(x); +infinity for x = 0. Throws InvalidInput if p is not prime.
PVal vp(const Rat& x, const Int& p);

// True iff v_p(x) >= 0, i.e. x lies in the local ring at p.
bool p_integral(const Rat& x, const Int& p);

// Canonical residue of a p-integral rational mod p^e, in [0, p^e).
Int residue_mod_pk(const Rat& x, const Int& p, long long e);

// Parse "a" or "a/b"; throws InvalidInput on malformed input or b == 0.
Rat parse_rational(const std::string& s);

std::string rational_str(const Rat& x);

}  // namespace lielat
