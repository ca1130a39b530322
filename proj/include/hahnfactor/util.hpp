#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hahnfactor {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat &q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat &q) { return boost::multiprecision::denominator(q); }

inline int sgn(const Rat &q) { return q.sign(); }
inline int sgn(const Int &n) { return n.sign(); }

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

// gcd of rationals: largest q with a/q, b/q both integers.
inline Rat rat_gcd(const Rat &a, const Rat &b) {
  if (a == 0) return b < 0 ? Rat(-b) : b;
  if (b == 0) return a < 0 ? Rat(-a) : a;
  Int n = int_gcd(rat_num(a) * rat_den(b), rat_num(b) * rat_den(a));
  Int d = rat_den(a) * rat_den(b);
  Rat g(n, d);
  return g < 0 ? Rat(-g) : g;
}

inline Rat rat_abs(const Rat &a) { return a < 0 ? Rat(-a) : a; }

inline Int rat_floor(const Rat &q) {
  Int n = rat_num(q), d = rat_den(q);
  Int f = n / d;
  if (n < 0 && f * d != n) --f;
  return f;
}

inline Int rat_ceil(const Rat &q) { return -rat_floor(-q); }

// q^e for integer e (e may be negative; q != 0 then).
inline Rat rat_pow(const Rat &q, long e) {
  if (e == 0) return Rat(1);
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rat base = q, acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  if (inv) {
    if (acc == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
    acc = Rat(1) / acc;
  }
  return acc;
}

// Trial-division factorisation; inputs here are desk-scale.
inline std::map<Int, long> factor_int(Int n) {
  if (n < 0) n = -n;
  std::map<Int, long> out;
  if (n <= 1) return out;
  for (Int p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

// Factorisation of a rational into prime -> signed exponent.
inline std::map<Int, long> factor_rat(const Rat &q) {
  if (q == 0) throw std::domain_error("factor_rat: zero");
  auto out = factor_int(rat_num(q));
  for (auto &[p, e] : factor_int(rat_den(q))) out[p] -= e;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Split n = s^2 * m with m squarefree; returns (s, m).
inline std::pair<Int, Int> squarefree_split(const Int &n) {
  if (n <= 0) throw std::domain_error("squarefree_split: need positive");
  Int s = 1, m = 1;
  for (auto &[p, e] : factor_int(n)) {
    for (long i = 0; i + 1 < e; i += 2) s *= p;
    if (e % 2) m *= p;
  }
  return {s, m};
}

inline std::string rat_str(const Rat &q) { return q.str(); }

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string &msg, size_t p) : std::runtime_error(msg), pos(p) {}
};

// Raised when an exact closed-form result cannot be represented in the
// closed family; callers downgrade to a lazy stream instead.
struct ClosureFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hahnfactor
