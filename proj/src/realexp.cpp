#include "hahnfactor/realexp.hpp"

#include <optional>
#include <sstream>

namespace hahnfactor {

RealExp::RealExp(const Rat &q) {
  if (q != 0) coords_[Int(1)] = q;
}

RealExp RealExp::root(const Int &rad, const Rat &coeff) {
  if (rad <= 0) throw std::domain_error("RealExp::root: radicand must be positive");
  auto [s, m] = squarefree_split(rad);
  RealExp r;
  Rat c = coeff * Rat(s);
  if (c != 0) r.coords_[m] = c;
  return r;
}

bool RealExp::is_rational() const {
  return coords_.empty() || (coords_.size() == 1 && coords_.begin()->first == 1);
}

Rat RealExp::rational_value() const {
  if (coords_.empty()) return Rat(0);
  return coords_.begin()->second;
}

Rat RealExp::coeff(const Int &rad) const {
  auto it = coords_.find(rad);
  return it == coords_.end() ? Rat(0) : it->second;
}

void RealExp::prune() {
  for (auto it = coords_.begin(); it != coords_.end();)
    it = it->second == 0 ? coords_.erase(it) : std::next(it);
}

RealExp RealExp::operator-() const {
  RealExp r = *this;
  for (auto &[m, c] : r.coords_) c = -c;
  return r;
}

RealExp RealExp::operator+(const RealExp &o) const {
  RealExp r = *this;
  for (const auto &[m, c] : o.coords_) r.coords_[m] += c;
  r.prune();
  return r;
}

RealExp RealExp::operator-(const RealExp &o) const { return *this + (-o); }

RealExp RealExp::scaled(const Rat &k) const {
  RealExp r;
  if (k == 0) return r;
  r = *this;
  for (auto &[m, c] : r.coords_) c *= k;
  return r;
}

RealExp RealExp::operator*(const RealExp &o) const {
  RealExp r;
  for (const auto &[m1, c1] : coords_)
    for (const auto &[m2, c2] : o.coords_) {
      auto [s, m] = squarefree_split(m1 * m2);
      r.coords_[m] += c1 * c2 * Rat(s);
    }
  r.prune();
  return r;
}

int RealExp::sign() const {
  if (coords_.empty()) return 0;
  if (is_rational()) return sgn(rational_value());
  // pick a prime dividing some radicand and split x = A + sqrt(p)*B
  Int p = 0;
  for (const auto &[m, c] : coords_)
    if (m > 1) {
      p = factor_int(m).begin()->first;
      break;
    }
  RealExp A, B;
  for (const auto &[m, c] : coords_) {
    if (m % p == 0)
      B.coords_[m / p] = c;
    else
      A.coords_[m] = c;
  }
  int sb = B.sign();
  if (A.is_zero()) return sb;
  int sa = A.sign();
  if (sb == 0) return sa;
  if (sa == sb) return sa;
  // opposite signs: the conjugate A - sqrt(p)B has the sign of A, and
  // x * (A - sqrt(p)B) = A^2 - p B^2 lives in a subring without sqrt(p).
  RealExp d = A * A - (B * B).scaled(Rat(p));
  int sd = d.sign();
  if (sd == 0) return 0;
  return sa * sd;
}

int RealExp::compare(const RealExp &a, const RealExp &b) { return (a - b).sign(); }

RealExp RealExp::operator/(const RealExp &o) const {
  if (o.is_zero()) throw std::domain_error("RealExp: division by zero");
  if (o.is_rational()) return scaled(Rat(1) / o.rational_value());
  // rationalise: pick a prime radical of o and multiply by the conjugate
  Int p = 0;
  for (const auto &[m, c] : o.coords_)
    if (m > 1) {
      p = factor_int(m).begin()->first;
      break;
    }
  RealExp A, B;
  for (const auto &[m, c] : o.coords_) {
    if (m % p == 0)
      B.coords_[m / p] = c;
    else
      A.coords_[m] = c;
  }
  RealExp conj = A - RealExp::root(p) * B;
  RealExp denom = o * conj;  // = A^2 - p B^2, no sqrt(p) left
  return (*this * conj) / denom;
}

std::optional<Rat> RealExp::proportional_to(const RealExp &o) const {
  if (o.is_zero()) return is_zero() ? std::optional<Rat>(Rat(0)) : std::nullopt;
  const auto &[m0, c0] = *o.coords_.begin();
  Rat k = coeff(m0) / c0;
  if (*this == o.scaled(k)) return k;
  return std::nullopt;
}

std::string RealExp::str() const {
  if (coords_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : coords_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    Rat a = (!first && c < 0) ? Rat(-c) : c;
    if (m == 1) {
      os << a.str();
    } else {
      if (a == 1) {
      } else if (a == -1 && first) {
        os << "-";
      } else {
        os << a.str() << "*";
      }
      os << "sqrt(" << m.str() << ")";
    }
    first = false;
  }
  return os.str();
}

}  // namespace hahnfactor
