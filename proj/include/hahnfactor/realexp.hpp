#pragma once

#include <map>
#include <string>

#include "hahnfactor/util.hpp"

namespace hahnfactor {

// An element of the subgroup of (R,+) generated over Q by 1 and the square
// roots of squarefree positive integers: a finite map radicand -> rational
// coefficient (radicand 1 holding the rational part). Distinct squarefree
// radicands are Q-linearly independent, so the representation is canonical
// and comparison is exact.
class RealExp {
 public:
  RealExp() = default;
  explicit RealExp(const Rat &q);
  // coeff * sqrt(rad); rad need not be squarefree, it is normalised.
  static RealExp root(const Int &rad, const Rat &coeff = Rat(1));

  bool is_zero() const { return coords_.empty(); }
  bool is_rational() const;
  // valid when is_rational()
  Rat rational_value() const;

  const std::map<Int, Rat> &coords() const { return coords_; }
  Rat coeff(const Int &rad) const;

  RealExp operator-() const;
  RealExp operator+(const RealExp &o) const;
  RealExp operator-(const RealExp &o) const;
  RealExp operator*(const RealExp &o) const;  // full ring product
  RealExp scaled(const Rat &k) const;
  // exact division; throws on zero divisor
  RealExp operator/(const RealExp &o) const;

  // exact sign via recursive conjugation over the prime radicals
  int sign() const;
  static int compare(const RealExp &a, const RealExp &b);

  bool operator==(const RealExp &o) const { return coords_ == o.coords_; }
  bool operator!=(const RealExp &o) const { return !(*this == o); }
  bool operator<(const RealExp &o) const { return compare(*this, o) < 0; }
  bool operator<=(const RealExp &o) const { return compare(*this, o) <= 0; }
  bool operator>(const RealExp &o) const { return compare(*this, o) > 0; }
  bool operator>=(const RealExp &o) const { return compare(*this, o) >= 0; }

  RealExp abs() const { return sign() < 0 ? -*this : *this; }

  // solves *this == k * o for rational k (zero handled); nullopt if none
  std::optional<Rat> proportional_to(const RealExp &o) const;

  std::string str() const;

 private:
  std::map<Int, Rat> coords_;
  void prune();
};

}  // namespace hahnfactor
