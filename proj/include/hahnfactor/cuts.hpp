#pragma once

#include <string>

#include "hahnfactor/exp.hpp"

namespace hahnfactor {

// A cut of the exponent group: the equivalence class of a nonempty subset
// under mutual cofinality, represented canonically by its set of upper
// bounds. Two shapes cover every structured set in the artifact:
//   Point(x):        upper bounds { u : u >= x }, x an ambient exponent
//                    (a set approaching x and the singleton {x} coincide);
//   CosetInf(hi, l): upper bounds { u : prefix_l(u) > prefix_l(hi) }, the
//                    cut just above a coset unbounded at level l.
class Cut {
 public:
  enum class Kind { Point, CosetInf };

  static Cut point(Exp x) { return Cut(Kind::Point, std::move(x), 0); }
  static Cut coset_inf(const Exp &hi, int level);

  Kind kind() const { return kind_; }
  const Exp &x() const { return x_; }
  int level() const { return level_; }
  int rank() const { return x_.rank(); }

  static int compare(const Cut &a, const Cut &b);
  bool operator==(const Cut &o) const { return compare(*this, o) == 0; }
  bool operator!=(const Cut &o) const { return !(*this == o); }
  bool operator<(const Cut &o) const { return compare(*this, o) < 0; }
  bool operator<=(const Cut &o) const { return compare(*this, o) <= 0; }
  bool operator>(const Cut &o) const { return compare(*this, o) > 0; }
  bool operator>=(const Cut &o) const { return compare(*this, o) >= 0; }

  friend Cut cut_add(const Cut &a, const Cut &b);

  // a group element x with a <= point(x) < b; requires a < b
  static Exp between(const Cut &a, const Cut &b, const GroupSpec &g);

  // every pair of group elements weakly between the cuts differs by an
  // element strictly dominated by its position
  static bool coarsely_equal(const Cut &a, const Cut &b);

  // Archimedean class of the cut position (class of elements near the cut)
  ArchClass position_ord() const;

  std::string str() const;

 private:
  Cut(Kind k, Exp x, int level) : kind_(k), x_(std::move(x)), level_(level) {}
  Kind kind_;
  Exp x_;      // Point: the point; CosetInf: components >= level are zero
  int level_;  // CosetInf only
};

// exact rational strictly between two distinct tower reals
Rat rational_between(const RealExp &a, const RealExp &b);

}  // namespace hahnfactor
