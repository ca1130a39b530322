#pragma once

#include <optional>
#include <vector>

#include "hahnfactor/cuts.hpp"
#include "hahnfactor/exp.hpp"

namespace hahnfactor {

// A strictly increasing exponent sequence from one of the closed step
// families, moving along a single axis (level, sqrt(axis) direction):
//   Harm:   e_n = shift - (a/(n0+n)) * u          -> shift
//   Geo:    e_n = shift - (a * r^n) * u           -> shift        (0 < r < 1)
//   Arith:  e_n = shift + (a * n) * u             -> coset cut
//   Mobius: e_n = shift - x_n * u, x_{n+1} = ((1+d)x_n + 2d)/(2x_n + 1 + d)
//                                                 -> shift - sqrt(d) u
// where u is sqrt(axis) placed at `level`. Mobius walks rational convergents
// down to sqrt(d), so its terms are rational offsets approaching an
// irrational limit.
struct LadderSeq {
  enum class Kind { Harm, Geo, Arith, Mobius };

  Kind kind = Kind::Harm;
  Exp shift;
  int level = 0;
  Int axis = Int(1);
  Rat a;       // Harm: numerator; Geo: first step; Arith: increment
  Rat r;       // Geo ratio
  long n0 = 1; // Harm start denominator
  Int mob_d;   // Mobius radicand (nonsquare)
  Rat mob_x0;  // Mobius seed, > sqrt(mob_d)

  static LadderSeq harm(const Exp &limit, int level, const Int &axis, const Rat &a,
                        long n0 = 1);
  static LadderSeq geo(const Exp &limit, int level, const Int &axis,
                       const Rat &first_step, const Rat &ratio);
  static LadderSeq arith(const Exp &base, int level, const Int &axis, const Rat &inc);
  static LadderSeq mobius(const Exp &shift, int level, const Int &d, const Rat &x0);

  int rank() const { return shift.rank(); }
  Exp step_unit() const;  // sqrt(axis) at `level`
  Exp term(long n) const;
  Rat mob_x(long n) const;

  bool has_limit_point() const { return kind != Kind::Arith; }
  Exp limit_point() const;  // not for Arith
  Cut sup_cut() const;
  Exp min_exp() const { return term(0); }

  struct CountResult {
    bool all = false;
    long count = 0;  // number of terms <= y when !all
  };
  CountResult count_leq(const Exp &y) const;
  std::optional<long> index_of(const Exp &e) const;

  std::optional<Exp> prev_term() const;  // e_{-1} when the family extends back
  LadderSeq advanced(long k) const;      // drop the first k terms
  LadderSeq back_extended() const;       // prepend e_{-1}

  // the whole sequence rescaled: exponents mapped x -> shift0 + k*(x - shift0)
  // is not needed; scaling used by nested blocks acts on the step size only
  LadderSeq step_scaled(const Rat &k) const;  // a -> k*a (k > 0)
  LadderSeq shifted(const Exp &dx) const;

  bool operator==(const LadderSeq &o) const;
  bool operator!=(const LadderSeq &o) const { return !(*this == o); }

  std::string str() const;
};

// Exact common-exponent analysis of two sequences.
struct Coincidences {
  enum class Kind {
    Empty,        // disjoint supports
    Finite,       // exactly the listed index pairs collide
    Progression,  // (n, m) = (n_start + k*n_step, m_start + k*m_step), k >= 0
    Unresolved,   // provably infinite but not grid-representable
  };
  Kind kind = Kind::Empty;
  std::vector<std::pair<long, long>> pairs;
  long n_start = 0, n_step = 0, m_start = 0, m_step = 0;
};

Coincidences solve_coincidences(const LadderSeq &A, const LadderSeq &B);

// Common refinement grid: A.term(j) = grid.term(offA + strideA*j), same for B.
struct GridAlign {
  LadderSeq grid;
  long offA = 0, strideA = 1;
  long offB = 0, strideB = 1;
};

std::optional<GridAlign> common_grid(const LadderSeq &A, const LadderSeq &B);

}  // namespace hahnfactor
