#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hahnfactor/util.hpp"

namespace hahnfactor {

// Closed-form coefficient streams for ladder blocks, indexed from 0 in step
// order. Two shapes:
//   PolyGeo:    s(n) = p(n) * u^n   (p a rational polynomial, u != 0)
//   EvPeriodic: explicit preperiod, then a repeating cycle
// Constant c is PolyGeo([c], 1); geometric c*u^n is PolyGeo([c], u).
// The shapes are closed under scaling, shifting, pointwise addition (same
// ratio, or both periodic), and round-robin interleaving of periodic parts.
class CoefStream {
 public:
  enum class Kind { PolyGeo, EvPeriodic };

  CoefStream() : kind_(Kind::PolyGeo), u_(1) {}  // zero stream
  static CoefStream constant(const Rat &c);
  static CoefStream geometric(const Rat &c, const Rat &u);
  static CoefStream poly_geo(std::vector<Rat> poly, const Rat &u);
  static CoefStream ev_periodic(std::vector<Rat> pre, std::vector<Rat> cycle);

  Kind kind() const { return kind_; }
  bool is_zero() const;
  // all but finitely many entries zero; returns the explicit prefix
  std::optional<std::vector<Rat>> finite_support() const;

  Rat at(long n) const;
  CoefStream scaled(const Rat &k) const;
  CoefStream dropped(long k) const;  // s'(n) = s(n+k)
  std::optional<CoefStream> try_prepend(const Rat &v) const;
  static std::optional<CoefStream> add(const CoefStream &a, const CoefStream &b);
  // result(r + k*stride) = streams[i](k) for phase r = phases[i]; other
  // residues are zero. All streams must be periodic-representable.
  static std::optional<CoefStream> interleave(const std::vector<CoefStream> &streams,
                                              const std::vector<long> &phases,
                                              long stride);

  std::optional<long> first_nonzero(long from = 0) const;
  // smallest N such that entries from N on are all zero, when eventually zero
  std::optional<long> zero_from() const;

  bool operator==(const CoefStream &o) const;
  bool operator!=(const CoefStream &o) const { return !(*this == o); }
  // solves o == k * this
  std::optional<Rat> proportional_to(const CoefStream &o) const;

  // order of a linear recurrence satisfied from index `preperiod_length()` on
  long recurrence_order() const;
  long preperiod_length() const;

  const std::vector<Rat> &poly() const { return poly_; }
  const Rat &ratio() const { return u_; }
  const std::vector<Rat> &pre() const { return pre_; }
  const std::vector<Rat> &cycle() const { return cycle_; }

  std::string str() const;

 private:
  Kind kind_;
  std::vector<Rat> poly_;  // PolyGeo
  Rat u_ = Rat(1);
  std::vector<Rat> pre_, cycle_;  // EvPeriodic
  void canonicalize();
  struct Periodic {
    std::vector<Rat> pre, cycle;
    Rat at(long n) const {
      if (n < static_cast<long>(pre.size())) return pre[n];
      return cycle[(n - pre.size()) % cycle.size()];
    }
  };
  std::optional<Periodic> as_periodic() const;
};

}  // namespace hahnfactor
