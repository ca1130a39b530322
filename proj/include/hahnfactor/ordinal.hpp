#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hahnfactor/util.hpp"

namespace hahnfactor {

// Countable ordinals in hereditary Cantor normal form:
// sum of w^e * k with exponents strictly decreasing and k >= 1.
// The empty term list is 0.
class Ordinal {
 public:
  static constexpr int kMaxDepth = 64;

  Ordinal() = default;
  explicit Ordinal(const Int &n);
  static Ordinal omega();
  static Ordinal omega_pow(const Ordinal &e, const Int &coeff = Int(1));
  static Ordinal from_terms(std::vector<Ordinal> exps, std::vector<Int> coeffs);

  bool is_zero() const { return exps_.empty(); }
  bool is_finite() const;
  Int finite_value() const;  // valid when is_finite()
  // additively principal: a single CNF term with coefficient 1
  bool is_principal() const;

  size_t term_count() const { return exps_.size(); }
  const Ordinal &exp_at(size_t i) const { return exps_[i]; }
  const Int &coeff_at(size_t i) const { return coeffs_[i]; }

  const Ordinal &leading_exp() const { return exps_.front(); }
  const Int &leading_coeff() const { return coeffs_.front(); }

  int depth() const;

  bool operator==(const Ordinal &o) const {
    return exps_ == o.exps_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const Ordinal &o) const { return !(*this == o); }
  bool operator<(const Ordinal &o) const { return compare(*this, o) < 0; }
  bool operator<=(const Ordinal &o) const { return compare(*this, o) <= 0; }
  bool operator>(const Ordinal &o) const { return compare(*this, o) > 0; }
  bool operator>=(const Ordinal &o) const { return compare(*this, o) >= 0; }

  static int compare(const Ordinal &a, const Ordinal &b);

  // non-commutative ordinal sum and product
  friend Ordinal ord_add(const Ordinal &a, const Ordinal &b);
  friend Ordinal ord_mul(const Ordinal &a, const Ordinal &b);
  // Hessenberg natural sum and product
  friend Ordinal nat_sum(const Ordinal &a, const Ordinal &b);
  friend Ordinal nat_prod(const Ordinal &a, const Ordinal &b);

  std::string str() const;

 private:
  std::vector<Ordinal> exps_;
  std::vector<Int> coeffs_;
  void check_depth() const;
};

// On extended by -infinity (the degree of 0).
class OrdinalExt {
 public:
  OrdinalExt() : val_(Ordinal()) {}              // 0
  OrdinalExt(Ordinal v) : val_(std::move(v)) {}  // NOLINT
  static OrdinalExt minus_inf() { return OrdinalExt(Tag{}); }

  bool is_minus_inf() const { return !val_.has_value(); }
  const Ordinal &ordinal() const { return *val_; }

  bool operator==(const OrdinalExt &o) const { return val_ == o.val_; }
  bool operator!=(const OrdinalExt &o) const { return !(*this == o); }
  static int compare(const OrdinalExt &a, const OrdinalExt &b);
  bool operator<(const OrdinalExt &o) const { return compare(*this, o) < 0; }
  bool operator<=(const OrdinalExt &o) const { return compare(*this, o) <= 0; }
  bool operator>(const OrdinalExt &o) const { return compare(*this, o) > 0; }
  bool operator>=(const OrdinalExt &o) const { return compare(*this, o) >= 0; }

  std::string str() const;

 private:
  struct Tag {};
  explicit OrdinalExt(Tag) {}
  std::optional<Ordinal> val_;
};

// -inf absorbs in both extended operations.
OrdinalExt nat_sum(const OrdinalExt &a, const OrdinalExt &b);
OrdinalExt nat_prod(const OrdinalExt &a, const OrdinalExt &b);

// degree(a): the maximum b with w^b <= a; degree(0) = -inf.
OrdinalExt ordinal_degree(const OrdinalExt &a);

// Text syntax `w^a*k + ...`, e.g. `w^2*3 + w + 1`.
Ordinal parse_ordinal(const std::string &text);

struct OrdinalDepthError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hahnfactor
