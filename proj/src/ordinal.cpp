#include "hahnfactor/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hahnfactor {

Ordinal::Ordinal(const Int &n) {
  if (n < 0) throw std::domain_error("Ordinal: negative");
  if (n > 0) {
    exps_.emplace_back();
    coeffs_.push_back(n);
  }
}

Ordinal Ordinal::omega() { return omega_pow(Ordinal(Int(1))); }

Ordinal Ordinal::omega_pow(const Ordinal &e, const Int &coeff) {
  Ordinal r;
  if (coeff < 0) throw std::domain_error("omega_pow: negative coefficient");
  if (coeff > 0) {
    r.exps_.push_back(e);
    r.coeffs_.push_back(coeff);
  }
  r.check_depth();
  return r;
}

Ordinal Ordinal::from_terms(std::vector<Ordinal> exps, std::vector<Int> coeffs) {
  Ordinal r;
  r.exps_ = std::move(exps);
  r.coeffs_ = std::move(coeffs);
  if (r.exps_.size() != r.coeffs_.size())
    throw std::domain_error("Ordinal: term shape mismatch");
  for (size_t i = 0; i < r.exps_.size(); ++i) {
    if (r.coeffs_[i] < 1) throw std::domain_error("Ordinal: coefficient < 1");
    if (i + 1 < r.exps_.size() && !(r.exps_[i + 1] < r.exps_[i]))
      throw std::domain_error("Ordinal: exponents not strictly decreasing");
  }
  r.check_depth();
  return r;
}

bool Ordinal::is_finite() const {
  return exps_.empty() || (exps_.size() == 1 && exps_[0].is_zero());
}

Int Ordinal::finite_value() const {
  if (exps_.empty()) return 0;
  return coeffs_[0];
}

bool Ordinal::is_principal() const {
  return exps_.size() == 1 && coeffs_[0] == 1;
}

int Ordinal::depth() const {
  int d = 0;
  for (const auto &e : exps_)
    if (!e.is_zero()) d = std::max(d, e.depth() + 1);
  return d;
}

void Ordinal::check_depth() const {
  if (depth() > kMaxDepth) throw OrdinalDepthError("ordinal exponent nesting exceeds cap");
}

int Ordinal::compare(const Ordinal &a, const Ordinal &b) {
  size_t n = std::min(a.exps_.size(), b.exps_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = compare(a.exps_[i], b.exps_[i]);
    if (c != 0) return c;
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i] ? -1 : 1;
  }
  if (a.exps_.size() == b.exps_.size()) return 0;
  return a.exps_.size() < b.exps_.size() ? -1 : 1;
}

Ordinal ord_add(const Ordinal &a, const Ordinal &b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  // keep the terms of a with exponent > leading exponent of b,
  // merge coefficients at equality, then append b.
  const Ordinal &e = b.exps_.front();
  std::vector<Ordinal> exps;
  std::vector<Int> coeffs;
  size_t i = 0;
  while (i < a.exps_.size() && Ordinal::compare(a.exps_[i], e) > 0) {
    exps.push_back(a.exps_[i]);
    coeffs.push_back(a.coeffs_[i]);
    ++i;
  }
  if (i < a.exps_.size() && a.exps_[i] == e) {
    exps.push_back(e);
    coeffs.push_back(a.coeffs_[i] + b.coeffs_.front());
    exps.insert(exps.end(), b.exps_.begin() + 1, b.exps_.end());
    coeffs.insert(coeffs.end(), b.coeffs_.begin() + 1, b.coeffs_.end());
  } else {
    exps.insert(exps.end(), b.exps_.begin(), b.exps_.end());
    coeffs.insert(coeffs.end(), b.coeffs_.begin(), b.coeffs_.end());
  }
  return Ordinal::from_terms(std::move(exps), std::move(coeffs));
}

Ordinal ord_mul(const Ordinal &a, const Ordinal &b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  Ordinal acc;
  for (size_t j = 0; j < b.exps_.size(); ++j) {
    Ordinal part;
    if (b.exps_[j].is_zero()) {
      // a * finite k: multiply the leading coefficient, keep the tail once
      std::vector<Ordinal> exps = a.exps_;
      std::vector<Int> coeffs = a.coeffs_;
      coeffs[0] *= b.coeffs_[j];
      part = Ordinal::from_terms(std::move(exps), std::move(coeffs));
    } else {
      part = Ordinal::omega_pow(ord_add(a.exps_.front(), b.exps_[j]), b.coeffs_[j]);
    }
    acc = ord_add(acc, part);
  }
  return acc;
}

Ordinal nat_sum(const Ordinal &a, const Ordinal &b) {
  std::vector<Ordinal> exps;
  std::vector<Int> coeffs;
  size_t i = 0, j = 0;
  while (i < a.exps_.size() || j < b.exps_.size()) {
    int c;
    if (i == a.exps_.size())
      c = -1;
    else if (j == b.exps_.size())
      c = 1;
    else
      c = Ordinal::compare(a.exps_[i], b.exps_[j]);
    if (c > 0) {
      exps.push_back(a.exps_[i]);
      coeffs.push_back(a.coeffs_[i]);
      ++i;
    } else if (c < 0) {
      exps.push_back(b.exps_[j]);
      coeffs.push_back(b.coeffs_[j]);
      ++j;
    } else {
      exps.push_back(a.exps_[i]);
      coeffs.push_back(a.coeffs_[i] + b.coeffs_[j]);
      ++i, ++j;
    }
  }
  return Ordinal::from_terms(std::move(exps), std::move(coeffs));
}

Ordinal nat_prod(const Ordinal &a, const Ordinal &b) {
  Ordinal acc;
  for (size_t i = 0; i < a.exps_.size(); ++i)
    for (size_t j = 0; j < b.exps_.size(); ++j)
      acc = nat_sum(acc, Ordinal::omega_pow(nat_sum(a.exps_[i], b.exps_[j]),
                                            a.coeffs_[i] * b.coeffs_[j]));
  return acc;
}

std::string Ordinal::str() const {
  if (exps_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (i) os << " + ";
    if (exps_[i].is_zero()) {
      os << coeffs_[i];
      continue;
    }
    os << "w";
    if (!(exps_[i].is_finite() && exps_[i].finite_value() == 1)) {
      bool simple = exps_[i].is_finite();
      if (simple)
        os << "^" << exps_[i].str();
      else
        os << "^(" << exps_[i].str() << ")";
    }
    if (coeffs_[i] != 1) os << "*" << coeffs_[i];
  }
  return os.str();
}

int OrdinalExt::compare(const OrdinalExt &a, const OrdinalExt &b) {
  if (a.is_minus_inf() && b.is_minus_inf()) return 0;
  if (a.is_minus_inf()) return -1;
  if (b.is_minus_inf()) return 1;
  return Ordinal::compare(*a.val_, *b.val_);
}

std::string OrdinalExt::str() const { return is_minus_inf() ? "-inf" : val_->str(); }

OrdinalExt nat_sum(const OrdinalExt &a, const OrdinalExt &b) {
  if (a.is_minus_inf() || b.is_minus_inf()) return OrdinalExt::minus_inf();
  return nat_sum(a.ordinal(), b.ordinal());
}

OrdinalExt nat_prod(const OrdinalExt &a, const OrdinalExt &b) {
  if (a.is_minus_inf() || b.is_minus_inf()) return OrdinalExt::minus_inf();
  return nat_prod(a.ordinal(), b.ordinal());
}

OrdinalExt ordinal_degree(const OrdinalExt &a) {
  if (a.is_minus_inf() || a.ordinal().is_zero()) return OrdinalExt::minus_inf();
  return a.ordinal().leading_exp();
}

namespace {

struct OrdParser {
  const std::string &s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  Int integer() {
    skip();
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw ParseError("expected integer", i);
    Int v(s.substr(i, j - i));
    i = j;
    return v;
  }

  // term := 'w' ('^' exp)? ('*' int)? | int
  Ordinal term() {
    skip();
    if (i >= s.size()) throw ParseError("expected ordinal term", i);
    if (s[i] == 'w') {
      ++i;
      Ordinal e(Int(1));
      if (eat('^')) {
        skip();
        if (i < s.size() && s[i] == '(') {
          ++i;
          e = sum();
          if (!eat(')')) throw ParseError("expected ')'", i);
        } else if (i < s.size() && s[i] == 'w') {
          e = term();
        } else {
          e = Ordinal(integer());
        }
      }
      Int k(1);
      if (eat('*')) k = integer();
      return Ordinal::omega_pow(e, k);
    }
    return Ordinal(integer());
  }

  Ordinal sum() {
    Ordinal acc = term();
    while (eat('+')) acc = nat_sum(acc, term());
    return acc;
  }
};

}  // namespace

Ordinal parse_ordinal(const std::string &text) {
  OrdParser p{text};
  Ordinal r = p.sum();
  p.skip();
  if (p.i != text.size()) throw ParseError("trailing input after ordinal", p.i);
  return r;
}

}  // namespace hahnfactor
