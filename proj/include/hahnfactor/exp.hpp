#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hahnfactor/realexp.hpp"

namespace hahnfactor {

// Comparability class of a group element: a level index (level 1 printed
// for index 0, which dominates all later levels) or -inf for ord(0).
class ArchClass {
 public:
  static ArchClass minus_inf() { return ArchClass(); }
  static ArchClass level(int idx) {
    ArchClass a;
    a.idx_ = idx;
    return a;
  }
  bool is_minus_inf() const { return !idx_.has_value(); }
  int index() const { return *idx_; }

  // larger class = dominates; level index 0 is the largest
  static int compare(const ArchClass &a, const ArchClass &b) {
    if (a.is_minus_inf() && b.is_minus_inf()) return 0;
    if (a.is_minus_inf()) return -1;
    if (b.is_minus_inf()) return 1;
    if (*a.idx_ == *b.idx_) return 0;
    return *a.idx_ > *b.idx_ ? -1 : 1;
  }
  bool operator==(const ArchClass &o) const { return idx_ == o.idx_; }
  bool operator!=(const ArchClass &o) const { return !(*this == o); }
  bool operator<(const ArchClass &o) const { return compare(*this, o) < 0; }
  bool operator<=(const ArchClass &o) const { return compare(*this, o) <= 0; }
  bool operator>(const ArchClass &o) const { return compare(*this, o) > 0; }
  bool operator>=(const ArchClass &o) const { return compare(*this, o) >= 0; }

  std::string str() const;

 private:
  std::optional<int> idx_;
};

// Exponent in a finite-rank lexicographic product of real groups.
// components_[0] is the dominant level. Rank-1 is the Archimedean case.
class Exp {
 public:
  Exp() : components_(1) {}
  explicit Exp(int rank) : components_(rank) {
    if (rank < 1) throw std::domain_error("Exp: rank must be >= 1");
  }
  explicit Exp(RealExp r) : components_{std::move(r)} {}
  explicit Exp(const Rat &q) : components_{RealExp(q)} {}
  static Exp from_components(std::vector<RealExp> comps);

  int rank() const { return static_cast<int>(components_.size()); }
  const RealExp &at(int level) const { return components_[level]; }
  const std::vector<RealExp> &components() const { return components_; }

  bool is_zero() const;
  // first level with nonzero component, or -inf
  ArchClass ord() const;

  Exp operator-() const;
  Exp operator+(const Exp &o) const;
  Exp operator-(const Exp &o) const;
  Exp scaled(const Rat &k) const;
  Exp abs() const { return sign() < 0 ? -*this : *this; }

  int sign() const;
  static int compare(const Exp &a, const Exp &b);
  bool operator==(const Exp &o) const { return components_ == o.components_; }
  bool operator!=(const Exp &o) const { return !(*this == o); }
  bool operator<(const Exp &o) const { return compare(*this, o) < 0; }
  bool operator<=(const Exp &o) const { return compare(*this, o) <= 0; }
  bool operator>(const Exp &o) const { return compare(*this, o) > 0; }
  bool operator>=(const Exp &o) const { return compare(*this, o) >= 0; }

  // replaces the component at `level` with `r`
  Exp with_component(int level, const RealExp &r) const;

  std::string str() const;

 private:
  std::vector<RealExp> components_;
  void check_rank(const Exp &o) const;
};

enum class Domination { StrictlyDominated, Comparable, Dominates };

// g vs h by Archimedean class; both zero is rejected.
Domination domination(const Exp &g, const Exp &h);

// splits g (with ord(g) <= level sigma) into its level-sigma component and
// the strictly dominated remainder: g = embed(h) + i.
std::pair<RealExp, Exp> project_sigma(const Exp &g, int sigma);

// Exponent group presentation: lexicographic rank plus, optionally, the set
// of permitted radicands (1 is always permitted). No set = the full ambient
// group of all represented reals.
struct GroupSpec {
  int rank = 1;
  std::optional<std::set<Int>> radicands;

  bool archimedean() const { return rank == 1; }
  bool contains(const RealExp &r) const;
  bool contains(const Exp &x) const;
  bool operator==(const GroupSpec &o) const;
  bool operator!=(const GroupSpec &o) const { return !(*this == o); }
  std::string str() const;

  static GroupSpec ambient(int rank = 1) { return GroupSpec{rank, std::nullopt}; }
  static GroupSpec rationals(int rank = 1) {
    return GroupSpec{rank, std::set<Int>{Int(1)}};
  }
  // merge of two presentations covering both
  static GroupSpec join(const GroupSpec &a, const GroupSpec &b);
};

GroupSpec parse_group(const std::string &text);

}  // namespace hahnfactor
