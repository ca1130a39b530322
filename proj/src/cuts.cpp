#include "hahnfactor/cuts.hpp"

#include <sstream>

namespace hahnfactor {

namespace {

// lexicographic comparison of the first `l` components
int prefix_compare(const Exp &a, const Exp &b, int l) {
  for (int i = 0; i < l; ++i) {
    int c = RealExp::compare(a.at(i), b.at(i));
    if (c != 0) return c;
  }
  return 0;
}

int first_prefix_diff(const Exp &a, const Exp &b, int l) {
  for (int i = 0; i < l; ++i)
    if (a.at(i) != b.at(i)) return i;
  return l;
}

}  // namespace

Cut Cut::coset_inf(const Exp &hi, int level) {
  if (level < 1 || level >= hi.rank())
    throw std::domain_error("Cut::coset_inf: bad level");
  Exp x = hi;
  for (int i = level; i < hi.rank(); ++i) x = x.with_component(i, RealExp());
  return Cut(Kind::CosetInf, std::move(x), level);
}

int Cut::compare(const Cut &a, const Cut &b) {
  if (a.rank() != b.rank()) throw std::domain_error("Cut: rank mismatch");
  if (a.kind_ == Kind::Point && b.kind_ == Kind::Point)
    return Exp::compare(a.x_, b.x_);
  if (a.kind_ == Kind::Point) {
    // the point sits above the coset cut iff its prefix exceeds hi
    return prefix_compare(a.x_, b.x_, b.level_) > 0 ? 1 : -1;
  }
  if (b.kind_ == Kind::Point) return -compare(b, a);
  int l = std::min(a.level_, b.level_);
  int c = prefix_compare(a.x_, b.x_, l);
  if (c != 0) return c;
  if (a.level_ == b.level_) return prefix_compare(a.x_, b.x_, a.level_);
  if (a.level_ < b.level_) return prefix_compare(b.x_, a.x_, b.level_) > 0 ? -1 : 1;
  return prefix_compare(a.x_, b.x_, a.level_) > 0 ? 1 : -1;
}

Cut cut_add(const Cut &a, const Cut &b) {
  if (a.kind_ == Cut::Kind::Point && b.kind_ == Cut::Kind::Point)
    return Cut::point(a.x_ + b.x_);
  if (a.kind_ == Cut::Kind::Point) return cut_add(b, a);
  // a is CosetInf
  int l = a.level_;
  if (b.kind_ == Cut::Kind::CosetInf) l = std::min(l, b.level_);
  Exp hi(a.rank());
  for (int i = 0; i < l; ++i) hi = hi.with_component(i, a.x_.at(i) + b.x_.at(i));
  return Cut::coset_inf(hi, l);
}

ArchClass Cut::position_ord() const {
  if (kind_ == Kind::Point) return x_.ord();
  ArchClass h = x_.ord();
  if (h.is_minus_inf() || h.index() > level_) return ArchClass::level(level_);
  return h;
}

bool Cut::coarsely_equal(const Cut &a, const Cut &b) {
  int cmp = compare(a, b);
  if (cmp == 0) return true;
  // index of the first level at which the two cut positions differ
  int d;
  if (a.kind_ == Kind::Point && b.kind_ == Kind::Point) {
    ArchClass dc = (a.x_ - b.x_).ord();
    if (dc.is_minus_inf()) return true;
    d = dc.index();
  } else if (a.kind_ == Kind::Point || b.kind_ == Kind::Point) {
    const Cut &ci = a.kind_ == Kind::CosetInf ? a : b;
    const Cut &pt = a.kind_ == Kind::Point ? a : b;
    d = first_prefix_diff(ci.x_, pt.x_, ci.level_);
    if (d == ci.level_) d = ci.level_;  // gap sits at the unbounded level
  } else {
    int l = std::min(a.level_, b.level_);
    d = first_prefix_diff(a.x_, b.x_, l);
  }
  ArchClass diff = ArchClass::level(d);
  ArchClass pa = a.position_ord(), pb = b.position_ord();
  if (pa.is_minus_inf() || pb.is_minus_inf()) return false;  // a zero endpoint
  return diff < pa && diff < pb;
}

Rat rational_between(const RealExp &a, const RealExp &b) {
  if (!(a < b)) throw std::domain_error("rational_between: need a < b");
  Int scale = 1;
  for (int iter = 0; iter < 4096; ++iter) {
    RealExp sa = a.scaled(Rat(scale));
    // smallest integer strictly above sa, by exact bisection
    Int lo = 0, hi = 1;
    while (!(sa < RealExp(Rat(hi)))) hi *= 2;
    while (sa < RealExp(Rat(lo))) lo = lo == 0 ? Int(-1) : lo * 2;  // expand down
    while (hi - lo > 1) {
      Int mid = lo + (hi - lo) / 2;
      if (sa < RealExp(Rat(mid)))
        hi = mid;
      else
        lo = mid;
    }
    Rat q(hi, scale);
    if (RealExp(q) < b) return q;
    scale *= 10;
  }
  throw std::logic_error("rational_between: failed to separate");
}

Exp Cut::between(const Cut &a, const Cut &b, const GroupSpec &g) {
  if (!(compare(a, b) < 0)) throw std::domain_error("Cut::between: need a < b");
  int rank = a.rank();
  auto lift_point = [&](const Exp &x, const Exp &strictly_below) {
    // group element in [x, strictly_below); prefer x itself when it fits
    if (g.contains(x)) return x;
    int i = first_prefix_diff(x, strictly_below, rank);
    Exp out(rank);
    for (int j = 0; j < i; ++j) out = out.with_component(j, x.at(j));
    out = out.with_component(i, RealExp(rational_between(x.at(i), strictly_below.at(i))));
    if (!g.contains(out)) throw std::domain_error("Cut::between: no group point found");
    return out;
  };
  if (a.kind_ == Kind::Point && b.kind_ == Kind::Point)
    return lift_point(a.x_, b.x_);
  if (a.kind_ == Kind::Point) {
    const int l = b.level_;
    Exp out(rank);
    for (int j = 0; j < l; ++j) out = out.with_component(j, b.x_.at(j));
    if (prefix_compare(a.x_, b.x_, l) == 0) {
      // shared prefix: bump the level component just above a's
      Rat q = rational_between(a.x_.at(l), a.x_.at(l) + RealExp(Rat(1)));
      out = out.with_component(l, RealExp(q));
    }
    if (!g.contains(out)) throw std::domain_error("Cut::between: no group point found");
    return out;
  }
  const int l = a.level_;
  if (b.kind_ == Kind::Point) {
    int i = first_prefix_diff(a.x_, b.x_, l);
    Exp out(rank);
    if (i == l) {
      // b's point shares the coset prefix but exceeds the cut at level l on
      // its own components; a.x_ has zeros there, so split at level l
      for (int j = 0; j < l; ++j) out = out.with_component(j, b.x_.at(j));
      out = out.with_component(l, RealExp(rational_between(b.x_.at(l) - RealExp(Rat(1)),
                                                           b.x_.at(l))));
    } else {
      for (int j = 0; j < i; ++j) out = out.with_component(j, b.x_.at(j));
      out = out.with_component(i, RealExp(rational_between(a.x_.at(i), b.x_.at(i))));
    }
    if (!g.contains(out)) throw std::domain_error("Cut::between: no group point found");
    return out;
  }
  int lb = b.level_;
  int lmin = std::min(l, lb);
  int i = first_prefix_diff(a.x_, b.x_, lmin);
  Exp out(rank);
  if (i < lmin) {
    for (int j = 0; j < i; ++j) out = out.with_component(j, b.x_.at(j));
    out = out.with_component(i, RealExp(rational_between(a.x_.at(i), b.x_.at(i))));
  } else if (lb < l) {
    // b has the shorter prefix: climb just above b's hi at its level
    for (int j = 0; j < lb; ++j) out = out.with_component(j, b.x_.at(j));
    out = out.with_component(lb, b.x_.at(lb) + RealExp(Rat(1)));
  } else {
    // l < lb with common prefix: prefix(b) itself is strictly above a's cut
    for (int j = 0; j < lb; ++j) out = out.with_component(j, b.x_.at(j));
  }
  if (!g.contains(out)) throw std::domain_error("Cut::between: no group point found");
  return out;
}

std::string Cut::str() const {
  std::ostringstream os;
  if (kind_ == Kind::Point) {
    os << "point(" << x_.str() << ")";
  } else {
    os << "cosetinf(level " << level_ + 1 << " above " << x_.str() << ")";
  }
  return os.str();
}

}  // namespace hahnfactor
