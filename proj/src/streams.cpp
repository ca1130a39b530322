#include "hahnfactor/streams.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hahnfactor {

namespace {

Rat eval_poly(const std::vector<Rat> &p, long n) {
  Rat x(n), acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// coefficients of p(x+k)
std::vector<Rat> shift_poly(const std::vector<Rat> &p, long k) {
  std::vector<Rat> out(p.size(), Rat(0));
  for (size_t i = 0; i < p.size(); ++i) {
    // p[i] * (x+k)^i, expanded iteratively
    std::vector<Rat> row{Rat(1)};
    for (size_t j = 1; j <= i; ++j) {
      std::vector<Rat> nxt(j + 1, Rat(0));
      for (size_t t = 0; t < j; ++t) {
        nxt[t] += row[t] * Rat(k);
        nxt[t + 1] += row[t];
      }
      row = nxt;
    }
    for (size_t t = 0; t <= i; ++t) out[t] += p[i] * row[t];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

CoefStream CoefStream::constant(const Rat &c) { return poly_geo({c}, Rat(1)); }

CoefStream CoefStream::geometric(const Rat &c, const Rat &u) { return poly_geo({c}, u); }

CoefStream CoefStream::poly_geo(std::vector<Rat> poly, const Rat &u) {
  if (u == 0) throw std::domain_error("CoefStream: ratio must be nonzero");
  CoefStream s;
  s.kind_ = Kind::PolyGeo;
  s.poly_ = std::move(poly);
  s.u_ = u;
  s.canonicalize();
  return s;
}

CoefStream CoefStream::ev_periodic(std::vector<Rat> pre, std::vector<Rat> cycle) {
  if (cycle.empty()) throw std::domain_error("CoefStream: empty cycle");
  CoefStream s;
  s.kind_ = Kind::EvPeriodic;
  s.pre_ = std::move(pre);
  s.cycle_ = std::move(cycle);
  s.canonicalize();
  return s;
}

void CoefStream::canonicalize() {
  if (kind_ == Kind::PolyGeo) {
    while (!poly_.empty() && poly_.back() == 0) poly_.pop_back();
    if (poly_.empty()) u_ = Rat(1);
    return;
  }
  // minimal cycle
  size_t L = cycle_.size();
  for (size_t d = 1; d <= L / 2; ++d) {
    if (L % d) continue;
    bool ok = true;
    for (size_t i = d; i < L && ok; ++i) ok = cycle_[i] == cycle_[i % d];
    if (ok) {
      cycle_.resize(d);
      break;
    }
  }
  // strip preperiod entries that already match the cycle, keeping the cycle
  // phase anchored to the stream index
  while (!pre_.empty() && pre_.back() == cycle_.back()) {
    pre_.pop_back();
    std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
  }
  if (pre_.empty()) {
    if (cycle_.size() == 1) {
      Rat c = cycle_[0];
      kind_ = Kind::PolyGeo;
      poly_ = c == 0 ? std::vector<Rat>{} : std::vector<Rat>{c};
      u_ = Rat(1);
      pre_.clear();
      cycle_.clear();
      return;
    }
    if (cycle_.size() == 2 && cycle_[1] == -cycle_[0] && cycle_[0] != 0) {
      Rat c = cycle_[0];
      kind_ = Kind::PolyGeo;
      poly_ = {c};
      u_ = Rat(-1);
      pre_.clear();
      cycle_.clear();
      return;
    }
  }
}

bool CoefStream::is_zero() const {
  if (kind_ == Kind::PolyGeo) return poly_.empty();
  if (std::any_of(pre_.begin(), pre_.end(), [](const Rat &c) { return c != 0; }))
    return false;
  return std::all_of(cycle_.begin(), cycle_.end(), [](const Rat &c) { return c == 0; });
}

std::optional<std::vector<Rat>> CoefStream::finite_support() const {
  if (kind_ == Kind::PolyGeo) {
    if (poly_.empty()) return std::vector<Rat>{};
    return std::nullopt;
  }
  if (std::all_of(cycle_.begin(), cycle_.end(), [](const Rat &c) { return c == 0; }))
    return pre_;
  return std::nullopt;
}

std::optional<long> CoefStream::zero_from() const {
  auto fs = finite_support();
  if (!fs) return std::nullopt;
  long n = static_cast<long>(fs->size());
  while (n > 0 && (*fs)[n - 1] == 0) --n;
  return n;
}

Rat CoefStream::at(long n) const {
  if (n < 0) throw std::domain_error("CoefStream: negative index");
  if (kind_ == Kind::PolyGeo) {
    if (poly_.empty()) return Rat(0);
    return eval_poly(poly_, n) * rat_pow(u_, n);
  }
  if (n < static_cast<long>(pre_.size())) return pre_[n];
  return cycle_[(n - pre_.size()) % cycle_.size()];
}

CoefStream CoefStream::scaled(const Rat &k) const {
  if (k == 0) return CoefStream();
  CoefStream s = *this;
  for (auto &c : s.poly_) c *= k;
  for (auto &c : s.pre_) c *= k;
  for (auto &c : s.cycle_) c *= k;
  s.canonicalize();
  return s;
}

CoefStream CoefStream::dropped(long k) const {
  if (k == 0) return *this;
  if (kind_ == Kind::PolyGeo) {
    if (poly_.empty()) return *this;
    return poly_geo(shift_poly(poly_, k), u_).scaled(rat_pow(u_, k));
  }
  std::vector<Rat> pre = pre_, cyc = cycle_;
  long drop = std::min<long>(k, static_cast<long>(pre.size()));
  pre.erase(pre.begin(), pre.begin() + drop);
  long rest = k - drop;
  if (rest) std::rotate(cyc.begin(), cyc.begin() + (rest % static_cast<long>(cyc.size())), cyc.end());
  return ev_periodic(std::move(pre), std::move(cyc));
}

std::optional<CoefStream> CoefStream::try_prepend(const Rat &v) const {
  if (kind_ == Kind::PolyGeo) {
    if (poly_.empty()) {
      if (v == 0) return CoefStream();
      return ev_periodic({v}, {Rat(0)});
    }
    Rat predicted = eval_poly(poly_, -1) / u_;
    if (predicted == v) return poly_geo(shift_poly(poly_, -1), u_).scaled(Rat(1) / u_);
    auto per = as_periodic();
    if (!per) return std::nullopt;
    std::vector<Rat> pre = per->pre;
    pre.insert(pre.begin(), v);
    return ev_periodic(std::move(pre), per->cycle);
  }
  std::vector<Rat> pre = pre_;
  pre.insert(pre.begin(), v);
  return ev_periodic(std::move(pre), cycle_);
}

std::optional<CoefStream::Periodic> CoefStream::as_periodic() const {
  if (kind_ == Kind::EvPeriodic) return Periodic{pre_, cycle_};
  if (poly_.empty()) return Periodic{{}, {Rat(0)}};
  if (poly_.size() == 1 && (u_ == 1 || u_ == -1)) {
    if (u_ == 1) return Periodic{{}, {poly_[0]}};
    return Periodic{{}, {poly_[0], -poly_[0]}};
  }
  return std::nullopt;
}

std::optional<CoefStream> CoefStream::add(const CoefStream &a, const CoefStream &b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.kind_ == Kind::PolyGeo && b.kind_ == Kind::PolyGeo && a.u_ == b.u_) {
    std::vector<Rat> p = a.poly_;
    if (b.poly_.size() > p.size()) p.resize(b.poly_.size(), Rat(0));
    for (size_t i = 0; i < b.poly_.size(); ++i) p[i] += b.poly_[i];
    return poly_geo(std::move(p), a.u_);
  }
  auto pa = a.as_periodic(), pb = b.as_periodic();
  if (!pa || !pb) return std::nullopt;
  long preLen = static_cast<long>(std::max(pa->pre.size(), pb->pre.size()));
  long L = std::lcm(static_cast<long>(pa->cycle.size()),
                    static_cast<long>(pb->cycle.size()));
  std::vector<Rat> pre, cyc;
  for (long n = 0; n < preLen; ++n) pre.push_back(pa->at(n) + pb->at(n));
  for (long n = preLen; n < preLen + L; ++n) cyc.push_back(pa->at(n) + pb->at(n));
  return ev_periodic(std::move(pre), std::move(cyc));
}

std::optional<CoefStream> CoefStream::interleave(const std::vector<CoefStream> &streams,
                                                 const std::vector<long> &phases,
                                                 long stride) {
  std::vector<Periodic> per;
  for (const auto &s : streams) {
    auto p = s.as_periodic();
    if (!p) return std::nullopt;
    per.push_back(*p);
  }
  long preLen = stride, L = 1;
  for (const auto &p : per) {
    preLen = std::max<long>(preLen, (static_cast<long>(p.pre.size()) + 1) * stride);
    L = std::lcm(L, static_cast<long>(p.cycle.size()));
  }
  L *= stride;
  auto value_at = [&](long n) {
    for (size_t i = 0; i < per.size(); ++i)
      if (n % stride == phases[i]) return per[i].at(n / stride);
    return Rat(0);
  };
  std::vector<Rat> pre, cyc;
  for (long n = 0; n < preLen; ++n) pre.push_back(value_at(n));
  for (long n = preLen; n < preLen + L; ++n) cyc.push_back(value_at(n));
  return ev_periodic(std::move(pre), std::move(cyc));
}

std::optional<long> CoefStream::first_nonzero(long from) const {
  if (kind_ == Kind::PolyGeo) {
    if (poly_.empty()) return std::nullopt;
    for (long n = from;; ++n)  // a nonzero polynomial has finitely many roots
      if (at(n) != 0) return n;
  }
  long bound = static_cast<long>(pre_.size() + cycle_.size());
  long stop = std::max(from, bound) + static_cast<long>(cycle_.size());
  for (long n = from; n < stop; ++n)
    if (at(n) != 0) return n;
  return std::nullopt;
}

long CoefStream::recurrence_order() const {
  if (kind_ == Kind::PolyGeo) return static_cast<long>(poly_.size());
  return static_cast<long>(cycle_.size());
}

long CoefStream::preperiod_length() const {
  return kind_ == Kind::PolyGeo ? 0 : static_cast<long>(pre_.size());
}

bool CoefStream::operator==(const CoefStream &o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == Kind::PolyGeo) return poly_ == o.poly_ && (poly_.empty() || u_ == o.u_);
  return pre_ == o.pre_ && cycle_ == o.cycle_;
}

std::optional<Rat> CoefStream::proportional_to(const CoefStream &o) const {
  if (is_zero()) return o.is_zero() ? std::optional<Rat>(Rat(0)) : std::nullopt;
  auto n0 = first_nonzero();
  if (!n0) return std::nullopt;
  if (at(*n0) == 0) return std::nullopt;
  Rat k = o.at(*n0) / at(*n0);
  if (scaled(k) == o) return k;
  return std::nullopt;
}

std::string CoefStream::str() const {
  std::ostringstream os;
  if (kind_ == Kind::PolyGeo) {
    if (poly_.empty()) return "const(0)";
    if (poly_.size() == 1 && u_ == 1) {
      os << "const(" << poly_[0].str() << ")";
    } else if (poly_.size() == 1) {
      os << "geo(" << poly_[0].str() << "," << u_.str() << ")";
    } else {
      os << "polygeo([";
      for (size_t i = 0; i < poly_.size(); ++i) os << (i ? "," : "") << poly_[i].str();
      os << "]," << u_.str() << ")";
    }
    return os.str();
  }
  os << "periodic([";
  for (size_t i = 0; i < pre_.size(); ++i) os << (i ? "," : "") << pre_[i].str();
  os << "];[";
  for (size_t i = 0; i < cycle_.size(); ++i) os << (i ? "," : "") << cycle_[i].str();
  os << "])";
  return os.str();
}

}  // namespace hahnfactor
