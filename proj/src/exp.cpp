#include "hahnfactor/exp.hpp"

#include <algorithm>
#include <sstream>

namespace hahnfactor {

std::string ArchClass::str() const {
  if (is_minus_inf()) return "-inf";
  return "level " + std::to_string(*idx_ + 1);
}

Exp Exp::from_components(std::vector<RealExp> comps) {
  if (comps.empty()) throw std::domain_error("Exp: rank must be >= 1");
  Exp e;
  e.components_ = std::move(comps);
  return e;
}

bool Exp::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const RealExp &r) { return r.is_zero(); });
}

ArchClass Exp::ord() const {
  for (int i = 0; i < rank(); ++i)
    if (!components_[i].is_zero()) return ArchClass::level(i);
  return ArchClass::minus_inf();
}

void Exp::check_rank(const Exp &o) const {
  if (rank() != o.rank())
    throw std::domain_error("Exp: mixed group presentations (rank mismatch)");
}

Exp Exp::operator-() const {
  Exp r = *this;
  for (auto &c : r.components_) c = -c;
  return r;
}

Exp Exp::operator+(const Exp &o) const {
  check_rank(o);
  Exp r = *this;
  for (int i = 0; i < rank(); ++i) r.components_[i] = r.components_[i] + o.components_[i];
  return r;
}

Exp Exp::operator-(const Exp &o) const { return *this + (-o); }

Exp Exp::scaled(const Rat &k) const {
  Exp r = *this;
  for (auto &c : r.components_) c = c.scaled(k);
  return r;
}

int Exp::sign() const {
  for (const auto &c : components_) {
    int s = c.sign();
    if (s != 0) return s;
  }
  return 0;
}

int Exp::compare(const Exp &a, const Exp &b) {
  a.check_rank(b);
  for (int i = 0; i < a.rank(); ++i) {
    int c = RealExp::compare(a.components_[i], b.components_[i]);
    if (c != 0) return c;
  }
  return 0;
}

Exp Exp::with_component(int level, const RealExp &r) const {
  Exp e = *this;
  e.components_.at(level) = r;
  return e;
}

std::string Exp::str() const {
  if (rank() == 1) return components_[0].str();
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rank(); ++i) {
    if (i) os << ", ";
    os << components_[i].str();
  }
  os << "]";
  return os.str();
}

Domination domination(const Exp &g, const Exp &h) {
  if (g.is_zero() && h.is_zero())
    throw std::domain_error("domination: both elements are zero");
  int c = ArchClass::compare(g.ord(), h.ord());
  if (c < 0) return Domination::StrictlyDominated;
  if (c > 0) return Domination::Dominates;
  return Domination::Comparable;
}

std::pair<RealExp, Exp> project_sigma(const Exp &g, int sigma) {
  if (sigma < 0 || sigma >= g.rank()) throw std::domain_error("project_sigma: bad level");
  ArchClass o = g.ord();
  if (!o.is_minus_inf() && o.index() < sigma)
    throw std::domain_error("project_sigma: ord(g) exceeds sigma");
  RealExp h = g.at(sigma);
  return {h, g.with_component(sigma, RealExp())};
}

bool GroupSpec::contains(const RealExp &r) const {
  if (!radicands) return true;
  for (const auto &[m, c] : r.coords())
    if (m != 1 && !radicands->count(m)) return false;
  return true;
}

bool GroupSpec::contains(const Exp &x) const {
  if (x.rank() != rank) return false;
  return std::all_of(x.components().begin(), x.components().end(),
                     [&](const RealExp &r) { return contains(r); });
}

bool GroupSpec::operator==(const GroupSpec &o) const {
  return rank == o.rank && radicands == o.radicands;
}

std::string GroupSpec::str() const {
  std::ostringstream os;
  if (!radicands) {
    os << "ambient";
  } else {
    os << "q";
    bool any = false;
    for (const auto &m : *radicands)
      if (m != 1) {
        os << (any ? "," : "(sqrt:") << m.str();
        any = true;
      }
    if (any) os << ")";
  }
  if (rank > 1) os << " lex:" << rank;
  return os.str();
}

GroupSpec GroupSpec::join(const GroupSpec &a, const GroupSpec &b) {
  GroupSpec g;
  g.rank = std::max(a.rank, b.rank);
  if (a.radicands && b.radicands) {
    g.radicands = *a.radicands;
    g.radicands->insert(b.radicands->begin(), b.radicands->end());
  }
  return g;
}

// forms: "ambient", "q", "q(sqrt:2,3)", each optionally followed by " lex:N"
GroupSpec parse_group(const std::string &text) {
  GroupSpec g;
  std::string s = text;
  auto lex = s.find("lex:");
  if (lex != std::string::npos) {
    g.rank = std::stoi(s.substr(lex + 4));
    if (g.rank < 1) throw ParseError("group rank must be >= 1", lex);
    s = s.substr(0, lex);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == ';')) s.pop_back();
  if (s.empty() || s == "ambient") return g;
  if (s == "q" || s == "Q") {
    g.radicands = std::set<Int>{Int(1)};
    return g;
  }
  if (s.rfind("q(sqrt:", 0) == 0 || s.rfind("Q(sqrt:", 0) == 0) {
    if (s.back() != ')') throw ParseError("expected ')' in group spec", s.size());
    g.radicands = std::set<Int>{Int(1)};
    std::string body = s.substr(7, s.size() - 8);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      Int d(tok);
      auto [sq, m] = squarefree_split(d);
      (void)sq;
      g.radicands->insert(m);
    }
    return g;
  }
  throw ParseError("unrecognised group spec: " + text, 0);
}

}  // namespace hahnfactor
