// Partial order on numerosity expressions.
//
// Monomials are compared by cancelling common factors and then trying to
// absorb every factor of the smaller side into some factor of the larger one.
// Each absorption step is backed by a rule that is either built in or
// declared in the AxiomTable; whatever cannot be absorbed yields Unknown.

#include <algorithm>

#include "numerosity/numexpr.hpp"

namespace numerosity {

namespace {

// One side of a cancelled monomial ratio. `dom` marks an omega power that
// dominates every alpha power; `tiny` marks a factor (1 + 1/alpha)^k, which is
// above 1 but infinitely close to it.
struct Side {
  std::array<mpq_class, kGenCount> e{};
  bool dom = false;
  bool tiny = false;

  mpq_class& at(Gen g) { return e[static_cast<int>(g)]; }
  const mpq_class& at(Gen g) const { return e[static_cast<int>(g)]; }
  bool infinite() const {
    if (dom) return true;
    for (const auto& x : e)
      if (x > 0) return true;
    return false;
  }
};

Ordinal finite_stripped(const Ordinal& o) {
  std::vector<OrdTerm> ts;
  for (const auto& t : o.terms())
    if (!t.exponent.is_zero()) ts.push_back(t);
  return Ordinal::from_terms(std::move(ts));
}

void split(const Monomial& a, const Monomial& b, Side& p, Side& n) {
  for (int g = 0; g < kGenCount; ++g) {
    mpq_class d = a.e[g] - b.e[g];
    if (d > 0) p.e[g] = d;
    else if (d < 0) n.e[g] = -d;
  }
  if (a.omega == b.omega) return;
  if (b.omega.is_zero()) {
    p.dom = true;
  } else if (a.omega.is_zero()) {
    n.dom = true;
  } else if (finite_stripped(a.omega) == finite_stripped(b.omega)) {
    // w^(g+i) / w^(g+j) = (alpha + 1)^(i - j)
    mpz_class k = a.omega.finite_part() - b.omega.finite_part();
    Side& s = k > 0 ? p : n;
    s.at(Gen::Alpha) += mpq_class(k > 0 ? k : mpz_class(-k));
    s.tiny = true;
  } else {
    (ord_cmp(a.omega, b.omega) == Ordering::Greater ? p : n).dom = true;
  }
  mpq_class common = std::min(p.at(Gen::Alpha), n.at(Gen::Alpha));
  p.at(Gen::Alpha) -= common;
  n.at(Gen::Alpha) -= common;
}

bool divides(const Monomial& m, const Side& s) {
  for (int g = 0; g < kGenCount; ++g)
    if (m.e[g] > s.e[g]) return false;
  return true;
}

Side minus(Side s, const Monomial& m) {
  for (int g = 0; g < kGenCount; ++g) s.e[g] -= m.e[g];
  return s;
}

mpq_class ceil_q(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return mpq_class(r);
}

bool greater(const Side& p, const Side& n, const AxiomTable& t, int depth);

// p >= n (both positive quantities).
bool greater_eq(const Side& p, const Side& n, const AxiomTable& t, int depth) {
  if (!n.infinite() && (!n.tiny || p.infinite() || p.tiny)) return true;
  return greater(p, n, t, depth);
}

// p > n. Every step strictly shrinks n so the search terminates.
bool greater(const Side& p, const Side& n, const AxiomTable& t, int depth) {
  if (!n.infinite()) return p.infinite() || (p.tiny && !n.tiny);
  if (depth > 32) return false;
  const bool has_alpha = n.at(Gen::Alpha) > 0;
  auto drop_alpha = [&](Side s) {
    s.at(Gen::Alpha) = 0;
    s.tiny = false;
    return s;
  };
  if (has_alpha) {
    // X and infinite omega powers dominate every alpha power.
    if (p.at(Gen::X2W) >= 1) {
      Side p2 = p;
      p2.at(Gen::X2W) -= 1;
      if (greater_eq(p2, drop_alpha(n), t, depth + 1)) return true;
    }
    if (p.dom) {
      Side p2 = p;
      p2.dom = false;
      if (greater_eq(p2, drop_alpha(n), t, depth + 1)) return true;
    }
    // alpha < beta, hence alpha^q < beta^ceil(q).
    mpq_class need = ceil_q(n.at(Gen::Alpha));
    if (p.at(Gen::Beta) >= need) {
      Side p2 = p;
      p2.at(Gen::Beta) -= need;
      if (greater_eq(p2, drop_alpha(n), t, depth + 1)) return true;
    }
    for (const auto& d : t.declared()) {
      if (!d.alpha_schema || !divides(d.rhs, p)) continue;
      if (greater_eq(minus(p, d.rhs), drop_alpha(n), t, depth + 1)) return true;
    }
  }
  for (const auto& d : t.declared()) {
    if (d.alpha_schema || !divides(d.lhs, n) || !divides(d.rhs, p)) continue;
    Side n2 = minus(n, d.lhs);
    if (n2.e == n.e) continue;
    if (greater_eq(minus(p, d.rhs), n2, t, depth + 1)) return true;
  }
  return false;
}

}  // namespace

const char* to_string(CmpKind k) {
  switch (k) {
    case CmpKind::Less: return "Less";
    case CmpKind::Equal: return "Equal";
    case CmpKind::Greater: return "Greater";
    case CmpKind::Unknown: return "Unknown";
  }
  return "?";
}

CmpResult mono_cmp(const Monomial& a, const Monomial& b, const AxiomTable& t) {
  if (a == b) return {CmpKind::Equal, {}};
  Side p, n;
  split(a, b, p, n);
  if (greater(p, n, t, 0)) return {CmpKind::Greater, {}};
  if (greater(n, p, t, 0)) return {CmpKind::Less, {}};
  return {CmpKind::Unknown, reason_name(a) + " vs " + reason_name(b) + " undeclared"};
}

namespace {

// Terms not decided-smaller than any other term.
std::vector<Poly::const_iterator> maximal_terms(const Poly& p, const AxiomTable& t) {
  std::vector<Poly::const_iterator> out;
  for (auto i = p.begin(); i != p.end(); ++i) {
    bool dominated = false;
    for (auto j = p.begin(); j != p.end() && !dominated; ++j)
      dominated = i != j && mono_cmp(i->first, j->first, t).kind == CmpKind::Less;
    if (!dominated) out.push_back(i);
  }
  return out;
}

bool dominated_by(const Monomial& m, const std::vector<Poly::const_iterator>& tops,
                  const AxiomTable& t) {
  for (auto it : tops)
    if (mono_cmp(m, it->first, t).kind == CmpKind::Less) return true;
  return false;
}

int sign_of(const CmpResult& r) {
  return r.kind == CmpKind::Greater ? 1 : r.kind == CmpKind::Less ? -1 : 0;
}

}  // namespace

CmpResult poly_sign(const Poly& p, const AxiomTable& t) {
  if (p.empty()) return {CmpKind::Equal, {}};
  auto tops = maximal_terms(p, t);
  bool pos = false, neg = false;
  for (auto it : tops) (it->second > 0 ? pos : neg) = true;
  if (pos != neg) return {pos ? CmpKind::Greater : CmpKind::Less, {}};
  const Monomial* mp = nullptr;
  const Monomial* mn = nullptr;
  for (auto it : tops) {
    if (it->second > 0 && !mp) mp = &it->first;
    if (it->second < 0 && !mn) mn = &it->first;
  }
  CmpResult r = mono_cmp(*mp, *mn, t);
  if (r.reason.empty()) r.reason = reason_name(*mp) + " vs " + reason_name(*mn) + " undeclared";
  return {CmpKind::Unknown, r.reason};
}

CmpResult nf_cmp(const NumExpr& a, const NumExpr& b, const AxiomTable& t) {
  NumExpr d = t.bb_mode() ? apply_bb(a) - apply_bb(b) : a - b;
  if (d.is_zero()) return {CmpKind::Equal, {}};
  CmpResult sn = poly_sign(d.num(), t);
  if (!sn.decided()) return sn;
  CmpResult sd = poly_sign(d.den(), t);
  if (!sd.decided()) return sd;
  return {sign_of(sn) * sign_of(sd) > 0 ? CmpKind::Greater : CmpKind::Less, {}};
}

std::string to_string(const StdPart& s) {
  switch (s.kind) {
    case StdPart::Kind::Finite: return "Finite(" + s.value.get_str() + ")";
    case StdPart::Kind::PlusInfinity: return "PlusInfinity";
    case StdPart::Kind::MinusInfinity: return "MinusInfinity";
    case StdPart::Kind::Unknown: return "Unknown(" + s.reason + ")";
  }
  return "?";
}

namespace {

StdPart finite(const mpq_class& v) { return {StdPart::Kind::Finite, v, {}}; }
StdPart unknown(std::string why) { return {StdPart::Kind::Unknown, 0, std::move(why)}; }
StdPart infinity(int sign) {
  return {sign > 0 ? StdPart::Kind::PlusInfinity : StdPart::Kind::MinusInfinity, 0, {}};
}

StdPart st_rec(const NumExpr& x, const AxiomTable& t, int depth) {
  if (x.is_zero()) return finite(0);
  if (depth > 8) return unknown("leading terms undecided");
  const Poly& n = x.num();
  const Poly& d = x.den();
  auto tn = maximal_terms(n, t);
  auto td = maximal_terms(d, t);
  if (tn.size() == 1 && td.size() == 1) {
    CmpResult c = mono_cmp(tn[0]->first, td[0]->first, t);
    int s = sgn(tn[0]->second) * sgn(td[0]->second);
    switch (c.kind) {
      case CmpKind::Equal: return finite(tn[0]->second / td[0]->second);
      case CmpKind::Greater: return infinity(s);
      case CmpKind::Less: return finite(0);
      case CmpKind::Unknown: return unknown(c.reason);
    }
  }
  CmpResult sd = poly_sign(d, t);
  if (!sd.decided()) return unknown(sd.reason);
  bool num_small = true;
  for (const auto& [m, c] : n) num_small = num_small && dominated_by(m, td, t);
  if (num_small) return finite(0);
  bool den_small = true;
  for (const auto& [m, c] : d) den_small = den_small && dominated_by(m, tn, t);
  if (den_small) {
    CmpResult sn = poly_sign(n, t);
    if (!sn.decided()) return unknown(sn.reason);
    return infinity(sign_of(sn) * sign_of(sd));
  }
  // Same leading monomials with proportional coefficients: peel off the ratio.
  if (tn.size() == td.size()) {
    bool same = true;
    mpq_class ratio = tn[0]->second / td[0]->second;
    for (std::size_t i = 0; i < tn.size() && same; ++i)
      same = tn[i]->first == td[i]->first && tn[i]->second == ratio * td[i]->second;
    if (same) {
      NumExpr rest = x - NumExpr(ratio);
      StdPart r = st_rec(rest, t, depth + 1);
      if (r.kind == StdPart::Kind::Finite && r.value == 0) return finite(ratio);
      if (r.kind == StdPart::Kind::Unknown) return r;
      return unknown("leading terms undecided");
    }
  }
  CmpResult why = mono_cmp(tn[0]->first, td[0]->first, t);
  return unknown(why.reason.empty() ? "leading terms undecided" : why.reason);
}

}  // namespace

StdPart standard_part(const NumExpr& a, const AxiomTable& t) {
  return st_rec(t.bb_mode() ? apply_bb(a) : a, t, 0);
}

StdPart gamma_measure(const NumExpr& numA, const NumExpr& gamma, const AxiomTable& t) {
  CmpResult c = nf_cmp(gamma, NumExpr(0), t);
  if (c.kind != CmpKind::Greater)
    throw NonPositiveGamma("gamma " + to_string(gamma) + " is not decided positive");
  StdPart r = standard_part(numA / gamma, t);
  if (r.kind == StdPart::Kind::MinusInfinity)
    throw std::logic_error("negative measure for a set numerosity");
  return r;
}

AxiomTable AxiomTable::with_bb_mode(bool on) const {
  AxiomTable r = *this;
  r.bb_mode_ = on;
  return r;
}

AxiomTable AxiomTable::with_order(const DeclaredOrder& d) const {
  if (!d.lhs.omega.is_zero() || !d.rhs.omega.is_zero())
    throw Unsupported("declared orders over omega powers");
  if (d.alpha_schema) {
    if (d.rhs.alpha_only())
      throw InconsistentAxiom("alpha^k < " + to_string(d.rhs) + " contradicts the alpha order");
    for (const mpq_class& q : {mpq_class(1, 2), mpq_class(1), mpq_class(2), mpq_class(3),
                               mpq_class(7), mpq_class(64)}) {
      CmpResult c = mono_cmp(Monomial::gen(Gen::Alpha, q), d.rhs, *this);
      if (c.kind == CmpKind::Greater || c.kind == CmpKind::Equal)
        throw InconsistentAxiom("alpha^" + q.get_str() + " >= " + to_string(d.rhs) +
                                " is already decided");
    }
  } else {
    CmpResult c = mono_cmp(d.lhs, d.rhs, *this);
    if (c.kind == CmpKind::Greater || c.kind == CmpKind::Equal)
      throw InconsistentAxiom(to_string(d.lhs) + " >= " + to_string(d.rhs) + " is already decided");
  }
  AxiomTable r = *this;
  r.declared_.push_back(d);
  return r;
}

}  // namespace numerosity
