#include "numerosity/ordinal.hpp"

#include <stdexcept>

namespace numerosity {

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

Ordinal Ordinal::natural(const mpz_class& n) {
  if (n < 0) throw std::invalid_argument("negative natural");
  Ordinal o;
  if (n != 0) o.terms_.push_back(OrdTerm{Ordinal{}, n});
  return o;
}

Ordinal Ordinal::omega() { return omega_pow(natural(1)); }

Ordinal Ordinal::omega_pow(const Ordinal& e, const mpz_class& c) {
  if (c < 0) throw std::invalid_argument("negative coefficient");
  Ordinal o;
  if (c != 0) o.terms_.push_back(OrdTerm{e, c});
  return o;
}

Ordinal Ordinal::from_terms(std::vector<OrdTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coef < 1) throw std::invalid_argument("CNF coefficient must be >= 1");
    if (i > 0 && ord_cmp(terms[i - 1].exponent, terms[i].exponent) != Ordering::Greater)
      throw std::invalid_argument("CNF exponents must strictly decrease");
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

bool Ordinal::is_zero() const { return terms_.empty(); }

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

mpz_class Ordinal::finite_value() const {
  if (!is_finite()) throw std::domain_error("ordinal is infinite");
  return terms_.empty() ? mpz_class(0) : terms_[0].coef;
}

mpz_class Ordinal::finite_part() const {
  if (!terms_.empty() && terms_.back().exponent.is_zero()) return terms_.back().coef;
  return 0;
}

const Ordinal& Ordinal::leading_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero has no leading exponent");
  return terms_.front().exponent;
}

int Ordinal::depth() const {
  int d = 0;
  for (const auto& t : terms_)
    if (!t.exponent.is_zero()) d = std::max(d, 1 + t.exponent.depth());
  return d;
}

bool Ordinal::operator==(const Ordinal& o) const {
  return ord_cmp(*this, o) == Ordering::Equal;
}

bool Ordinal::operator<(const Ordinal& o) const {
  return ord_cmp(*this, o) == Ordering::Less;
}

Ordering ord_cmp(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    Ordering e = ord_cmp(x[i].exponent, y[i].exponent);
    if (e != Ordering::Equal) return e;
    int c = cmp(x[i].coef, y[i].coef);
    if (c != 0) return c < 0 ? Ordering::Less : Ordering::Greater;
  }
  if (x.size() == y.size()) return Ordering::Equal;
  return x.size() < y.size() ? Ordering::Less : Ordering::Greater;
}

Ordinal cantor_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.leading_exponent();
  std::vector<OrdTerm> out;
  mpz_class carry = 0;
  for (const auto& t : a.terms()) {
    Ordering c = ord_cmp(t.exponent, lead);
    if (c == Ordering::Greater) out.push_back(t);
    else if (c == Ordering::Equal) carry = t.coef;
  }
  bool first = true;
  for (const auto& t : b.terms()) {
    out.push_back(t);
    if (first) {
      out.back().coef += carry;
      first = false;
    }
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal cantor_mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal{};
  Ordinal result;
  for (const auto& t : b.terms()) {
    Ordinal piece;
    if (t.exponent.is_zero()) {
      std::vector<OrdTerm> ts = a.terms();
      ts.front().coef *= t.coef;
      piece = Ordinal::from_terms(std::move(ts));
    } else {
      piece = Ordinal::omega_pow(cantor_add(a.leading_exponent(), t.exponent), t.coef);
    }
    result = cantor_add(result, piece);
  }
  return result;
}

Ordinal natural_add(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<OrdTerm> out;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size()) {
      out.push_back(x[i++]);
    } else if (i == x.size()) {
      out.push_back(y[j++]);
    } else {
      Ordering c = ord_cmp(x[i].exponent, y[j].exponent);
      if (c == Ordering::Greater) {
        out.push_back(x[i++]);
      } else if (c == Ordering::Less) {
        out.push_back(y[j++]);
      } else {
        out.push_back(OrdTerm{x[i].exponent, x[i].coef + y[j].coef});
        ++i;
        ++j;
      }
    }
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal natural_mul(const Ordinal& a, const Ordinal& b) {
  Ordinal result;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms())
      result = natural_add(result,
                           Ordinal::omega_pow(natural_add(s.exponent, t.exponent), s.coef * t.coef));
  return result;
}

namespace {

Ordinal cantor_pow_finite(const Ordinal& base, mpz_class k) {
  Ordinal result = Ordinal::natural(1);
  Ordinal sq = base;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = cantor_mul(result, sq);
    k >>= 1;
    if (k > 0) sq = cantor_mul(sq, sq);
  }
  return result;
}

mpz_class pow_mpz(const mpz_class& n, const mpz_class& k) {
  if (!k.fits_ulong_p()) throw Unsupported("finite power too large");
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return r;
}

}  // namespace

Ordinal ord_exp(const Ordinal& base, const Ordinal& exp) {
  if (exp.is_zero()) return Ordinal::natural(1);
  if (base == Ordinal::omega()) return Ordinal::omega_pow(exp);
  if (exp.is_finite()) return cantor_pow_finite(base, exp.finite_value());
  if (base.is_finite()) {
    mpz_class n = base.finite_value();
    if (n <= 1) return base;
    // exp = w*delta + r with r finite; n^(w*delta + r) = w^delta * n^r.
    std::vector<OrdTerm> delta;
    for (const auto& t : exp.terms()) {
      if (t.exponent.is_zero()) continue;
      Ordinal e = t.exponent;
      if (e.is_finite()) e = Ordinal::natural(e.finite_value() - 1);
      delta.push_back(OrdTerm{e, t.coef});
    }
    return Ordinal::omega_pow(Ordinal::from_terms(std::move(delta)), pow_mpz(n, exp.finite_part()));
  }
  // base >= w with leading exponent d, exp = l + r (l a limit, r finite):
  // w^d <= base < w^(d+1) squeezes base^l to w^(d*l), and base^r is finite.
  std::vector<OrdTerm> limit;
  for (const auto& t : exp.terms())
    if (!t.exponent.is_zero()) limit.push_back(t);
  const Ordinal& d = base.terms().front().exponent;
  return cantor_mul(Ordinal::omega_pow(cantor_mul(d, Ordinal::from_terms(std::move(limit)))),
                    cantor_pow_finite(base, exp.finite_part()));
}

bool is_indecomposable(const Ordinal& t) {
  if (t.is_zero()) throw ZeroArgument("is_indecomposable(0)");
  if (t == Ordinal::natural(1)) return true;
  if (t.terms().size() != 1 || t.terms()[0].coef != 1) return false;
  const Ordinal& e = t.terms()[0].exponent;
  return e.terms().size() == 1 && e.terms()[0].coef == 1;
}

namespace {

bool is_atom_text(const Ordinal& e) {
  return e.is_finite() || e == Ordinal::omega();
}

}  // namespace

std::string to_string(const Ordinal& o) {
  if (o.is_zero()) return "0";
  std::string s;
  for (const auto& t : o.terms()) {
    if (!s.empty()) s += " + ";
    if (t.exponent.is_zero()) {
      s += t.coef.get_str();
      continue;
    }
    if (t.exponent == Ordinal::natural(1)) {
      s += "w";
    } else if (is_atom_text(t.exponent)) {
      s += "w^" + to_string(t.exponent);
    } else {
      s += "w^(" + to_string(t.exponent) + ")";
    }
    if (t.coef != 1) s += "*" + t.coef.get_str();
  }
  return s;
}

}  // namespace numerosity
