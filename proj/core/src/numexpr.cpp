#include "numerosity/numexpr.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace numerosity {

namespace {

bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

// Coefficient-wise minimum of two CNF ordinals.
Ordinal coef_min(const Ordinal& a, const Ordinal& b) {
  std::vector<OrdTerm> out;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms())
      if (s.exponent == t.exponent) out.push_back(OrdTerm{s.exponent, std::min(s.coef, t.coef)});
  return Ordinal::from_terms(std::move(out));
}

// a - b coefficient-wise; nullopt unless b <= a coefficient-wise.
std::optional<Ordinal> coef_sub(const Ordinal& a, const Ordinal& b) {
  std::vector<OrdTerm> out;
  std::size_t j = 0;
  const auto& bt = b.terms();
  for (const auto& s : a.terms()) {
    mpz_class c = s.coef;
    if (j < bt.size() && bt[j].exponent == s.exponent) c -= bt[j++].coef;
    if (c < 0) return std::nullopt;
    if (c > 0) out.push_back(OrdTerm{s.exponent, c});
  }
  if (j != bt.size()) return std::nullopt;
  return Ordinal::from_terms(std::move(out));
}

Ordinal infinite_part(const Ordinal& o) {
  std::vector<OrdTerm> out;
  for (const auto& t : o.terms())
    if (!t.exponent.is_zero()) out.push_back(t);
  return Ordinal::from_terms(std::move(out));
}

void add_term(Poly& p, const Monomial& m, mpq_class c) {
  // Callers may hand over an uncanonicalized quotient such as 6/2.
  c.canonicalize();
  if (c == 0) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Poly poly_add(const Poly& a, const Poly& b, const mpq_class& sb = 1) {
  Poly r = a;
  for (const auto& [m, c] : b) add_term(r, m, c * sb);
  return r;
}

// Next to an infinite omega power, integral alpha powers are folded into the
// omega exponent: w^g * alpha^k = w^g * (w - 1)^k. This keeps the polynomial
// representation unique (w^g * alpha and w^(g+1) - w^g are the same number).
Poly normalize_omega(const Poly& p) {
  bool any = false;
  for (const auto& [m, c] : p) any = any || (!m.omega.is_zero() && m.exp(Gen::Alpha) >= 1);
  if (!any) return p;
  Poly r;
  for (const auto& [m, c] : p) {
    const mpq_class& a = m.exp(Gen::Alpha);
    if (m.omega.is_zero() || a < 1) {
      add_term(r, m, c);
      continue;
    }
    mpz_class k;
    mpz_fdiv_q(k.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    Monomial base = m;
    base.exp(Gen::Alpha) = a - k;
    unsigned long kk = k.get_ui();
    for (unsigned long j = 0; j <= kk; ++j) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), kk, j);
      Monomial q = base;
      q.omega = natural_add(m.omega, Ordinal::natural(j));
      add_term(r, q, ((kk - j) % 2 == 1 ? -c : c) * binom);
    }
  }
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [m1, c1] : a)
    for (const auto& [m2, c2] : b) add_term(r, m1 * m2, c1 * c2);
  return normalize_omega(r);
}

Poly poly_scale(const Poly& a, const mpq_class& s) {
  Poly r;
  for (const auto& [m, c] : a) add_term(r, m, c * s);
  return r;
}

Poly poly_const(const mpq_class& c) {
  Poly p;
  add_term(p, Monomial::unit(), c);
  return p;
}

Poly omega_finite_power(unsigned long k) {
  // (alpha + 1)^k
  Poly base;
  add_term(base, Monomial::gen(Gen::Alpha), 1);
  add_term(base, Monomial::unit(), 1);
  Poly r = poly_const(1);
  for (unsigned long i = 0; i < k; ++i) r = poly_mul(r, base);
  return r;
}

// Multiplies every term by the generator powers in `shift` (which may be
// negative) and divides the omega factor by w^gamma (gamma infinite and
// coefficient-wise below every term's omega exponent).
Poly poly_shift(const Poly& p, const std::array<mpq_class, kGenCount>& shift, const Ordinal& gamma) {
  Poly r;
  for (const auto& [m, c] : p) {
    Monomial q = m;
    for (int g = 0; g < kGenCount; ++g) q.e[g] += shift[g];
    if (gamma.is_zero()) {
      add_term(r, q, c);
      continue;
    }
    Ordinal rest = *coef_sub(m.omega, gamma);
    if (rest.is_finite()) {
      q.omega = Ordinal{};
      Poly expanded = omega_finite_power(rest.finite_value().get_ui());
      for (const auto& [m2, c2] : expanded) add_term(r, q * m2, c * c2);
    } else {
      q.omega = rest;
      add_term(r, q, c);
    }
  }
  return normalize_omega(r);
}

// Monomial quotient a / b with nonnegative exponents; the omega quotient must
// be zero or infinite so that the product stays a single monomial.
std::optional<Monomial> mono_quot(const Monomial& a, const Monomial& b) {
  Monomial q;
  for (int g = 0; g < kGenCount; ++g) {
    q.e[g] = a.e[g] - b.e[g];
    if (q.e[g] < 0) return std::nullopt;
  }
  auto rest = coef_sub(a.omega, b.omega);
  if (!rest) return std::nullopt;
  if (!rest->is_zero() && rest->is_finite()) return std::nullopt;
  q.omega = *rest;
  return q;
}

// Exact division; nullopt when `d` does not divide `a`.
std::optional<Poly> poly_exact_div(const Poly& a, const Poly& d) {
  Poly q;
  Poly r = a;
  const auto& [dm, dc] = *d.begin();
  for (int guard = 0; !r.empty(); ++guard) {
    if (guard > 4000) return std::nullopt;
    const auto& [rm, rc] = *r.begin();
    auto qm = mono_quot(rm, dm);
    if (!qm) return std::nullopt;
    mpq_class qc = rc / dc;
    Monomial qmv = *qm;
    add_term(q, qmv, qc);
    Poly step;
    for (const auto& [m, c] : d) add_term(step, qmv * m, c * qc);
    step = normalize_omega(step);
    r = poly_add(r, step, -1);
  }
  return q;
}

}  // namespace

Monomial Monomial::gen(Gen g, const mpq_class& k) {
  Monomial m;
  m.e[static_cast<int>(g)] = k;
  return m;
}

Monomial Monomial::omega_pow(const Ordinal& gamma) {
  if (gamma.is_finite()) throw std::invalid_argument("omega monomials need an infinite exponent");
  Monomial m;
  m.omega = gamma;
  return m;
}

bool Monomial::is_unit() const {
  for (const auto& x : e)
    if (x != 0) return false;
  return omega.is_zero();
}

bool Monomial::alpha_only() const {
  for (int g = 1; g < kGenCount; ++g)
    if (e[g] != 0) return false;
  return omega.is_zero();
}

bool Monomial::operator==(const Monomial& o) const {
  return e == o.e && omega == o.omega;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int g = 0; g < kGenCount; ++g) r.e[g] = a.e[g] + b.e[g];
  r.omega = natural_add(a.omega, b.omega);
  return r;
}

Ordering lex_cmp(const Monomial& a, const Monomial& b) {
  Ordering o = ord_cmp(a.omega, b.omega);
  if (o != Ordering::Equal) return o;
  for (Gen g : {Gen::Beth1, Gen::X2W, Gen::Beta, Gen::Alpha}) {
    int c = cmp(a.exp(g), b.exp(g));
    if (c != 0) return c < 0 ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

NumExpr::NumExpr(long v) : NumExpr(mpq_class(v)) {}

NumExpr::NumExpr(const mpq_class& v) : num_(poly_const(v)), den_(poly_const(1)) {}

NumExpr NumExpr::from_poly(Poly num, Poly den) {
  if (den.empty()) throw DivisionByZero("zero denominator");
  NumExpr x;
  x.num_ = normalize_omega(num);
  x.den_ = normalize_omega(den);
  x.canonicalize();
  return x;
}

NumExpr NumExpr::monomial(const Monomial& m, const mpq_class& c) {
  Poly p;
  add_term(p, m, c);
  return from_poly(std::move(p), poly_const(1));
}

NumExpr NumExpr::omega() { return alpha() + NumExpr(1); }

bool NumExpr::is_polynomial() const {
  return den_.size() == 1 && den_.begin()->first.is_unit() && den_.begin()->second == 1;
}

std::optional<mpq_class> NumExpr::as_rational() const {
  if (num_.empty()) return mpq_class(0);
  if (!is_polynomial() || num_.size() != 1 || !num_.begin()->first.is_unit()) return std::nullopt;
  return num_.begin()->second;
}

void NumExpr::canonicalize() {
  if (num_.empty()) {
    den_ = poly_const(1);
    return;
  }
  // Cancel the common monomial factor (and clear negative exponents).
  std::array<mpq_class, kGenCount> shift{};
  for (int g = 0; g < kGenCount; ++g) {
    mpq_class mn = 0;
    bool first = true;
    for (const Poly* p : {&num_, &den_})
      for (const auto& [m, c] : *p) {
        if (first || m.e[g] < mn) mn = m.e[g];
        first = false;
      }
    shift[g] = -mn;
  }
  Ordinal gamma;
  bool first = true;
  for (const Poly* p : {&num_, &den_})
    for (const auto& [m, c] : *p) {
      gamma = first ? m.omega : coef_min(gamma, m.omega);
      first = false;
    }
  gamma = infinite_part(gamma);
  bool any_shift = !gamma.is_zero();
  for (const auto& s : shift) any_shift = any_shift || s != 0;
  if (any_shift) {
    num_ = poly_shift(num_, shift, gamma);
    den_ = poly_shift(den_, shift, gamma);
  }
  if (den_.size() > 1 || !den_.begin()->first.is_unit()) {
    if (auto q = poly_exact_div(num_, den_)) {
      num_ = std::move(*q);
      den_ = poly_const(1);
    } else if (num_.size() > 1) {
      if (auto q2 = poly_exact_div(den_, num_)) {
        den_ = std::move(*q2);
        num_ = poly_const(1);
      }
    }
  }
  mpq_class lead = den_.begin()->second;
  if (lead != 1) {
    num_ = poly_scale(num_, 1 / lead);
    den_ = poly_scale(den_, 1 / lead);
  }
}

NumExpr nf_add(const NumExpr& a, const NumExpr& b) {
  if (a.den() == b.den()) return NumExpr::from_poly(poly_add(a.num(), b.num()), a.den());
  return NumExpr::from_poly(poly_add(poly_mul(a.num(), b.den()), poly_mul(b.num(), a.den())),
                            poly_mul(a.den(), b.den()));
}

NumExpr nf_neg(const NumExpr& a) { return NumExpr::from_poly(poly_scale(a.num(), -1), a.den()); }

NumExpr nf_sub(const NumExpr& a, const NumExpr& b) { return nf_add(a, nf_neg(b)); }

NumExpr nf_mul(const NumExpr& a, const NumExpr& b) {
  return NumExpr::from_poly(poly_mul(a.num(), b.num()), poly_mul(a.den(), b.den()));
}

NumExpr nf_div(const NumExpr& a, const NumExpr& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero");
  return NumExpr::from_poly(poly_mul(a.num(), b.den()), poly_mul(a.den(), b.num()));
}

bool nf_equal(const NumExpr& a, const NumExpr& b) {
  return poly_mul(a.num(), b.den()) == poly_mul(b.num(), a.den());
}

NumExpr embed(const Ordinal& o) {
  Poly p;
  for (const auto& t : o.terms()) {
    mpq_class c(t.coef);
    if (t.exponent.is_finite()) {
      const mpz_class k = t.exponent.finite_value();
      if (!k.fits_ulong_p() || k > 4096) throw Unsupported("finite omega power too large to expand");
      for (const auto& [m, c2] : omega_finite_power(k.get_ui())) add_term(p, m, c * c2);
    } else {
      add_term(p, Monomial::omega_pow(t.exponent), c);
    }
  }
  return NumExpr::from_poly(std::move(p), poly_const(1));
}

std::optional<Ordinal> unembed(const NumExpr& x) {
  if (!x.is_polynomial()) return std::nullopt;
  std::vector<OrdTerm> terms;
  std::map<unsigned long, mpq_class> alpha_poly;
  for (const auto& [m, c] : x.num()) {
    if (!m.omega.is_zero()) {
      for (const auto& ex : m.e)
        if (ex != 0) return std::nullopt;
      if (!is_integer(c) || c <= 0) return std::nullopt;
      terms.push_back(OrdTerm{m.omega, c.get_num()});
    } else {
      if (!m.alpha_only()) return std::nullopt;
      const mpq_class& k = m.exp(Gen::Alpha);
      if (!is_integer(k) || k < 0 || k > 4096) return std::nullopt;
      alpha_poly[k.get_num().get_ui()] = c;
    }
  }
  // p(alpha) = q(w) with alpha = w - 1.
  unsigned long top = alpha_poly.empty() ? 0 : alpha_poly.rbegin()->first;
  for (long j = static_cast<long>(top); j >= 0 && !alpha_poly.empty(); --j) {
    mpq_class qj = 0;
    for (const auto& [k, pk] : alpha_poly) {
      if (k < static_cast<unsigned long>(j)) continue;
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), k, static_cast<unsigned long>(j));
      mpq_class term = pk * binom;
      if ((k - j) % 2 == 1) term = -term;
      qj += term;
    }
    if (!is_integer(qj) || qj < 0) return std::nullopt;
    if (qj > 0) terms.push_back(OrdTerm{Ordinal::natural(j), qj.get_num()});
  }
  return Ordinal::from_terms(std::move(terms));
}

NumExpr nf_pow(const NumExpr& base, const NumExpr& exp) {
  if (auto r = exp.as_rational()) {
    if (is_integer(*r)) {
      mpz_class k = r->get_num();
      bool neg = k < 0;
      if (neg) {
        if (base.is_zero()) throw DivisionByZero("zero to a negative power");
        k = -k;
      }
      NumExpr result(1);
      NumExpr sq = base;
      while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = result * sq;
        k >>= 1;
        if (k > 0) sq = sq * sq;
      }
      return neg ? NumExpr(1) / result : result;
    }
    if (base.is_polynomial() && base.num().size() == 1) {
      const auto& [m, c] = *base.num().begin();
      if (c == 1 && m.alpha_only())
        return NumExpr::monomial(Monomial::gen(Gen::Alpha, m.exp(Gen::Alpha) * *r));
    }
    throw Unsupported("rational exponent " + r->get_str() + " needs an alpha-monomial base");
  }
  if (auto b = base.as_rational()) {
    if (*b == 0 || *b == 1) return NumExpr(*b);
    if (*b == 2) {
      auto c = (exp - NumExpr::alpha()).as_rational();
      if (c && is_integer(*c)) {
        // 2^(alpha + c) = X * 2^(c - 1), X = 2^w = 2^(alpha + 1)
        return NumExpr::x2w() * nf_pow(NumExpr(2), NumExpr(*c - 1));
      }
    }
    throw Unsupported("constant base " + b->get_str() + " with exponent " + to_string(exp));
  }
  // Base w^g for an ordinal g >= 1; finite g arrive expanded through w = alpha + 1.
  std::optional<Ordinal> gamma0;
  if (auto o = unembed(base); o && o->terms().size() == 1 && o->terms()[0].coef == 1 &&
                              !o->terms()[0].exponent.is_zero())
    gamma0 = o->terms()[0].exponent;
  if (gamma0) {
    if (auto e = unembed(exp)) return embed(Ordinal::omega_pow(natural_mul(*gamma0, *e)));
  }
  throw Unsupported("power " + to_string(base) + " ^ " + to_string(exp));
}

NumExpr apply_bb(const NumExpr& x) {
  bool has = false;
  for (const Poly* p : {&x.num(), &x.den()})
    for (const auto& [m, c] : *p) has = has || m.exp(Gen::Beth1) != 0;
  if (!has) return x;
  const NumExpr sub = NumExpr::beta() + NumExpr::x2w();
  auto rewrite = [&](const Poly& p) {
    NumExpr acc(0);
    for (const auto& [m, c] : p) {
      Monomial rest = m;
      mpq_class k = rest.exp(Gen::Beth1);
      rest.exp(Gen::Beth1) = 0;
      acc = acc + NumExpr::monomial(rest, c) * nf_pow(sub, NumExpr(k));
    }
    return acc;
  };
  return rewrite(x.num()) / rewrite(x.den());
}

NumExpr bb_display(const NumExpr& x) {
  // Polynomial in beta only: substitute beta = beth1 - X term by term.
  const NumExpr sub = NumExpr::beth1() - NumExpr::x2w();
  auto rewrite = [&](const Poly& p) {
    NumExpr acc(0);
    for (const auto& [m, c] : p) {
      Monomial rest = m;
      mpq_class k = rest.exp(Gen::Beta);
      rest.exp(Gen::Beta) = 0;
      acc = acc + NumExpr::monomial(rest, c) * nf_pow(sub, NumExpr(k));
    }
    return acc;
  };
  return rewrite(x.num()) / rewrite(x.den());
}

namespace {

std::string exp_suffix(const mpq_class& k) {
  if (k == 1) return "";
  if (is_integer(k) && k > 0) return "^" + k.get_str();
  return "^(" + k.get_str() + ")";
}

std::string mono_text(const Monomial& m, bool reason) {
  std::vector<std::string> f;
  static const char* names[] = {"alpha", "beta", "beth1", "X"};
  for (int g = 0; g < kGenCount; ++g) {
    if (m.e[g] == 0) continue;
    if (reason && g == static_cast<int>(Gen::X2W)) {
      f.push_back(m.e[g] == 1 ? "2^w" : "(2^w)" + exp_suffix(m.e[g]));
    } else {
      f.push_back(names[g] + exp_suffix(m.e[g]));
    }
  }
  if (!m.omega.is_zero()) {
    f.push_back(m.omega == Ordinal::omega() ? "w^w" : "w^(" + to_string(m.omega) + ")");
  }
  if (f.empty()) return "1";
  std::string s = f[0];
  for (std::size_t i = 1; i < f.size(); ++i) s += "*" + f[i];
  return s;
}

}  // namespace

std::string to_string(const Monomial& m) { return mono_text(m, false); }
std::string reason_name(const Monomial& m) { return mono_text(m, true); }

std::string to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p) {
    mpq_class a = abs(c);
    std::string body;
    if (m.is_unit()) body = a.get_str();
    else if (a == 1) body = to_string(m);
    else body = a.get_str() + "*" + to_string(m);
    if (first) s += (c < 0 ? "-" : "") + body;
    else s += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

std::string to_string(const NumExpr& x) {
  if (x.is_polynomial()) return to_string(x.num());
  std::string n = to_string(x.num());
  std::string d = to_string(x.den());
  if (x.num().size() > 1) n = "(" + n + ")";
  bool simple_den = x.den().size() == 1 && x.den().begin()->second == 1 &&
                    d.find('*') == std::string::npos;
  if (!simple_den) d = "(" + d + ")";
  return n + "/" + d;
}

std::string to_json(const NumExpr& x) {
  auto enc = [](const Poly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : p) arr.push_back({c.get_str(), to_string(m)});
    return arr;
  };
  nlohmann::json j;
  j["num"] = enc(x.num());
  j["den"] = enc(x.den());
  return j.dump();
}

}  // namespace numerosity
