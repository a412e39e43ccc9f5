#include "numerosity/grounding.hpp"

#include <set>

namespace numerosity {

mpz_class chain_n(int m) {
  if (m < 1) throw std::invalid_argument("chain index must be >= 1");
  if (m > 8) throw IndexTooLarge("n(" + std::to_string(m) + ") is too large to materialize");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), f.get_mpz_t(), f.get_ui());
  return r;
}

mpz_class chain_label_card(ChainKind kind, int m) {
  if (kind == ChainKind::Real)
    throw Unsupported("real chains have the formal size n*x, not an integer card");
  mpz_class n = chain_n(m);
  if (kind == ChainKind::Nat) return n;
  // s/n lies in (0,1] for 0 < s <= n, and the grid stops below s = n^2.
  mpz_class top = n * n - 1;
  return n < top ? n : top;
}

bool CfMonoDesc::operator()(const CfMono& a, const CfMono& b) const {
  if (a.two_exp != b.two_exp) return a.two_exp > b.two_exp;
  if (a.n_exp != b.n_exp) return a.n_exp > b.n_exp;
  return a.x_exp > b.x_exp;
}

namespace {

using Terms = std::map<CfMono, mpq_class, CfMonoDesc>;

void add_term(Terms& t, CfMono m, mpq_class c) {
  c.canonicalize();
  m.n_exp.canonicalize();
  if (c == 0) return;
  auto it = t.find(m);
  if (it == t.end()) {
    t.emplace(m, std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

}  // namespace

CountingFn CountingFn::constant(const mpq_class& c) {
  CountingFn f;
  add_term(f.terms, CfMono{}, c);
  return f;
}

CountingFn CountingFn::n_pow(const mpq_class& k, const mpq_class& c) {
  CountingFn f;
  add_term(f.terms, CfMono{k, 0, 0}, c);
  return f;
}

CountingFn CountingFn::x() {
  CountingFn f;
  add_term(f.terms, CfMono{0, 1, 0}, 1);
  return f;
}

CountingFn CountingFn::two_n() {
  CountingFn f;
  add_term(f.terms, CfMono{0, 0, 1}, 1);
  return f;
}

bool CountingFn::has_x() const {
  for (const auto& [m, c] : terms)
    if (m.x_exp != 0) return true;
  return false;
}

bool CountingFn::has_two() const {
  for (const auto& [m, c] : terms)
    if (m.two_exp != 0) return true;
  return false;
}

bool CountingFn::operator==(const CountingFn& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (auto i = terms.begin(), j = o.terms.begin(); i != terms.end(); ++i, ++j) {
    const CfMono& a = i->first;
    const CfMono& b = j->first;
    if (a.n_exp != b.n_exp || a.x_exp != b.x_exp || a.two_exp != b.two_exp) return false;
    if (i->second != j->second) return false;
  }
  return true;
}

CountingFn cf_add(const CountingFn& a, const CountingFn& b) {
  CountingFn r = a;
  for (const auto& [m, c] : b.terms) add_term(r.terms, m, c);
  r.m0 = std::max(a.m0, b.m0);
  return r;
}

CountingFn cf_scale(const CountingFn& a, const mpq_class& s) {
  CountingFn r;
  for (const auto& [m, c] : a.terms) add_term(r.terms, m, c * s);
  r.m0 = a.m0;
  return r;
}

CountingFn cf_sub(const CountingFn& a, const CountingFn& b) { return cf_add(a, cf_scale(b, -1)); }

CountingFn cf_mul(const CountingFn& a, const CountingFn& b) {
  CountingFn r;
  for (const auto& [m1, c1] : a.terms)
    for (const auto& [m2, c2] : b.terms)
      add_term(r.terms, CfMono{m1.n_exp + m2.n_exp, m1.x_exp + m2.x_exp, m1.two_exp + m2.two_exp},
               c1 * c2);
  r.m0 = std::max(a.m0, b.m0);
  return r;
}

namespace {

constexpr int kMaxTwoIndex = 3;

// n^k as an exact rational, or nullopt when the root is irrational.
std::optional<mpq_class> exact_power(const mpz_class& n, const mpq_class& k) {
  const mpz_class& p = k.get_num();
  const mpz_class& q = k.get_den();
  mpz_class pa = abs(p);
  if (!pa.fits_ulong_p() || !q.fits_ulong_p()) throw Unsupported("exponent too large");
  mpz_class base;
  mpz_pow_ui(base.get_mpz_t(), n.get_mpz_t(), pa.get_ui());
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), base.get_mpz_t(), q.get_ui()) == 0) return std::nullopt;
  return p < 0 ? mpq_class(1, 1) / mpq_class(root) : mpq_class(root);
}

mpz_class two_pow(const mpz_class& n, int k) {
  mpz_class e = n * k;
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e.get_ui());
  return r;
}

// Approximate |value| of a term; used for signs when roots are irrational
// and for the dominance margin.
mpf_class approx_term(const CfMono& m, const mpq_class& c, const mpz_class& n) {
  mpf_class v(c, 1024);
  if (m.n_exp != 0) {
    if (auto e = exact_power(n, m.n_exp)) {
      v *= mpf_class(*e, 1024);
    } else {
      // floor root is exact to within a relative 1/root
      mpz_class base;
      mpz_pow_ui(base.get_mpz_t(), n.get_mpz_t(), mpz_class(abs(m.n_exp.get_num())).get_ui());
      mpz_class root;
      mpz_root(root.get_mpz_t(), base.get_mpz_t(), m.n_exp.get_den().get_ui());
      mpf_class r(root, 1024);
      if (m.n_exp < 0) v /= r;
      else v *= r;
    }
  }
  if (m.two_exp != 0) v *= mpf_class(two_pow(n, m.two_exp), 1024);
  return v;
}

int sign_at(const CountingFn& d, int m) {
  mpz_class n = chain_n(m);
  mpf_class s(0, 1024);
  for (const auto& [mono, c] : d.terms) s += approx_term(mono, c, n);
  return sgn(s);
}

bool lead_dominates(const CountingFn& d, int m) {
  mpz_class n = chain_n(m);
  auto it = d.terms.begin();
  mpf_class lead = abs(approx_term(it->first, it->second, n));
  mpf_class rest(0, 1024);
  for (++it; it != d.terms.end(); ++it) rest += abs(approx_term(it->first, it->second, n));
  return lead > rest;
}

}  // namespace

mpz_class cf_eval(const CountingFn& f, int m) {
  if (f.has_x()) throw Unsupported("cannot evaluate a counting function with x");
  if (f.has_two() && m > kMaxTwoIndex)
    throw IndexTooLarge("2^n at m = " + std::to_string(m) + " is too large");
  mpz_class n = chain_n(m);
  mpq_class total = 0;
  for (const auto& [mono, c] : f.terms) {
    mpq_class v = c;
    if (mono.n_exp != 0) {
      auto e = exact_power(n, mono.n_exp);
      if (!e)
        throw NonIntegral("n^(" + mono.n_exp.get_str() + ") is irrational at m = " + std::to_string(m));
      v *= *e;
    }
    if (mono.two_exp != 0) v *= mpq_class(two_pow(n, mono.two_exp));
    total += v;
  }
  total.canonicalize();
  if (total.get_den() != 1 || total < 0)
    throw NonIntegral(to_string(f) + " = " + total.get_str() + " at m = " + std::to_string(m));
  return total.get_num();
}

std::string to_string(const EventualCmp& r) {
  switch (r.kind) {
    case EventualCmp::Kind::Less: return "EventuallyLess(" + std::to_string(r.m0) + ")";
    case EventualCmp::Kind::Equal: return "EventuallyEqual(" + std::to_string(r.m0) + ")";
    case EventualCmp::Kind::Greater: return "EventuallyGreater(" + std::to_string(r.m0) + ")";
    case EventualCmp::Kind::Unknown: return "Unknown(" + r.reason + ")";
  }
  return "?";
}

EventualCmp cf_compare(const CountingFn& f, const CountingFn& g) {
  const int start = std::max(f.m0, g.m0);
  CountingFn d = cf_sub(f, g);
  if (d.is_zero()) return {EventualCmp::Kind::Equal, start, {}};
  std::set<int> xdeg;
  for (const auto& [m, c] : d.terms) xdeg.insert(m.x_exp);
  if (xdeg.size() > 1) return {EventualCmp::Kind::Unknown, 0, "mixed powers of x"};
  // A common power of x is positive and does not affect the sign.
  CountingFn dx;
  for (const auto& [m, c] : d.terms) dx.terms.emplace(CfMono{m.n_exp, 0, m.two_exp}, c);
  const int s = sgn(dx.terms.begin()->second);
  const int last = dx.has_two() ? kMaxTwoIndex : std::max(start, 5);
  if (start > last) return {EventualCmp::Kind::Unknown, 0, "threshold beyond the enumerable range"};
  if (!lead_dominates(dx, last))
    return {EventualCmp::Kind::Unknown, 0, "leading term not yet dominant at m = " + std::to_string(last)};
  int threshold = last;
  for (int m = last; m >= start && sign_at(dx, m) == s; --m) threshold = m;
  if (sign_at(dx, last) != s) return {EventualCmp::Kind::Unknown, 0, "sign not settled"};
  return {s > 0 ? EventualCmp::Kind::Greater : EventualCmp::Kind::Less, threshold, {}};
}

NumExpr lambda_limit(const CountingFn& f) {
  NumExpr acc(0);
  for (const auto& [m, c] : f.terms) {
    if (m.x_exp < 0 || m.two_exp < 0) throw UnrecognizedBasis("negative power of x or 2^n");
    Monomial mono;
    mono.exp(Gen::Alpha) = m.n_exp - m.x_exp;
    mono.exp(Gen::Beta) = m.x_exp;
    mono.exp(Gen::X2W) = m.two_exp;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(m.two_exp));
    acc = acc + NumExpr::monomial(mono, c / mpq_class(scale));
  }
  return acc;
}

std::string to_string(const CountingFn& f) {
  if (f.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : f.terms) {
    std::vector<std::string> fs;
    if (m.two_exp == 1) fs.push_back("2^n");
    else if (m.two_exp != 0) fs.push_back("(2^n)^" + std::to_string(m.two_exp));
    if (m.n_exp == 1) fs.push_back("n");
    else if (m.n_exp != 0 && m.n_exp.get_den() == 1 && m.n_exp > 0) fs.push_back("n^" + m.n_exp.get_str());
    else if (m.n_exp != 0) fs.push_back("n^(" + m.n_exp.get_str() + ")");
    if (m.x_exp == 1) fs.push_back("x");
    else if (m.x_exp != 0) fs.push_back("x^" + std::to_string(m.x_exp));
    std::string body;
    for (const auto& part : fs) body += (body.empty() ? "" : "*") + part;
    mpq_class a = abs(c);
    if (body.empty()) body = a.get_str();
    else if (a != 1) body = a.get_str() + "*" + body;
    if (first) s += (c < 0 ? "-" : "") + body;
    else s += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

}  // namespace numerosity
