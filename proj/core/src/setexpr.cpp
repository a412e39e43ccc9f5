#include "numerosity/setexpr.hpp"

#include <algorithm>
#include <numeric>

namespace numerosity {

namespace {

SetExpr make(SetNode n) { return std::make_shared<const SetNode>(std::move(n)); }

SetExpr leaf(SetKind k) { return make(SetNode{k, {}, 0, 0, 0, 0, nullptr, nullptr}); }

bool is_natural(const mpq_class& q) { return q.get_den() == 1 && q >= 0; }

bool binary(SetKind k) {
  return k == SetKind::Union || k == SetKind::Inter || k == SetKind::Diff || k == SetKind::Prod;
}

void require_compatible(const SetExpr& l, const SetExpr& r, const char* op) {
  std::string a = domain_of(l), b = domain_of(r);
  if (a != "*" && b != "*" && a != b)
    throw Uncompilable(std::string(op) + " mixes domains " + a + " and " + b);
}

// n(m) for m = 1..8, computed once.
const mpz_class& chain_at(int m) {
  static const std::vector<mpz_class> table = [] {
    std::vector<mpz_class> t;
    for (int k = 1; k <= 8; ++k) t.push_back(chain_n(k));
    return t;
  }();
  return table.at(static_cast<std::size_t>(m - 1));
}

template <class Pred>
int least_m(Pred pred, const std::string& what) {
  for (int m = 1; m <= 8; ++m)
    if (pred(m)) return m;
  throw Uncompilable("no exactness threshold below m = 8 for " + what);
}

// Least m at which the grid {s/n} holds every bound exactly and inside range.
int grid_m0(const std::vector<mpq_class>& bounds, const std::string& what) {
  return least_m(
      [&](int m) {
        const mpz_class& n = chain_at(m);
        for (const auto& b : bounds) {
          if (!mpz_divisible_p(n.get_mpz_t(), b.get_den_mpz_t())) return false;
          if (abs(b) >= n) return false;
        }
        return true;
      },
      what);
}

std::optional<SetExpr> crt(long p, long i, long q, long j) {
  long g = std::gcd(p, q);
  if ((j - i) % g != 0) return sets::fin({});
  long l = p / g * q;
  if (l > 10'000'000) return std::nullopt;
  for (long x = i; x < l; x += p)
    if (x % q == j) return sets::mod(l, x);
  return std::nullopt;
}

// Mod view of N+ and Mod nodes.
bool as_mod(const SetExpr& e, long& p, long& i) {
  if (e->kind == SetKind::Mod) {
    p = e->p;
    i = e->i;
    return true;
  }
  if (e->kind == SetKind::NatPos) {
    p = 1;
    i = 0;
    return true;
  }
  return false;
}

SetExpr push_shift(const mpq_class& q, const SetExpr& e) {
  switch (e->kind) {
    case SetKind::FinSet: {
      std::vector<mpq_class> v;
      for (const auto& x : e->elems) v.push_back(x + q);
      return sets::fin(std::move(v));
    }
    case SetKind::QInterval: return sets::q_interval(e->lo + q, e->hi + q);
    case SetKind::RInterval: return sets::r_interval(e->lo + q, e->hi + q);
    case SetKind::UnitInterval01:
      return sets::union_(sets::r_interval(q, 1 + q), sets::fin({1 + q}));
    case SetKind::Shift: return push_shift(q, push_shift(e->lo, e->l));
    case SetKind::Union: return sets::union_(push_shift(q, e->l), push_shift(q, e->r));
    case SetKind::Inter: return sets::inter(push_shift(q, e->l), push_shift(q, e->r));
    case SetKind::Diff: return sets::diff(push_shift(q, e->l), push_shift(q, e->r));
    default: throw Uncompilable("shift of an unbounded set " + to_string(e));
  }
}

// Explicit form of l & r when a simple rule applies.
std::optional<SetExpr> intersect(const SetExpr& l, const SetExpr& r) {
  long p, i, q, j;
  if (as_mod(l, p, i) && as_mod(r, q, j)) return crt(p, i, q, j);
  auto k1 = l->kind, k2 = r->kind;
  if (k1 == SetKind::QInterval && k2 == SetKind::QInterval) {
    mpq_class lo = std::max(l->lo, r->lo), hi = std::min(l->hi, r->hi);
    return lo < hi ? sets::q_interval(lo, hi) : sets::fin({});
  }
  if (k1 == SetKind::RInterval && k2 == SetKind::RInterval) {
    mpq_class lo = std::max(l->lo, r->lo), hi = std::min(l->hi, r->hi);
    return lo < hi ? sets::r_interval(lo, hi) : sets::fin({});
  }
  if (k1 == SetKind::QPos && k2 == SetKind::QInterval) return intersect(r, l);
  if (k1 == SetKind::QInterval && k2 == SetKind::QPos) {
    mpq_class lo = std::max(l->lo, mpq_class(0));
    return lo < l->hi ? sets::q_interval(lo, l->hi) : sets::fin({});
  }
  if (k1 == SetKind::FinSet || k2 == SetKind::FinSet) {
    const SetExpr& f = k1 == SetKind::FinSet ? l : r;
    const SetExpr& o = k1 == SetKind::FinSet ? r : l;
    std::vector<mpq_class> keep;
    for (const auto& x : f->elems) {
      Tri t = member(x, o);
      if (t == Tri::Undecided) return std::nullopt;
      if (t == Tri::Yes) keep.push_back(x);
    }
    return sets::fin(std::move(keep));
  }
  return std::nullopt;
}

}  // namespace

namespace sets {

SetExpr nat_all() { return leaf(SetKind::NatAll); }
SetExpr nat_pos() { return leaf(SetKind::NatPos); }
SetExpr pfin_n() { return leaf(SetKind::PfinN); }
SetExpr q_pos() { return leaf(SetKind::QPos); }
SetExpr q_all() { return leaf(SetKind::QAll); }
SetExpr r_pos() { return leaf(SetKind::RPos); }
SetExpr r_all() { return leaf(SetKind::RAll); }
SetExpr unit01() { return leaf(SetKind::UnitInterval01); }

SetExpr fin(std::vector<mpq_class> elems) {
  for (auto& e : elems) e.canonicalize();
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  SetNode n{SetKind::FinSet, std::move(elems), 0, 0, 0, 0, nullptr, nullptr};
  return make(std::move(n));
}

SetExpr mod(long p, long i) {
  if (p < 1 || i < 0 || i >= p) throw Uncompilable("mod(p,i) needs p >= 1 and 0 <= i < p");
  return make(SetNode{SetKind::Mod, {}, p, i, 0, 0, nullptr, nullptr});
}

SetExpr pow(long p) {
  if (p < 1) throw Uncompilable("pow(p) needs p >= 1");
  return make(SetNode{SetKind::Pow, {}, p, 0, 0, 0, nullptr, nullptr});
}

SetExpr q_interval(mpq_class p, mpq_class q) {
  p.canonicalize();
  q.canonicalize();
  if (!(p < q)) throw Uncompilable("interval needs p < q");
  return make(SetNode{SetKind::QInterval, {}, 0, 0, p, q, nullptr, nullptr});
}

SetExpr r_interval(mpq_class p, mpq_class q) {
  p.canonicalize();
  q.canonicalize();
  if (!(p < q)) throw Uncompilable("interval needs p < q");
  return make(SetNode{SetKind::RInterval, {}, 0, 0, p, q, nullptr, nullptr});
}

SetExpr shift(mpq_class q, SetExpr e) {
  q.canonicalize();
  return make(SetNode{SetKind::Shift, {}, 0, 0, q, 0, std::move(e), nullptr});
}

SetExpr union_(SetExpr l, SetExpr r) {
  require_compatible(l, r, "union");
  return make(SetNode{SetKind::Union, {}, 0, 0, 0, 0, std::move(l), std::move(r)});
}

SetExpr inter(SetExpr l, SetExpr r) {
  require_compatible(l, r, "intersection");
  return make(SetNode{SetKind::Inter, {}, 0, 0, 0, 0, std::move(l), std::move(r)});
}

SetExpr diff(SetExpr l, SetExpr r) {
  require_compatible(l, r, "difference");
  if (subset_certified(r, l) != Tri::Yes)
    throw Uncompilable("difference needs " + to_string(r) + " certified inside " + to_string(l));
  return make(SetNode{SetKind::Diff, {}, 0, 0, 0, 0, std::move(l), std::move(r)});
}

SetExpr prod(SetExpr l, SetExpr r) {
  return make(SetNode{SetKind::Prod, {}, 0, 0, 0, 0, std::move(l), std::move(r)});
}

SetExpr maps(long k, SetExpr e) {
  if (k < 1) throw Uncompilable("maps(k, S) needs k >= 1");
  return make(SetNode{SetKind::FinMapsInto, {}, k, 0, 0, 0, std::move(e), nullptr});
}

}  // namespace sets

bool set_equal(const SetExpr& a, const SetExpr& b) {
  if (a->kind != b->kind || a->p != b->p || a->i != b->i || a->lo != b->lo || a->hi != b->hi ||
      a->elems != b->elems)
    return false;
  if (static_cast<bool>(a->l) != static_cast<bool>(b->l)) return false;
  if (static_cast<bool>(a->r) != static_cast<bool>(b->r)) return false;
  return (!a->l || set_equal(a->l, b->l)) && (!a->r || set_equal(a->r, b->r));
}

std::string domain_of(const SetExpr& a) {
  switch (a->kind) {
    case SetKind::NatAll:
    case SetKind::NatPos:
    case SetKind::Mod:
    case SetKind::Pow: return "N";
    case SetKind::FinSet: return "*";
    case SetKind::PfinN: return "P(N)";
    case SetKind::QInterval:
    case SetKind::QPos:
    case SetKind::QAll: return "Q";
    case SetKind::RInterval:
    case SetKind::RPos:
    case SetKind::RAll:
    case SetKind::UnitInterval01: return "R";
    case SetKind::Shift: return domain_of(a->l);
    case SetKind::Union:
    case SetKind::Inter:
    case SetKind::Diff: {
      std::string d = domain_of(a->l);
      return d == "*" ? domain_of(a->r) : d;
    }
    case SetKind::Prod: return "(" + domain_of(a->l) + " x " + domain_of(a->r) + ")";
    case SetKind::FinMapsInto: return "maps";
  }
  return "?";
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "Yes";
    case Tri::No: return "No";
    case Tri::Undecided: return "Undecided";
  }
  return "?";
}

namespace {

Tri tri(bool b) { return b ? Tri::Yes : Tri::No; }

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::No || b == Tri::No) return Tri::No;
  if (a == Tri::Yes && b == Tri::Yes) return Tri::Yes;
  return Tri::Undecided;
}

Tri tri_or(Tri a, Tri b) {
  if (a == Tri::Yes || b == Tri::Yes) return Tri::Yes;
  if (a == Tri::No && b == Tri::No) return Tri::No;
  return Tri::Undecided;
}

Tri tri_not(Tri a) { return a == Tri::Yes ? Tri::No : a == Tri::No ? Tri::Yes : Tri::Undecided; }

bool perfect_power(const mpz_class& x, long p) {
  mpz_class r;
  return mpz_root(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

}  // namespace

Tri member(const mpq_class& x, const SetExpr& e) {
  const bool nat = is_natural(x);
  switch (e->kind) {
    case SetKind::NatAll: return tri(nat);
    case SetKind::NatPos: return tri(nat && x >= 1);
    case SetKind::FinSet: return tri(std::binary_search(e->elems.begin(), e->elems.end(), x));
    case SetKind::Mod: {
      if (!nat || x < 1) return Tri::No;
      mpz_class r = x.get_num() % e->p;
      return tri(r == e->i);
    }
    case SetKind::Pow: return tri(nat && x >= 1 && perfect_power(x.get_num(), e->p));
    case SetKind::QInterval: return tri(e->lo < x && x <= e->hi);
    case SetKind::QPos:
    case SetKind::RPos: return tri(x > 0);
    case SetKind::QAll:
    case SetKind::RAll: return Tri::Yes;
    case SetKind::RInterval: return tri(e->lo <= x && x < e->hi);
    case SetKind::UnitInterval01: return tri(0 <= x && x <= 1);
    case SetKind::Shift: return member(x - e->lo, e->l);
    case SetKind::Union: return tri_or(member(x, e->l), member(x, e->r));
    case SetKind::Inter: return tri_and(member(x, e->l), member(x, e->r));
    case SetKind::Diff: return tri_and(member(x, e->l), tri_not(member(x, e->r)));
    default: return Tri::Undecided;
  }
}

bool is_bounded(const SetExpr& a) {
  switch (a->kind) {
    case SetKind::FinSet:
    case SetKind::QInterval:
    case SetKind::RInterval:
    case SetKind::UnitInterval01: return true;
    case SetKind::Shift:
    case SetKind::Diff: return is_bounded(a->l);
    case SetKind::Union:
    case SetKind::Prod: return is_bounded(a->l) && is_bounded(a->r);
    case SetKind::Inter: return is_bounded(a->l) || is_bounded(a->r);
    default: return false;
  }
}

Tri subset_certified(const SetExpr& a, const SetExpr& b) {
  if (set_equal(a, b)) return Tri::Yes;
  if (a->kind == SetKind::FinSet) {
    Tri t = Tri::Yes;
    for (const auto& x : a->elems) t = tri_and(t, member(x, b));
    return t;
  }
  if (a->kind == SetKind::Shift && is_bounded(a->l)) return subset_certified(push_shift(a->lo, a->l), b);
  if (b->kind == SetKind::Shift && is_bounded(b->l)) return subset_certified(a, push_shift(b->lo, b->l));
  switch (a->kind) {
    case SetKind::Union: return tri_and(subset_certified(a->l, b), subset_certified(a->r, b));
    case SetKind::Inter:
      if (subset_certified(a->l, b) == Tri::Yes || subset_certified(a->r, b) == Tri::Yes) return Tri::Yes;
      return Tri::Undecided;
    case SetKind::Diff:
      return subset_certified(a->l, b) == Tri::Yes ? Tri::Yes : Tri::Undecided;
    default: break;
  }
  switch (b->kind) {
    case SetKind::Union:
      if (subset_certified(a, b->l) == Tri::Yes || subset_certified(a, b->r) == Tri::Yes) return Tri::Yes;
      return Tri::Undecided;
    case SetKind::Inter: {
      Tri t = tri_and(subset_certified(a, b->l), subset_certified(a, b->r));
      return t == Tri::Yes ? t : Tri::Undecided;
    }
    default: break;
  }
  const std::string da = domain_of(a), db = domain_of(b);
  if (da != db) return Tri::Undecided;
  long p, i, q, j;
  switch (b->kind) {
    case SetKind::NatAll: return Tri::Yes;
    case SetKind::NatPos:
      return a->kind == SetKind::NatAll ? Tri::No
             : (a->kind == SetKind::Mod || a->kind == SetKind::Pow) ? Tri::Yes
                                                                    : Tri::Undecided;
    case SetKind::Mod:
      if (a->kind == SetKind::NatAll) return Tri::No;
      if (as_mod(a, p, i)) {
        as_mod(b, q, j);
        return tri(p % q == 0 && i % q == j);
      }
      return Tri::Undecided;
    case SetKind::Pow:
      if (a->kind == SetKind::Pow) return tri(a->p % b->p == 0);
      if (a->kind == SetKind::NatAll || a->kind == SetKind::NatPos) return Tri::No;
      return Tri::Undecided;
    case SetKind::QAll:
    case SetKind::RAll: return Tri::Yes;
    case SetKind::QPos:
      if (a->kind == SetKind::QInterval) return tri(a->lo >= 0);
      return a->kind == SetKind::QAll ? Tri::No : Tri::Undecided;
    case SetKind::RPos:
      if (a->kind == SetKind::RInterval) return tri(a->lo > 0);
      if (a->kind == SetKind::UnitInterval01 || a->kind == SetKind::RAll) return Tri::No;
      return Tri::Undecided;
    case SetKind::QInterval:
      if (a->kind == SetKind::QInterval) return tri(b->lo <= a->lo && a->hi <= b->hi);
      if (a->kind == SetKind::QPos || a->kind == SetKind::QAll) return Tri::No;
      return Tri::Undecided;
    case SetKind::RInterval:
      if (a->kind == SetKind::RInterval) return tri(b->lo <= a->lo && a->hi <= b->hi);
      if (a->kind == SetKind::UnitInterval01) return tri(b->lo <= 0 && b->hi > 1);
      if (a->kind == SetKind::RPos || a->kind == SetKind::RAll) return Tri::No;
      return Tri::Undecided;
    case SetKind::UnitInterval01:
      if (a->kind == SetKind::RInterval) return tri(a->lo >= 0 && a->hi <= 1);
      if (a->kind == SetKind::RPos || a->kind == SetKind::RAll) return Tri::No;
      return Tri::Undecided;
    case SetKind::Prod:
      if (a->kind == SetKind::Prod &&
          subset_certified(a->l, b->l) == Tri::Yes && subset_certified(a->r, b->r) == Tri::Yes)
        return Tri::Yes;
      return Tri::Undecided;
    default: return Tri::Undecided;
  }
}

bool disjoint_certified(const SetExpr& a, const SetExpr& b) {
  if (a->kind == SetKind::FinSet || b->kind == SetKind::FinSet) {
    const SetExpr& f = a->kind == SetKind::FinSet ? a : b;
    const SetExpr& o = a->kind == SetKind::FinSet ? b : a;
    for (const auto& x : f->elems)
      if (member(x, o) != Tri::No) return false;
    return true;
  }
  if (a->kind == SetKind::Shift && is_bounded(a->l)) return disjoint_certified(push_shift(a->lo, a->l), b);
  if (b->kind == SetKind::Shift && is_bounded(b->l)) return disjoint_certified(a, push_shift(b->lo, b->l));
  for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
    switch (x->kind) {
      case SetKind::Union: return disjoint_certified(x->l, y) && disjoint_certified(x->r, y);
      case SetKind::Inter: return disjoint_certified(x->l, y) || disjoint_certified(x->r, y);
      case SetKind::Diff:
        return subset_certified(y, x->r) == Tri::Yes || disjoint_certified(x->l, y);
      default: break;
    }
  }
  long p, i, q, j;
  if (as_mod(a, p, i) && as_mod(b, q, j)) return (j - i) % std::gcd(p, q) != 0;
  auto ka = a->kind, kb = b->kind;
  if ((ka == SetKind::QInterval && kb == SetKind::QInterval) ||
      (ka == SetKind::RInterval && kb == SetKind::RInterval))
    return a->hi <= b->lo || b->hi <= a->lo;
  if (ka == SetKind::QInterval && kb == SetKind::QPos) return a->hi <= 0;
  if (kb == SetKind::QInterval && ka == SetKind::QPos) return b->hi <= 0;
  if (ka == SetKind::RInterval && kb == SetKind::RPos) return a->hi <= 0;
  if (kb == SetKind::RInterval && ka == SetKind::RPos) return b->hi <= 0;
  if (ka == SetKind::UnitInterval01 && kb == SetKind::RInterval) return b->hi <= 0 || b->lo > 1;
  if (kb == SetKind::UnitInterval01 && ka == SetKind::RInterval) return a->hi <= 0 || a->lo > 1;
  if (ka == SetKind::Prod && kb == SetKind::Prod)
    return disjoint_certified(a->l, b->l) || disjoint_certified(a->r, b->r);
  return false;
}

CountingFn counting_fn(const SetExpr& a) {
  using CF = CountingFn;
  auto with_m0 = [](CF f, int m0) {
    f.m0 = std::max(f.m0, m0);
    return f;
  };
  switch (a->kind) {
    case SetKind::NatAll: return cf_add(CF::n_pow(1), CF::constant(1));
    case SetKind::NatPos: return CF::n_pow(1);
    case SetKind::FinSet: return with_m0(CF::constant(mpq_class(a->elems.size())), grid_m0(a->elems, to_string(a)));
    case SetKind::Mod: {
      int m0 = least_m([&](int m) { return mpz_divisible_ui_p(chain_at(m).get_mpz_t(), a->p) != 0; },
                       to_string(a));
      return with_m0(CF::n_pow(1, mpq_class(1, a->p)), m0);
    }
    case SetKind::Pow: {
      int m0 = least_m(
          [&](int m) {
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
            return mpz_divisible_ui_p(f.get_mpz_t(), a->p) != 0;
          },
          to_string(a));
      return with_m0(CF::n_pow(mpq_class(1, a->p)), m0);
    }
    case SetKind::PfinN: return cf_scale(CF::two_n(), 2);
    case SetKind::QInterval:
      return with_m0(CF::n_pow(1, a->hi - a->lo), grid_m0({a->lo, a->hi}, to_string(a)));
    case SetKind::QPos: return CF::n_pow(2);
    case SetKind::QAll: return cf_add(CF::n_pow(2, 2), CF::constant(1));
    case SetKind::RInterval:
      return with_m0(cf_mul(CF::n_pow(1, a->hi - a->lo), CF::x()), grid_m0({a->lo, a->hi}, to_string(a)));
    case SetKind::RPos: return cf_mul(CF::n_pow(2), CF::x());
    case SetKind::RAll: return cf_add(cf_mul(CF::n_pow(2, 2), CF::x()), CF::constant(1));
    case SetKind::UnitInterval01: return cf_add(cf_mul(CF::n_pow(1), CF::x()), CF::constant(1));
    case SetKind::Shift:
      if (!is_bounded(a->l)) throw Uncompilable("shift of an unbounded set " + to_string(a->l));
      return counting_fn(push_shift(a->lo, a->l));
    case SetKind::Union: {
      if (disjoint_certified(a->l, a->r)) return cf_add(counting_fn(a->l), counting_fn(a->r));
      if (subset_certified(a->l, a->r) == Tri::Yes) return counting_fn(a->r);
      if (subset_certified(a->r, a->l) == Tri::Yes) return counting_fn(a->l);
      CF both = counting_fn(sets::inter(a->l, a->r));
      return cf_sub(cf_add(counting_fn(a->l), counting_fn(a->r)), both);
    }
    case SetKind::Inter: {
      if (subset_certified(a->l, a->r) == Tri::Yes) return counting_fn(a->l);
      if (subset_certified(a->r, a->l) == Tri::Yes) return counting_fn(a->r);
      if (disjoint_certified(a->l, a->r)) return CF{};
      if (auto e = intersect(a->l, a->r)) return counting_fn(*e);
      throw Uncompilable("no rule for " + to_string(a));
    }
    case SetKind::Diff: return cf_sub(counting_fn(a->l), counting_fn(a->r));
    case SetKind::Prod: return cf_mul(counting_fn(a->l), counting_fn(a->r));
    case SetKind::FinMapsInto: {
      CF e = counting_fn(a->l);
      if (a->p == 1) return with_m0(CF::constant(1), e.m0);
      bool constant = e.is_zero() || (e.terms.size() == 1 && e.terms.begin()->first.n_exp == 0 &&
                                      e.terms.begin()->first.x_exp == 0 &&
                                      e.terms.begin()->first.two_exp == 0);
      if (constant) {
        mpz_class c = e.is_zero() ? mpz_class(0) : e.terms.begin()->second.get_num();
        mpz_class v;
        mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(a->p), c.get_ui());
        return with_m0(CF::constant(mpq_class(v)), e.m0);
      }
      if (a->p == 2) {
        // 2^(c*n + b) = 2^b * (2^n)^c for integral c >= 1, b
        mpq_class c = 0, b = 0;
        bool ok = true;
        for (const auto& [m, k] : e.terms) {
          if (m.x_exp != 0 || m.two_exp != 0) ok = false;
          else if (m.n_exp == 1) c = k;
          else if (m.n_exp == 0) b = k;
          else ok = false;
        }
        if (ok && c.get_den() == 1 && c >= 1 && b.get_den() == 1) {
          CF r;
          r.terms.emplace(CfMono{0, 0, static_cast<int>(c.get_num().get_si())}, 1);
          r.m0 = e.m0;
          mpq_class scale = b >= 0 ? mpq_class(mpz_class(1) << b.get_num().get_ui())
                                   : mpq_class(1, mpz_class(1) << mpz_class(-b.get_num()).get_ui());
          return cf_scale(r, scale);
        }
      }
      throw Uncompilable("maps(" + std::to_string(a->p) + ", .) has no closed counting form here");
    }
  }
  throw Uncompilable("unknown node");
}

NumExpr num(const SetExpr& a) {
  switch (a->kind) {
    case SetKind::PfinN: return NumExpr::x2w();
    case SetKind::UnitInterval01: return NumExpr::beta() + NumExpr(1);
    case SetKind::FinMapsInto: return nf_pow(NumExpr(a->p), num(a->l));
    case SetKind::Shift:
      if (!is_bounded(a->l)) throw Uncompilable("shift of an unbounded set " + to_string(a->l));
      return num(a->l);
    case SetKind::Prod: return num(a->l) * num(a->r);
    case SetKind::Diff: return num(a->l) - num(a->r);
    case SetKind::Union:
      if (disjoint_certified(a->l, a->r)) return num(a->l) + num(a->r);
      if (subset_certified(a->l, a->r) == Tri::Yes) return num(a->r);
      if (subset_certified(a->r, a->l) == Tri::Yes) return num(a->l);
      return num(a->l) + num(a->r) - num(sets::inter(a->l, a->r));
    case SetKind::Inter:
      if (subset_certified(a->l, a->r) == Tri::Yes) return num(a->l);
      if (subset_certified(a->r, a->l) == Tri::Yes) return num(a->r);
      return lambda_limit(counting_fn(a));
    default: return lambda_limit(counting_fn(a));
  }
}

StdPart measure(const SetExpr& a, const NumExpr& gamma, const AxiomTable& t) {
  return gamma_measure(num(a), gamma, t);
}

namespace {

bool nat_only(const SetExpr& a) {
  std::string d = domain_of(a);
  return d == "N" || d == "*";
}

mpz_class enum_rec(const SetExpr& a, int m) {
  const long n = chain_at(m).get_si();
  if (a->kind == SetKind::Prod) {
    if (m <= 2 && nat_only(a->l) && nat_only(a->r)) {
      long c = 0;
      for (long x = 0; x <= n; ++x)
        for (long y = 0; y <= n; ++y)
          c += member(x, a->l) == Tri::Yes && member(y, a->r) == Tri::Yes;
      return c;
    }
    return enum_rec(a->l, m) * enum_rec(a->r, m);
  }
  if (a->kind == SetKind::PfinN) {
    if (m <= 2) {
      // every bitmask over {0..n} is a finite subset inside the label
      long c = 0;
      for (long mask = 0; mask < (1L << (n + 1)); ++mask) ++c;
      return c;
    }
    return mpz_class(1) << static_cast<unsigned long>(n + 1);
  }
  if (a->kind == SetKind::FinMapsInto) {
    mpz_class c = enum_rec(a->l, m);
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(a->p), c.get_ui());
    return v;
  }
  if (!nat_only(a)) throw Unsupported("enumeration covers sets of naturals only, got " + to_string(a));
  long c = 0;
  for (long x = 0; x <= n; ++x) {
    Tri t = member(x, a);
    if (t == Tri::Undecided) throw Unsupported("membership undecided in " + to_string(a));
    c += t == Tri::Yes;
  }
  return c;
}

}  // namespace

mpz_class enumerate_count(const SetExpr& a, int m) {
  if (m < 1) throw std::invalid_argument("chain index must be >= 1");
  if (m > 3) throw IndexTooLarge("enumeration is limited to m <= 3");
  return enum_rec(a, m);
}

mpq_class psi(const std::vector<mpz_class>& b) {
  mpq_class s = 0;
  for (const auto& x : b) {
    if (x < 0 || !x.fits_ulong_p()) throw std::invalid_argument("psi needs naturals");
    s += mpq_class(1, mpz_class(1) << (x.get_ui() + 1));
  }
  return s;
}

std::string to_string(const SetExpr& a) {
  auto child = [](const SetExpr& c) {
    std::string s = to_string(c);
    return binary(c->kind) ? "(" + s + ")" : s;
  };
  switch (a->kind) {
    case SetKind::NatAll: return "N";
    case SetKind::NatPos: return "N+";
    case SetKind::FinSet: {
      std::string s = "fin{";
      for (std::size_t k = 0; k < a->elems.size(); ++k) s += (k ? "," : "") + a->elems[k].get_str();
      return s + "}";
    }
    case SetKind::Mod: return "mod(" + std::to_string(a->p) + "," + std::to_string(a->i) + ")";
    case SetKind::Pow: return "pow(" + std::to_string(a->p) + ")";
    case SetKind::PfinN: return "Pfin(N)";
    case SetKind::QInterval: return "Q(" + a->lo.get_str() + "," + a->hi.get_str() + "]";
    case SetKind::QPos: return "Q+";
    case SetKind::QAll: return "Q";
    case SetKind::RInterval: return "R[" + a->lo.get_str() + "," + a->hi.get_str() + ")";
    case SetKind::RPos: return "R+";
    case SetKind::RAll: return "R";
    case SetKind::Shift: return "shift(" + a->lo.get_str() + ", " + to_string(a->l) + ")";
    case SetKind::Union: return child(a->l) + " | " + child(a->r);
    case SetKind::Inter: return child(a->l) + " & " + child(a->r);
    case SetKind::Diff: return child(a->l) + " \\ " + child(a->r);
    case SetKind::Prod: return child(a->l) + " >< " + child(a->r);
    case SetKind::FinMapsInto: return "maps(" + std::to_string(a->p) + ", " + to_string(a->l) + ")";
    case SetKind::UnitInterval01: return "[0,1]";
  }
  return "?";
}

}  // namespace numerosity
