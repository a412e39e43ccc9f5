#include "numerosity/surreal.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <optional>

namespace numerosity {

SignExpansion SignExpansion::finite(std::string signs) {
  for (char c : signs)
    if (c != '+' && c != '-') throw std::invalid_argument("sign expansions use '+' and '-' only");
  SignExpansion s;
  s.signs_ = std::move(signs);
  return s;
}

SignExpansion SignExpansion::plus(const Ordinal& length) {
  if (length.is_finite()) {
    mpz_class n = length.finite_value();
    if (n > 1'000'000) throw Unsupported("finite expansion too long");
    return finite(std::string(n.get_ui(), '+'));
  }
  SignExpansion s;
  s.ordinal_ = true;
  s.length_ = length;
  return s;
}

Ordinal SignExpansion::length() const {
  return ordinal_ ? length_ : Ordinal::natural(signs_.size());
}

bool SignExpansion::operator==(const SignExpansion& o) const {
  return ordinal_ == o.ordinal_ && signs_ == o.signs_ && length_ == o.length_;
}

namespace {

// '-' < blank < '+'
int rank_at(const std::string& s, std::size_t i) {
  if (i >= s.size()) return 1;
  return s[i] == '+' ? 2 : 0;
}

Ordering from_int(int c) { return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal; }

}  // namespace

Ordering se_cmp(const SignExpansion& a, const SignExpansion& b) {
  if (!a.is_finite() && !b.is_finite()) return ord_cmp(a.length(), b.length());
  // An infinite all-plus expansion beats every finite one: at the first
  // position the finite side shows '-' or blank against '+'.
  if (!a.is_finite()) return Ordering::Greater;
  if (!b.is_finite()) return Ordering::Less;
  const std::string& x = a.signs();
  const std::string& y = b.signs();
  std::size_t n = std::max(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = rank_at(x, i) - rank_at(y, i);
    if (c != 0) return from_int(c);
  }
  return Ordering::Equal;
}

bool is_dyadic(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  const mpz_class& d = c.get_den();
  return mpz_popcount(d.get_mpz_t()) == 1;
}

mpq_class se_value(const SignExpansion& a) {
  if (!a.is_finite()) throw Unsupported("ordinal expansions have no dyadic value");
  const std::string& s = a.signs();
  mpq_class x = 0;
  std::size_t i = 0;
  while (i < s.size() && s[i] == s[0]) {
    x += s[i] == '+' ? 1 : -1;
    ++i;
  }
  mpq_class step(1, 2);
  for (; i < s.size(); ++i) {
    x += s[i] == '+' ? step : mpq_class(-step);
    step /= 2;
  }
  return x;
}

namespace {

// Walks the binary tree of finite-day numbers from the root; `go_right`
// decides each step and `done` stops the walk.
template <class Done, class Right>
std::string tree_walk(Done done, Right go_right) {
  std::optional<mpq_class> lo, hi;
  mpq_class x = 0;
  std::string s;
  while (!done(x)) {
    if (s.size() > 4096) throw Unsupported("tree walk does not terminate");
    if (go_right(x)) {
      s += '+';
      lo = x;
      x = hi ? mpq_class((x + *hi) / 2) : mpq_class(x + 1);
    } else {
      s += '-';
      hi = x;
      x = lo ? mpq_class((*lo + x) / 2) : mpq_class(x - 1);
    }
  }
  return s;
}

}  // namespace

SignExpansion se_from_dyadic(const mpq_class& dyadic) {
  mpq_class d = dyadic;
  d.canonicalize();
  if (!is_dyadic(d)) throw std::invalid_argument(d.get_str() + " is not dyadic");
  return SignExpansion::finite(
      tree_walk([&](const mpq_class& x) { return x == d; }, [&](const mpq_class& x) { return d > x; }));
}

Ordinal birthday(const SignExpansion& a) { return a.length(); }

Options options(const SignExpansion& x) {
  if (!x.is_finite()) throw Unsupported("options of ordinal expansions are not listed");
  Options o;
  const std::string& s = x.signs();
  for (std::size_t k = 0; k < s.size(); ++k) {
    SignExpansion p = SignExpansion::finite(s.substr(0, k));
    (se_cmp(p, x) == Ordering::Less ? o.left : o.right).push_back(std::move(p));
  }
  return o;
}

SignExpansion simplest(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  std::optional<mpq_class> mx, mn;
  for (mpq_class v : a) {
    v.canonicalize();
    mx = mx ? std::max(*mx, v) : v;
  }
  for (mpq_class v : b) {
    v.canonicalize();
    mn = mn ? std::min(*mn, v) : v;
  }
  if (mx && mn && *mx >= *mn)
    throw NotSeparated("max of left " + mx->get_str() + " >= min of right " + mn->get_str());
  return SignExpansion::finite(tree_walk(
      [&](const mpq_class& x) { return (!mx || *mx < x) && (!mn || x < *mn); },
      [&](const mpq_class& x) { return mx && x <= *mx; }));
}

SignExpansion s_neg(const SignExpansion& x) {
  if (!x.is_finite()) throw Unsupported("negation of ordinal expansions");
  std::string s = x.signs();
  for (char& c : s) c = c == '+' ? '-' : '+';
  return SignExpansion::finite(std::move(s));
}

namespace {

class Genetic {
 public:
  std::string add(const std::string& x, const std::string& y) {
    auto key = std::make_pair(x, y);
    if (auto it = add_memo_.find(key); it != add_memo_.end()) return it->second;
    const Options& ox = opts(x);
    const Options& oy = opts(y);
    std::vector<mpq_class> l, r;
    for (const auto& a : ox.left) l.push_back(value(add(a.signs(), y)));
    for (const auto& b : oy.left) l.push_back(value(add(x, b.signs())));
    for (const auto& a : ox.right) r.push_back(value(add(a.signs(), y)));
    for (const auto& b : oy.right) r.push_back(value(add(x, b.signs())));
    std::string out = simplest(l, r).signs();
    add_memo_.emplace(std::move(key), out);
    return out;
  }

  std::string mul(const std::string& x, const std::string& y) {
    auto key = std::make_pair(x, y);
    if (auto it = mul_memo_.find(key); it != mul_memo_.end()) return it->second;
    const Options& ox = opts(x);
    const Options& oy = opts(y);
    // x'y + xy' - x'y'
    auto term = [&](const std::string& xo, const std::string& yo) {
      std::string s = add(mul(xo, y), mul(x, yo));
      return value(add(s, neg(mul(xo, yo))));
    };
    std::vector<mpq_class> l, r;
    for (const auto& a : ox.left)
      for (const auto& b : oy.left) l.push_back(term(a.signs(), b.signs()));
    for (const auto& a : ox.right)
      for (const auto& b : oy.right) l.push_back(term(a.signs(), b.signs()));
    for (const auto& a : ox.left)
      for (const auto& b : oy.right) r.push_back(term(a.signs(), b.signs()));
    for (const auto& a : ox.right)
      for (const auto& b : oy.left) r.push_back(term(a.signs(), b.signs()));
    std::string out = simplest(l, r).signs();
    mul_memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  const mpq_class& value(const std::string& s) {
    auto it = values_.find(s);
    if (it == values_.end()) it = values_.emplace(s, se_value(SignExpansion::finite(s))).first;
    return it->second;
  }
  const Options& opts(const std::string& s) {
    auto it = options_.find(s);
    if (it == options_.end()) it = options_.emplace(s, options(SignExpansion::finite(s))).first;
    return it->second;
  }
  static std::string neg(const std::string& s) { return s_neg(SignExpansion::finite(s)).signs(); }

  std::map<std::pair<std::string, std::string>, std::string> add_memo_;
  std::map<std::pair<std::string, std::string>, std::string> mul_memo_;
  std::unordered_map<std::string, mpq_class> values_;
  std::unordered_map<std::string, Options> options_;
};

void check_cap(const SignExpansion& x, const SignExpansion& y, int cap, const char* op) {
  if (!x.is_finite() || !y.is_finite())
    throw Unsupported(std::string(op) + " is not offered on ordinal expansions");
  std::size_t total = x.signs().size() + y.signs().size();
  if (total > static_cast<std::size_t>(cap))
    throw RecursionCapExceeded(std::string(op) + ": birthday sum " + std::to_string(total) +
                               " exceeds cap " + std::to_string(cap));
}

}  // namespace

SignExpansion s_add(const SignExpansion& x, const SignExpansion& y, int cap) {
  check_cap(x, y, cap, "add");
  Genetic g;
  return SignExpansion::finite(g.add(x.signs(), y.signs()));
}

SignExpansion s_mul(const SignExpansion& x, const SignExpansion& y, int cap) {
  check_cap(x, y, cap, "mul");
  Genetic g;
  return SignExpansion::finite(g.mul(x.signs(), y.signs()));
}

std::string to_string(const SignExpansion& a) {
  if (!a.is_finite()) return "plus(" + to_string(a.length()) + ")";
  return a.signs().empty() ? "()" : a.signs();
}

std::string dyadic_to_string(const mpq_class& d) {
  if (d.get_den() == 1) return d.get_num().get_str();
  std::size_t k = mpz_sizeinbase(d.get_den_mpz_t(), 2) - 1;
  return d.get_num().get_str() + "/2^" + std::to_string(k);
}

}  // namespace numerosity
