#include <doctest.h>

#include <map>

#include "numerosity/parse.hpp"
#include "numerosity/surreal.hpp"
#include "oracles/surreal_oracle.hpp"
#include "support.hpp"

using namespace numerosity;

namespace doctest {
template <>
struct StringMaker<SignExpansion> {
  static String convert(const SignExpansion& s) { return to_string(s).c_str(); }
};
}  // namespace doctest

namespace {

SignExpansion F(const std::string& s) { return SignExpansion::finite(s); }
mpq_class Q(long p, long q = 1) {
  mpq_class r(p, q);
  r.canonicalize();
  return r;
}

// Genetic addition on values, with options taken as every number born
// earlier on the correct side rather than as prefixes.
class BornBeforeAdd {
 public:
  explicit BornBeforeAdd(int days) : days_(oracle::born_by(days)) {}

  mpq_class add(const mpq_class& x, const mpq_class& y) {
    auto key = std::make_pair(x, y);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<mpq_class> l, r;
    for (const auto& v : earlier(x)) (v < x ? l : r).push_back(add(v, y));
    for (const auto& v : earlier(y)) (v < y ? l : r).push_back(add(x, v));
    auto s = oracle::simplest_between(days_, l, r);
    REQUIRE(s.has_value());
    return memo_[key] = *s;
  }

  std::vector<mpq_class> earlier(const mpq_class& x) const {
    int day = days_.birthday.at(x);
    std::vector<mpq_class> out;
    for (const auto& [v, d] : days_.birthday)
      if (d < day) out.push_back(v);
    return out;
  }

  const oracle::Days& days() const { return days_; }

 private:
  oracle::Days days_;
  std::map<std::pair<mpq_class, mpq_class>, mpq_class> memo_;
};

}  // namespace

TEST_SUITE_BEGIN("surreal");

TEST_CASE("the order chain of short expansions") {
  const std::vector<std::string> chain{"-", "-+", "", "+-", "+-+", "+", "++-"};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    CHECK(se_cmp(F(chain[i]), F(chain[i + 1])) == Ordering::Less);
    CHECK(se_cmp(F(chain[i + 1]), F(chain[i])) == Ordering::Greater);
  }
  CHECK(se_cmp(F("+-+"), F("+-+")) == Ordering::Equal);
  CHECK(se_cmp(F("+++"), SignExpansion::plus(Ordinal::omega())) == Ordering::Less);
  CHECK(se_cmp(F("-"), SignExpansion::plus(Ordinal::omega())) == Ordering::Less);
}

TEST_CASE("values and birthdays") {
  CHECK(se_value(F("")) == 0);
  CHECK(se_value(F("+")) == 1);
  CHECK(se_value(F("++")) == 2);
  CHECK(se_value(F("+-")) == Q(1, 2));
  CHECK(se_value(F("-+-")) == Q(-3, 4));
  CHECK(se_from_dyadic(Q(3, 8)) == F("+--+"));
  CHECK(se_from_dyadic(mpq_class(6, 16)) == F("+--+"));
  CHECK_THROWS_AS(se_from_dyadic(Q(1, 3)), std::invalid_argument);
  CHECK(birthday(F("")) == Ordinal{});
  CHECK(birthday(F("+-+")) == Ordinal::natural(3));
  CHECK(birthday(SignExpansion::plus(Ordinal::omega())) == Ordinal::omega());
  CHECK(SignExpansion::plus(Ordinal::natural(3)) == F("+++"));
  CHECK(SignExpansion::plus(Ordinal::natural(3)).is_finite());
  CHECK(dyadic_to_string(Q(3, 8)) == "3/2^3");
  CHECK(dyadic_to_string(Q(-5)) == "-5");
  CHECK(to_string(F("")) == "()");
}

TEST_CASE("options are the prefixes on either side") {
  Options o = options(F("+-"));
  CHECK(o.left == std::vector<SignExpansion>{F("")});
  CHECK(o.right == std::vector<SignExpansion>{F("+")});
  o = options(F(""));
  CHECK(o.left.empty());
  CHECK(o.right.empty());
  o = options(F("++"));
  CHECK(o.left.size() == 2);
  CHECK(o.right.empty());
}

TEST_CASE("simplest numbers") {
  CHECK(simplest({}, {}) == F(""));
  CHECK(simplest({0}, {1}) == F("+-"));
  CHECK(simplest({Q(1, 2)}, {}) == F("+"));
  CHECK(simplest({}, {Q(-7, 4)}) == F("--"));
  CHECK(simplest({Q(-5, 2)}, {Q(7, 3)}) == F(""));
  CHECK(simplest({Q(3, 2)}, {Q(17, 4)}) == F("++"));
  CHECK(simplest({mpq_class(2, 4)}, {mpq_class(6, 8)}) == F("+-+-"));
  CHECK_THROWS_AS(simplest({1}, {1}), NotSeparated);
  CHECK_THROWS_AS(simplest({2}, {Q(1, 2)}), NotSeparated);
}

TEST_CASE("simplest agrees with day-by-day enumeration") {
  const oracle::Days days = oracle::born_by(6);
  CHECK(*oracle::simplest_between(oracle::born_by(4), {0}, {1}) == se_value(simplest({0}, {1})));
  std::mt19937_64 rng(97);
  for (int i = 0; i < 300; ++i) {
    mpq_class a = Q(testsupport::uniform(rng, -40, 40), 8);
    mpq_class b = a + Q(testsupport::uniform(rng, 1, 30), 8);
    std::vector<mpq_class> l, r;
    if (testsupport::uniform(rng, 0, 4) > 0) l.push_back(a);
    if (testsupport::uniform(rng, 0, 4) > 0) r.push_back(b);
    auto expect = oracle::simplest_between(days, l, r);
    if (!expect) continue;
    SignExpansion got = simplest(l, r);
    CHECK(se_value(got) == *expect);
    CHECK(birthday(got) == Ordinal::natural(days.birthday.at(*expect)));
  }
}

TEST_CASE("exhaustive checks up to length 8") {
  auto all = testsupport::all_signs(8);
  REQUIRE(all.size() == 511);
  const oracle::Days days = oracle::born_by(8);
  std::map<mpq_class, std::string> seen;
  for (const auto& s : all) {
    mpq_class v = se_value(F(s));
    CHECK(is_dyadic(v));
    CHECK(se_from_dyadic(v) == F(s));
    CHECK(seen.emplace(v, s).second);
    CHECK(days.birthday.at(v) == static_cast<int>(s.size()));
    Options o = options(F(s));
    std::vector<mpq_class> l, r;
    for (const auto& x : o.left) l.push_back(se_value(x));
    for (const auto& x : o.right) r.push_back(se_value(x));
    CHECK(simplest(l, r) == F(s));
  }
  CHECK(seen.size() == days.sorted.size());
  std::mt19937_64 rng(101);
  for (int i = 0; i < 20000; ++i) {
    const std::string& a = all[static_cast<std::size_t>(testsupport::uniform(rng, 0, 510))];
    const std::string& b = all[static_cast<std::size_t>(testsupport::uniform(rng, 0, 510))];
    Ordering by_value = se_value(F(a)) < se_value(F(b))   ? Ordering::Less
                        : se_value(F(a)) == se_value(F(b)) ? Ordering::Equal
                                                           : Ordering::Greater;
    CHECK(se_cmp(F(a), F(b)) == by_value);
    CHECK((se_cmp(F(a), F(b)) == Ordering::Less) == oracle::sign_less(a, b));
  }
}

TEST_CASE("prefix options give the same numbers as all earlier-born options") {
  BornBeforeAdd ref(10);
  auto all = testsupport::all_signs(5);
  for (const auto& s : all) {
    mpq_class x = se_value(F(s));
    std::vector<mpq_class> l, r;
    for (const auto& v : ref.earlier(x)) (v < x ? l : r).push_back(v);
    CHECK(simplest(l, r) == F(s));
  }
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.size() > b.size()) continue;
      mpq_class genetic = ref.add(se_value(F(a)), se_value(F(b)));
      CHECK(se_value(s_add(F(a), F(b))) == genetic);
    }
}

TEST_CASE("genetic arithmetic") {
  CHECK(s_add(F("+-"), F("+-")) == F("+"));
  CHECK(s_mul(se_from_dyadic(Q(3, 4)), se_from_dyadic(Q(1, 2))) == se_from_dyadic(Q(3, 8)));
  CHECK(s_neg(F("+--+")) == F("-++-"));
  std::mt19937_64 rng(103);
  for (int i = 0; i < 50; ++i) {
    SignExpansion x = F(testsupport::random_signs(rng, 10));
    CHECK(s_add(x, F("")) == x);
    CHECK(s_mul(x, F("+")) == x);
    CHECK(s_mul(x, F("")) == F(""));
    CHECK(s_add(x, s_neg(x)) == F(""));
  }
}

TEST_CASE("genetic arithmetic matches rational arithmetic") {
  std::mt19937_64 rng(107);
  for (int i = 0; i < 300; ++i) {
    SignExpansion x = F(testsupport::random_signs(rng, 8)), y = F(testsupport::random_signs(rng, 8));
    CHECK(se_value(s_add(x, y)) == se_value(x) + se_value(y));
    CHECK(s_add(x, y) == s_add(y, x));
  }
  for (int i = 0; i < 100; ++i) {
    SignExpansion x = F(testsupport::random_signs(rng, 6)), y = F(testsupport::random_signs(rng, 6));
    CHECK(se_value(s_mul(x, y)) == se_value(x) * se_value(y));
  }
}

TEST_CASE("recursion caps and ordinal expansions") {
  CHECK_THROWS_AS(s_add(F(std::string(13, '+')), F(std::string(12, '-'))), RecursionCapExceeded);
  CHECK_NOTHROW(s_add(F(std::string(12, '+')), F(std::string(12, '-'))));
  CHECK_THROWS_AS(s_mul(F(std::string(9, '+')), F(std::string(8, '-'))), RecursionCapExceeded);
  CHECK_THROWS_AS(s_add(SignExpansion::plus(Ordinal::omega()), F("+")), Unsupported);
  CHECK_THROWS_AS(s_neg(SignExpansion::plus(Ordinal::omega())), Unsupported);
  CHECK(to_string(SignExpansion::plus(eval_ord(parse_ordexpr("w^w*2 + 1")))) == "plus(w^w*2 + 1)");
  std::mt19937_64 rng(109);
  for (int i = 0; i < 100; ++i) {
    Ordinal a = testsupport::random_ordinal(rng, 2, 3, 3), b = testsupport::random_ordinal(rng, 2, 3, 3);
    CHECK(se_cmp(SignExpansion::plus(a), SignExpansion::plus(b)) == ord_cmp(a, b));
    CHECK(birthday(SignExpansion::plus(a)) == a);
  }
}

TEST_SUITE_END();
