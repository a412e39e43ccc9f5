#include <doctest.h>

#include "numerosity/parse.hpp"
#include "support.hpp"

using namespace numerosity;

namespace {

NumExpr N(const std::string& s) { return eval_num(parse_numexpr(s)); }
const AxiomTable kDefault;

CmpKind cmp(const std::string& a, const std::string& b, const AxiomTable& t = kDefault) {
  return nf_cmp(N(a), N(b), t).kind;
}

}  // namespace

TEST_SUITE_BEGIN("numexpr");

TEST_CASE("field identities") {
  CHECK(nf_equal(N("alpha/2 + alpha/2"), NumExpr::alpha()));
  CHECK(to_string(N("(alpha + 1)*(alpha - 1)")) == "alpha^2 - 1");
  CHECK(nf_equal(N("2*alpha^2 + 1"), eval_num(parse_numexpr("num(Q)"))));
  CHECK(N("alpha - alpha").is_zero());
  CHECK(to_string(N("(alpha^2 - 1)/(alpha + 1)")) == "alpha - 1");
  CHECK_THROWS_AS(N("alpha/(alpha - alpha)"), DivisionByZero);
}

TEST_CASE("powers") {
  CHECK(to_string(nf_pow(NumExpr::alpha(), NumExpr(mpq_class(1, 2)))) == "alpha^(1/2)");
  CHECK(nf_equal(nf_pow(N("alpha*beta + 3"), NumExpr(0L)), NumExpr(1L)));
  CHECK(to_string(N("2^w")) == "X");
  CHECK(to_string(N("alpha^(1/2)*alpha^(1/2)")) == "alpha");
  CHECK(nf_equal(N("alpha^-2"), N("1/alpha^2")));
  CHECK_THROWS_AS(N("beta^(1/2)"), Unsupported);
  CHECK_THROWS_AS(N("3^alpha"), Unsupported);
}

TEST_CASE("embedding of ordinals") {
  CHECK(embed(Ordinal{}).is_zero());
  CHECK(nf_equal(embed(eval_ord(parse_ordexpr("w*2 + 1"))), N("2*alpha + 3")));
  CHECK(to_string(*unembed(N("w^(w + 1) + 3"))) == "w^(w + 1) + 3");
  CHECK_FALSE(unembed(N("alpha/2")).has_value());
}

TEST_CASE("comparisons with the default table") {
  CHECK(cmp("alpha^2", "alpha*beta") == CmpKind::Less);
  CHECK(cmp("alpha", "alpha") == CmpKind::Equal);
  CHECK(cmp("2*alpha^2 + 1", "2*alpha^2") == CmpKind::Greater);
  CHECK(cmp("1/alpha", "0") == CmpKind::Greater);
  CHECK(cmp("X", "alpha^100") == CmpKind::Greater);

  auto r = nf_cmp(NumExpr::beta(), NumExpr::x2w(), kDefault);
  CHECK(r.kind == CmpKind::Unknown);
  CHECK(r.reason == "beta vs 2^w undeclared");
  r = nf_cmp(N("alpha^2"), NumExpr::beta(), kDefault);
  CHECK(r.kind == CmpKind::Unknown);
  CHECK(r.reason == "alpha^2 vs beta undeclared");
}

TEST_CASE("declared orders") {
  DeclaredOrder schema{Monomial::gen(Gen::Alpha), Monomial::gen(Gen::Beta), true};
  AxiomTable t = kDefault.with_order(schema);
  CHECK(cmp("alpha^2", "beta", t) == CmpKind::Less);
  CHECK(cmp("alpha^7*3 + alpha", "beta", t) == CmpKind::Less);
  CHECK(cmp("beta", "X", t) == CmpKind::Unknown);
  CHECK(kDefault.declared().empty());

  DeclaredOrder bx{Monomial::gen(Gen::Beta), Monomial::gen(Gen::X2W), false};
  CHECK(cmp("beta", "X", kDefault.with_order(bx)) == CmpKind::Less);
  DeclaredOrder backwards{Monomial::gen(Gen::Alpha, 2), Monomial::gen(Gen::Alpha), false};
  CHECK_THROWS_AS(kDefault.with_order(backwards), InconsistentAxiom);
  DeclaredOrder against_alpha{Monomial::gen(Gen::Alpha), Monomial::gen(Gen::Alpha, 2), true};
  CHECK_THROWS_AS(kDefault.with_order(against_alpha), InconsistentAxiom);
}

TEST_CASE("standard part") {
  auto st = [](const std::string& s) { return standard_part(N(s), kDefault); };
  CHECK(st("(2*alpha^2 + 1)/alpha^2") == StdPart{StdPart::Kind::Finite, 2, {}});
  CHECK(st("5") == StdPart{StdPart::Kind::Finite, 5, {}});
  CHECK(st("1/alpha") == StdPart{StdPart::Kind::Finite, 0, {}});
  CHECK(st("alpha") .kind == StdPart::Kind::PlusInfinity);
  CHECK(st("3 - alpha^(1/2)").kind == StdPart::Kind::MinusInfinity);
  CHECK(st("beta/X").kind == StdPart::Kind::Unknown);
}

TEST_CASE("gamma measure") {
  auto gm = [](const std::string& a, const std::string& g) { return gamma_measure(N(a), N(g), kDefault); };
  CHECK(gm("beta/2", "beta") == StdPart{StdPart::Kind::Finite, mpq_class(1, 2), {}});
  CHECK(gm("2*alpha*beta + 1", "beta").kind == StdPart::Kind::PlusInfinity);
  StdPart ab = gm("alpha", "beta");
  CHECK((ab == StdPart{StdPart::Kind::Finite, 0, {}} || ab.kind == StdPart::Kind::Unknown));
  CHECK_THROWS_AS(gm("alpha", "0"), NonPositiveGamma);
  CHECK_THROWS_AS(gm("alpha", "-beta"), NonPositiveGamma);
}

TEST_CASE("bb mode rewrites beth1") {
  AxiomTable bb = kDefault.with_bb_mode(true);
  CHECK(to_string(bb_display(apply_bb(N("num([0,1])")))) == "beth1 - X + 1");
  CHECK(to_string(bb_display(NumExpr::beta())) == "beth1 - X");
  CHECK(nf_cmp(N("beth1 - X"), NumExpr::beta(), bb).kind == CmpKind::Equal);
  CHECK(nf_cmp(N("beth1"), N("beta + X"), bb).kind == CmpKind::Equal);
}

TEST_CASE("JSON encoding") {
  CHECK(to_json(N("2*alpha^2 + 1")) == R"({"den":[["1","1"]],"num":[["2","alpha^2"],["1","1"]]})");
}

TEST_CASE("field laws on random samples") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 150; ++i) {
    NumExpr a = testsupport::random_numexpr(rng), b = testsupport::random_numexpr(rng),
            c = testsupport::random_numexpr(rng);
    CHECK(nf_equal((a + b) + c, a + (b + c)));
    CHECK(nf_equal(a + b, b + a));
    CHECK(nf_equal((a * b) * c, a * (b * c)));
    CHECK(nf_equal(a * b, b * a));
    CHECK(nf_equal(a * (b + c), a * b + a * c));
    CHECK(nf_equal(a + NumExpr(0L), a));
    CHECK(nf_equal(a * NumExpr(1L), a));
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK(nf_equal(a * (NumExpr(1L) / a), NumExpr(1L)));
  }
}

TEST_CASE("comparison is compatible with arithmetic") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 150; ++i) {
    NumExpr a = testsupport::random_numexpr(rng), b = testsupport::random_numexpr(rng),
            c = testsupport::random_numexpr(rng);
    CmpResult ab = nf_cmp(a, b, kDefault);
    CmpResult ba = nf_cmp(b, a, kDefault);
    CHECK(ab.decided() == ba.decided());
    if (ab.kind == CmpKind::Less) CHECK(ba.kind == CmpKind::Greater);
    if (ab.kind == CmpKind::Equal) CHECK(ba.kind == CmpKind::Equal);
    if (ab.kind != CmpKind::Less) continue;
    CHECK(nf_cmp(a + c, b + c, kDefault).kind == CmpKind::Less);
    if (nf_cmp(c, NumExpr(0L), kDefault).kind == CmpKind::Greater)
      CHECK(nf_cmp(a * c, b * c, kDefault).kind == CmpKind::Less);
  }
}

TEST_CASE("infinitesimals do not move the standard part") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 100; ++i) {
    NumExpr a = testsupport::random_numexpr(rng);
    NumExpr tiny = NumExpr(mpq_class(testsupport::uniform(rng, -9, 9), 7)) /
                   nf_pow(NumExpr::alpha(), NumExpr(testsupport::uniform(rng, 1, 3)));
    StdPart s = standard_part(a, kDefault);
    if (s.kind == StdPart::Kind::Unknown) continue;
    CHECK(standard_part(a + tiny, kDefault) == s);
  }
}

TEST_CASE("gamma measure is finitely additive") {
  std::mt19937_64 rng(53);
  NumExpr gamma = NumExpr::beta();
  for (int i = 0; i < 100; ++i) {
    NumExpr a = NumExpr(mpq_class(testsupport::uniform(rng, 0, 9), 4)) * gamma +
                NumExpr(testsupport::uniform(rng, 0, 5)) * NumExpr::alpha();
    NumExpr b = NumExpr(mpq_class(testsupport::uniform(rng, 0, 9), 3)) * gamma + NumExpr(1L);
    StdPart ma = gamma_measure(a, gamma, kDefault), mb = gamma_measure(b, gamma, kDefault);
    StdPart mab = gamma_measure(a + b, gamma, kDefault);
    REQUIRE(ma.kind == StdPart::Kind::Finite);
    REQUIRE(mb.kind == StdPart::Kind::Finite);
    CHECK(mab == StdPart{StdPart::Kind::Finite, ma.value + mb.value, {}});
  }
}

TEST_CASE("printed forms parse back to the same value") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 150; ++i) {
    NumExpr a = testsupport::random_numexpr(rng);
    CHECK(nf_equal(N(to_string(a)), a));
  }
  for (const char* s : {"X*beta + beth1", "w^w*3 + alpha", "alpha^(1/3) - 1/2", "w^(w^2 + 1)/(alpha + 2)"})
    CHECK(nf_equal(N(to_string(N(s))), N(s)));
}

TEST_CASE("embedding preserves order and the natural operations") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 300; ++i) {
    Ordinal a = testsupport::random_ordinal(rng, 3), b = testsupport::random_ordinal(rng, 3);
    CHECK(nf_equal(embed(natural_add(a, b)), embed(a) + embed(b)));
    CHECK(nf_equal(embed(natural_mul(a, b)), embed(a) * embed(b)));
    CmpKind k = nf_cmp(embed(a), embed(b), kDefault).kind;
    switch (ord_cmp(a, b)) {
      case Ordering::Less: CHECK(k == CmpKind::Less); break;
      case Ordering::Equal: CHECK(k == CmpKind::Equal); break;
      case Ordering::Greater: CHECK(k == CmpKind::Greater); break;
    }
    CHECK(unembed(embed(a)) == a);
  }
}

TEST_CASE("powers of w agree with ordinal exponentiation") {
  std::mt19937_64 rng(67);
  const NumExpr w = NumExpr::omega();
  for (int i = 0; i < 150; ++i) {
    Ordinal g = testsupport::random_ordinal(rng, 3);
    CHECK(nf_equal(embed(ord_exp(Ordinal::omega(), g)), nf_pow(w, embed(g))));
  }
  CHECK(to_string(nf_pow(w, embed(Ordinal::omega()))) == "w^w");
}

TEST_CASE("ordinal powers never exceed numerosity powers") {
  std::mt19937_64 rng(71);
  int equal = 0, below = 0;
  for (int i = 0; i < 300; ++i) {
    Ordinal b = testsupport::random_ordinal(rng, 2, 3, 3);
    Ordinal g = i % 2 ? Ordinal::natural(testsupport::uniform(rng, 0, 4)) : testsupport::random_ordinal(rng, 2, 2, 3);
    if (i % 3 == 0) b = Ordinal::omega_pow(testsupport::random_ordinal(rng, 1, 2, 3), 1);
    if (b.is_zero()) continue;
    NumExpr power;
    try {
      power = nf_pow(embed(b), embed(g));
    } catch (const Unsupported&) {
      continue;
    }
    NumExpr ordinal = embed(ord_exp(b, g));
    CmpKind k = nf_cmp(ordinal, power, kDefault).kind;
    CHECK_MESSAGE((k == CmpKind::Less || k == CmpKind::Equal), to_string(b) << " ^ " << to_string(g));
    (k == CmpKind::Equal ? equal : below) += 1;
    if (b == Ordinal::omega()) CHECK(k == CmpKind::Equal);
  }
  CHECK(equal > 20);
  CHECK(below > 20);
  CHECK(nf_cmp(embed(ord_exp(Ordinal::natural(2), Ordinal::omega())), N("2^w"), kDefault).kind == CmpKind::Less);
}

TEST_SUITE_END();
