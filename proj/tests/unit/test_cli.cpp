#include <doctest.h>

#include <sstream>

#include "numerosity/repl.hpp"

using namespace numerosity;

namespace {

EvalResult run(const std::string& line, Session& s) { return eval_line(line, s); }

EvalResult run(const std::string& line) {
  Session s;
  return eval_line(line, s);
}

int script(const std::string& text, std::string* out = nullptr, bool strict = false) {
  Session s;
  s.strict_cmp = strict;
  std::istringstream in(text);
  std::ostringstream os;
  int code = run_script(in, os, s);
  if (out) *out = os.str();
  return code;
}

const std::vector<std::string> kCommands{
    ":num mod(2,0)",
    ":num Q",
    ":num (alpha + 1)*(alpha - 1)/beta",
    ":num w^(w + 1) - 2^-3",
    ":num -alpha^-2",
    ":num num(R[0,1) | R[2,3)) + 1",
    ":num shift(1/2, Q(0,1] & Q(1/2,2])",
    ":num (N \\ mod(2,0)) >< maps(2, fin{1,2})",
    ":num [0,1]",
    ":num Pfin(N)",
    ":cmp alpha^2 alpha*beta",
    ":cmp alpha^2, beta",
    ":cmp beta X",
    ":cmp +-, ++",
    ":cmp w*2 w^2",
    ":st (2*alpha^2 + 1)/alpha^2",
    ":measure R[1/4,3/4), beta",
    ":measure R[0,1) >< R[0,1/2), beta^2",
    ":ord (w+1) +. w",
    ":ord w *. 2 + 3 * w^w",
    ":ord 2 ^<> w",
    ":sur add(+-, -+-)",
    ":sur val(mul(++-, +-))",
    ":sur neg(dyadic(3/8))",
    ":sur plus(w^w*2 + 1)",
    ":sur ()",
    ":simplest {0 | 1}",
    ":simplest {-1/2, 1/4 | }",
    ":labelcheck builtin pivotal",
    ":labelcheck small label {1,2}",
    ":assert_order alpha^k < beta",
    ":assert_order beta < X",
    ":bb on",
    ":help",
    ":quit",
};

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("commands parse into the expected shape") {
  Command c = parse_command(":num mod(2,0)");
  CHECK(c.verb == Verb::Num);
  REQUIRE(c.args.size() == 1);
  CHECK(c.args[0].lang == Lang::Set);
  c = parse_command(":cmp alpha^2 alpha*beta");
  CHECK(c.verb == Verb::Cmp);
  CHECK(c.args.size() == 2);
  c = parse_command(":ord (w+1) +. w");
  CHECK(c.verb == Verb::Ord);
  CHECK(c.args[0].ast.op == "+.");
  c = parse_command(":labelcheck counter:succ pivotal");
  CHECK(c.words == std::vector<std::string>{"counter:succ", "pivotal"});
}

TEST_CASE("printing and parsing commands round trip") {
  for (const auto& line : kCommands) {
    Command c = parse_command(line);
    std::string printed = print(c);
    CHECK_MESSAGE(parse_command(printed) == c, line << " -> " << printed);
    CHECK(print(parse_command(printed)) == printed);
  }
}

TEST_CASE("parse errors carry a position") {
  for (const char* bad : {":num alpha +", ":frob 1", ":num mod(2,", ":ord w +. ", ":sur add(+-)", "num Q",
                          ":simplest {0 1}", ":num (alpha"}) {
    CHECK_THROWS_AS(parse_command(bad), ParseError);
  }
  try {
    parse_command(":num alpha + ");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 13);
  }
}

TEST_CASE("evaluation examples") {
  EvalResult r = run(":num Q");
  CHECK(r.value == "2*alpha^2 + 1");
  CHECK(r.status == "exact");
  CHECK(r.kind == "numexpr");
  CHECK(run(":ord 2 ^<> w").value == "w");
  CHECK(run(":ord (w+1) +. w").value == "w*2");
  CHECK(run(":ord (w+1) + w").value == "w*2 + 1");
  CHECK(run(":ord 1 +. w").value == "w");
  CHECK(run(":num mod(2,0)").value == "1/2*alpha");
  CHECK(run(":sur val(mul(++-, +-))").value == "3/2^2");
  CHECK(run(":sur add(+-, +-)").value == "+");
  CHECK(run(":simplest {0 | 1}").value == "+-");
  CHECK(run(":measure R[1/4,3/4), beta").value == "Finite(1/2)");
  CHECK(run(":st alpha").status == "asymptotic");
  CHECK(run(":st (2*alpha^2 + 1)/alpha^2").value == "Finite(2)");
  CHECK(run(":cmp +-, ++").value == "Less");
  CHECK(run(":cmp w^2, w*2").value == "Greater");
  CHECK(run(":labelcheck builtin label 3").value == "[3, {}]");

  r = run(":cmp beta X");
  CHECK(r.status == "unknown");
  CHECK(r.value == "Unknown(beta vs 2^w undeclared)");
  CHECK(r.exit_code == 0);
}

TEST_CASE("errors are reported by name") {
  EvalResult r = run(":num 1/(alpha - alpha)");
  CHECK(r.kind == "error");
  CHECK(r.status == "error");
  CHECK(r.exit_code == 2);
  CHECK(r.value.rfind("DivisionByZero: ", 0) == 0);
  CHECK(run(":simplest {1 | 0}").value.rfind("NotSeparated: ", 0) == 0);
  CHECK(run(":num mod(2,5)").value.rfind("Uncompilable: ", 0) == 0);
  CHECK(run(":labelcheck builtin label {9}").value.rfind("UnknownElement: ", 0) == 0);
  CHECK(run(":labelcheck /nonexistent/file").value.rfind("InstanceFormatError: ", 0) == 0);
  r = run(":num alpha +");
  CHECK(r.exit_code == 1);
  CHECK(r.value.rfind("ParseError: ", 0) == 0);
}

TEST_CASE("label checks from the command line") {
  CHECK(run(":labelcheck builtin pivotal").value ==
        R"({"check":"validate_pivotal","status":"ok","witnesses":[]})");
  std::string all = run(":labelcheck small").value;
  CHECK(all.front() == '[');
  CHECK(all.find("validate_labeltree") != std::string::npos);
  CHECK(all.find("check_counting_axioms") != std::string::npos);
  std::string bad = run(":labelcheck counter:member").value;
  CHECK(bad.find("LT(3a)") != std::string::npos);
  CHECK(bad.find("validate_labeltree") == std::string::npos);
  CHECK(run(std::string(":labelcheck ") + NUMEROSITY_TEST_DATA + "/grulla.tree pivotal").value ==
        R"({"check":"validate_pivotal","status":"ok","witnesses":[]})");
}

TEST_CASE("declared orders and bb mode live in the session") {
  Session s;
  CHECK(run(":cmp alpha^2 beta", s).status == "unknown");
  CHECK(run(":assert_order alpha^k < beta", s).status == "exact");
  CHECK(run(":cmp alpha^2 beta", s).value == "Less");
  CHECK(run(":cmp alpha^9*7 beta", s).value == "Less");
  CHECK(run(":assert_order beta < alpha", s).value.rfind("InconsistentAxiom: ", 0) == 0);
  CHECK(run(":bb on", s).value == "bb on");
  CHECK(run(":num [0,1]", s).value == "beth1 - X + 1");
  CHECK(run(":num beta", s).value == "beth1 - X");
  CHECK(run(":bb off", s).value == "bb off");
  CHECK(run(":num beta", s).value == "beta");
  CHECK_FALSE(s.quit);
  run(":quit", s);
  CHECK(s.quit);
}

TEST_CASE("other commands leave the session alone") {
  Session s;
  run(":assert_order beta < X", s);
  for (const auto& line : kCommands) {
    if (line.rfind(":assert_order", 0) == 0 || line.rfind(":bb", 0) == 0 || line == ":quit") continue;
    run(line, s);
    CHECK(s.table.declared().size() == 1);
    CHECK_FALSE(s.table.bb_mode());
    CHECK_FALSE(s.quit);
  }
}

TEST_CASE("script exit codes") {
  std::string out;
  CHECK(script("", &out) == 0);
  CHECK(out.empty());
  CHECK(script("# only a comment\n\n   \n", &out) == 0);
  CHECK(out.empty());
  CHECK(script(":num Q\n:num R\n", &out) == 0);
  CHECK(out ==
        "{\"input\":\":num Q\",\"kind\":\"numexpr\",\"status\":\"exact\",\"value\":\"2*alpha^2 + 1\"}\n"
        "{\"input\":\":num R\",\"kind\":\"numexpr\",\"status\":\"exact\",\"value\":\"2*alpha*beta + 1\"}\n");
  CHECK(script(":cmp beta X\n") == 0);
  CHECK(script(":cmp beta X\n", nullptr, true) == 3);
  CHECK(script(":num 1/0\n:cmp beta X\n", nullptr, true) == 2);
  CHECK(script(":num 1/0\n:num (\n:cmp beta X\n", nullptr, true) == 1);
  CHECK(script(":quit\n:num (\n", &out) == 0);
  CHECK(out.find("bye") != std::string::npos);
  CHECK(script(":num Q\r\n", &out) == 0);
  CHECK(out.find("\\r") == std::string::npos);
}

TEST_CASE("scripts are deterministic") {
  std::string text;
  for (const auto& line : kCommands) text += line + "\n";
  text += ":labelcheck builtin\n";
  std::string a, b;
  int ca = script(text, &a), cb = script(text, &b);
  CHECK(ca == cb);
  CHECK(a == b);
  CHECK(std::count(a.begin(), a.end(), '\n') == static_cast<long>(kCommands.size()));
}

TEST_CASE("help lists every verb") {
  std::string h = help_text();
  for (const char* v : {":num", ":cmp", ":st", ":measure", ":ord", ":sur", ":simplest", ":labelcheck",
                        ":assert_order", ":bb", ":help", ":quit"})
    CHECK_MESSAGE(h.find(v) != std::string::npos, v);
}

TEST_SUITE_END();
