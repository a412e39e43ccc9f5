#include "numerosity/repl.hpp"

#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "numerosity/labellab.hpp"

namespace numerosity {

namespace {

EvalResult ok(std::string kind, std::string value, std::string status = "exact") {
  return {std::move(kind), std::move(value), std::move(status), 0};
}

std::string status_of(const StdPart& p) {
  switch (p.kind) {
    case StdPart::Kind::Finite: return "exact";
    case StdPart::Kind::Unknown: return "unknown";
    default: return "asymptotic";
  }
}

std::string show(const NumExpr& x, const Session& s) {
  return to_string(s.table.bb_mode() ? bb_display(apply_bb(x)) : x);
}

NumExpr operand_num(const Operand& o) {
  return o.lang == Lang::Set ? num(o.ast.set) : eval_num(o.ast);
}

Monomial single_monomial(const NumExpr& x, const std::string& side) {
  if (!x.is_polynomial() || x.num().size() != 1 || x.num().begin()->second != 1)
    throw Unsupported(side + " of a declared order must be a single monomial");
  return x.num().begin()->first;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceFormatError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PivotalTree load_tree(const std::string& target) {
  if (target == "builtin") return builtin_universe();
  if (target == "small") return small_universe();
  if (target == "counter:succ") return counterexample(Counterexample::NonInjectiveSucc);
  if (target == "counter:iterate") return counterexample(Counterexample::NoIterate);
  if (target == "counter:member") return counterexample(Counterexample::MemberNotBelow);
  return parse_instance(read_file(target));
}

EvalResult label_check(const std::vector<std::string>& words) {
  PivotalTree t = load_tree(words[0]);
  std::string check = words.size() > 1 ? words[1] : "all";
  auto axioms = [&] {
    std::mt19937_64 rng(1);
    return check_counting_axioms(t, random_pairs(t, 50, rng));
  };
  if (check == "label") {
    if (words.size() != 3) throw Unsupported("label needs one element");
    return ok("report", to_string(label(t, parse_element(words[2]))));
  }
  if (words.size() > 2) throw Unsupported("unexpected argument " + words[2]);
  if (check == "pivotal") return ok("report", to_json(validate_pivotal(t)));
  if (check == "labeltree") return ok("report", to_json(validate_labeltree(t)));
  if (check == "axioms") return ok("report", to_json(axioms()));
  if (check != "all") throw Unsupported("unknown check " + check);
  Report p = validate_pivotal(t);
  std::string out = "[" + to_json(p);
  // Label-tree identities presuppose a pivotal tree.
  if (p.ok()) out += "," + to_json(validate_labeltree(t)) + "," + to_json(axioms());
  return ok("report", out + "]");
}

EvalResult eval_cmp(const Command& c, const Session& s) {
  const Operand& a = c.args[0];
  const Operand& b = c.args[1];
  if (a.lang == Lang::Sur)
    return ok("surreal", to_string(se_cmp(eval_sur(a.ast), eval_sur(b.ast))));
  if (a.lang == Lang::Ord)
    return ok("ordinal", to_string(ord_cmp(eval_ord(a.ast), eval_ord(b.ast))));
  CmpResult r = nf_cmp(operand_num(a), operand_num(b), s.table);
  if (!r.decided()) {
    EvalResult e = ok("numexpr", "Unknown(" + r.reason + ")", "unknown");
    if (s.strict_cmp) e.exit_code = 3;
    return e;
  }
  return ok("numexpr", to_string(r.kind));
}

}  // namespace

std::string help_text() {
  return ":num S|E          numerosity of a set or canonical form of an expression\n"
         ":cmp A, B         compare numbers, ordinals or sign expansions\n"
         ":st E             standard part\n"
         ":measure S, g     gamma-measure of a set\n"
         ":ord O            ordinal arithmetic (+ * natural, +. *. Cantor, ^<> power)\n"
         ":sur X            sign expansions: add(x,y) mul(x,y) neg(x) val(x) dyadic(p/q)\n"
         ":simplest {L | R} earliest-born number between two rational lists\n"
         ":labelcheck T [pivotal|labeltree|axioms|all|label E]\n"
         "                  T is a file or builtin, small, counter:succ|iterate|member\n"
         ":assert_order L < R   declare a monomial order (L may be alpha^k)\n"
         ":bb on|off        beth1 = beta + X rewriting\n"
         ":help  :quit";
}

EvalResult eval(const Command& c, Session& s) {
  try {
    switch (c.verb) {
      case Verb::Num: return ok("numexpr", show(operand_num(c.args[0]), s));
      case Verb::Cmp: return eval_cmp(c, s);
      case Verb::St: {
        StdPart p = standard_part(operand_num(c.args[0]), s.table);
        return ok("numexpr", to_string(p), status_of(p));
      }
      case Verb::Measure: {
        StdPart p = measure(c.args[0].ast.set, eval_num(c.args[1].ast), s.table);
        return ok("numexpr", to_string(p), status_of(p));
      }
      case Verb::Ord: return ok("ordinal", to_string(eval_ord(c.args[0].ast)));
      case Verb::Sur: {
        const Ast& a = c.args[0].ast;
        if (is_surreal_value(a)) return ok("surreal", dyadic_to_string(eval_sur_value(a)));
        return ok("surreal", to_string(eval_sur(a)));
      }
      case Verb::Simplest: {
        std::vector<mpq_class> l, r;
        for (const auto& k : c.args[0].ast.kids) l.push_back(eval_rational(k));
        for (const auto& k : c.args[1].ast.kids) r.push_back(eval_rational(k));
        return ok("surreal", to_string(simplest(l, r)));
      }
      case Verb::LabelCheck: return label_check(c.words);
      case Verb::AssertOrder: {
        DeclaredOrder d;
        if (c.args[0].lang == Lang::Schema) {
          d.lhs = Monomial::gen(Gen::Alpha);
          d.alpha_schema = true;
        } else {
          d.lhs = single_monomial(eval_num(c.args[0].ast), "left side");
        }
        d.rhs = single_monomial(eval_num(c.args[1].ast), "right side");
        s.table = s.table.with_order(d);
        return ok("report", "declared " + print(c.args[0]) + " < " + print(c.args[1]));
      }
      case Verb::ModeBB:
        s.table = s.table.with_bb_mode(c.words[0] == "on");
        return ok("report", "bb " + c.words[0]);
      case Verb::Help: return ok("report", help_text());
      case Verb::Quit: s.quit = true; return ok("report", "bye");
    }
  } catch (const Error& e) {
    return {"error", e.kind() + ": " + e.what(), "error", 2};
  } catch (const std::invalid_argument& e) {
    return {"error", std::string("InvalidArgument: ") + e.what(), "error", 2};
  } catch (const std::domain_error& e) {
    return {"error", std::string("InvalidArgument: ") + e.what(), "error", 2};
  }
  return {"error", "unhandled command", "error", 2};
}

EvalResult eval_line(const std::string& line, Session& s) {
  std::size_t first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos || line[first] == '#') return {};
  Command c;
  try {
    c = parse_command(line);
  } catch (const ParseError& e) {
    return {"error", e.kind() + ": " + e.what(), "error", 1};
  } catch (const Error& e) {
    // Set constructors validate while parsing.
    return {"error", e.kind() + ": " + e.what(), "error", 2};
  }
  return eval(c, s);
}

std::string to_json_line(const std::string& input, const EvalResult& r) {
  nlohmann::json j = {{"input", input}, {"kind", r.kind}, {"value", r.value}, {"status", r.status}};
  return j.dump();
}

int run_script(std::istream& in, std::ostream& out, Session& s) {
  int code = 0;
  std::string line;
  while (!s.quit && std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    EvalResult r = eval_line(line, s);
    if (r.kind.empty()) continue;
    out << to_json_line(line, r) << '\n';
    if (r.exit_code != 0 && (code == 0 || r.exit_code < code)) code = r.exit_code;
  }
  return code;
}

}  // namespace numerosity
