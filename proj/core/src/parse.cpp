#include "numerosity/parse.hpp"

#include <cctype>
#include <functional>
#include <optional>

namespace numerosity {

bool operator==(const Ast& a, const Ast& b) {
  if (a.op != b.op || a.text != b.text || a.kids != b.kids) return false;
  if (!a.set || !b.set) return !a.set && !b.set;
  return set_equal(a.set, b.set);
}

namespace {

Ast leaf(std::string op, std::string text = {}) { return Ast{std::move(op), std::move(text), nullptr, {}}; }
Ast node(std::string op, std::vector<Ast> kids) { return Ast{std::move(op), {}, nullptr, std::move(kids)}; }

// Recursive descent over line[pos, end). Positions in errors are offsets
// into the whole line.
class Parser {
 public:
  Parser(const std::string& s, std::size_t begin, std::size_t end) : s_(s), pos_(begin), end_(end) {}

  std::size_t pos() const { return pos_; }
  void ws() {
    while (pos_ < end_ && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    ws();
    return pos_ >= end_;
  }
  void finish() {
    if (!at_end()) fail("end of input");
  }
  char peek() {
    ws();
    return pos_ < end_ ? s_[pos_] : '\0';
  }
  bool accept(const std::string& tok) {
    ws();
    if (s_.compare(pos_, tok.size(), tok) != 0 || pos_ + tok.size() > end_) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(const std::string& tok) {
    if (!accept(tok)) fail("'" + tok + "'");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  std::string ident() {
    ws();
    std::size_t start = pos_;
    while (pos_ < end_ && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::string digits() {
    ws();
    std::size_t start = pos_;
    while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("digits");
    return s_.substr(start, pos_ - start);
  }

  // -?digits(/digits)?, canonicalized
  mpq_class rational() {
    bool neg = accept("-");
    std::string p = digits();
    std::string q = "1";
    if (pos_ < end_ && s_[pos_] == '/') {
      ++pos_;
      q = digits();
    }
    if (mpz_class(q) == 0) fail("nonzero denominator");
    mpq_class v{mpz_class(p), mpz_class(q)};
    v.canonicalize();
    return neg ? mpq_class(-v) : v;
  }

  long integer() {
    mpq_class v = rational();
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) fail("small integer");
    return v.get_num().get_si();
  }

  // ---- numeric expressions ----

  Ast num_sum() {
    Ast l = num_term();
    while (true) {
      if (accept("+"))
        l = node("+", {l, num_term()});
      else if (accept("-"))
        l = node("-", {l, num_term()});
      else
        return l;
    }
  }

  Ast num_term() {
    Ast l = num_unary();
    while (true) {
      if (peek() == '*' && s_.compare(pos_, 2, "*.") != 0) {
        ++pos_;
        l = node("*", {l, num_unary()});
      } else if (accept("/")) {
        l = node("/", {l, num_unary()});
      } else {
        return l;
      }
    }
  }

  Ast num_unary() {
    if (accept("-")) return node("neg", {num_unary()});
    return num_power();
  }

  Ast num_power() {
    Ast b = num_primary();
    if (accept("^")) return node("^", {b, num_unary()});
    return b;
  }

  Ast num_primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Ast a = num_sum();
      expect(")");
      return a;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return leaf("int", digits());
    std::size_t start = pos_;
    std::string id = ident();
    if (id == "alpha" || id == "beta" || id == "beth1" || id == "X") return leaf("gen", id);
    if (id == "w") {
      // w^E reads E as an ordinal; bare w is omega = alpha + 1.
      if (pos_ < end_ && s_[pos_] == '^') {
        ++pos_;
        return node("wpow", {ord_primary()});
      }
      return leaf("w");
    }
    if (id == "num") {
      expect("(");
      Ast a = leaf("num");
      a.set = set_expr();
      expect(")");
      return a;
    }
    pos_ = start;
    fail("number, alpha, beta, beth1, X, w, num(...) or '('");
  }

  // ---- ordinals ----

  Ast ord_sum() {
    Ast l = ord_prod();
    while (true) {
      if (accept("+."))
        l = node("+.", {l, ord_prod()});
      else if (accept("+"))
        l = node("+", {l, ord_prod()});
      else
        return l;
    }
  }

  Ast ord_prod() {
    Ast l = ord_pow();
    while (true) {
      if (accept("*."))
        l = node("*.", {l, ord_pow()});
      else if (accept("*"))
        l = node("*", {l, ord_pow()});
      else
        return l;
    }
  }

  Ast ord_pow() {
    Ast b = ord_primary();
    if (accept("^<>") || accept("^")) return node("^<>", {b, ord_pow()});
    return b;
  }

  Ast ord_primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Ast a = ord_sum();
      expect(")");
      return a;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string d = digits();
      return leaf("int", mpz_class(d).get_str());
    }
    if (accept("w")) return leaf("w");
    fail("natural number, w or '('");
  }

  // ---- surreals ----

  Ast surreal() {
    char c = peek();
    if (c == '+' || c == '-') {
      std::size_t start = pos_;
      while (pos_ < end_ && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      return leaf("signs", s_.substr(start, pos_ - start));
    }
    if (c == '(') {
      ++pos_;
      expect(")");
      return leaf("signs", "");
    }
    std::size_t start = pos_;
    std::string id = ident();
    if (id == "plus") {
      expect("(");
      Ast a = node("plus", {ord_sum()});
      expect(")");
      return a;
    }
    if (id == "add" || id == "mul") {
      expect("(");
      Ast x = surreal();
      expect(",");
      Ast y = surreal();
      expect(")");
      return node(id, {x, y});
    }
    if (id == "neg" || id == "val") {
      expect("(");
      Ast x = surreal();
      expect(")");
      return node(id, {x});
    }
    if (id == "dyadic") {
      expect("(");
      Ast a = leaf("dyadic", rational().get_str());
      expect(")");
      return a;
    }
    pos_ = start;
    fail("sign string, (), plus(...), add, mul, neg, val or dyadic");
  }

  // ---- sets ----

  SetExpr set_expr() {
    SetExpr l = set_atom();
    while (true) {
      if (accept("|"))
        l = sets::union_(l, set_atom());
      else if (accept("&"))
        l = sets::inter(l, set_atom());
      else if (accept("\\"))
        l = sets::diff(l, set_atom());
      else if (accept("><"))
        l = sets::prod(l, set_atom());
      else
        return l;
    }
  }

  SetExpr set_atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      SetExpr a = set_expr();
      expect(")");
      return a;
    }
    if (c == '[') {
      ++pos_;
      expect("0");
      expect(",");
      expect("1");
      expect("]");
      return sets::unit01();
    }
    std::size_t start = pos_;
    std::string id = ident();
    if (id == "N") return accept("+") ? sets::nat_pos() : sets::nat_all();
    if (id == "Q") {
      if (accept("+")) return sets::q_pos();
      if (accept("(")) {
        mpq_class p = rational();
        expect(",");
        mpq_class q = rational();
        expect("]");
        return sets::q_interval(p, q);
      }
      return sets::q_all();
    }
    if (id == "R") {
      if (accept("+")) return sets::r_pos();
      if (accept("[")) {
        mpq_class p = rational();
        expect(",");
        mpq_class q = rational();
        expect(")");
        return sets::r_interval(p, q);
      }
      return sets::r_all();
    }
    if (id == "fin") {
      expect("{");
      std::vector<mpq_class> elems;
      if (!accept("}")) {
        do elems.push_back(rational());
        while (accept(","));
        expect("}");
      }
      return sets::fin(std::move(elems));
    }
    if (id == "mod") {
      expect("(");
      long p = integer();
      expect(",");
      long i = integer();
      expect(")");
      return sets::mod(p, i);
    }
    if (id == "pow") {
      expect("(");
      long p = integer();
      expect(")");
      return sets::pow(p);
    }
    if (id == "Pfin") {
      expect("(");
      expect("N");
      expect(")");
      return sets::pfin_n();
    }
    if (id == "shift") {
      expect("(");
      mpq_class q = rational();
      expect(",");
      SetExpr e = set_expr();
      expect(")");
      return sets::shift(q, e);
    }
    if (id == "maps") {
      expect("(");
      long k = integer();
      expect(",");
      SetExpr e = set_expr();
      expect(")");
      return sets::maps(k, e);
    }
    pos_ = start;
    fail("set expression");
  }

  Ast rational_list() {
    Ast l = node("list", {});
    char c = peek();
    if (c == '|' || c == '}') return l;
    do l.kids.push_back(leaf("rat", rational().get_str()));
    while (accept(","));
    return l;
  }

 private:
  const std::string& s_;
  std::size_t pos_;
  std::size_t end_;
};

// Runs one whole-range parse, keeping ParseError for the caller.
template <class F>
auto whole(const std::string& s, std::size_t b, std::size_t e, F f) {
  Parser p(s, b, e);
  auto out = f(p);
  p.finish();
  return out;
}

Operand parse_operand(const std::string& s, std::size_t b, std::size_t e,
                      const std::vector<Lang>& langs) {
  std::optional<ParseError> best;
  for (Lang l : langs) {
    try {
      switch (l) {
        case Lang::Num: return {l, whole(s, b, e, [](Parser& p) { return p.num_sum(); })};
        case Lang::Ord: return {l, whole(s, b, e, [](Parser& p) { return p.ord_sum(); })};
        case Lang::Sur: return {l, whole(s, b, e, [](Parser& p) { return p.surreal(); })};
        case Lang::Set: {
          Ast a = leaf("set");
          a.set = whole(s, b, e, [](Parser& p) { return p.set_expr(); });
          return {l, a};
        }
        default: break;
      }
    } catch (const ParseError& err) {
      if (!best || err.position() > best->position()) best = err;
    }
  }
  throw *best;
}

// Offsets of top-level separators: commas, or whitespace runs when there
// is no comma.
std::vector<std::size_t> split_points(const std::string& s, std::size_t b, std::size_t e, bool& comma) {
  std::vector<std::size_t> commas, spaces;
  int depth = 0;
  for (std::size_t i = b; i < e; ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth != 0) continue;
    if (c == ',') commas.push_back(i);
    if (std::isspace(static_cast<unsigned char>(c)) && i > b &&
        !std::isspace(static_cast<unsigned char>(s[i - 1])))
      spaces.push_back(i);
  }
  comma = !commas.empty();
  return comma ? commas : spaces;
}

// Two operands of one language, tried language by language.
std::vector<Operand> parse_pair(const std::string& s, std::size_t b, std::size_t e,
                                const std::vector<Lang>& langs) {
  bool comma = false;
  auto points = split_points(s, b, e, comma);
  std::optional<ParseError> best;
  for (Lang l : langs)
    for (std::size_t cut : points) {
      try {
        Operand x = parse_operand(s, b, cut, {l});
        Operand y = parse_operand(s, cut + (comma ? 1 : 0), e, {l});
        return {x, y};
      } catch (const ParseError& err) {
        if (!best || err.position() > best->position()) best = err;
      }
    }
  if (!best) throw ParseError(e, "two operands");
  throw *best;
}

bool compound(const Ast& a) { return !a.kids.empty() && a.op != "wpow" && a.op != "plus" &&
                                     a.op != "add" && a.op != "mul" && a.op != "neg" && a.op != "val"; }

std::string print_num(const Ast& a);
std::string print_ord(const Ast& a);

std::string wrap(const Ast& a, const std::function<std::string(const Ast&)>& f) {
  return compound(a) || (a.op == "neg" && !a.kids.empty()) ? "(" + f(a) + ")" : f(a);
}

std::string print_num(const Ast& a) {
  if (a.op == "int" || a.op == "gen" || a.op == "rat") return a.text;
  if (a.op == "w") return "w";
  if (a.op == "num") return "num(" + to_string(a.set) + ")";
  if (a.op == "wpow") {
    const Ast& k = a.kids[0];
    return "w^" + (k.kids.empty() ? print_ord(k) : "(" + print_ord(k) + ")");
  }
  if (a.op == "neg") return "-" + wrap(a.kids[0], print_num);
  std::string sep = a.op == "+" || a.op == "-" ? " " + a.op + " " : a.op;
  return wrap(a.kids[0], print_num) + sep + wrap(a.kids[1], print_num);
}

std::string print_ord(const Ast& a) {
  if (a.op == "int") return a.text;
  if (a.op == "w") return "w";
  return wrap(a.kids[0], print_ord) + " " + a.op + " " + wrap(a.kids[1], print_ord);
}

std::string print_sur(const Ast& a) {
  if (a.op == "signs") return a.text.empty() ? "()" : a.text;
  if (a.op == "plus") return "plus(" + print_ord(a.kids[0]) + ")";
  if (a.op == "dyadic") return "dyadic(" + a.text + ")";
  std::string s = a.op + "(" + print_sur(a.kids[0]);
  if (a.kids.size() > 1) s += ", " + print_sur(a.kids[1]);
  return s + ")";
}

const char* verb_name(Verb v) {
  switch (v) {
    case Verb::Num: return "num";
    case Verb::Cmp: return "cmp";
    case Verb::St: return "st";
    case Verb::Measure: return "measure";
    case Verb::Ord: return "ord";
    case Verb::Sur: return "sur";
    case Verb::Simplest: return "simplest";
    case Verb::LabelCheck: return "labelcheck";
    case Verb::AssertOrder: return "assert_order";
    case Verb::ModeBB: return "bb";
    case Verb::Help: return "help";
    case Verb::Quit: return "quit";
  }
  return "?";
}

}  // namespace

std::string print(const Operand& o) {
  switch (o.lang) {
    case Lang::Num: return print_num(o.ast);
    case Lang::Ord: return print_ord(o.ast);
    case Lang::Sur: return print_sur(o.ast);
    case Lang::Set: return to_string(o.ast.set);
    case Lang::Schema: return "alpha^k";
    case Lang::List: {
      std::string s;
      for (std::size_t i = 0; i < o.ast.kids.size(); ++i) s += (i ? ", " : "") + o.ast.kids[i].text;
      return s;
    }
  }
  return "?";
}

std::string print(const Command& c) {
  std::string s = std::string(":") + verb_name(c.verb);
  switch (c.verb) {
    case Verb::Cmp:
    case Verb::Measure: return s + " " + print(c.args[0]) + ", " + print(c.args[1]);
    case Verb::Simplest: {
      std::string l = print(c.args[0]), r = print(c.args[1]);
      return s + " {" + l + (l.empty() ? "| " : " | ") + r + (r.empty() ? "}" : "}");
    }
    case Verb::AssertOrder: return s + " " + print(c.args[0]) + " < " + print(c.args[1]);
    default: break;
  }
  for (const auto& a : c.args) s += " " + print(a);
  for (const auto& w : c.words) s += " " + w;
  return s;
}

Command parse_command(const std::string& line) {
  Parser p(line, 0, line.size());
  p.expect(":");
  std::size_t vpos = p.pos();
  std::string v = p.ident();
  std::size_t b = p.pos(), e = line.size();
  Command c{};
  if (v == "num" || v == "st") {
    c.verb = v == "num" ? Verb::Num : Verb::St;
    c.args.push_back(parse_operand(line, b, e, {Lang::Set, Lang::Num}));
  } else if (v == "cmp") {
    c.verb = Verb::Cmp;
    c.args = parse_pair(line, b, e, {Lang::Sur, Lang::Num, Lang::Ord});
  } else if (v == "measure") {
    c.verb = Verb::Measure;
    bool comma = false;
    auto points = split_points(line, b, e, comma);
    if (!comma) throw ParseError(e, "',' between set and gamma");
    c.args.push_back(parse_operand(line, b, points[0], {Lang::Set}));
    c.args.push_back(parse_operand(line, points[0] + 1, e, {Lang::Num}));
  } else if (v == "ord") {
    c.verb = Verb::Ord;
    c.args.push_back(parse_operand(line, b, e, {Lang::Ord}));
  } else if (v == "sur") {
    c.verb = Verb::Sur;
    c.args.push_back(parse_operand(line, b, e, {Lang::Sur}));
  } else if (v == "simplest") {
    c.verb = Verb::Simplest;
    p.expect("{");
    c.args.push_back({Lang::List, p.rational_list()});
    p.expect("|");
    c.args.push_back({Lang::List, p.rational_list()});
    p.expect("}");
    p.finish();
  } else if (v == "labelcheck") {
    c.verb = Verb::LabelCheck;
    std::string rest = line.substr(b);
    std::size_t i = 0;
    while (i < rest.size()) {
      while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
      std::size_t j = i;
      while (j < rest.size() && !std::isspace(static_cast<unsigned char>(rest[j]))) ++j;
      if (j > i) c.words.push_back(rest.substr(i, j - i));
      i = j;
    }
    if (c.words.empty()) throw ParseError(e, "instance file or built-in name");
  } else if (v == "assert_order") {
    c.verb = Verb::AssertOrder;
    if (p.accept("alpha^k")) {
      c.args.push_back({Lang::Schema, leaf("schema")});
    } else {
      c.args.push_back({Lang::Num, p.num_sum()});
    }
    p.expect("<");
    c.args.push_back({Lang::Num, p.num_sum()});
    p.finish();
  } else if (v == "bb") {
    c.verb = Verb::ModeBB;
    std::string w = p.ident();
    if (w != "on" && w != "off") p.fail("on or off");
    p.finish();
    c.words.push_back(w);
  } else if (v == "help" || v == "quit") {
    c.verb = v == "help" ? Verb::Help : Verb::Quit;
    p.finish();
  } else {
    throw ParseError(vpos, "command name");
  }
  return c;
}

Ast parse_numexpr(const std::string& text) { return parse_operand(text, 0, text.size(), {Lang::Num}).ast; }
Ast parse_ordexpr(const std::string& text) { return parse_operand(text, 0, text.size(), {Lang::Ord}).ast; }
Ast parse_surreal(const std::string& text) { return parse_operand(text, 0, text.size(), {Lang::Sur}).ast; }
SetExpr parse_setexpr(const std::string& text) {
  return parse_operand(text, 0, text.size(), {Lang::Set}).ast.set;
}

// ---- evaluation ----------------------------------------------------------

NumExpr eval_num(const Ast& a) {
  if (a.op == "int" || a.op == "rat") return NumExpr(mpq_class(a.text));
  if (a.op == "gen") {
    if (a.text == "alpha") return NumExpr::alpha();
    if (a.text == "beta") return NumExpr::beta();
    if (a.text == "beth1") return NumExpr::beth1();
    return NumExpr::x2w();
  }
  if (a.op == "w") return NumExpr::omega();
  if (a.op == "wpow") return embed(Ordinal::omega_pow(eval_ord(a.kids[0])));
  if (a.op == "num") return num(a.set);
  if (a.op == "neg") return nf_neg(eval_num(a.kids[0]));
  NumExpr l = eval_num(a.kids[0]);
  NumExpr r = eval_num(a.kids[1]);
  if (a.op == "+") return l + r;
  if (a.op == "-") return l - r;
  if (a.op == "*") return l * r;
  if (a.op == "/") return l / r;
  if (a.op == "^") return nf_pow(l, r);
  throw std::logic_error("unknown numeric node " + a.op);
}

Ordinal eval_ord(const Ast& a) {
  if (a.op == "int") return Ordinal::natural(mpz_class(a.text));
  if (a.op == "w") return Ordinal::omega();
  Ordinal l = eval_ord(a.kids[0]);
  Ordinal r = eval_ord(a.kids[1]);
  if (a.op == "+") return natural_add(l, r);
  if (a.op == "*") return natural_mul(l, r);
  if (a.op == "+.") return cantor_add(l, r);
  if (a.op == "*.") return cantor_mul(l, r);
  if (a.op == "^<>") return ord_exp(l, r);
  throw std::logic_error("unknown ordinal node " + a.op);
}

bool is_surreal_value(const Ast& a) { return a.op == "val"; }

SignExpansion eval_sur(const Ast& a) {
  if (a.op == "signs") return SignExpansion::finite(a.text);
  if (a.op == "plus") return SignExpansion::plus(eval_ord(a.kids[0]));
  if (a.op == "dyadic") {
    mpq_class d(a.text);
    if (!is_dyadic(d)) throw Unsupported(a.text + " is not dyadic");
    return se_from_dyadic(d);
  }
  if (a.op == "neg") return s_neg(eval_sur(a.kids[0]));
  if (a.op == "add") return s_add(eval_sur(a.kids[0]), eval_sur(a.kids[1]));
  if (a.op == "mul") return s_mul(eval_sur(a.kids[0]), eval_sur(a.kids[1]));
  if (a.op == "val") throw Unsupported("val(...) is a dyadic, not an expansion");
  throw std::logic_error("unknown surreal node " + a.op);
}

mpq_class eval_sur_value(const Ast& a) {
  if (a.op == "val") return se_value(eval_sur(a.kids[0]));
  return se_value(eval_sur(a));
}

mpq_class eval_rational(const Ast& a) { return mpq_class(a.text); }

}  // namespace numerosity
