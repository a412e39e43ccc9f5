#pragma once

#include <string>
#include <vector>

#include "numerosity/numexpr.hpp"
#include "numerosity/ordinal.hpp"
#include "numerosity/setexpr.hpp"
#include "numerosity/surreal.hpp"

namespace numerosity {

enum class Lang { Num, Ord, Sur, Set, List, Schema };

// Expression tree shared by the numeric, ordinal and surreal languages.
// Leaves carry their text ("alpha", "3", "+-"); set payloads sit in `set`.
struct Ast {
  std::string op;
  std::string text;
  SetExpr set;
  std::vector<Ast> kids;
};

bool operator==(const Ast& a, const Ast& b);
inline bool operator!=(const Ast& a, const Ast& b) { return !(a == b); }

struct Operand {
  Lang lang;
  Ast ast;
  bool operator==(const Operand& o) const { return lang == o.lang && ast == o.ast; }
};

enum class Verb { Num, Cmp, St, Measure, Ord, Sur, Simplest, LabelCheck, AssertOrder, ModeBB, Help, Quit };

struct Command {
  Verb verb;
  std::vector<Operand> args;
  std::vector<std::string> words;  // labelcheck target and check, bb switch
  bool operator==(const Command& o) const {
    return verb == o.verb && args == o.args && words == o.words;
  }
};

// Throws ParseError with the offset into `line`.
Command parse_command(const std::string& line);
std::string print(const Command& c);
std::string print(const Operand& o);

// Single-language entry points; the whole text must be consumed.
Ast parse_numexpr(const std::string& text);
Ast parse_ordexpr(const std::string& text);
Ast parse_surreal(const std::string& text);
SetExpr parse_setexpr(const std::string& text);

NumExpr eval_num(const Ast& a);
Ordinal eval_ord(const Ast& a);
SignExpansion eval_sur(const Ast& a);
// val(...) yields a dyadic rather than an expansion.
bool is_surreal_value(const Ast& a);
mpq_class eval_sur_value(const Ast& a);
mpq_class eval_rational(const Ast& a);

}  // namespace numerosity
