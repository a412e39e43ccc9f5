#pragma once

#include <iosfwd>
#include <string>

#include "numerosity/numexpr.hpp"
#include "numerosity/parse.hpp"

namespace numerosity {

struct Session {
  AxiomTable table;
  bool strict_cmp = false;
  bool quit = false;
};

struct EvalResult {
  std::string kind;    // numexpr | ordinal | surreal | report | error
  std::string value;   // canonical text, or "Kind: message" for errors
  std::string status;  // exact | asymptotic | unknown | error
  int exit_code = 0;   // as for run_script
};

// Never throws for library errors; they come back with status "error".
EvalResult eval(const Command& c, Session& s);
// Parses and evaluates one line. Blank and '#' lines give an empty kind.
EvalResult eval_line(const std::string& line, Session& s);

std::string to_json_line(const std::string& input, const EvalResult& r);

// Exit codes: 0 ok, 1 parse error, 2 evaluation error, 3 undecided
// comparison in strict mode. The lowest nonzero code seen wins.
int run_script(std::istream& in, std::ostream& out, Session& s);

std::string help_text();

}  // namespace numerosity
