#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "numerosity/repl.hpp"

using namespace numerosity;

int main(int argc, char** argv) {
  CLI::App app{"Exact numerosity calculator"};
  std::string script;
  bool strict = false, bb = false, json = false;
  app.add_option("--script", script, "Run the commands in a file, one JSON line per result");
  app.add_flag("--strict-cmp", strict, "Exit with 3 when a comparison is undecided");
  app.add_flag("--bb", bb, "Start with beth1 = beta + X rewriting on");
  app.add_flag("--json", json, "Print JSON lines in interactive mode too");
  CLI11_PARSE(app, argc, argv);

  Session s;
  s.strict_cmp = strict;
  s.table = s.table.with_bb_mode(bb);

  if (!script.empty()) {
    std::ifstream in(script);
    if (!in) {
      std::cerr << "cannot open " << script << '\n';
      return 2;
    }
    return run_script(in, std::cout, s);
  }

  int code = 0;
  std::string line;
  while (!s.quit) {
    if (!json) std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    EvalResult r = eval_line(line, s);
    if (r.kind.empty()) continue;
    if (json) {
      std::cout << to_json_line(line, r) << '\n';
    } else {
      std::cout << r.value;
      if (r.status != "exact") std::cout << "  [" << r.status << "]";
      std::cout << '\n';
    }
    if (r.exit_code != 0 && (code == 0 || r.exit_code < code)) code = r.exit_code;
  }
  // Interactive sessions only report failure when driven non-interactively.
  return json ? code : 0;
}
