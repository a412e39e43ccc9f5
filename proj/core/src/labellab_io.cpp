#include <cctype>
#include <sstream>

#include "numerosity/labellab.hpp"

namespace numerosity {

namespace {

class ElementReader {
 public:
  explicit ElementReader(const std::string& s) : s_(s) {}

  Element read() {
    Element e = element();
    if (pos_ != s_.size()) fail("end of element");
    return e;
  }

 private:
  Element element() {
    if (pos_ < s_.size() && s_[pos_] == '{') {
      ++pos_;
      std::vector<Element> members;
      if (peek() == '}') {
        ++pos_;
        return Element::make_set({});
      }
      while (true) {
        members.push_back(element());
        char c = peek();
        ++pos_;
        if (c == '}') break;
        if (c != ',') fail("',' or '}'");
      }
      return Element::make_set(std::move(members));
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("atom or '{'");
    return Element::make_atom(std::stol(s_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw InstanceFormatError("element '" + s_ + "' at " + std::to_string(pos_) + ": expected " + what);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(const std::string& text) { return ElementReader(text).read(); }

PivotalTree parse_instance(const std::string& text) {
  PivotalTree t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw InstanceFormatError("line " + std::to_string(lineno) + ": " + msg);
  };
  auto known = [&](const std::string& tok) {
    Element e = parse_element(tok);
    if (!t.has(e)) fail("unknown element " + tok);
    return e;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string verb;
    if (!(ls >> verb)) continue;
    std::vector<std::string> args;
    for (std::string a; ls >> a;) args.push_back(a);
    if (verb == "mode") {
      if (args.size() != 1) fail("mode takes one argument");
      if (args[0] == "literal")
        t.set_mode(MembershipMode::Literal);
      else if (args[0] == "grulla")
        t.set_mode(MembershipMode::Grulla);
      else
        fail("unknown mode " + args[0]);
    } else if (verb == "atoms" || verb == "elem") {
      for (const auto& a : args) {
        Element e = parse_element(a);
        if (verb == "atoms" && !e.atom) fail(a + " is not an atom");
        t.add(e);
      }
    } else if (verb == "le" || verb == "succ") {
      if (args.size() != 2) fail(verb + " takes two elements");
      Element a = known(args[0]);
      if (verb == "le" && args[1] == "*") {
        for (int i = 0; i < t.size(); ++i) t.declare_le(a, t.at(i));
      } else if (verb == "le") {
        t.declare_le(a, known(args[1]));
      } else {
        t.declare_succ(a, known(args[1]));
      }
    } else {
      fail("unknown directive " + verb);
    }
  }
  return t;
}

std::string print_instance(const PivotalTree& t) {
  std::ostringstream out;
  out << "mode " << (t.mode() == MembershipMode::Literal ? "literal" : "grulla") << '\n';
  for (int i = 0; i < t.size(); ++i) out << "elem " << to_string(t.at(i)) << '\n';
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < t.size(); ++b)
      if (a != b && t.le(a, b)) out << "le " << to_string(t.at(a)) << ' ' << to_string(t.at(b)) << '\n';
  for (const auto& [a, b] : t.succ())
    out << "succ " << to_string(t.at(a)) << ' ' << to_string(t.at(b)) << '\n';
  return out.str();
}

}  // namespace numerosity
