#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "lagcob/diagram.hpp"

namespace lagcob {

// Line-oriented diagram format, version header "lagdiag 1":
//   crossing <id> over <0|1> slots <arc><+|-> <arc><+|-> <arc><+|-> <arc><+|->
//   loop <arc>
//   place <faceref> in <faceref>
//   area <faceref> <rational>[(+|-)<rational>eps]
// faceref: outer | left(<arc>) | right(<arc>). '#' starts a comment line.

namespace ioutil {

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

[[noreturn]] inline void perr(int lineno, const std::string& msg) {
  fail(Errc::ParseError, "line " + std::to_string(lineno) + ": " + msg);
}

inline Rational parse_rational(const std::string& s, int lineno) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    perr(lineno, "bad rational '" + s + "'");
  }
}

inline Area parse_area(const std::string& s, int lineno) {
  size_t e = s.find("eps");
  if (e == std::string::npos) return Area(parse_rational(s, lineno));
  if (e + 3 != s.size()) perr(lineno, "bad area '" + s + "'");
  std::string body = s.substr(0, e);
  // split at the sign separating standard and eps parts (not a leading sign,
  // not the sign inside a previously seen token).
  for (size_t i = 1; i < body.size(); ++i) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '/' && isdigit(body[i - 1])) {
      Rational std_part = parse_rational(body.substr(0, i), lineno);
      Rational eps = parse_rational(body[i] == '+' ? body.substr(i + 1) : body.substr(i), lineno);
      return Area(std_part, eps);
    }
  }
  return Area(Rational(0), parse_rational(body, lineno));
}

inline FaceRef parse_faceref(const std::string& s, int lineno) {
  if (s == "outer") return FaceRef::Outer();
  bool left = s.rfind("left(", 0) == 0;
  bool right = s.rfind("right(", 0) == 0;
  if ((!left && !right) || s.back() != ')') perr(lineno, "bad face reference '" + s + "'");
  std::string arc = s.substr(left ? 5 : 6);
  arc.pop_back();
  return left ? FaceRef::L(arc) : FaceRef::R(arc);
}

inline std::string fmt_area(const Area& a) { return a.str(); }

}  // namespace ioutil

inline DiagramSpec parse_diagram_spec(const std::string& text) {
  using namespace ioutil;
  DiagramSpec spec;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "lagdiag" || tok[1] != "1")
        perr(lineno, "expected header 'lagdiag 1'");
      header = true;
      continue;
    }
    if (tok[0] == "crossing") {
      if (tok.size() != 9 || tok[2] != "over" || tok[4] != "slots")
        perr(lineno, "expected: crossing <id> over <0|1> slots <end> <end> <end> <end>");
      CrossingSpec c;
      c.id = tok[1];
      if (tok[3] != "0" && tok[3] != "1") perr(lineno, "over parity must be 0 or 1");
      c.over_parity = tok[3] == "1";
      for (int k = 0; k < 4; ++k) {
        std::string s = tok[5 + k];
        if (s.size() < 2 || (s.back() != '+' && s.back() != '-'))
          perr(lineno, "arc end must be <name>+ or <name>-");
        c.slots[k] = ArcEnd{s.substr(0, s.size() - 1), s.back() == '+'};
      }
      spec.crossings.push_back(std::move(c));
    } else if (tok[0] == "loop") {
      if (tok.size() != 2) perr(lineno, "expected: loop <arc>");
      spec.loops.push_back({tok[1]});
    } else if (tok[0] == "place") {
      if (tok.size() != 4 || tok[2] != "in") perr(lineno, "expected: place <faceref> in <faceref>");
      spec.places.push_back({parse_faceref(tok[1], lineno), parse_faceref(tok[3], lineno)});
    } else if (tok[0] == "area") {
      if (tok.size() != 3) perr(lineno, "expected: area <faceref> <value>");
      spec.areas.push_back({parse_faceref(tok[1], lineno), parse_area(tok[2], lineno)});
    } else {
      perr(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!header) fail(Errc::ParseError, "empty input; expected header 'lagdiag 1'");
  return spec;
}

inline Diagram parse_diagram(const std::string& text) {
  return Diagram::build(parse_diagram_spec(text));
}

// Canonical form: arcs renamed a0.. in first-mention order, crossings c0..,
// faces witnessed by their minimal boundary dart.
inline std::string print_diagram(const Diagram& d) {
  DiagramSpec s = d.export_spec();
  std::map<std::string, std::string> rename;
  auto nm = [&](const std::string& old) -> const std::string& {
    auto [it, fresh] = rename.try_emplace(old, "a" + std::to_string(rename.size()));
    return it->second;
  };
  // First-mention order: crossing slots, then loops (matches build()).
  for (auto& c : s.crossings)
    for (auto& e : c.slots) nm(e.arc);
  for (auto& l : s.loops) nm(l.id);

  auto ref = [&](const FaceRef& r) {
    if (r.outer) return std::string("outer");
    return (r.side == Side::Left ? "left(" : "right(") + rename.at(r.arc) + ")";
  };
  std::ostringstream os;
  os << "lagdiag 1\n";
  int ci = 0;
  for (const auto& c : s.crossings) {
    os << "crossing c" << ci++ << " over " << c.over_parity << " slots";
    for (const auto& e : c.slots) os << ' ' << rename.at(e.arc) << (e.tail ? '+' : '-');
    os << '\n';
  }
  for (const auto& l : s.loops) os << "loop " << rename.at(l.id) << '\n';
  for (const auto& p : s.places) os << "place " << ref(p.own) << " in " << ref(p.host) << '\n';
  for (const auto& a : s.areas)
    os << "area " << ref(a.face) << ' ' << ioutil::fmt_area(a.area) << '\n';
  return os.str();
}

}  // namespace lagcob
