#include "luk/theory_io.hpp"

#include <fstream>
#include <sstream>

namespace luk {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Theory parse_theory_text(const std::string& text, const std::string& label) {
  Theory t;
  t.set_label(label);
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    try {
      t.add(parse_formula(s));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(),
                       e.offset());
    }
  }
  return t;
}

Theory read_theory_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open theory file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_theory_text(buf.str(), path);
}

std::string render_theory(const Theory& t) {
  std::string out;
  for (const FormulaPtr& ax : t.axioms()) {
    out += render_formula(ax);
    out += '\n';
  }
  return out;
}

std::string render_instance(const DefInstance& inst) {
  return "DEF " + render_formula(inst.formula) + " | " + inst.var.name() +
         " | " + to_string(inst.value);
}

DefInstance parse_instance(const std::string& line) {
  std::string s = strip(line);
  if (s.rfind("DEF ", 0) != 0)
    throw std::runtime_error("DEF record must start with 'DEF '");
  s = s.substr(4);
  std::size_t p1 = s.find('|');
  std::size_t p2 = s.rfind('|');
  if (p1 == std::string::npos || p2 == p1)
    throw std::runtime_error("DEF record needs two '|' separators");

  FormulaPtr f = parse_formula(strip(s.substr(0, p1)));
  std::string var_text = strip(s.substr(p1 + 1, p2 - p1 - 1));
  std::string val_text = strip(s.substr(p2 + 1));

  Variable v = var_text.rfind("q<", 0) == 0
                   ? parse_formula(var_text)->variable()
                   : Variable::named(var_text);
  auto value = parse_rational(val_text);
  if (!value || !in_unit_interval(*value))
    throw std::runtime_error("DEF record value must be a rational in [0,1]");
  return {f, v, *value};
}

}  // namespace luk
