#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "luk/formula.hpp"

namespace luk {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// ASCII grammar, loosest to tightest:
//   impl    := lat ('->' impl | '<->' lat)?         -> right-assoc, <-> non-assoc
//   lat     := strand (('/\' | '\/') strand)*       left-assoc
//   strand  := unary (('&' | '(+)') unary)*         left-assoc
//   unary   := INT '*' unary | neg ('^' INT)*
//   neg     := '~' neg | atom
//   atom    := '0' | '1' | INT '/' INT | IDENT | 'q<' INT ('/' INT)? '>' | '(' impl ')'
// Constants must lie in [0,1] and are stored in lowest terms; q-variable
// indices keep their surface form verbatim.
FormulaPtr parse_formula(const std::string& text);

// Inverse of parse_formula: parse_formula(render_formula(f)) is
// structurally identical to f.
std::string render_formula(const Formula& f);
std::string render_formula(const FormulaPtr& f);

}  // namespace luk
