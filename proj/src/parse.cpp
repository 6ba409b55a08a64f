#include "luk/parse.hpp"

#include <cctype>
#include <vector>

namespace luk {

std::optional<Rational> parse_rational(const std::string& text) {
  std::size_t i = 0;
  auto digits = [&](Integer& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) return false;
    out = Integer(text.substr(start, i - start));
    return true;
  };
  Integer num, den(1);
  if (!digits(num)) return std::nullopt;
  if (i < text.size() && text[i] == '/') {
    ++i;
    if (!digits(den) || den == 0) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;
  return make_rational(num, den);
}

namespace {

enum class Tok {
  Int,       // digit run
  Rat,       // digits '/' digits
  QVar,      // q<M/N> or q<M>
  Ident,
  Neg,       // ~
  Caret,     // ^
  Star,      // *
  Amp,       // &
  Oplus,     // (+)
  MinOp,     // /\ .
  MaxOp,     // \/
  Arrow,     // ->
  DArrow,    // <->
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;    // Ident
  Integer num, den;    // Int / Rat / QVar
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t = next();
      bool end = t.kind == Tok::End;
      out.push_back(std::move(t));
      if (end) return out;
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw ParseError(msg, at);
  }

  Integer lex_digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digits", start);
    return Integer(text_.substr(start, pos_ - start));
  }

  Token next() {
    std::size_t at = pos_;
    char c = peek();
    if (c == '\0') return {Tok::End, at, {}, 0, 0};

    if (std::isdigit(static_cast<unsigned char>(c))) {
      Token t{Tok::Int, at, {}, lex_digits(), 1};
      // A '/' starts a fraction only when a digit follows; '/\' stays an
      // operator.
      if (peek() == '/' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        ++pos_;
        t.kind = Tok::Rat;
        t.den = lex_digits();
      }
      return t;
    }

    if (c == 'q' && peek(1) == '<') {
      pos_ += 2;
      Token t{Tok::QVar, at, {}, 0, 1};
      t.num = lex_digits();
      if (peek() == '/') {
        ++pos_;
        t.den = lex_digits();
      }
      if (peek() != '>') fail("unterminated q-variable", at);
      ++pos_;
      return t;
    }

    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (true) {
        char d = peek();
        if (std::islower(static_cast<unsigned char>(d)) ||
            std::isdigit(static_cast<unsigned char>(d)) || d == '_')
          ++pos_;
        else
          break;
      }
      return {Tok::Ident, at, text_.substr(start, pos_ - start), 0, 0};
    }

    switch (c) {
      case '~': ++pos_; return {Tok::Neg, at, {}, 0, 0};
      case '^': ++pos_; return {Tok::Caret, at, {}, 0, 0};
      case '*': ++pos_; return {Tok::Star, at, {}, 0, 0};
      case '&': ++pos_; return {Tok::Amp, at, {}, 0, 0};
      case ')': ++pos_; return {Tok::RParen, at, {}, 0, 0};
      case '(':
        if (peek(1) == '+' && peek(2) == ')') {
          pos_ += 3;
          return {Tok::Oplus, at, {}, 0, 0};
        }
        ++pos_;
        return {Tok::LParen, at, {}, 0, 0};
      case '/':
        if (peek(1) == '\\') {
          pos_ += 2;
          return {Tok::MinOp, at, {}, 0, 0};
        }
        fail("stray '/'", at);
      case '\\':
        if (peek(1) == '/') {
          pos_ += 2;
          return {Tok::MaxOp, at, {}, 0, 0};
        }
        fail("stray '\\'", at);
      case '-':
        if (peek(1) == '>') {
          pos_ += 2;
          return {Tok::Arrow, at, {}, 0, 0};
        }
        fail("expected '->'", at);
      case '<':
        if (peek(1) == '-' && peek(2) == '>') {
          pos_ += 3;
          return {Tok::DArrow, at, {}, 0, 0};
        }
        fail("expected '<->'", at);
      default:
        fail(std::string("unexpected character '") + c + "'", at);
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FormulaPtr run() {
    FormulaPtr f = impl();
    if (cur().kind != Tok::End)
      throw ParseError("trailing input after formula", cur().offset);
    return f;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  void advance() { ++pos_; }

  unsigned long small_nat(const Token& t) {
    if (!t.num.fits_ulong_p())
      throw ParseError("exponent/multiplier too large", t.offset);
    return t.num.get_ui();
  }

  FormulaPtr impl() {
    FormulaPtr lhs = lattice();
    if (cur().kind == Tok::Arrow) {
      advance();
      return Formula::implies(lhs, impl());
    }
    if (cur().kind == Tok::DArrow) {
      advance();
      FormulaPtr rhs = lattice();
      if (cur().kind == Tok::Arrow || cur().kind == Tok::DArrow)
        throw ParseError("'<->' does not associate; parenthesize",
                         cur().offset);
      return Formula::equiv(lhs, rhs);
    }
    return lhs;
  }

  FormulaPtr lattice() {
    FormulaPtr f = strand();
    while (cur().kind == Tok::MinOp || cur().kind == Tok::MaxOp) {
      bool is_min = cur().kind == Tok::MinOp;
      advance();
      FormulaPtr rhs = strand();
      f = is_min ? Formula::min(f, rhs) : Formula::max(f, rhs);
    }
    return f;
  }

  FormulaPtr strand() {
    FormulaPtr f = unary();
    while (cur().kind == Tok::Amp || cur().kind == Tok::Oplus) {
      bool is_and = cur().kind == Tok::Amp;
      advance();
      FormulaPtr rhs = unary();
      f = is_and ? Formula::strong_and(f, rhs) : Formula::strong_or(f, rhs);
    }
    return f;
  }

  FormulaPtr unary() {
    if (cur().kind == Tok::Int && toks_[pos_ + 1].kind == Tok::Star) {
      const Token& t = cur();
      unsigned long n = small_nat(t);
      if (n == 0) throw ParseError("multiple with n = 0", t.offset);
      advance();
      advance();
      return Formula::multiple(n, unary());
    }
    FormulaPtr f = negated();
    while (cur().kind == Tok::Caret) {
      advance();
      if (cur().kind != Tok::Int)
        throw ParseError("expected exponent after '^'", cur().offset);
      unsigned long n = small_nat(cur());
      if (n == 0) throw ParseError("power with n = 0", cur().offset);
      advance();
      f = Formula::power(f, n);
    }
    return f;
  }

  FormulaPtr negated() {
    if (cur().kind == Tok::Neg) {
      advance();
      return Formula::neg(negated());
    }
    return atom();
  }

  FormulaPtr atom() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::Int:
      case Tok::Rat: {
        Rational value = make_rational(t.num, t.den);
        if (!in_unit_interval(value))
          throw ParseError("constant outside [0,1]", t.offset);
        advance();
        return Formula::constant(value);
      }
      case Tok::QVar: {
        if (t.num > t.den)
          throw ParseError("q-variable index outside [0,1]", t.offset);
        Variable v = t.den == 1 && t.num <= 1
                         ? Variable::q(Rational(t.num))
                         : Variable::q_raw(t.num, t.den);
        advance();
        return Formula::var(v);
      }
      case Tok::Ident: {
        Variable v = Variable::named(t.text);
        advance();
        return Formula::var(v);
      }
      case Tok::LParen: {
        advance();
        FormulaPtr f = impl();
        if (cur().kind != Tok::RParen)
          throw ParseError("expected ')'", cur().offset);
        advance();
        return f;
      }
      default:
        throw ParseError("expected a formula", t.offset);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Rendering levels, loosest to tightest.
constexpr int kImpl = 1;
constexpr int kLattice = 2;
constexpr int kStrand = 3;
constexpr int kUnary = 4;
constexpr int kAtom = 5;

int level_of(const Formula& f) {
  switch (f.conn()) {
    case Conn::Constant:
    case Conn::Var:
      return kAtom;
    case Conn::Neg:
    case Conn::Power:
    case Conn::Multiple:
      return kUnary;
    case Conn::StrongAnd:
    case Conn::StrongOr:
      return kStrand;
    case Conn::Min:
    case Conn::Max:
      return kLattice;
    case Conn::Implies:
    case Conn::Equiv:
      return kImpl;
  }
  return kAtom;
}

void render(const Formula& f, int need, std::string& out) {
  int level = level_of(f);
  bool parens = level < need;
  if (parens) out += '(';
  switch (f.conn()) {
    case Conn::Constant:
      out += to_string(f.constant_value());
      break;
    case Conn::Var:
      out += f.variable().name();
      break;
    case Conn::Neg: {
      out += '~';
      const Formula& a = *f.lhs();
      if (a.is_leaf() || a.conn() == Conn::Neg) {
        render(a, 0, out);
      } else {
        out += '(';
        render(a, kImpl, out);
        out += ')';
      }
      break;
    }
    case Conn::Power:
      render(*f.lhs(), kAtom, out);
      out += '^';
      out += std::to_string(f.arity_bound());
      break;
    case Conn::Multiple:
      out += std::to_string(f.arity_bound());
      out += '*';
      render(*f.lhs(), kAtom, out);
      break;
    case Conn::StrongAnd:
    case Conn::StrongOr: {
      const char* op = f.conn() == Conn::StrongAnd ? " & " : " (+) ";
      // Left-assoc chains stay flat only for the same operator.
      bool flat_left = f.lhs()->conn() == f.conn();
      render(*f.lhs(), flat_left ? kStrand : kStrand + 1, out);
      out += op;
      render(*f.rhs(), kStrand + 1, out);
      break;
    }
    case Conn::Min:
    case Conn::Max: {
      const char* op = f.conn() == Conn::Min ? " /\\ " : " \\/ ";
      bool flat_left = f.lhs()->conn() == f.conn();
      render(*f.lhs(), flat_left ? kLattice : kLattice + 1, out);
      out += op;
      render(*f.rhs(), kLattice + 1, out);
      break;
    }
    case Conn::Implies:
      render(*f.lhs(), kImpl + 1, out);
      out += " -> ";
      render(*f.rhs(), kImpl, out);  // right-assoc
      break;
    case Conn::Equiv:
      render(*f.lhs(), kImpl + 1, out);
      out += " <-> ";
      render(*f.rhs(), kImpl + 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  return Parser(Lexer(text).run()).run();
}

std::string render_formula(const Formula& f) {
  std::string out;
  render(f, kImpl, out);
  return out;
}

std::string render_formula(const FormulaPtr& f) { return render_formula(*f); }

}  // namespace luk
