#include <map>
#include <tuple>

#include "luk/solver.hpp"

namespace luk {

namespace {

class Encoder {
 public:
  Encoded run(const Theory& t, const FormulaPtr& objective) {
    Signature sig = signature_of(t, objective);
    for (const Variable& v : sig.variables) {
      VarId id = p_.add_var(v.name());
      p_.bind_formula_var(v, id);
      vars_.emplace(v, id);
    }
    for (const FormulaPtr& ax : t.axioms())
      row({{enc(ax), Rational(1)}}, Cmp::Eq, Rational(1));
    VarId root = enc(objective);
    p_.set_objective({{{root, Rational(1)}}, Rational(0)}, Direction::Minimize);
    return {std::move(p_), root};
  }

 private:
  VarId fresh_z() { return p_.add_var(".z" + std::to_string(zn_++)); }
  VarId fresh_b() { return p_.add_var(".b" + std::to_string(bn_++), true); }

  void row(std::initializer_list<std::pair<VarId, Rational>> terms, Cmp cmp,
           Rational rhs) {
    LinearConstraint c;
    c.cmp = cmp;
    c.rhs = std::move(rhs);
    for (const auto& [v, k] : terms) c.coeffs[v] += k;  // merged: x.x etc.
    for (auto it = c.coeffs.begin(); it != c.coeffs.end();)
      it = it->second == 0 ? c.coeffs.erase(it) : std::next(it);
    p_.add(std::move(c));
  }

  VarId enc_const(const Rational& value) {
    if (!in_unit_interval(value))
      throw std::invalid_argument("constant outside [0,1]");
    auto it = consts_.find(value);
    if (it != consts_.end()) return it->second;
    VarId z = p_.add_var(".c" + std::to_string(cn_++));
    p_.fix(z, value);
    consts_.emplace(value, z);
    return z;
  }

  // One continuous value variable per connective application, shared
  // across structurally equal subterms.
  VarId apply(Conn conn, VarId a, VarId b) {
    auto key = std::make_tuple(static_cast<int>(conn), a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    const Rational one(1);
    VarId z = fresh_z();
    switch (conn) {
      case Conn::Neg:
        row({{z, one}, {a, one}}, Cmp::Eq, one);
        break;
      case Conn::StrongAnd: {
        VarId bb = fresh_b();
        row({{z, one}, {a, -one}, {b, -one}}, Cmp::Ge, -one);
        row({{z, one}, {a, -one}, {b, -one}, {bb, -one}}, Cmp::Le, -one);
        row({{z, one}, {bb, one}}, Cmp::Le, one);
        break;
      }
      case Conn::Implies: {
        VarId bb = fresh_b();
        row({{z, one}, {a, one}, {b, -one}}, Cmp::Le, one);
        row({{z, one}, {a, one}, {b, -one}, {bb, one}}, Cmp::Ge, one);
        row({{z, one}, {bb, -one}}, Cmp::Ge, Rational(0));
        break;
      }
      case Conn::StrongOr: {
        VarId bb = fresh_b();
        row({{z, one}, {a, -one}, {b, -one}}, Cmp::Le, Rational(0));
        row({{z, one}, {a, -one}, {b, -one}, {bb, one}}, Cmp::Ge, Rational(0));
        row({{z, one}, {bb, -one}}, Cmp::Ge, Rational(0));
        break;
      }
      case Conn::Min: {
        VarId bb = fresh_b();
        row({{z, one}, {a, -one}}, Cmp::Le, Rational(0));
        row({{z, one}, {b, -one}}, Cmp::Le, Rational(0));
        row({{z, one}, {a, -one}, {bb, one}}, Cmp::Ge, Rational(0));
        row({{z, one}, {b, -one}, {bb, -one}}, Cmp::Ge, -one);
        break;
      }
      case Conn::Max: {
        VarId bb = fresh_b();
        row({{z, one}, {a, -one}}, Cmp::Ge, Rational(0));
        row({{z, one}, {b, -one}}, Cmp::Ge, Rational(0));
        row({{z, one}, {a, -one}, {bb, -one}}, Cmp::Le, Rational(0));
        row({{z, one}, {b, -one}, {bb, one}}, Cmp::Le, one);
        break;
      }
      default:
        throw std::logic_error("not a primitive connective");
    }
    memo_.emplace(key, z);
    return z;
  }

  VarId enc(const FormulaPtr& f) {
    switch (f->conn()) {
      case Conn::Constant:
        return enc_const(f->constant_value());
      case Conn::Var:
        return vars_.at(f->variable());
      case Conn::Neg:
        return apply(Conn::Neg, enc(f->lhs()), -1);
      case Conn::StrongAnd:
      case Conn::Implies:
      case Conn::StrongOr:
      case Conn::Min:
      case Conn::Max:
        return apply(f->conn(), enc(f->lhs()), enc(f->rhs()));
      case Conn::Equiv: {
        VarId a = enc(f->lhs());
        VarId b = enc(f->rhs());
        return apply(Conn::StrongAnd, apply(Conn::Implies, a, b),
                     apply(Conn::Implies, b, a));
      }
      case Conn::Power:
        return chain(enc(f->lhs()), f->arity_bound(), Conn::StrongAnd);
      case Conn::Multiple:
        return chain(enc(f->lhs()), f->arity_bound(), Conn::StrongOr);
    }
    throw std::logic_error("unreachable");
  }

  // f^n / n*f by squaring (doubling) along the binary digits of n.
  VarId chain(VarId base, unsigned long n, Conn op) {
    VarId acc = -1;
    VarId sq = base;
    for (unsigned long bits = n; bits != 0; bits >>= 1) {
      if (bits & 1) acc = acc < 0 ? sq : apply(op, acc, sq);
      if (bits > 1) sq = apply(op, sq, sq);
    }
    return acc;
  }

  MilpProblem p_;
  std::map<Variable, VarId> vars_;
  std::map<Rational, VarId> consts_;
  std::map<std::tuple<int, VarId, VarId>, VarId> memo_;
  int zn_ = 0, bn_ = 0, cn_ = 0;
};

}  // namespace

Encoded encode(const Theory& constraints_as_true, const FormulaPtr& objective) {
  return Encoder().run(constraints_as_true, objective);
}

}  // namespace luk
