/* SPDX-License-Identifier: Apache-2.0 */

#include "exactreal/cli/spec_lang.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace exactreal::cli {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

struct Sexp {
  bool is_list = false;
  std::string atom;
  std::vector<Sexp> items;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Sexp read_top() {
    skip_space();
    if (at_end()) fail("empty spec");
    Sexp s = read();
    skip_space();
    if (!at_end()) fail("unexpected text after the spec");
    return s;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ParseError::Kind::syntax, line_, col_, msg);
  }

  void skip_space() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  Sexp read() {
    Sexp s;
    s.line = line_;
    s.column = col_;
    if (peek() == ')') fail("unexpected ')'");
    if (peek() == '(') {
      s.is_list = true;
      advance();
      for (;;) {
        skip_space();
        if (at_end())
          throw ParseError(ParseError::Kind::syntax, s.line, s.column, "unclosed list");
        if (peek() == ')') {
          advance();
          return s;
        }
        s.items.push_back(read());
      }
    }
    while (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '(' && peek() != ')' &&
           peek() != ';') {
      s.atom.push_back(peek());
      advance();
    }
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

[[noreturn]] void fail_at(const Sexp& s, ParseError::Kind kind, const std::string& msg) {
  throw ParseError(kind, s.line, s.column, msg);
}

bool is_integer_atom(const std::string& a) {
  std::size_t k = (!a.empty() && a[0] == '-') ? 1 : 0;
  if (k == a.size()) return false;
  for (; k < a.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(a[k]))) return false;
  return true;
}

mpz_class integer_of(const Sexp& s, ParseError::Kind kind) {
  if (s.is_list || !is_integer_atom(s.atom)) fail_at(s, kind, "expected an integer");
  return mpz_class(s.atom, 10);
}

const std::string& head_of(const Sexp& s) {
  if (!s.is_list) fail_at(s, ParseError::Kind::syntax, "expected a list, got '" + s.atom + "'");
  if (s.items.empty()) fail_at(s, ParseError::Kind::syntax, "empty list");
  const Sexp& h = s.items.front();
  if (h.is_list || is_integer_atom(h.atom)) fail_at(h, ParseError::Kind::syntax, "list head must be a symbol");
  return h.atom;
}

void expect_args(const Sexp& s, std::size_t n) {
  if (s.items.size() != n + 1)
    fail_at(s, ParseError::Kind::arity,
            "'" + s.items.front().atom + "' takes " + std::to_string(n) + " argument(s), got " +
                std::to_string(s.items.size() - 1));
}

RealExpr to_expr(const Sexp& s) {
  const std::string& head = head_of(s);
  static const std::map<std::string, RealExpr (*)(RealExpr, RealExpr)> binary = {
      {"add", &RealExpr::add}, {"sub", &RealExpr::sub}, {"mul", &RealExpr::mul},
      {"min", &RealExpr::min}, {"max", &RealExpr::max}};
  if (auto it = binary.find(head); it != binary.end()) {
    expect_args(s, 2);
    return it->second(to_expr(s.items[1]), to_expr(s.items[2]));
  }
  if (head == "neg" || head == "chi-pos") {
    expect_args(s, 1);
    RealExpr a = to_expr(s.items[1]);
    return head == "neg" ? RealExpr::neg(std::move(a)) : RealExpr::chi_pos(std::move(a));
  }
  if (head == "rat") {
    expect_args(s, 2);
    mpz_class n = integer_of(s.items[1], ParseError::Kind::syntax);
    mpz_class d = integer_of(s.items[2], ParseError::Kind::syntax);
    if (d == 0) fail_at(s.items[2], ParseError::Kind::syntax, "zero denominator");
    return RealExpr::constant(Rational(n, d));
  }
  if (head == "var") {
    expect_args(s, 1);
    mpz_class k = integer_of(s.items[1], ParseError::Kind::syntax);
    if (k < 0 || !k.fits_ulong_p()) fail_at(s.items[1], ParseError::Kind::syntax, "bad variable index");
    return RealExpr::var(k.get_ui());
  }
  if (head == "tail" || head == "finite" || head == "prob" || head == "mass")
    fail_at(s.items.front(), ParseError::Kind::syntax, "'" + head + "' is only allowed at top level");
  fail_at(s.items.front(), ParseError::Kind::unknown_head, "unknown head symbol '" + head + "'");
}

RealExpr to_unary_expr(const Sexp& s) {
  RealExpr e = to_expr(s);
  if (e.min_arity() != 1) fail_at(s, ParseError::Kind::arity, "branch expressions may only use (var 0)");
  return e;
}

SpecAst to_spec(const Sexp& s) {
  const std::string& head = head_of(s);
  if (head == "tail" || head == "finite") {
    if (s.items.size() < 2) fail_at(s, ParseError::Kind::arity, "'" + head + "' needs at least one branch");
    RelSpec rel{head == "tail" ? RelSpec::Shape::tail : RelSpec::Shape::finite, {}};
    for (std::size_t k = 1; k < s.items.size(); ++k) rel.branches.push_back(to_unary_expr(s.items[k]));
    return rel;
  }
  if (head == "prob") {
    if (s.items.size() < 2) fail_at(s, ParseError::Kind::arity, "'prob' needs at least one mass branch");
    ProbSpec prob;
    for (std::size_t k = 1; k < s.items.size(); ++k) {
      const Sexp& m = s.items[k];
      if (head_of(m) != "mass") fail_at(m, ParseError::Kind::syntax, "expected (mass n d expr)");
      expect_args(m, 3);
      mpz_class n = integer_of(m.items[1], ParseError::Kind::bad_mass);
      mpz_class d = integer_of(m.items[2], ParseError::Kind::bad_mass);
      if (d == 0) fail_at(m.items[2], ParseError::Kind::bad_mass, "mass with zero denominator");
      Rational mass(n, d);
      if (mass < Rational(0) || mass > Rational(1))
        fail_at(m, ParseError::Kind::bad_mass, "mass " + mass.str() + " outside [0, 1]");
      prob.branches.push_back({mass, to_unary_expr(m.items[3])});
    }
    return prob;
  }
  RealExpr e = to_expr(s);
  return ExprSpec{e, e.min_arity()};
}

}  // namespace

SpecAst parse_spec(std::string_view text) { return to_spec(Reader(text).read_top()); }

std::string print_expr(const RealExpr& e) {
  switch (e.kind()) {
    case RealExpr::Kind::constant:
      return "(rat " + e.value().numerator().get_str() + " " + e.value().denominator().get_str() + ")";
    case RealExpr::Kind::var:
      return "(var " + std::to_string(e.index()) + ")";
    case RealExpr::Kind::neg:
      return "(neg " + print_expr(e.child(0)) + ")";
    case RealExpr::Kind::chi_pos:
      return "(chi-pos " + print_expr(e.child(0)) + ")";
    case RealExpr::Kind::add:
      return "(add " + print_expr(e.child(0)) + " " + print_expr(e.child(1)) + ")";
    case RealExpr::Kind::sub:
      return "(sub " + print_expr(e.child(0)) + " " + print_expr(e.child(1)) + ")";
    case RealExpr::Kind::mul:
      return "(mul " + print_expr(e.child(0)) + " " + print_expr(e.child(1)) + ")";
    case RealExpr::Kind::min:
      return "(min " + print_expr(e.child(0)) + " " + print_expr(e.child(1)) + ")";
    case RealExpr::Kind::max:
      return "(max " + print_expr(e.child(0)) + " " + print_expr(e.child(1)) + ")";
  }
  return {};
}

std::string print_spec(const SpecAst& spec) {
  if (const auto* e = std::get_if<ExprSpec>(&spec)) return print_expr(e->expr);
  if (const auto* r = std::get_if<RelSpec>(&spec)) {
    std::string out = r->shape == RelSpec::Shape::tail ? "(tail" : "(finite";
    for (const auto& b : r->branches) out += " " + print_expr(b);
    return out + ")";
  }
  const auto& p = std::get<ProbSpec>(spec);
  std::string out = "(prob";
  for (const auto& b : p.branches)
    out += " (mass " + b.mass.numerator().get_str() + " " + b.mass.denominator().get_str() + " " +
           print_expr(b.expr) + ")";
  return out + ")";
}

FMachine build_machine(const ExprSpec& spec) { return expr_to_machine(spec.expr, spec.arity); }

RealEnumRel build_relation(const RelSpec& spec) {
  if (spec.shape == RelSpec::Shape::finite) return make_finite_rel(spec.branches);
  std::vector<RealExpr> head(spec.branches.begin(), spec.branches.end() - 1);
  return make_tail_rel(head, spec.branches.back());
}

DiscreteProbAlgorithm build_prob(const ProbSpec& spec) {
  std::vector<ProbBranch> branches;
  for (const auto& b : spec.branches) branches.push_back({expr_to_machine(b.expr, 1), b.mass});
  return make_prob(std::move(branches));
}

}  // namespace exactreal::cli
