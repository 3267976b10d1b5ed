/*------------------------------------------------------------------------*/
/*! \file parser.cpp
    \brief recursive-descent parser for the proof file format

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#include "lpac/parser.hpp"

#include <cctype>
#include <charconv>
#include <set>

namespace lpac {

ParseError::ParseError(Kind kind, const std::string& message, int line,
                       int column)
    : std::runtime_error(message + " at line " + std::to_string(line) +
                         ", column " + std::to_string(column)),
      kind(kind),
      line(line),
      column(column) {}

namespace {

enum class Tok {
  Ident,
  Number,
  Comma,
  Semi,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Colon,
  Caret,
  Star,
  Plus,
  Minus,
  Slash,
  Arrow,
  End,
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Colon: return "':'";
    case Tok::Caret: return "'^'";
    case Tok::Star: return "'*'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Slash: return "'/'";
    case Tok::Arrow: return "'->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  const Token& peek() {
    if (!current_) current_ = scan();
    return *current_;
  }

  Token take() {
    const Token t = peek();
    current_.reset();
    return t;
  }

  /// Fragment markers seen in comments, as step-relative pending events.
  std::vector<FragmentMarker::Kind>& pending_markers() { return pending_; }

 private:
  Token scan() {
    skip_blank();
    const int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, col};
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        bump();
      return {Tok::Ident, std::string(src_.substr(start, pos_ - start)), line,
              col};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        bump();
      return {Tok::Number, std::string(src_.substr(start, pos_ - start)),
              line, col};
    }
    bump();
    switch (c) {
      case ',': return {Tok::Comma, ",", line, col};
      case ';': return {Tok::Semi, ";", line, col};
      case '{': return {Tok::LBrace, "{", line, col};
      case '}': return {Tok::RBrace, "}", line, col};
      case '[': return {Tok::LBracket, "[", line, col};
      case ']': return {Tok::RBracket, "]", line, col};
      case '(': return {Tok::LParen, "(", line, col};
      case ')': return {Tok::RParen, ")", line, col};
      case ':': return {Tok::Colon, ":", line, col};
      case '^': return {Tok::Caret, "^", line, col};
      case '*': return {Tok::Star, "*", line, col};
      case '+': return {Tok::Plus, "+", line, col};
      case '/': return {Tok::Slash, "/", line, col};
      case '-':
        if (pos_ < src_.size() && src_[pos_] == '>') {
          bump();
          return {Tok::Arrow, "->", line, col};
        }
        return {Tok::Minus, "-", line, col};
      default:
        throw ParseError(ParseError::Kind::Syntax,
                         std::string("unexpected character '") + c + "'",
                         line, col);
    }
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        std::size_t start = pos_ + 1;
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
        record_marker(src_.substr(start, pos_ - start));
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void record_marker(std::string_view comment) {
    const auto first = comment.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return;
    const auto last = comment.find_last_not_of(" \t\r");
    const auto body = comment.substr(first, last - first + 1);
    if (body == "frag-begin")
      pending_.push_back(FragmentMarker::Kind::Begin);
    else if (body == "frag-end")
      pending_.push_back(FragmentMarker::Kind::End);
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::optional<Token> current_;
  std::vector<FragmentMarker::Kind> pending_;
};

[[noreturn]] void fail(const Token& t, const std::string& what) {
  throw ParseError(t.kind == Tok::End ? ParseError::Kind::UnterminatedBlock
                                      : ParseError::Kind::Syntax,
                   what + ", got " + tok_name(t.kind), t.line, t.column);
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  /// Parses the next top-level statement; nullopt at end of input.
  /// step_count is the number of steps already produced; used to anchor
  /// fragment markers.
  std::optional<Step> next_statement(std::size_t step_count,
                                     std::vector<FragmentMarker>& markers) {
    const Token& head = lex_.peek();
    drain_markers(step_count, markers);
    if (head.kind == Tok::End) return std::nullopt;
    return parse_statement(/*inside_body=*/false);
  }

  Polynomial parse_bare_polynomial() {
    Polynomial p = parse_polynomial_rule();
    expect_end();
    return p;
  }

  Expr parse_bare_expr() {
    Expr e = parse_poly_expr();
    expect_end();
    return e;
  }

  Polynomial parse_target_file() {
    Polynomial p = parse_polynomial_rule();
    expect(Tok::Semi, "expected ';' after target polynomial");
    expect_end();
    return p;
  }

 private:
  void drain_markers(std::size_t step_count,
                     std::vector<FragmentMarker>& markers) {
    for (auto kind : lex_.pending_markers())
      markers.push_back({kind, step_count});
    lex_.pending_markers().clear();
  }

  Token expect(Tok kind, const std::string& what) {
    if (lex_.peek().kind != kind) fail(lex_.peek(), what);
    return lex_.take();
  }

  void expect_end() {
    if (lex_.peek().kind != Tok::End)
      fail(lex_.peek(), "expected end of input");
  }

  // ---- statements ----

  Step parse_statement(bool inside_body) {
    const Token head = lex_.peek();
    if (head.kind != Tok::Ident)
      fail(head, "expected proof rule (A, D, L, E, N, or U)");
    Step step;
    step.span.line = head.line;
    step.span.column = head.column;
    if (head.text == "A" && !inside_body) {
      step.node = parse_axiom();
    } else if (head.text == "D") {
      step.node = parse_deletion();
    } else if (head.text == "L") {
      step.node = parse_lincomb();
    } else if (head.text == "E") {
      step.node = parse_ext();
    } else if (head.text == "N" && !inside_body) {
      step.node = parse_pattern_new();
    } else if (head.text == "U" && !inside_body) {
      step.node = parse_pattern_apply();
    } else if (inside_body) {
      fail(head, "rule '" + head.text + "' not allowed in a pattern body");
    } else {
      fail(head, "unknown proof rule '" + head.text + "'");
    }
    const Token semi = expect(Tok::Semi, "expected ';' after step");
    step.span.end_line = semi.line;
    step.span.end_column = semi.column;
    return step;
  }

  AxiomStep parse_axiom() {
    lex_.take();  // A
    AxiomStep s;
    s.index = parse_index();
    expect(Tok::Comma, "expected ',' after index");
    s.poly = parse_polynomial_rule();
    return s;
  }

  DeletionStep parse_deletion() {
    lex_.take();  // D
    return {parse_index()};
  }

  LinCombStep parse_lincomb() {
    lex_.take();  // L
    LinCombStep s;
    s.index = parse_index();
    expect(Tok::Comma, "expected ',' after index");
    s.conclusion = parse_polynomial_rule();
    expect(Tok::Comma, "expected ',' after conclusion");
    while (true) {
      expect(Tok::LParen, "expected '(' starting a coefficient");
      s.coeffs.push_back(parse_polynomial_rule());
      expect(Tok::RParen, "expected ')' after coefficient");
      expect(Tok::Star, "expected '*' after coefficient");
      s.operands.push_back(parse_index());
      if (lex_.peek().kind != Tok::Comma) break;
      lex_.take();
    }
    return s;
  }

  ExtStep parse_ext() {
    lex_.take();  // E
    ExtStep s;
    s.index = parse_index();
    expect(Tok::Comma, "expected ',' after index");
    s.var = parse_var();
    expect(Tok::Comma, "expected ',' after variable");
    s.poly = parse_polynomial_rule();
    return s;
  }

  PatternNewStep parse_pattern_new() {
    lex_.take();  // N
    PatternNewStep s;
    s.pattern_id = parse_index();
    expect(Tok::LBrace, "expected '{' after pattern id");
    expect_keyword("inputs");
    expect(Tok::LBracket, "expected '[' after 'inputs'");
    std::set<Index> seen;
    if (lex_.peek().kind != Tok::RBracket) {
      while (true) {
        const Token at = lex_.peek();
        Index lidx = parse_index();
        if (!seen.insert(lidx).second)
          throw ParseError(ParseError::Kind::DuplicateKeyword,
                           "duplicate input index '" + lidx + "'", at.line,
                           at.column);
        expect(Tok::Colon, "expected ':' after input index");
        s.inputs.emplace_back(std::move(lidx), parse_polynomial_rule());
        if (lex_.peek().kind != Tok::Comma) break;
        lex_.take();
      }
    }
    expect(Tok::RBracket, "expected ']' closing inputs");
    expect_keyword("steps");
    expect(Tok::LBracket, "expected '[' after 'steps'");
    while (lex_.peek().kind != Tok::RBracket)
      s.body.push_back(parse_statement(/*inside_body=*/true));
    lex_.take();  // ]
    expect_keyword("outputs");
    expect(Tok::LBracket, "expected '[' after 'outputs'");
    if (lex_.peek().kind != Tok::RBracket) {
      while (true) {
        s.outputs.push_back(parse_index());
        if (lex_.peek().kind != Tok::Comma) break;
        lex_.take();
      }
    }
    expect(Tok::RBracket, "expected ']' closing outputs");
    expect(Tok::RBrace, "expected '}' closing pattern block");
    return s;
  }

  PatternApplyStep parse_pattern_apply() {
    lex_.take();  // U
    PatternApplyStep s;
    s.pattern_id = parse_index();
    expect(Tok::LBrace, "expected '{' after pattern id");
    expect_keyword("fresh");
    expect(Tok::LBracket, "expected '[' after 'fresh'");
    std::set<Var> fresh_seen;
    while (lex_.peek().kind == Tok::Ident) {
      const Token at = lex_.peek();
      Var v = parse_var();
      if (!fresh_seen.insert(v).second)
        throw ParseError(ParseError::Kind::DuplicateKeyword,
                         "duplicate fresh variable '" + v.name + "'", at.line,
                         at.column);
      s.fresh.push_back(std::move(v));
    }
    expect(Tok::RBracket, "expected ']' closing fresh list");
    expect_keyword("map");
    expect(Tok::LBracket, "expected '[' after 'map'");
    if (lex_.peek().kind != Tok::RBracket) {
      while (true) {
        const Token at = lex_.peek();
        Var v = parse_var();
        expect(Tok::Arrow, "expected '->' in map entry");
        Polynomial image = parse_polynomial_rule();
        if (!s.phi.set(std::move(v), std::move(image)))
          throw ParseError(ParseError::Kind::DuplicateKeyword,
                           "duplicate map entry for '" + at.text + "'",
                           at.line, at.column);
        if (lex_.peek().kind != Tok::Comma) break;
        lex_.take();
      }
    }
    expect(Tok::RBracket, "expected ']' closing map");
    expect_keyword("in");
    expect(Tok::LBracket, "expected '[' after 'in'");
    if (lex_.peek().kind != Tok::RBracket) {
      while (true) {
        s.inputs.push_back(parse_index());
        if (lex_.peek().kind != Tok::Comma) break;
        lex_.take();
      }
    }
    expect(Tok::RBracket, "expected ']' closing input list");
    expect_keyword("out");
    expect(Tok::LBracket, "expected '[' after 'out'");
    if (lex_.peek().kind != Tok::RBracket) {
      while (true) {
        Index idx = parse_index();
        expect(Tok::Colon, "expected ':' after output index");
        s.outputs.emplace_back(std::move(idx), parse_polynomial_rule());
        if (lex_.peek().kind != Tok::Comma) break;
        lex_.take();
      }
    }
    expect(Tok::RBracket, "expected ']' closing output list");
    expect(Tok::RBrace, "expected '}' closing apply block");
    return s;
  }

  void expect_keyword(const std::string& kw) {
    const Token& t = lex_.peek();
    if (t.kind != Tok::Ident || t.text != kw)
      fail(t, "expected '" + kw + "'");
    lex_.take();
  }

  Index parse_index() {
    const Token& t = lex_.peek();
    if (t.kind != Tok::Ident && t.kind != Tok::Number)
      fail(t, "expected index");
    return lex_.take().text;
  }

  Var parse_var() {
    const Token& t = lex_.peek();
    if (t.kind != Tok::Ident) fail(t, "expected variable");
    return Var{lex_.take().text};
  }

  // ---- polynomials ----

  Polynomial parse_polynomial_rule() { return parse_poly_expr().normalize(); }

  Expr parse_poly_expr() {
    bool negate = false;
    if (lex_.peek().kind == Tok::Plus) {
      lex_.take();
    } else if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      negate = true;
    }
    Expr acc = parse_term();
    if (negate) acc = Expr::neg(acc);
    while (true) {
      if (lex_.peek().kind == Tok::Plus) {
        lex_.take();
        acc = Expr::add(acc, parse_term());
      } else if (lex_.peek().kind == Tok::Minus) {
        lex_.take();
        acc = Expr::sub(acc, parse_term());
      } else {
        break;
      }
    }
    return acc;
  }

  Expr parse_term() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Number) {
      Expr coef = parse_coef();
      if (lex_.peek().kind == Tok::Star) {
        lex_.take();
        return Expr::mul(coef, parse_factors());
      }
      return coef;
    }
    if (t.kind == Tok::Ident) return parse_factors();
    fail(t, "expected term");
  }

  Expr parse_coef() {
    const Token num = expect(Tok::Number, "expected number");
    if (lex_.peek().kind == Tok::Slash) {
      lex_.take();
      const Token den = expect(Tok::Number, "expected denominator");
      if (den.text.find_first_not_of('0') == std::string::npos)
        throw ParseError(ParseError::Kind::Syntax, "zero denominator",
                         den.line, den.column);
      return Expr::constant(make_rational(num.text, den.text));
    }
    return Expr::constant(make_rational(num.text));
  }

  Expr parse_factors() {
    Expr acc = parse_factor();
    while (lex_.peek().kind == Tok::Star) {
      lex_.take();
      acc = Expr::mul(acc, parse_factor());
    }
    return acc;
  }

  Expr parse_factor() {
    const Token name = expect(Tok::Ident, "expected variable");
    Expr base = Expr::variable(Var{name.text});
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      const Token exp = expect(Tok::Number, "expected exponent");
      std::uint64_t e = 0;
      const auto res =
          std::from_chars(exp.text.data(), exp.text.data() + exp.text.size(), e);
      if (res.ec != std::errc() || res.ptr != exp.text.data() + exp.text.size())
        throw ParseError(ParseError::Kind::Syntax, "exponent too large",
                         exp.line, exp.column);
      return Expr::pow(base, e);
    }
    return base;
  }

  Lexer lex_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  return Parser(text).parse_bare_polynomial();
}

Expr parse_polynomial_expr(std::string_view text) {
  return Parser(text).parse_bare_expr();
}

struct ProofReader::Impl {
  explicit Impl(std::string_view text) : parser(text) {}

  Parser parser;
  std::vector<FragmentMarker> markers;
  std::size_t count = 0;
};

ProofReader::ProofReader(std::string_view text)
    : impl_(std::make_unique<Impl>(text)) {}

ProofReader::~ProofReader() = default;
ProofReader::ProofReader(ProofReader&&) noexcept = default;
ProofReader& ProofReader::operator=(ProofReader&&) noexcept = default;

std::optional<Step> ProofReader::next() {
  auto step = impl_->parser.next_statement(impl_->count, impl_->markers);
  if (step) ++impl_->count;
  return step;
}

std::size_t ProofReader::steps_read() const { return impl_->count; }

const std::vector<FragmentMarker>& ProofReader::markers() const {
  return impl_->markers;
}

ProofDocument parse_proof(std::string_view text) {
  ProofDocument doc;
  ProofReader reader(text);
  while (auto step = reader.next()) doc.steps.push_back(std::move(*step));
  doc.markers = reader.markers();
  return doc;
}

ProofDocument parse_axioms(std::string_view text) {
  ProofDocument doc = parse_proof(text);
  for (const auto& step : doc.steps)
    if (!std::holds_alternative<AxiomStep>(step.node))
      throw ParseError(ParseError::Kind::Syntax,
                       std::string("expected axiom statement, found ") +
                           step_rule_name(step.node),
                       step.span.line, step.span.column);
  return doc;
}

Polynomial parse_target(std::string_view text) {
  return Parser(text).parse_target_file();
}

const char* step_rule_name(const StepNode& node) {
  struct Namer {
    const char* operator()(const AxiomStep&) const { return "Axiom"; }
    const char* operator()(const DeletionStep&) const { return "Deletion"; }
    const char* operator()(const LinCombStep&) const { return "LinComb"; }
    const char* operator()(const ExtStep&) const { return "Ext"; }
    const char* operator()(const PatternNewStep&) const {
      return "PatternNew";
    }
    const char* operator()(const PatternApplyStep&) const {
      return "PatternApply";
    }
  };
  return std::visit(Namer{}, node);
}

}  // namespace lpac
