/*------------------------------------------------------------------------*/
/*! \file parser.hpp
    \brief parsing of axiom, target, and proof files

  Concrete syntax, one `;`-terminated statement per step, `#` comments to
  end of line:

    A <idx> , <poly> ;
    D <idx> ;
    L <idx> , <poly> , ( <poly> ) * <idx> { , ( <poly> ) * <idx> } ;
    E <idx> , <var> , <poly> ;
    N <pid> { inputs [ <lidx> : <poly> {, ...} ]
              steps [ <inner-step>* ]
              outputs [ <lidx> {, ...} ] } ;
    U <pid> { fresh [ <var>* ] map [ <var> -> <poly> {, ...} ]
              in [ <idx> {, ...} ] out [ <idx> : <poly> {, ...} ] } ;

  Polynomials: poly := ['+'|'-'] term (('+'|'-') term)*;
  term := [coef '*'] factor ('*' factor)* | coef; factor := var ['^' nat];
  coef := nat ['/' nat]. Whitespace is insignificant; encoding is UTF-8,
  newline-agnostic. The parser accepts non-normal-form polynomials and
  always stores multilinear normal forms.

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lpac/ast.hpp"
#include "lpac/expr.hpp"

namespace lpac {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, DuplicateKeyword, UnterminatedBlock };

  ParseError(Kind kind, const std::string& message, int line, int column);

  Kind kind;
  int line;
  int column;
};

/// Parses a polynomial and returns its multilinear normal form.
Polynomial parse_polynomial(std::string_view text);

/// Parses a polynomial as a raw expression tree, before reduction. Used
/// by the brute-force oracles.
Expr parse_polynomial_expr(std::string_view text);

/// Parses a whole proof file. Purely syntactic; semantic checking is the
/// checker's job.
ProofDocument parse_proof(std::string_view text);

/// Parses an axiom file: a sequence of `A` statements only.
ProofDocument parse_axioms(std::string_view text);

/// Parses a target file: a single `<poly> ;`.
Polynomial parse_target(std::string_view text);

/// Statement-at-a-time reader so checking can run on the fly with
/// constant lookahead. Markers accumulate as statements are read.
class ProofReader {
 public:
  explicit ProofReader(std::string_view text);
  ~ProofReader();

  ProofReader(ProofReader&&) noexcept;
  ProofReader& operator=(ProofReader&&) noexcept;

  /// Next step, or nullopt at end of input.
  std::optional<Step> next();

  /// Number of steps read so far.
  std::size_t steps_read() const;

  /// All fragment markers encountered so far (positions refer to step
  /// ordinals). Complete only once next() returned nullopt.
  const std::vector<FragmentMarker>& markers() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace lpac
