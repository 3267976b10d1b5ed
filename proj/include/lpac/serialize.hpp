/*------------------------------------------------------------------------*/
/*! \file serialize.hpp
    \brief canonical text output for polynomials and proof documents

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#pragma once

#include <string>

#include "lpac/ast.hpp"

namespace lpac {

/// Canonical polynomial text: normal form, explicit '*', no '^', no inner
/// whitespace, e.g. "x+2*y-2".
std::string poly_to_string(const Polynomial& p);

/// One statement, step-level tokens separated by single spaces, e.g.
/// "D 7 ;". No trailing newline.
std::string serialize_step(const Step& step);

/// Whole document, one top-level statement per line, fragment markers
/// re-emitted as comment lines. serialize(parse(serialize(doc))) is a
/// byte-level fixpoint.
std::string serialize(const ProofDocument& doc);

/// Target file body: "<poly> ;" plus newline.
std::string serialize_target(const Polynomial& target);

}  // namespace lpac
