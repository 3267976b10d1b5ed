/*------------------------------------------------------------------------*/
/*! \file genbench.hpp
    \brief synthetic benchmark chains of structurally identical blocks

  Generates families of proofs made of repeated building blocks over
  disjoint variable sets, in a flat flavor (every block derivation spelled
  out, fragment markers included) and a pattern flavor (one PatternNew
  plus one PatternApply per block). Both flavors derive the target 1 from
  the same axiom file.

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#pragma once

#include <filesystem>
#include <string>

#include "lpac/ast.hpp"

namespace lpac {

struct ChainSpec {
  int blocks = 1;      // n >= 1
  int block_arity = 2; // axioms consumed per block, >= 2
  long seed = 0;       // offsets the deterministic variable/index numbering
};

enum class ChainFlavor { Flat, Pattern };

struct ChainFiles {
  ProofDocument axioms;
  Polynomial target;
  ProofDocument proof;
};

ChainFiles generate_chain(const ChainSpec& spec, ChainFlavor flavor);

/// Serializes the three-file set as <name>.axioms, <name>.target,
/// <name>.proof under dir (created if missing).
void write_chain(const std::filesystem::path& dir, const std::string& name,
                 const ChainSpec& spec, ChainFlavor flavor);

}  // namespace lpac
