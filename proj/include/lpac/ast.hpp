/*------------------------------------------------------------------------*/
/*! \file ast.hpp
    \brief parsed proof-step AST covering all six rules

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpac/polynomial.hpp"

namespace lpac {

/// A proof-step index: a nonnegative integer literal or an identifier,
/// kept as its source token. Global indices (the P store) and local
/// indices (inside a pattern body) are separate namespaces; a rule
/// instance never mixes the two.
using Index = std::string;

/// 1-based source location range of a step.
struct SourceSpan {
  int line = 0;
  int column = 0;
  int end_line = 0;
  int end_column = 0;
};

struct AxiomStep {
  Index index;
  Polynomial poly;

  bool operator==(const AxiomStep&) const = default;
};

struct DeletionStep {
  Index index;

  bool operator==(const DeletionStep&) const = default;
};

struct LinCombStep {
  Index index;
  Polynomial conclusion;
  std::vector<Polynomial> coeffs;   // same length as operands, nonempty
  std::vector<Index> operands;

  bool operator==(const LinCombStep&) const = default;
};

struct ExtStep {
  Index index;
  Var var;
  Polynomial poly;

  bool operator==(const ExtStep&) const = default;
};

struct Step;

struct PatternNewStep {
  Index pattern_id;
  std::vector<std::pair<Index, Polynomial>> inputs;  // local index : poly
  std::vector<Step> body;   // LinComb / Ext / Deletion with local indices
  std::vector<Index> outputs;

  bool operator==(const PatternNewStep&) const;
};

struct PatternApplyStep {
  Index pattern_id;
  std::vector<Var> fresh;
  Substitution phi;
  std::vector<Index> inputs;
  std::vector<std::pair<Index, Polynomial>> outputs;

  bool operator==(const PatternApplyStep&) const = default;
};

using StepNode = std::variant<AxiomStep, DeletionStep, LinCombStep, ExtStep,
                              PatternNewStep, PatternApplyStep>;

struct Step {
  StepNode node;
  SourceSpan span;

  /// Structural equality; spans are ignored.
  bool operator==(const Step& other) const { return node == other.node; }
};

inline bool PatternNewStep::operator==(const PatternNewStep& other) const {
  return pattern_id == other.pattern_id && inputs == other.inputs &&
         body == other.body && outputs == other.outputs;
}

/// Fragment boundary markers carried in `# frag-begin` / `# frag-end`
/// comments. position is the index of the step the marker precedes
/// (== steps.size() for a trailing marker).
struct FragmentMarker {
  enum class Kind { Begin, End };

  Kind kind;
  std::size_t position;

  bool operator==(const FragmentMarker&) const = default;
};

/// A parsed proof file: steps in exact file order plus fragment markers.
struct ProofDocument {
  std::vector<Step> steps;
  std::vector<FragmentMarker> markers;

  bool operator==(const ProofDocument& other) const {
    return steps == other.steps && markers == other.markers;
  }
};

const char* step_rule_name(const StepNode& node);

}  // namespace lpac
