/*------------------------------------------------------------------------*/
/*! \file miner.hpp
    \brief compression of flat proofs by pattern mining

  Detects repeated proof fragments that are identical up to variable
  renaming and rewrites each equivalence class as one PatternNew plus one
  PatternApply per occurrence. Fragment boundaries come from explicit
  `# frag-begin` / `# frag-end` markers when present, otherwise from a
  windowed dependency heuristic. Only variable-renaming isomorphisms are
  mined; general polynomial substitutions are checkable but not
  discovered.

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lpac/ast.hpp"

namespace lpac {

class IllFormedFragmentError : public std::runtime_error {
 public:
  explicit IllFormedFragmentError(const std::string& what)
      : std::runtime_error(what) {}
};

struct FragmentationConfig {
  enum class Mode {
    FromInput,  // markers when the file has any, otherwise automatic
    Markers,
    Automatic,
  };

  Mode mode = Mode::FromInput;
  int min_repeats = 2;  // emit a pattern only for keys seen this often
  int window = 8;       // automatic mode: max steps per fragment
};

/// A contiguous run of flat proof steps with its boundary: the external
/// operands (with their values at fragment entry, in first-use order) and
/// the conclusions still present at fragment end (in definition order).
struct Fragment {
  std::vector<Step> steps;
  std::vector<std::pair<Index, Polynomial>> inputs;
  std::vector<std::pair<Index, Polynomial>> outputs;
};

/// A fragment after renaming variables to v1,v2,... in order of first
/// occurrence and local indices to p1,p2,.... Two fragments get equal
/// key text iff they are syntactically identical after renaming.
struct CanonicalKey {
  std::string text;
  /// original variable -> canonical variable, in first-occurrence order;
  /// invertible on the fragment's variables.
  std::vector<std::pair<Var, Var>> renaming;
  /// The canonical pattern block (pattern_id left as "0").
  PatternNewStep pattern;
  /// Extension variables of the fragment occurring in outputs, original
  /// names, in introduction order. These become the apply's fresh list.
  std::vector<Var> fresh;
};

/// Deterministic canonicalization; throws IllFormedFragmentError when a
/// step consumes an operand that is neither an input nor an earlier
/// conclusion of the fragment.
CanonicalKey canonicalize_fragment(const Fragment& frag);

struct CompressionReport {
  struct KeyInfo {
    std::string digest;
    std::size_t occurrences = 0;
    std::size_t body_steps = 0;
    bool pattern_emitted = false;
  };

  std::size_t fragments = 0;  // canonicalized fragment occurrences
  std::size_t hits = 0;       // occurrences whose key had been seen before
  double hit_rate = 0.0;
  std::size_t patterns_emitted = 0;
  std::size_t applies_emitted = 0;
  std::size_t steps_in = 0;   // top-level steps
  std::size_t steps_out = 0;
  std::vector<KeyInfo> keys;
  std::vector<std::string> notes;  // skipped fragments and other oddities

  /// JSON-lines rendering: one object per key, then one summary object.
  std::string to_jsonl() const;
};

/// Rewrites a flat proof (no pattern steps allowed; throws
/// std::invalid_argument otherwise). The result is accepted by the
/// checker whenever the input is, and stores every polynomial the
/// input's surviving conclusions produced. Fragments consuming axiom
/// polynomials need the axiom document to resolve operand values;
/// without it such fragments stay flat (with a report note).
ProofDocument compress_proof(const ProofDocument& flat,
                             const FragmentationConfig& config,
                             CompressionReport* report = nullptr,
                             const ProofDocument* axioms = nullptr);

}  // namespace lpac
