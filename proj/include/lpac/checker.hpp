/*------------------------------------------------------------------------*/
/*! \file checker.hpp
    \brief the proof state machine over (X, P, C)

  Executes LinComb/Axiom/Deletion/Ext steps plus the two pattern rules,
  verifying every side condition and detecting the target polynomial.
  Checking is a single forward pass; it stops at the first failed step.

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lpac/ast.hpp"
#include "lpac/stats.hpp"

namespace lpac {

/// A stored pattern: inputs I, outputs O, and extension variables V_ext.
/// The body steps S are validated once and discarded; debug mode retains
/// them for apply-time replay.
struct Pattern {
  Index id;
  std::vector<Polynomial> inputs;    // declaration order
  std::vector<Polynomial> outputs;   // declaration order
  std::set<Var> ext_vars;            // V_ext, always a subset of output vars
  std::set<Var> vars;                // Var(inputs) u Var(outputs); phi's domain

  struct DebugBody {
    std::vector<std::pair<Index, Polynomial>> inputs;  // local index : poly
    std::vector<Step> steps;
    std::vector<Index> outputs;
  };
  std::optional<DebugBody> debug_body;
};

enum class CheckErrorKind {
  IndexInUse,
  MissingOperand,
  ConclusionMismatch,
  UnknownVariable,
  VariableNotFresh,
  NotBooleanValued,
  PatternIdInUse,
  OutputNotAConclusion,
  BodyStepNotAllowed,
  UnknownPattern,
  FreshVarNotFresh,
  PhiNotInjectiveOnExt,
  PhiExtImageNotFresh,
  PhiImageOutsideAmbient,
  PhiNotBooleanValued,
  InputArityMismatch,
  InputMismatch,
  OutputArityMismatch,
  OutputIndexInUse,
  OutputMismatch,
  UnmappedVariable,
  NotAnAxiom,
};

const char* check_error_name(CheckErrorKind kind);

struct StepFailure {
  CheckErrorKind kind;
  std::string detail;
};

struct CheckWarning {
  std::string message;
  int line = 0;
};

struct CheckOptions {
  /// Retain pattern bodies and cross-validate every PatternApply by
  /// replaying the body under phi. Never changes the verdict.
  bool debug = false;
  /// Compatibility switch: also admit pattern input indices as outputs.
  /// Off by default; outputs must be conclusions of body steps.
  bool allow_input_outputs = false;
};

/// The checker state (X, P, C). An absent key in `store` models bottom.
/// `patterns` is append-only: no rule removes or overwrites a pattern.
struct ProofState {
  std::set<Var> vars;                 // X
  std::map<Index, Polynomial> store;  // P
  std::map<Index, Pattern> patterns;  // C

  std::optional<Polynomial> target;   // normalized, if any
  std::optional<Index> target_hit;    // first index whose stored poly matched
};

/// Each step operation verifies its side conditions against the state and
/// either commits the transition or returns the failure, leaving the
/// state unchanged on arity/lookup failures (a failed run is discarded
/// anyway; only the first failure is ever reported).
std::optional<StepFailure> step_axiom(ProofState& state, const Index& index,
                                      const Polynomial& poly);
std::optional<StepFailure> step_deletion(
    ProofState& state, const Index& index,
    std::vector<CheckWarning>* warnings = nullptr, int line = 0);
std::optional<StepFailure> step_lincomb(ProofState& state,
                                        const LinCombStep& step);
std::optional<StepFailure> step_ext(ProofState& state, const ExtStep& step);

/// Runs the pattern body as a fresh standalone proof seeded with the
/// inputs as axioms, verifies the outputs name body-step conclusions, and
/// assembles the Pattern (body discarded unless options.debug).
std::optional<StepFailure> check_pattern_body(const PatternNewStep& step,
                                              const CheckOptions& options,
                                              Pattern& out);

std::optional<StepFailure> step_pattern_new(ProofState& state,
                                            const PatternNewStep& step,
                                            const CheckOptions& options);

/// Verifies all PatternApply side conditions; on success extends X by the
/// fresh variables and stores the claimed outputs. In debug mode, replay
/// mismatches (if any) are appended to debug_mismatches without changing
/// the verdict.
std::optional<StepFailure> step_pattern_apply(
    ProofState& state, const PatternApplyStep& step,
    const CheckOptions& options,
    std::vector<std::string>* debug_mismatches = nullptr);

enum class VerdictStatus { Accepted, Rejected, TargetNotFound };

struct Verdict {
  struct Failure {
    Index index;          // step index or pattern id
    std::size_t ordinal;  // 1-based step number, axiom steps counted first
    CheckErrorKind kind;
    std::string reason;
    SourceSpan span;      // location within the step's own file
    bool in_axiom_file = false;
  };

  VerdictStatus status = VerdictStatus::Accepted;
  std::optional<Failure> failure;  // present iff Rejected
  std::optional<Index> target_hit;
  std::vector<CheckWarning> warnings;
  std::vector<std::string> debug_replay_mismatches;
  std::size_t debug_replays = 0;  // pattern applications replayed
  StatsReport stats;
};

/// Incremental checker: feed steps in file order, then finish(). Suitable
/// for on-the-fly checking with constant lookahead.
class Checker {
 public:
  explicit Checker(std::optional<Polynomial> target = std::nullopt,
                   CheckOptions options = {});

  /// Feeds one step; returns false once the run has failed (subsequent
  /// steps are ignored). Steps from the axiom file must be Axiom steps.
  bool feed(const Step& step, bool from_axiom_file = false);

  Verdict finish();

  const ProofState& state() const { return state_; }

 private:
  ProofState state_;
  CheckOptions options_;
  Verdict verdict_;
  std::size_t ordinal_ = 0;
  bool failed_ = false;
};

/// Executes all axiom steps then all proof steps in order. The verdict's
/// stats cover both documents; file_bytes is left for the caller.
Verdict run_check(const ProofDocument& axioms, const ProofDocument& proof,
                  const std::optional<Polynomial>& target,
                  const CheckOptions& options = {});

}  // namespace lpac
