/*------------------------------------------------------------------------*/
/*! \file checker.cpp
    \brief side-condition verification for all six proof rules

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#include "lpac/checker.hpp"

#include <algorithm>
#include <chrono>

#include "lpac/serialize.hpp"

namespace lpac {

const char* check_error_name(CheckErrorKind kind) {
  switch (kind) {
    case CheckErrorKind::IndexInUse: return "IndexInUse";
    case CheckErrorKind::MissingOperand: return "MissingOperand";
    case CheckErrorKind::ConclusionMismatch: return "ConclusionMismatch";
    case CheckErrorKind::UnknownVariable: return "UnknownVariable";
    case CheckErrorKind::VariableNotFresh: return "VariableNotFresh";
    case CheckErrorKind::NotBooleanValued: return "NotBooleanValued";
    case CheckErrorKind::PatternIdInUse: return "PatternIdInUse";
    case CheckErrorKind::OutputNotAConclusion: return "OutputNotAConclusion";
    case CheckErrorKind::BodyStepNotAllowed: return "BodyStepNotAllowed";
    case CheckErrorKind::UnknownPattern: return "UnknownPattern";
    case CheckErrorKind::FreshVarNotFresh: return "FreshVarNotFresh";
    case CheckErrorKind::PhiNotInjectiveOnExt: return "PhiNotInjectiveOnExt";
    case CheckErrorKind::PhiExtImageNotFresh: return "PhiExtImageNotFresh";
    case CheckErrorKind::PhiImageOutsideAmbient:
      return "PhiImageOutsideAmbient";
    case CheckErrorKind::PhiNotBooleanValued: return "PhiNotBooleanValued";
    case CheckErrorKind::InputArityMismatch: return "InputArityMismatch";
    case CheckErrorKind::InputMismatch: return "InputMismatch";
    case CheckErrorKind::OutputArityMismatch: return "OutputArityMismatch";
    case CheckErrorKind::OutputIndexInUse: return "OutputIndexInUse";
    case CheckErrorKind::OutputMismatch: return "OutputMismatch";
    case CheckErrorKind::UnmappedVariable: return "UnmappedVariable";
    case CheckErrorKind::NotAnAxiom: return "NotAnAxiom";
  }
  return "?";
}

namespace {

StepFailure make_failure(CheckErrorKind kind, std::string detail) {
  return {kind, std::move(detail)};
}

void note_target(ProofState& state, const Index& index, const Polynomial& p) {
  if (state.target && !state.target_hit &&
      equal_mod_boolean(p, *state.target))
    state.target_hit = index;
}

/// True iff p is exactly one variable with coefficient 1; fills var.
bool as_single_variable(const Polynomial& p, Var& var) {
  if (p.terms().size() != 1) return false;
  const Term& t = p.terms().front();
  if (t.coeff != 1 || t.mono.degree() != 1) return false;
  var = t.mono.vars().front();
  return true;
}

bool vars_within(const Polynomial& p, const std::set<Var>& ambient,
                 Var& offending) {
  for (const auto& t : p.terms())
    for (const auto& v : t.mono.vars())
      if (!ambient.count(v)) {
        offending = v;
        return false;
      }
  return true;
}

}  // namespace

std::optional<StepFailure> step_axiom(ProofState& state, const Index& index,
                                      const Polynomial& poly) {
  if (state.store.count(index))
    return make_failure(CheckErrorKind::IndexInUse,
                        "index '" + index + "' is already in use");
  poly.collect_vars(state.vars);
  state.store.emplace(index, poly);
  note_target(state, index, poly);
  return std::nullopt;
}

std::optional<StepFailure> step_deletion(ProofState& state, const Index& index,
                                         std::vector<CheckWarning>* warnings,
                                         int line) {
  if (state.store.erase(index) == 0 && warnings)
    warnings->push_back(
        {"deletion of unknown index '" + index + "'", line});
  return std::nullopt;
}

std::optional<StepFailure> step_lincomb(ProofState& state,
                                        const LinCombStep& step) {
  std::vector<std::pair<Polynomial, Polynomial>> parts;
  parts.reserve(step.operands.size());
  for (std::size_t i = 0; i < step.operands.size(); ++i) {
    auto it = state.store.find(step.operands[i]);
    if (it == state.store.end())
      return make_failure(
          CheckErrorKind::MissingOperand,
          "operand '" + step.operands[i] + "' is not present");
    parts.emplace_back(step.coeffs[i], it->second);
  }
  if (state.store.count(step.index))
    return make_failure(CheckErrorKind::IndexInUse,
                        "index '" + step.index + "' is already in use");
  Var offending;
  for (const auto& coeff : step.coeffs)
    if (!vars_within(coeff, state.vars, offending))
      return make_failure(
          CheckErrorKind::UnknownVariable,
          "coefficient variable '" + offending.name + "' not in X");
  if (!vars_within(step.conclusion, state.vars, offending))
    return make_failure(
        CheckErrorKind::UnknownVariable,
        "conclusion variable '" + offending.name + "' not in X");
  const Polynomial computed = linear_combination(parts);
  if (!equal_mod_boolean(computed, step.conclusion))
    return make_failure(CheckErrorKind::ConclusionMismatch,
                        "stated " + poly_to_string(step.conclusion) +
                            ", combination gives " + poly_to_string(computed));
  state.store.emplace(step.index, step.conclusion);
  note_target(state, step.index, step.conclusion);
  return std::nullopt;
}

std::optional<StepFailure> step_ext(ProofState& state, const ExtStep& step) {
  if (state.store.count(step.index))
    return make_failure(CheckErrorKind::IndexInUse,
                        "index '" + step.index + "' is already in use");
  if (state.vars.count(step.var))
    return make_failure(CheckErrorKind::VariableNotFresh,
                        "variable '" + step.var.name + "' is already in X");
  Var offending;
  if (!vars_within(step.poly, state.vars, offending))
    return make_failure(CheckErrorKind::UnknownVariable,
                        "variable '" + offending.name + "' not in X");
  if (!is_boolean_valued(step.poly))
    return make_failure(
        CheckErrorKind::NotBooleanValued,
        poly_to_string(step.poly) + " is not Boolean-valued");
  const Polynomial stored =
      -Polynomial::variable(step.var) + step.poly;
  state.vars.insert(step.var);
  state.store.emplace(step.index, stored);
  note_target(state, step.index, stored);
  return std::nullopt;
}

/*------------------------------------------------------------------------*/

std::optional<StepFailure> check_pattern_body(const PatternNewStep& step,
                                              const CheckOptions& options,
                                              Pattern& out) {
  // A pattern is a standalone proof: fresh state, inputs as axioms.
  ProofState local;
  for (const auto& [lidx, poly] : step.inputs)
    if (auto fail = step_axiom(local, lidx, poly))
      return make_failure(fail->kind,
                          "pattern input '" + lidx + "': " + fail->detail);

  std::map<Index, Polynomial> conclusions;  // last value stored by a body step
  std::set<Var> ext_introduced;
  for (std::size_t k = 0; k < step.body.size(); ++k) {
    const Step& inner = step.body[k];
    std::optional<StepFailure> fail;
    if (const auto* lc = std::get_if<LinCombStep>(&inner.node)) {
      fail = step_lincomb(local, *lc);
      if (!fail) conclusions[lc->index] = lc->conclusion;
    } else if (const auto* ext = std::get_if<ExtStep>(&inner.node)) {
      fail = step_ext(local, *ext);
      if (!fail) {
        conclusions[ext->index] = local.store.at(ext->index);
        ext_introduced.insert(ext->var);
      }
    } else if (const auto* del = std::get_if<DeletionStep>(&inner.node)) {
      fail = step_deletion(local, del->index);
    } else {
      fail = make_failure(CheckErrorKind::BodyStepNotAllowed,
                          std::string(step_rule_name(inner.node)) +
                              " is not allowed in a pattern body");
    }
    if (fail)
      return make_failure(fail->kind, "body step " + std::to_string(k + 1) +
                                          ": " + fail->detail);
  }

  out.id = step.pattern_id;
  out.inputs.clear();
  out.outputs.clear();
  for (const auto& [lidx, poly] : step.inputs) out.inputs.push_back(poly);
  for (const auto& lidx : step.outputs) {
    auto it = conclusions.find(lidx);
    if (it != conclusions.end()) {
      out.outputs.push_back(it->second);
      continue;
    }
    if (options.allow_input_outputs) {
      auto input = std::find_if(step.inputs.begin(), step.inputs.end(),
                                [&](const auto& in) { return in.first == lidx; });
      if (input != step.inputs.end()) {
        out.outputs.push_back(input->second);
        continue;
      }
    }
    return make_failure(
        CheckErrorKind::OutputNotAConclusion,
        "output '" + lidx + "' is not the conclusion of a body step");
  }

  out.vars.clear();
  for (const auto& p : out.inputs) p.collect_vars(out.vars);
  std::set<Var> output_vars;
  for (const auto& p : out.outputs) p.collect_vars(output_vars);
  out.vars.insert(output_vars.begin(), output_vars.end());
  out.ext_vars.clear();
  for (const auto& v : ext_introduced)
    if (output_vars.count(v)) out.ext_vars.insert(v);

  if (options.debug)
    out.debug_body = Pattern::DebugBody{step.inputs, step.body, step.outputs};
  else
    out.debug_body.reset();
  return std::nullopt;
}

std::optional<StepFailure> step_pattern_new(ProofState& state,
                                            const PatternNewStep& step,
                                            const CheckOptions& options) {
  if (state.patterns.count(step.pattern_id))
    return make_failure(
        CheckErrorKind::PatternIdInUse,
        "pattern id '" + step.pattern_id + "' is already in use");
  Pattern pattern;
  if (auto fail = check_pattern_body(step, options, pattern)) return fail;
  state.patterns.emplace(step.pattern_id, std::move(pattern));
  return std::nullopt;
}

/*------------------------------------------------------------------------*/

namespace {

/// Replays the retained body under phi, with internal extension variables
/// renamed to reserved synthetic names. Appends a description of every
/// divergence to mismatches.
void replay_pattern_body(const Pattern& pattern, const PatternApplyStep& step,
                         const std::set<Var>& ambient,
                         std::vector<std::string>* mismatches) {
  if (!pattern.debug_body || !mismatches) return;
  const auto& body = *pattern.debug_body;

  auto report = [&](const std::string& what) {
    mismatches->push_back("pattern '" + pattern.id + "' at apply of outputs " +
                          (step.outputs.empty() ? std::string("[]")
                                                : step.outputs.front().first) +
                          ": " + what);
  };

  // phi extended with synthetic fresh names for internal extension vars.
  Substitution phi = step.phi;
  std::set<Var> used = ambient;
  for (const auto& [v, image] : step.phi.entries()) {
    Var single;
    if (as_single_variable(image, single)) used.insert(single);
  }
  int synth = 0;
  for (const auto& inner : body.steps) {
    const auto* ext = std::get_if<ExtStep>(&inner.node);
    if (!ext || pattern.ext_vars.count(ext->var) || phi.contains(ext->var))
      continue;
    Var name;
    do {
      name = Var{"_rpl" + std::to_string(synth++) + "_" + ext->var.name};
    } while (used.count(name));
    used.insert(name);
    phi.set(ext->var, Polynomial::variable(name));
  }

  try {
    std::map<Index, Polynomial> replayed;
    for (const auto& [lidx, poly] : body.inputs)
      replayed[lidx] = substitute(poly, phi);
    for (const auto& inner : body.steps) {
      if (const auto* lc = std::get_if<LinCombStep>(&inner.node)) {
        std::vector<std::pair<Polynomial, Polynomial>> parts;
        for (std::size_t i = 0; i < lc->operands.size(); ++i) {
          auto it = replayed.find(lc->operands[i]);
          if (it == replayed.end()) {
            report("replay lost operand '" + lc->operands[i] + "'");
            return;
          }
          parts.emplace_back(substitute(lc->coeffs[i], phi), it->second);
        }
        const Polynomial computed = linear_combination(parts);
        const Polynomial expected = substitute(lc->conclusion, phi);
        if (!equal_mod_boolean(computed, expected)) {
          report("replayed combination " + poly_to_string(computed) +
                 " differs from substituted conclusion " +
                 poly_to_string(expected));
          return;
        }
        replayed[lc->index] = computed;
      } else if (const auto* ext = std::get_if<ExtStep>(&inner.node)) {
        Var image;
        if (!as_single_variable(phi.image(ext->var), image)) {
          report("extension variable '" + ext->var.name +
                 "' does not map to a variable");
          return;
        }
        replayed[ext->index] =
            -Polynomial::variable(image) + substitute(ext->poly, phi);
      } else if (const auto* del = std::get_if<DeletionStep>(&inner.node)) {
        replayed.erase(del->index);
      }
    }
    for (std::size_t r = 0; r < body.outputs.size(); ++r) {
      auto it = replayed.find(body.outputs[r]);
      const Polynomial* got = nullptr;
      if (it != replayed.end()) got = &it->second;
      if (!got) {
        report("replay lost output '" + body.outputs[r] + "'");
        return;
      }
      if (!equal_mod_boolean(*got, step.outputs[r].second))
        report("output " + std::to_string(r + 1) + " replays to " +
               poly_to_string(*got) + " but the apply claims " +
               poly_to_string(step.outputs[r].second));
    }
  } catch (const UnmappedVariableError& e) {
    report(std::string("replay hit an unmapped variable: ") + e.what());
  }
}

}  // namespace

std::optional<StepFailure> step_pattern_apply(
    ProofState& state, const PatternApplyStep& step,
    const CheckOptions& options, std::vector<std::string>* debug_mismatches) {
  auto pat_it = state.patterns.find(step.pattern_id);
  if (pat_it == state.patterns.end())
    return make_failure(CheckErrorKind::UnknownPattern,
                        "no pattern with id '" + step.pattern_id + "'");
  const Pattern& pattern = pat_it->second;

  // (ii) X_ext must be disjoint from X.
  for (const auto& v : step.fresh)
    if (state.vars.count(v))
      return make_failure(
          CheckErrorKind::FreshVarNotFresh,
          "extension variable '" + v.name + "' is already in X");
  const std::set<Var> fresh_set(step.fresh.begin(), step.fresh.end());

  // phi must cover every variable of the stored pattern.
  for (const auto& v : pattern.vars)
    if (!step.phi.contains(v))
      return make_failure(
          CheckErrorKind::UnmappedVariable,
          "phi has no image for pattern variable '" + v.name + "'");

  // (iii) phi maps V_ext injectively into X_ext.
  std::set<Var> ext_images;
  for (const auto& v : pattern.ext_vars) {
    Var image;
    if (!as_single_variable(step.phi.image(v), image) ||
        !fresh_set.count(image))
      return make_failure(CheckErrorKind::PhiExtImageNotFresh,
                          "phi(" + v.name +
                              ") is not one of the fresh extension variables");
    if (!ext_images.insert(image).second)
      return make_failure(
          CheckErrorKind::PhiNotInjectiveOnExt,
          "phi maps two extension variables to '" + image.name + "'");
  }

  std::set<Var> ambient = state.vars;
  ambient.insert(fresh_set.begin(), fresh_set.end());

  // Images live in K[X u X_ext] and (iv) comply with the Boolean axioms.
  for (const auto& v : pattern.vars) {
    const Polynomial& image = step.phi.image(v);
    Var offending;
    if (!vars_within(image, ambient, offending))
      return make_failure(CheckErrorKind::PhiImageOutsideAmbient,
                          "phi(" + v.name + ") mentions '" + offending.name +
                              "', which is neither in X nor fresh");
    if (!is_boolean_valued(image))
      return make_failure(CheckErrorKind::PhiNotBooleanValued,
                          "phi(" + v.name + ") = " + poly_to_string(image) +
                              " is not Boolean-valued");
  }

  // (v) input polynomials match under phi.
  if (step.inputs.size() != pattern.inputs.size())
    return make_failure(CheckErrorKind::InputArityMismatch,
                        "pattern expects " +
                            std::to_string(pattern.inputs.size()) +
                            " inputs, got " + std::to_string(step.inputs.size()));
  for (std::size_t r = 0; r < step.inputs.size(); ++r) {
    auto it = state.store.find(step.inputs[r]);
    if (it == state.store.end())
      return make_failure(CheckErrorKind::MissingOperand,
                          "input '" + step.inputs[r] + "' is not present");
    const Polynomial expected = substitute(pattern.inputs[r], step.phi);
    if (!equal_mod_boolean(it->second, expected))
      return make_failure(
          CheckErrorKind::InputMismatch,
          "input " + std::to_string(r + 1) + " is " +
              poly_to_string(it->second) + " but the pattern requires " +
              poly_to_string(expected));
  }

  // (vi) output polynomials match under phi.
  if (step.outputs.size() != pattern.outputs.size())
    return make_failure(
        CheckErrorKind::OutputArityMismatch,
        "pattern produces " + std::to_string(pattern.outputs.size()) +
            " outputs, got " + std::to_string(step.outputs.size()));
  std::set<Index> claimed;
  for (const auto& [idx, poly] : step.outputs) {
    if (state.store.count(idx) || !claimed.insert(idx).second)
      return make_failure(CheckErrorKind::OutputIndexInUse,
                          "output index '" + idx + "' is already in use");
    Var offending;
    if (!vars_within(poly, ambient, offending))
      return make_failure(CheckErrorKind::UnknownVariable,
                          "output variable '" + offending.name +
                              "' is neither in X nor fresh");
  }
  for (std::size_t r = 0; r < step.outputs.size(); ++r) {
    const Polynomial expected = substitute(pattern.outputs[r], step.phi);
    if (!equal_mod_boolean(step.outputs[r].second, expected))
      return make_failure(
          CheckErrorKind::OutputMismatch,
          "output " + std::to_string(r + 1) + " is " +
              poly_to_string(step.outputs[r].second) +
              " but the pattern instantiates to " + poly_to_string(expected));
  }

  // Commit.
  state.vars.insert(fresh_set.begin(), fresh_set.end());
  for (const auto& [idx, poly] : step.outputs) {
    state.store.emplace(idx, poly);
    note_target(state, idx, poly);
  }

  if (options.debug)
    replay_pattern_body(pattern, step, ambient, debug_mismatches);
  return std::nullopt;
}

/*------------------------------------------------------------------------*/

Checker::Checker(std::optional<Polynomial> target, CheckOptions options)
    : options_(options) {
  state_.target = std::move(target);
}

bool Checker::feed(const Step& step, bool from_axiom_file) {
  if (failed_) return false;
  ++ordinal_;
  count_step(verdict_.stats, step);

  std::optional<StepFailure> fail;
  if (from_axiom_file && !std::holds_alternative<AxiomStep>(step.node)) {
    fail = StepFailure{CheckErrorKind::NotAnAxiom,
                       std::string(step_rule_name(step.node)) +
                           " step in the axiom file"};
  } else if (const auto* ax = std::get_if<AxiomStep>(&step.node)) {
    fail = step_axiom(state_, ax->index, ax->poly);
  } else if (const auto* del = std::get_if<DeletionStep>(&step.node)) {
    fail = step_deletion(state_, del->index, &verdict_.warnings,
                         step.span.line);
  } else if (const auto* lc = std::get_if<LinCombStep>(&step.node)) {
    fail = step_lincomb(state_, *lc);
  } else if (const auto* ext = std::get_if<ExtStep>(&step.node)) {
    fail = step_ext(state_, *ext);
  } else if (const auto* pn = std::get_if<PatternNewStep>(&step.node)) {
    fail = step_pattern_new(state_, *pn, options_);
  } else if (const auto* pa = std::get_if<PatternApplyStep>(&step.node)) {
    fail = step_pattern_apply(state_, *pa, options_,
                              &verdict_.debug_replay_mismatches);
    if (!fail && options_.debug) ++verdict_.debug_replays;
  }

  if (fail) {
    failed_ = true;
    Index index;
    struct IndexOf {
      Index operator()(const AxiomStep& s) const { return s.index; }
      Index operator()(const DeletionStep& s) const { return s.index; }
      Index operator()(const LinCombStep& s) const { return s.index; }
      Index operator()(const ExtStep& s) const { return s.index; }
      Index operator()(const PatternNewStep& s) const { return s.pattern_id; }
      Index operator()(const PatternApplyStep& s) const {
        return s.pattern_id;
      }
    };
    index = std::visit(IndexOf{}, step.node);
    verdict_.failure = Verdict::Failure{
        index,      ordinal_,        fail->kind,
        fail->detail, step.span,     from_axiom_file};
    return false;
  }
  return true;
}

Verdict Checker::finish() {
  verdict_.target_hit = state_.target_hit;
  if (verdict_.failure) {
    verdict_.status = VerdictStatus::Rejected;
  } else if (state_.target && !state_.target_hit) {
    verdict_.status = VerdictStatus::TargetNotFound;
  } else {
    verdict_.status = VerdictStatus::Accepted;
  }
  return verdict_;
}

Verdict run_check(const ProofDocument& axioms, const ProofDocument& proof,
                  const std::optional<Polynomial>& target,
                  const CheckOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Checker checker(target, options);
  for (const auto& step : axioms.steps)
    if (!checker.feed(step, /*from_axiom_file=*/true)) break;
  for (const auto& step : proof.steps)
    if (!checker.feed(step)) break;
  Verdict verdict = checker.finish();
  verdict.stats.wall_time_millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count();
  return verdict;
}

}  // namespace lpac
