/*------------------------------------------------------------------------*/
/*! \file miner.cpp
    \brief fragment detection, canonicalization, and proof rewriting

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#include "lpac/miner.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lpac/serialize.hpp"

namespace lpac {

namespace {

/*------------------------------------------------------------------------*/
// Region discovery

struct Region {
  std::size_t start = 0;
  std::size_t length = 0;
};

std::vector<Region> regions_from_markers(const ProofDocument& doc,
                                         std::vector<std::string>& notes) {
  std::vector<Region> regions;
  std::optional<std::size_t> open;
  for (const auto& marker : doc.markers) {
    if (marker.kind == FragmentMarker::Kind::Begin) {
      if (open) {
        notes.push_back("nested frag-begin ignored");
        continue;
      }
      open = marker.position;
    } else {
      if (!open) {
        notes.push_back("frag-end without frag-begin ignored");
        continue;
      }
      if (marker.position > *open)
        regions.push_back({*open, marker.position - *open});
      open.reset();
    }
  }
  if (open) notes.push_back("unterminated frag-begin ignored");
  return regions;
}

/// Automatic segmentation: a fragment grows while the next LinComb/Ext
/// step references a conclusion of the open fragment and the fragment
/// stays within the window; deletions of fragment-local or fragment-input
/// indices stay attached. Everything else closes the fragment.
std::vector<Region> regions_automatic(const ProofDocument& doc, int window) {
  std::vector<Region> regions;
  std::optional<std::size_t> start;
  std::set<Index> defined;
  std::set<Index> external_refs;

  auto close = [&](std::size_t end) {
    if (start) regions.push_back({*start, end - *start});
    start.reset();
    defined.clear();
    external_refs.clear();
  };

  for (std::size_t k = 0; k < doc.steps.size(); ++k) {
    const Step& step = doc.steps[k];
    if (const auto* lc = std::get_if<LinCombStep>(&step.node)) {
      bool references = false;
      for (const auto& j : lc->operands)
        if (defined.count(j)) references = true;
      const bool fits =
          start && k - *start < static_cast<std::size_t>(window);
      if (!(start && references && fits)) close(k);
      if (!start) start = k;
      for (const auto& j : lc->operands)
        if (!defined.count(j)) external_refs.insert(j);
      defined.insert(lc->index);
    } else if (const auto* ext = std::get_if<ExtStep>(&step.node)) {
      close(k);
      start = k;
      defined.insert(ext->index);
    } else if (const auto* del = std::get_if<DeletionStep>(&step.node)) {
      if (!(start && (defined.count(del->index) ||
                      external_refs.count(del->index)))) {
        close(k);
        continue;  // a lone deletion is never a fragment
      }
      // stays attached to the open fragment
    } else {
      close(k);
    }
  }
  close(doc.steps.size());
  return regions;
}

/*------------------------------------------------------------------------*/
// Occurrence extraction

struct Occurrence {
  Region region;
  Fragment fragment;
  std::vector<Step> hoisted;       // external deletions re-emitted after the apply
  std::set<Var> internal_ext;      // introduced but absent from outputs
  CanonicalKey key;
  std::size_t key_id = 0;
};

/// Materializes the fragment for one region, reading operand values from
/// the running index->polynomial map. Returns nullopt (with a note) when
/// the region cannot form a pattern body.
std::optional<Occurrence> extract_occurrence(
    const ProofDocument& doc, const Region& region,
    const std::map<Index, Polynomial>& current,
    std::vector<std::string>& notes) {
  Occurrence occ;
  occ.region = region;

  std::map<Index, Polynomial> local = current;  // evolves across the region
  std::map<Index, Polynomial> defined;          // alive fragment conclusions
  std::set<Index> input_set;
  std::set<Index> hoist_deleted;
  std::vector<Index> defined_order;
  std::vector<Var> ext_order;

  auto reject = [&](const std::string& why) -> std::optional<Occurrence> {
    notes.push_back("fragment at step " + std::to_string(region.start + 1) +
                    " skipped: " + why);
    return std::nullopt;
  };

  for (std::size_t k = region.start; k < region.start + region.length; ++k) {
    const Step& step = doc.steps[k];
    if (const auto* lc = std::get_if<LinCombStep>(&step.node)) {
      for (const auto& j : lc->operands) {
        if (defined.count(j) || input_set.count(j)) continue;
        if (hoist_deleted.count(j))
          return reject("operand '" + j + "' used after deletion");
        auto it = local.find(j);
        if (it == local.end())
          return reject("operand '" + j + "' has no value");
        occ.fragment.inputs.emplace_back(j, it->second);
        input_set.insert(j);
      }
      if (local.count(lc->index))
        return reject("index '" + lc->index + "' already in use");
      if (!defined.count(lc->index)) defined_order.push_back(lc->index);
      defined[lc->index] = lc->conclusion;
      local[lc->index] = lc->conclusion;
      occ.fragment.steps.push_back(step);
    } else if (const auto* ext = std::get_if<ExtStep>(&step.node)) {
      if (local.count(ext->index))
        return reject("index '" + ext->index + "' already in use");
      const Polynomial stored =
          -Polynomial::variable(ext->var) + ext->poly;
      if (!defined.count(ext->index)) defined_order.push_back(ext->index);
      defined[ext->index] = stored;
      local[ext->index] = stored;
      ext_order.push_back(ext->var);
      occ.fragment.steps.push_back(step);
    } else if (const auto* del = std::get_if<DeletionStep>(&step.node)) {
      if (defined.count(del->index) || input_set.count(del->index)) {
        defined.erase(del->index);
        occ.fragment.steps.push_back(step);
      } else {
        hoist_deleted.insert(del->index);
        occ.hoisted.push_back(step);
      }
      local.erase(del->index);
    } else {
      return reject(std::string(step_rule_name(step.node)) +
                    " cannot be part of a pattern body");
    }
  }

  for (const auto& idx : defined_order) {
    auto it = defined.find(idx);
    if (it != defined.end())
      occ.fragment.outputs.emplace_back(idx, it->second);
  }

  std::set<Var> output_vars;
  for (const auto& [idx, poly] : occ.fragment.outputs)
    poly.collect_vars(output_vars);
  for (const auto& v : ext_order)
    if (!output_vars.count(v)) occ.internal_ext.insert(v);

  try {
    occ.key = canonicalize_fragment(occ.fragment);
  } catch (const IllFormedFragmentError& e) {
    return reject(e.what());
  }
  return occ;
}

/// Variables syntactically mentioned by a flat step.
void step_var_mentions(const Step& step, std::set<Var>& out) {
  if (const auto* ax = std::get_if<AxiomStep>(&step.node)) {
    ax->poly.collect_vars(out);
  } else if (const auto* lc = std::get_if<LinCombStep>(&step.node)) {
    lc->conclusion.collect_vars(out);
    for (const auto& c : lc->coeffs) c.collect_vars(out);
  } else if (const auto* ext = std::get_if<ExtStep>(&step.node)) {
    out.insert(ext->var);
    ext->poly.collect_vars(out);
  }
}

}  // namespace

/*------------------------------------------------------------------------*/

CanonicalKey canonicalize_fragment(const Fragment& frag) {
  CanonicalKey key;

  std::map<Index, Index> idx_map;
  std::size_t next_idx = 1;
  auto local_index = [&](const Index& original) {
    auto [it, inserted] =
        idx_map.emplace(original, "p" + std::to_string(next_idx));
    if (inserted) ++next_idx;
    return it->second;
  };

  std::map<Var, Var> var_map;
  std::size_t next_var = 1;
  auto rename_var = [&](const Var& v) {
    auto [it, inserted] = var_map.emplace(v, Var{"v" + std::to_string(next_var)});
    if (inserted) {
      ++next_var;
      key.renaming.emplace_back(v, it->second);
    }
    return it->second;
  };
  auto rename_poly = [&](const Polynomial& p) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      std::vector<Var> vars;
      for (const auto& v : t.mono.vars()) vars.push_back(rename_var(v));
      terms.push_back({t.coeff, Monomial::of(std::move(vars))});
    }
    return Polynomial::from_terms(std::move(terms));
  };

  key.pattern.pattern_id = "0";
  for (const auto& [idx, poly] : frag.inputs)
    key.pattern.inputs.emplace_back(local_index(idx), rename_poly(poly));

  std::set<Index> known = [&] {
    std::set<Index> s;
    for (const auto& [idx, poly] : frag.inputs) s.insert(idx);
    return s;
  }();

  for (const auto& step : frag.steps) {
    Step renamed;
    if (const auto* lc = std::get_if<LinCombStep>(&step.node)) {
      LinCombStep out;
      for (const auto& j : lc->operands) {
        if (!known.count(j))
          throw IllFormedFragmentError(
              "operand '" + j + "' is neither an input nor an earlier conclusion");
        out.operands.push_back(local_index(j));
      }
      out.conclusion = rename_poly(lc->conclusion);
      for (const auto& c : lc->coeffs) out.coeffs.push_back(rename_poly(c));
      out.index = local_index(lc->index);
      known.insert(lc->index);
      renamed.node = std::move(out);
    } else if (const auto* ext = std::get_if<ExtStep>(&step.node)) {
      ExtStep out;
      out.index = local_index(ext->index);
      out.var = rename_var(ext->var);
      out.poly = rename_poly(ext->poly);
      known.insert(ext->index);
      renamed.node = std::move(out);
    } else if (const auto* del = std::get_if<DeletionStep>(&step.node)) {
      if (!known.count(del->index))
        throw IllFormedFragmentError("deletion of unknown index '" +
                                     del->index + "'");
      renamed.node = DeletionStep{local_index(del->index)};
    } else {
      throw IllFormedFragmentError(std::string(step_rule_name(step.node)) +
                                   " cannot be part of a pattern body");
    }
    key.pattern.body.push_back(std::move(renamed));
  }

  std::set<Var> output_vars;
  for (const auto& [idx, poly] : frag.outputs) {
    auto it = idx_map.find(idx);
    if (it == idx_map.end())
      throw IllFormedFragmentError("output '" + idx +
                                   "' is not defined by the fragment");
    key.pattern.outputs.push_back(it->second);
    poly.collect_vars(output_vars);
  }

  // Fresh list: extension variables that survive into the outputs, in
  // introduction order.
  for (const auto& step : frag.steps)
    if (const auto* ext = std::get_if<ExtStep>(&step.node))
      if (output_vars.count(ext->var)) key.fresh.push_back(ext->var);

  Step pattern_step;
  pattern_step.node = key.pattern;
  key.text = serialize_step(pattern_step);
  return key;
}

/*------------------------------------------------------------------------*/

std::string CompressionReport::to_jsonl() const {
  std::ostringstream out;
  for (const auto& k : keys) {
    nlohmann::json line = {{"key", k.digest},
                           {"occurrences", k.occurrences},
                           {"bodySteps", k.body_steps},
                           {"patternEmitted", k.pattern_emitted}};
    out << line.dump() << '\n';
  }
  nlohmann::json summary = {{"fragments", fragments},
                            {"hits", hits},
                            {"hitRate", hit_rate},
                            {"patternsEmitted", patterns_emitted},
                            {"appliesEmitted", applies_emitted},
                            {"stepsIn", steps_in},
                            {"stepsOut", steps_out}};
  out << summary.dump() << '\n';
  return out.str();
}

ProofDocument compress_proof(const ProofDocument& flat,
                             const FragmentationConfig& config,
                             CompressionReport* report,
                             const ProofDocument* axioms) {
  for (const auto& step : flat.steps)
    if (std::holds_alternative<PatternNewStep>(step.node) ||
        std::holds_alternative<PatternApplyStep>(step.node))
      throw std::invalid_argument("proof already contains pattern steps");

  CompressionReport local_report;
  CompressionReport& rep = report ? *report : local_report;
  rep = CompressionReport{};
  rep.steps_in = flat.steps.size();

  const bool use_markers =
      config.mode == FragmentationConfig::Mode::Markers ||
      (config.mode == FragmentationConfig::Mode::FromInput &&
       !flat.markers.empty());
  std::vector<Region> regions =
      use_markers ? regions_from_markers(flat, rep.notes)
                  : regions_automatic(flat, config.window);

  // Walk the document once, materializing each region's fragment with the
  // index values current at its entry.
  struct KeyEntry {
    std::size_t id;
    std::size_t count = 0;
    std::size_t body_steps = 0;
  };
  std::map<std::string, KeyEntry> keys;
  std::vector<Occurrence> occurrences;
  std::map<Index, Polynomial> current;
  if (axioms)
    for (const auto& step : axioms->steps)
      if (const auto* ax = std::get_if<AxiomStep>(&step.node))
        current[ax->index] = ax->poly;
  std::size_t next_region = 0;
  for (std::size_t k = 0; k < flat.steps.size(); ++k) {
    if (next_region < regions.size() && regions[next_region].start == k) {
      const Region region = regions[next_region++];
      if (auto occ = extract_occurrence(flat, region, current, rep.notes)) {
        auto [it, inserted] = keys.emplace(
            occ->key.text, KeyEntry{keys.size(), 0, occ->key.pattern.body.size()});
        it->second.count += 1;
        occ->key_id = it->second.id;
        ++rep.fragments;
        if (!inserted) ++rep.hits;
        occurrences.push_back(std::move(*occ));
      }
    }
    const Step& step = flat.steps[k];
    if (const auto* ax = std::get_if<AxiomStep>(&step.node)) {
      current[ax->index] = ax->poly;
    } else if (const auto* lc = std::get_if<LinCombStep>(&step.node)) {
      current[lc->index] = lc->conclusion;
    } else if (const auto* ext = std::get_if<ExtStep>(&step.node)) {
      current[ext->index] = -Polynomial::variable(ext->var) + ext->poly;
    } else if (const auto* del = std::get_if<DeletionStep>(&step.node)) {
      current.erase(del->index);
    }
  }
  rep.hit_rate = rep.fragments
                     ? static_cast<double>(rep.hits) / rep.fragments
                     : 0.0;

  // Internal extension variables must not be referenced after their
  // fragment; otherwise the compressed proof would lose them from X.
  std::vector<std::set<Var>> mentions(flat.steps.size());
  for (std::size_t k = 0; k < flat.steps.size(); ++k)
    step_var_mentions(flat.steps[k], mentions[k]);
  std::erase_if(occurrences, [&](const Occurrence& occ) {
    for (const auto& v : occ.internal_ext)
      for (std::size_t k = occ.region.start + occ.region.length;
           k < flat.steps.size(); ++k)
        if (mentions[k].count(v)) {
          auto it = keys.find(occ.key.text);
          if (it != keys.end()) it->second.count -= 1;
          rep.notes.push_back(
              "fragment at step " + std::to_string(occ.region.start + 1) +
              " skipped: internal extension variable '" + v.name +
              "' is referenced later");
          return true;
        }
    return false;
  });

  // Assemble the rewritten document.
  ProofDocument out;
  std::map<std::size_t, Index> emitted_pid;  // key id -> pattern id
  std::size_t next_pid = 1;
  std::size_t occ_at = 0;
  std::size_t k = 0;
  while (k < flat.steps.size()) {
    const bool replace =
        occ_at < occurrences.size() && occurrences[occ_at].region.start == k &&
        keys.at(occurrences[occ_at].key.text).count >=
            static_cast<std::size_t>(config.min_repeats);
    if (occ_at < occurrences.size() && occurrences[occ_at].region.start == k &&
        !replace)
      ++occ_at;  // key too rare; fragment stays flat
    if (!replace) {
      out.steps.push_back(flat.steps[k]);
      ++k;
      continue;
    }

    Occurrence& occ = occurrences[occ_at++];
    auto [pid_it, first_time] =
        emitted_pid.emplace(occ.key_id, std::to_string(next_pid));
    if (first_time) {
      ++next_pid;
      Step pattern_new;
      PatternNewStep pn = occ.key.pattern;
      pn.pattern_id = pid_it->second;
      pattern_new.node = std::move(pn);
      out.steps.push_back(std::move(pattern_new));
      ++rep.patterns_emitted;
    }

    // phi's domain: variables of the canonical inputs and outputs.
    std::set<Var> domain;
    for (const auto& [lidx, poly] : occ.key.pattern.inputs)
      poly.collect_vars(domain);
    {
      std::map<Var, Var> to_canonical(occ.key.renaming.begin(),
                                      occ.key.renaming.end());
      for (const auto& [idx, poly] : occ.fragment.outputs)
        for (const auto& t : poly.terms())
          for (const auto& v : t.mono.vars()) domain.insert(to_canonical.at(v));
    }

    PatternApplyStep apply;
    apply.pattern_id = pid_it->second;
    apply.fresh = occ.key.fresh;
    for (const auto& [original, canonical] : occ.key.renaming)
      if (domain.count(canonical))
        apply.phi.set(canonical, Polynomial::variable(original));
    for (const auto& [idx, poly] : occ.fragment.inputs)
      apply.inputs.push_back(idx);
    apply.outputs = occ.fragment.outputs;
    Step apply_step;
    apply_step.node = std::move(apply);
    out.steps.push_back(std::move(apply_step));
    ++rep.applies_emitted;

    for (const auto& hoisted : occ.hoisted) out.steps.push_back(hoisted);
    k += occ.region.length;
  }

  rep.steps_out = out.steps.size();
  for (const auto& [text, entry] : keys) {
    CompressionReport::KeyInfo info;
    std::ostringstream digest;
    digest << std::hex << std::hash<std::string>{}(text);
    info.digest = digest.str();
    info.occurrences = entry.count;
    info.body_steps = entry.body_steps;
    info.pattern_emitted =
        entry.count >= static_cast<std::size_t>(config.min_repeats) &&
        entry.count > 0;
    rep.keys.push_back(std::move(info));
  }
  return out;
}

}  // namespace lpac
