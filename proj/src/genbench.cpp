/*------------------------------------------------------------------------*/
/*! \file genbench.cpp
    \brief generation of repeated-building-block benchmark proofs

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#include "lpac/genbench.hpp"

#include <fstream>
#include <stdexcept>

#include "lpac/parser.hpp"
#include "lpac/serialize.hpp"

namespace lpac {

namespace {

/// The reusable block in pattern-space variables v1..v<m+1>: v1 is the
/// block input, v2..vm the internal chain, v<m+1> the carry. Axioms,
/// coefficients, and the derived conclusion of one block.
struct BlockTemplate {
  std::vector<Var> vars;          // v1 .. v<m+1>
  std::vector<Polynomial> inputs; // the m block axioms
  std::vector<Polynomial> coeffs; // LinComb coefficients, same length
  Polynomial conclusion;          // normalize(sum coeffs[j] * inputs[j])
};

BlockTemplate make_template(int arity) {
  if (arity < 2) throw std::invalid_argument("block arity must be >= 2");
  BlockTemplate t;
  for (int j = 1; j <= arity + 1; ++j)
    t.vars.push_back(Var{"v" + std::to_string(j)});

  t.inputs.push_back(parse_polynomial("v1+2*v2-2"));
  for (int j = 2; j < arity; ++j)
    t.inputs.push_back(
        parse_polynomial("-v" + std::to_string(j) + "+v" + std::to_string(j + 1)));
  t.inputs.push_back(parse_polynomial(
      "-v" + std::to_string(arity) + "-v" + std::to_string(arity + 1) + "+1"));

  if (arity == 2) {
    // Dense cofactors with a small conclusion: adding lambda*B to the
    // first coefficient and subtracting lambda*A from the second leaves
    // the combination itself unchanged at v1 - 2*v3.
    const Polynomial lambda =
        parse_polynomial("4*v1*v2*v3+6*v1*v3+8*v2*v3+9*v1+5*v2+21");
    t.coeffs.push_back(parse_polynomial("v2*v3+1") + lambda * t.inputs[1]);
    t.coeffs.push_back(parse_polynomial("v1*v2+2") - lambda * t.inputs[0]);
  } else {
    // Telescoping chain: one pass with coefficients (1, 2, ..., 2).
    t.coeffs.push_back(Polynomial::constant(1));
    for (int j = 1; j < arity; ++j) t.coeffs.push_back(Polynomial::constant(2));
  }

  std::vector<std::pair<Polynomial, Polynomial>> parts;
  for (std::size_t j = 0; j < t.inputs.size(); ++j)
    parts.emplace_back(t.coeffs[j], t.inputs[j]);
  t.conclusion = linear_combination(parts);
  return t;
}

/// Per-block renaming: v1 -> x<k>, v2.. -> y<k>*, v<m+1> -> z<k>.
Substitution block_substitution(const BlockTemplate& t, long k) {
  const std::string suffix = std::to_string(k);
  const int arity = static_cast<int>(t.inputs.size());
  Substitution sigma;
  sigma.set(t.vars[0], Polynomial::variable(Var{"x" + suffix}));
  for (int j = 2; j <= arity; ++j) {
    const std::string y = arity == 2
                              ? "y" + suffix
                              : "y" + suffix + "_" + std::to_string(j - 1);
    sigma.set(t.vars[j - 1], Polynomial::variable(Var{y}));
  }
  sigma.set(t.vars[arity], Polynomial::variable(Var{"z" + suffix}));
  return sigma;
}

Step make_step(StepNode node) {
  Step s;
  s.node = std::move(node);
  return s;
}

}  // namespace

ChainFiles generate_chain(const ChainSpec& spec, ChainFlavor flavor) {
  if (spec.blocks < 1) throw std::invalid_argument("blocks must be >= 1");
  const int n = spec.blocks;
  const int m = spec.block_arity;
  const BlockTemplate t = make_template(m);

  auto idx = [](long k) { return "l" + std::to_string(k); };

  ChainFiles files;
  files.target = Polynomial::constant(1);

  // Axioms: m per block, then the closing axiom 1 - sum of conclusions.
  Polynomial closing_axiom = Polynomial::constant(1);
  std::vector<Substitution> sigma;
  for (int i = 1; i <= n; ++i) {
    sigma.push_back(block_substitution(t, spec.seed + i));
    for (int j = 0; j < m; ++j)
      files.axioms.steps.push_back(make_step(AxiomStep{
          idx(static_cast<long>(i - 1) * m + j + 1),
          substitute(t.inputs[j], sigma.back())}));
    closing_axiom = closing_axiom - substitute(t.conclusion, sigma.back());
  }
  const Index closing_axiom_idx = idx(static_cast<long>(n) * m + 1);
  files.axioms.steps.push_back(
      make_step(AxiomStep{closing_axiom_idx, closing_axiom}));

  auto conclusion_idx = [&](int i) {
    return idx(static_cast<long>(n) * m + 1 + i);
  };

  if (flavor == ChainFlavor::Pattern) {
    PatternNewStep pat;
    pat.pattern_id = "1";
    const Index body_out = "p" + std::to_string(m + 1);
    LinCombStep body;
    body.index = body_out;
    body.conclusion = t.conclusion;
    for (int j = 0; j < m; ++j) {
      pat.inputs.emplace_back("p" + std::to_string(j + 1), t.inputs[j]);
      body.coeffs.push_back(t.coeffs[j]);
      body.operands.push_back("p" + std::to_string(j + 1));
    }
    pat.body.push_back(make_step(body));
    for (int j = 0; j < m; ++j)
      pat.body.push_back(make_step(DeletionStep{"p" + std::to_string(j + 1)}));
    pat.outputs.push_back(body_out);
    files.proof.steps.push_back(make_step(std::move(pat)));

    for (int i = 1; i <= n; ++i) {
      PatternApplyStep apply;
      apply.pattern_id = "1";
      apply.phi = sigma[i - 1];
      for (int j = 0; j < m; ++j)
        apply.inputs.push_back(idx(static_cast<long>(i - 1) * m + j + 1));
      apply.outputs.emplace_back(conclusion_idx(i),
                                 substitute(t.conclusion, sigma[i - 1]));
      files.proof.steps.push_back(make_step(std::move(apply)));
    }
  } else {
    for (int i = 1; i <= n; ++i) {
      files.proof.markers.push_back(
          {FragmentMarker::Kind::Begin, files.proof.steps.size()});
      LinCombStep block;
      block.index = conclusion_idx(i);
      block.conclusion = substitute(t.conclusion, sigma[i - 1]);
      for (int j = 0; j < m; ++j) {
        block.coeffs.push_back(substitute(t.coeffs[j], sigma[i - 1]));
        block.operands.push_back(idx(static_cast<long>(i - 1) * m + j + 1));
      }
      files.proof.steps.push_back(make_step(std::move(block)));
      for (int j = 0; j < m; ++j)
        files.proof.steps.push_back(make_step(
            DeletionStep{idx(static_cast<long>(i - 1) * m + j + 1)}));
      files.proof.markers.push_back(
          {FragmentMarker::Kind::End, files.proof.steps.size()});
    }
  }

  // Closing combination: the complement axiom plus every block conclusion.
  LinCombStep closing;
  closing.index = idx(static_cast<long>(n) * m + n + 2);
  closing.conclusion = Polynomial::constant(1);
  closing.coeffs.push_back(Polynomial::constant(1));
  closing.operands.push_back(closing_axiom_idx);
  for (int i = 1; i <= n; ++i) {
    closing.coeffs.push_back(Polynomial::constant(1));
    closing.operands.push_back(conclusion_idx(i));
  }
  files.proof.steps.push_back(make_step(std::move(closing)));
  return files;
}

void write_chain(const std::filesystem::path& dir, const std::string& name,
                 const ChainSpec& spec, ChainFlavor flavor) {
  const ChainFiles files = generate_chain(spec, flavor);
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& ext, const std::string& body) {
    std::ofstream out(dir / (name + ext), std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + name + ext);
    out << body;
  };
  write(".axioms", serialize(files.axioms));
  write(".target", serialize_target(files.target));
  write(".proof", serialize(files.proof));
}

}  // namespace lpac
