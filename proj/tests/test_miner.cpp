#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpac/checker.hpp"
#include "lpac/miner.hpp"
#include "lpac/parser.hpp"
#include "lpac/serialize.hpp"
#include "test_util.hpp"

using namespace lpac;

namespace {

Polynomial poly(const char* s) { return parse_polynomial(s); }

Step lincomb(const char* index, const char* conclusion,
             std::vector<std::pair<const char*, const char*>> parts) {
  LinCombStep lc;
  lc.index = index;
  lc.conclusion = poly(conclusion);
  for (const auto& [coeff, operand] : parts) {
    lc.coeffs.push_back(poly(coeff));
    lc.operands.push_back(operand);
  }
  Step step;
  step.node = std::move(lc);
  return step;
}

std::uint64_t lincomb_count_with_bodies(const ProofDocument& doc) {
  std::uint64_t count = 0;
  for (const auto& step : doc.steps) {
    if (std::holds_alternative<LinCombStep>(step.node)) ++count;
    if (const auto* pn = std::get_if<PatternNewStep>(&step.node))
      for (const auto& inner : pn->body)
        if (std::holds_alternative<LinCombStep>(inner.node)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("canonicalize_fragment renames by first occurrence") {
  Fragment frag;
  frag.steps.push_back(
      lincomb("l6", "x-2*z", {{"1", "l1"}, {"2", "l2"}}));
  frag.inputs = {{"l1", poly("x+2*y-2")}, {"l2", poly("-y-z+1")}};
  frag.outputs = {{"l6", poly("x-2*z")}};

  const CanonicalKey key = canonicalize_fragment(frag);
  REQUIRE(key.pattern.inputs.size() == 2);
  CHECK(key.pattern.inputs[0].first == "p1");
  CHECK(key.pattern.inputs[0].second == poly("v1+2*v2-2"));
  CHECK(key.pattern.inputs[1].second == poly("-v2-v3+1"));
  CHECK(key.pattern.outputs == std::vector<Index>{"p3"});
  CHECK(key.renaming ==
        std::vector<std::pair<Var, Var>>{{Var{"x"}, Var{"v1"}},
                                         {Var{"y"}, Var{"v2"}},
                                         {Var{"z"}, Var{"v3"}}});

  // The sibling block over a, b, z canonicalizes to the same key.
  Fragment sibling;
  sibling.steps.push_back(
      lincomb("l7", "a-2*z", {{"1", "l3"}, {"2", "l4"}}));
  sibling.inputs = {{"l3", poly("a+2*b-2")}, {"l4", poly("-b-z+1")}};
  sibling.outputs = {{"l7", poly("a-2*z")}};
  CHECK(canonicalize_fragment(sibling).text == key.text);
}

TEST_CASE("zero conclusions keep keys independent of names beyond arity") {
  auto make = [](const char* in_idx, const char* in_poly, const char* idx) {
    Fragment frag;
    frag.steps.push_back(lincomb(idx, "0", {{"0", in_idx}}));
    frag.inputs = {{in_idx, poly(in_poly)}};
    frag.outputs = {{idx, poly("0")}};
    return canonicalize_fragment(frag);
  };
  CHECK(make("l1", "s+t", "l9").text == make("k4", "u+w", "k5").text);
}

TEST_CASE("ill-formed fragments are rejected") {
  Fragment frag;
  frag.steps.push_back(lincomb("l2", "x", {{"1", "l1"}}));
  frag.outputs = {{"l2", poly("x")}};
  // l1 is not declared as an input.
  CHECK_THROWS_AS(canonicalize_fragment(frag), IllFormedFragmentError);
}

TEST_CASE("compress the flat variant of the first worked example") {
  const ProofDocument flat =
      parse_proof(lpt::read_fixture("example1_flat.proof"));
  const ProofDocument axioms =
      parse_axioms(lpt::read_fixture("example1.axioms"));
  CompressionReport report;
  const ProofDocument out = compress_proof(flat, {}, &report, &axioms);

  REQUIRE(out.steps.size() == 4);
  CHECK(std::holds_alternative<PatternNewStep>(out.steps[0].node));
  CHECK(std::holds_alternative<PatternApplyStep>(out.steps[1].node));
  CHECK(std::holds_alternative<PatternApplyStep>(out.steps[2].node));
  // The closing combination passes through untouched.
  CHECK(out.steps[3] == flat.steps[2]);

  CHECK(report.fragments == 2);
  CHECK(report.hits == 1);
  CHECK(report.patterns_emitted == 1);

  const Verdict verdict = run_check(axioms, out, poly("1"), {});
  CHECK(verdict.status == VerdictStatus::Accepted);
  CHECK(verdict.target_hit == Index{"l8"});
}

TEST_CASE("a proof without repeats passes through unchanged") {
  const char* text =
      "L l6, x-2*z, (1)*l1, (2)*l2;\n"
      "L l8, a-x+1-2*z+x-2*z, (1)*l5, (2)*l6;\n";
  const ProofDocument flat = parse_proof(text);
  CompressionReport report;
  const ProofDocument out = compress_proof(flat, {}, &report);
  CHECK(out.steps == flat.steps);
  CHECK(report.patterns_emitted == 0);
  CHECK(report.steps_in == report.steps_out);
}

TEST_CASE("pattern steps in the input are refused") {
  const ProofDocument doc = parse_proof(lpt::read_fixture("example1.proof"));
  CHECK_THROWS_AS(compress_proof(doc, {}), std::invalid_argument);
}

TEST_CASE("automatic mode finds repeated independent blocks") {
  // Three copies of the same shape over disjoint variables, no markers.
  const char* text =
      "A a1, r+2*s-2;\n"
      "A a2, -s-t+1;\n"
      "A a3, f+2*g-2;\n"
      "A a4, -g-h+1;\n"
      "A a5, m+2*n-2;\n"
      "A a6, -n-o+1;\n"
      "L c1, r-2*t, (1)*a1, (2)*a2;\n"
      "L c2, f-2*h, (1)*a3, (2)*a4;\n"
      "L c3, m-2*o, (1)*a5, (2)*a6;\n";
  FragmentationConfig config;
  config.mode = FragmentationConfig::Mode::Automatic;
  CompressionReport report;
  const ProofDocument out = compress_proof(parse_proof(text), config, &report);
  CHECK(report.fragments == 3);
  CHECK(report.hits == 2);
  CHECK(report.patterns_emitted == 1);
  CHECK(report.applies_emitted == 3);

  const Verdict verdict =
      run_check(ProofDocument{}, out, std::nullopt, {});
  CHECK(verdict.status == VerdictStatus::Accepted);
}

TEST_CASE("deletions of unrelated indices are hoisted out of fragments") {
  const char* text =
      "# frag-begin\n"
      "L c1, r-2*t, (1)*a1, (2)*a2;\n"
      "D a6;\n"
      "# frag-end\n"
      "# frag-begin\n"
      "L c2, f-2*h, (1)*a3, (2)*a4;\n"
      "D a5;\n"
      "# frag-end\n";
  const char* axiom_text =
      "A a1, r+2*s-2;\nA a2, -s-t+1;\nA a3, f+2*g-2;\nA a4, -g-h+1;\n"
      "A a5, m;\nA a6, n;\n";
  const ProofDocument axioms = parse_axioms(axiom_text);
  CompressionReport report;
  const ProofDocument out =
      compress_proof(parse_proof(text), {}, &report, &axioms);

  REQUIRE(out.steps.size() == 5);  // N, U, D a6, U, D a5
  CHECK(std::holds_alternative<DeletionStep>(out.steps[2].node));
  CHECK(std::get<DeletionStep>(out.steps[2].node).index == "a6");
  CHECK(report.patterns_emitted == 1);

  const Verdict verdict = run_check(axioms, out, std::nullopt, {});
  CHECK(verdict.status == VerdictStatus::Accepted);
}

TEST_CASE("input deletions become body-local deletions") {
  const char* text =
      "# frag-begin\n"
      "L c1, r-2*t, (1)*a1, (2)*a2;\n"
      "D a1;\nD a2;\n"
      "# frag-end\n"
      "# frag-begin\n"
      "L c2, f-2*h, (1)*a3, (2)*a4;\n"
      "D a3;\nD a4;\n"
      "# frag-end\n";
  const char* axiom_text =
      "A a1, r+2*s-2;\nA a2, -s-t+1;\nA a3, f+2*g-2;\nA a4, -g-h+1;\n";
  const ProofDocument axioms = parse_axioms(axiom_text);
  CompressionReport report;
  const ProofDocument out =
      compress_proof(parse_proof(text), {}, &report, &axioms);

  REQUIRE(out.steps.size() == 3);  // N, U, U
  const auto& pattern = std::get<PatternNewStep>(out.steps[0].node);
  REQUIRE(pattern.body.size() == 3);
  CHECK(std::holds_alternative<DeletionStep>(pattern.body[1].node));
  CHECK(std::get<DeletionStep>(pattern.body[1].node).index == "p1");

  const Verdict verdict = run_check(axioms, out, std::nullopt, {});
  CHECK(verdict.status == VerdictStatus::Accepted);
}

TEST_CASE("fragments with extension steps mine the fresh list") {
  // Each block introduces a complement variable and uses it in the
  // combination: c = 1*(s*r) + s*(-rbar+1-r) = -s*rbar+s.
  const char* text =
      "# frag-begin\n"
      "E e1, rbar, 1-r;\n"
      "L c1, -s*rbar+s, (1)*a1, (s)*e1;\n"
      "# frag-end\n"
      "# frag-begin\n"
      "E e2, fbar, 1-f;\n"
      "L c2, -g*fbar+g, (1)*a2, (g)*e2;\n"
      "# frag-end\n";
  const char* axiom_text = "A a1, r*s;\nA a2, f*g;\n";
  const ProofDocument axioms = parse_axioms(axiom_text);
  const ProofDocument flat = parse_proof(text);
  REQUIRE(run_check(axioms, flat, std::nullopt, {}).status ==
          VerdictStatus::Accepted);

  CompressionReport report;
  const ProofDocument out = compress_proof(flat, {}, &report, &axioms);
  REQUIRE(out.steps.size() == 3);  // N, U, U
  const auto& first = std::get<PatternApplyStep>(out.steps[1].node);
  const auto& second = std::get<PatternApplyStep>(out.steps[2].node);
  CHECK(first.fresh == std::vector<Var>{Var{"rbar"}});
  CHECK(second.fresh == std::vector<Var>{Var{"fbar"}});
  CHECK(report.hits == 1);

  CheckOptions debug;
  debug.debug = true;
  const Verdict verdict = run_check(axioms, out, std::nullopt, debug);
  CHECK(verdict.status == VerdictStatus::Accepted);
  CHECK(verdict.debug_replay_mismatches.empty());
}

TEST_CASE("internal extension variables referenced later disqualify") {
  // The fragment introduces w internally (deleted inside), but a later
  // step uses w in a coefficient; compressing would lose w from X.
  const char* text =
      "# frag-begin\n"
      "E e1, w, 1-r;\n"
      "L c1, r-2*t+w-w, (1)*a1, (2)*a2;\n"
      "D e1;\n"
      "# frag-end\n"
      "L c9, r-2*t, (w)*a3, (1)*c1;\n";
  const char* axiom_text =
      "A a1, r+2*s-2;\nA a2, -s-t+1;\nA a3, 0;\n";
  const ProofDocument axioms = parse_axioms(axiom_text);
  CompressionReport report;
  const ProofDocument out =
      compress_proof(parse_proof(text), {}, &report, &axioms);
  CHECK(out.steps == parse_proof(text).steps);
  bool noted = false;
  for (const auto& note : report.notes)
    if (note.find("referenced later") != std::string::npos) noted = true;
  CHECK(noted);
}

TEST_CASE("lincomb count never grows under compression") {
  for (const char* name : {"example1_flat.proof"}) {
    const ProofDocument flat = parse_proof(lpt::read_fixture(name));
    const ProofDocument axioms =
        parse_axioms(lpt::read_fixture("example1.axioms"));
    const ProofDocument out = compress_proof(flat, {}, nullptr, &axioms);
    CHECK(lincomb_count_with_bodies(out) <= lincomb_count_with_bodies(flat));
  }
}

TEST_CASE("report renders as JSON lines") {
  const ProofDocument flat =
      parse_proof(lpt::read_fixture("example1_flat.proof"));
  const ProofDocument axioms =
      parse_axioms(lpt::read_fixture("example1.axioms"));
  CompressionReport report;
  compress_proof(flat, {}, &report, &axioms);
  const std::string jsonl = report.to_jsonl();
  CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 2);  // 1 key + summary
  CHECK(jsonl.find("\"hitRate\":0.5") != std::string::npos);
}
