/*------------------------------------------------------------------------*/
/*! \file serialize.cpp
    \brief canonical serialization of polynomials, steps, and documents

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#include "lpac/serialize.hpp"

#include <sstream>

namespace lpac {

namespace {

void append_monomial(std::string& out, const Monomial& m) {
  bool first = true;
  for (const auto& v : m.vars()) {
    if (!first) out += '*';
    out += v.name;
    first = false;
  }
}

void append_term(std::string& out, const Rational& abs_coeff,
                 const Monomial& m) {
  if (m.is_unit()) {
    out += rational_to_string(abs_coeff);
    return;
  }
  if (abs_coeff != 1) {
    out += rational_to_string(abs_coeff);
    out += '*';
  }
  append_monomial(out, m);
}

/// Emits step-level tokens joined by single spaces.
class TokenWriter {
 public:
  TokenWriter& operator<<(const std::string& token) {
    if (!out_.empty()) out_ += ' ';
    out_ += token;
    return *this;
  }

  TokenWriter& operator<<(const char* token) {
    return *this << std::string(token);
  }

  std::string str() && { return std::move(out_); }

 private:
  std::string out_;
};

void write_step(TokenWriter& w, const Step& step);

void write_lincomb(TokenWriter& w, const LinCombStep& s) {
  w << "L" << s.index << "," << poly_to_string(s.conclusion) << ",";
  for (std::size_t i = 0; i < s.operands.size(); ++i) {
    if (i) w << ",";
    w << "(" << poly_to_string(s.coeffs[i]) << ")"
      << "*" << s.operands[i];
  }
}

void write_pattern_new(TokenWriter& w, const PatternNewStep& s) {
  w << "N" << s.pattern_id << "{" << "inputs" << "[";
  for (std::size_t i = 0; i < s.inputs.size(); ++i) {
    if (i) w << ",";
    w << s.inputs[i].first << ":" << poly_to_string(s.inputs[i].second);
  }
  w << "]" << "steps" << "[";
  for (const auto& inner : s.body) write_step(w, inner);
  w << "]" << "outputs" << "[";
  for (std::size_t i = 0; i < s.outputs.size(); ++i) {
    if (i) w << ",";
    w << s.outputs[i];
  }
  w << "]" << "}";
}

void write_pattern_apply(TokenWriter& w, const PatternApplyStep& s) {
  w << "U" << s.pattern_id << "{" << "fresh" << "[";
  for (const auto& v : s.fresh) w << v.name;
  w << "]" << "map" << "[";
  const auto& entries = s.phi.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) w << ",";
    w << entries[i].first.name << "->" << poly_to_string(entries[i].second);
  }
  w << "]" << "in" << "[";
  for (std::size_t i = 0; i < s.inputs.size(); ++i) {
    if (i) w << ",";
    w << s.inputs[i];
  }
  w << "]" << "out" << "[";
  for (std::size_t i = 0; i < s.outputs.size(); ++i) {
    if (i) w << ",";
    w << s.outputs[i].first << ":" << poly_to_string(s.outputs[i].second);
  }
  w << "]" << "}";
}

void write_step(TokenWriter& w, const Step& step) {
  struct Writer {
    TokenWriter& w;

    void operator()(const AxiomStep& s) const {
      w << "A" << s.index << "," << poly_to_string(s.poly);
    }
    void operator()(const DeletionStep& s) const { w << "D" << s.index; }
    void operator()(const LinCombStep& s) const { write_lincomb(w, s); }
    void operator()(const ExtStep& s) const {
      w << "E" << s.index << "," << s.var.name << ","
        << poly_to_string(s.poly);
    }
    void operator()(const PatternNewStep& s) const { write_pattern_new(w, s); }
    void operator()(const PatternApplyStep& s) const {
      write_pattern_apply(w, s);
    }
  };
  std::visit(Writer{w}, step.node);
  w << ";";
}

}  // namespace

std::string poly_to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    append_term(out, negative ? Rational(-t.coeff) : t.coeff, t.mono);
    first = false;
  }
  return out;
}

std::string serialize_step(const Step& step) {
  TokenWriter w;
  write_step(w, step);
  return std::move(w).str();
}

std::string serialize(const ProofDocument& doc) {
  std::string out;
  std::size_t marker = 0;
  for (std::size_t i = 0; i <= doc.steps.size(); ++i) {
    while (marker < doc.markers.size() && doc.markers[marker].position == i) {
      out += doc.markers[marker].kind == FragmentMarker::Kind::Begin
                 ? "# frag-begin\n"
                 : "# frag-end\n";
      ++marker;
    }
    if (i < doc.steps.size()) {
      out += serialize_step(doc.steps[i]);
      out += '\n';
    }
  }
  return out;
}

std::string serialize_target(const Polynomial& target) {
  return poly_to_string(target) + " ;\n";
}

}  // namespace lpac
