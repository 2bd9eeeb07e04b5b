#include "render.hpp"

namespace symtensor::detail {

namespace {

std::string term_body(const RenderTerm& term, bool standalone) {
  const CoeffText& c = term.coeff;
  if (term.monomial.empty()) {
    return (c.compound && !standalone) ? "(" + c.magnitude + ")" : c.magnitude;
  }
  if (!c.compound && c.magnitude == "1") return term.monomial;
  std::string factor = c.compound ? "(" + c.magnitude + ")" : c.magnitude;
  return factor + "*" + term.monomial;
}

}  // namespace

std::string power_text(std::string_view var, std::uint64_t exponent) {
  if (exponent == 0) return {};
  std::string out(var);
  if (exponent > 1) out += "^" + std::to_string(exponent);
  return out;
}

std::string render_sum(const std::vector<RenderTerm>& terms) {
  if (terms.empty()) return "0";
  const bool standalone = terms.size() == 1;
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const bool neg = terms[i].coeff.negative;
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += term_body(terms[i], standalone);
  }
  return out;
}

CoeffText sum_text(const std::vector<RenderTerm>& terms) {
  if (terms.empty()) return {false, "0", false};
  if (terms.size() == 1) {
    const RenderTerm& t = terms.front();
    if (t.monomial.empty()) return t.coeff;
    return {t.coeff.negative, term_body(t, true), false};
  }
  return {false, render_sum(terms), true};
}

}  // namespace symtensor::detail
