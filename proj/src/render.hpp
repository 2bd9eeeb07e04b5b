#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "symtensor/ring.hpp"

namespace symtensor::detail {

struct RenderTerm {
  CoeffText coeff;
  std::string monomial;  // empty for the constant term
};

// "X" for exponent 1, "X^k" otherwise. Exponent 0 yields an empty string.
std::string power_text(std::string_view var, std::uint64_t exponent);

// Joins terms as `a*m1 - b*m2 + c`; "0" when there are no terms.
std::string render_sum(const std::vector<RenderTerm>& terms);

// Coefficient text of a sum used as a factor inside a larger expression.
CoeffText sum_text(const std::vector<RenderTerm>& terms);

}  // namespace symtensor::detail
