#pragma once

#include <stdexcept>
#include <string>

namespace infoloss {

enum class errc {
  duplicate_label,
  negative_weight,
  length_mismatch,
  unmapped_point,
  target_not_in_codomain,
  pushforward_mismatch,
  zero_total_mass,
  not_composable,
  coefficient_mismatch,
  not_convex,
  not_probability,
  oversized_denominator,
  order_not_one,
  invalid_order,
  negative_constant,
  negative_loss,
};

const char* errc_name(errc code);

/// Raised when a value fails one of the exact structural invariants.
/// Every check behind this error is decided in exact rational arithmetic;
/// no tolerance is involved.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(errc code, const std::string& detail);
  errc code() const { return code_; }

 private:
  errc code_;
};

/// Raised by the text-format readers; carries the 1-based source line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& detail);
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace infoloss
