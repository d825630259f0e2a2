#include "infoloss/errors.hpp"

namespace infoloss {

const char* errc_name(errc code) {
  switch (code) {
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::negative_weight: return "NegativeWeight";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::unmapped_point: return "UnmappedPoint";
    case errc::target_not_in_codomain: return "TargetNotInCodomain";
    case errc::pushforward_mismatch: return "PushforwardMismatch";
    case errc::zero_total_mass: return "ZeroTotalMass";
    case errc::not_composable: return "NotComposable";
    case errc::coefficient_mismatch: return "CoefficientMismatch";
    case errc::not_convex: return "NotConvex";
    case errc::not_probability: return "NotProbability";
    case errc::oversized_denominator: return "OversizedDenominator";
    case errc::order_not_one: return "OrderNotOne";
    case errc::invalid_order: return "InvalidOrder";
    case errc::negative_constant: return "NegativeConstant";
    case errc::negative_loss: return "NegativeLoss";
  }
  return "UnknownError";
}

ValidationError::ValidationError(errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

ParseError::ParseError(int line, const std::string& detail)
    : std::runtime_error("parse error at line " + std::to_string(line) + ": " + detail),
      line_(line) {}

}  // namespace infoloss
