#pragma once

#include <span>
#include <vector>

#include "infoloss/entropy.hpp"
#include "infoloss/measure.hpp"

namespace infoloss {

/// The information-loss family F_{c,alpha}(f) = c (H_a(p) - H_a(q)) for
/// f: p -> q, with constant c >= 0 and entropy order alpha.
class LossFunctional {
 public:
  LossFunctional(double constant, EntropyOrder order);

  double constant() const { return constant_; }
  const EntropyOrder& order() const { return order_; }

 private:
  double constant_;
  EntropyOrder order_;
};

/// Information loss along a map, via the entropy difference. The result is
/// nonnegative: negative float dust of magnitude at most 1e-12 is clamped
/// to 0, while anything more negative raises ValidationError(negative_loss)
/// so that arithmetic bugs surface instead of being hidden.
double loss(const LossFunctional& functional, const MeasurePreservingMap& map);

/// The same quantity in conditional-entropy form,
/// c * sum_i p_i ln(q_{f(i)} / p_i), with zero-weight terms dropped. Valid
/// for probability and general measures alike, but only for the exact
/// order-1 branch; throws ValidationError(order_not_one) otherwise. This is
/// a deliberately independent second route used to cross-check loss().
double loss_conditional_form(const LossFunctional& functional, const MeasurePreservingMap& map);

struct PipelineLoss {
  std::vector<double> stage_losses;
  double total;
};

/// Losses of a composable chain, applied first-to-last, and their sum. The
/// sum equals the loss of the composite map up to float dust; the command
/// layer prints that comparison as a check line. Throws
/// ValidationError(not_composable) naming the first bad boundary.
PipelineLoss pipeline_loss(const LossFunctional& functional,
                           std::span<const MeasurePreservingMap> chain);

}  // namespace infoloss
