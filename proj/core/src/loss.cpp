#include "infoloss/loss.hpp"

#include <cmath>
#include <string>

#include "infoloss/stable_sum.hpp"

namespace infoloss {

namespace {
constexpr double kDustTolerance = 1e-12;
}

LossFunctional::LossFunctional(double constant, EntropyOrder order)
    : constant_(constant), order_(order) {
  if (!(constant >= 0.0)) {
    throw ValidationError(errc::negative_constant,
                          "loss constant must be nonnegative, got " + std::to_string(constant));
  }
}

double loss(const LossFunctional& functional, const MeasurePreservingMap& map) {
  const double drop = tsallis(functional.order(), map.domain()) -
                      tsallis(functional.order(), map.codomain());
  if (drop < 0.0) {
    if (drop < -kDustTolerance) {
      throw ValidationError(errc::negative_loss,
                            "entropy difference " + std::to_string(drop) +
                                " below the dust threshold");
    }
    return 0.0;
  }
  return functional.constant() * drop;
}

double loss_conditional_form(const LossFunctional& functional,
                             const MeasurePreservingMap& map) {
  if (!functional.order().is_one()) {
    throw ValidationError(errc::order_not_one,
                          "conditional-entropy form is defined for order 1 only");
  }
  std::vector<double> terms;
  terms.reserve(map.domain().size());
  for (std::size_t i = 0; i < map.domain().size(); ++i) {
    const Weight& p = map.domain().weight(i);
    if (p.is_zero()) continue;  // terms with p_i = 0 contribute nothing
    const Weight& q = map.codomain().weight(map.target_index(i));
    const Weight ratio = q / p;  // exact; >= 1 since q aggregates p
    const double x = p.to_double();
    if (x <= 0.0) continue;
    terms.push_back(x * std::log(ratio.to_double()));
  }
  return functional.constant() * stable_total(std::move(terms));
}

PipelineLoss pipeline_loss(const LossFunctional& functional,
                           std::span<const MeasurePreservingMap> chain) {
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    if (chain[k].codomain() != chain[k + 1].domain()) {
      throw ValidationError(errc::not_composable,
                            "stage " + std::to_string(k + 1) + " -> stage " +
                                std::to_string(k + 2) +
                                ": codomain differs from the next domain");
    }
  }
  PipelineLoss result;
  result.stage_losses.reserve(chain.size());
  StableSum total;
  for (const auto& stage : chain) {
    const double v = loss(functional, stage);
    result.stage_losses.push_back(v);
    total.add(v);
  }
  result.total = total.value();
  return result;
}

}  // namespace infoloss
