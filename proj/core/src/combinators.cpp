#include "infoloss/combinators.hpp"

#include <utility>

namespace infoloss {

std::string component_label(std::size_t component, std::string_view label) {
  std::string out = std::to_string(component);
  out += '.';
  out += label;
  return out;
}

MeasurePreservingMap compose(const MeasurePreservingMap& f, const MeasurePreservingMap& g) {
  if (g.codomain() != f.domain()) {
    throw ValidationError(errc::not_composable,
                          "codomain of the first map differs from domain of the second");
  }
  std::vector<std::size_t> targets;
  targets.reserve(g.domain().size());
  for (std::size_t i = 0; i < g.domain().size(); ++i) {
    targets.push_back(f.target_index(g.target_index(i)));
  }
  return MeasurePreservingMap(g.domain(), f.codomain(), std::move(targets));
}

FiniteMeasureSpace direct_sum_spaces(std::span<const FiniteMeasureSpace> spaces) {
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    for (std::size_t i = 0; i < spaces[k].size(); ++i) {
      labels.push_back(component_label(k, spaces[k].label(i)));
      weights.push_back(spaces[k].weight(i));
    }
  }
  return FiniteMeasureSpace(std::move(labels), std::move(weights));
}

MeasurePreservingMap direct_sum_maps(std::span<const MeasurePreservingMap> maps) {
  std::vector<FiniteMeasureSpace> domains;
  std::vector<FiniteMeasureSpace> codomains;
  domains.reserve(maps.size());
  codomains.reserve(maps.size());
  for (const auto& m : maps) {
    domains.push_back(m.domain());
    codomains.push_back(m.codomain());
  }
  FiniteMeasureSpace domain = direct_sum_spaces(domains);
  FiniteMeasureSpace codomain = direct_sum_spaces(codomains);

  std::vector<std::size_t> offsets(maps.size() + 1, 0);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    offsets[k + 1] = offsets[k] + maps[k].codomain().size();
  }
  std::vector<std::size_t> targets;
  targets.reserve(domain.size());
  for (std::size_t k = 0; k < maps.size(); ++k) {
    for (std::size_t i = 0; i < maps[k].domain().size(); ++i) {
      targets.push_back(offsets[k] + maps[k].target_index(i));
    }
  }
  return MeasurePreservingMap(std::move(domain), std::move(codomain), std::move(targets));
}

FiniteMeasureSpace scale_space(const Weight& lambda, const FiniteMeasureSpace& space) {
  if (lambda.is_negative()) {
    throw ValidationError(errc::negative_weight, "scale factor " + lambda.str());
  }
  std::vector<Weight> weights;
  weights.reserve(space.size());
  for (const Weight& w : space.weights()) weights.push_back(lambda * w);
  return FiniteMeasureSpace(space.labels(), std::move(weights));
}

MeasurePreservingMap scale_map(const Weight& lambda, const MeasurePreservingMap& map) {
  return MeasurePreservingMap(scale_space(lambda, map.domain()),
                              scale_space(lambda, map.codomain()), map.targets());
}

ConvexCoefficients::ConvexCoefficients(std::vector<Weight> values) : values_(std::move(values)) {
  Weight sum(0);
  for (const Weight& v : values_) {
    if (v.is_negative() || v > Weight(1)) {
      throw ValidationError(errc::not_convex, "coefficient " + v.str() + " outside [0, 1]");
    }
    sum += v;
  }
  if (sum != Weight(1)) {
    throw ValidationError(errc::not_convex, "coefficients sum to " + sum.str() + ", not 1");
  }
}

FiniteMeasureSpace convex_combination(const ConvexCoefficients& coeffs,
                                      std::span<const FiniteMeasureSpace> spaces) {
  if (coeffs.size() != spaces.size()) {
    throw ValidationError(errc::coefficient_mismatch,
                          std::to_string(coeffs.size()) + " coefficients for " +
                              std::to_string(spaces.size()) + " spaces");
  }
  std::vector<FiniteMeasureSpace> scaled;
  scaled.reserve(spaces.size());
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    scaled.push_back(scale_space(coeffs.at(k), spaces[k]));
  }
  return direct_sum_spaces(scaled);
}

MeasurePreservingMap convex_combination(const ConvexCoefficients& coeffs,
                                        std::span<const MeasurePreservingMap> maps) {
  if (coeffs.size() != maps.size()) {
    throw ValidationError(errc::coefficient_mismatch,
                          std::to_string(coeffs.size()) + " coefficients for " +
                              std::to_string(maps.size()) + " maps");
  }
  std::vector<MeasurePreservingMap> scaled;
  scaled.reserve(maps.size());
  for (std::size_t k = 0; k < maps.size(); ++k) {
    scaled.push_back(scale_map(coeffs.at(k), maps[k]));
  }
  return direct_sum_maps(scaled);
}

PointDecomposition decompose_to_points(const FiniteMeasureSpace& space) {
  if (!space.is_probability()) {
    throw ValidationError(errc::not_probability,
                          "decomposition requires total mass 1, got " +
                              space.total_mass().str());
  }
  std::vector<FiniteMeasureSpace> points;
  points.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    points.push_back(FiniteMeasureSpace({"*"}, {Weight(1)}));
  }
  return PointDecomposition{ConvexCoefficients(space.weights()), std::move(points)};
}

}  // namespace infoloss
