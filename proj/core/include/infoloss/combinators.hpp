#pragma once

#include <span>
#include <vector>

#include "infoloss/measure.hpp"

namespace infoloss {

/// Composition f . g for g: p -> q and f: q -> r. Requires the codomain of g
/// and the domain of f to be equal exactly (same labels, same weights);
/// throws ValidationError(not_composable) otherwise.
MeasurePreservingMap compose(const MeasurePreservingMap& f, const MeasurePreservingMap& g);

/// Disjoint union of spaces. Point labels are prefixed with their component
/// index ("0.a", "1.b", ...), which makes the union total and deterministic;
/// all implemented functionals are invariant under the relabeling. The n-ary
/// form is primitive so associativity holds by construction of the labels.
FiniteMeasureSpace direct_sum_spaces(std::span<const FiniteMeasureSpace> spaces);

/// Componentwise direct sum of maps, acting on prefixed labels.
MeasurePreservingMap direct_sum_maps(std::span<const MeasurePreservingMap> maps);

/// Multiplies every weight by lambda >= 0; labels are unchanged.
FiniteMeasureSpace scale_space(const Weight& lambda, const FiniteMeasureSpace& space);

/// Scales domain and codomain by lambda >= 0; the underlying function is
/// unchanged.
MeasurePreservingMap scale_map(const Weight& lambda, const MeasurePreservingMap& map);

/// Coefficients of a convex combination: each value lies in [0, 1] and they
/// sum to exactly 1. Throws ValidationError(not_convex) otherwise.
class ConvexCoefficients {
 public:
  explicit ConvexCoefficients(std::vector<Weight> values);

  std::size_t size() const { return values_.size(); }
  const Weight& at(std::size_t i) const { return values_[i]; }
  const std::vector<Weight>& values() const { return values_; }

 private:
  std::vector<Weight> values_;
};

/// Convex combination of spaces: the direct sum of the scaled components.
/// A combination of probability spaces is again a probability space, exactly.
/// Zero-coefficient components are retained with all-zero weights.
FiniteMeasureSpace convex_combination(const ConvexCoefficients& coeffs,
                                      std::span<const FiniteMeasureSpace> spaces);
MeasurePreservingMap convex_combination(const ConvexCoefficients& coeffs,
                                        std::span<const MeasurePreservingMap> maps);

struct PointDecomposition {
  ConvexCoefficients coefficients;          // the weights of the input space
  std::vector<FiniteMeasureSpace> points;   // one copy of ("*", 1) per point
};

/// Decomposes a probability space as a convex combination of one-point
/// spaces, in stored label order. Reassembling with convex_combination
/// yields a space bijective with the input and carrying equal weights.
PointDecomposition decompose_to_points(const FiniteMeasureSpace& space);

/// Label of a direct-sum point: "<componentIndex>.<label>".
std::string component_label(std::size_t component, std::string_view label);

}  // namespace infoloss
