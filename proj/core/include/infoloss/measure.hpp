#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "infoloss/errors.hpp"
#include "infoloss/rational.hpp"

namespace infoloss {

/// Measure weights are exact nonnegative rationals.
using Weight = Rational;

/// A finite set of labelled points, each carrying an exact nonnegative
/// weight. Labels are pairwise distinct; point identity is the label text,
/// so two spaces with equal weights but different labels are distinct
/// objects. Spaces are immutable after construction and may be shared
/// between threads freely.
///
/// An empty space (zero points) is a legal measure space; a probability
/// space has total mass exactly 1 and is therefore nonempty.
class FiniteMeasureSpace {
 public:
  /// Constructs the empty space.
  FiniteMeasureSpace();

  /// Validates and constructs. Throws ValidationError with code
  /// duplicate_label, negative_weight, or length_mismatch.
  FiniteMeasureSpace(std::vector<std::string> labels, std::vector<Weight> weights);

  std::size_t size() const { return labels_.size(); }
  bool is_empty() const { return labels_.empty(); }

  const std::string& label(std::size_t i) const { return labels_[i]; }
  const Weight& weight(std::size_t i) const { return weights_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Weight>& weights() const { return weights_; }

  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Exact sum of all weights (cached at construction).
  const Weight& total_mass() const { return total_mass_; }

  bool is_probability() const { return total_mass_ == Weight(1); }

  /// Exact structural equality: same labels in the same order, same weights.
  friend bool operator==(const FiniteMeasureSpace& a, const FiniteMeasureSpace& b) {
    return a.labels_ == b.labels_ && a.weights_ == b.weights_;
  }
  friend bool operator!=(const FiniteMeasureSpace& a, const FiniteMeasureSpace& b) {
    return !(a == b);
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Weight> weights_;
  std::unordered_map<std::string, std::size_t> index_;
  Weight total_mass_;
};

/// A function between spaces whose pushforward reproduces the codomain
/// measure exactly: for every codomain point j, the codomain weight of j
/// equals the sum of domain weights over the preimage of j. Construction
/// verifies this identity in exact rational arithmetic and rejects any
/// discrepancy, however small.
class MeasurePreservingMap {
 public:
  /// Assignment given as codomain indices aligned with the domain's label
  /// order. Throws ValidationError (target_not_in_codomain,
  /// length_mismatch, pushforward_mismatch).
  MeasurePreservingMap(FiniteMeasureSpace domain, FiniteMeasureSpace codomain,
                       std::vector<std::size_t> targets);

  /// Assignment given per domain label. Throws ValidationError
  /// (unmapped_point, target_not_in_codomain, pushforward_mismatch).
  MeasurePreservingMap(FiniteMeasureSpace domain, FiniteMeasureSpace codomain,
                       const std::unordered_map<std::string, std::string>& assignment);

  const FiniteMeasureSpace& domain() const { return domain_; }
  const FiniteMeasureSpace& codomain() const { return codomain_; }

  std::size_t target_index(std::size_t domain_index) const { return targets_[domain_index]; }
  const std::string& target_label(std::size_t domain_index) const {
    return codomain_.label(targets_[domain_index]);
  }
  const std::vector<std::size_t>& targets() const { return targets_; }

  friend bool operator==(const MeasurePreservingMap& a, const MeasurePreservingMap& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.targets_ == b.targets_;
  }
  friend bool operator!=(const MeasurePreservingMap& a, const MeasurePreservingMap& b) {
    return !(a == b);
  }

 private:
  void validate_pushforward() const;

  FiniteMeasureSpace domain_;
  FiniteMeasureSpace codomain_;
  std::vector<std::size_t> targets_;
};

/// Factory spellings of the validating constructors.
FiniteMeasureSpace validate_space(std::vector<std::string> labels, std::vector<Weight> weights);
MeasurePreservingMap validate_map(FiniteMeasureSpace domain, FiniteMeasureSpace codomain,
                                  const std::unordered_map<std::string, std::string>& assignment);

Weight total_mass(const FiniteMeasureSpace& space);

struct NormalizedSpace {
  Weight mass;                       // the original total mass
  FiniteMeasureSpace probability;    // same labels, weights divided by mass
};

/// Splits a positive-mass space into (total mass, probability space);
/// scaling the probability part by the mass reconstructs the input exactly.
/// Throws ValidationError(zero_total_mass) on mass-zero spaces.
NormalizedSpace normalize(const FiniteMeasureSpace& space);

/// The unique map onto the one-point space "*" carrying the space's total
/// mass. For a probability space this is the terminal morphism.
MeasurePreservingMap terminal_map(const FiniteMeasureSpace& space);

MeasurePreservingMap identity_map(const FiniteMeasureSpace& space);

/// True iff the assignment is a bijection on labels.
bool is_bijective(const MeasurePreservingMap& map);

}  // namespace infoloss
