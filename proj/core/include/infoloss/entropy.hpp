#pragma once

#include <cstdint>
#include <string>

#include "infoloss/measure.hpp"

namespace infoloss {

/// The order alpha > 0 of a Tsallis entropy. The Shannon case alpha = 1 is
/// a symbolic branch chosen at construction; it is never inferred from a
/// float being close to 1. Orders near but not equal to 1 use the Tsallis
/// formula, which is numerically fine at the tolerances tested here.
class EntropyOrder {
 public:
  static EntropyOrder shannon() { return EntropyOrder(1.0, true); }

  /// Requires alpha > 0 and alpha != 1 (use shannon() for the exact-1
  /// branch). Throws ValidationError(invalid_order).
  static EntropyOrder tsallis(double alpha);

  /// Maps the exact double 1.0 to the Shannon branch, anything else to
  /// tsallis(alpha). This is an exact bitwise dispatch, not a tolerance.
  static EntropyOrder of(double alpha);

  bool is_one() const { return is_one_; }
  double alpha() const { return alpha_; }

  /// Short form for report names: "1", "2", "0.5", ...
  std::string str() const;

 private:
  EntropyOrder(double alpha, bool is_one) : alpha_(alpha), is_one_(is_one) {}

  double alpha_;
  bool is_one_;
};

/// Shannon entropy in nats. For a probability measure this is
/// -sum p_i ln p_i with 0 ln 0 = 0; for a general measure it is
/// ||p|| ln ||p|| - sum p_i ln p_i, which equals ||p|| times the entropy of
/// the normalized measure; a zero-mass measure has entropy 0. The value is
/// a function of the multiset of weights only (terms are summed in sorted
/// order), so relabelings leave it bit-for-bit unchanged.
double shannon(const FiniteMeasureSpace& space);

/// Tsallis entropy of the given order, in the same conventions as shannon():
/// ((sum p_i)^alpha - sum p_i^alpha) / (alpha - 1) for alpha != 1, the
/// Shannon entropy for the exact-1 branch, 0 for zero-mass measures.
/// Satisfies degree-alpha homogeneity: H_a(lambda p) = lambda^a H_a(p).
double tsallis(const EntropyOrder& order, const FiniteMeasureSpace& space);

/// Entropy of the uniform probability measure on n >= 1 points:
/// ln n at order 1, (1 - n^(1-alpha)) / (alpha - 1) otherwise.
double phi(const EntropyOrder& order, std::uint64_t n);

/// Recovers the Shannon entropy of a rational probability measure from the
/// uniform values alone: writing p_i = k_i / N over the least common
/// denominator N, returns phi(N) - sum p_i phi(k_i). Grouping a uniform
/// N-point space into blocks of sizes k_i shows this equals shannon(space);
/// the agreement of the two routes is what the tests check. Points with
/// k_i = 0 contribute nothing.
///
/// Throws ValidationError(not_probability) if the total mass is not 1 and
/// ValidationError(oversized_denominator) if N would exceed 10^7.
double faddeev_reconstruct(const FiniteMeasureSpace& space);

}  // namespace infoloss
