#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace infoloss {

/// Compensated (Neumaier) accumulator. Tracks the rounding error of every
/// addition and folds it back in when the value is read, which keeps sums of
/// up to ~1e4 double terms honest at the 1e-12 tolerances used here.
struct StableSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      compensation += (sum - t) + x;
    } else {
      compensation += (x - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + compensation; }
};

/// Sums a multiset of terms in a storage-independent order (ascending), so
/// the result is a function of the multiset alone. Entropy evaluations use
/// this to make bijection invariance hold bit-for-bit, not just up to dust.
inline double stable_total(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end());
  StableSum acc;
  for (double t : terms) acc.add(t);
  return acc.value();
}

}  // namespace infoloss
