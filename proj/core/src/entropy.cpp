#include "infoloss/entropy.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "infoloss/stable_sum.hpp"

namespace infoloss {

namespace {

constexpr double kDustTolerance = 1e-12;

// Entropies of nonnegative measures are nonnegative; anything below zero by
// more than float dust signals an arithmetic bug and is raised, not hidden.
double clamp_dust(double value) {
  if (value < 0.0) {
    if (value < -kDustTolerance) {
      throw ValidationError(errc::negative_loss,
                            "entropy evaluated to " + std::to_string(value));
    }
    return 0.0;
  }
  return value == 0.0 ? 0.0 : value;  // normalizes -0.0
}

}  // namespace

EntropyOrder EntropyOrder::tsallis(double alpha) {
  if (!(alpha > 0.0)) {
    throw ValidationError(errc::invalid_order,
                          "order must be a positive real, got " + std::to_string(alpha));
  }
  if (alpha == 1.0) {
    throw ValidationError(errc::invalid_order,
                          "order exactly 1 must be chosen with EntropyOrder::shannon()");
  }
  return EntropyOrder(alpha, false);
}

EntropyOrder EntropyOrder::of(double alpha) {
  return alpha == 1.0 ? shannon() : tsallis(alpha);
}

std::string EntropyOrder::str() const {
  if (is_one_) return "1";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", alpha_);
  return buf;
}

double shannon(const FiniteMeasureSpace& space) {
  const Weight& mass = space.total_mass();
  if (mass.is_zero()) return 0.0;

  std::vector<double> terms;
  terms.reserve(space.size());
  for (const Weight& w : space.weights()) {
    if (w.is_zero()) continue;  // 0 ln 0 = 0
    const double x = w.to_double();
    if (x <= 0.0) continue;
    terms.push_back(x * std::log(x));
  }
  const double m = mass.to_double();
  const double base = space.is_probability() ? 0.0 : m * std::log(m);
  return clamp_dust(base - stable_total(std::move(terms)));
}

double tsallis(const EntropyOrder& order, const FiniteMeasureSpace& space) {
  if (order.is_one()) return shannon(space);

  const Weight& mass = space.total_mass();
  if (mass.is_zero()) return 0.0;

  const double a = order.alpha();
  std::vector<double> terms;
  terms.reserve(space.size());
  for (const Weight& w : space.weights()) {
    if (w.is_zero()) continue;
    const double x = w.to_double();
    if (x <= 0.0) continue;
    terms.push_back(std::pow(x, a));
  }
  const double m = mass.to_double();
  const double total = space.is_probability() ? 1.0 : std::pow(m, a);
  return clamp_dust((total - stable_total(std::move(terms))) / (a - 1.0));
}

double phi(const EntropyOrder& order, std::uint64_t n) {
  if (n == 0) {
    throw ValidationError(errc::invalid_order, "uniform measure needs at least one point");
  }
  const double ln_n = std::log(static_cast<double>(n));
  if (order.is_one()) return ln_n;
  const double a = order.alpha();
  // (1 - n^(1-a)) / (a - 1), written through expm1 for stability near a = 1.
  return clamp_dust(-std::expm1((1.0 - a) * ln_n) / (a - 1.0));
}

double faddeev_reconstruct(const FiniteMeasureSpace& space) {
  if (!space.is_probability()) {
    throw ValidationError(errc::not_probability,
                          "reconstruction requires total mass 1, got " +
                              space.total_mass().str());
  }

  const mpz_class limit(10000000);  // 10^7 guard on the common denominator
  mpz_class common(1);
  for (const Weight& w : space.weights()) {
    mpz_class den = w.denominator();
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), den.get_mpz_t());
    if (common > limit) {
      throw ValidationError(errc::oversized_denominator,
                            "common denominator exceeds 10^7");
    }
  }
  const auto big_n = static_cast<std::uint64_t>(common.get_ui());
  const EntropyOrder one = EntropyOrder::shannon();

  std::vector<double> terms;
  terms.reserve(space.size());
  for (const Weight& w : space.weights()) {
    if (w.is_zero()) continue;
    mpz_class k = w.numerator() * (common / w.denominator());
    terms.push_back(w.to_double() * phi(one, static_cast<std::uint64_t>(k.get_ui())));
  }
  return clamp_dust(phi(one, big_n) - stable_total(std::move(terms)));
}

}  // namespace infoloss
