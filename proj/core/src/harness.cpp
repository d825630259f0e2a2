#include "infoloss/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "infoloss/stable_sum.hpp"
#include "infoloss/textio.hpp"

namespace infoloss {

namespace {

constexpr double kAbsTolerance = 1e-12;
constexpr double kRelTolerance = 1e-10;
constexpr double kContinuityTolerance = 1e-4;
constexpr double kConstantTolerance = 1e-9;

// Distinct stream salts so every law draws from its own sequence.
constexpr std::uint64_t kSaltSpace = 0x01;
constexpr std::uint64_t kSaltProbSpace = 0x02;
constexpr std::uint64_t kSaltMap = 0x03;
constexpr std::uint64_t kSaltFunctoriality = 0x10;
constexpr std::uint64_t kSaltConvex = 0x11;
constexpr std::uint64_t kSaltAdditivity = 0x12;
constexpr std::uint64_t kSaltHomogeneity = 0x13;
constexpr std::uint64_t kSaltStrongAdd = 0x14;
constexpr std::uint64_t kSaltFaddeev = 0x15;
constexpr std::uint64_t kSaltContinuity = 0x16;
constexpr std::uint64_t kSaltBijection = 0x17;
constexpr std::uint64_t kSaltConstant = 0x18;

Rng law_rng(const GeneratorConfig& cfg, std::uint64_t salt, std::uint64_t trial) {
  return Rng(cfg.seed ^ (salt * 0x9E3779B97F4A7C15ull), trial);
}

double pow_order(const Weight& w, const EntropyOrder& order) {
  const double x = w.to_double();
  return order.is_one() ? x : std::pow(x, order.alpha());
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string describe_map(const std::string& role, const MeasurePreservingMap& map) {
  return serialize_map(NamedMap{role, role + "_dom", role + "_cod", map});
}

std::string describe_space(const std::string& role, const FiniteMeasureSpace& space) {
  return serialize_space(NamedSpace{role, space});
}

// Records one trial. `ok` is usually dev <= allowed but some laws add extra
// criteria; the first failing trial freezes the counterexample.
void record(LawReport& rep, double dev, double allowed, bool ok,
            const std::function<std::string()>& describe) {
  ++rep.trials_run;
  if (dev > rep.max_abs_deviation) rep.max_abs_deviation = dev;
  if (allowed > rep.tolerance) rep.tolerance = allowed;
  if (!ok && rep.passed) {
    rep.passed = false;
    rep.counterexample = describe();
  }
}

double relative_allowance(double lhs, double rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return std::max(kAbsTolerance, kRelTolerance * scale);
}

Weight lambda_in_unit(Rng& rng, const GeneratorConfig& cfg, std::uint64_t trial) {
  // Endpoints get sampled deterministically so degenerate coefficients are
  // always exercised.
  if (trial % 16 == 0) return Weight(0);
  if (trial % 16 == 1) return Weight(1);
  return gen_unit_rational(rng, cfg.denominator_bound);
}

FiniteMeasureSpace uniform_space(std::size_t n) {
  std::vector<std::string> labels(n);
  std::vector<Weight> weights(n, Weight(1, static_cast<long>(n)));
  for (std::size_t i = 0; i < n; ++i) labels[i] = "u" + std::to_string(i);
  return FiniteMeasureSpace(std::move(labels), std::move(weights));
}

}  // namespace

void GeneratorConfig::validate() const {
  if (max_points < 1 || denominator_bound < 1 || trials < 1) {
    throw std::invalid_argument("generator config requires max_points, "
                                "denominator_bound and trials all >= 1");
  }
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : state_(0x9E3779B97F4A7C15ull * (seed + 1) ^ 0xBF58476D1CE4E5B9ull * (stream + 1)) {
  next();
  next();
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

Weight gen_unit_rational(Rng& rng, int denominator_bound) {
  const long den = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(denominator_bound)));
  const long num = static_cast<long>(rng.below(static_cast<std::uint64_t>(den) + 1));
  return Weight(num, den);
}

FiniteMeasureSpace gen_space(Rng& rng, const GeneratorConfig& config, MeasureKind kind,
                             std::string_view label_prefix) {
  const std::size_t n = 1 + rng.below(static_cast<std::uint64_t>(config.max_points));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = std::string(label_prefix) + std::to_string(i);
  }

  std::vector<Weight> weights;
  weights.reserve(n);
  if (kind == MeasureKind::probability) {
    // A random composition of N into n nonnegative parts; zeros arise when
    // cuts coincide.
    const long denominator =
        1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(config.denominator_bound)));
    std::vector<long> cuts(n - 1);
    for (auto& c : cuts) {
      c = static_cast<long>(rng.below(static_cast<std::uint64_t>(denominator) + 1));
    }
    std::sort(cuts.begin(), cuts.end());
    long previous = 0;
    for (long c : cuts) {
      weights.emplace_back(c - previous, denominator);
      previous = c;
    }
    weights.emplace_back(denominator - previous, denominator);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const long den =
          1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(config.denominator_bound)));
      const long num = static_cast<long>(rng.below(static_cast<std::uint64_t>(3 * den) + 1));
      weights.emplace_back(num, den);
    }
  }
  return FiniteMeasureSpace(std::move(labels), std::move(weights));
}

MeasurePreservingMap gen_map_from(Rng& rng, const GeneratorConfig& config,
                                  const FiniteMeasureSpace& domain,
                                  std::string_view label_prefix) {
  const std::size_t m = 1 + rng.below(static_cast<std::uint64_t>(config.max_points));
  std::vector<std::size_t> targets(domain.size());
  std::vector<Weight> pushed(m, Weight(0));
  for (std::size_t i = 0; i < domain.size(); ++i) {
    targets[i] = rng.below(m);
    pushed[targets[i]] += domain.weight(i);
  }
  std::vector<std::string> labels(m);
  for (std::size_t j = 0; j < m; ++j) {
    labels[j] = std::string(label_prefix) + std::to_string(j);
  }
  return MeasurePreservingMap(domain,
                              FiniteMeasureSpace(std::move(labels), std::move(pushed)),
                              std::move(targets));
}

FiniteMeasureSpace gen_space(const GeneratorConfig& config, std::uint64_t trial) {
  config.validate();
  Rng rng = law_rng(config, kSaltSpace, trial);
  return gen_space(rng, config, MeasureKind::general);
}

FiniteMeasureSpace gen_prob_space(const GeneratorConfig& config, std::uint64_t trial) {
  config.validate();
  Rng rng = law_rng(config, kSaltProbSpace, trial);
  return gen_space(rng, config, MeasureKind::probability);
}

MeasurePreservingMap gen_map(const GeneratorConfig& config, std::uint64_t trial,
                             MeasureKind kind) {
  config.validate();
  Rng rng = law_rng(config, kSaltMap, trial);
  return gen_map_from(rng, config, gen_space(rng, config, kind));
}

LawReport check_functoriality(const Functional& F, const GeneratorConfig& config) {
  config.validate();
  LawReport rep;
  rep.law = "functoriality";
  for (std::uint64_t trial = 0; trial < static_cast<std::uint64_t>(config.trials); ++trial) {
    Rng rng = law_rng(config, kSaltFunctoriality, trial);
    const MeasureKind kind = trial % 2 ? MeasureKind::general : MeasureKind::probability;
    const auto g = gen_map_from(rng, config, gen_space(rng, config, kind));
    const auto f = gen_map_from(rng, config, g.codomain(), "z");
    const double dev = std::abs(F(compose(f, g)) - F(f) - F(g));
    record(rep, dev, kAbsTolerance, dev <= kAbsTolerance, [&] {
      return "# functoriality deviation " + format_double(dev) + "\n" + describe_map("g", g) +
             "\n" + describe_map("f", f);
    });
  }
  return rep;
}

LawReport check_convex_linearity(const Functional& F, const EntropyOrder& order,
                                 const GeneratorConfig& config) {
  config.validate();
  LawReport rep;
  rep.law = "convex-linearity";
  for (std::uint64_t trial = 0; trial < static_cast<std::uint64_t>(config.trials); ++trial) {
    Rng rng = law_rng(config, kSaltConvex, trial);
    const auto f = gen_map_from(rng, config, gen_space(rng, config, MeasureKind::probability));
    const auto g = gen_map_from(rng, config, gen_space(rng, config, MeasureKind::probability));
    const Weight lambda = lambda_in_unit(rng, config, trial);
    const Weight complement = Weight(1) - lambda;

    const std::array<MeasurePreservingMap, 2> parts{f, g};
    const auto combined =
        convex_combination(ConvexCoefficients({lambda, complement}), parts);
    const double lhs = F(combined);
    const double rhs = pow_order(lambda, order) * F(f) + pow_order(complement, order) * F(g);
    const double dev = std::abs(lhs - rhs);
    record(rep, dev, kAbsTolerance, dev <= kAbsTolerance, [&] {
      return "# convex-linearity deviation " + format_double(dev) + "\n# lambda = " +
             lambda.str() + "\n" + describe_map("f", f) + "\n" + describe_map("g", g);
    });
  }
  return rep;
}

LawReport check_additivity(const Functional& F, const GeneratorConfig& config) {
  config.validate();
  LawReport rep;
  rep.law = "additivity";
  for (std::uint64_t trial = 0; trial < static_cast<std::uint64_t>(config.trials); ++trial) {
    Rng rng = law_rng(config, kSaltAdditivity, trial);
    const auto f = gen_map_from(rng, config, gen_space(rng, config, MeasureKind::general));
    const auto g = gen_map_from(rng, config, gen_space(rng, config, MeasureKind::general));
    const std::array<MeasurePreservingMap, 2> parts{f, g};
    const double lhs = F(direct_sum_maps(parts));
    const double rhs = F(f) + F(g);
    const double dev = std::abs(lhs - rhs);
    const double allowed = relative_allowance(lhs, rhs);
    record(rep, dev, allowed, dev <= allowed, [&] {
      return "# additivity deviation " + format_double(dev) + "\n" + describe_map("f", f) +
             "\n" + describe_map("g", g);
    });
  }
  return rep;
}

LawReport check_homogeneity(const Functional& F, const EntropyOrder& order,
                            const GeneratorConfig& config) {
  config.validate();
  LawReport rep;
  rep.law = "homogeneity";
  for (std::uint64_t trial = 0; trial < static_cast<std::uint64_t>(config.trials); ++trial) {
    Rng rng = law_rng(config, kSaltHomogeneity, trial);
    const auto f = gen_map_from(rng, config, gen_space(rng, config, MeasureKind::general));
    Weight lambda(0);
    if (trial % 16 != 0) {
      const long den = 1 + static_cast<long>(
          rng.below(static_cast<std::uint64_t>(config.denominator_bound)));
      const long num = static_cast<long>(rng.below(static_cast<std::uint64_t>(4 * den) + 1));
      lambda = Weight(num, den);  // in [0, 4]
    }
    const double lhs = F(scale_map(lambda, f));
    const double rhs = pow_order(lambda, order) * F(f);
    const double dev = std::abs(lhs - rhs);
    const double allowed = relative_allowance(lhs, rhs);
    record(rep, dev, allowed, dev <= allowed, [&] {
      return "# homogeneity deviation " + format_double(dev) + "\n# lambda = " + lambda.str() +
             "\n" + describe_map("f", f);
    });
  }
  return rep;
}

LawReport check_strong_additivity(const EntropyOrder& order, const GeneratorConfig& config) {
  config.validate();
  LawReport rep;
  rep.law = "strong-additivity";
  for (std::uint64_t trial = 0; trial < static_cast<std::uint64_t>(config.trials); ++trial) {
    Rng rng = law_rng(config, kSaltStrongAdd, trial);
    const auto outer = gen_space(rng, config, MeasureKind::probability, "p");
    std::vector<FiniteMeasureSpace> inner;
    inner.reserve(outer.size());
    for (std::size_t i = 0; i < outer.size(); ++i) {
      inner.push_back(gen_space(rng, config, MeasureKind::probability, "q"));
    }
    const auto combined = convex_combination(ConvexCoefficients(outer.weights()), inner);

    const double lhs = tsallis(order, combined);
    StableSum rhs;
    rhs.add(tsallis(order, outer));
    for (std::size_t i = 0; i < outer.size(); ++i) {
      rhs.add(pow_order(outer.weight(i), order) * tsallis(order, inner[i]));
    }
    const double dev = std::abs(lhs - rhs.value());
    record(rep, dev, kAbsTolerance, dev <= kAbsTolerance, [&] {
      std::string out = "# strong-additivity deviation " + format_double(dev) + "\n" +
                        describe_space("p", outer);
      for (std::size_t i = 0; i < inner.size(); ++i) {
        out += "\n" + describe_space("q" + std::to_string(i), inner[i]);
      }
      return out;
    });
  }
  return rep;
}

LawReport check_faddeev_equation(const EntropyOrder& order, const GeneratorConfig& config) {
  config.validate();
  LawReport rep;
  rep.law = "faddeev-equation";
  for (std::uint64_t trial = 0; trial < static_cast<std::uint64_t>(config.trials); ++trial) {
    Rng rng = law_rng(config, kSaltFaddeev, trial);
    const auto p = gen_space(rng, config, MeasureKind::probability, "p");
    const Weight t = lambda_in_unit(rng, config, trial);
    const Weight first = p.weight(0);

    std::vector<std::string> labels(p.size() + 1);
    std::vector<Weight> weights(p.size() + 1, Weight(0));
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = "s" + std::to_string(i);
    weights[0] = t * first;
    weights[1] = (Weight(1) - t) * first;
    for (std::size_t i = 1; i < p.size(); ++i) weights[i + 1] = p.weight(i);
    const FiniteMeasureSpace split(std::move(labels), std::move(weights));
    const FiniteMeasureSpace coin({"t0", "t1"}, {t, Weight(1) - t});

    const double lhs = tsallis(order, split);
    const double rhs = tsallis(order, p) + pow_order(first, order) * tsallis(order, coin);
    const double dev = std::abs(lhs - rhs);
    record(rep, dev, kAbsTolerance, dev <= kAbsTolerance, [&] {
      return "# faddeev-equation deviation " + format_double(dev) + "\n# t = " + t.str() +
             "\n" + describe_space("p", p);
    });
  }
  return rep;
}

LawReport check_continuity(const Functional& F, const GeneratorConfig& config) {
  config.validate();
  LawReport rep;
  rep.law = "continuity";
  constexpr std::array<long, 4> schedule{100, 1000, 10000, 1000000};

  for (std::uint64_t trial = 0; trial < static_cast<std::uint64_t>(config.trials); ++trial) {
    Rng rng = law_rng(config, kSaltContinuity, trial);
    // Trial 0 pins a target whose entropy sits exactly on a simple closed
    // value (a padded two-point coin), where threshold-style functionals
    // reveal their discontinuity deterministically.
    const MeasurePreservingMap target =
        trial == 0
            ? terminal_map(FiniteMeasureSpace({"x0", "x1", "x2"},
                                              {Weight(1, 2), Weight(1, 2), Weight(0)}))
            : gen_map_from(rng, config, gen_space(rng, config, MeasureKind::probability));

    const double reference = F(target);
    const std::size_t sz = target.domain().size();
    const Weight uniform_piece(1, static_cast<long>(sz));

    std::array<double, schedule.size()> devs{};
    for (std::size_t k = 0; k < schedule.size(); ++k) {
      const Weight mix(1, schedule[k]);
      const Weight keep = Weight(1) - mix;
      std::vector<Weight> perturbed;
      perturbed.reserve(sz);
      for (std::size_t i = 0; i < sz; ++i) {
        perturbed.push_back(keep * target.domain().weight(i) + mix * uniform_piece);
      }
      FiniteMeasureSpace domain(target.domain().labels(), std::move(perturbed));
      std::vector<Weight> pushed(target.codomain().size(), Weight(0));
      for (std::size_t i = 0; i < sz; ++i) {
        pushed[target.target_index(i)] += domain.weight(i);
      }
      FiniteMeasureSpace codomain(target.codomain().labels(), std::move(pushed));
      const MeasurePreservingMap nearby(std::move(domain), std::move(codomain),
                                        target.targets());
      devs[k] = std::abs(F(nearby) - reference);
    }

    const bool settled = devs.back() <= kContinuityTolerance;
    bool shrinking = true;
    for (std::size_t k = 0; k + 1 < devs.size(); ++k) {
      // 10% slack plus a floor at double noise.
      if (devs[k + 1] > 1.1 * devs[k] + 1e-15) shrinking = false;
    }
    record(rep, devs.back(), kContinuityTolerance, settled && shrinking, [&] {
      std::string out = "# continuity deviations:";
      for (std::size_t k = 0; k < devs.size(); ++k) {
        out += " n=" + std::to_string(schedule[k]) + ":" + format_double(devs[k]);
      }
      return out + "\n" + describe_map("f", target);
    });
  }
  return rep;
}

LawReport check_bijection_invariance(const EntropyOrder& order, const GeneratorConfig& config) {
  config.validate();
  LawReport rep;
  rep.law = "bijection-invariance";
  for (std::uint64_t trial = 0; trial < static_cast<std::uint64_t>(config.trials); ++trial) {
    Rng rng = law_rng(config, kSaltBijection, trial);
    const MeasureKind kind = trial % 2 ? MeasureKind::general : MeasureKind::probability;
    const auto space = gen_space(rng, config, kind);

    std::vector<std::size_t> perm(space.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    for (std::size_t i = perm.size(); i > 1; --i) {
      std::swap(perm[i - 1], perm[rng.below(i)]);
    }
    std::vector<std::string> labels(space.size());
    std::vector<Weight> weights(space.size(), Weight(0));
    for (std::size_t j = 0; j < space.size(); ++j) {
      labels[j] = "z" + std::to_string(j);
      weights[j] = space.weight(perm[j]);
    }
    const FiniteMeasureSpace relabeled(std::move(labels), std::move(weights));

    const double dev = std::abs(tsallis(order, space) - tsallis(order, relabeled));
    record(rep, dev, 0.0, dev == 0.0, [&] {
      return "# bijection-invariance deviation " + format_double(dev) + "\n" +
             describe_space("p", space) + "\n" + describe_space("sigma_p", relabeled);
    });
  }
  return rep;
}

ConstantEstimate estimate_constant(const Functional& F, const EntropyOrder& order,
                                   const GeneratorConfig& config) {
  config.validate();
  ConstantEstimate result;
  LawReport& rep = result.report;
  rep.law = "constant-recovery";

  const double probe = F(terminal_map(uniform_space(2)));
  result.c_estimate = probe / phi(order, 2);
  const double c = result.c_estimate;

  for (std::uint64_t trial = 0; trial < static_cast<std::uint64_t>(config.trials); ++trial) {
    Rng rng = law_rng(config, kSaltConstant, trial);
    const auto f = gen_map_from(rng, config, gen_space(rng, config, MeasureKind::probability));
    const double observed = F(f);
    const double expected =
        c * (tsallis(order, f.domain()) - tsallis(order, f.codomain()));
    const double dev = std::abs(observed - expected);
    record(rep, dev, kConstantTolerance, dev <= kConstantTolerance, [&] {
      std::string note = c == 0.0 && observed != 0.0
                             ? "# DegenerateProbe: F(!_uniform2) = 0 but F is nonzero here\n"
                             : "";
      return note + "# constant-recovery deviation " + format_double(dev) +
             "\n# c_estimate = " + format_double(c) + "\n" + describe_map("f", f);
    });
  }

  // phi_F(n) = F(!_uniform_n) must track c * H_a(uniform_n).
  for (std::size_t n = 1; n <= 64; ++n) {
    const double observed = F(terminal_map(uniform_space(n)));
    const double expected = c * phi(order, static_cast<std::uint64_t>(n));
    const double dev = std::abs(observed - expected);
    record(rep, dev, kConstantTolerance, dev <= kConstantTolerance, [&] {
      return "# constant-recovery phi deviation " + format_double(dev) +
             "\n# n = " + std::to_string(n) + ", c_estimate = " + format_double(c);
    });
  }
  return result;
}

}  // namespace infoloss
