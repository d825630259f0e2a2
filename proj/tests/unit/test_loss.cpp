#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <functional>

#include "infoloss/combinators.hpp"
#include "infoloss/harness.hpp"
#include "infoloss/loss.hpp"

using namespace infoloss;

namespace {

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ValidationError& e) {
    return e.code();
  }
  FAIL("expected a ValidationError");
  return errc::duplicate_label;
}

const LossFunctional unit_loss{1.0, EntropyOrder::shannon()};

MeasurePreservingMap collapse_map(const Weight& wa, const Weight& wb) {
  const auto domain = validate_space({"a", "b"}, {wa, wb});
  const auto point = validate_space({"c"}, {wa + wb});
  return validate_map(domain, point, {{"a", "c"}, {"b", "c"}});
}

// Random weight-preserving relabeling of a generated space.
MeasurePreservingMap random_bijection(Rng& rng, const GeneratorConfig& cfg) {
  const auto p = gen_space(rng, cfg, MeasureKind::general);
  std::vector<std::size_t> perm(p.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);

  std::vector<std::string> labels(p.size());
  std::vector<Weight> weights(p.size(), Weight(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    labels[perm[i]] = "r" + std::to_string(perm[i]);
    weights[perm[i]] = p.weight(i);
  }
  return MeasurePreservingMap(p, FiniteMeasureSpace(std::move(labels), std::move(weights)),
                              std::move(perm));
}

}  // namespace

TEST_CASE("the collapse map loses exactly one coin of information") {
  CHECK(loss(unit_loss, collapse_map(Weight(1, 2), Weight(1, 2))) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(loss(unit_loss, collapse_map(Weight(1), Weight(0))) == 0.0);

  const auto coin = validate_space({"a", "b"}, {Weight(1, 2), Weight(1, 2)});
  CHECK(loss(unit_loss, identity_map(coin)) == 0.0);

  const LossFunctional scaled{2.5, EntropyOrder::shannon()};
  CHECK(loss(scaled, collapse_map(Weight(1, 2), Weight(1, 2))) ==
        doctest::Approx(2.5 * std::log(2.0)).epsilon(1e-15));

  const LossFunctional zero{0.0, EntropyOrder::shannon()};
  CHECK(loss(zero, collapse_map(Weight(1, 2), Weight(1, 2))) == 0.0);
}

TEST_CASE("the conditional-entropy form matches on the worked examples") {
  CHECK(loss_conditional_form(unit_loss, collapse_map(Weight(1, 2), Weight(1, 2))) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(loss_conditional_form(unit_loss, collapse_map(Weight(1), Weight(0))) == 0.0);

  const auto coin = validate_space({"a", "b"}, {Weight(1, 2), Weight(1, 2)});
  CHECK(loss_conditional_form(unit_loss, identity_map(coin)) == 0.0);

  const LossFunctional order2{1.0, EntropyOrder::tsallis(2.0)};
  CHECK(code_of([&] {
          loss_conditional_form(order2, collapse_map(Weight(1, 2), Weight(1, 2)));
        }) == errc::order_not_one);
}

TEST_CASE("negative constants are rejected") {
  CHECK(code_of([] { LossFunctional(-1.0, EntropyOrder::shannon()); }) ==
        errc::negative_constant);
}

TEST_CASE("both loss routes agree on random maps, zero weights included") {
  GeneratorConfig cfg;
  cfg.seed = 41;
  int zero_weight_maps = 0;
  for (std::uint64_t t = 0; t < 800; ++t) {
    const auto kind = t % 2 ? MeasureKind::general : MeasureKind::probability;
    const auto f = gen_map(cfg, t, kind);
    for (const auto& w : f.domain().weights()) {
      if (w.is_zero()) {
        ++zero_weight_maps;
        break;
      }
    }
    CHECK(std::abs(loss(unit_loss, f) - loss_conditional_form(unit_loss, f)) <= 1e-12);
  }
  CHECK(zero_weight_maps > 0);
}

TEST_CASE("loss is nonnegative and vanishes on bijections") {
  GeneratorConfig cfg;
  cfg.seed = 42;
  for (const double alpha : {0.5, 1.0, 2.0}) {
    const LossFunctional functional{1.0, EntropyOrder::of(alpha)};
    for (std::uint64_t t = 0; t < 300; ++t) {
      Rng rng(cfg.seed, t);
      const auto f = gen_map_from(rng, cfg, gen_space(rng, cfg, MeasureKind::general));
      CHECK(loss(functional, f) >= 0.0);
      const auto sigma = random_bijection(rng, cfg);
      CHECK(std::abs(loss(functional, sigma)) <= 1e-12);
    }
  }
}

TEST_CASE("the terminal map recovers the entropy: I(p) = F(!_p)") {
  GeneratorConfig cfg;
  cfg.seed = 43;
  for (const double alpha : {0.5, 1.0, 2.0, 3.0}) {
    const LossFunctional functional{1.0, EntropyOrder::of(alpha)};
    for (std::uint64_t t = 0; t < 200; ++t) {
      const auto p = gen_prob_space(cfg, t);
      CHECK(std::abs(loss(functional, terminal_map(p)) -
                     tsallis(functional.order(), p)) <= 1e-12);
    }
  }
}

TEST_CASE("pipeline losses decompose the composite loss by stage") {
  const auto three =
      validate_space({"a", "b", "c"}, {Weight(1, 4), Weight(1, 4), Weight(1, 2)});
  const auto coin = validate_space({"x", "y"}, {Weight(1, 2), Weight(1, 2)});
  const auto g = validate_map(three, coin, {{"a", "x"}, {"b", "x"}, {"c", "y"}});
  const auto f = terminal_map(coin);

  const std::array<MeasurePreservingMap, 2> chain{g, f};
  const auto result = pipeline_loss(unit_loss, chain);

  REQUIRE(result.stage_losses.size() == 2);
  CHECK(result.stage_losses[0] == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
  CHECK(result.stage_losses[1] == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(result.total == doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-12));
  CHECK(std::abs(result.total - loss(unit_loss, compose(f, g))) <= 1e-12);

  const std::array<MeasurePreservingMap, 3> idle{identity_map(coin), identity_map(coin),
                                                 identity_map(coin)};
  const auto zeros = pipeline_loss(unit_loss, idle);
  for (double v : zeros.stage_losses) CHECK(v == 0.0);
  CHECK(zeros.total == 0.0);

  const std::array<MeasurePreservingMap, 1> solo{f};
  const auto single = pipeline_loss(unit_loss, solo);
  CHECK(single.stage_losses.size() == 1);
  CHECK(single.total == loss(unit_loss, f));

  const std::array<MeasurePreservingMap, 2> broken{f, g};
  CHECK(code_of([&] { pipeline_loss(unit_loss, broken); }) == errc::not_composable);
}

TEST_CASE("pipeline total tracks the composite loss on generated chains") {
  GeneratorConfig cfg;
  cfg.seed = 44;
  const LossFunctional functional{1.0, EntropyOrder::shannon()};
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng(cfg.seed, t);
    std::vector<MeasurePreservingMap> chain;
    chain.push_back(gen_map_from(rng, cfg, gen_space(rng, cfg, MeasureKind::probability)));
    for (int k = 0; k < 3; ++k) {
      chain.push_back(gen_map_from(rng, cfg, chain.back().codomain(),
                                   "s" + std::to_string(k) + "_"));
    }
    const auto result = pipeline_loss(functional, chain);
    MeasurePreservingMap composite = chain.front();
    for (std::size_t k = 1; k < chain.size(); ++k) composite = compose(chain[k], composite);
    CHECK(std::abs(result.total - loss(functional, composite)) <= 1e-12);
  }
}
