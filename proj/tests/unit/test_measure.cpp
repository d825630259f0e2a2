#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <string>

#include "infoloss/combinators.hpp"
#include "infoloss/harness.hpp"
#include "infoloss/measure.hpp"

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

}  // namespace

TEST_CASE("validate_space accepts and rejects per the invariants") {
  const auto coin = validate_space({"a", "b"}, {Weight(1, 2), Weight(1, 2)});
  CHECK(coin.is_probability());
  CHECK(coin.size() == 2);

  const auto null_point = validate_space({"a"}, {Weight(0)});
  CHECK(null_point.total_mass().is_zero());
  CHECK_FALSE(null_point.is_probability());

  CHECK(code_of([] { validate_space({"a", "a"}, {Weight(1, 2), Weight(1, 2)}); }) ==
        errc::duplicate_label);
  CHECK(code_of([] { validate_space({"a"}, {Weight(-1, 2)}); }) == errc::negative_weight);
  CHECK(code_of([] { validate_space({"a", "b"}, {Weight(1)}); }) == errc::length_mismatch);
}

TEST_CASE("validate_map checks the pushforward exactly") {
  const auto coin = validate_space({"a", "b"}, {Weight(1, 2), Weight(1, 2)});
  const auto point = validate_space({"c"}, {Weight(1)});

  const auto collapse = validate_map(coin, point, {{"a", "c"}, {"b", "c"}});
  CHECK(collapse.target_label(0) == "c");
  CHECK(collapse.target_label(1) == "c");

  const auto wrong = validate_space({"c"}, {Weight(1, 2)});
  CHECK(code_of([&] { validate_map(coin, wrong, {{"a", "c"}, {"b", "c"}}); }) ==
        errc::pushforward_mismatch);

  CHECK(identity_map(coin) == validate_map(coin, coin, {{"a", "a"}, {"b", "b"}}));

  CHECK(code_of([&] { validate_map(coin, point, {{"a", "c"}}); }) == errc::unmapped_point);
  CHECK(code_of([&] { validate_map(coin, point, {{"a", "c"}, {"b", "z"}}); }) ==
        errc::target_not_in_codomain);
}

TEST_CASE("a pushforward off by 1/10^12 is rejected deterministically") {
  const auto coin = validate_space({"a", "b"}, {Weight(1, 2), Weight(1, 2)});
  const Weight tiny(mpz_class(1), mpz_class("1000000000000"));
  const auto skewed = validate_space({"c"}, {Weight(1) + tiny});
  for (int attempt = 0; attempt < 2; ++attempt) {
    CHECK(code_of([&] { validate_map(coin, skewed, {{"a", "c"}, {"b", "c"}}); }) ==
          errc::pushforward_mismatch);
  }
  try {
    validate_map(coin, skewed, {{"a", "c"}, {"b", "c"}});
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("1000000000001/1000000000000") != std::string::npos);
    CHECK(msg.find("pushforward mass 1") != std::string::npos);
  }
}

TEST_CASE("total_mass") {
  CHECK(total_mass(validate_space({"a", "b"}, {Weight(1, 2), Weight(1, 2)})) == Weight(1));
  CHECK(total_mass(validate_space({"a", "b"}, {Weight(1), Weight(1)})) == Weight(2));
  CHECK(total_mass(FiniteMeasureSpace()) == Weight(0));
}

TEST_CASE("normalize splits mass from shape and reconstructs exactly") {
  const auto doubled = validate_space({"a", "b"}, {Weight(1), Weight(1)});
  const auto split = normalize(doubled);
  CHECK(split.mass == Weight(2));
  CHECK(split.probability ==
        validate_space({"a", "b"}, {Weight(1, 2), Weight(1, 2)}));
  CHECK(scale_space(split.mass, split.probability) == doubled);

  const auto coin = validate_space({"a", "b"}, {Weight(1, 2), Weight(1, 2)});
  const auto same = normalize(coin);
  CHECK(same.mass == Weight(1));
  CHECK(same.probability == coin);

  CHECK(code_of([] {
          normalize(validate_space({"a", "b"}, {Weight(0), Weight(0)}));
        }) == errc::zero_total_mass);
}

TEST_CASE("terminal_map crushes a space to one point carrying its mass") {
  const auto coin = validate_space({"a", "b"}, {Weight(1, 2), Weight(1, 2)});
  const auto bang = terminal_map(coin);
  CHECK(bang.codomain() == validate_space({"*"}, {Weight(1)}));

  const auto point = validate_space({"*"}, {Weight(1)});
  CHECK(is_bijective(terminal_map(point)));

  const auto doubled = validate_space({"a", "b"}, {Weight(1), Weight(1)});
  CHECK(terminal_map(doubled).codomain() == validate_space({"*"}, {Weight(2)}));
}

TEST_CASE("is_bijective") {
  const auto coin = validate_space({"a", "b"}, {Weight(1, 2), Weight(1, 2)});
  CHECK(is_bijective(identity_map(coin)));

  const auto point = validate_space({"c"}, {Weight(1)});
  CHECK_FALSE(is_bijective(validate_map(coin, point, {{"a", "c"}, {"b", "c"}})));

  const auto renamed = validate_space({"x", "y"}, {Weight(1, 2), Weight(1, 2)});
  CHECK(is_bijective(validate_map(coin, renamed, {{"a", "x"}, {"b", "y"}})));
}

TEST_CASE("empty spaces live in the general-measure world") {
  const FiniteMeasureSpace empty;
  CHECK(empty.is_empty());
  CHECK(empty.total_mass().is_zero());

  // A map out of the empty space is valid only into all-zero codomains.
  const auto zeros = validate_space({"a"}, {Weight(0)});
  const MeasurePreservingMap into_zeros(empty, zeros, std::vector<std::size_t>{});
  CHECK(into_zeros.domain().is_empty());

  const auto charged = validate_space({"a"}, {Weight(1)});
  CHECK(code_of([&] {
          MeasurePreservingMap(empty, charged, std::vector<std::size_t>{});
        }) == errc::pushforward_mismatch);

  CHECK(terminal_map(empty).codomain() == validate_space({"*"}, {Weight(0)}));
}

TEST_CASE("generated maps conserve mass exactly") {
  GeneratorConfig cfg;
  cfg.seed = 11;
  cfg.trials = 300;
  for (std::uint64_t t = 0; t < 300; ++t) {
    const auto m = gen_map(cfg, t, t % 2 ? MeasureKind::general : MeasureKind::probability);
    CHECK(m.domain().total_mass() == m.codomain().total_mass());
  }
}

TEST_CASE("terminal after any map equals the domain's terminal map") {
  GeneratorConfig cfg;
  cfg.seed = 12;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto f = gen_map(cfg, t, MeasureKind::general);
    CHECK(compose(terminal_map(f.codomain()), f) == terminal_map(f.domain()));
  }
}
