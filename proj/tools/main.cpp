#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "infoloss/errors.hpp"

// Exit codes: 0 success, 1 law failure, 2 parse error, 3 validation error,
// 4 usage error.

int main(int argc, char** argv) {
  CLI::App app{"entropy and information loss on finite measure spaces"};
  app.require_subcommand(1);

  infoloss::cli::EntropyOptions entropy_opts;
  auto* entropy = app.add_subcommand("entropy", "entropy of a space file, in nats");
  entropy->add_option("space-file", entropy_opts.space_file, "space file to read")->required();
  auto* entropy_order =
      entropy->add_option("--order", entropy_opts.order, "Tsallis order (default 1, Shannon)");
  entropy->add_flag("--shannon", "use the Shannon entropy (order 1)")->excludes(entropy_order);
  entropy->add_flag("--bits", entropy_opts.bits, "display in bits instead of nats");

  infoloss::cli::LossOptions loss_opts;
  auto* loss = app.add_subcommand("loss", "information loss of a map file");
  loss->add_option("map-file", loss_opts.map_file, "map file to read")->required();
  loss->add_option("--order", loss_opts.order, "Tsallis order (default 1)");
  loss->add_option("--constant", loss_opts.constant, "multiplicative constant c (default 1)");
  loss->add_option("--method", loss_opts.method, "difference | conditional | both");
  loss->add_flag("--infer-codomain", loss_opts.infer_codomain,
                 "derive codomain weights as the exact pushforward");

  infoloss::cli::PipelineOptions pipeline_opts;
  auto* pipeline = app.add_subcommand("pipeline", "per-stage losses of a composable chain");
  pipeline->add_option("pipeline-file", pipeline_opts.pipeline_file, "pipeline file to read")
      ->required();
  pipeline->add_option("--order", pipeline_opts.order, "Tsallis order (default 1)");
  pipeline->add_flag("--infer-codomain", pipeline_opts.infer_codomain,
                     "derive codomain weights as the exact pushforward");

  infoloss::cli::VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "run the randomized law suites");
  verify->add_option("--suite", verify_opts.suite,
                     "functoriality | convex-linearity | additivity | homogeneity | "
                     "strong-additivity | faddeev | continuity | bijection | constant | all");
  verify->add_option("--seed", verify_opts.seed, "generator seed (default 42)");
  verify->add_option("--trials", verify_opts.trials, "trials per law (default 1000)");
  verify->add_option("--max-points", verify_opts.max_points, "points per generated space");
  verify->add_option("--denominator-bound", verify_opts.denominator_bound,
                     "bound on generated weight denominators");
  verify->add_option("--order", verify_opts.orders,
                     "orders to verify (repeatable; default 0.5 1 2 3)");
  verify->add_option("--constant", verify_opts.constant, "loss constant c (default 1)");
  verify->add_option("--inject", verify_opts.inject,
                     "replace the loss functional with a broken one (squared)");
  verify->add_flag("--json", verify_opts.json, "machine-readable report");
  verify->add_flag("--phi-diagnostic", verify_opts.phi_diagnostic,
                   "print the phi(n+1)-phi(n) gap sequence and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  try {
    if (entropy->parsed()) {
      if (entropy->count("--shannon") > 0) entropy_opts.order = 1.0;
      return infoloss::cli::run_entropy(entropy_opts);
    }
    if (loss->parsed()) return infoloss::cli::run_loss(loss_opts);
    if (pipeline->parsed()) return infoloss::cli::run_pipeline(pipeline_opts);
    if (verify->parsed()) return infoloss::cli::run_verify(verify_opts);
  } catch (const infoloss::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const infoloss::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 4;
  } catch (const infoloss::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return 4;
}
