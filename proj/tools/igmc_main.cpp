// igmc: incremental generative Monte Carlo experiment runner.
//
// Subcommands: bernoulli, exponential, converge, classify. Every run
// writes deterministic CSV/JSON data files plus a manifest with digests.
// Exit codes: 0 success, 2 invalid arguments, 3 numerical failure,
// 4 determinism self-check failure.
#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "igmc/errors.hpp"
#include "igmc/experiment.hpp"
#include "igmc/version.hpp"

namespace {

using namespace igmc;
using namespace igmc::experiment;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitSelfCheck = 4;

void add_common_flags(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--n", opts.n, "number of independent chains")
        ->capture_default_str();
    cmd->add_option("--h", opts.h, "generated values appended per chain")
        ->capture_default_str();
    cmd->add_option("--seed", opts.seed, "master seed")->capture_default_str();
    cmd->add_option("--out", opts.out, "output path prefix")->capture_default_str();
    cmd->add_option("--threads", opts.threads, "worker thread cap")->capture_default_str();
}

template <typename Options, typename RunFn>
int execute(const std::string& command, const Options& opts, bool selfcheck, RunFn run_fn,
            const std::function<void(const decltype(run_fn(opts))&)>& report) {
    const auto start = std::chrono::steady_clock::now();
    const auto result = run_fn(opts);

    if (selfcheck) {
        Options solo = opts;
        solo.threads = 1;
        const auto repeat = run_fn(solo);
        if (repeat.files != result.files) {
            std::fprintf(stderr, "igmc: determinism self-check failed for '%s'\n",
                         command.c_str());
            return kExitSelfCheck;
        }
    }

    const double duration =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const WrittenFiles written =
        write_run(command, opts.as_parameters(), result.files, opts.out, duration);

    report(result);
    for (const auto& path : written.data_paths) std::printf("wrote %s\n", path.c_str());
    std::printf("wrote %s\n", written.manifest_path.c_str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"incremental generative Monte Carlo experiments"};
    app.set_version_flag("--version", std::string(igmc::kVersion));
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    bool selfcheck = false;
    app.add_flag("--selfcheck", selfcheck,
                 "re-run single-threaded and fail (exit 4) if bytes differ");

    BernoulliOptions bernoulli_opts;
    bernoulli_opts.out = "bernoulli";
    auto* bernoulli = app.add_subcommand(
        "bernoulli", "binary sample set, Bernoulli fit, Beta reference curve");
    bernoulli->set_help_flag("--help", "print help");
    add_common_flags(bernoulli, bernoulli_opts);
    bernoulli->add_option("--m", bernoulli_opts.m, "number of initial observations")
        ->capture_default_str();
    bernoulli->add_option("--a", bernoulli_opts.a, "number of successes among them")
        ->capture_default_str();

    ExponentialOptions exponential_opts;
    exponential_opts.out = "exponential";
    auto* exponential = app.add_subcommand(
        "exponential", "constant sample set, exponential fit, Gamma reference curve");
    exponential->set_help_flag("--help", "print help");
    add_common_flags(exponential, exponential_opts);
    exponential->add_option("--m", exponential_opts.m, "number of initial observations")
        ->capture_default_str();
    exponential->add_option("--mean", exponential_opts.mean, "sample mean of the initial set")
        ->capture_default_str();

    ConvergeOptions converge_opts;
    converge_opts.out = "converge";
    std::string sweep_text = "10:10,100:100,1000:1000";
    auto* converge =
        app.add_subcommand("converge", "L1-to-reference sweep over (n,h) cells and seeds");
    converge->set_help_flag("--help", "print help");
    add_common_flags(converge, converge_opts);
    converge->add_option("--m", converge_opts.m, "number of initial observations")
        ->capture_default_str();
    converge->add_option("--a", converge_opts.a, "number of successes among them")
        ->capture_default_str();
    converge->add_option("--sweep", sweep_text, "cells as n1:h1,n2:h2,...")
        ->capture_default_str();
    converge->add_option("--seeds", converge_opts.seeds, "independent seeds per cell")
        ->capture_default_str();

    ClassifyOptions classify_opts;
    classify_opts.out = "classify";
    std::string x_text;
    std::string schedule_text = "cosine";
    auto* classify = app.add_subcommand(
        "classify", "per-class posterior uncertainty for a softmax classifier");
    classify->set_help_flag("--help", "print help");
    add_common_flags(classify, classify_opts);
    classify->add_option("--fixture", classify_opts.fixture,
                         "blob spec (blobs:k=..,per=..,sep=..,sigma=..,seed=..) or CSV path")
        ->capture_default_str();
    classify->add_option("--x", x_text, "query point, comma-separated coordinates")
        ->required();
    classify->add_option("--epochs", classify_opts.train.epochs, "training epochs per fit")
        ->capture_default_str();
    classify->add_option("--lr", classify_opts.train.learning_rate, "initial learning rate")
        ->capture_default_str();
    classify->add_option("--momentum", classify_opts.train.momentum, "SGD momentum")
        ->capture_default_str();
    classify->add_option("--schedule", schedule_text, "learning-rate schedule")
        ->check(CLI::IsMember({"cosine", "constant"}))
        ->capture_default_str();
    classify->add_option("--batch", classify_opts.train.batch_size, "mini-batch size")
        ->capture_default_str();
    classify->add_option("--width", classify_opts.train.hidden_width, "hidden layer width")
        ->capture_default_str();
    classify->add_flag("--warm-start", classify_opts.warm_start,
                       "resume each refit from the previous parameters instead of a fresh "
                       "initialization (faster, deviates from the fresh-init scheme)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (bernoulli->parsed()) {
            return execute<BernoulliOptions>(
                "bernoulli", bernoulli_opts, selfcheck, run_bernoulli,
                [](const BernoulliRun& run) {
                    if (run.degenerate) {
                        std::fprintf(stderr,
                                     "warning: degenerate counts (a=0 or a=m); Beta reference "
                                     "undefined, distances suppressed\n");
                        return;
                    }
                    std::printf("l1_to_reference %s\nks_to_reference %s\ntheorem1_bound %s\n",
                                format_double(run.l1_to_reference).c_str(),
                                format_double(run.ks_to_reference).c_str(),
                                format_double(run.bound.value).c_str());
                });
        }
        if (exponential->parsed()) {
            return execute<ExponentialOptions>(
                "exponential", exponential_opts, selfcheck, run_exponential,
                [](const ExponentialRun& run) {
                    std::printf("ks_to_reference %s\nmismatch %s (threshold %s)\n",
                                format_double(run.ks_to_reference).c_str(),
                                run.mismatch ? "true" : "false",
                                format_double(run.mismatch_threshold).c_str());
                });
        }
        if (converge->parsed()) {
            converge_opts.sweep = parse_sweep(sweep_text);
            return execute<ConvergeOptions>(
                "converge", converge_opts, selfcheck, run_converge,
                [](const ConvergeRun& run) {
                    for (const auto& cell : run.cells)
                        std::printf("cell n=%zu h=%zu mean_l1 %s bound %s\n", cell.n, cell.h,
                                    format_double(cell.mean_l1).c_str(),
                                    format_double(cell.bound).c_str());
                    std::printf("slope %s (h=%zu)\n", format_double(run.slope).c_str(),
                                run.slope_h);
                });
        }
        if (classify->parsed()) {
            classify_opts.x = parse_double_list(x_text);
            classify_opts.train.schedule =
                schedule_text == "constant" ? LrSchedule::Constant : LrSchedule::Cosine;
            return execute<ClassifyOptions>(
                "classify", classify_opts, selfcheck, run_classify,
                [](const ClassifyRun& run) {
                    for (const auto& cls : run.report.classes)
                        std::printf("class %d mean %.1f%% u %.2f\n", cls.label,
                                    100.0 * cls.mean_probability, cls.uncertainty);
                });
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "igmc: invalid arguments: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "igmc: %s\n", e.what());
        return kExitNumerical;
    }
    return kExitUsage;
}
