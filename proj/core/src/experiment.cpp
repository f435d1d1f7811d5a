#include "igmc/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "igmc/engine.hpp"
#include "igmc/errors.hpp"
#include "igmc/metrics.hpp"
#include "igmc/reference_cdf.hpp"
#include "igmc/version.hpp"

namespace igmc::experiment {

using nlohmann::json;

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

std::string fnv1a64_hex(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

namespace {

constexpr int kGridPoints = 512;

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

// Union of the step CDF's breakpoints and a uniform grid over the display
// interval, strictly increasing.
std::vector<double> curve_abscissae(const EmpiricalCdf& f, Interval display) {
    std::vector<double> ts;
    ts.reserve(f.breakpoints().size() + kGridPoints);
    for (int i = 0; i < kGridPoints; ++i) {
        ts.push_back(display.lo +
                     (display.hi - display.lo) * i / static_cast<double>(kGridPoints - 1));
    }
    for (double b : f.breakpoints())
        if (b >= display.lo && b <= display.hi) ts.push_back(b);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

std::string render_curve_csv(const std::vector<std::pair<std::string, std::string>>& metadata,
                             const EmpiricalCdf& f, const ReferenceCdf* ref, Interval display) {
    std::string out;
    for (const auto& [key, value] : metadata) out += "# " + key + "=" + value + "\n";
    out += ref ? "t,f_hat,f_ref\n" : "t,f_hat\n";
    for (double t : curve_abscissae(f, display)) {
        out += format_double(t);
        out += ',';
        out += format_double(f.eval(t));
        if (ref) {
            out += ',';
            out += format_double(ref->eval(t));
        }
        out += '\n';
    }
    return out;
}

json bound_to_json(const BoundReport& bound) {
    return json{{"kind", std::string(to_string(bound.kind))},
                {"depth_term", bound.inputs.at("depth_term")},
                {"mc_term", bound.inputs.at("mc_term")},
                {"total", bound.value}};
}

// Least-squares slope of ln(y) against ln(x).
double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(xs[i]);
        const double ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    return (n * sxy - sx * sy) / denom;
}

} // namespace

std::map<std::string, std::string> BernoulliOptions::as_parameters() const {
    return {{"m", std::to_string(m)},       {"a", std::to_string(a)},
            {"n", std::to_string(n)},       {"h", std::to_string(h)},
            {"seed", std::to_string(seed)}, {"threads", std::to_string(threads)},
            {"out", out}};
}

std::map<std::string, std::string> ExponentialOptions::as_parameters() const {
    return {{"m", std::to_string(m)},       {"mean", format_double(mean)},
            {"n", std::to_string(n)},       {"h", std::to_string(h)},
            {"seed", std::to_string(seed)}, {"threads", std::to_string(threads)},
            {"out", out}};
}

std::map<std::string, std::string> ConvergeOptions::as_parameters() const {
    std::string sweep_str;
    for (const auto& cell : sweep) {
        if (!sweep_str.empty()) sweep_str += ',';
        sweep_str += std::to_string(cell.n) + ":" + std::to_string(cell.h);
    }
    return {{"m", std::to_string(m)},         {"a", std::to_string(a)},
            {"sweep", sweep_str},             {"seeds", std::to_string(seeds)},
            {"seed", std::to_string(seed)},   {"threads", std::to_string(threads)},
            {"out", out}};
}

std::map<std::string, std::string> ClassifyOptions::as_parameters() const {
    std::string x_str;
    for (double v : x) {
        if (!x_str.empty()) x_str += ',';
        x_str += format_double(v);
    }
    return {{"fixture", fixture},
            {"x", x_str},
            {"n", std::to_string(n)},
            {"h", std::to_string(h)},
            {"seed", std::to_string(seed)},
            {"threads", std::to_string(threads)},
            {"epochs", std::to_string(train.epochs)},
            {"learning_rate", format_double(train.learning_rate)},
            {"momentum", format_double(train.momentum)},
            {"schedule", train.schedule == LrSchedule::Cosine ? "cosine" : "constant"},
            {"batch_size", std::to_string(train.batch_size)},
            {"width", std::to_string(train.hidden_width)},
            {"warm_start", warm_start ? "true" : "false"},
            {"out", out}};
}

BernoulliRun run_bernoulli(const BernoulliOptions& opts) {
    if (opts.a > opts.m) throw InvalidCounts("success count a exceeds sample count m");
    if (opts.m < 1) throw InvalidCounts("need at least one observation");

    const SampleSet initial = SampleSet::from_binary_counts(opts.m, opts.a);
    const BernoulliApproach phi;
    const IgmcConfig config{opts.n, opts.h, opts.seed};
    const PosteriorSamples samples = run_igmc(initial, phi, config, opts.threads);
    const EmpiricalCdf fhat = posterior_cdf(samples);

    BernoulliRun run;
    run.degenerate = (opts.a == 0 || opts.a == opts.m);
    run.bound = theorem1_l1_bound(opts.m, opts.h, opts.n);

    std::vector<std::pair<std::string, std::string>> metadata = {
        {"command", "bernoulli"},
        {"approach", "bernoulli"},
        {"m", std::to_string(opts.m)},
        {"a", std::to_string(opts.a)},
        {"n", std::to_string(opts.n)},
        {"h", std::to_string(opts.h)},
        {"seed", std::to_string(opts.seed)}};

    json summary{{"command", "bernoulli"},
                 {"approach", "bernoulli"},
                 {"m", opts.m},
                 {"a", opts.a},
                 {"n", opts.n},
                 {"h", opts.h},
                 {"seed", opts.seed},
                 {"degenerate", run.degenerate},
                 {"theorem1_bound", bound_to_json(run.bound)}};

    if (run.degenerate) {
        metadata.emplace_back("reference", "none");
        summary["reference"] = nullptr;
        summary["distances"] = nullptr;
        run.files["curve.csv"] = render_curve_csv(metadata, fhat, nullptr, {0.0, 1.0});
    } else {
        const double alpha = static_cast<double>(opts.a);
        const double beta = static_cast<double>(opts.m - opts.a);
        const BetaRef ref(alpha, beta);
        run.l1_to_reference = l1_distance(fhat, ref, {0.0, 1.0});
        run.ks_to_reference = ks_distance(fhat, ref);

        metadata.emplace_back("reference", "beta(" + format_double(alpha) + "," +
                                               format_double(beta) + ")");
        summary["reference"] = json{{"family", "beta"}, {"alpha", alpha}, {"beta", beta}};
        summary["distances"] = json{{"l1_to_reference", run.l1_to_reference},
                                    {"ks_to_reference", run.ks_to_reference}};
        run.files["curve.csv"] = render_curve_csv(metadata, fhat, &ref, {0.0, 1.0});
    }

    run.files["summary.json"] = dump_json(summary);
    return run;
}

ExponentialRun run_exponential(const ExponentialOptions& opts) {
    if (opts.m < 1) throw InvalidCounts("need at least one observation");
    if (!(opts.mean > 0.0)) throw std::invalid_argument("sample mean must be positive");

    // Only (m, mean) matter to the fit, so the initial set is the constant
    // one with that exact mean.
    const SampleSet initial = SampleSet::constant(opts.m, opts.mean, Support::NonnegReals);
    const ExponentialApproach phi;
    const IgmcConfig config{opts.n, opts.h, opts.seed};
    const PosteriorSamples samples = run_igmc(initial, phi, config, opts.threads);
    const EmpiricalCdf fhat = posterior_cdf(samples);

    const double shape = static_cast<double>(opts.m);
    const double rate = static_cast<double>(opts.m) * opts.mean;
    const GammaRef ref(shape, rate);

    ExponentialRun run;
    run.ks_to_reference = ks_distance(fhat, ref);
    run.mismatch_threshold = 3.0 * dkw_band(opts.n, 0.05);
    run.mismatch = run.ks_to_reference > run.mismatch_threshold;
    run.truncation_hi = quantile(ref, 0.9999);
    run.l1_truncated = l1_distance(fhat, ref, {0.0, run.truncation_hi});

    const Interval display{0.0, std::max(run.truncation_hi, fhat.max_breakpoint())};
    const std::vector<std::pair<std::string, std::string>> metadata = {
        {"command", "exponential"},
        {"approach", "exponential"},
        {"m", std::to_string(opts.m)},
        {"mean", format_double(opts.mean)},
        {"n", std::to_string(opts.n)},
        {"h", std::to_string(opts.h)},
        {"seed", std::to_string(opts.seed)},
        {"reference", "gamma(" + format_double(shape) + "," + format_double(rate) + ")"},
        {"display_hi", format_double(display.hi)}};

    run.files["curve.csv"] = render_curve_csv(metadata, fhat, &ref, display);
    run.files["summary.json"] = dump_json(
        json{{"command", "exponential"},
             {"approach", "exponential"},
             {"m", opts.m},
             {"mean", opts.mean},
             {"n", opts.n},
             {"h", opts.h},
             {"seed", opts.seed},
             {"reference", json{{"family", "gamma"}, {"shape", shape}, {"rate", rate}}},
             {"distances",
              json{{"ks_to_reference", run.ks_to_reference},
                   {"l1_truncated", run.l1_truncated},
                   {"l1_truncation_hi", run.truncation_hi}}},
             {"mismatch", run.mismatch},
             {"mismatch_threshold", run.mismatch_threshold}});
    return run;
}

ConvergeRun run_converge(const ConvergeOptions& opts) {
    if (opts.sweep.empty()) throw std::invalid_argument("sweep must name at least one (n,h) cell");
    if (opts.seeds < 3) throw std::invalid_argument("converge needs at least 3 seeds");
    if (opts.a < 1 || opts.a >= opts.m)
        throw InvalidCounts("converge needs 0 < a < m for a proper Beta reference");

    const SampleSet initial = SampleSet::from_binary_counts(opts.m, opts.a);
    const BernoulliApproach phi;
    const BetaRef ref(static_cast<double>(opts.a), static_cast<double>(opts.m - opts.a));

    ConvergeRun run;
    std::string csv = "# command=converge\n# m=" + std::to_string(opts.m) +
                      "\n# a=" + std::to_string(opts.a) +
                      "\n# seeds=" + std::to_string(opts.seeds) +
                      "\n# seed=" + std::to_string(opts.seed) + "\n";
    csv += "n,h,seed_index,run_seed,l1,theorem1_bound\n";

    for (std::size_t ci = 0; ci < opts.sweep.size(); ++ci) {
        const SweepCell cell = opts.sweep[ci];
        ConvergeCell out;
        out.n = cell.n;
        out.h = cell.h;
        out.bound = theorem1_l1_bound(opts.m, cell.h, cell.n).value;

        for (std::size_t s = 0; s < opts.seeds; ++s) {
            const std::uint64_t run_seed = stream_seed(opts.seed, ci * opts.seeds + s);
            const IgmcConfig config{cell.n, cell.h, run_seed};
            const PosteriorSamples samples = run_igmc(initial, phi, config, opts.threads);
            const double l1 = l1_distance(posterior_cdf(samples), ref, {0.0, 1.0});
            out.seed_l1.push_back(l1);
            csv += std::to_string(cell.n) + "," + std::to_string(cell.h) + "," +
                   std::to_string(s) + "," + std::to_string(run_seed) + "," +
                   format_double(l1) + "," + format_double(out.bound) + "\n";
        }
        double mean = 0.0;
        for (double v : out.seed_l1) mean += v;
        out.mean_l1 = mean / static_cast<double>(out.seed_l1.size());
        run.cells.push_back(std::move(out));
    }

    run.all_under_bound = true;
    for (const auto& cell : run.cells)
        if (!(cell.mean_l1 <= cell.bound)) run.all_under_bound = false;

    // Rate estimate: mean L1 against n among the cells at the deepest h.
    run.slope_h = 0;
    for (const auto& cell : run.cells) run.slope_h = std::max(run.slope_h, cell.h);
    std::vector<double> ns, l1s;
    for (const auto& cell : run.cells) {
        if (cell.h == run.slope_h) {
            ns.push_back(static_cast<double>(cell.n));
            l1s.push_back(cell.mean_l1);
        }
    }
    run.slope = ns.size() >= 2 ? loglog_slope(ns, l1s)
                               : std::numeric_limits<double>::quiet_NaN();

    json cells_json = json::array();
    for (const auto& cell : run.cells) {
        cells_json.push_back(json{{"n", cell.n},
                                  {"h", cell.h},
                                  {"seed_l1", cell.seed_l1},
                                  {"mean_l1", cell.mean_l1},
                                  {"theorem1_bound", cell.bound}});
    }
    json summary{{"command", "converge"},
                 {"m", opts.m},
                 {"a", opts.a},
                 {"seeds", opts.seeds},
                 {"seed", opts.seed},
                 {"cells", cells_json},
                 {"all_under_bound", run.all_under_bound}};
    if (std::isnan(run.slope)) {
        summary["slope"] = nullptr;
    } else {
        summary["slope"] = json{{"h", run.slope_h}, {"value", run.slope},
                                {"cells_used", ns.size()}};
    }

    run.files["sweep.csv"] = std::move(csv);
    run.files["summary.json"] = dump_json(summary);
    return run;
}

ClassifyRun run_classify(const ClassifyOptions& opts) {
    const LabeledDataset data = is_blob_spec(opts.fixture)
                                    ? make_blobs(parse_blob_spec(opts.fixture))
                                    : load_dataset_csv(opts.fixture);
    if (opts.x.empty()) throw std::invalid_argument("classify needs a query point --x");

    const IgmcConfig config{opts.n, opts.h, opts.seed};
    const ClassPosterior posterior =
        run_deep_igmc(data, opts.x, opts.train, config, opts.threads, opts.warm_start);

    ClassifyRun run;
    run.report = summarize_uncertainty(posterior);

    std::string header = "# command=classify\n# fixture=" + opts.fixture + "\n# x=";
    for (std::size_t i = 0; i < opts.x.size(); ++i) {
        if (i) header += ',';
        header += format_double(opts.x[i]);
    }
    header += "\n# n=" + std::to_string(opts.n) + "\n# h=" + std::to_string(opts.h) +
              "\n# seed=" + std::to_string(opts.seed) + "\n";

    std::string uncertainty_csv = header + "class,mean_probability_pct,uncertainty\n";
    for (const auto& cls : run.report.classes) {
        uncertainty_csv += std::to_string(cls.label) + "," +
                           format_double(100.0 * cls.mean_probability) + "," +
                           format_double(cls.uncertainty) + "\n";
    }

    std::string mu_csv = "chain";
    for (int k = 1; k <= posterior.num_classes(); ++k) mu_csv += ",mu_" + std::to_string(k);
    mu_csv += "\n";
    for (std::size_t n = 0; n < posterior.sample_size_n(); ++n) {
        mu_csv += std::to_string(n);
        for (int k = 1; k <= posterior.num_classes(); ++k)
            mu_csv += "," + format_double(posterior.mu(n, k));
        mu_csv += "\n";
    }

    json classes_json = json::array();
    for (const auto& cls : run.report.classes) {
        classes_json.push_back(json{{"class", cls.label},
                                    {"mean_probability_pct", 100.0 * cls.mean_probability},
                                    {"uncertainty", cls.uncertainty}});
    }
    json summary{{"command", "classify"},
                 {"fixture", opts.fixture},
                 {"x", opts.x},
                 {"n", opts.n},
                 {"h", opts.h},
                 {"seed", opts.seed},
                 {"num_classes", posterior.num_classes()},
                 {"classes", classes_json}};

    run.files["uncertainty.csv"] = std::move(uncertainty_csv);
    run.files["mu.csv"] = std::move(mu_csv);
    run.files["summary.json"] = dump_json(summary);
    return run;
}

std::vector<SweepCell> parse_sweep(const std::string& text) {
    std::vector<SweepCell> cells;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("sweep cell needs n:h, got " + item);
        try {
            SweepCell cell;
            cell.n = std::stoull(item.substr(0, colon));
            cell.h = std::stoull(item.substr(colon + 1));
            cells.push_back(cell);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad sweep cell: " + item);
        }
    }
    if (cells.empty()) throw std::invalid_argument("sweep is empty");
    return cells;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t pos = 0;
            values.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad number in list: " + item);
        }
    }
    return values;
}

WrittenFiles write_run(const std::string& command,
                       const std::map<std::string, std::string>& parameters,
                       const FileMap& files, const std::string& out_base,
                       double duration_seconds) {
    WrittenFiles written;
    json outputs = json::array();

    for (const auto& [name, bytes] : files) {
        const std::string path = out_base + "_" + name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write output file: " + path);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("short write to: " + path);
        written.data_paths.push_back(path);
        outputs.push_back(json{{"file", std::filesystem::path(path).filename().string()},
                               {"digest_fnv1a64", fnv1a64_hex(bytes)}});
    }

    const json manifest{{"command", command},
                        {"parameters", parameters},
                        {"version", std::string(kVersion)},
                        {"duration_seconds", duration_seconds},
                        {"outputs", outputs}};
    written.manifest_path = out_base + "_manifest.json";
    std::ofstream out(written.manifest_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest: " + written.manifest_path);
    const std::string text = dump_json(manifest);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    return written;
}

} // namespace igmc::experiment
