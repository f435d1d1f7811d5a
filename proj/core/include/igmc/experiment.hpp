#ifndef IGMC_EXPERIMENT_HPP
#define IGMC_EXPERIMENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "igmc/bounds.hpp"
#include "igmc/classifier.hpp"
#include "igmc/deep_igmc.hpp"

// Experiment runners behind the CLI subcommands. Each runner renders its
// data files fully in memory (name -> bytes) so determinism can be checked
// by comparing maps; write_run persists them and the run manifest.
//
// Serialization conventions, fixed for byte reproducibility: CSV fields
// use '.' decimal points, ',' delimiters, '\n' line endings, and doubles
// printed with 17 significant digits; JSON is emitted with sorted keys.
namespace igmc::experiment {

// Shortest-width "%.17g" rendering; round-trips any finite double.
std::string format_double(double value);

// FNV-1a 64-bit digest of a byte string, and its 16-hex-char form.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;
std::string fnv1a64_hex(std::string_view bytes);

using FileMap = std::map<std::string, std::string>; // file name suffix -> bytes

struct CommonOptions {
    std::size_t n = 1000;
    std::size_t h = 1000;
    std::uint64_t seed = 0;
    std::string out = "igmc_run";
    std::size_t threads = 1;
};

struct BernoulliOptions : CommonOptions {
    std::size_t m = 9;
    std::size_t a = 4;

    std::map<std::string, std::string> as_parameters() const;
};

struct ExponentialOptions : CommonOptions {
    std::size_t m = 50;
    double mean = 2.0;

    std::map<std::string, std::string> as_parameters() const;
};

struct SweepCell {
    std::size_t n = 0;
    std::size_t h = 0;
};

struct ConvergeOptions : CommonOptions {
    std::size_t m = 9;
    std::size_t a = 4;
    std::vector<SweepCell> sweep;
    std::size_t seeds = 3;

    std::map<std::string, std::string> as_parameters() const;
};

struct ClassifyOptions : CommonOptions {
    ClassifyOptions() {
        n = 20;
        h = 20;
    }

    std::string fixture = "blobs:k=2,per=20,sep=3";
    std::vector<double> x;
    TrainConfig train;
    bool warm_start = false;

    std::map<std::string, std::string> as_parameters() const;
};

struct BernoulliRun {
    bool degenerate = false; // a == 0 or a == m: no Beta reference
    double l1_to_reference = 0.0;
    double ks_to_reference = 0.0;
    BoundReport bound;
    FileMap files; // curve.csv, summary.json
};

struct ExponentialRun {
    double ks_to_reference = 0.0;
    double mismatch_threshold = 0.0; // 3 * dkw_band(n, 0.05)
    bool mismatch = false;
    double l1_truncated = 0.0;  // L1 over [0, truncation_hi]
    double truncation_hi = 0.0; // 0.9999 quantile of the reference
    FileMap files;              // curve.csv, summary.json
};

struct ConvergeCell {
    std::size_t n = 0;
    std::size_t h = 0;
    std::vector<double> seed_l1;
    double mean_l1 = 0.0;
    double bound = 0.0;
};

struct ConvergeRun {
    std::vector<ConvergeCell> cells;
    double slope = 0.0;        // log-log slope of mean L1 vs n at h = slope_h
    std::size_t slope_h = 0;   // largest h in the sweep
    bool all_under_bound = false;
    FileMap files; // sweep.csv, summary.json
};

struct ClassifyRun {
    UncertaintyReport report;
    FileMap files; // uncertainty.csv, mu.csv, summary.json
};

BernoulliRun run_bernoulli(const BernoulliOptions& opts);
ExponentialRun run_exponential(const ExponentialOptions& opts);
ConvergeRun run_converge(const ConvergeOptions& opts);
ClassifyRun run_classify(const ClassifyOptions& opts);

// "n1:h1,n2:h2,..." -> cells; throws std::invalid_argument on bad syntax.
std::vector<SweepCell> parse_sweep(const std::string& text);

// "v1,v2,..." -> doubles.
std::vector<double> parse_double_list(const std::string& text);

struct WrittenFiles {
    std::vector<std::string> data_paths;
    std::string manifest_path;
};

// Writes each entry of `files` to "<out_base>_<name>" and a manifest to
// "<out_base>_manifest.json" recording the command, resolved parameters,
// library version, wall-clock duration, and FNV-1a digest of every data
// file. Data files are byte-deterministic; the manifest's duration field
// is the one value that varies across reruns.
WrittenFiles write_run(const std::string& command,
                       const std::map<std::string, std::string>& parameters,
                       const FileMap& files, const std::string& out_base,
                       double duration_seconds);

} // namespace igmc::experiment

#endif // IGMC_EXPERIMENT_HPP
