#include "igmc/dataset.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "igmc/errors.hpp"
#include "igmc/rng.hpp"

namespace igmc {

LabeledDataset::LabeledDataset(std::vector<LabeledExample> examples, int num_classes)
    : examples_(std::move(examples)), num_classes_(num_classes) {
    if (examples_.empty()) throw EmptySampleSet("dataset must contain at least one example");
    if (num_classes_ < 2) throw std::invalid_argument("need at least two classes");
    feature_dim_ = static_cast<int>(examples_.front().features.size());
    if (feature_dim_ < 1) throw std::invalid_argument("feature dimension must be >= 1");
    for (const auto& ex : examples_) {
        if (static_cast<int>(ex.features.size()) != feature_dim_)
            throw DimensionMismatch("inconsistent feature dimensions in dataset");
        if (ex.label < 1 || ex.label > num_classes_)
            throw std::invalid_argument("label outside [1, num_classes]");
    }
}

void LabeledDataset::append(std::vector<double> features, int label) {
    if (static_cast<int>(features.size()) != feature_dim_)
        throw DimensionMismatch("appended example has wrong feature dimension");
    if (label < 1 || label > num_classes_)
        throw std::invalid_argument("appended label outside [1, num_classes]");
    examples_.push_back(LabeledExample{std::move(features), label});
}

std::vector<double> blob_center(const BlobSpec& spec, int label) {
    if (label < 1 || label > spec.num_classes)
        throw std::invalid_argument("blob label outside [1, num_classes]");
    std::vector<double> center(static_cast<std::size_t>(spec.feature_dim), 0.0);
    if (spec.num_classes == 2) {
        center[0] = (label == 1) ? -0.5 * spec.separation : 0.5 * spec.separation;
        return center;
    }
    // adjacent centers on the circle are `separation` apart
    const double radius = 0.5 * spec.separation / std::sin(std::numbers::pi / spec.num_classes);
    const double angle = 2.0 * std::numbers::pi * (label - 1) / spec.num_classes;
    center[0] = radius * std::cos(angle);
    if (spec.feature_dim > 1) center[1] = radius * std::sin(angle);
    return center;
}

std::vector<double> blob_midpoint(const BlobSpec& spec, int label_a, int label_b) {
    const auto ca = blob_center(spec, label_a);
    const auto cb = blob_center(spec, label_b);
    std::vector<double> mid(ca.size());
    for (std::size_t i = 0; i < ca.size(); ++i) mid[i] = 0.5 * (ca[i] + cb[i]);
    return mid;
}

LabeledDataset make_blobs(const BlobSpec& spec) {
    if (spec.num_classes < 2) throw std::invalid_argument("blobs need >= 2 classes");
    if (spec.per_class < 1) throw std::invalid_argument("blobs need >= 1 point per class");
    if (spec.feature_dim < 1) throw std::invalid_argument("blobs need feature_dim >= 1");
    if (!(spec.sigma > 0.0)) throw std::invalid_argument("blob sigma must be positive");

    RngState rng = RngState::for_stream(spec.seed, 0);
    std::vector<LabeledExample> examples;
    examples.reserve(static_cast<std::size_t>(spec.num_classes) * spec.per_class);
    for (int k = 1; k <= spec.num_classes; ++k) {
        const auto center = blob_center(spec, k);
        for (int i = 0; i < spec.per_class; ++i) {
            std::vector<double> x(center);
            for (auto& coord : x) coord += spec.sigma * rng.standard_normal();
            examples.push_back(LabeledExample{std::move(x), k});
        }
    }
    return LabeledDataset(std::move(examples), spec.num_classes);
}

bool is_blob_spec(const std::string& fixture) {
    return fixture.rfind("blobs", 0) == 0;
}

BlobSpec parse_blob_spec(const std::string& fixture) {
    if (!is_blob_spec(fixture)) throw std::invalid_argument("not a blob spec: " + fixture);
    BlobSpec spec;
    const auto colon = fixture.find(':');
    if (colon == std::string::npos) return spec;

    std::stringstream rest(fixture.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("blob spec entry needs key=value: " + item);
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        try {
            if (key == "k") {
                spec.num_classes = std::stoi(value);
            } else if (key == "per") {
                spec.per_class = std::stoi(value);
            } else if (key == "sep") {
                spec.separation = std::stod(value);
            } else if (key == "d") {
                spec.feature_dim = std::stoi(value);
            } else if (key == "sigma") {
                spec.sigma = std::stod(value);
            } else if (key == "seed") {
                spec.seed = std::stoull(value);
            } else {
                throw std::invalid_argument("unknown blob spec key: " + key);
            }
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad blob spec value: " + item);
        }
    }
    return spec;
}

LabeledDataset load_dataset_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty dataset file: " + path);

    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) header.push_back(field);
    }
    if (header.size() < 2 || header.back() != "label")
        throw std::runtime_error("dataset header must be f1,...,fd,label");
    const std::size_t dim = header.size() - 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (header[i] != "f" + std::to_string(i + 1))
            throw std::runtime_error("dataset header must be f1,...,fd,label");
    }

    std::vector<LabeledExample> examples;
    int max_label = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        LabeledExample ex;
        ex.features.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (!std::getline(ss, field, ','))
                throw std::runtime_error("short dataset row: " + line);
            ex.features.push_back(std::stod(field));
        }
        if (!std::getline(ss, field, ','))
            throw std::runtime_error("dataset row missing label: " + line);
        ex.label = std::stoi(field);
        if (ex.label < 1) throw std::runtime_error("labels must be 1-based positive integers");
        max_label = std::max(max_label, ex.label);
        examples.push_back(std::move(ex));
    }
    return LabeledDataset(std::move(examples), std::max(max_label, 2));
}

void save_dataset_csv(const std::string& path, const LabeledDataset& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write dataset file: " + path);
    for (int i = 1; i <= data.feature_dim(); ++i) out << "f" << i << ",";
    out << "label\n";
    out.precision(17);
    for (const auto& ex : data.examples()) {
        for (double v : ex.features) out << v << ",";
        out << ex.label << "\n";
    }
}

} // namespace igmc
