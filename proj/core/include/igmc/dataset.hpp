#ifndef IGMC_DATASET_HPP
#define IGMC_DATASET_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace igmc {

struct LabeledExample {
    std::vector<double> features;
    int label = 1; // 1-based, in [1, num_classes]
};

// Fixed-dimension feature vectors with 1-based integer labels.
class LabeledDataset {
public:
    LabeledDataset(std::vector<LabeledExample> examples, int num_classes);

    void append(std::vector<double> features, int label);

    const std::vector<LabeledExample>& examples() const noexcept { return examples_; }
    std::size_t size() const noexcept { return examples_.size(); }
    int num_classes() const noexcept { return num_classes_; }
    int feature_dim() const noexcept { return feature_dim_; }

private:
    std::vector<LabeledExample> examples_;
    int num_classes_;
    int feature_dim_;
};

// Gaussian blob fixture: per_class points around each of num_classes
// centers, noise sigma per coordinate. Two classes sit at (-sep/2, 0) and
// (+sep/2, 0); more classes are spread on a circle with adjacent centers
// `separation` apart. Points are generated class-major.
struct BlobSpec {
    int num_classes = 2;
    int per_class = 20;
    double separation = 3.0;
    int feature_dim = 2;
    double sigma = 0.5;
    std::uint64_t seed = 0;
};

LabeledDataset make_blobs(const BlobSpec& spec);

// Center of class `label` (1-based) under the layout above, padded with
// zeros beyond the first two coordinates.
std::vector<double> blob_center(const BlobSpec& spec, int label);

// Midpoint of two class centers; the natural maximally ambiguous query.
std::vector<double> blob_midpoint(const BlobSpec& spec, int label_a, int label_b);

// "blobs:k=2,per=20,sep=3,d=2,sigma=0.5,seed=0" with any subset of keys.
bool is_blob_spec(const std::string& fixture);
BlobSpec parse_blob_spec(const std::string& fixture);

// CSV fixture format: header "f1,...,fd,label", one example per row,
// labels 1-based integers.
LabeledDataset load_dataset_csv(const std::string& path);
void save_dataset_csv(const std::string& path, const LabeledDataset& data);

} // namespace igmc

#endif // IGMC_DATASET_HPP
