#ifndef EDD_DATASET_HPP
#define EDD_DATASET_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace edd {

/// Immutable N x D matrix of finite reals. Row-major storage. Safe to share
/// across threads once constructed.
class Dataset {
public:
  /// Validates shape consistency and that every entry is finite.
  Dataset(std::vector<double> values, std::size_t n_points, std::size_t n_dims);

  std::size_t n_points() const { return n_points_; }
  std::size_t n_dims() const { return n_dims_; }

  double at(std::size_t point, std::size_t dim) const {
    return values_[point * n_dims_ + dim];
  }
  std::span<const double> row(std::size_t point) const {
    return {values_.data() + point * n_dims_, n_dims_};
  }
  const std::vector<double>& values() const { return values_; }

private:
  std::vector<double> values_;
  std::size_t n_points_;
  std::size_t n_dims_;
};

/// Per-point class assignments with ids in [0, n_classes). Ids are dense by
/// construction when interned from raw values; a class may become empty only
/// through the random labeling scenario, which downstream consumers reject.
class Labels {
public:
  Labels(std::vector<int> assignments, int n_classes);

  /// Interns raw values to ids in first-appearance order.
  static Labels intern(const std::vector<std::string>& raw);

  std::size_t size() const { return assignments_.size(); }
  int n_classes() const { return n_classes_; }
  int at(std::size_t point) const { return assignments_[point]; }
  const std::vector<int>& assignments() const { return assignments_; }

  /// Point count per class id, length n_classes.
  std::vector<std::size_t> class_sizes() const;

private:
  std::vector<int> assignments_;
  int n_classes_;
};

/// Transform record: output = factor * (x - mean) / std per kept dimension.
/// means/stds align with the output dataset's dimensions; dropped_dims holds
/// original indices removed under the drop policy.
struct ZScoreParams {
  std::vector<double> means;
  std::vector<double> stds;
  double factor = 1.0;
  std::vector<std::size_t> dropped_dims;
};

enum class ConstantDimPolicy { error, drop };

/// Dimension-wise standardization with population standard deviation
/// (divisor N). Throws TooFewPoints (N < 2), ZeroVariance under the error
/// policy, AllDimensionsConstant when drop removes everything.
std::pair<Dataset, ZScoreParams> zscore(const Dataset& data, double factor,
                                        ConstantDimPolicy policy = ConstantDimPolicy::error);

struct LoadResult {
  Dataset dataset;
  std::optional<Labels> labels;
};

/// Reads a comma-separated numeric matrix. A single header row is
/// auto-detected when any cell of the first row fails to parse as a finite
/// number. label_column selects the label column by header name, or by
/// 0-based index when there is no header (or the name is absent and the
/// selector parses as an integer). Label values are interned in
/// first-appearance order.
LoadResult load_csv(const std::string& path,
                    const std::optional<std::string>& label_column = std::nullopt);

/// Writes the dataset (and labels, if given) in the format load_csv ingests:
/// header x0..x{D-1}[,label], then one row per point. Values are emitted in
/// shortest round-trip form, so representable values survive bit-for-bit.
void save_csv(const std::string& path, const Dataset& data, const Labels* labels = nullptr);

}  // namespace edd

#endif  // EDD_DATASET_HPP
