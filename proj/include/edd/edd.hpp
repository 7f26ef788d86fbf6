#ifndef EDD_EDD_HPP
#define EDD_EDD_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "edd/dataset.hpp"
#include "edd/distances.hpp"

namespace edd {

/// Histogram range selection: data-adaptive [min, max] by default, or a fixed
/// [lo, hi] for cross-dataset comparability.
struct RangePolicy {
  bool is_fixed = false;
  double lo = 0.0;
  double hi = 0.0;

  static RangePolicy observed() { return {}; }
  static RangePolicy fixed(double lo, double hi);  // throws BadRange if lo >= hi
};

/// Binned probability distribution over distance values. probabilities sums
/// to 1; bin_edges has bins()+1 entries, strictly ascending except in the
/// degenerate all-equal-distances case where all edges collapse to that value.
struct DistanceHistogram {
  std::vector<double> probabilities;
  std::vector<double> bin_edges;
  std::uint64_t clipped_count = 0;  // values outside a fixed range, clipped to end bins

  std::size_t bins() const { return probabilities.size(); }
};

struct EddConfig {
  std::size_t bins = 100;
  bool zscore = true;
  Metric metric = Metric::euclidean;
  RangePolicy range{};
};

struct EddResult {
  double edd = 0.0;           // entropy_bits / log2(bins), in [0, 1]
  double entropy_bits = 0.0;  // Shannon entropy of the histogram
  DistanceHistogram histogram;
  EddConfig config;
  std::size_t n_points = 0;
  std::size_t n_dims = 0;  // 0 when computed from a distance cache
};

/// Equal-width bins over the selected range; the last bin is right-inclusive.
/// All-equal distances under the observed policy collapse to a single
/// occupied bin. Under a fixed range, out-of-range values are clipped to the
/// end bins and counted in clipped_count. Throws EmptyDistances, BadRange.
DistanceHistogram build_histogram(const CondensedDistances& distances, std::size_t bins,
                                  const RangePolicy& range = {});

/// -sum_k p_k log2 p_k with the 0 log 0 = 0 convention. The mathematical
/// range is [0, log2 bins]; floating-point spill past either end is clamped.
double shannon_entropy(const DistanceHistogram& histogram);

/// Full pipeline: optional z-scoring (factor 1), pairwise distances,
/// histogram, entropy normalized by log2(bins).
EddResult compute_edd(const Dataset& data, const EddConfig& config = {});

/// Pipeline tail for precomputed distances (e.g. a CLI cache). The zscore and
/// metric fields of config describe how the cache was produced, not work done
/// here.
EddResult edd_from_distances(const CondensedDistances& distances, const EddConfig& config = {});

/// Single-line key=value record: edd, entropy_bits, bins, n_points, metric,
/// zscore flag, range, bin-edges digest.
std::string to_record(const EddResult& result);

/// Two-column CSV: bin_center, probability.
void write_histogram_csv(std::ostream& out, const DistanceHistogram& histogram);

}  // namespace edd

#endif  // EDD_EDD_HPP
