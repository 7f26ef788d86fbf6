#ifndef EDD_SYNTH_HPP
#define EDD_SYNTH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "edd/dataset.hpp"

namespace edd {

/// Isotropic Gaussian mixture: K cluster centers, one common width, a fixed
/// number of points per cluster and a master seed.
struct ClusterSpec {
  std::vector<double> centers;  // K x D row-major
  std::size_t n_clusters = 0;
  std::size_t n_dims = 0;
  double width = 1.0;
  std::size_t points_per_cluster = 1;
  std::uint64_t seed = 0;

  void validate() const;  // throws Error on inconsistent fields
};

/// The Fig-2-style labeling cases: keep the true labels, merge two classes
/// under one label, or assign labels uniformly at random.
struct LabelScenario {
  enum class Kind { correct, merged, random };

  Kind kind = Kind::correct;
  int merge_keep = 0;  // merged: surviving class id
  int merge_from = 0;  // merged: class id folded into merge_keep

  static LabelScenario correct() { return {}; }
  static LabelScenario merged(int keep, int from);  // throws SameClass if keep == from
  static LabelScenario random();

  std::string_view name() const;
};

/// Draws points_per_cluster samples around each center from an isotropic
/// Gaussian with per-dimension standard deviation `width`, in cluster-major
/// row order, labeled by cluster index. Each cluster samples from its own
/// substream (substream_seed(seed, k)) through the documented
/// xoshiro256++/Box-Muller pipeline, so output is a pure function of the spec
/// and resizing one cluster leaves the others' draws unchanged.
std::pair<Dataset, Labels> generate(const ClusterSpec& spec);

/// correct: identity. merged(keep, from): every `from` becomes `keep` and the
/// remaining ids are compacted downward, so class count drops by exactly one.
/// random: each point is assigned uniformly over the original class count by
/// point index, from Xoshiro256pp(seed); positions never enter. May leave a
/// class empty or singleton at tiny N; consumers that need balanced classes
/// re-draw with a fresh seed. Throws UnknownClass for a bad merged pair.
Labels apply_scenario(const Labels& labels, const LabelScenario& scenario, std::uint64_t seed);

}  // namespace edd

#endif  // EDD_SYNTH_HPP
