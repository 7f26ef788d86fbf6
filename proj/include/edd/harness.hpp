#ifndef EDD_HARNESS_HPP
#define EDD_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edd/edd.hpp"
#include "edd/synth.hpp"

namespace edd {

/// One synthetic experiment: a cluster geometry swept over widths, metrics
/// averaged across seeds.
struct SweepConfig {
  std::vector<double> centers;  // K x D row-major
  std::size_t n_clusters = 0;
  std::size_t n_dims = 0;
  std::size_t points_per_cluster = 200;
  std::vector<double> widths;        // strictly ascending, all >= 0
  std::vector<std::uint64_t> seeds;  // non-empty
  EddConfig edd_config{};
  bool compute_gdv = true;
  std::pair<int, int> merged_pair{0, 1};  // labeling experiment: (keep, from)
  int random_retry_limit = 100;           // labeling experiment: re-draws for degenerate labels

  /// Four Gaussian centers on the corners of an axis-aligned side-4 square
  /// centered at the origin; 20 widths in [0.05, 3.0]; seeds 0..9.
  static SweepConfig four_square_defaults();
  /// Three Gaussian centers on an equilateral side-4 triangle centered at the
  /// origin; 10 widths in [0.05, 1.5]; seeds 0..9.
  static SweepConfig three_triangle_defaults();

  void validate() const;
};

/// One aggregated curve point. A non-empty error marks the row invalid: its
/// metric fields are NaN and the row is kept so the sweep stays complete.
struct SweepRow {
  double width = 0.0;
  std::string scenario;  // empty for plain width sweeps
  double edd_mean = 0.0;
  double edd_std = 0.0;
  std::optional<double> gdv_mean;
  std::optional<double> gdv_std;
  std::size_t n_seeds = 0;
  std::string error;

  bool valid() const { return error.empty(); }
};

/// For each width and seed: generate, compute EDD (and GDV on the true labels
/// when enabled), then aggregate mean/std per width. Rows come back in
/// ascending width order. A failing width (e.g. ZeroVariance at width 0) is
/// reported in its row, not thrown.
std::vector<SweepRow> width_sweep(const SweepConfig& config);

/// One row per (width, scenario). GDV runs against the scenario labels; EDD
/// is computed once per (width, seed) and shared across scenarios, since it
/// consumes no labels. Random labelings that leave any class below 2 points
/// are re-drawn with a derived sub-seed up to random_retry_limit times.
std::vector<SweepRow> labeling_sweep(const SweepConfig& config,
                                     const std::vector<LabelScenario>& scenarios);

/// Plot-ready CSV: width,scenario,edd_mean,edd_std,gdv_mean,gdv_std,n_seeds.
/// Missing or invalid values are written as nan.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Key=value provenance sidecar mirroring the CLI flag names.
void write_config_sidecar(std::ostream& out, const SweepConfig& config,
                          const std::vector<LabelScenario>* scenarios = nullptr);

}  // namespace edd

#endif  // EDD_HARNESS_HPP
