#include "edd/edd.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>

#include "edd/errors.hpp"
#include "edd/numfmt.hpp"
#include "edd/parallel.hpp"

namespace edd {

RangePolicy RangePolicy::fixed(double lo, double hi) {
  if (!(lo < hi)) throw BadRange(lo, hi);
  RangePolicy p;
  p.is_fixed = true;
  p.lo = lo;
  p.hi = hi;
  return p;
}

namespace {

struct BinCounts {
  std::vector<std::uint64_t> counts;
  std::uint64_t clipped = 0;
};

void count_range(const std::vector<double>& values, std::size_t begin, std::size_t end,
                 double lo, double hi, double width, std::size_t bins, bool fixed,
                 BinCounts& out) {
  const std::size_t last = bins - 1;
  for (std::size_t k = begin; k < end; ++k) {
    double v = values[k];
    if (fixed && v < lo) {
      ++out.counts[0];
      ++out.clipped;
      continue;
    }
    if (fixed && v > hi) {
      ++out.counts[last];
      ++out.clipped;
      continue;
    }
    // v == hi lands past the last edge and is folded back: right-inclusive.
    std::size_t bin = static_cast<std::size_t>((v - lo) / width);
    ++out.counts[std::min(bin, last)];
  }
}

}  // namespace

DistanceHistogram build_histogram(const CondensedDistances& distances, std::size_t bins,
                                  const RangePolicy& range) {
  const std::vector<double>& values = distances.values;
  if (values.empty()) throw EmptyDistances();
  if (bins < 2) throw Error("histogram needs at least 2 bins");

  double lo, hi;
  if (range.is_fixed) {
    if (!(range.lo < range.hi)) throw BadRange(range.lo, range.hi);
    lo = range.lo;
    hi = range.hi;
  } else {
    auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    lo = *mn;
    hi = *mx;
    if (lo == hi) {
      // Single distance value: all mass in bin 0, edges collapse.
      DistanceHistogram h;
      h.probabilities.assign(bins, 0.0);
      h.probabilities[0] = 1.0;
      h.bin_edges.assign(bins + 1, lo);
      return h;
    }
  }

  const double width = (hi - lo) / static_cast<double>(bins);
  const std::size_t m = values.size();

  // Per-worker integer counts over fixed chunks merge exactly, so the result
  // is independent of the worker count.
  const int workers = plan_workers(m, 1 << 16);
  std::vector<BinCounts> partial(static_cast<std::size_t>(workers));
  for (auto& p : partial) p.counts.assign(bins, 0);
  const std::size_t chunk = (m + static_cast<std::size_t>(workers) - 1) /
                            static_cast<std::size_t>(workers);
  run_workers(workers, [&](int w) {
    std::size_t begin = static_cast<std::size_t>(w) * chunk;
    std::size_t end = std::min(m, begin + chunk);
    if (begin < end)
      count_range(values, begin, end, lo, hi, width, bins, range.is_fixed,
                  partial[static_cast<std::size_t>(w)]);
  });

  DistanceHistogram h;
  h.probabilities.assign(bins, 0.0);
  std::vector<std::uint64_t> counts(bins, 0);
  for (const auto& p : partial) {
    for (std::size_t b = 0; b < bins; ++b) counts[b] += p.counts[b];
    h.clipped_count += p.clipped;
  }
  for (std::size_t b = 0; b < bins; ++b)
    h.probabilities[b] = static_cast<double>(counts[b]) / static_cast<double>(m);

  h.bin_edges.resize(bins + 1);
  h.bin_edges[0] = lo;
  h.bin_edges[bins] = hi;
  for (std::size_t b = 1; b < bins; ++b)
    h.bin_edges[b] = lo + (hi - lo) * (static_cast<double>(b) / static_cast<double>(bins));
  return h;
}

double shannon_entropy(const DistanceHistogram& histogram) {
  double sum = 0.0;
  for (double p : histogram.probabilities)
    if (p > 0.0) sum += p * std::log2(p);
  double h = -sum;
  double max_bits = std::log2(static_cast<double>(histogram.bins()));
  return std::clamp(h, 0.0, max_bits) + 0.0;  // +0.0 folds -0 to +0
}

EddResult compute_edd(const Dataset& data, const EddConfig& config) {
  if (config.bins < 2) throw Error("EDD needs at least 2 histogram bins");
  std::optional<Dataset> scaled;
  if (config.zscore) scaled.emplace(zscore(data, 1.0).first);
  const Dataset& input = scaled ? *scaled : data;
  CondensedDistances distances = pairwise_distances(input, config.metric);
  EddResult result = edd_from_distances(distances, config);
  result.n_dims = input.n_dims();
  return result;
}

EddResult edd_from_distances(const CondensedDistances& distances, const EddConfig& config) {
  EddResult result;
  result.config = config;
  result.n_points = distances.n_points;
  result.histogram = build_histogram(distances, config.bins, config.range);
  result.entropy_bits = shannon_entropy(result.histogram);
  result.edd = result.entropy_bits / std::log2(static_cast<double>(config.bins));
  return result;
}

std::string to_record(const EddResult& result) {
  std::string range = result.config.range.is_fixed
                          ? fmt_double(result.config.range.lo) + ":" +
                                fmt_double(result.config.range.hi)
                          : "observed";
  std::uint64_t digest = fnv1a64(result.histogram.bin_edges.data(),
                                 result.histogram.bin_edges.size() * sizeof(double));
  std::string rec;
  rec += "edd=" + fmt_double(result.edd);
  rec += " entropy_bits=" + fmt_double(result.entropy_bits);
  rec += " bins=" + std::to_string(result.config.bins);
  rec += " n_points=" + std::to_string(result.n_points);
  rec += " metric=" + std::string(metric_name(result.config.metric));
  rec += std::string(" zscore=") + (result.config.zscore ? "on" : "off");
  rec += " range=" + range;
  if (result.config.range.is_fixed)
    rec += " clipped=" + std::to_string(result.histogram.clipped_count);
  rec += " bin_edges_digest=" + to_hex(digest);
  return rec;
}

void write_histogram_csv(std::ostream& out, const DistanceHistogram& histogram) {
  out << "bin_center,probability\n";
  for (std::size_t b = 0; b < histogram.bins(); ++b) {
    double center = 0.5 * (histogram.bin_edges[b] + histogram.bin_edges[b + 1]);
    out << fmt_double(center) << ',' << fmt_double(histogram.probabilities[b]) << '\n';
  }
}

}  // namespace edd
