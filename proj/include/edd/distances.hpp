#ifndef EDD_DISTANCES_HPP
#define EDD_DISTANCES_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edd/dataset.hpp"

namespace edd {

enum class Metric { euclidean, manhattan, chebyshev };

std::string_view metric_name(Metric m);
Metric metric_from_name(std::string_view name);  // throws Error on unknown name

/// All unordered pairwise distances d(i,j), i < j, in row-major pair order:
/// (0,1), (0,2), ..., (0,N-1), (1,2), ... Length is exactly N(N-1)/2.
struct CondensedDistances {
  std::vector<double> values;
  std::size_t n_points = 0;

  static std::size_t size_for(std::size_t n) { return n * (n - 1) / 2; }

  /// Flat index of pair (i, j) with i < j.
  static std::size_t index(std::size_t n, std::size_t i, std::size_t j) {
    return n * i - i * (i + 1) / 2 + (j - i - 1);
  }

  /// Symmetric accessor; 0 for i == j.
  double at(std::size_t i, std::size_t j) const {
    if (i == j) return 0.0;
    if (i > j) std::swap(i, j);
    return values[index(n_points, i, j)];
  }
};

/// Metric value for two equal-dimension points. Throws DimensionMismatch.
double distance(std::span<const double> a, std::span<const double> b, Metric metric);

/// Computes every pair distance under the given metric. Work is split across
/// worker threads into disjoint output slices, so the result is bit-identical
/// for any worker count. Throws TooFewPoints when N < 2.
CondensedDistances pairwise_distances(const Dataset& data, Metric metric);

/// Binary cache format: 8-byte little-endian unsigned point count N followed
/// by N(N-1)/2 little-endian IEEE-754 doubles.
void save_condensed(const std::string& path, const CondensedDistances& distances);
CondensedDistances load_condensed(const std::string& path);

}  // namespace edd

#endif  // EDD_DISTANCES_HPP
