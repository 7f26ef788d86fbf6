#ifndef EDD_TEST_UTIL_HPP
#define EDD_TEST_UTIL_HPP

// Shared helpers and independent oracles. Oracles deliberately reimplement
// the math from scratch (plain loops, no library calls into the code under
// test) so they stay an independent route to the same numbers.

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <string>
#include <vector>

#include "edd/dataset.hpp"
#include "edd/rng.hpp"

namespace testutil {

inline edd::Dataset make_dataset(const std::vector<std::vector<double>>& rows) {
  std::vector<double> values;
  for (const auto& row : rows)
    for (double v : row) values.push_back(v);
  return edd::Dataset(values, rows.size(), rows.front().size());
}

inline edd::Dataset random_dataset(edd::Xoshiro256pp& rng, std::size_t n, std::size_t d,
                                   double lo = -5.0, double hi = 5.0) {
  std::vector<double> values(n * d);
  for (auto& v : values) v = lo + (hi - lo) * rng.next_unit();
  return edd::Dataset(std::move(values), n, d);
}

// Round-robin class ids, then a seeded shuffle, so every class has
// floor(n/L) or more members.
inline std::vector<int> balanced_labels(edd::Xoshiro256pp& rng, std::size_t n, int n_classes) {
  std::vector<int> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<int>(i % static_cast<std::size_t>(n_classes));
  for (std::size_t i = n - 1; i > 0; --i)
    std::swap(ids[i], ids[rng.next_below(i + 1)]);
  return ids;
}

inline double naive_entropy_bits(const std::vector<double>& probs) {
  double h = 0.0;
  for (double p : probs)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

// Direct evaluation of the GDV chain: per-dimension population z-scoring with
// the half factor, plain double loops for the class-distance means, then the
// 1/sqrt(D) combination.
inline double naive_gdv(const std::vector<std::vector<double>>& points,
                        const std::vector<int>& labels) {
  const std::size_t n = points.size();
  const std::size_t dims = points.front().size();
  const int n_classes = 1 + *std::max_element(labels.begin(), labels.end());

  std::vector<std::vector<double>> scaled(n, std::vector<double>(dims));
  for (std::size_t d = 0; d < dims; ++d) {
    double mu = 0.0;
    for (std::size_t i = 0; i < n; ++i) mu += points[i][d];
    mu /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) var += (points[i][d] - mu) * (points[i][d] - mu);
    var /= static_cast<double>(n);
    double sigma = std::sqrt(var);
    for (std::size_t i = 0; i < n; ++i) scaled[i][d] = 0.5 * (points[i][d] - mu) / sigma;
  }

  auto dist = [&](std::size_t a, std::size_t b) {
    double sum = 0.0;
    for (std::size_t d = 0; d < dims; ++d) {
      double diff = scaled[a][d] - scaled[b][d];
      sum += diff * diff;
    }
    return std::sqrt(sum);
  };

  double intra_term = 0.0;
  for (int c = 0; c < n_classes; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (labels[i] == c) members.push_back(i);
    double sum = 0.0;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) sum += dist(members[i], members[j]);
    intra_term += 2.0 * sum / (static_cast<double>(members.size()) *
                               static_cast<double>(members.size() - 1));
  }
  intra_term /= n_classes;

  double inter_term = 0.0;
  for (int a = 0; a < n_classes; ++a)
    for (int b = a + 1; b < n_classes; ++b) {
      double sum = 0.0;
      std::size_t na = 0, nb = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (labels[i] != a) continue;
        ++na;
        nb = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (labels[j] != b) continue;
          ++nb;
          sum += dist(i, j);
        }
      }
      inter_term += sum / (static_cast<double>(na) * static_cast<double>(nb));
    }
  inter_term *= 2.0 / (static_cast<double>(n_classes) * static_cast<double>(n_classes - 1));

  return (intra_term - inter_term) / std::sqrt(static_cast<double>(dims));
}

inline std::vector<double> ranks_with_ties(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    double mean_rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean_rank;
    i = j + 1;
  }
  return ranks;
}

inline double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
  auto rx = ranks_with_ties(xs);
  auto ry = ranks_with_ties(ys);
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  double cov = 0.0, vx = 0.0, vy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    cov += (rx[i] - mx) * (ry[i] - my);
    vx += (rx[i] - mx) * (rx[i] - mx);
    vy += (ry[i] - my) * (ry[i] - my);
  }
  return cov / std::sqrt(vx * vy);
}

class TempDir {
public:
  explicit TempDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("edd_test_" + tag + "_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
  std::filesystem::path path_;
};

inline std::string write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace testutil

#endif  // EDD_TEST_UTIL_HPP
