#include "edd/gdv.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "edd/distances.hpp"
#include "edd/errors.hpp"
#include "edd/numfmt.hpp"

namespace edd {

namespace {

std::vector<std::size_t> class_members(const Labels& labels, int cls) {
  if (cls < 0 || cls >= labels.n_classes()) throw UnknownClass(cls);
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels.at(i) == cls) members.push_back(i);
  return members;
}

double euclidean(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

}  // namespace

double intra_class_mean(const Dataset& scaled, const Labels& labels, int cls) {
  auto members = class_members(labels, cls);
  const std::size_t n = members.size();
  if (n < 2) throw SingletonClass(cls, n);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      sum += euclidean(scaled.row(members[i]), scaled.row(members[j]));
  return sum / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

double inter_class_mean(const Dataset& scaled, const Labels& labels, int cls_a, int cls_b) {
  if (cls_a == cls_b) throw SameClass(cls_a);
  auto a = class_members(labels, cls_a);
  auto b = class_members(labels, cls_b);
  if (a.empty()) throw SingletonClass(cls_a, 0);
  if (b.empty()) throw SingletonClass(cls_b, 0);
  double sum = 0.0;
  for (std::size_t i : a)
    for (std::size_t j : b) sum += euclidean(scaled.row(i), scaled.row(j));
  return sum / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

GdvResult compute_gdv(const Dataset& raw, const Labels& labels) {
  if (labels.size() != raw.n_points())
    throw Error("labels length does not match dataset");
  const std::size_t L = static_cast<std::size_t>(labels.n_classes());
  if (L < 2) throw TooFewClasses(L);
  const auto sizes = labels.class_sizes();
  for (std::size_t l = 0; l < L; ++l)
    if (sizes[l] < 2) throw SingletonClass(static_cast<int>(l), sizes[l]);

  // Internal half-factor z-scoring per contract; constant dimensions are an
  // error because they have no defined standard score.
  Dataset scaled = zscore(raw, 0.5).first;

  // One parallel distance pass, then a sequential accumulation in condensed
  // order: the result is independent of the worker count.
  CondensedDistances distances = pairwise_distances(scaled, Metric::euclidean);
  const std::size_t n = scaled.n_points();

  std::vector<double> intra_sum(L, 0.0);
  std::vector<double> inter_sum(L * L, 0.0);
  std::size_t k = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t li = static_cast<std::size_t>(labels.at(i));
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      const std::size_t lj = static_cast<std::size_t>(labels.at(j));
      if (li == lj)
        intra_sum[li] += distances.values[k];
      else
        inter_sum[std::min(li, lj) * L + std::max(li, lj)] += distances.values[k];
    }
  }

  GdvResult result;
  result.n_dims = scaled.n_dims();
  result.n_classes = L;
  result.n_points = n;
  result.mean_intra.resize(L);
  result.mean_inter.assign(L * L, 0.0);

  for (std::size_t l = 0; l < L; ++l) {
    double pairs = static_cast<double>(sizes[l]) * static_cast<double>(sizes[l] - 1) / 2.0;
    result.mean_intra[l] = intra_sum[l] / pairs;
  }
  for (std::size_t l = 0; l < L; ++l)
    for (std::size_t m = l + 1; m < L; ++m) {
      double mean = inter_sum[l * L + m] /
                    (static_cast<double>(sizes[l]) * static_cast<double>(sizes[m]));
      result.mean_inter[l * L + m] = mean;
      result.mean_inter[m * L + l] = mean;
    }

  // Means are summed in value order: renaming classes only permutes them, so
  // a canonical order keeps the gdv bit-identical under relabeling.
  std::vector<double> intra_sorted = result.mean_intra;
  std::sort(intra_sorted.begin(), intra_sorted.end());
  double intra_term = 0.0;
  for (double v : intra_sorted) intra_term += v;
  intra_term /= static_cast<double>(L);

  std::vector<double> inter_sorted;
  inter_sorted.reserve(L * (L - 1) / 2);
  for (std::size_t l = 0; l < L; ++l)
    for (std::size_t m = l + 1; m < L; ++m) inter_sorted.push_back(result.inter(l, m));
  std::sort(inter_sorted.begin(), inter_sorted.end());
  double inter_term = 0.0;
  for (double v : inter_sorted) inter_term += v;
  inter_term *= 2.0 / (static_cast<double>(L) * static_cast<double>(L - 1));

  result.gdv = (intra_term - inter_term) / std::sqrt(static_cast<double>(result.n_dims));
  return result;
}

std::string to_record(const GdvResult& result) {
  std::string rec;
  rec += "gdv=" + fmt_double(result.gdv);
  rec += " n_classes=" + std::to_string(result.n_classes);
  rec += " n_dims=" + std::to_string(result.n_dims);
  rec += " n_points=" + std::to_string(result.n_points);
  rec += " metric=euclidean zscore_factor=0.5";
  return rec;
}

void write_means_csv(std::ostream& out, const GdvResult& result) {
  const std::size_t L = result.n_classes;
  for (std::size_t l = 0; l < L; ++l) {
    for (std::size_t m = 0; m < L; ++m) {
      if (m) out << ',';
      out << fmt_double(l == m ? result.mean_intra[l] : result.inter(l, m));
    }
    out << '\n';
  }
}

}  // namespace edd
