#ifndef EDD_GDV_HPP
#define EDD_GDV_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "edd/dataset.hpp"

namespace edd {

/// Generalized discrimination value and the class-distance means it combines.
/// gdv = (1/sqrt(D)) * [ mean of intra-class means
///                       - (2 / (L(L-1))) * sum of inter-class means over l < m ].
struct GdvResult {
  double gdv = 0.0;
  std::vector<double> mean_intra;  // length L
  std::vector<double> mean_inter;  // L x L row-major, symmetric, zero diagonal
  std::size_t n_dims = 0;
  std::size_t n_classes = 0;
  std::size_t n_points = 0;

  double inter(std::size_t l, std::size_t m) const { return mean_inter[l * n_classes + m]; }
};

/// Mean Euclidean distance over unordered point pairs within one class.
/// Expects data that has already been z-scored with factor 1/2. Throws
/// UnknownClass, SingletonClass.
double intra_class_mean(const Dataset& scaled, const Labels& labels, int cls);

/// Mean Euclidean distance over all cross pairs of two distinct classes.
/// Symmetric in its class arguments. Throws UnknownClass, SameClass,
/// SingletonClass (empty class).
double inter_class_mean(const Dataset& scaled, const Labels& labels, int cls_a, int cls_b);

/// Computes the GDV from raw data: applies the internal factor-1/2 z-scoring,
/// then combines mean intra- and inter-class distances. Passing pre-z-scored
/// data would double-transform. Throws TooFewClasses, SingletonClass,
/// ZeroVariance, TooFewPoints.
GdvResult compute_gdv(const Dataset& raw, const Labels& labels);

/// Single-line key=value record.
std::string to_record(const GdvResult& result);

/// L x L matrix CSV of class-distance means; the diagonal holds the
/// intra-class means.
void write_means_csv(std::ostream& out, const GdvResult& result);

}  // namespace edd

#endif  // EDD_GDV_HPP
