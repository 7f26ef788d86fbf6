#ifndef EDD_ERRORS_HPP
#define EDD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edd {

/// Base class for every error this library reports.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// --- file ingestion ---------------------------------------------------------

class FileNotFound : public Error {
public:
  explicit FileNotFound(std::string path)
      : Error("file not found: " + path), path(std::move(path)) {}
  std::string path;
};

class EmptyFile : public Error {
public:
  explicit EmptyFile(const std::string& detail)
      : Error("empty input: " + detail) {}
};

/// Row indices in file errors are 1-based physical line numbers.
class RaggedRows : public Error {
public:
  RaggedRows(std::size_t row, std::size_t expected, std::size_t got)
      : Error("ragged row " + std::to_string(row) + ": expected " +
              std::to_string(expected) + " columns, got " + std::to_string(got)),
        row(row), expected(expected), got(got) {}
  std::size_t row;
  std::size_t expected;
  std::size_t got;
};

class NonNumericCell : public Error {
public:
  NonNumericCell(std::size_t row, std::size_t col, const std::string& cell)
      : Error("non-numeric cell at row " + std::to_string(row) + ", column " +
              std::to_string(col) + ": '" + cell + "'"),
        row(row), col(col) {}
  std::size_t row;
  std::size_t col;
};

// --- dataset shape and preprocessing ----------------------------------------

class TooFewPoints : public Error {
public:
  explicit TooFewPoints(std::size_t n_points, std::size_t required)
      : Error("too few points: have " + std::to_string(n_points) +
              ", need at least " + std::to_string(required)),
        n_points(n_points) {}
  std::size_t n_points;
};

/// Dimension indices are 0-based matrix column indices.
class ZeroVariance : public Error {
public:
  explicit ZeroVariance(std::size_t dim)
      : Error("zero variance in dimension " + std::to_string(dim)), dim(dim) {}
  std::size_t dim;
};

class AllDimensionsConstant : public Error {
public:
  AllDimensionsConstant() : Error("all dimensions are constant; nothing left after drop") {}
};

class DimensionMismatch : public Error {
public:
  DimensionMismatch(std::size_t a, std::size_t b)
      : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)),
        a(a), b(b) {}
  std::size_t a;
  std::size_t b;
};

// --- histogram --------------------------------------------------------------

class EmptyDistances : public Error {
public:
  EmptyDistances() : Error("no distances to histogram") {}
};

class BadRange : public Error {
public:
  BadRange(double lo, double hi)
      : Error("bad fixed histogram range: lo=" + std::to_string(lo) +
              " must be < hi=" + std::to_string(hi)),
        lo(lo), hi(hi) {}
  double lo;
  double hi;
};

// --- labels and classes -----------------------------------------------------

class UnknownClass : public Error {
public:
  explicit UnknownClass(int cls)
      : Error("unknown class id " + std::to_string(cls)), cls(cls) {}
  int cls;
};

class SameClass : public Error {
public:
  explicit SameClass(int cls)
      : Error("class pair must be distinct, got class " + std::to_string(cls) + " twice"),
        cls(cls) {}
  int cls;
};

class SingletonClass : public Error {
public:
  SingletonClass(int cls, std::size_t size)
      : Error("class " + std::to_string(cls) + " has " + std::to_string(size) +
              " point(s); at least 2 required"),
        cls(cls), size(size) {}
  int cls;
  std::size_t size;
};

class TooFewClasses : public Error {
public:
  explicit TooFewClasses(std::size_t n_classes)
      : Error("need at least 2 classes, got " + std::to_string(n_classes)),
        n_classes(n_classes) {}
  std::size_t n_classes;
};

}  // namespace edd

#endif  // EDD_ERRORS_HPP
