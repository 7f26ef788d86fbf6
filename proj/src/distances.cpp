#include "edd/distances.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>

#include "edd/errors.hpp"
#include "edd/parallel.hpp"

namespace edd {

std::string_view metric_name(Metric m) {
  switch (m) {
    case Metric::euclidean: return "euclidean";
    case Metric::manhattan: return "manhattan";
    case Metric::chebyshev: return "chebyshev";
  }
  return "euclidean";
}

Metric metric_from_name(std::string_view name) {
  if (name == "euclidean") return Metric::euclidean;
  if (name == "manhattan") return Metric::manhattan;
  if (name == "chebyshev") return Metric::chebyshev;
  throw Error("unknown metric '" + std::string(name) +
              "' (expected euclidean, manhattan or chebyshev)");
}

namespace {

struct Euclidean {
  static double eval(const double* a, const double* b, std::size_t d) {
    double sum = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      double diff = a[k] - b[k];
      sum += diff * diff;
    }
    return std::sqrt(sum);
  }
};

struct Manhattan {
  static double eval(const double* a, const double* b, std::size_t d) {
    double sum = 0.0;
    for (std::size_t k = 0; k < d; ++k) sum += std::abs(a[k] - b[k]);
    return sum;
  }
};

struct Chebyshev {
  static double eval(const double* a, const double* b, std::size_t d) {
    double best = 0.0;
    for (std::size_t k = 0; k < d; ++k) best = std::max(best, std::abs(a[k] - b[k]));
    return best;
  }
};

// Start of row i's block in condensed order.
std::size_t row_offset(std::size_t n, std::size_t i) { return i * (2 * n - i - 1) / 2; }

template <class M>
void fill_rows(const Dataset& data, std::size_t row_lo, std::size_t row_hi, double* out) {
  const std::size_t n = data.n_points();
  const std::size_t d = data.n_dims();
  const double* base = data.values().data();
  for (std::size_t i = row_lo; i < row_hi; ++i) {
    const double* xi = base + i * d;
    double* dst = out + row_offset(n, i);
    for (std::size_t j = i + 1; j < n; ++j)
      dst[j - i - 1] = M::eval(xi, base + j * d, d);
  }
}

template <class M>
void compute_all(const Dataset& data, std::vector<double>& out) {
  const std::size_t n = data.n_points();
  const std::size_t total = CondensedDistances::size_for(n);
  const int workers = plan_workers(total, 1 << 15);
  if (workers == 1) {
    fill_rows<M>(data, 0, n - 1, out.data());
    return;
  }
  // Split rows so each worker gets roughly equal pair counts; row i holds
  // n-1-i pairs, so equal row ranges would badly skew the load.
  std::vector<std::size_t> bounds(static_cast<std::size_t>(workers) + 1, 0);
  bounds[static_cast<std::size_t>(workers)] = n - 1;
  for (int w = 1; w < workers; ++w) {
    std::size_t target = total / static_cast<std::size_t>(workers) * static_cast<std::size_t>(w);
    std::size_t lo = bounds[static_cast<std::size_t>(w - 1)], hi = n - 1;
    while (lo < hi) {  // first row with offset >= target
      std::size_t mid = lo + (hi - lo) / 2;
      if (row_offset(n, mid) < target)
        lo = mid + 1;
      else
        hi = mid;
    }
    bounds[static_cast<std::size_t>(w)] = lo;
  }
  run_workers(workers, [&](int w) {
    fill_rows<M>(data, bounds[static_cast<std::size_t>(w)],
                 bounds[static_cast<std::size_t>(w) + 1], out.data());
  });
}

}  // namespace

double distance(std::span<const double> a, std::span<const double> b, Metric metric) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  switch (metric) {
    case Metric::euclidean: return Euclidean::eval(a.data(), b.data(), a.size());
    case Metric::manhattan: return Manhattan::eval(a.data(), b.data(), a.size());
    case Metric::chebyshev: return Chebyshev::eval(a.data(), b.data(), a.size());
  }
  return 0.0;
}

CondensedDistances pairwise_distances(const Dataset& data, Metric metric) {
  const std::size_t n = data.n_points();
  if (n < 2) throw TooFewPoints(n, 2);
  CondensedDistances result;
  result.n_points = n;
  result.values.resize(CondensedDistances::size_for(n));
  switch (metric) {
    case Metric::euclidean: compute_all<Euclidean>(data, result.values); break;
    case Metric::manhattan: compute_all<Manhattan>(data, result.values); break;
    case Metric::chebyshev: compute_all<Chebyshev>(data, result.values); break;
  }
  return result;
}

namespace {

void put_u64le(std::ostream& out, std::uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(buf, 8);
}

std::uint64_t get_u64le(std::istream& in) {
  unsigned char buf[8];
  in.read(reinterpret_cast<char*>(buf), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  return v;
}

}  // namespace

void save_condensed(const std::string& path, const CondensedDistances& distances) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  put_u64le(out, distances.n_points);
  for (double v : distances.values) put_u64le(out, std::bit_cast<std::uint64_t>(v));
  if (!out) throw Error("write failed: " + path);
}

CondensedDistances load_condensed(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound(path);
  std::uint64_t n = get_u64le(in);
  if (!in || n < 2) throw Error("corrupt distance cache (bad point count): " + path);
  CondensedDistances result;
  result.n_points = static_cast<std::size_t>(n);
  std::size_t count = CondensedDistances::size_for(result.n_points);
  result.values.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    double v = std::bit_cast<double>(get_u64le(in));
    if (!in) throw Error("corrupt distance cache (truncated): " + path);
    if (!std::isfinite(v) || v < 0.0)
      throw Error("corrupt distance cache (invalid distance): " + path);
    result.values.push_back(v);
  }
  if (in.get() != std::ifstream::traits_type::eof())
    throw Error("corrupt distance cache (trailing bytes): " + path);
  return result;
}

}  // namespace edd
