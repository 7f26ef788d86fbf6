#include "edd/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "edd/errors.hpp"
#include "edd/numfmt.hpp"

namespace edd {

Dataset::Dataset(std::vector<double> values, std::size_t n_points, std::size_t n_dims)
    : values_(std::move(values)), n_points_(n_points), n_dims_(n_dims) {
  if (n_points_ < 1 || n_dims_ < 1)
    throw Error("dataset shape must be at least 1x1, got " + std::to_string(n_points_) +
                "x" + std::to_string(n_dims_));
  if (values_.size() != n_points_ * n_dims_)
    throw Error("dataset value count " + std::to_string(values_.size()) +
                " does not match shape " + std::to_string(n_points_) + "x" +
                std::to_string(n_dims_));
  for (double v : values_)
    if (!std::isfinite(v)) throw Error("dataset contains a non-finite value");
}

Labels::Labels(std::vector<int> assignments, int n_classes)
    : assignments_(std::move(assignments)), n_classes_(n_classes) {
  if (assignments_.empty()) throw Error("labels must cover at least one point");
  if (n_classes_ < 1) throw Error("labels need at least one class");
  for (int id : assignments_)
    if (id < 0 || id >= n_classes_) throw UnknownClass(id);
}

Labels Labels::intern(const std::vector<std::string>& raw) {
  std::unordered_map<std::string, int> ids;
  std::vector<int> assignments;
  assignments.reserve(raw.size());
  for (const auto& value : raw) {
    auto [it, inserted] = ids.emplace(value, static_cast<int>(ids.size()));
    assignments.push_back(it->second);
  }
  return Labels(std::move(assignments), static_cast<int>(ids.size()));
}

std::vector<std::size_t> Labels::class_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(n_classes_), 0);
  for (int id : assignments_) ++sizes[static_cast<std::size_t>(id)];
  return sizes;
}

std::pair<Dataset, ZScoreParams> zscore(const Dataset& data, double factor,
                                        ConstantDimPolicy policy) {
  const std::size_t n = data.n_points();
  const std::size_t d = data.n_dims();
  if (n < 2) throw TooFewPoints(n, 2);
  if (!(factor > 0.0)) throw Error("zscore factor must be positive");

  ZScoreParams params;
  params.factor = factor;
  std::vector<std::size_t> kept;
  kept.reserve(d);

  std::vector<double> means(d), stds(d);
  for (std::size_t j = 0; j < d; ++j) {
    // Constant dimensions are detected structurally (min == max) so that a
    // non-representable mean cannot leave a spurious tiny variance behind.
    double lo = data.at(0, j), hi = data.at(0, j), sum = data.at(0, j);
    for (std::size_t i = 1; i < n; ++i) {
      double v = data.at(i, j);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      sum += v;
    }
    if (lo == hi) {
      if (policy == ConstantDimPolicy::error) throw ZeroVariance(j);
      params.dropped_dims.push_back(j);
      continue;
    }
    double mu = sum / static_cast<double>(n);
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double dev = data.at(i, j) - mu;
      sq += dev * dev;
    }
    means[j] = mu;
    stds[j] = std::sqrt(sq / static_cast<double>(n));
    kept.push_back(j);
  }

  if (kept.empty()) throw AllDimensionsConstant();

  std::vector<double> out(n * kept.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < kept.size(); ++k) {
      std::size_t j = kept[k];
      out[i * kept.size() + k] = factor * (data.at(i, j) - means[j]) / stds[j];
    }

  params.means.reserve(kept.size());
  params.stds.reserve(kept.size());
  for (std::size_t j : kept) {
    params.means.push_back(means[j]);
    params.stds.push_back(stds[j]);
  }
  return {Dataset(std::move(out), n, kept.size()), std::move(params)};
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

bool is_finite_number(std::string_view token) {
  auto v = parse_double(token);
  return v.has_value() && std::isfinite(*v);
}

}  // namespace

LoadResult load_csv(const std::string& path, const std::optional<std::string>& label_column) {
  std::ifstream in(path);
  if (!in) throw FileNotFound(path);

  struct Row {
    std::size_t line_no;  // 1-based physical line
    std::vector<std::string_view> fields;
  };
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  std::vector<Row> rows;
  {
    std::size_t line_no = 0, start = 0;
    std::string_view text(content);
    while (start <= text.size()) {
      std::size_t nl = text.find('\n', start);
      std::string_view line = text.substr(start, nl == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : nl - start);
      ++line_no;
      if (!trim(line).empty()) rows.push_back({line_no, split_fields(line)});
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
  }
  if (rows.empty()) throw EmptyFile(path);

  const std::size_t n_cols = rows.front().fields.size();

  // Header iff any first-row cell is not a finite number.
  bool has_header = std::any_of(rows.front().fields.begin(), rows.front().fields.end(),
                                [](std::string_view f) { return !is_finite_number(f); });
  std::vector<std::string> header;
  if (has_header)
    for (auto f : rows.front().fields) header.emplace_back(f);

  // Resolve the label column: header name first, then integer index.
  std::optional<std::size_t> label_idx;
  if (label_column) {
    if (has_header) {
      auto it = std::find(header.begin(), header.end(), *label_column);
      if (it != header.end())
        label_idx = static_cast<std::size_t>(it - header.begin());
    }
    if (!label_idx) {
      auto idx = parse_double(*label_column);
      if (idx && *idx >= 0 && *idx == std::floor(*idx) &&
          static_cast<std::size_t>(*idx) < n_cols)
        label_idx = static_cast<std::size_t>(*idx);
      else
        throw Error("label column '" + *label_column + "' not found");
    }
  }

  const std::size_t first_data = has_header ? 1 : 0;
  if (rows.size() == first_data) throw EmptyFile(path + " (no data rows)");
  const std::size_t n_points = rows.size() - first_data;
  const std::size_t n_dims = n_cols - (label_idx ? 1 : 0);
  if (n_dims == 0) throw EmptyFile(path + " (no numeric columns)");

  std::vector<double> values;
  values.reserve(n_points * n_dims);
  std::vector<std::string> raw_labels;
  if (label_idx) raw_labels.reserve(n_points);

  for (std::size_t r = first_data; r < rows.size(); ++r) {
    const Row& row = rows[r];
    if (row.fields.size() != n_cols)
      throw RaggedRows(row.line_no, n_cols, row.fields.size());
    for (std::size_t c = 0; c < n_cols; ++c) {
      if (label_idx && c == *label_idx) {
        raw_labels.emplace_back(row.fields[c]);
        continue;
      }
      auto v = parse_double(row.fields[c]);
      if (!v || !std::isfinite(*v))
        throw NonNumericCell(row.line_no, c + 1, std::string(row.fields[c]));
      values.push_back(*v);
    }
  }

  LoadResult result{Dataset(std::move(values), n_points, n_dims), std::nullopt};
  if (label_idx) result.labels = Labels::intern(raw_labels);
  return result;
}

void save_csv(const std::string& path, const Dataset& data, const Labels* labels) {
  if (labels && labels->size() != data.n_points())
    throw Error("labels length does not match dataset");
  std::ofstream out(path);
  if (!out) throw Error("cannot open for writing: " + path);

  std::ostringstream line;
  for (std::size_t j = 0; j < data.n_dims(); ++j) {
    if (j) line << ',';
    line << 'x' << j;
  }
  if (labels) line << ",label";
  out << line.str() << '\n';

  for (std::size_t i = 0; i < data.n_points(); ++i) {
    for (std::size_t j = 0; j < data.n_dims(); ++j) {
      if (j) out << ',';
      out << fmt_double(data.at(i, j));
    }
    if (labels) out << ',' << labels->at(i);
    out << '\n';
  }
  if (!out) throw Error("write failed: " + path);
}

}  // namespace edd
