// Command-line front end: EDD/GDV metrics on CSV files, synthetic cluster
// generation, and the width-sweep / labeling-scenario experiments.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edd/dataset.hpp"
#include "edd/distances.hpp"
#include "edd/edd.hpp"
#include "edd/errors.hpp"
#include "edd/gdv.hpp"
#include "edd/harness.hpp"
#include "edd/numfmt.hpp"
#include "edd/parallel.hpp"
#include "edd/synth.hpp"

namespace {

using edd::Error;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(std::string(edd::trim(text.substr(start))));
      return parts;
    }
    parts.push_back(std::string(edd::trim(text.substr(start, pos - start))));
    start = pos + 1;
  }
}

double parse_num(const std::string& token, const std::string& what) {
  auto v = edd::parse_double(token);
  if (!v) throw Error("cannot parse " + what + ": '" + token + "'");
  return *v;
}

// "x,y;x,y;..." -> row-major centers plus the K x D shape.
void parse_centers(const std::string& text, std::vector<double>& centers,
                   std::size_t& n_clusters, std::size_t& n_dims) {
  centers.clear();
  auto points = split(text, ';');
  n_clusters = points.size();
  n_dims = 0;
  for (const auto& point : points) {
    auto coords = split(point, ',');
    if (n_dims == 0)
      n_dims = coords.size();
    else if (coords.size() != n_dims)
      throw Error("centers must all have the same dimension");
    for (const auto& c : coords) centers.push_back(parse_num(c, "center coordinate"));
  }
  if (n_clusters == 0 || n_dims == 0) throw Error("centers must be non-empty");
}

// Comma list, or lo:hi:steps for an inclusive linear spacing.
std::vector<double> parse_widths(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    auto parts = split(text, ':');
    if (parts.size() != 3) throw Error("width range must be lo:hi:steps");
    double lo = parse_num(parts[0], "width");
    double hi = parse_num(parts[1], "width");
    double steps_f = parse_num(parts[2], "width step count");
    auto steps = static_cast<std::size_t>(steps_f);
    if (steps < 2 || steps_f != static_cast<double>(steps))
      throw Error("width step count must be an integer >= 2");
    std::vector<double> widths(steps);
    for (std::size_t i = 0; i < steps; ++i)
      widths[i] = lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(steps - 1));
    return widths;
  }
  std::vector<double> widths;
  for (const auto& w : split(text, ',')) widths.push_back(parse_num(w, "width"));
  return widths;
}

// Comma list, or start:count for consecutive seeds.
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  if (text.find(':') != std::string::npos) {
    auto parts = split(text, ':');
    if (parts.size() != 2) throw Error("seed range must be start:count");
    auto start = static_cast<std::uint64_t>(parse_num(parts[0], "seed"));
    auto count = static_cast<std::uint64_t>(parse_num(parts[1], "seed count"));
    if (count == 0) throw Error("seed count must be positive");
    for (std::uint64_t i = 0; i < count; ++i) seeds.push_back(start + i);
    return seeds;
  }
  for (const auto& s : split(text, ','))
    seeds.push_back(static_cast<std::uint64_t>(parse_num(s, "seed")));
  return seeds;
}

edd::RangePolicy parse_range(const std::string& text) {
  if (text == "observed") return edd::RangePolicy::observed();
  auto parts = split(text, ':');
  if (parts.size() != 2) throw Error("range must be 'observed' or lo:hi");
  return edd::RangePolicy::fixed(parse_num(parts[0], "range lo"), parse_num(parts[1], "range hi"));
}

bool parse_on_off(const std::string& text, const std::string& what) {
  if (text == "on" || text == "true" || text == "1") return true;
  if (text == "off" || text == "false" || text == "0") return false;
  throw Error(what + " must be on or off, got '" + text + "'");
}

std::pair<int, int> parse_pair(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw Error("merged pair must be keep,from");
  return {static_cast<int>(parse_num(parts[0], "class id")),
          static_cast<int>(parse_num(parts[1], "class id"))};
}

// Flat key=value config file; '#' starts a comment line.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw edd::FileNotFound(path);
  std::map<std::string, std::string> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = edd::trim(line);
    if (text.empty() || text.front() == '#') continue;
    std::size_t eq = text.find('=');
    if (eq == std::string_view::npos)
      throw Error(path + ":" + std::to_string(line_no) + ": expected key=value");
    std::string key(edd::trim(text.substr(0, eq)));
    std::string value(edd::trim(text.substr(eq + 1)));
    entries[key] = value;
  }
  return entries;
}

const char* kSweepKeys[] = {"centers", "n",   "widths", "seeds",       "bins", "metric",
                            "zscore",  "range", "gdv",  "merged-pair", "out"};

// Applies a config file under the flags (flags win), then validates keys.
struct SweepOptions {
  std::string config_path;
  std::string centers_text;
  std::size_t points = 0;
  std::string widths_text;
  std::string seeds_text;
  std::size_t bins = 0;
  std::string metric_text;
  std::string zscore_text;
  std::string range_text;
  std::string gdv_text;
  std::string merged_text;
  std::string out_path;

  CLI::Option* centers_opt = nullptr;
  CLI::Option* points_opt = nullptr;
  CLI::Option* widths_opt = nullptr;
  CLI::Option* seeds_opt = nullptr;
  CLI::Option* bins_opt = nullptr;
  CLI::Option* metric_opt = nullptr;
  CLI::Option* zscore_opt = nullptr;
  CLI::Option* range_opt = nullptr;
  CLI::Option* gdv_opt = nullptr;
  CLI::Option* merged_opt = nullptr;
  CLI::Option* out_opt = nullptr;

  void add_to(CLI::App& cmd, bool labeling) {
    cmd.add_option("config", config_path, "key=value config file; flags override it");
    centers_opt = cmd.add_option("--centers", centers_text, "cluster centers as x,y;x,y;...");
    points_opt = cmd.add_option("--n", points, "points per cluster");
    widths_opt = cmd.add_option("--widths", widths_text, "comma list or lo:hi:steps");
    seeds_opt = cmd.add_option("--seeds", seeds_text, "comma list or start:count");
    bins_opt = cmd.add_option("--bins", bins, "histogram bin count");
    metric_opt = cmd.add_option("--metric", metric_text, "euclidean|manhattan|chebyshev");
    zscore_opt = cmd.add_option("--zscore", zscore_text, "on|off EDD preprocessing");
    range_opt = cmd.add_option("--range", range_text, "'observed' or lo:hi");
    if (!labeling)
      gdv_opt = cmd.add_option("--gdv", gdv_text, "on|off GDV on true labels");
    else
      merged_opt = cmd.add_option("--merged-pair", merged_text, "keep,from class ids");
    out_opt = cmd.add_option("--out", out_path, "output CSV path");
  }

  edd::SweepConfig resolve(edd::SweepConfig config, std::string& out, bool labeling) {
    std::map<std::string, std::string> file;
    if (!config_path.empty()) {
      file = read_config(config_path);
      for (const auto& [key, value] : file) {
        bool known = false;
        for (const char* k : kSweepKeys) known = known || key == k;
        if (!known) throw Error(config_path + ": unknown key '" + key + "'");
      }
    }
    auto pick = [&](CLI::Option* opt, const char* key, auto&& apply) {
      if (opt && opt->count() > 0)
        apply(true);
      else if (file.count(key))
        apply(false);
    };
    pick(centers_opt, "centers", [&](bool from_flag) {
      parse_centers(from_flag ? centers_text : file["centers"], config.centers,
                    config.n_clusters, config.n_dims);
    });
    pick(points_opt, "n", [&](bool from_flag) {
      config.points_per_cluster =
          from_flag ? points : static_cast<std::size_t>(parse_num(file["n"], "points per cluster"));
    });
    pick(widths_opt, "widths", [&](bool from_flag) {
      config.widths = parse_widths(from_flag ? widths_text : file["widths"]);
    });
    pick(seeds_opt, "seeds", [&](bool from_flag) {
      config.seeds = parse_seeds(from_flag ? seeds_text : file["seeds"]);
    });
    pick(bins_opt, "bins", [&](bool from_flag) {
      config.edd_config.bins =
          from_flag ? bins : static_cast<std::size_t>(parse_num(file["bins"], "bins"));
    });
    pick(metric_opt, "metric", [&](bool from_flag) {
      config.edd_config.metric =
          edd::metric_from_name(from_flag ? metric_text : file["metric"]);
    });
    pick(zscore_opt, "zscore", [&](bool from_flag) {
      config.edd_config.zscore =
          parse_on_off(from_flag ? zscore_text : file["zscore"], "zscore");
    });
    pick(range_opt, "range", [&](bool from_flag) {
      config.edd_config.range = parse_range(from_flag ? range_text : file["range"]);
    });
    if (!labeling)
      pick(gdv_opt, "gdv", [&](bool from_flag) {
        config.compute_gdv = parse_on_off(from_flag ? gdv_text : file["gdv"], "gdv");
      });
    else
      pick(merged_opt, "merged-pair", [&](bool from_flag) {
        config.merged_pair = parse_pair(from_flag ? merged_text : file["merged-pair"]);
      });
    if (out_opt && out_opt->count() > 0)
      out = out_path;
    else if (file.count("out"))
      out = file["out"];
    return config;
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

void emit_sweep(const std::string& out_path, const edd::SweepConfig& config,
                const std::vector<edd::SweepRow>& rows,
                const std::vector<edd::LabelScenario>* scenarios) {
  std::ostringstream csv;
  edd::write_sweep_csv(csv, rows);
  write_file(out_path, csv.str());
  std::ostringstream sidecar;
  edd::write_config_sidecar(sidecar, config, scenarios);
  write_file(out_path + ".cfg", sidecar.str());
  std::size_t invalid = 0;
  for (const auto& row : rows) {
    if (!row.valid()) {
      ++invalid;
      std::cerr << "invalid row (width " << edd::fmt_double(row.width) << "): " << row.error
                << "\n";
    }
  }
  std::cerr << "wrote " << out_path << " (" << rows.size() << " rows, " << invalid
            << " invalid) and " << out_path << ".cfg\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Cluster-structure metrics: label-free distance-distribution entropy (EDD) "
               "and label-based discrimination value (GDV)"};
  app.require_subcommand(1);
  app.fallthrough();  // --threads may appear after the subcommand

  int threads = 0;
  app.add_option("--threads", threads, "cap worker threads (default: all cores)")
      ->envname("EDD_THREADS");

  // --- compute ---------------------------------------------------------
  auto* compute = app.add_subcommand("compute", "EDD of a CSV dataset");
  std::string compute_file;
  std::size_t compute_bins = 100;
  std::string compute_metric = "euclidean";
  std::string compute_zscore = "on";
  std::string compute_range = "observed";
  std::string compute_label_col;
  std::string hist_out, save_distances, from_distances;
  compute->add_option("file", compute_file, "input CSV");
  compute->add_option("--bins", compute_bins, "histogram bin count")->capture_default_str();
  compute->add_option("--metric", compute_metric, "euclidean|manhattan|chebyshev")
      ->capture_default_str();
  compute->add_option("--zscore", compute_zscore, "on|off dimension-wise z-scoring")
      ->capture_default_str();
  compute->add_option("--range", compute_range, "'observed' or lo:hi fixed histogram range")
      ->capture_default_str();
  compute->add_option("--label-col", compute_label_col,
                      "column to exclude from the features (name or 0-based index)");
  compute->add_option("--hist-out", hist_out, "write the histogram as CSV here");
  compute->add_option("--save-distances", save_distances,
                      "cache the condensed distances to this binary file");
  compute->add_option("--from-distances", from_distances,
                      "compute from a cached distance file instead of a CSV");

  // --- gdv -------------------------------------------------------------
  auto* gdv_cmd = app.add_subcommand("gdv", "GDV of a labeled CSV dataset");
  std::string gdv_file, gdv_label_col, matrix_out;
  gdv_cmd->add_option("file", gdv_file, "input CSV")->required();
  gdv_cmd->add_option("--label-col", gdv_label_col, "label column (name or 0-based index)")
      ->required();
  gdv_cmd->add_option("--matrix-out", matrix_out, "write the class-distance means CSV here");

  // --- synth -----------------------------------------------------------
  auto* synth = app.add_subcommand("synth", "generate a Gaussian cluster mixture CSV");
  std::string synth_out, synth_centers = "-2,-2;-2,2;2,-2;2,2";
  double synth_width = 0.5;
  std::size_t synth_n = 200;
  std::uint64_t synth_seed = 0;
  synth->add_option("--out", synth_out, "output CSV path")->required();
  synth->add_option("--centers", synth_centers, "cluster centers as x,y;x,y;...")
      ->capture_default_str();
  synth->add_option("--width", synth_width, "cluster standard deviation")->capture_default_str();
  synth->add_option("--n", synth_n, "points per cluster")->capture_default_str();
  synth->add_option("--seed", synth_seed, "RNG seed")->capture_default_str();

  // --- sweep / labeling --------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "width sweep over a cluster geometry");
  SweepOptions sweep_opts;
  sweep_opts.add_to(*sweep, /*labeling=*/false);

  auto* labeling = app.add_subcommand("labeling", "labeling-scenario sweep (correct/merged/random)");
  SweepOptions labeling_opts;
  labeling_opts.add_to(*labeling, /*labeling=*/true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (threads > 0) edd::set_max_threads(threads);

    if (compute->parsed()) {
      edd::EddConfig config;
      config.bins = compute_bins;
      config.metric = edd::metric_from_name(compute_metric);
      config.zscore = parse_on_off(compute_zscore, "zscore");
      config.range = parse_range(compute_range);
      edd::EddResult result;
      if (!from_distances.empty()) {
        if (!compute_file.empty())
          throw Error("--from-distances replaces the CSV input; do not pass both");
        std::cerr << "using cached distances; metric/zscore flags describe the cache's "
                     "provenance, not work done here\n";
        result = edd::edd_from_distances(edd::load_condensed(from_distances), config);
      } else {
        if (compute_file.empty()) throw Error("compute needs a CSV file or --from-distances");
        std::optional<std::string> label_col;
        if (!compute_label_col.empty()) label_col = compute_label_col;
        auto loaded = edd::load_csv(compute_file, label_col);
        if (save_distances.empty()) {
          result = edd::compute_edd(loaded.dataset, config);
        } else {
          std::optional<edd::Dataset> scaled;
          if (config.zscore) scaled.emplace(edd::zscore(loaded.dataset, 1.0).first);
          const edd::Dataset& input = scaled ? *scaled : loaded.dataset;
          auto distances = edd::pairwise_distances(input, config.metric);
          edd::save_condensed(save_distances, distances);
          std::cerr << "cached distances to " << save_distances << "\n";
          result = edd::edd_from_distances(distances, config);
          result.n_dims = input.n_dims();
        }
      }
      if (!hist_out.empty()) {
        std::ostringstream csv;
        edd::write_histogram_csv(csv, result.histogram);
        write_file(hist_out, csv.str());
        std::cerr << "wrote histogram to " << hist_out << "\n";
      }
      std::cout << edd::to_record(result) << "\n";
      std::cerr << "EDD " << edd::fmt_double(result.edd) << " over "
                << result.n_points << " points\n";
      return 0;
    }

    if (gdv_cmd->parsed()) {
      auto loaded = edd::load_csv(gdv_file, gdv_label_col);
      if (!loaded.labels) throw Error("gdv needs a label column");
      edd::GdvResult result = edd::compute_gdv(loaded.dataset, *loaded.labels);
      if (!matrix_out.empty()) {
        std::ostringstream csv;
        edd::write_means_csv(csv, result);
        write_file(matrix_out, csv.str());
        std::cerr << "wrote class-distance means to " << matrix_out << "\n";
      }
      std::cout << edd::to_record(result) << "\n";
      std::cerr << "GDV " << edd::fmt_double(result.gdv) << " over " << result.n_classes
                << " classes\n";
      return 0;
    }

    if (synth->parsed()) {
      edd::ClusterSpec spec;
      parse_centers(synth_centers, spec.centers, spec.n_clusters, spec.n_dims);
      spec.width = synth_width;
      spec.points_per_cluster = synth_n;
      spec.seed = synth_seed;
      auto [data, labels] = edd::generate(spec);
      edd::save_csv(synth_out, data, &labels);
      std::cerr << "wrote " << data.n_points() << " points (" << spec.n_clusters
                << " clusters, width " << edd::fmt_double(spec.width) << ") to " << synth_out
                << "\n";
      return 0;
    }

    if (sweep->parsed()) {
      std::string out = "sweep.csv";
      edd::SweepConfig config =
          sweep_opts.resolve(edd::SweepConfig::four_square_defaults(), out, false);
      emit_sweep(out, config, edd::width_sweep(config), nullptr);
      return 0;
    }

    if (labeling->parsed()) {
      std::string out = "labeling.csv";
      edd::SweepConfig config =
          labeling_opts.resolve(edd::SweepConfig::three_triangle_defaults(), out, true);
      std::vector<edd::LabelScenario> scenarios = {
          edd::LabelScenario::correct(),
          edd::LabelScenario::merged(config.merged_pair.first, config.merged_pair.second),
          edd::LabelScenario::random()};
      emit_sweep(out, config, edd::labeling_sweep(config, scenarios), &scenarios);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
