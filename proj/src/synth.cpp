#include "edd/synth.hpp"

#include <cmath>

#include "edd/errors.hpp"
#include "edd/rng.hpp"

namespace edd {

void ClusterSpec::validate() const {
  if (n_clusters < 1) throw Error("cluster spec needs at least one center");
  if (n_dims < 1) throw Error("cluster spec needs at least one dimension");
  if (centers.size() != n_clusters * n_dims)
    throw Error("cluster centers do not match the declared KxD shape");
  for (double c : centers)
    if (!std::isfinite(c)) throw Error("cluster centers must be finite");
  if (!(width >= 0.0)) throw Error("cluster width must be >= 0");
  if (points_per_cluster < 1) throw Error("points_per_cluster must be >= 1");
}

LabelScenario LabelScenario::merged(int keep, int from) {
  if (keep == from) throw SameClass(keep);
  LabelScenario s;
  s.kind = Kind::merged;
  s.merge_keep = keep;
  s.merge_from = from;
  return s;
}

LabelScenario LabelScenario::random() {
  LabelScenario s;
  s.kind = Kind::random;
  return s;
}

std::string_view LabelScenario::name() const {
  switch (kind) {
    case Kind::correct: return "correct";
    case Kind::merged: return "merged";
    case Kind::random: return "random";
  }
  return "correct";
}

std::pair<Dataset, Labels> generate(const ClusterSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n_clusters * spec.points_per_cluster;
  std::vector<double> values(n * spec.n_dims);
  std::vector<int> labels(n);

  for (std::size_t k = 0; k < spec.n_clusters; ++k) {
    GaussianSampler gauss(substream_seed(spec.seed, k));
    const double* center = spec.centers.data() + k * spec.n_dims;
    double* out = values.data() + k * spec.points_per_cluster * spec.n_dims;
    for (std::size_t p = 0; p < spec.points_per_cluster; ++p)
      for (std::size_t d = 0; d < spec.n_dims; ++d)
        *out++ = center[d] + spec.width * gauss.next();
    for (std::size_t p = 0; p < spec.points_per_cluster; ++p)
      labels[k * spec.points_per_cluster + p] = static_cast<int>(k);
  }

  return {Dataset(std::move(values), n, spec.n_dims),
          Labels(std::move(labels), static_cast<int>(spec.n_clusters))};
}

Labels apply_scenario(const Labels& labels, const LabelScenario& scenario, std::uint64_t seed) {
  switch (scenario.kind) {
    case LabelScenario::Kind::correct:
      return labels;

    case LabelScenario::Kind::merged: {
      const int L = labels.n_classes();
      const int keep = scenario.merge_keep;
      const int from = scenario.merge_from;
      if (keep == from) throw SameClass(keep);
      if (keep < 0 || keep >= L) throw UnknownClass(keep);
      if (from < 0 || from >= L) throw UnknownClass(from);
      std::vector<int> out(labels.size());
      for (std::size_t i = 0; i < labels.size(); ++i) {
        int id = labels.at(i);
        if (id == from) id = keep;
        if (id > from) --id;  // compact: ids stay dense in [0, L-1)
        out[i] = id;
      }
      return Labels(std::move(out), L - 1);
    }

    case LabelScenario::Kind::random: {
      const auto L = static_cast<std::uint64_t>(labels.n_classes());
      Xoshiro256pp rng(seed);
      std::vector<int> out(labels.size());
      for (auto& id : out) id = static_cast<int>(rng.next_below(L));
      return Labels(std::move(out), labels.n_classes());
    }
  }
  return labels;
}

}  // namespace edd
