#include "thfcm/fcm.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "thfcm/errors.hpp"

namespace thfcm {

namespace {

// Membership weight u^m; every cost and center computation goes through this
// so the two stay consistent.
double fuzz_pow(double u, double m) {
  if (m == 2.0) return u * u;
  return std::pow(u, m);
}

void check_finite(std::span<const double> values, const char* what) {
  for (const double v : values) {
    if (!std::isfinite(v)) {
      throw NonFiniteInput(std::string(what) + " contains a non-finite value");
    }
  }
}

void check_config(const FcmConfig& config) {
  if (config.cluster_count < 1) {
    throw InvalidConfig("cluster count must be at least 1, got " + std::to_string(config.cluster_count));
  }
  if (!(config.fuzzifier > 1.0)) {
    throw InvalidConfig("fuzzifier must be greater than 1");
  }
  if (!(config.tolerance > 0.0)) {
    throw InvalidConfig("tolerance must be positive");
  }
  if (config.max_iterations < 1) {
    throw InvalidConfig("max iterations must be at least 1, got " + std::to_string(config.max_iterations));
  }
}

// Evenly spaced quantile picks from a sorted vector: element at rank
// floor((i + 0.5) * n / c) for each cluster i.
std::vector<double> quantile_picks(const std::vector<double>& sorted, int clusters) {
  std::vector<double> centers(static_cast<std::size_t>(clusters));
  const auto n = sorted.size();
  for (int i = 0; i < clusters; ++i) {
    auto idx = static_cast<std::size_t>((i + 0.5) * static_cast<double>(n) / clusters);
    idx = std::min(idx, n - 1);
    centers[static_cast<std::size_t>(i)] = sorted[idx];
  }
  return centers;
}

bool has_duplicates(const std::vector<double>& sorted_values) {
  return std::adjacent_find(sorted_values.begin(), sorted_values.end()) != sorted_values.end();
}

}  // namespace

std::vector<double> initial_centers(std::span<const double> data, const FcmConfig& config) {
  check_config(config);
  check_finite(data, "data");
  const auto n = data.size();
  const auto c = static_cast<std::size_t>(config.cluster_count);
  if (n < c) {
    throw InsufficientData("need at least " + std::to_string(c) + " data points, got " + std::to_string(n));
  }

  if (config.init_policy == InitPolicy::SeededRandom) {
    std::vector<std::size_t> indices(n);
    for (std::size_t j = 0; j < n; ++j) indices[j] = j;
    std::mt19937_64 rng(config.seed);
    std::vector<double> centers(c);
    for (std::size_t i = 0; i < c; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(indices[i], indices[pick(rng)]);
      centers[i] = data[indices[i]];
    }
    return centers;
  }

  std::vector<double> sorted(data.begin(), data.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> centers = quantile_picks(sorted, config.cluster_count);

  // Heavily repeated values can make several quantile ranks land on the same
  // value (histogram frequency data is mostly zeros). Coincident centers stay
  // coincident under the update equations, so re-pick over the distinct
  // values whenever that happens and enough of them exist.
  std::vector<double> check = centers;
  std::sort(check.begin(), check.end());
  if (c > 1 && has_duplicates(check)) {
    std::vector<double> distinct = sorted;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() >= c) {
      centers = quantile_picks(distinct, config.cluster_count);
    }
  }
  return centers;
}

MembershipMatrix update_memberships(std::span<const double> data, std::span<const double> centers,
                                    double fuzzifier) {
  check_finite(data, "data");
  check_finite(centers, "centers");
  const auto n = data.size();
  const auto c = centers.size();
  const double exponent = 2.0 / (fuzzifier - 1.0);

  MembershipMatrix u(n, c);
  std::vector<double> dist(c);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t coincident = 0;
    for (std::size_t i = 0; i < c; ++i) {
      dist[i] = std::abs(data[j] - centers[i]);
      if (dist[i] == 0.0) ++coincident;
    }
    if (coincident > 0) {
      // Limit of the update rule as a distance approaches zero: membership
      // splits equally over the zero-distance clusters.
      for (std::size_t i = 0; i < c; ++i) {
        u(j, i) = dist[i] == 0.0 ? 1.0 / static_cast<double>(coincident) : 0.0;
      }
      continue;
    }
    for (std::size_t i = 0; i < c; ++i) {
      double sum = 0.0;
      for (std::size_t k = 0; k < c; ++k) {
        sum += std::pow(dist[i] / dist[k], exponent);
      }
      u(j, i) = 1.0 / sum;
    }
  }
  return u;
}

std::vector<double> update_centers(std::span<const double> data, const MembershipMatrix& memberships,
                                   double fuzzifier, std::span<const double> previous_centers,
                                   bool* kept_previous) {
  check_finite(data, "data");
  const auto n = memberships.points();
  const auto c = memberships.clusters();
  if (data.size() != n || previous_centers.size() != c) {
    throw std::invalid_argument("update_centers: shape mismatch");
  }

  std::vector<double> centers(c);
  for (std::size_t i = 0; i < c; ++i) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double w = fuzz_pow(memberships(j, i), fuzzifier);
      num += w * data[j];
      den += w;
    }
    if (den == 0.0) {
      centers[i] = previous_centers[i];
      if (kept_previous != nullptr) *kept_previous = true;
    } else {
      centers[i] = num / den;
    }
  }
  return centers;
}

double compute_cost(std::span<const double> data, std::span<const double> centers,
                    const MembershipMatrix& memberships, double fuzzifier) {
  const auto n = memberships.points();
  const auto c = memberships.clusters();
  if (data.size() != n || centers.size() != c) {
    throw std::invalid_argument("compute_cost: shape mismatch");
  }
  double cost = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < c; ++i) {
      const double d = data[j] - centers[i];
      cost += fuzz_pow(memberships(j, i), fuzzifier) * d * d;
    }
  }
  return cost;
}

FcmModel fcm_fit(std::span<const double> data, const FcmConfig& config) {
  std::vector<double> centers = initial_centers(data, config);

  FcmModel model;
  bool kept_previous = false;
  for (int iter = 1; iter <= config.max_iterations; ++iter) {
    MembershipMatrix u = update_memberships(data, centers, config.fuzzifier);
    std::vector<double> next = update_centers(data, u, config.fuzzifier, centers, &kept_previous);
    model.cost_history.push_back(compute_cost(data, next, u, config.fuzzifier));
    model.iterations_run = iter;

    double delta = 0.0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
      delta = std::max(delta, std::abs(next[i] - centers[i]));
    }
    centers = std::move(next);
    if (delta < config.tolerance) {
      model.converged = true;
      break;
    }
  }

  // Refresh memberships against the final centers so the model is consistent
  // at its fixed point.
  model.memberships = update_memberships(data, centers, config.fuzzifier);
  model.centers = std::move(centers);
  model.labels.resize(data.size());
  for (std::size_t j = 0; j < data.size(); ++j) {
    int best = 0;
    for (std::size_t i = 1; i < model.memberships.clusters(); ++i) {
      if (model.memberships(j, i) > model.memberships(j, static_cast<std::size_t>(best))) {
        best = static_cast<int>(i);
      }
    }
    model.labels[j] = best;
  }
  model.final_cost = compute_cost(data, model.centers, model.memberships, config.fuzzifier);
  model.cost_history.push_back(model.final_cost);
  if (kept_previous) {
    model.converged = false;
  }
  return model;
}

}  // namespace thfcm
