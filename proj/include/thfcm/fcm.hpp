#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace thfcm {

enum class InitPolicy {
  // Deterministic: centers at evenly spaced quantiles of the sorted data.
  Quantile,
  // Distinct data points drawn uniformly without replacement from a seeded
  // generator.
  SeededRandom,
};

struct FcmConfig {
  int cluster_count = 1;
  double fuzzifier = 2.0;
  double tolerance = 1e-6;
  int max_iterations = 300;
  InitPolicy init_policy = InitPolicy::Quantile;
  std::uint64_t seed = 0;  // consumed only by SeededRandom
};

// Row-major N x c matrix of membership degrees. Row j holds point j's degree
// of belonging to each cluster; rows sum to 1.
class MembershipMatrix {
 public:
  MembershipMatrix() = default;
  MembershipMatrix(std::size_t points, std::size_t clusters)
      : points_(points), clusters_(clusters), cells_(points * clusters, 0.0) {}

  double& operator()(std::size_t point, std::size_t cluster) {
    return cells_[point * clusters_ + cluster];
  }
  double operator()(std::size_t point, std::size_t cluster) const {
    return cells_[point * clusters_ + cluster];
  }

  std::span<const double> row(std::size_t point) const {
    return {cells_.data() + point * clusters_, clusters_};
  }

  std::size_t points() const { return points_; }
  std::size_t clusters() const { return clusters_; }

 private:
  std::size_t points_ = 0;
  std::size_t clusters_ = 0;
  std::vector<double> cells_;
};

// Result of one clustering run.
struct FcmModel {
  std::vector<double> centers;
  MembershipMatrix memberships;
  std::vector<int> labels;  // labels[j] = argmax over clusters of memberships(j, i)
  int iterations_run = 0;
  double final_cost = 0.0;
  bool converged = false;
  // Cost after each iteration's center update, with the refreshed final cost
  // appended; non-increasing up to rounding.
  std::vector<double> cost_history;
};

// Initial centers for the configured policy. Exposed so callers can reproduce
// or replace a run's starting point.
std::vector<double> initial_centers(std::span<const double> data, const FcmConfig& config);

// One membership update: u(j,i) = 1 / sum_k (d_ij / d_kj)^(2/(m-1)) with
// d_ij = |x_j - v_i|. Points coinciding with one or more centers split their
// membership equally over the zero-distance clusters.
MembershipMatrix update_memberships(std::span<const double> data, std::span<const double> centers,
                                    double fuzzifier);

// One center update: v_i = sum_j u(j,i)^m x_j / sum_j u(j,i)^m. A cluster
// whose weight sum is zero keeps its previous center; if kept_previous is
// non-null it is set when that happens.
std::vector<double> update_centers(std::span<const double> data, const MembershipMatrix& memberships,
                                   double fuzzifier, std::span<const double> previous_centers,
                                   bool* kept_previous = nullptr);

// Cost J = sum_j sum_i u(j,i)^m (x_j - v_i)^2.
double compute_cost(std::span<const double> data, std::span<const double> centers,
                    const MembershipMatrix& memberships, double fuzzifier);

// Alternates membership and center updates from the configured initial
// centers until the largest center change drops below config.tolerance or
// max_iterations is reached.
FcmModel fcm_fit(std::span<const double> data, const FcmConfig& config);

}  // namespace thfcm
