#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace salrank::rankloss {

/// Predicted saliency scores with their ground-truth rank orders.
/// Ranks are a permutation of {1..N}; smaller rank = more salient.
struct RankedScores {
  std::vector<double> scores;
  std::vector<int> gt_ranks;
};

struct LossConfig {
  double gamma = 1.0;  // exponent of the rank-difference pair weight, >= 0
};

/// All C(N,2) instance pairs, each ordered so the first index carries the
/// smaller (more salient) rank. Fewer than two instances yield no pairs.
std::vector<std::pair<size_t, size_t>> enumerate_pairs(const std::vector<int>& gt_ranks);

/// Normalized pair weights |r_q1 - r_q2|^gamma / sum; positive, summing to 1.
/// gamma = 0 gives the uniform weight 1/C(N,2).
std::vector<double> pair_weights(const std::vector<int>& gt_ranks, const LossConfig& cfg);

/// Weighted pairwise logistic ranking loss
///   L = sum_q beta_q * log(1 + exp(s_q2 - s_q1)),
/// evaluated in overflow-safe softplus form.
double ranking_loss(const RankedScores& rs, const LossConfig& cfg);

/// Exact gradient of ranking_loss with respect to each score.
std::vector<double> ranking_loss_grad(const RankedScores& rs, const LossConfig& cfg);

/// Numerically stable log(1 + exp(x)).
double softplus(double x);

/// Numerically stable logistic function 1 / (1 + exp(-x)).
double logistic(double x);

}  // namespace salrank::rankloss
