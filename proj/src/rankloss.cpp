#include "salrank/rankloss.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace salrank::rankloss {

namespace {

void check_ranks(const std::vector<int>& gt_ranks) {
  const size_t n = gt_ranks.size();
  std::vector<bool> seen(n, false);
  for (int r : gt_ranks) {
    if (r < 1 || static_cast<size_t>(r) > n || seen[r - 1])
      throw std::invalid_argument("gt_ranks must be a permutation of {1.." +
                                  std::to_string(n) + "}");
    seen[r - 1] = true;
  }
}

}  // namespace

double softplus(double x) {
  return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x)));
}

double logistic(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

std::vector<std::pair<size_t, size_t>> enumerate_pairs(const std::vector<int>& gt_ranks) {
  check_ranks(gt_ranks);
  std::vector<std::pair<size_t, size_t>> pairs;
  const size_t n = gt_ranks.size();
  if (n < 2) return pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (size_t i = 0; i + 1 < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (gt_ranks[i] < gt_ranks[j])
        pairs.emplace_back(i, j);
      else
        pairs.emplace_back(j, i);
    }
  }
  return pairs;
}

std::vector<double> pair_weights(const std::vector<int>& gt_ranks, const LossConfig& cfg) {
  if (cfg.gamma < 0.0) throw std::invalid_argument("pair_weights: gamma must be >= 0");
  const auto pairs = enumerate_pairs(gt_ranks);
  std::vector<double> weights(pairs.size());
  double total = 0.0;
  for (size_t q = 0; q < pairs.size(); ++q) {
    // Ranks in a pair are distinct, so the base is always >= 1.
    const double diff = std::abs(gt_ranks[pairs[q].first] - gt_ranks[pairs[q].second]);
    weights[q] = std::pow(diff, cfg.gamma);
    total += weights[q];
  }
  for (double& w : weights) w /= total;
  return weights;
}

double ranking_loss(const RankedScores& rs, const LossConfig& cfg) {
  if (rs.scores.size() != rs.gt_ranks.size())
    throw std::invalid_argument("ranking_loss: scores/ranks size mismatch");
  if (rs.scores.size() < 2)
    throw std::invalid_argument("ranking_loss: need at least two instances");
  const auto pairs = enumerate_pairs(rs.gt_ranks);
  const auto weights = pair_weights(rs.gt_ranks, cfg);
  double loss = 0.0;
  for (size_t q = 0; q < pairs.size(); ++q) {
    const double margin = rs.scores[pairs[q].second] - rs.scores[pairs[q].first];
    loss += weights[q] * softplus(margin);
  }
  return loss;
}

std::vector<double> ranking_loss_grad(const RankedScores& rs, const LossConfig& cfg) {
  if (rs.scores.size() != rs.gt_ranks.size())
    throw std::invalid_argument("ranking_loss_grad: scores/ranks size mismatch");
  if (rs.scores.size() < 2)
    throw std::invalid_argument("ranking_loss_grad: need at least two instances");
  const auto pairs = enumerate_pairs(rs.gt_ranks);
  const auto weights = pair_weights(rs.gt_ranks, cfg);
  std::vector<double> grad(rs.scores.size(), 0.0);
  for (size_t q = 0; q < pairs.size(); ++q) {
    const auto [hi, lo] = pairs[q];
    const double sig = logistic(rs.scores[lo] - rs.scores[hi]);
    grad[lo] += weights[q] * sig;
    grad[hi] -= weights[q] * sig;
  }
  return grad;
}

}  // namespace salrank::rankloss
