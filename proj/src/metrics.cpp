#include "salrank/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace salrank::metrics {

namespace {

void check_gt(const std::vector<GtInstance>& gts) {
  if (gts.empty()) throw std::invalid_argument("metrics: empty ground-truth instance list");
  const size_t n = gts.size();
  std::vector<bool> seen(n, false);
  for (const auto& gt : gts) {
    if (gt.rank_order < 1 || static_cast<size_t>(gt.rank_order) > n ||
        seen[gt.rank_order - 1])
      throw std::invalid_argument("metrics: GT rank orders must be a permutation of {1.." +
                                  std::to_string(n) + "}");
    seen[gt.rank_order - 1] = true;
  }
}

void check_shapes(const std::vector<PredInstance>& preds, const std::vector<GtInstance>& gts) {
  const BinaryMask& ref = gts.front().mask;
  for (const auto& gt : gts)
    if (!gt.mask.same_shape(ref))
      throw std::invalid_argument("metrics: GT mask dimension mismatch");
  for (const auto& pred : preds)
    if (!pred.mask.same_shape(ref))
      throw std::invalid_argument("metrics: prediction mask dimension mismatch");
}

/// Ascending saliency rank per prediction: the lowest score gets 1, ties are
/// broken toward the lower index.
std::vector<int> ascending_pred_ranks(const std::vector<PredInstance>& preds) {
  std::vector<size_t> order(preds.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return preds[a].saliency_score < preds[b].saliency_score;
  });
  std::vector<int> ranks(preds.size());
  for (size_t pos = 0; pos < order.size(); ++pos) ranks[order[pos]] = static_cast<int>(pos) + 1;
  return ranks;
}

}  // namespace

std::optional<size_t> Matching::pred_for_gt(size_t gt_index) const {
  for (const auto& [g, p] : pairs)
    if (g == gt_index) return p;
  return std::nullopt;
}

Matching match_instances(const std::vector<PredInstance>& preds,
                         const std::vector<GtInstance>& gts,
                         const MetricConfig& cfg) {
  if (cfg.iou_threshold <= 0.0 || cfg.iou_threshold > 1.0)
    throw std::invalid_argument("match_instances: IoU threshold must lie in (0,1]");
  check_gt(gts);
  check_shapes(preds, gts);

  std::vector<size_t> order(preds.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return preds[a].confidence > preds[b].confidence;
  });

  Matching result;
  std::vector<bool> gt_taken(gts.size(), false);
  std::vector<bool> pred_matched(preds.size(), false);
  for (size_t pred_idx : order) {
    double best_iou = 0.0;
    size_t best_gt = gts.size();
    for (size_t g = 0; g < gts.size(); ++g) {
      if (gt_taken[g]) continue;
      const double iou = mask_iou(preds[pred_idx].mask, gts[g].mask);
      if (iou > best_iou) {
        best_iou = iou;
        best_gt = g;
      }
    }
    if (best_gt < gts.size() && best_iou >= cfg.iou_threshold) {
      gt_taken[best_gt] = true;
      pred_matched[pred_idx] = true;
      result.pairs.emplace_back(best_gt, pred_idx);
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  for (size_t g = 0; g < gts.size(); ++g)
    if (!gt_taken[g]) result.unmatched_gt.push_back(g);
  for (size_t p = 0; p < preds.size(); ++p)
    if (!pred_matched[p]) result.unmatched_pred.push_back(p);
  return result;
}

std::optional<double> sa_sor_image(const std::vector<PredInstance>& preds,
                                   const std::vector<GtInstance>& gts,
                                   const MetricConfig& cfg) {
  check_gt(gts);
  const size_t n = gts.size();
  if (n == 1) return std::nullopt;  // single GT: correlation undefined

  const auto pred_ranks = ascending_pred_ranks(preds);
  const auto matching = match_instances(preds, gts, cfg);

  std::vector<double> gt_vec(n), pred_vec(n, 0.0);
  for (size_t g = 0; g < n; ++g) {
    gt_vec[g] = static_cast<double>(n) - gts[g].rank_order + 1;  // ascending, larger = more salient
    if (auto p = matching.pred_for_gt(g)) pred_vec[g] = pred_ranks[*p];
  }
  const auto rho = pearson(pred_vec, gt_vec);
  // Zero variance on the predicted side (e.g. every instance missed) scores 0
  // so that total misses are penalized rather than skipped.
  return rho.value_or(0.0);
}

std::optional<double> sor_pixelwise_image(const GrayMap& sal_map,
                                          const std::vector<GtInstance>& gts) {
  check_gt(gts);
  const size_t n = gts.size();
  if (n < 2) return std::nullopt;
  for (const auto& gt : gts) {
    if (gt.mask.width != sal_map.width || gt.mask.height != sal_map.height)
      throw std::invalid_argument("sor_pixelwise_image: map/mask dimension mismatch");
    if (gt.mask.empty()) throw std::invalid_argument("sor_pixelwise_image: empty GT mask");
  }
  std::vector<double> means(n), gt_vec(n);
  for (size_t g = 0; g < n; ++g) {
    double sum = 0.0;
    size_t count = 0;
    for (size_t i = 0; i < gts[g].mask.bits.size(); ++i) {
      if (gts[g].mask.bits[i]) {
        sum += sal_map.values[i];
        ++count;
      }
    }
    means[g] = sum / static_cast<double>(count);
    gt_vec[g] = static_cast<double>(n) - gts[g].rank_order + 1;
  }
  const auto rho = spearman(means, gt_vec);
  if (!rho) return std::nullopt;  // all instance means identical
  return (*rho + 1.0) / 2.0;
}

std::vector<std::optional<size_t>> ssor_assign(const std::vector<PredInstance>& preds,
                                               const std::vector<GtInstance>& gts) {
  check_gt(gts);
  check_shapes(preds, gts);
  std::vector<std::optional<size_t>> assigned(gts.size());
  for (size_t g = 0; g < gts.size(); ++g) {
    size_t best_area = 0;
    for (size_t p = 0; p < preds.size(); ++p) {
      const size_t inter = mask_intersection_area(preds[p].mask, gts[g].mask);
      if (inter > best_area) {
        best_area = inter;
        assigned[g] = p;
      }
    }
  }
  return assigned;
}

std::optional<double> ssor_image(const std::vector<PredInstance>& preds,
                                 const std::vector<GtInstance>& gts) {
  const auto assigned = ssor_assign(preds, gts);
  std::vector<double> scores, gt_vec;
  for (size_t g = 0; g < gts.size(); ++g) {
    if (!assigned[g]) continue;  // missed instances are simply dropped
    scores.push_back(preds[*assigned[g]].saliency_score);
    gt_vec.push_back(static_cast<double>(gts.size()) - gts[g].rank_order + 1);
  }
  if (scores.size() < 2) return std::nullopt;
  const auto rho = spearman(scores, gt_vec);
  if (!rho) return std::nullopt;  // one prediction adopted by every matched GT
  return (*rho + 1.0) / 2.0;
}

double mae_image(const GrayMap& pred_map, const GrayMap& gt_map) {
  if (pred_map.width != gt_map.width || pred_map.height != gt_map.height)
    throw std::invalid_argument("mae_image: dimension mismatch");
  double total = 0.0;
  for (size_t i = 0; i < pred_map.values.size(); ++i)
    total += std::abs(pred_map.values[i] - gt_map.values[i]);
  return total / static_cast<double>(pred_map.values.size());
}

AggregateResult dataset_aggregate(const std::vector<std::optional<double>>& per_image) {
  AggregateResult out;
  double sum = 0.0;
  for (const auto& score : per_image) {
    if (score) {
      sum += *score;
      ++out.counted;
    } else {
      ++out.skipped;
    }
  }
  if (out.counted == 0)
    throw std::invalid_argument("dataset_aggregate: every image is undefined");
  out.mean = sum / static_cast<double>(out.counted);
  return out;
}

Gray8 render_rank_map(const std::vector<GtInstance>& instances, int width, int height) {
  check_gt(instances);
  Gray8 map(width, height);
  const int n = static_cast<int>(instances.size());
  // Paint from least to most salient so overlaps keep the higher value.
  std::vector<size_t> order(instances.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return instances[a].rank_order > instances[b].rank_order;
  });
  for (size_t idx : order) {
    const auto& inst = instances[idx];
    if (inst.mask.width != width || inst.mask.height != height)
      throw std::invalid_argument("render_rank_map: mask dimension mismatch");
    const double value = 255.0 * (n - inst.rank_order + 1) / static_cast<double>(n);
    const auto byte = static_cast<uint8_t>(std::lround(value));
    for (size_t i = 0; i < inst.mask.bits.size(); ++i)
      if (inst.mask.bits[i]) map.values[i] = byte;
  }
  return map;
}

std::vector<GtInstance> rank_predictions(const std::vector<PredInstance>& preds) {
  const auto asc = ascending_pred_ranks(preds);
  std::vector<GtInstance> out(preds.size());
  const int p = static_cast<int>(preds.size());
  for (size_t i = 0; i < preds.size(); ++i) {
    out[i].mask = preds[i].mask;
    out[i].rank_order = p - asc[i] + 1;
  }
  return out;
}

std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.empty())
    throw std::invalid_argument("pearson: input size mismatch");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

std::vector<double> fractional_ranks(const std::vector<double>& values) {
  std::vector<size_t> order(values.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  size_t i = 0;
  while (i < order.size()) {
    size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double avg = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

std::optional<double> spearman(const std::vector<double>& x, const std::vector<double>& y) {
  return pearson(fractional_ranks(x), fractional_ranks(y));
}

}  // namespace salrank::metrics
