#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "salrank/image.hpp"
#include "salrank/mask.hpp"

namespace salrank::metrics {

/// Ground-truth instance: mask plus its descending rank order
/// (1 = most salient; orders within an image are a permutation of {1..N}).
struct GtInstance {
  BinaryMask mask;
  int rank_order = 1;
};

/// Predicted instance: mask, real-valued saliency score (higher = more
/// salient) and the detector confidence used for match ordering.
struct PredInstance {
  BinaryMask mask;
  double saliency_score = 0.0;
  double confidence = 1.0;
};

struct MetricConfig {
  double iou_threshold = 0.5;  // in (0,1]
};

/// Strict one-to-one assignment between predictions and ground truth.
struct Matching {
  std::vector<std::pair<size_t, size_t>> pairs;  // (gt_index, pred_index)
  std::vector<size_t> unmatched_gt;
  std::vector<size_t> unmatched_pred;

  /// Matched prediction for a GT index, if any.
  std::optional<size_t> pred_for_gt(size_t gt_index) const;
};

/// Greedy confidence-ordered matching: predictions are visited by descending
/// confidence (ties by ascending index) and each claims the still-unmatched
/// GT of highest IoU, provided IoU >= cfg.iou_threshold.
Matching match_instances(const std::vector<PredInstance>& preds,
                         const std::vector<GtInstance>& gts,
                         const MetricConfig& cfg);

/// Segmentation-aware rank correlation in [-1,1].
///
/// GT orders convert to ascending rank values (larger = more salient). Every
/// prediction receives an ascending rank by saliency score over the full
/// prediction list, so false positives occupy rank slots and displace the
/// order. Each GT takes its matched prediction's rank, or 0 when missed, and
/// the score is the Pearson correlation of the two rank vectors.
/// Returns nullopt when N = 1 (GT variance is zero); returns 0 when the
/// predicted vector has zero variance (e.g. every GT missed).
std::optional<double> sa_sor_image(const std::vector<PredInstance>& preds,
                                   const std::vector<GtInstance>& gts,
                                   const MetricConfig& cfg);

/// Pixelwise salient object ranking score in [0,1]: each GT instance is
/// scored by the mean of `sal_map` inside its mask, and the Spearman
/// correlation between that scoring and the GT order is normalized as
/// (rho+1)/2. Undefined for fewer than two instances or when all instance
/// means are identical.
std::optional<double> sor_pixelwise_image(const GrayMap& sal_map,
                                          const std::vector<GtInstance>& gts);

/// Largest-overlap variant: each GT adopts the prediction with the largest
/// intersection area (no threshold, not one-to-one; zero-overlap GTs are
/// dropped), and Spearman over the matched subset is normalized to [0,1].
/// Undefined when fewer than two GTs match or the adopted scores are all
/// equal.
std::optional<double> ssor_image(const std::vector<PredInstance>& preds,
                                 const std::vector<GtInstance>& gts);

/// Per-GT index of the prediction with the largest intersection area
/// (ties to the lower prediction index); nullopt for zero-overlap GTs.
std::vector<std::optional<size_t>> ssor_assign(const std::vector<PredInstance>& preds,
                                               const std::vector<GtInstance>& gts);

/// Mean absolute per-pixel difference of two same-sized maps in [0,1].
double mae_image(const GrayMap& pred_map, const GrayMap& gt_map);

struct AggregateResult {
  double mean = 0.0;
  size_t counted = 0;
  size_t skipped = 0;
};

/// Arithmetic mean over the defined scores, with a tally of skipped
/// (undefined) entries. Throws when no score is defined.
AggregateResult dataset_aggregate(const std::vector<std::optional<double>>& per_image);

/// Paint instances into an 8-bit map: the instance with descending order i of
/// N gets round(255*(N-i+1)/N), background stays 0, and overlaps resolve in
/// favour of the more salient instance.
Gray8 render_rank_map(const std::vector<GtInstance>& instances, int width, int height);

/// Turn scored predictions into rank-ordered instances: descending order 1
/// goes to the highest score. Ties follow the ascending score ranking used
/// by sa_sor_image, so the lower index stays less salient.
std::vector<GtInstance> rank_predictions(const std::vector<PredInstance>& preds);

/// Pearson correlation; nullopt when either input has zero variance.
std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y);

/// Spearman rank correlation with average (fractional) ranks for ties;
/// nullopt when either rank vector has zero variance.
std::optional<double> spearman(const std::vector<double>& x, const std::vector<double>& y);

/// Fractional (average) 1-based ranks of a vector, ascending.
std::vector<double> fractional_ranks(const std::vector<double>& values);

}  // namespace salrank::metrics
