#include "skinmask/evaluation.hpp"

#include "skinmask/error.hpp"

namespace skinmask {

ConfusionMatrix confusion(const Mask& pred, const Mask& gt) {
  if (!same_shape(pred, gt)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "prediction is " + std::to_string(pred.width()) + "x" + std::to_string(pred.height()) +
                    " but ground truth is " + std::to_string(gt.width()) + "x" +
                    std::to_string(gt.height()));
  }
  // Indexed by (pred << 1) | gt.
  std::uint64_t counts[4] = {0, 0, 0, 0};
  const auto p = pred.bits();
  const auto g = gt.bits();
  for (std::size_t i = 0; i < p.size(); ++i) ++counts[(p[i] << 1) | g[i]];
  return ConfusionMatrix{.tp = counts[3], .fp = counts[2], .tn = counts[0], .fn = counts[1]};
}

double precision(const ConfusionMatrix& cm) {
  const std::uint64_t predicted = cm.tp + cm.fp;
  if (predicted == 0) {
    throw Error(ErrorCode::kUndefinedPrecision, "precision is undefined when no pixel is predicted skin");
  }
  return 100.0 * static_cast<double>(cm.tp) / static_cast<double>(predicted);
}

double accuracy(const ConfusionMatrix& cm) {
  const std::uint64_t total = cm.total();
  if (total == 0) throw Error(ErrorCode::kEmptyComparison, "accuracy is undefined for zero pixels");
  return 100.0 * static_cast<double>(cm.tp + cm.tn) / static_cast<double>(total);
}

std::optional<double> recall(const ConfusionMatrix& cm) noexcept {
  if (cm.tp + cm.fn == 0) return std::nullopt;
  return 100.0 * static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
}

std::optional<double> specificity(const ConfusionMatrix& cm) noexcept {
  if (cm.tn + cm.fp == 0) return std::nullopt;
  return 100.0 * static_cast<double>(cm.tn) / static_cast<double>(cm.tn + cm.fp);
}

std::optional<double> f1_score(const ConfusionMatrix& cm) noexcept {
  const std::uint64_t denom = 2 * cm.tp + cm.fp + cm.fn;
  if (denom == 0) return std::nullopt;
  return 100.0 * static_cast<double>(2 * cm.tp) / static_cast<double>(denom);
}

MetricsRow make_row(std::string image_id, const ConfusionMatrix& cm, const ClassificationStats& detection) {
  MetricsRow row;
  row.image_id = std::move(image_id);
  row.total = cm.total();
  row.detected_skin = cm.tp + cm.fp;
  row.gt_skin = cm.tp + cm.fn;
  row.detected_nonskin = cm.tn + cm.fn;
  row.gt_nonskin = cm.tn + cm.fp;
  row.cm = cm;
  if (row.detected_skin > 0) row.precision_pct = precision(cm);
  row.accuracy_pct = accuracy(cm);
  row.detection = detection;
  return row;
}

MetricsRow evaluate(std::string image_id, const Mask& pred, const Mask& gt,
                    const ClassificationStats& detection) {
  return make_row(std::move(image_id), confusion(pred, gt), detection);
}

Summary aggregate(std::span<const MetricsRow> rows) {
  if (rows.empty()) throw Error(ErrorCode::kEmptyInput, "cannot aggregate zero rows");

  Summary s;
  s.rows.assign(rows.begin(), rows.end());
  double precision_sum = 0.0;
  std::size_t precision_rows = 0;
  double accuracy_sum = 0.0;
  for (const auto& row : rows) {
    s.pooled += row.cm;
    if (row.precision_pct) {
      precision_sum += *row.precision_pct;
      ++precision_rows;
    }
    accuracy_sum += row.accuracy_pct;
  }
  if (s.pooled.tp + s.pooled.fp > 0) s.pooled_precision_pct = precision(s.pooled);
  s.pooled_accuracy_pct = accuracy(s.pooled);
  if (precision_rows > 0) s.macro_precision_pct = precision_sum / static_cast<double>(precision_rows);
  s.macro_accuracy_pct = accuracy_sum / static_cast<double>(rows.size());
  return s;
}

}  // namespace skinmask
