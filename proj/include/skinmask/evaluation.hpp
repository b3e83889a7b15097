#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skinmask/classifier.hpp"
#include "skinmask/image.hpp"

namespace skinmask {

struct ConfusionMatrix {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fn = 0;

  std::uint64_t total() const noexcept { return tp + fp + tn + fn; }

  ConfusionMatrix& operator+=(const ConfusionMatrix& o) noexcept {
    tp += o.tp;
    fp += o.fp;
    tn += o.tn;
    fn += o.fn;
    return *this;
  }
  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

/// Throws Error(kDimensionMismatch).
ConfusionMatrix confusion(const Mask& pred, const Mask& gt);

/// 100 * TP / (TP + FP). Throws Error(kUndefinedPrecision) if TP + FP = 0.
double precision(const ConfusionMatrix& cm);

/// 100 * (TP + TN) / total. Throws Error(kEmptyComparison) if total = 0.
double accuracy(const ConfusionMatrix& cm);

// Supplementary rates, as percentages; nullopt where the denominator is 0.
std::optional<double> recall(const ConfusionMatrix& cm) noexcept;
std::optional<double> specificity(const ConfusionMatrix& cm) noexcept;
std::optional<double> f1_score(const ConfusionMatrix& cm) noexcept;

/// One line of the per-image results table.
struct MetricsRow {
  std::string image_id;
  std::uint64_t total = 0;
  std::uint64_t detected_skin = 0;
  std::uint64_t gt_skin = 0;
  std::uint64_t detected_nonskin = 0;
  std::uint64_t gt_nonskin = 0;
  ConfusionMatrix cm;
  // Empty when nothing was predicted skin.
  std::optional<double> precision_pct;
  double accuracy_pct = 0.0;
  ClassificationStats detection;
};

MetricsRow make_row(std::string image_id, const ConfusionMatrix& cm,
                    const ClassificationStats& detection = {});

/// Compares a prediction against ground truth and fills a row.
MetricsRow evaluate(std::string image_id, const Mask& pred, const Mask& gt,
                    const ClassificationStats& detection = {});

struct Summary {
  std::vector<MetricsRow> rows;
  // Micro-average: metrics of the summed confusion counts.
  ConfusionMatrix pooled;
  std::optional<double> pooled_precision_pct;
  double pooled_accuracy_pct = 0.0;
  // Macro-average: mean of per-row metrics. Rows with undefined precision
  // are left out of the precision mean.
  std::optional<double> macro_precision_pct;
  double macro_accuracy_pct = 0.0;
};

/// Throws Error(kEmptyInput) for an empty sequence.
Summary aggregate(std::span<const MetricsRow> rows);

}  // namespace skinmask
