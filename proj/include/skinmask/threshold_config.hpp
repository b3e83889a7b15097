#pragma once

#include <array>
#include <string>

#include "json.hpp"

#include "skinmask/color.hpp"

namespace skinmask {

enum class LineSide { kAtMost, kAtLeast };

/// Half-plane in the (Cb, Cr) chroma plane: Cr <= slope*Cb + intercept or
/// Cr >= slope*Cb + intercept.
struct BoundaryLine {
  double slope = 0.0;
  double intercept = 0.0;
  LineSide side = LineSide::kAtMost;

  bool holds(double cb, double cr) const noexcept {
    const double bound = slope * cb + intercept;
    return side == LineSide::kAtMost ? cr <= bound : cr >= bound;
  }

  friend bool operator==(const BoundaryLine&, const BoundaryLine&) = default;
};

inline constexpr std::size_t kBoundaryLineCount = 5;

/// Every constant of the skin decision rule. Defaults are the published
/// thresholds.
struct ThresholdConfig {
  double h_min = 0.0;
  double h_max = 50.0;
  double s_min = 0.23;
  double s_max = 0.68;
  int r_min = 95;
  int g_min = 40;
  int b_min = 20;
  int rg_gap_min = 15;
  int a_min = 15;
  double y_min = 80.0;
  double cr_min = 135.0;
  double cb_min = 85.0;
  std::array<BoundaryLine, kBoundaryLineCount> line_coeffs{{
      {1.5862, 20.0, LineSide::kAtMost},
      {0.3448, 76.2069, LineSide::kAtLeast},
      {-4.5652, 234.5652, LineSide::kAtLeast},
      {-1.15, 301.75, LineSide::kAtMost},
      {-2.2857, 432.85, LineSide::kAtMost},
  }};
  YCbCrMode ycbcr_mode = YCbCrMode::kDigital;

  /// Throws Error(kInvalidConfig) when a range is inverted.
  void validate() const;

  friend bool operator==(const ThresholdConfig&, const ThresholdConfig&) = default;
};

std::string to_string(YCbCrMode mode);
/// Accepts "digital" and "paper-literal". Throws Error(kInvalidConfig).
YCbCrMode parse_ycbcr_mode(const std::string& text);

// Flat JSON: one key per field, line_coeffs as an array of five
// {"slope", "intercept", "side": "le"|"ge"} objects, ycbcr_mode as a string.
// Keys absent from the document keep their default value; unknown keys are
// rejected.
void to_json(nlohmann::json& j, const ThresholdConfig& cfg);
void from_json(const nlohmann::json& j, ThresholdConfig& cfg);

/// Overlays the keys present in `j` on top of `base`.
ThresholdConfig merge_config(const ThresholdConfig& base, const nlohmann::json& j);

ThresholdConfig load_config_file(const std::string& path);

}  // namespace skinmask
