#pragma once

#include <cstddef>
#include <cstdint>

#include "skinmask/color.hpp"
#include "skinmask/image.hpp"
#include "skinmask/threshold_config.hpp"

namespace skinmask {

/// Outcome of the three colour-space sub-rules for one pixel.
/// is_skin == rgb_pass && (hsv_pass || ycbcr_pass).
struct SkinDecision {
  bool is_skin = false;
  bool rgb_pass = false;
  bool hsv_pass = false;
  bool ycbcr_pass = false;

  friend bool operator==(const SkinDecision&, const SkinDecision&) = default;
};

/// Per-image tallies. Each *_pass_count counts pixels passing that sub-rule
/// on its own, independent of the others.
struct ClassificationStats {
  std::uint64_t total_pixels = 0;
  std::uint64_t skin_pixels = 0;
  std::uint64_t rgb_pass_count = 0;
  std::uint64_t hsv_pass_count = 0;
  std::uint64_t ycbcr_pass_count = 0;

  ClassificationStats& operator+=(const ClassificationStats& other) noexcept;
  friend bool operator==(const ClassificationStats&, const ClassificationStats&) = default;
};

bool rgb_rule(const Rgba& p, const ThresholdConfig& cfg) noexcept;
bool hsv_rule(const Hsv& hsv, const ThresholdConfig& cfg) noexcept;
bool ycbcr_rule(const YCbCr& c, const ThresholdConfig& cfg) noexcept;

SkinDecision classify_pixel(const Rgba& p, const ThresholdConfig& cfg = {}) noexcept;

struct Classification {
  Mask mask;
  ClassificationStats stats;
};

/// Classifies every pixel. `workers` > 1 splits the rows across threads;
/// the result does not depend on the worker count. Throws Error(kEmptyImage).
Classification classify_image(const ImageBuffer& img, const ThresholdConfig& cfg = {},
                              std::size_t workers = 1);

}  // namespace skinmask
