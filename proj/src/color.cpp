#include "skinmask/color.hpp"

#include <algorithm>

#include "skinmask/error.hpp"

namespace skinmask {

NormalizedRgb normalize_rgb(const Rgba& p) {
  const int sum = int{p.r} + int{p.g} + int{p.b};
  if (sum == 0) {
    throw Error(ErrorCode::kDegenerateBlack,
                "normalized rgb is undefined for a black pixel");
  }
  const double total = sum;
  return {p.r / total, p.g / total, p.b / total};
}

Hsv rgb_to_hsv(const Rgba& p) noexcept {
  const int r = p.r, g = p.g, b = p.b;
  const int max = std::max({r, g, b});
  const int min = std::min({r, g, b});
  const int delta = max - min;

  Hsv out;
  out.v = max / 255.0;
  if (max == 0 || delta == 0) return out;

  // Ratios are formed from exact integer numerators so each component is
  // rounded once; a threshold tie such as h == 50 stays a tie.
  out.s = static_cast<double>(delta) / max;
  double h;
  if (max == r) {
    h = 60.0 * (g - b) / delta;
  } else if (max == g) {
    h = 60.0 * (b - r + 2 * delta) / delta;
  } else {
    h = 60.0 * (r - g + 4 * delta) / delta;
  }
  if (h < 0.0) h += 360.0;
  if (h >= 360.0) h -= 360.0;
  out.h = h;
  return out;
}

YCbCr rgb_to_ycbcr(const Rgba& p, YCbCrMode mode) noexcept {
  const double r = p.r, g = p.g, b = p.b;
  YCbCr out;
  out.mode = mode;
  if (mode == YCbCrMode::kLiteral) {
    out.y = 0.299 * r + 0.287 * g + 0.11 * b;
    out.cr = r - out.y;
    out.cb = b - out.y;
    return out;
  }
  // BT.601 full range written on channel differences. Algebraically the
  // usual matrix, but gray input gives y == level and cb == cr == 128 with
  // no rounding residue.
  out.y = g + 0.299 * (r - g) + 0.114 * (b - g);
  out.cb = 128.0 - 0.168736 * (r - b) - 0.331264 * (g - b);
  out.cr = 128.0 + 0.418688 * (r - g) + 0.081312 * (r - b);
  return out;
}

}  // namespace skinmask
