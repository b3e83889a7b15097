#pragma once

#include <cstdint>

namespace skinmask {

/// One 8-bit-per-channel pixel. Alpha 0 is fully transparent.
struct Rgba {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  std::uint8_t a = 255;

  friend constexpr bool operator==(const Rgba&, const Rgba&) = default;
};

struct NormalizedRgb {
  double rn = 0.0;
  double gn = 0.0;
  double bn = 0.0;
};

/// Hue in degrees [0, 360), saturation and value in [0, 1].
struct Hsv {
  double h = 0.0;
  double s = 0.0;
  double v = 0.0;
};

enum class YCbCrMode {
  // BT.601 full range, chroma centred on 128.
  kDigital,
  // Y = 0.299R + 0.287G + 0.11B, Cr = R - Y, Cb = B - Y; no chroma offset.
  kLiteral,
};

struct YCbCr {
  double y = 0.0;
  double cb = 0.0;
  double cr = 0.0;
  YCbCrMode mode = YCbCrMode::kDigital;
};

/// Splits a packed 0xAARRGGBB word into its channels.
constexpr Rgba unpack_argb(std::uint32_t packed) noexcept {
  return Rgba{static_cast<std::uint8_t>((packed >> 16) & 0xff),
              static_cast<std::uint8_t>((packed >> 8) & 0xff),
              static_cast<std::uint8_t>(packed & 0xff),
              static_cast<std::uint8_t>((packed >> 24) & 0xff)};
}

constexpr std::uint32_t pack_argb(const Rgba& p) noexcept {
  return (std::uint32_t{p.a} << 24) | (std::uint32_t{p.r} << 16) |
         (std::uint32_t{p.g} << 8) | std::uint32_t{p.b};
}

/// Chromaticity coordinates r/(r+g+b) etc. Throws Error(kDegenerateBlack)
/// for pure black, where the ratio is undefined.
NormalizedRgb normalize_rgb(const Rgba& p);

/// Standard hexcone conversion. Achromatic pixels get h = 0.
Hsv rgb_to_hsv(const Rgba& p) noexcept;

YCbCr rgb_to_ycbcr(const Rgba& p, YCbCrMode mode = YCbCrMode::kDigital) noexcept;

}  // namespace skinmask
