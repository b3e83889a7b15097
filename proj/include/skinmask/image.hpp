#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "skinmask/color.hpp"

namespace skinmask {

/// Row-major, top-left origin RGBA raster. A default-constructed buffer is
/// empty (0x0); any other buffer has width, height >= 1.
class ImageBuffer {
 public:
  ImageBuffer() = default;
  ImageBuffer(std::size_t width, std::size_t height, Rgba fill = {});
  ImageBuffer(std::size_t width, std::size_t height, std::vector<Rgba> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }
  bool empty() const noexcept { return pixels_.empty(); }

  std::span<const Rgba> pixels() const noexcept { return pixels_; }
  std::span<Rgba> pixels() noexcept { return pixels_; }

  const Rgba& at(std::size_t x, std::size_t y) const { return pixels_[y * width_ + x]; }
  Rgba& at(std::size_t x, std::size_t y) { return pixels_[y * width_ + x]; }

  friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<Rgba> pixels_;
};

/// Binary skin mask; one byte per pixel holding 0 or 1.
class Mask {
 public:
  Mask() = default;
  Mask(std::size_t width, std::size_t height, bool fill = false);
  Mask(std::size_t width, std::size_t height, std::vector<std::uint8_t> bits);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
  void set(std::size_t i, bool skin) noexcept { bits_[i] = skin ? 1 : 0; }
  bool at(std::size_t x, std::size_t y) const { return bits_[y * width_ + x] != 0; }

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  std::size_t popcount() const noexcept;

  friend bool operator==(const Mask&, const Mask&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> bits_;
};

template <typename A, typename B>
bool same_shape(const A& a, const B& b) noexcept {
  return a.width() == b.width() && a.height() == b.height();
}

/// Decodes a PNG or JPEG file to 8-bit RGBA. Images without alpha get
/// A = 255. Throws Error with kNotFound, kUnsupportedFormat or kCorruptFile.
ImageBuffer load_image(const std::string& path);

/// 8-bit grayscale PNG, skin = 255, non-skin = 0. Throws Error(kIoWrite).
void write_mask(const Mask& mask, const std::string& path);

/// 8-bit RGBA PNG. Throws Error(kIoWrite).
void write_image(const ImageBuffer& img, const std::string& path);

/// Skin pixels are alpha-blended with `highlight` using the highlight's
/// alpha as weight, so an opaque highlight replaces the pixel outright.
/// Non-skin pixels are copied unchanged.
ImageBuffer overlay(const ImageBuffer& img, const Mask& mask, const Rgba& highlight);

inline constexpr double kDefaultGtThreshold = 128.0;

/// Ground-truth pixel is skin iff its full-range BT.601 luma >= threshold.
Mask binarize_ground_truth(const ImageBuffer& img,
                           double luma_threshold = kDefaultGtThreshold);

}  // namespace skinmask
