#include "skinmask/image.hpp"

#include <algorithm>

#include "skinmask/error.hpp"

namespace skinmask {

namespace {

void check_dimensions(std::size_t width, std::size_t height, std::size_t count) {
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::kEmptyImage, "image dimensions must be at least 1x1");
  }
  if (count != width * height) {
    throw Error(ErrorCode::kDimensionMismatch,
                "pixel count " + std::to_string(count) + " does not match " + std::to_string(width) +
                    "x" + std::to_string(height));
  }
}

std::uint8_t blend(std::uint8_t over, std::uint8_t under, int alpha) {
  return static_cast<std::uint8_t>((alpha * over + (255 - alpha) * under + 127) / 255);
}

}  // namespace

ImageBuffer::ImageBuffer(std::size_t width, std::size_t height, Rgba fill)
    : width_(width), height_(height), pixels_(width * height, fill) {
  check_dimensions(width, height, pixels_.size());
}

ImageBuffer::ImageBuffer(std::size_t width, std::size_t height, std::vector<Rgba> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dimensions(width, height, pixels_.size());
}

Mask::Mask(std::size_t width, std::size_t height, bool fill)
    : width_(width), height_(height), bits_(width * height, fill ? 1 : 0) {
  check_dimensions(width, height, bits_.size());
}

Mask::Mask(std::size_t width, std::size_t height, std::vector<std::uint8_t> bits)
    : width_(width), height_(height), bits_(std::move(bits)) {
  check_dimensions(width, height, bits_.size());
  for (auto& b : bits_) b = b ? 1 : 0;
}

std::size_t Mask::popcount() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

ImageBuffer overlay(const ImageBuffer& img, const Mask& mask, const Rgba& highlight) {
  if (!same_shape(img, mask)) {
    throw Error(ErrorCode::kDimensionMismatch, "overlay mask does not match image dimensions");
  }
  ImageBuffer out = img;
  auto pixels = out.pixels();
  const int alpha = highlight.a;
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    if (!mask[i]) continue;
    Rgba& p = pixels[i];
    p.r = blend(highlight.r, p.r, alpha);
    p.g = blend(highlight.g, p.g, alpha);
    p.b = blend(highlight.b, p.b, alpha);
    p.a = static_cast<std::uint8_t>(alpha + ((255 - alpha) * p.a + 127) / 255);
  }
  return out;
}

Mask binarize_ground_truth(const ImageBuffer& img, double luma_threshold) {
  std::vector<std::uint8_t> bits(img.size());
  const auto pixels = img.pixels();
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    bits[i] = rgb_to_ycbcr(pixels[i], YCbCrMode::kDigital).y >= luma_threshold ? 1 : 0;
  }
  if (img.empty()) return Mask{};
  return Mask(img.width(), img.height(), std::move(bits));
}

}  // namespace skinmask
