#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "skinmask/image.hpp"

namespace skinmask::testing {

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

void write_gray_png(const std::string& path, std::size_t width, std::size_t height,
                    const std::vector<std::uint8_t>& levels);
void write_rgb_jpeg(const std::string& path, std::size_t width, std::size_t height,
                    const std::vector<std::uint8_t>& rgb, int quality = 100);
void write_bytes(const std::string& path, const std::vector<unsigned char>& bytes);
std::vector<unsigned char> read_bytes(const std::string& path);

inline constexpr Rgba kSkinAnchor{200, 150, 120, 255};
inline constexpr Rgba kBlack{0, 0, 0, 255};

/// Left half skin anchor, right half black.
ImageBuffer half_skin_image(std::size_t width, std::size_t height);
/// Ground truth with the left half white.
ImageBuffer half_white_gt(std::size_t width, std::size_t height);

inline Rgba random_pixel(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> byte(0, 255);
  return Rgba{static_cast<std::uint8_t>(byte(rng)), static_cast<std::uint8_t>(byte(rng)),
              static_cast<std::uint8_t>(byte(rng)), static_cast<std::uint8_t>(byte(rng))};
}

}  // namespace skinmask::testing
