#include "fixtures.hpp"

#include <png.h>

#include <cstdio>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include <jpeglib.h>

namespace skinmask::testing {

namespace fs = std::filesystem;

TempDir::TempDir() {
  std::random_device rd;
  path_ = fs::temp_directory_path() / ("skinmask-test-" + std::to_string(rd()) + std::to_string(rd()));
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

void write_gray_png(const std::string& path, std::size_t width, std::size_t height,
                    const std::vector<std::uint8_t>& levels) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(width);
  image.height = static_cast<png_uint_32>(height);
  image.format = PNG_FORMAT_GRAY;
  if (!png_image_write_to_file(&image, path.c_str(), 0, levels.data(), 0, nullptr)) {
    throw std::runtime_error("fixture png write failed: " + path);
  }
}

void write_rgb_jpeg(const std::string& path, std::size_t width, std::size_t height,
                    const std::vector<std::uint8_t>& rgb, int quality) {
  FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("fixture jpeg open failed: " + path);
  jpeg_compress_struct cinfo{};
  jpeg_error_mgr jerr{};
  cinfo.err = jpeg_std_error(&jerr);
  jpeg_create_compress(&cinfo);
  jpeg_stdio_dest(&cinfo, f);
  cinfo.image_width = static_cast<JDIMENSION>(width);
  cinfo.image_height = static_cast<JDIMENSION>(height);
  cinfo.input_components = 3;
  cinfo.in_color_space = JCS_RGB;
  jpeg_set_defaults(&cinfo);
  jpeg_set_quality(&cinfo, quality, TRUE);
  jpeg_start_compress(&cinfo, TRUE);
  while (cinfo.next_scanline < cinfo.image_height) {
    JSAMPROW row = const_cast<JSAMPROW>(rgb.data() + cinfo.next_scanline * width * 3);
    jpeg_write_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_compress(&cinfo);
  jpeg_destroy_compress(&cinfo);
  std::fclose(f);
}

void write_bytes(const std::string& path, const std::vector<unsigned char>& bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

std::vector<unsigned char> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ImageBuffer half_skin_image(std::size_t width, std::size_t height) {
  ImageBuffer img(width, height, kBlack);
  for (std::size_t y = 0; y < height; ++y)
    for (std::size_t x = 0; x < width / 2; ++x) img.at(x, y) = kSkinAnchor;
  return img;
}

ImageBuffer half_white_gt(std::size_t width, std::size_t height) {
  ImageBuffer img(width, height, kBlack);
  for (std::size_t y = 0; y < height; ++y)
    for (std::size_t x = 0; x < width / 2; ++x) img.at(x, y) = Rgba{255, 255, 255, 255};
  return img;
}

}  // namespace skinmask::testing
