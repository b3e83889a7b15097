#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string_view>
#include <vector>

// jpeglib.h needs size_t and FILE declared first.
#include <jerror.h>
#include <jpeglib.h>

#include "skinmask/error.hpp"
#include "skinmask/image.hpp"

namespace skinmask {

namespace {

constexpr unsigned char kPngSignature[] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
constexpr unsigned char kJpegSignature[] = {0xff, 0xd8, 0xff};

enum class Format { kPng, kJpeg };

bool has_signature(const std::vector<unsigned char>& data, std::span<const unsigned char> sig,
                   bool& prefix_only) {
  const std::size_t n = std::min(data.size(), sig.size());
  if (!std::equal(sig.begin(), sig.begin() + n, data.begin())) return false;
  prefix_only = data.size() < sig.size();
  return true;
}

Format sniff(const std::vector<unsigned char>& data, const std::string& path) {
  bool prefix_only = false;
  for (auto [sig, fmt] : {std::pair{std::span<const unsigned char>(kPngSignature), Format::kPng},
                          std::pair{std::span<const unsigned char>(kJpegSignature), Format::kJpeg}}) {
    if (has_signature(data, sig, prefix_only)) {
      if (prefix_only) throw Error(ErrorCode::kCorruptFile, path + ": file is truncated");
      return fmt;
    }
  }
  throw Error(ErrorCode::kUnsupportedFormat, path + ": not a PNG or JPEG file");
}

ImageBuffer decode_png(const std::vector<unsigned char>& data, const std::string& path) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, data.data(), data.size())) {
    throw Error(ErrorCode::kCorruptFile, path + ": " + image.message);
  }
  image.format = PNG_FORMAT_RGBA;
  std::vector<Rgba> pixels(std::size_t{image.width} * image.height);
  static_assert(sizeof(Rgba) == 4);
  if (!png_image_finish_read(&image, nullptr, pixels.data(), 0, nullptr)) {
    std::string msg = image.message;
    png_image_free(&image);
    throw Error(ErrorCode::kCorruptFile, path + ": " + msg);
  }
  return ImageBuffer(image.width, image.height, std::move(pixels));
}

struct JpegErrorManager {
  jpeg_error_mgr base;
  std::jmp_buf jump;
  bool truncated = false;
  char message[JMSG_LENGTH_MAX] = {};
};

void jpeg_fail(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, err->message);
  std::longjmp(err->jump, 1);
}

void jpeg_message(j_common_ptr cinfo, int level) {
  auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
  if (level < 0 && cinfo->err->msg_code == JWRN_JPEG_EOF) err->truncated = true;
}

ImageBuffer decode_jpeg(const std::vector<unsigned char>& data, const std::string& path) {
  jpeg_decompress_struct cinfo{};
  JpegErrorManager err;
  cinfo.err = jpeg_std_error(&err.base);
  err.base.error_exit = jpeg_fail;
  err.base.emit_message = jpeg_message;

  // Buffers are reachable through client_data so their state survives a
  // longjmp out of libjpeg.
  struct {
    std::vector<Rgba> pixels;
    std::vector<JSAMPLE> row;
  } buf;
  cinfo.client_data = &buf;
  if (setjmp(err.jump)) {
    jpeg_destroy_decompress(&cinfo);
    throw Error(ErrorCode::kCorruptFile, path + ": " + err.message);
  }
  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, data.data(), static_cast<unsigned long>(data.size()));
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = JCS_RGB;
  jpeg_start_decompress(&cinfo);

  const std::size_t width = cinfo.output_width;
  const std::size_t height = cinfo.output_height;
  auto& pixels = buf.pixels;
  auto& row = buf.row;
  pixels.resize(width * height);
  row.resize(width * 3);
  while (cinfo.output_scanline < cinfo.output_height) {
    const std::size_t y = cinfo.output_scanline;
    JSAMPROW rows[] = {row.data()};
    jpeg_read_scanlines(&cinfo, rows, 1);
    for (std::size_t x = 0; x < width; ++x) {
      pixels[y * width + x] = Rgba{row[3 * x], row[3 * x + 1], row[3 * x + 2], 255};
    }
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  if (err.truncated) throw Error(ErrorCode::kCorruptFile, path + ": premature end of JPEG data");
  return ImageBuffer(width, height, std::move(buf.pixels));
}

void write_png(const std::string& path, std::size_t width, std::size_t height, png_uint_32 format,
               const void* buffer) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(width);
  image.height = static_cast<png_uint_32>(height);
  image.format = format;
  if (!png_image_write_to_file(&image, path.c_str(), 0, buffer, 0, nullptr)) {
    throw Error(ErrorCode::kIoWrite, path + ": " + image.message);
  }
}

}  // namespace

ImageBuffer load_image(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorCode::kNotFound, path + ": no such file");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kNotFound, path + ": cannot open");
  std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  switch (sniff(data, path)) {
    case Format::kPng: return decode_png(data, path);
    case Format::kJpeg: return decode_jpeg(data, path);
  }
  throw Error(ErrorCode::kUnsupportedFormat, path);
}

void write_mask(const Mask& mask, const std::string& path) {
  if (mask.empty()) throw Error(ErrorCode::kIoWrite, path + ": cannot write an empty mask");
  std::vector<std::uint8_t> gray(mask.size());
  const auto bits = mask.bits();
  for (std::size_t i = 0; i < gray.size(); ++i) gray[i] = bits[i] ? 255 : 0;
  write_png(path, mask.width(), mask.height(), PNG_FORMAT_GRAY, gray.data());
}

void write_image(const ImageBuffer& img, const std::string& path) {
  if (img.empty()) throw Error(ErrorCode::kIoWrite, path + ": cannot write an empty image");
  write_png(path, img.width(), img.height(), PNG_FORMAT_RGBA, img.pixels().data());
}

}  // namespace skinmask
