#include "skinmask/classifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

#include "skinmask/error.hpp"

namespace skinmask {

ClassificationStats& ClassificationStats::operator+=(const ClassificationStats& other) noexcept {
  total_pixels += other.total_pixels;
  skin_pixels += other.skin_pixels;
  rgb_pass_count += other.rgb_pass_count;
  hsv_pass_count += other.hsv_pass_count;
  ycbcr_pass_count += other.ycbcr_pass_count;
  return *this;
}

bool rgb_rule(const Rgba& p, const ThresholdConfig& cfg) noexcept {
  const int r = p.r, g = p.g, b = p.b, a = p.a;
  return r > cfg.r_min && g > cfg.g_min && b > cfg.b_min && r > g && r > b &&
         std::abs(r - g) > cfg.rg_gap_min && a > cfg.a_min;
}

bool hsv_rule(const Hsv& hsv, const ThresholdConfig& cfg) noexcept {
  return cfg.h_min <= hsv.h && hsv.h <= cfg.h_max && cfg.s_min <= hsv.s && hsv.s <= cfg.s_max;
}

bool ycbcr_rule(const YCbCr& c, const ThresholdConfig& cfg) noexcept {
  if (!(c.cr > cfg.cr_min && c.cb > cfg.cb_min && c.y > cfg.y_min)) return false;
  return std::all_of(cfg.line_coeffs.begin(), cfg.line_coeffs.end(),
                     [&](const BoundaryLine& line) { return line.holds(c.cb, c.cr); });
}

SkinDecision classify_pixel(const Rgba& p, const ThresholdConfig& cfg) noexcept {
  SkinDecision d;
  d.rgb_pass = rgb_rule(p, cfg);
  d.hsv_pass = hsv_rule(rgb_to_hsv(p), cfg);
  d.ycbcr_pass = ycbcr_rule(rgb_to_ycbcr(p, cfg.ycbcr_mode), cfg);
  // The RGB conjunction is shared by both branches of the rule.
  d.is_skin = d.rgb_pass && (d.hsv_pass || d.ycbcr_pass);
  return d;
}

namespace {

ClassificationStats classify_range(std::span<const Rgba> pixels, std::span<std::uint8_t> out,
                                   const ThresholdConfig& cfg) {
  ClassificationStats stats;
  stats.total_pixels = pixels.size();
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    const SkinDecision d = classify_pixel(pixels[i], cfg);
    out[i] = d.is_skin ? 1 : 0;
    stats.skin_pixels += d.is_skin;
    stats.rgb_pass_count += d.rgb_pass;
    stats.hsv_pass_count += d.hsv_pass;
    stats.ycbcr_pass_count += d.ycbcr_pass;
  }
  return stats;
}

}  // namespace

Classification classify_image(const ImageBuffer& img, const ThresholdConfig& cfg, std::size_t workers) {
  if (img.empty()) throw Error(ErrorCode::kEmptyImage, "cannot classify an empty image");

  std::vector<std::uint8_t> bits(img.size());
  const auto pixels = img.pixels();
  const std::span<std::uint8_t> out(bits);

  workers = std::clamp<std::size_t>(workers, 1, img.height());
  std::vector<ClassificationStats> partial(workers);
  if (workers == 1) {
    partial[0] = classify_range(pixels, out, cfg);
  } else {
    const std::size_t rows_per = (img.height() + workers - 1) / workers;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = std::min(img.height(), w * rows_per) * img.width();
      const std::size_t last = std::min(img.height(), (w + 1) * rows_per) * img.width();
      pool.emplace_back([&, w, first, last] {
        partial[w] = classify_range(pixels.subspan(first, last - first),
                                    out.subspan(first, last - first), cfg);
      });
    }
  }

  Classification result{Mask(img.width(), img.height(), std::move(bits)), {}};
  for (const auto& s : partial) result.stats += s;
  return result;
}

}  // namespace skinmask
