#include <cmath>
#include <random>

#include "doctest.h"
#include "skinmask/color.hpp"
#include "skinmask/error.hpp"

using namespace skinmask;

TEST_CASE("unpack_argb splits channels") {
  CHECK(unpack_argb(0xFFFFFFFFu) == Rgba{255, 255, 255, 255});
  CHECK(unpack_argb(0x00000000u) == Rgba{0, 0, 0, 0});
  CHECK(unpack_argb(0x80C89678u) == Rgba{200, 150, 120, 128});
}

TEST_CASE("pack/unpack round-trip over every byte of every channel") {
  for (int v = 0; v < 256; ++v) {
    const auto b = static_cast<std::uint8_t>(v);
    for (const Rgba p : {Rgba{b, 7, 11, 13}, Rgba{17, b, 19, 23}, Rgba{29, 31, b, 37}, Rgba{41, 43, 47, b}}) {
      REQUIRE(unpack_argb(pack_argb(p)) == p);
    }
  }
}

TEST_CASE("normalize_rgb") {
  SUBCASE("equal channels") {
    const auto n = normalize_rgb(Rgba{100, 100, 100, 255});
    CHECK(n.rn == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(n.gn == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(n.bn == doctest::Approx(1.0 / 3).epsilon(1e-12));
  }
  SUBCASE("single channel") {
    const auto n = normalize_rgb(Rgba{255, 0, 0, 255});
    CHECK(n.rn == 1.0);
    CHECK(n.gn == 0.0);
    CHECK(n.bn == 0.0);
  }
  SUBCASE("skin anchor") {
    const auto n = normalize_rgb(Rgba{200, 150, 120, 255});
    CHECK(std::abs(n.rn - 0.42553) < 1e-5);
    CHECK(std::abs(n.gn - 0.31915) < 1e-5);
    CHECK(std::abs(n.bn - 0.25532) < 1e-5);
  }
  SUBCASE("black is an error") {
    try {
      normalize_rgb(Rgba{0, 0, 0, 255});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kDegenerateBlack);
    }
  }
  SUBCASE("alpha is ignored") {
    const auto a = normalize_rgb(Rgba{10, 20, 30, 0});
    const auto b = normalize_rgb(Rgba{10, 20, 30, 255});
    CHECK(a.rn == b.rn);
  }
}

TEST_CASE("normalize_rgb sums to one and is scale invariant") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int i = 0; i < 100000; ++i) {
    const Rgba p{static_cast<std::uint8_t>(byte(rng)), static_cast<std::uint8_t>(byte(rng)),
                 static_cast<std::uint8_t>(byte(rng)), 255};
    if (p.r + p.g + p.b == 0) continue;
    const auto n = normalize_rgb(p);
    REQUIRE(std::abs(n.rn + n.gn + n.bn - 1.0) < 1e-9);
    const int k_max = 255 / std::max({1, int{p.r}, int{p.g}, int{p.b}});
    if (k_max < 2) continue;
    const int k = 2 + i % (k_max - 1);
    const auto m = normalize_rgb(Rgba{static_cast<std::uint8_t>(p.r * k), static_cast<std::uint8_t>(p.g * k),
                                      static_cast<std::uint8_t>(p.b * k), 255});
    REQUIRE(std::abs(m.rn - n.rn) < 1e-9);
    REQUIRE(std::abs(m.gn - n.gn) < 1e-9);
    REQUIRE(std::abs(m.bn - n.bn) < 1e-9);
  }
}

TEST_CASE("rgb_to_hsv anchors") {
  const auto red = rgb_to_hsv(Rgba{255, 0, 0, 255});
  CHECK(red.h == 0.0);
  CHECK(red.s == 1.0);
  CHECK(red.v == 1.0);

  const auto black = rgb_to_hsv(Rgba{0, 0, 0, 255});
  CHECK(black.h == 0.0);
  CHECK(black.s == 0.0);
  CHECK(black.v == 0.0);

  const auto skin = rgb_to_hsv(Rgba{200, 150, 120, 255});
  CHECK(std::abs(skin.h - 22.5) < 1e-4);
  CHECK(std::abs(skin.s - 0.4) < 1e-4);
  CHECK(std::abs(skin.v - 0.78431) < 1e-4);

  // One anchor per hexcone sector.
  CHECK(rgb_to_hsv(Rgba{0, 255, 0, 255}).h == 120.0);
  CHECK(rgb_to_hsv(Rgba{0, 0, 255, 255}).h == 240.0);
  CHECK(rgb_to_hsv(Rgba{255, 255, 0, 255}).h == 60.0);
  CHECK(rgb_to_hsv(Rgba{255, 0, 255, 255}).h == 300.0);
}

TEST_CASE("rgb_to_hsv ranges over all RGB values") {
  // Step 3 keeps this fast while still touching every sector.
  for (int r = 0; r < 256; r += 3)
    for (int g = 0; g < 256; g += 3)
      for (int b = 0; b < 256; b += 3) {
        const Rgba p{static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g), static_cast<std::uint8_t>(b), 255};
        const auto hsv = rgb_to_hsv(p);
        REQUIRE(hsv.h >= 0.0);
        REQUIRE(hsv.h < 360.0);
        REQUIRE(hsv.s >= 0.0);
        REQUIRE(hsv.s <= 1.0);
        REQUIRE(hsv.v >= 0.0);
        REQUIRE(hsv.v <= 1.0);
        REQUIRE((hsv.s == 0.0) == (r == g && g == b));
        REQUIRE((hsv.v == 1.0) == (std::max({r, g, b}) == 255));
      }
}

TEST_CASE("rgb_to_ycbcr digital") {
  const auto gray = rgb_to_ycbcr(Rgba{128, 128, 128, 255}, YCbCrMode::kDigital);
  CHECK(std::abs(gray.y - 128.0) < 1e-9);
  CHECK(gray.cb == 128.0);
  CHECK(gray.cr == 128.0);
  CHECK(gray.mode == YCbCrMode::kDigital);

  const auto skin = rgb_to_ycbcr(Rgba{200, 150, 120, 255});
  CHECK(std::abs(skin.y - 161.53) < 0.01);
  CHECK(std::abs(skin.cb - 104.56) < 0.01);
  CHECK(std::abs(skin.cr - 155.44) < 0.01);

  for (int v = 0; v < 256; ++v) {
    const auto c = static_cast<std::uint8_t>(v);
    const auto ycc = rgb_to_ycbcr(Rgba{c, c, c, 255});
    REQUIRE(ycc.cb == 128.0);
    REQUIRE(ycc.cr == 128.0);
    REQUIRE(std::abs(ycc.y - v) < 1e-9);
  }
}

TEST_CASE("digital YCbCr matches the textbook matrix and stays in range") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int i = 0; i < 100000; ++i) {
    const double r = byte(rng), g = byte(rng), b = byte(rng);
    const auto ycc = rgb_to_ycbcr(Rgba{static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                                       static_cast<std::uint8_t>(b), 255});
    REQUIRE(std::abs(ycc.y - (0.299 * r + 0.587 * g + 0.114 * b)) < 1e-9);
    REQUIRE(std::abs(ycc.cb - (128 - 0.168736 * r - 0.331264 * g + 0.5 * b)) < 1e-9);
    REQUIRE(std::abs(ycc.cr - (128 + 0.5 * r - 0.418688 * g - 0.081312 * b)) < 1e-9);
    for (double c : {ycc.y, ycc.cb, ycc.cr}) {
      REQUIRE(c >= 0.0);
      REQUIRE(c <= 255.0);
    }
  }
}

TEST_CASE("rgb_to_ycbcr literal mode") {
  const auto gray = rgb_to_ycbcr(Rgba{100, 100, 100, 255}, YCbCrMode::kLiteral);
  CHECK(std::abs(gray.y - 69.6) < 1e-9);
  CHECK(std::abs(gray.cb - 30.4) < 1e-9);
  CHECK(std::abs(gray.cr - 30.4) < 1e-9);

  const auto skin = rgb_to_ycbcr(Rgba{200, 150, 120, 255}, YCbCrMode::kLiteral);
  CHECK(std::abs(skin.y - 116.05) < 1e-9);
  CHECK(std::abs(skin.cb - 3.95) < 1e-9);
  CHECK(std::abs(skin.cr - 83.95) < 1e-9);

  // Separately coded difference form.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int i = 0; i < 100000; ++i) {
    const int r = byte(rng), g = byte(rng), b = byte(rng);
    const double y = (299.0 * r + 287.0 * g + 110.0 * b) / 1000.0;
    const auto ycc = rgb_to_ycbcr(
        Rgba{static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g), static_cast<std::uint8_t>(b), 255},
        YCbCrMode::kLiteral);
    REQUIRE(std::abs(ycc.y - y) < 1e-9);
    REQUIRE(std::abs(ycc.cr - (r - y)) < 1e-9);
    REQUIRE(std::abs(ycc.cb - (b - y)) < 1e-9);
  }
}
