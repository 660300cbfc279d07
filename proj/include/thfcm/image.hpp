#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "thfcm/errors.hpp"

namespace thfcm {

// 8-bit single-channel raster, row-major.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // size == width * height

  std::size_t pixel_count() const { return pixels.size(); }

  std::uint8_t at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)];
  }

  // Validating factory; throws InvalidImage on a dimension/size mismatch.
  static GrayImage make(int width, int height, std::vector<std::uint8_t> pixels) {
    if (width <= 0 || height <= 0) {
      throw InvalidImage("image dimensions must be positive, got " + std::to_string(width) + "x" +
                         std::to_string(height));
    }
    const auto expected = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (pixels.size() != expected) {
      throw InvalidImage("pixel buffer holds " + std::to_string(pixels.size()) + " values, expected " +
                         std::to_string(expected));
    }
    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels = std::move(pixels);
    return img;
  }
};

inline bool operator==(const GrayImage& a, const GrayImage& b) {
  return a.width == b.width && a.height == b.height && a.pixels == b.pixels;
}

}  // namespace thfcm
