#pragma once

#include <array>
#include <cstdint>
#include <numeric>

#include "thfcm/image.hpp"

namespace thfcm {

inline constexpr int kGrayLevels = 256;

// 256-bin intensity histogram: counts[g] = number of pixels with value g.
struct Histogram {
  std::array<std::uint64_t, kGrayLevels> counts{};

  std::uint64_t total() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  }
};

// Real-valued smoothed counterpart of a Histogram; the frequency curve that
// gets clustered.
struct SmoothedHistogram {
  std::array<double, kGrayLevels> values{};

  double total() const { return std::accumulate(values.begin(), values.end(), 0.0); }
};

Histogram compute_histogram(const GrayImage& image);

// Centered moving average of the bin counts. The window must be odd and in
// [1, 255]; window 1 returns the counts unchanged. Out-of-range taps fold
// back inside with half-sample symmetry (-1 -> 0, 256 -> 255), which keeps
// the filter mass-preserving for every window, edge peaks included.
SmoothedHistogram smooth_histogram(const Histogram& hist, int window);

}  // namespace thfcm
