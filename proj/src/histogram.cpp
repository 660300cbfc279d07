#include "thfcm/histogram.hpp"

#include <string>

#include "thfcm/errors.hpp"

namespace thfcm {

Histogram compute_histogram(const GrayImage& image) {
  Histogram hist;
  for (const std::uint8_t v : image.pixels) {
    ++hist.counts[v];
  }
  return hist;
}

namespace {

// Half-sample reflection at the bin range edges: -1 -> 0, -2 -> 1,
// 256 -> 255, 257 -> 254. Folding taps back inside keeps the box filter's
// column sums at one, so total mass is preserved.
int reflect_bin(int i) {
  if (i < 0) return -i - 1;
  if (i >= kGrayLevels) return 2 * kGrayLevels - 1 - i;
  return i;
}

}  // namespace

SmoothedHistogram smooth_histogram(const Histogram& hist, int window) {
  if (window % 2 == 0) {
    throw EvenWindow("smoothing window must be odd, got " + std::to_string(window));
  }
  if (window < 1 || window > 255) {
    throw WindowOutOfRange("smoothing window must lie in [1, 255], got " + std::to_string(window));
  }

  SmoothedHistogram out;
  if (window == 1) {
    for (int g = 0; g < kGrayLevels; ++g) {
      out.values[g] = static_cast<double>(hist.counts[g]);
    }
    return out;
  }

  const int half = window / 2;
  for (int g = 0; g < kGrayLevels; ++g) {
    double sum = 0.0;
    for (int k = g - half; k <= g + half; ++k) {
      sum += static_cast<double>(hist.counts[reflect_bin(k)]);
    }
    out.values[g] = sum / window;
  }
  return out;
}

}  // namespace thfcm
