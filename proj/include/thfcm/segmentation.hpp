#pragma once

#include <array>
#include <cstdint>

#include "thfcm/fcm.hpp"
#include "thfcm/histogram.hpp"
#include "thfcm/image.hpp"

namespace thfcm {

// Lookup table over gray levels: table[g] = 1 when level g is object.
struct GrayLevelMap {
  std::array<std::uint8_t, kGrayLevels> table{};
};

struct SegmentationConfig {
  int cluster_count = 3;
  double fuzzifier = 2.0;
  double tolerance = 1e-6;
  int max_iterations = 300;
  int smoothing_window = 5;
  InitPolicy init_policy = InitPolicy::Quantile;
  std::uint64_t seed = 0;
};

// Everything one pipeline run produces, diagnostics included.
struct SegmentationReport {
  Histogram histogram;
  SmoothedHistogram smoothed;
  FcmModel model;  // fit on the 256 smoothed values
  int discerner_index = 0;
  GrayLevelMap gray_map;
  GrayImage mask;  // values in {0, 255}, object = 255
  SegmentationConfig config;
};

// Index of the cluster holding the histogram peak: the hard label of the bin
// with the largest smoothed frequency (lowest gray level on ties). The model
// must have one label per gray level.
int select_discerner_cluster(const FcmModel& model, const SmoothedHistogram& smoothed);

// table[g] = 1 exactly when model.labels[g] == discerner.
GrayLevelMap build_gray_level_map(const FcmModel& model, int discerner);

// Full pipeline: histogram -> smoothing -> clustering of the frequency curve
// -> discerner selection -> gray-level map -> per-pixel mask. Throws
// DegenerateImage when the image has a single distinct gray value.
SegmentationReport segment(const GrayImage& image, const SegmentationConfig& config);

// Classic single-threshold baseline: mask pixel is 255 exactly when the
// input pixel is strictly above the threshold.
GrayImage apply_global_threshold(const GrayImage& image, int threshold);

// Floor of the arithmetic mean pixel intensity.
int mean_threshold(const GrayImage& image);

}  // namespace thfcm
