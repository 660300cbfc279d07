#include "thfcm/segmentation.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

#include "thfcm/errors.hpp"

namespace thfcm {

namespace {

FcmConfig to_fcm_config(const SegmentationConfig& config) {
  FcmConfig fcm;
  fcm.cluster_count = config.cluster_count;
  fcm.fuzzifier = config.fuzzifier;
  fcm.tolerance = config.tolerance;
  fcm.max_iterations = config.max_iterations;
  fcm.init_policy = config.init_policy;
  fcm.seed = config.seed;
  return fcm;
}

}  // namespace

int select_discerner_cluster(const FcmModel& model, const SmoothedHistogram& smoothed) {
  if (model.labels.size() != static_cast<std::size_t>(kGrayLevels)) {
    throw std::invalid_argument("model must carry one label per gray level");
  }
  int peak = 0;
  for (int g = 1; g < kGrayLevels; ++g) {
    if (smoothed.values[g] > smoothed.values[peak]) {
      peak = g;
    }
  }
  return model.labels[static_cast<std::size_t>(peak)];
}

GrayLevelMap build_gray_level_map(const FcmModel& model, int discerner) {
  if (model.labels.size() != static_cast<std::size_t>(kGrayLevels)) {
    throw std::invalid_argument("model must carry one label per gray level");
  }
  GrayLevelMap map;
  for (int g = 0; g < kGrayLevels; ++g) {
    map.table[g] = model.labels[static_cast<std::size_t>(g)] == discerner ? 1 : 0;
  }
  return map;
}

SegmentationReport segment(const GrayImage& image, const SegmentationConfig& config) {
  SegmentationReport report;
  report.config = config;
  report.histogram = compute_histogram(image);

  int distinct = 0;
  for (const auto count : report.histogram.counts) {
    if (count > 0) ++distinct;
  }
  if (distinct <= 1) {
    throw DegenerateImage("image has a single distinct gray value; no threshold exists");
  }

  report.smoothed = smooth_histogram(report.histogram, config.smoothing_window);
  report.model = fcm_fit(report.smoothed.values, to_fcm_config(config));
  report.discerner_index = select_discerner_cluster(report.model, report.smoothed);
  report.gray_map = build_gray_level_map(report.model, report.discerner_index);

  report.mask.width = image.width;
  report.mask.height = image.height;
  report.mask.pixels.resize(image.pixels.size());
  for (std::size_t p = 0; p < image.pixels.size(); ++p) {
    report.mask.pixels[p] = report.gray_map.table[image.pixels[p]] != 0 ? 255 : 0;
  }
  return report;
}

GrayImage apply_global_threshold(const GrayImage& image, int threshold) {
  if (threshold < 0 || threshold > 255) {
    throw std::invalid_argument("threshold must lie in [0, 255], got " + std::to_string(threshold));
  }
  GrayImage mask;
  mask.width = image.width;
  mask.height = image.height;
  mask.pixels.resize(image.pixels.size());
  for (std::size_t p = 0; p < image.pixels.size(); ++p) {
    mask.pixels[p] = image.pixels[p] > threshold ? 255 : 0;
  }
  return mask;
}

int mean_threshold(const GrayImage& image) {
  if (image.pixels.empty()) {
    throw InvalidImage("cannot take the mean of an empty image");
  }
  std::uint64_t sum = 0;
  for (const std::uint8_t v : image.pixels) {
    sum += v;
  }
  return static_cast<int>(sum / image.pixels.size());
}

}  // namespace thfcm
