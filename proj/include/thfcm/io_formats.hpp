#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "thfcm/histogram.hpp"
#include "thfcm/image.hpp"
#include "thfcm/segmentation.hpp"

namespace thfcm {

// One diagnostics row per gray level.
struct DiagnosticRecord {
  int gray_level = 0;
  std::uint64_t raw_count = 0;
  double smoothed_value = 0.0;
  int cluster_label = 0;
  int is_discerner = 0;
  int object_flag = 0;
};

// Decodes a binary (P5) or ASCII (P2) PGM with maxval <= 255. Header
// comments (#) are honored. Throws MalformedHeader, TruncatedData,
// UnsupportedMaxval, or MalformedData.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

// Encodes as binary PGM: "P5\n<w> <h>\n255\n" followed by raw pixel bytes.
// read_pgm(write_pgm(img)) == img.
std::vector<std::uint8_t> write_pgm(const GrayImage& image);

std::vector<DiagnosticRecord> diagnostic_records(const SegmentationReport& report);

// CSV with header gray_level,raw_count,smoothed_value,cluster_label,
// is_discerner,object_flag and one row per gray level; smoothed values keep
// six decimals.
std::string write_diagnostics_csv(const SegmentationReport& report);

// Same column layout without clustering: labels are the -1 sentinel, flags 0.
std::string write_histogram_csv(const Histogram& hist, const SmoothedHistogram& smoothed);

// Standalone SVG: the smoothed curve as a polyline on a fixed 1024x512
// canvas with 32-unit margins, plus one radius-4 circle on the curve at each
// discerner-cluster bin. Byte-identical output for identical reports.
std::string write_histogram_svg(const SegmentationReport& report);

}  // namespace thfcm
