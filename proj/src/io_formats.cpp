#include "thfcm/io_formats.hpp"

#include <algorithm>
#include <cctype>
#include <cinttypes>
#include <cstdio>
#include <limits>
#include <string>

#include "thfcm/errors.hpp"

namespace thfcm {

namespace {

bool is_pnm_space(std::uint8_t b) {
  return b == ' ' || b == '\t' || b == '\n' || b == '\r' || b == '\v' || b == '\f';
}

// Cursor over the PGM byte stream; handles whitespace and '#' comments in
// the header/ASCII sections.
class PgmCursor {
 public:
  explicit PgmCursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (is_pnm_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  // Decimal integer token; returns -1 when the stream ends first and -2 on a
  // non-digit.
  long long next_int() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size()) return -1;
    if (!std::isdigit(bytes_[pos_])) return -2;
    long long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) return -2;
      ++pos_;
    }
    return value;
  }

  // The single whitespace byte separating maxval from P5 raster data.
  bool consume_one_space() {
    if (pos_ < bytes_.size() && is_pnm_space(bytes_[pos_])) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }
  bool at_end() {
    skip_space_and_comments();
    return pos_ >= bytes_.size();
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw MalformedHeader("not a P2/P5 PGM stream");
  }
  const bool binary = bytes[1] == '5';

  PgmCursor cursor(bytes.subspan(2));
  const long long width = cursor.next_int();
  const long long height = cursor.next_int();
  const long long maxval = cursor.next_int();
  if (width == -1 || height == -1 || maxval == -1) {
    throw TruncatedData("header ended before width, height and maxval");
  }
  if (width <= 0 || height <= 0 || maxval <= 0) {
    throw MalformedHeader("width, height and maxval must be positive integers");
  }
  if (maxval > 255) {
    throw UnsupportedMaxval("maxval " + std::to_string(maxval) + " exceeds 255");
  }

  const auto pixel_count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<std::uint8_t> pixels;

  if (binary) {
    if (!cursor.consume_one_space()) {
      throw MalformedHeader("missing whitespace between maxval and raster data");
    }
    const auto data = cursor.rest();
    if (data.size() < pixel_count) {
      throw TruncatedData("raster holds " + std::to_string(data.size()) + " bytes, expected " +
                          std::to_string(pixel_count));
    }
    pixels.assign(data.begin(), data.begin() + static_cast<std::ptrdiff_t>(pixel_count));
  } else {
    pixels.reserve(std::min<std::size_t>(pixel_count, bytes.size()));
    for (std::size_t i = 0; i < pixel_count; ++i) {
      const long long sample = cursor.next_int();
      if (sample == -1) {
        throw TruncatedData("raster holds " + std::to_string(i) + " samples, expected " +
                            std::to_string(pixel_count));
      }
      if (sample == -2 || sample > 255) {
        throw MalformedData("sample " + std::to_string(i) + " is not an integer in [0, 255]");
      }
      pixels.push_back(static_cast<std::uint8_t>(sample));
    }
  }

  return GrayImage::make(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& image) {
  const std::string header =
      "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + image.pixels.size());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), image.pixels.begin(), image.pixels.end());
  return out;
}

std::vector<DiagnosticRecord> diagnostic_records(const SegmentationReport& report) {
  std::vector<DiagnosticRecord> rows(kGrayLevels);
  for (int g = 0; g < kGrayLevels; ++g) {
    DiagnosticRecord& row = rows[static_cast<std::size_t>(g)];
    row.gray_level = g;
    row.raw_count = report.histogram.counts[g];
    row.smoothed_value = report.smoothed.values[g];
    row.cluster_label = report.model.labels[static_cast<std::size_t>(g)];
    row.is_discerner = row.cluster_label == report.discerner_index ? 1 : 0;
    row.object_flag = report.gray_map.table[g] != 0 ? 1 : 0;
  }
  return rows;
}

namespace {

constexpr char kCsvHeader[] = "gray_level,raw_count,smoothed_value,cluster_label,is_discerner,object_flag\n";

void append_csv_row(std::string& out, int gray_level, std::uint64_t raw_count, double smoothed_value,
                    int cluster_label, int is_discerner, int object_flag) {
  char line[128];
  std::snprintf(line, sizeof(line), "%d,%" PRIu64 ",%.6f,%d,%d,%d\n", gray_level, raw_count,
                smoothed_value, cluster_label, is_discerner, object_flag);
  out += line;
}

}  // namespace

std::string write_diagnostics_csv(const SegmentationReport& report) {
  std::string out = kCsvHeader;
  for (const DiagnosticRecord& row : diagnostic_records(report)) {
    append_csv_row(out, row.gray_level, row.raw_count, row.smoothed_value, row.cluster_label,
                   row.is_discerner, row.object_flag);
  }
  return out;
}

std::string write_histogram_csv(const Histogram& hist, const SmoothedHistogram& smoothed) {
  std::string out = kCsvHeader;
  for (int g = 0; g < kGrayLevels; ++g) {
    append_csv_row(out, g, hist.counts[g], smoothed.values[g], -1, 0, 0);
  }
  return out;
}

namespace {

// Fixed canvas so output stays byte-stable.
constexpr double kSvgWidth = 1024.0;
constexpr double kSvgHeight = 512.0;
constexpr double kSvgMargin = 32.0;
constexpr double kCircleRadius = 4.0;

double svg_x(int gray_level) {
  return kSvgMargin + gray_level * (kSvgWidth - 2.0 * kSvgMargin) / (kGrayLevels - 1);
}

double svg_y(double value, double max_value) {
  const double bottom = kSvgHeight - kSvgMargin;
  if (max_value <= 0.0) return bottom;
  return bottom - value * (kSvgHeight - 2.0 * kSvgMargin) / max_value;
}

void append_coord(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  out += buf;
}

}  // namespace

std::string write_histogram_svg(const SegmentationReport& report) {
  double max_value = 0.0;
  for (const double v : report.smoothed.values) {
    max_value = std::max(max_value, v);
  }

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 1024 512\" "
         "width=\"1024\" height=\"512\">\n";
  out += "<polyline fill=\"none\" stroke=\"#444444\" stroke-width=\"1.5\" points=\"";
  for (int g = 0; g < kGrayLevels; ++g) {
    if (g > 0) out += ' ';
    append_coord(out, svg_x(g));
    out += ',';
    append_coord(out, svg_y(report.smoothed.values[g], max_value));
  }
  out += "\"/>\n";

  for (int g = 0; g < kGrayLevels; ++g) {
    if (report.gray_map.table[g] == 0) continue;
    out += "<circle cx=\"";
    append_coord(out, svg_x(g));
    out += "\" cy=\"";
    append_coord(out, svg_y(report.smoothed.values[g], max_value));
    out += "\" r=\"";
    append_coord(out, kCircleRadius);
    out += "\" fill=\"none\" stroke=\"#cc3333\" stroke-width=\"1.5\"/>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace thfcm
