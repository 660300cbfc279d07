#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "thfcm/errors.hpp"
#include "thfcm/image.hpp"
#include "thfcm/io_formats.hpp"
#include "thfcm/segmentation.hpp"

using thfcm::GrayImage;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& text) {
  return std::vector<std::uint8_t>(text.begin(), text.end());
}

std::vector<std::uint8_t> with_raster(const std::string& header, std::initializer_list<int> data) {
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (const int b : data) out.push_back(static_cast<std::uint8_t>(b));
  return out;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

thfcm::SegmentationReport report_for(const GrayImage& image) {
  return thfcm::segment(image, thfcm::SegmentationConfig{});
}

}  // namespace

TEST_CASE("minimal binary and ascii images decode") {
  const GrayImage p5 = thfcm::read_pgm(with_raster("P5\n2 2\n255\n", {0, 0, 0, 0}));
  CHECK(p5.width == 2);
  CHECK(p5.height == 2);
  CHECK(std::all_of(p5.pixels.begin(), p5.pixels.end(), [](std::uint8_t b) { return b == 0; }));

  const GrayImage p2 = thfcm::read_pgm(bytes_of("P2\n1 1\n255\n128\n"));
  CHECK(p2.width == 1);
  CHECK(p2.height == 1);
  CHECK(p2.pixels[0] == 128);
}

TEST_CASE("header comments are skipped") {
  const GrayImage image =
      thfcm::read_pgm(with_raster("P5\n# remark\n2 2\n# another remark\n255\n", {9, 8, 7, 6}));
  CHECK(image.pixels == std::vector<std::uint8_t>{9, 8, 7, 6});

  const GrayImage ascii = thfcm::read_pgm(bytes_of("P2\n# c\n1 2\n255\n# mid-data comment\n3\n4\n"));
  CHECK(ascii.pixels == std::vector<std::uint8_t>{3, 4});
}

TEST_CASE("binary raster bytes are taken verbatim") {
  // first data byte is '#': data, not a comment
  const GrayImage image = thfcm::read_pgm(with_raster("P5\n1 1\n255\n", {0x23}));
  CHECK(image.pixels[0] == 0x23);
}

TEST_CASE("malformed streams are rejected with specific errors") {
  CHECK_THROWS_AS(thfcm::read_pgm(bytes_of("hello")), thfcm::MalformedHeader);
  CHECK_THROWS_AS(thfcm::read_pgm(bytes_of("P6\n1 1\n255\nxxx")), thfcm::MalformedHeader);
  CHECK_THROWS_AS(thfcm::read_pgm(bytes_of("P5\n0 1\n255\n")), thfcm::MalformedHeader);
  CHECK_THROWS_AS(thfcm::read_pgm(bytes_of("P5\n1 1\n")), thfcm::TruncatedData);
  CHECK_THROWS_AS(thfcm::read_pgm(bytes_of("P5\n1 1\n255")), thfcm::MalformedHeader);
  CHECK_THROWS_AS(thfcm::read_pgm(bytes_of("P5\n1 1\n65535\n")), thfcm::UnsupportedMaxval);
  CHECK_THROWS_AS(thfcm::read_pgm(with_raster("P5\n2 2\n255\n", {1, 2, 3})), thfcm::TruncatedData);
  CHECK_THROWS_AS(thfcm::read_pgm(bytes_of("P2\n2 1\n255\n7\n")), thfcm::TruncatedData);
  CHECK_THROWS_AS(thfcm::read_pgm(bytes_of("P2\n1 1\n255\n300\n")), thfcm::MalformedData);
  CHECK_THROWS_AS(thfcm::read_pgm(bytes_of("P2\n1 1\n255\nabc\n")), thfcm::MalformedData);
}

TEST_CASE("encoder emits the exact minimal golden bytes") {
  const std::vector<std::uint8_t> out = thfcm::write_pgm(GrayImage::make(1, 1, {0}));
  const std::vector<std::uint8_t> golden = with_raster("P5\n1 1\n255\n", {0});
  CHECK(out == golden);
  CHECK(out.size() == 12);
}

TEST_CASE("encode/decode round-trips preserve every image") {
  test_support::Rng rng(515);
  for (int round = 0; round < 200; ++round) {
    const int width = 1 + static_cast<int>(rng.below(20));
    const int height = 1 + static_cast<int>(rng.below(20));
    std::vector<std::uint8_t> pixels(static_cast<std::size_t>(width) * height);
    for (auto& p : pixels) p = static_cast<std::uint8_t>(rng.below(256));
    const GrayImage image = GrayImage::make(width, height, pixels);
    CHECK(thfcm::read_pgm(thfcm::write_pgm(image)) == image);
  }
  // extreme values round-trip too
  const GrayImage extremes = GrayImage::make(2, 1, {0, 255});
  CHECK(thfcm::read_pgm(thfcm::write_pgm(extremes)) == extremes);
}

TEST_CASE("diagnostics rows mirror the report") {
  const auto report = report_for(test_support::two_value_image(64, 64, 60, 64 * 48, 190));
  const auto rows = thfcm::diagnostic_records(report);
  REQUIRE(rows.size() == 256);
  for (int g = 0; g < 256; ++g) {
    const auto& row = rows[static_cast<std::size_t>(g)];
    CHECK(row.gray_level == g);
    CHECK(row.raw_count == report.histogram.counts[g]);
    CHECK(row.smoothed_value == report.smoothed.values[g]);
    CHECK(row.cluster_label == report.model.labels[static_cast<std::size_t>(g)]);
    CHECK(row.object_flag == row.is_discerner);
  }
}

TEST_CASE("diagnostics CSV has the contracted shape") {
  const auto report = report_for(test_support::two_value_image(64, 64, 60, 64 * 48, 190));
  const std::string csv = thfcm::write_diagnostics_csv(report);
  const auto lines = split_lines(csv);
  REQUIRE(lines.size() == 257);
  CHECK(lines[0] == "gray_level,raw_count,smoothed_value,cluster_label,is_discerner,object_flag");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    CHECK(std::count(lines[i].begin(), lines[i].end(), ',') == 5);
  }
  // 64*48 = 3072 pixels of value 60; plateau value 3072/5 printed at 6 decimals
  CHECK(lines[61].substr(0, 15) == "60,3072,614.400");
}

TEST_CASE("constant smoothed histogram renders constant CSV values") {
  const auto report = report_for(test_support::uniform_histogram_image(4));
  const std::string csv = thfcm::write_diagnostics_csv(report);
  const auto lines = split_lines(csv);
  REQUIRE(lines.size() == 257);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto first = lines[i].find(',');
    const auto second = lines[i].find(',', first + 1);
    const auto third = lines[i].find(',', second + 1);
    CHECK(lines[i].substr(second + 1, third - second - 1) == "4.000000");
  }
}

TEST_CASE("histogram-only CSV uses sentinel cluster columns") {
  const GrayImage image = test_support::two_value_image(8, 8, 10, 32, 200);
  const thfcm::Histogram hist = thfcm::compute_histogram(image);
  const std::string csv = thfcm::write_histogram_csv(hist, thfcm::smooth_histogram(hist, 5));
  const auto lines = split_lines(csv);
  REQUIRE(lines.size() == 257);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    REQUIRE(lines[i].size() >= 6);
    CHECK(lines[i].substr(lines[i].size() - 6) == "-1,0,0");
  }
}

TEST_CASE("SVG marks exactly the object gray levels") {
  const auto report = report_for(test_support::two_value_image(64, 64, 60, 64 * 48, 190));
  const std::string svg = thfcm::write_histogram_svg(report);

  int object_bins = 0;
  for (const auto flag : report.gray_map.table) object_bins += flag;

  std::size_t circles = 0;
  for (std::size_t pos = svg.find("<circle"); pos != std::string::npos;
       pos = svg.find("<circle", pos + 1)) {
    ++circles;
  }
  CHECK(circles == static_cast<std::size_t>(object_bins));
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("viewBox=\"0 0 1024 512\"") != std::string::npos);
}

TEST_CASE("SVG of an all-object report holds 256 circles") {
  const auto report = report_for(test_support::uniform_histogram_image(4));
  int object_bins = 0;
  for (const auto flag : report.gray_map.table) object_bins += flag;
  REQUIRE(object_bins == 256);

  const std::string svg = thfcm::write_histogram_svg(report);
  std::size_t circles = 0;
  for (std::size_t pos = svg.find("<circle"); pos != std::string::npos;
       pos = svg.find("<circle", pos + 1)) {
    ++circles;
  }
  CHECK(circles == 256);
}

TEST_CASE("the peak bin's circle touches the top margin") {
  const auto report = report_for(test_support::two_value_image(64, 64, 60, 64 * 48, 190));
  const std::string svg = thfcm::write_histogram_svg(report);

  std::vector<double> cys;
  for (std::size_t pos = svg.find("cy=\""); pos != std::string::npos;
       pos = svg.find("cy=\"", pos + 1)) {
    cys.push_back(std::stod(svg.substr(pos + 4)));
  }
  REQUIRE_FALSE(cys.empty());
  const double min_cy = *std::min_element(cys.begin(), cys.end());
  CHECK(min_cy == doctest::Approx(32.0).epsilon(1e-9));
}

TEST_CASE("emitters are deterministic") {
  const GrayImage image = test_support::bimodal_image(64, 64, 64 * 64 * 85 / 100, 21);
  const auto a = report_for(image);
  const auto b = report_for(image);
  CHECK(thfcm::write_diagnostics_csv(a) == thfcm::write_diagnostics_csv(b));
  CHECK(thfcm::write_histogram_svg(a) == thfcm::write_histogram_svg(b));
  CHECK(thfcm::write_pgm(a.mask) == thfcm::write_pgm(b.mask));
}
