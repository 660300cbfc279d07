// thfcm command line tool: histogram-based fuzzy c-means segmentation for
// 8-bit grayscale PGM images, plus a plain global-threshold mode and a
// histogram dump for inspection.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "thfcm/errors.hpp"
#include "thfcm/io_formats.hpp"
#include "thfcm/segmentation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitDegenerate = 3;

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::ios_base::failure("cannot open " + path);
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw std::ios_base::failure("error while reading " + path);
  }
  return bytes;
}

// Collects output files and writes them in one shot: every file goes to a
// .tmp sibling first and the renames happen only after all writes succeed,
// so a failure never leaves a partial mix of old and new outputs.
class OutputStage {
 public:
  void add(std::string path, std::string bytes) {
    files_.emplace_back(std::move(path), std::move(bytes));
  }

  void add(std::string path, const std::vector<std::uint8_t>& bytes) {
    add(std::move(path), std::string(bytes.begin(), bytes.end()));
  }

  void commit() {
    std::vector<std::filesystem::path> temps;
    try {
      for (const auto& [path, bytes] : files_) {
        std::filesystem::path temp = path + ".tmp";
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) {
          throw std::ios_base::failure("cannot open " + temp.string() + " for writing");
        }
        temps.push_back(temp);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.close();
        if (!out) {
          throw std::ios_base::failure("error while writing " + temp.string());
        }
      }
      for (std::size_t i = 0; i < files_.size(); ++i) {
        std::filesystem::rename(temps[i], files_[i].first);
      }
    } catch (...) {
      std::error_code ignored;
      for (const auto& temp : temps) {
        std::filesystem::remove(temp, ignored);
      }
      throw;
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> files_;
};

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string config_sidecar(const thfcm::SegmentationConfig& config) {
  std::string out;
  out += "window=" + std::to_string(config.smoothing_window) + "\n";
  out += "clusters=" + std::to_string(config.cluster_count) + "\n";
  out += "fuzzifier=" + format_number(config.fuzzifier) + "\n";
  out += "tolerance=" + format_number(config.tolerance) + "\n";
  out += "max_iterations=" + std::to_string(config.max_iterations) + "\n";
  out += std::string("init=") +
         (config.init_policy == thfcm::InitPolicy::Quantile ? "quantile" : "random") + "\n";
  out += "seed=" + std::to_string(config.seed) + "\n";
  return out;
}

struct SegmentArgs {
  std::string input;
  std::string mask_path;
  std::string csv_path;
  std::string svg_path;
  thfcm::SegmentationConfig config;
  std::string init_name = "quantile";
};

int run_segment(const SegmentArgs& args) {
  if (args.mask_path.empty() && args.csv_path.empty() && args.svg_path.empty()) {
    std::cerr << "segment: no outputs requested; pass -o, --csv or --svg\n";
    return kExitUsage;
  }

  thfcm::SegmentationConfig config = args.config;
  config.init_policy =
      args.init_name == "random" ? thfcm::InitPolicy::SeededRandom : thfcm::InitPolicy::Quantile;

  const thfcm::GrayImage image = thfcm::read_pgm(read_file(args.input));
  const thfcm::SegmentationReport report = thfcm::segment(image, config);

  OutputStage stage;
  if (!args.mask_path.empty()) {
    stage.add(args.mask_path, thfcm::write_pgm(report.mask));
  }
  if (!args.csv_path.empty()) {
    stage.add(args.csv_path, thfcm::write_diagnostics_csv(report));
    stage.add(args.csv_path + ".config", config_sidecar(report.config));
  }
  if (!args.svg_path.empty()) {
    stage.add(args.svg_path, thfcm::write_histogram_svg(report));
  }
  stage.commit();

  int object_levels = 0;
  for (const std::uint8_t flag : report.gray_map.table) {
    if (flag != 0) ++object_levels;
  }
  std::cout << "discerner cluster " << report.discerner_index << "; " << object_levels
            << " object gray levels; " << report.model.iterations_run << " iterations"
            << (report.model.converged ? "" : "; not converged") << "\n";
  return kExitOk;
}

struct ThresholdArgs {
  std::string input;
  std::string mask_path;
  std::string threshold = "mean";
};

int run_threshold(const ThresholdArgs& args) {
  const thfcm::GrayImage image = thfcm::read_pgm(read_file(args.input));

  int threshold = 0;
  if (args.threshold == "mean") {
    threshold = thfcm::mean_threshold(image);
  } else {
    try {
      std::size_t used = 0;
      threshold = std::stoi(args.threshold, &used);
      if (used != args.threshold.size()) throw std::invalid_argument(args.threshold);
    } catch (const std::exception&) {
      std::cerr << "threshold: --t expects an integer in [0, 255] or \"mean\", got \""
                << args.threshold << "\"\n";
      return kExitUsage;
    }
    if (threshold < 0 || threshold > 255) {
      std::cerr << "threshold: --t value " << threshold << " is outside [0, 255]\n";
      return kExitUsage;
    }
  }

  OutputStage stage;
  stage.add(args.mask_path, thfcm::write_pgm(thfcm::apply_global_threshold(image, threshold)));
  stage.commit();

  std::cout << "threshold " << threshold << "\n";
  return kExitOk;
}

struct HistogramArgs {
  std::string input;
  std::string csv_path;
  int window = 5;
};

int run_histogram(const HistogramArgs& args) {
  const thfcm::GrayImage image = thfcm::read_pgm(read_file(args.input));
  const thfcm::Histogram hist = thfcm::compute_histogram(image);
  const thfcm::SmoothedHistogram smoothed = thfcm::smooth_histogram(hist, args.window);

  OutputStage stage;
  stage.add(args.csv_path, thfcm::write_histogram_csv(hist, smoothed));
  stage.add(args.csv_path + ".config", "window=" + std::to_string(args.window) + "\n");
  stage.commit();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"histogram-based fuzzy c-means segmentation for 8-bit PGM images"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "thfcm 1.0.0");

  SegmentArgs seg;
  CLI::App* segment = app.add_subcommand("segment", "segment an image into object and background");
  segment->add_option("input", seg.input, "input PGM image (P2 or P5)")->required();
  segment->add_option("-o,--output", seg.mask_path, "output mask PGM (object pixels are 255)");
  segment->add_option("--csv", seg.csv_path, "per-gray-level diagnostics CSV");
  segment->add_option("--svg", seg.svg_path, "smoothed histogram plot with object levels marked");
  segment->add_option("--clusters", seg.config.cluster_count, "number of clusters")->capture_default_str();
  segment->add_option("--fuzzifier", seg.config.fuzzifier, "fuzziness exponent, must be > 1")->capture_default_str();
  segment->add_option("--tol", seg.config.tolerance, "convergence tolerance on center movement")->capture_default_str();
  segment->add_option("--max-iter", seg.config.max_iterations, "iteration cap")->capture_default_str();
  segment->add_option("--window", seg.config.smoothing_window,
                      "histogram smoothing window (odd, 1..255)")->capture_default_str();
  segment->add_option("--init", seg.init_name, "center initialization")->capture_default_str()
      ->check(CLI::IsMember({"quantile", "random"}));
  segment->add_option("--seed", seg.config.seed, "seed for --init random")->capture_default_str();

  ThresholdArgs thr;
  CLI::App* threshold = app.add_subcommand("threshold", "binarize with a single global threshold");
  threshold->add_option("input", thr.input, "input PGM image (P2 or P5)")->required();
  threshold->add_option("-o,--output", thr.mask_path, "output mask PGM")->required();
  threshold->add_option("--t", thr.threshold, "threshold value in [0, 255], or \"mean\"")->capture_default_str();

  HistogramArgs histo;
  CLI::App* histogram = app.add_subcommand("histogram", "dump raw and smoothed histogram as CSV");
  histogram->add_option("input", histo.input, "input PGM image (P2 or P5)")->required();
  histogram->add_option("-o,--output", histo.csv_path, "output CSV path")->required();
  histogram->add_option("--window", histo.window, "histogram smoothing window (odd, 1..255)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (segment->parsed()) return run_segment(seg);
    if (threshold->parsed()) return run_threshold(thr);
    return run_histogram(histo);
  } catch (const thfcm::DegenerateImage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const thfcm::PgmError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const thfcm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
