#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "skinmask/image.hpp"
#include "skinmask/threshold_config.hpp"

namespace skinmask::cli {

enum class ReportFormat { kCsv, kJson };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kConfigEnvVar = "SKINMASK_CONFIG";

/// Fully resolved settings for one invocation. `sources` records, per
/// top-level key, where the value came from: "default", "env-file",
/// "config-file" or "flag".
struct RunConfig {
  ThresholdConfig thresholds;
  double gt_threshold = kDefaultGtThreshold;
  std::string out_dir = ".";
  ReportFormat format = ReportFormat::kCsv;
  std::size_t workers = 1;
  bool overlay = false;
  std::map<std::string, std::string> sources;
};

/// Values gathered from the command line; unset options stay empty.
struct FlagOverrides {
  std::optional<std::string> config_path;
  std::optional<std::string> ycbcr_mode;
  std::optional<double> gt_threshold;
  std::optional<std::string> out_dir;
  std::optional<std::string> format;
  std::optional<std::size_t> workers;
  bool overlay = false;
  // "key=value" pairs, value parsed as JSON.
  std::vector<std::string> thresholds;
};

/// Merges defaults <- config file <- flags. The config file is the
/// --config path if given, else the file named by SKINMASK_CONFIG.
/// Throws Error(kInvalidConfig) or Error(kNotFound).
RunConfig resolve_config(const FlagOverrides& flags);

nlohmann::json config_to_json(const RunConfig& cfg);

/// Image/ground-truth pair for batch runs.
struct ImagePair {
  std::string id;
  std::string image_path;
  std::string gt_path;
};

/// Pairs files by filename stem; images without a partner are returned in
/// `unpaired`. Result is sorted by image filename.
std::vector<ImagePair> pair_by_stem(const std::string& image_dir, const std::string& gt_dir,
                                    std::vector<std::string>& unpaired);

/// Manifest: one "image_path,gt_path" per line; blank lines and lines
/// starting with '#' are skipped. Relative paths resolve against the
/// manifest's directory.
std::vector<ImagePair> read_manifest(const std::string& path);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skinmask::cli
