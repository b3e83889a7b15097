#include "skinmask/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "skinmask/classifier.hpp"
#include "skinmask/error.hpp"
#include "skinmask/evaluation.hpp"
#include "skinmask/report.hpp"

namespace skinmask::cli {

namespace fs = std::filesystem;

namespace {

// Keys of the config document that belong to the run rather than to the
// threshold rule.
constexpr const char* kRunKeys[] = {"gt_threshold", "out", "format", "workers", "overlay"};

constexpr Rgba kOverlayHighlight{255, 0, 255, 255};

ReportFormat parse_format(const std::string& text) {
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "json") return ReportFormat::kJson;
  throw Error(ErrorCode::kInvalidConfig, "format must be \"csv\" or \"json\", got \"" + text + "\"");
}

std::string format_name(ReportFormat f) { return f == ReportFormat::kCsv ? "csv" : "json"; }

void check_gt_threshold(double v) {
  if (v < 0.0 || v > 255.0) throw Error(ErrorCode::kInvalidConfig, "gt threshold must lie in [0, 255]");
}

void check_workers(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidConfig, "worker count must be at least 1");
}

void apply_document(RunConfig& cfg, nlohmann::json doc, const std::string& source) {
  if (!doc.is_object()) throw Error(ErrorCode::kInvalidConfig, "config must be a JSON object");
  try {
    if (auto it = doc.find("gt_threshold"); it != doc.end()) {
      cfg.gt_threshold = it->get<double>();
      check_gt_threshold(cfg.gt_threshold);
    }
    if (auto it = doc.find("out"); it != doc.end()) cfg.out_dir = it->get<std::string>();
    if (auto it = doc.find("format"); it != doc.end()) cfg.format = parse_format(it->get<std::string>());
    if (auto it = doc.find("workers"); it != doc.end()) {
      cfg.workers = it->get<std::size_t>();
      check_workers(cfg.workers);
    }
    if (auto it = doc.find("overlay"); it != doc.end()) cfg.overlay = it->get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig, std::string("bad run setting: ") + e.what());
  }
  for (const char* key : kRunKeys) {
    if (doc.contains(key)) {
      cfg.sources[key] = source;
      doc.erase(key);
    }
  }
  cfg.thresholds = merge_config(cfg.thresholds, doc);
  for (const auto& [key, _] : doc.items()) cfg.sources[key] = source;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot open config file " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kInvalidConfig, "malformed config file " + path + ": " + e.what());
  }
}

bool is_image_file(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

std::vector<fs::path> list_images(const std::string& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(ErrorCode::kNotFound, dir + ": no such directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && is_image_file(entry.path())) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  return files;
}

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoWrite, dir.string() + ": " + ec.message());
}

struct Invocation {
  FlagOverrides flags;
  bool print_config = false;
};

void add_shared_flags(CLI::App& cmd, Invocation& inv) {
  auto& f = inv.flags;
  cmd.add_option("--config", f.config_path, "Threshold/run config JSON file");
  cmd.add_option("--ycbcr-mode", f.ycbcr_mode, "YCbCr conversion: digital | paper-literal")
      ->check(CLI::IsMember({"digital", "paper-literal"}));
  cmd.add_option("--gt-threshold", f.gt_threshold, "Ground-truth luma threshold (0-255)")
      ->check(CLI::Range(0.0, 255.0));
  cmd.add_option("--out", f.out_dir, "Output directory");
  cmd.add_option("--format", f.format, "Report format: csv | json")->check(CLI::IsMember({"csv", "json"}));
  cmd.add_option("--workers", f.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd.add_flag("--overlay", f.overlay, "Also write an overlay PNG");
  cmd.add_option("--threshold", f.thresholds, "Threshold override key=value (repeatable)");
  cmd.add_flag("--print-config", inv.print_config, "Print the resolved configuration and exit");
}

// Mask/overlay paths for one input.
fs::path mask_path(const RunConfig& cfg, const std::string& input) {
  return fs::path(cfg.out_dir) / (stem_of(input) + "_mask.png");
}

int cmd_detect(const RunConfig& cfg, const std::string& input, std::ostream& out) {
  const ImageBuffer img = load_image(input);
  const Classification result = classify_image(img, cfg.thresholds, cfg.workers);
  ensure_dir(cfg.out_dir);
  const fs::path mpath = mask_path(cfg, input);
  write_mask(result.mask, mpath.string());
  std::optional<fs::path> opath;
  if (cfg.overlay) {
    opath = fs::path(cfg.out_dir) / (stem_of(input) + "_overlay.png");
    write_image(overlay(img, result.mask, kOverlayHighlight), opath->string());
  }
  if (cfg.format == ReportFormat::kJson) {
    nlohmann::json j{{"image", input}, {"mask", mpath.string()}, {"counts", stats_to_json(result.stats)}};
    if (opath) j["overlay"] = opath->string();
    out << j.dump(2) << '\n';
  } else {
    out << "image," << input << '\n' << "mask," << mpath.string() << '\n';
    if (opath) out << "overlay," << opath->string() << '\n';
    write_stats_csv(out, result.stats);
  }
  return kExitOk;
}

MetricsRow evaluate_pair(const RunConfig& cfg, const ImagePair& pair, std::size_t workers,
                         Mask* mask_out) {
  const ImageBuffer img = load_image(pair.image_path);
  const ImageBuffer gt_img = load_image(pair.gt_path);
  if (!same_shape(img, gt_img)) {
    throw Error(ErrorCode::kDimensionMismatch,
                pair.image_path + " is " + std::to_string(img.width()) + "x" + std::to_string(img.height()) +
                    " but " + pair.gt_path + " is " + std::to_string(gt_img.width()) + "x" +
                    std::to_string(gt_img.height()));
  }
  Classification result = classify_image(img, cfg.thresholds, workers);
  const Mask gt = binarize_ground_truth(gt_img, cfg.gt_threshold);
  MetricsRow row = evaluate(pair.id, result.mask, gt, result.stats);
  if (mask_out) *mask_out = std::move(result.mask);
  return row;
}

int cmd_eval(const RunConfig& cfg, const std::string& input, const std::string& gt_path, std::ostream& out) {
  const ImagePair pair{stem_of(input), input, gt_path};
  const MetricsRow row = evaluate_pair(cfg, pair, cfg.workers, nullptr);
  if (cfg.format == ReportFormat::kJson) {
    out << row_to_json(1, row).dump(2) << '\n';
  } else {
    write_csv_header(out);
    write_csv_row(out, 1, row);
  }
  return kExitOk;
}

int cmd_batch(const RunConfig& cfg, const std::string& image_dir, const std::string& gt_dir,
              const std::string& manifest, std::ostream& out, std::ostream& err) {
  std::vector<ImagePair> pairs;
  if (!manifest.empty()) {
    pairs = read_manifest(manifest);
  } else {
    std::vector<std::string> unpaired;
    pairs = pair_by_stem(image_dir, gt_dir, unpaired);
    for (const auto& name : unpaired) err << "warning: no ground truth for " << name << ", skipped\n";
  }
  if (pairs.empty()) {
    err << "error: no image/ground-truth pairs found\n";
    return kExitFailure;
  }

  const fs::path mask_dir = fs::path(cfg.out_dir) / "masks";
  ensure_dir(mask_dir);

  // Per-pair slots keep the output order independent of scheduling.
  std::vector<std::optional<MetricsRow>> rows(pairs.size());
  std::vector<std::string> failures(pairs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      try {
        Mask mask;
        rows[i] = evaluate_pair(cfg, pairs[i], 1, &mask);
        write_mask(mask, (mask_dir / (pairs[i].id + ".png")).string());
      } catch (const std::exception& e) {
        rows[i].reset();
        failures[i] = e.what();
      }
    }
  };
  {
    const std::size_t n = std::min(cfg.workers, pairs.size());
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < n; ++w) pool.emplace_back(work);
    work();
  }

  std::vector<MetricsRow> done;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (rows[i]) {
      done.push_back(std::move(*rows[i]));
    } else {
      err << "warning: " << pairs[i].id << " skipped: " << failures[i] << '\n';
    }
  }
  if (done.empty()) {
    err << "error: no pair could be processed\n";
    return kExitFailure;
  }

  const Summary summary = aggregate(done);
  const bool json = cfg.format == ReportFormat::kJson;
  const fs::path report = fs::path(cfg.out_dir) / (json ? "report.json" : "report.csv");
  std::ofstream file(report, std::ios::binary);
  if (json) {
    file << summary_to_json(summary).dump(2) << '\n';
  } else {
    write_csv(file, summary);
  }
  if (!file) throw Error(ErrorCode::kIoWrite, report.string() + ": write failed");
  out << "report: " << report.string() << '\n' << summary_line(summary) << '\n';
  return kExitOk;
}

int cmd_stats(const RunConfig& cfg, const std::string& input, std::ostream& out) {
  const ImageBuffer img = load_image(input);
  const Classification result = classify_image(img, cfg.thresholds, cfg.workers);
  if (cfg.format == ReportFormat::kJson) {
    out << stats_to_json(result.stats).dump(2) << '\n';
  } else {
    write_stats_csv(out, result.stats);
  }
  return kExitOk;
}

}  // namespace

RunConfig resolve_config(const FlagOverrides& flags) {
  RunConfig cfg;
  nlohmann::json defaults = cfg.thresholds;
  for (const auto& [key, _] : defaults.items()) cfg.sources[key] = "default";
  for (const char* key : kRunKeys) cfg.sources[key] = "default";

  if (flags.config_path) {
    apply_document(cfg, read_json_file(*flags.config_path), "config-file");
  } else if (const char* env = std::getenv(kConfigEnvVar); env && *env) {
    apply_document(cfg, read_json_file(env), "env-file");
  }

  nlohmann::json doc = nlohmann::json::object();
  for (const auto& kv : flags.thresholds) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::kInvalidConfig, "threshold override must be key=value, got \"" + kv + "\"");
    }
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    try {
      doc[key] = nlohmann::json::parse(value);
    } catch (const nlohmann::json::parse_error&) {
      doc[key] = value;
    }
  }
  if (flags.ycbcr_mode) doc["ycbcr_mode"] = *flags.ycbcr_mode;
  if (flags.gt_threshold) doc["gt_threshold"] = *flags.gt_threshold;
  if (flags.out_dir) doc["out"] = *flags.out_dir;
  if (flags.format) doc["format"] = *flags.format;
  if (flags.workers) doc["workers"] = *flags.workers;
  if (flags.overlay) doc["overlay"] = true;
  apply_document(cfg, std::move(doc), "flag");
  return cfg;
}

nlohmann::json config_to_json(const RunConfig& cfg) {
  nlohmann::json j = cfg.thresholds;
  j["gt_threshold"] = cfg.gt_threshold;
  j["out"] = cfg.out_dir;
  j["format"] = format_name(cfg.format);
  j["workers"] = cfg.workers;
  j["overlay"] = cfg.overlay;
  j["sources"] = cfg.sources;
  return j;
}

std::vector<ImagePair> pair_by_stem(const std::string& image_dir, const std::string& gt_dir,
                                    std::vector<std::string>& unpaired) {
  std::map<std::string, fs::path> gt_by_stem;
  for (const auto& p : list_images(gt_dir)) gt_by_stem.emplace(p.stem().string(), p);

  std::vector<ImagePair> pairs;
  for (const auto& p : list_images(image_dir)) {
    const std::string stem = p.stem().string();
    if (auto it = gt_by_stem.find(stem); it != gt_by_stem.end()) {
      pairs.push_back({stem, p.string(), it->second.string()});
    } else {
      unpaired.push_back(p.filename().string());
    }
  }
  return pairs;
}

std::vector<ImagePair> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot open manifest " + path);
  const fs::path base = fs::path(path).parent_path();
  auto resolve = [&](std::string s) {
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t\r") + 1);
    const fs::path p(s);
    return (p.is_absolute() ? p : base / p).string();
  };

  std::vector<ImagePair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorCode::kInvalidConfig, path + ":" + std::to_string(line_no) + ": expected image,gt");
    }
    ImagePair pair{"", resolve(line.substr(0, comma)), resolve(line.substr(comma + 1))};
    pair.id = stem_of(pair.image_path);
    pairs.push_back(std::move(pair));
  }
  std::sort(pairs.begin(), pairs.end(), [](const ImagePair& a, const ImagePair& b) {
    return fs::path(a.image_path).filename() < fs::path(b.image_path).filename();
  });
  return pairs;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pixel-level skin detection with RGB/HSV/YCbCr thresholds"};
  app.require_subcommand(1);
  Invocation inv;

  std::string input, gt, image_dir, gt_dir, manifest;
  auto* detect = app.add_subcommand("detect", "Write a skin mask for one image");
  detect->add_option("input", input, "Input image");
  add_shared_flags(*detect, inv);

  auto* eval = app.add_subcommand("eval", "Compare one image's mask against ground truth");
  eval->add_option("input", input, "Input image");
  eval->add_option("gt", gt, "Ground-truth image");
  add_shared_flags(*eval, inv);

  auto* batch = app.add_subcommand("batch", "Evaluate every image/ground-truth pair in two directories");
  batch->add_option("images", image_dir, "Image directory");
  batch->add_option("gts", gt_dir, "Ground-truth directory");
  batch->add_option("--manifest", manifest, "File of explicit image,gt pairs");
  add_shared_flags(*batch, inv);

  auto* stats = app.add_subcommand("stats", "Per-colour-space pass counts for one image");
  stats->add_option("input", input, "Input image");
  add_shared_flags(*stats, inv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunConfig cfg;
  try {
    cfg = resolve_config(inv.flags);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kNotFound ? kExitFailure : kExitUsage;
  }
  if (inv.print_config) {
    out << config_to_json(cfg).dump(2) << '\n';
    return kExitOk;
  }

  auto usage = [&](const std::string& msg) {
    err << "error: " << msg << "\nRun with --help for usage.\n";
    return kExitUsage;
  };

  try {
    if (*detect) {
      if (input.empty()) return usage("detect needs an input image");
      return cmd_detect(cfg, input, out);
    }
    if (*eval) {
      if (input.empty() || gt.empty()) return usage("eval needs an input image and a ground-truth image");
      return cmd_eval(cfg, input, gt, out);
    }
    if (*batch) {
      if (manifest.empty() && (image_dir.empty() || gt_dir.empty())) {
        return usage("batch needs an image directory and a ground-truth directory, or --manifest");
      }
      return cmd_batch(cfg, image_dir, gt_dir, manifest, out, err);
    }
    if (*stats) {
      if (input.empty()) return usage("stats needs an input image");
      return cmd_stats(cfg, input, out);
    }
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return usage("unknown command");
}

}  // namespace skinmask::cli
