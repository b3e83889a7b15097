#include "skinmask/threshold_config.hpp"

#include <fstream>
#include <set>

#include "skinmask/error.hpp"

namespace skinmask {

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "h_min", "h_max", "s_min",  "s_max",  "r_min",  "g_min",       "b_min",
      "rg_gap_min", "a_min", "y_min", "cr_min", "cb_min", "line_coeffs", "ycbcr_mode"};
  return keys;
}

std::string side_to_string(LineSide side) { return side == LineSide::kAtMost ? "le" : "ge"; }

LineSide parse_side(const std::string& text) {
  if (text == "le" || text == "<=") return LineSide::kAtMost;
  if (text == "ge" || text == ">=") return LineSide::kAtLeast;
  throw Error(ErrorCode::kInvalidConfig, "line side must be \"le\" or \"ge\", got \"" + text + "\"");
}

template <typename T>
void read_number(const nlohmann::json& j, const char* key, T& field) {
  auto it = j.find(key);
  if (it == j.end()) return;
  if (!it->is_number()) {
    throw Error(ErrorCode::kInvalidConfig, std::string("config key \"") + key + "\" must be a number");
  }
  if constexpr (std::is_integral_v<T>) {
    if (!it->is_number_integer()) {
      throw Error(ErrorCode::kInvalidConfig, std::string("config key \"") + key + "\" must be an integer");
    }
  }
  field = it->get<T>();
}

}  // namespace

void ThresholdConfig::validate() const {
  if (h_min > h_max) throw Error(ErrorCode::kInvalidConfig, "h_min exceeds h_max");
  if (s_min > s_max) throw Error(ErrorCode::kInvalidConfig, "s_min exceeds s_max");
}

std::string to_string(YCbCrMode mode) {
  return mode == YCbCrMode::kDigital ? "digital" : "paper-literal";
}

YCbCrMode parse_ycbcr_mode(const std::string& text) {
  if (text == "digital") return YCbCrMode::kDigital;
  if (text == "paper-literal") return YCbCrMode::kLiteral;
  throw Error(ErrorCode::kInvalidConfig,
              "ycbcr mode must be \"digital\" or \"paper-literal\", got \"" + text + "\"");
}

void to_json(nlohmann::json& j, const ThresholdConfig& cfg) {
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& line : cfg.line_coeffs) {
    lines.push_back({{"slope", line.slope},
                     {"intercept", line.intercept},
                     {"side", side_to_string(line.side)}});
  }
  j = nlohmann::json{{"h_min", cfg.h_min},
                     {"h_max", cfg.h_max},
                     {"s_min", cfg.s_min},
                     {"s_max", cfg.s_max},
                     {"r_min", cfg.r_min},
                     {"g_min", cfg.g_min},
                     {"b_min", cfg.b_min},
                     {"rg_gap_min", cfg.rg_gap_min},
                     {"a_min", cfg.a_min},
                     {"y_min", cfg.y_min},
                     {"cr_min", cfg.cr_min},
                     {"cb_min", cfg.cb_min},
                     {"line_coeffs", std::move(lines)},
                     {"ycbcr_mode", to_string(cfg.ycbcr_mode)}};
}

ThresholdConfig merge_config(const ThresholdConfig& base, const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidConfig, "threshold config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!known_keys().contains(key)) {
      throw Error(ErrorCode::kInvalidConfig, "unknown config key \"" + key + "\"");
    }
  }

  ThresholdConfig cfg = base;
  read_number(j, "h_min", cfg.h_min);
  read_number(j, "h_max", cfg.h_max);
  read_number(j, "s_min", cfg.s_min);
  read_number(j, "s_max", cfg.s_max);
  read_number(j, "r_min", cfg.r_min);
  read_number(j, "g_min", cfg.g_min);
  read_number(j, "b_min", cfg.b_min);
  read_number(j, "rg_gap_min", cfg.rg_gap_min);
  read_number(j, "a_min", cfg.a_min);
  read_number(j, "y_min", cfg.y_min);
  read_number(j, "cr_min", cfg.cr_min);
  read_number(j, "cb_min", cfg.cb_min);

  if (auto it = j.find("line_coeffs"); it != j.end()) {
    if (!it->is_array() || it->size() != kBoundaryLineCount) {
      throw Error(ErrorCode::kInvalidConfig, "line_coeffs must hold exactly five lines");
    }
    for (std::size_t i = 0; i < kBoundaryLineCount; ++i) {
      const auto& item = (*it)[i];
      if (!item.is_object()) throw Error(ErrorCode::kInvalidConfig, "line_coeffs entries must be objects");
      BoundaryLine line = cfg.line_coeffs[i];
      read_number(item, "slope", line.slope);
      read_number(item, "intercept", line.intercept);
      if (auto side = item.find("side"); side != item.end()) {
        if (!side->is_string()) throw Error(ErrorCode::kInvalidConfig, "line side must be a string");
        line.side = parse_side(side->get<std::string>());
      }
      cfg.line_coeffs[i] = line;
    }
  }

  if (auto it = j.find("ycbcr_mode"); it != j.end()) {
    if (!it->is_string()) throw Error(ErrorCode::kInvalidConfig, "ycbcr_mode must be a string");
    cfg.ycbcr_mode = parse_ycbcr_mode(it->get<std::string>());
  }

  cfg.validate();
  return cfg;
}

void from_json(const nlohmann::json& j, ThresholdConfig& cfg) { cfg = merge_config(ThresholdConfig{}, j); }

ThresholdConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kInvalidConfig, "malformed config file " + path + ": " + e.what());
  }
  return j.get<ThresholdConfig>();
}

}  // namespace skinmask
