#include "skinmask/report.hpp"

#include <cstdio>

namespace skinmask {

namespace {

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json confusion_to_json(const ConfusionMatrix& cm) {
  return {{"tp", cm.tp}, {"fp", cm.fp}, {"tn", cm.tn}, {"fn", cm.fn}};
}

nlohmann::json supplementary(const ConfusionMatrix& cm) {
  return {{"note", "beyond the headline precision/accuracy metrics"},
          {"recall_pct", optional_number(recall(cm))},
          {"specificity_pct", optional_number(specificity(cm))},
          {"f1_pct", optional_number(f1_score(cm))}};
}

// Quotes a CSV field only when it needs it.
std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_pct(const std::optional<double>& pct) {
  if (!pct) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", *pct);
  return buf;
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, std::size_t serial, const MetricsRow& row) {
  out << serial << ',' << row.total << ',' << row.detected_skin << ',' << row.gt_skin << ','
      << row.detected_nonskin << ',' << row.gt_nonskin << ',' << row.cm.tp << ',' << row.cm.fp << ','
      << row.cm.tn << ',' << row.cm.fn << ',' << format_pct(row.precision_pct) << ','
      << format_pct(row.accuracy_pct) << ',' << csv_field(row.image_id) << '\n';
}

void write_csv(std::ostream& out, const Summary& summary) {
  write_csv_header(out);
  for (std::size_t i = 0; i < summary.rows.size(); ++i) write_csv_row(out, i + 1, summary.rows[i]);
}

nlohmann::json row_to_json(std::size_t serial, const MetricsRow& row) {
  return {{"serial", serial},
          {"image", row.image_id},
          {"total_pixels", row.total},
          {"detected_skin", row.detected_skin},
          {"gt_skin", row.gt_skin},
          {"detected_nonskin", row.detected_nonskin},
          {"gt_nonskin", row.gt_nonskin},
          {"confusion", confusion_to_json(row.cm)},
          {"precision_pct", optional_number(row.precision_pct)},
          {"accuracy_pct", row.accuracy_pct},
          {"color_space_counts", stats_to_json(row.detection)},
          {"supplementary", supplementary(row.cm)}};
}

nlohmann::json summary_to_json(const Summary& summary) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < summary.rows.size(); ++i) rows.push_back(row_to_json(i + 1, summary.rows[i]));
  return {{"rows", std::move(rows)},
          {"pooled",
           {{"averaging", "micro"},
            {"confusion", confusion_to_json(summary.pooled)},
            {"precision_pct", optional_number(summary.pooled_precision_pct)},
            {"accuracy_pct", summary.pooled_accuracy_pct}}},
          {"macro",
           {{"averaging", "macro"},
            {"precision_pct", optional_number(summary.macro_precision_pct)},
            {"accuracy_pct", summary.macro_accuracy_pct}}},
          {"supplementary", supplementary(summary.pooled)}};
}

std::string summary_line(const Summary& summary) {
  return "pooled: images=" + std::to_string(summary.rows.size()) +
         " precision=" + format_pct(summary.pooled_precision_pct) +
         " accuracy=" + format_pct(summary.pooled_accuracy_pct) +
         " (macro precision=" + format_pct(summary.macro_precision_pct) +
         " accuracy=" + format_pct(summary.macro_accuracy_pct) + ")";
}

nlohmann::json stats_to_json(const ClassificationStats& stats) {
  return {{"total_pixels", stats.total_pixels},
          {"rgb", stats.rgb_pass_count},
          {"hsv", stats.hsv_pass_count},
          {"ycbcr", stats.ycbcr_pass_count},
          {"skin", stats.skin_pixels}};
}

void write_stats_csv(std::ostream& out, const ClassificationStats& stats) {
  out << "color_space,pixels\n"
      << "RGB," << stats.rgb_pass_count << '\n'
      << "HSV," << stats.hsv_pass_count << '\n'
      << "YCbCr," << stats.ycbcr_pass_count << '\n'
      << "Skin," << stats.skin_pixels << '\n'
      << "Total," << stats.total_pixels << '\n';
}

}  // namespace skinmask
