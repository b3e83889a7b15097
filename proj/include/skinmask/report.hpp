#pragma once

#include <ostream>
#include <string>

#include "json.hpp"
#include "skinmask/classifier.hpp"
#include "skinmask/evaluation.hpp"

namespace skinmask {

/// Column header of the results table, in fixed order.
inline constexpr const char* kCsvHeader =
    "Sr. No.,Total no of Pixels,Skin pixels detected,Skin pixels in GT image,"
    "Nonskin pixels detected,Nonskin pixels in GT image,True Positive,"
    "False Positive,True Negative,False Negative,Precision,Accuracy,Image";

/// Percentages are printed with one decimal; undefined precision as "NA".
std::string format_pct(const std::optional<double>& pct);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, std::size_t serial, const MetricsRow& row);
void write_csv(std::ostream& out, const Summary& summary);

/// Full-precision JSON. Recall, specificity and F1 are grouped under
/// "supplementary" so they are not mistaken for headline metrics.
nlohmann::json row_to_json(std::size_t serial, const MetricsRow& row);
nlohmann::json summary_to_json(const Summary& summary);

std::string summary_line(const Summary& summary);

/// Bar-chart data: independent pass counts per colour space plus the
/// combined skin count.
nlohmann::json stats_to_json(const ClassificationStats& stats);
void write_stats_csv(std::ostream& out, const ClassificationStats& stats);

}  // namespace skinmask
