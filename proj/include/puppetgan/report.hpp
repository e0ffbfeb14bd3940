// SPDX-License-Identifier: Apache-2.0
#pragma once

// Side-by-side comparison table of metrics rows and attribute scatter plots.

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace puppet {

struct MetricsRow {
    std::map<std::string, std::string> fields;
};

/// Reads a metrics CSV; throws SchemaError naming the first missing column.
std::vector<MetricsRow> read_metrics_csv(const std::filesystem::path& path);

/// Markdown table, one line per row.
std::string metrics_table(const std::vector<MetricsRow>& rows);

/// SVG scatter plot of paired values.
std::string scatter_svg(const std::vector<double>& xs, const std::vector<double>& ys, const std::string& x_label,
                        const std::string& y_label, const std::string& title);

struct ReportSummary {
    std::string table;
    std::map<std::string, double> spearman;  // model tag -> rank correlation of synthetic input vs output AoI
};

/// Writes report.md and scatter_<model>.svg for every row whose series file sits next to its CSV.
ReportSummary write_report(const std::vector<std::string>& metrics_csvs, const std::filesystem::path& out_dir);

}  // namespace puppet
