#pragma once

#include "missmass/metric.hpp"
#include "missmass/sample.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace missmass {

enum class HeaderMode { automatic, present, absent };

/// Rows read from a CSV file before a metric is attached.
struct PointTable {
    std::vector<Point> points;
    /// Raw row text per point, used as symbol labels for discrete samples.
    std::vector<std::string> raw_rows;
    std::vector<std::string> header;
    bool symbolic = false;
};

/// One point per row. Numeric rows become coordinates; a single non-numeric
/// column is read as symbols. In automatic mode a non-numeric first row
/// followed by numeric rows is taken as a header.
PointTable parse_csv_points(std::istream& in, HeaderMode header = HeaderMode::automatic);

/// Which space to build around ingested points; the dimension comes from the data.
struct SpaceRequest {
    /// Unset means: discrete for symbolic data, euclidean otherwise.
    std::optional<MetricKind> kind;
    double p = 2.0;
};

/// Builds a sample from a parsed table. Symbolic tables and discrete requests
/// map each distinct row to a symbol id in order of first appearance.
Sample sample_from_table(const PointTable& table, const SpaceRequest& request, SampleOptions options = {});

/// Accepts an array of numeric arrays, an array of symbol strings, or
/// {"matrix": [[...]]} holding precomputed distances (points become indices).
Sample sample_from_json_text(const std::string& text, const SpaceRequest& request, SampleOptions options = {});

/// Dispatches on the extension: .json goes through the JSON reader, anything
/// else is read as CSV. Throws IoError if the file cannot be opened.
Sample load_sample(const std::string& path, const SpaceRequest& request, HeaderMode header = HeaderMode::automatic,
                   SampleOptions options = {});

/// Writes points one per row with 17 significant digits; discrete samples with
/// labels write the label instead.
void write_sample_csv(std::ostream& out, const Sample& sample);

/// "%.17g" formatting used for every float written by the library.
std::string format_double(double value);

} // namespace missmass
