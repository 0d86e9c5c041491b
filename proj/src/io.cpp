#include "missmass/io.hpp"

#include "missmass/errors.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace missmass {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

bool parse_number(const std::string& s, double& out) {
    if (s.empty()) return false;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    if (*begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

bool all_numeric(const std::vector<std::string>& fields) {
    double v = 0;
    for (const auto& f : fields) {
        if (!parse_number(f, v)) return false;
    }
    return true;
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

PointTable parse_csv_points(std::istream& in, HeaderMode header) {
    struct Row {
        std::size_t line;
        std::string text;
        std::vector<std::string> fields;
    };
    std::vector<Row> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        rows.push_back({lineno, t, split_fields(t)});
    }

    PointTable table;
    std::size_t start = 0;
    if (!rows.empty()) {
        bool take_header = header == HeaderMode::present;
        if (header == HeaderMode::automatic && rows.size() > 1 && !all_numeric(rows[0].fields) &&
            all_numeric(rows[1].fields)) {
            take_header = true;
        }
        if (take_header) {
            table.header = rows[0].fields;
            start = 1;
        }
    }
    if (start >= rows.size()) return table;

    const bool numeric = all_numeric(rows[start].fields);
    if (!numeric) {
        table.symbolic = true;
        for (std::size_t k = start; k < rows.size(); ++k) {
            if (rows[k].fields.size() != 1) {
                throw ParseError("symbolic samples need exactly one column per row", rows[k].line);
            }
            if (rows[k].fields[0].empty()) throw ParseError("empty symbol", rows[k].line);
            table.raw_rows.push_back(rows[k].fields[0]);
        }
        return table;
    }

    const std::size_t width = rows[start].fields.size();
    for (std::size_t k = start; k < rows.size(); ++k) {
        const auto& r = rows[k];
        if (r.fields.size() != width) {
            throw ParseError("expected " + std::to_string(width) + " columns, found " + std::to_string(r.fields.size()),
                             r.line);
        }
        Point p(width);
        for (std::size_t c = 0; c < width; ++c) {
            if (!parse_number(r.fields[c], p[c])) {
                throw ParseError("non-numeric value '" + r.fields[c] + "' in column " + std::to_string(c + 1), r.line);
            }
        }
        table.points.push_back(std::move(p));
        table.raw_rows.push_back(r.text);
    }
    return table;
}

Sample sample_from_table(const PointTable& table, const SpaceRequest& request, SampleOptions options) {
    const MetricKind kind = request.kind.value_or(table.symbolic ? MetricKind::discrete : MetricKind::euclidean);
    if (table.symbolic || kind == MetricKind::discrete) {
        if (kind != MetricKind::discrete) {
            throw ArgumentError("symbolic data requires the discrete metric");
        }
        std::map<std::string, double> ids;
        std::vector<Point> pts;
        for (const auto& s : table.raw_rows) {
            auto [it, inserted] = ids.emplace(s, static_cast<double>(ids.size()));
            pts.push_back({it->second});
        }
        return Sample(MetricSpace::discrete(), pts, table.raw_rows, options);
    }
    if (table.points.empty()) throw ArgumentError("input contains no points");
    const std::size_t width = table.points.front().size();
    switch (kind) {
    case MetricKind::euclidean: return Sample(MetricSpace::euclidean(width), table.points, options);
    case MetricKind::lp: return Sample(MetricSpace::lp(width, request.p), table.points, options);
    case MetricKind::scaled_indicator: return Sample(MetricSpace::scaled_indicator(request.p), table.points, options);
    case MetricKind::precomputed: throw ArgumentError("precomputed distances must be supplied as a JSON matrix");
    case MetricKind::discrete: break;
    }
    throw ArgumentError("unsupported metric request");
}

Sample sample_from_json_text(const std::string& text, const SpaceRequest& request, SampleOptions options) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    try {
        if (doc.is_object() && doc.contains("matrix")) {
            auto rows = doc.at("matrix").get<std::vector<std::vector<double>>>();
            auto matrix = DistanceMatrix::from_rows(rows);
            std::vector<Point> pts;
            for (std::size_t i = 0; i < matrix.size(); ++i) pts.push_back({static_cast<double>(i)});
            return Sample(MetricSpace::precomputed(std::move(matrix)), pts, options);
        }
        const nlohmann::json& arr = doc.is_object() && doc.contains("points") ? doc.at("points") : doc;
        if (!arr.is_array()) throw ParseError("expected an array of points or an object with \"matrix\"", 0);
        PointTable table;
        for (const auto& item : arr) {
            if (item.is_string()) {
                table.symbolic = true;
                table.raw_rows.push_back(item.get<std::string>());
            } else if (item.is_array()) {
                table.points.push_back(item.get<Point>());
                table.raw_rows.push_back(item.dump());
            } else if (item.is_number()) {
                table.points.push_back({item.get<double>()});
                table.raw_rows.push_back(item.dump());
            } else {
                throw ParseError("unsupported JSON point entry", 0);
            }
        }
        if (table.symbolic && !table.points.empty()) throw ParseError("mixed symbolic and numeric points", 0);
        for (const auto& p : table.points) {
            if (p.size() != table.points.front().size()) throw ParseError("points have differing dimensions", 0);
        }
        return sample_from_table(table, request, options);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed sample JSON: ") + e.what(), 0);
    }
}

Sample load_sample(const std::string& path, const SpaceRequest& request, HeaderMode header, SampleOptions options) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open input file '" + path + "'");
    const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
    if (json) {
        std::stringstream ss;
        ss << in.rdbuf();
        return sample_from_json_text(ss.str(), request, options);
    }
    return sample_from_table(parse_csv_points(in, header), request, options);
}

void write_sample_csv(std::ostream& out, const Sample& sample) {
    const bool use_labels = sample.space().kind() == MetricKind::discrete && !sample.labels().empty();
    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (use_labels) {
            out << sample.labels()[i] << '\n';
            continue;
        }
        auto p = sample.point(i);
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (c) out << ',';
            out << format_double(p[c]);
        }
        out << '\n';
    }
}

} // namespace missmass
