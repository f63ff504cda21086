#include "ballmapper/cloud.hpp"

#include "ballmapper/error.hpp"
#include "ballmapper/csv_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace ballmapper {

std::string PrepReport::to_json() const {
    std::ostringstream out;
    out << "{\"rows_in\": " << rows_in << ", \"rows_dropped_missing\": " << rows_dropped_missing
        << ", \"rows_dropped_filter\": " << rows_dropped_filter << ", \"rows_out\": " << rows_out
        << "}";
    return out.str();
}

std::optional<double> parse_real(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return std::nullopt;
    double value = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) return std::nullopt;
    return value;
}

std::string format_real(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw Error("format_real: conversion failed");
    return {buf, ptr};
}

PointCloud::PointCloud(std::vector<std::string> axis_names,
                       std::vector<double> coords,
                       std::vector<std::size_t> row_ids,
                       std::vector<MetaColumn> meta)
    : axis_names_(std::move(axis_names)),
      coords_(std::move(coords)),
      row_ids_(std::move(row_ids)),
      meta_(std::move(meta)) {
    if (axis_names_.empty()) throw DataError("point cloud needs at least one axis");
    if (row_ids_.empty()) throw DataError("point cloud needs at least one point");
    if (coords_.size() != row_ids_.size() * axis_names_.size())
        throw DataError("coordinate count does not match rows x axes");

    std::unordered_set<std::string> names;
    for (const auto& name : axis_names_) {
        if (name.empty()) throw DataError("axis names must be nonempty");
        if (!names.insert(name).second) throw DataError("duplicate axis name '" + name + "'");
    }
    for (const auto& col : meta_) {
        if (col.name.empty()) throw DataError("meta column names must be nonempty");
        if (!names.insert(col.name).second)
            throw DataError("duplicate column name '" + col.name + "'");
        if (col.values.size() != row_ids_.size())
            throw DataError("meta column '" + col.name + "' is not aligned to the rows");
    }
    std::unordered_set<std::size_t> ids(row_ids_.begin(), row_ids_.end());
    if (ids.size() != row_ids_.size()) throw DataError("row ids must be unique");
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!std::isfinite(coords_[i]))
            throw DataError("non-finite coordinate at row " + std::to_string(row_ids_[i / dims()]));
    }
}

PointCloud PointCloud::from_rows(std::vector<std::string> axis_names,
                                 const std::vector<std::vector<double>>& rows,
                                 std::vector<MetaColumn> meta) {
    std::vector<double> coords;
    coords.reserve(rows.size() * axis_names.size());
    for (const auto& r : rows) {
        if (r.size() != axis_names.size()) throw DataError("row width does not match axis count");
        coords.insert(coords.end(), r.begin(), r.end());
    }
    std::vector<std::size_t> ids(rows.size());
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    return PointCloud(std::move(axis_names), std::move(coords), std::move(ids), std::move(meta));
}

std::optional<std::size_t> PointCloud::axis_index(std::string_view name) const {
    for (std::size_t a = 0; a < axis_names_.size(); ++a)
        if (axis_names_[a] == name) return a;
    return std::nullopt;
}

const MetaColumn* PointCloud::meta_column(std::string_view name) const {
    for (const auto& col : meta_)
        if (col.name == name) return &col;
    return nullptr;
}

bool PointCloud::has_column(std::string_view name) const {
    return axis_index(name).has_value() || meta_column(name) != nullptr;
}

std::vector<double> PointCloud::axis_values(std::size_t axis) const {
    std::vector<double> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = (*this)(i, axis);
    return out;
}

std::vector<double> PointCloud::numeric_column(std::string_view name) const {
    if (auto a = axis_index(name)) return axis_values(*a);
    const MetaColumn* col = meta_column(name);
    if (col == nullptr) throw DataError("unknown column '" + std::string(name) + "'");
    std::vector<double> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        auto v = parse_real(col->values[i]);
        if (!v)
            throw DataError("column '" + col->name + "' is not numeric at row " +
                            std::to_string(row_ids_[i]) + " ('" + col->values[i] + "')");
        out[i] = *v;
    }
    return out;
}

PointCloud PointCloud::subset(std::span<const std::size_t> positions) const {
    std::vector<double> coords;
    coords.reserve(positions.size() * dims());
    std::vector<std::size_t> ids;
    ids.reserve(positions.size());
    std::vector<MetaColumn> meta;
    for (const auto& col : meta_) meta.push_back({col.name, {}});
    for (std::size_t p : positions) {
        if (p >= size()) throw ArgumentError("subset position out of range");
        auto r = row(p);
        coords.insert(coords.end(), r.begin(), r.end());
        ids.push_back(row_ids_[p]);
        for (std::size_t m = 0; m < meta_.size(); ++m) meta[m].values.push_back(meta_[m].values[p]);
    }
    return PointCloud(axis_names_, std::move(coords), std::move(ids), std::move(meta));
}

std::string PointCloud::fingerprint() const {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::string_view bytes) {
        for (unsigned char c : bytes) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0x1f;
        h *= 1099511628211ull;
    };
    for (const auto& name : axis_names_) mix(name);
    mix("|");
    for (std::size_t id : row_ids_) mix(std::to_string(id));
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

std::size_t require_column(const std::vector<std::string>& header, const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw DataError("unknown column '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
}

LoadResult read_table(std::istream& in,
                      const std::vector<std::string>& axis_columns,
                      const std::vector<std::string>* meta_columns) {
    if (axis_columns.empty()) throw ArgumentError("at least one axis column is required");
    CsvReader reader(in);
    auto header = reader.next();
    if (!header) throw DataError("CSV has no header row");
    const auto& names = *header;

    std::vector<std::size_t> axis_idx;
    for (const auto& a : axis_columns) axis_idx.push_back(require_column(names, a));

    std::vector<std::string> meta_names;
    if (meta_columns != nullptr) {
        meta_names = *meta_columns;
    } else {
        for (const auto& n : names)
            if (std::find(axis_columns.begin(), axis_columns.end(), n) == axis_columns.end())
                meta_names.push_back(n);
    }
    std::vector<std::size_t> meta_idx;
    for (const auto& m : meta_names) meta_idx.push_back(require_column(names, m));

    std::vector<double> coords;
    std::vector<std::size_t> ids;
    std::vector<MetaColumn> meta;
    for (const auto& m : meta_names) meta.push_back({m, {}});
    PrepReport report;

    std::size_t data_row = 0;
    std::vector<double> values(axis_idx.size());
    while (auto fields = reader.next()) {
        if (fields->size() != names.size())
            throw DataError("malformed CSV at line " + std::to_string(reader.line_number()) +
                            ": expected " + std::to_string(names.size()) + " fields, found " +
                            std::to_string(fields->size()));
        ++report.rows_in;
        bool complete = true;
        for (std::size_t a = 0; a < axis_idx.size(); ++a) {
            auto v = parse_real((*fields)[axis_idx[a]]);
            if (!v) {
                complete = false;
                break;
            }
            values[a] = *v;
        }
        if (complete) {
            coords.insert(coords.end(), values.begin(), values.end());
            ids.push_back(data_row);
            for (std::size_t m = 0; m < meta_idx.size(); ++m)
                meta[m].values.push_back((*fields)[meta_idx[m]]);
        } else {
            ++report.rows_dropped_missing;
        }
        ++data_row;
    }
    report.rows_out = ids.size();
    if (ids.empty()) throw DataError("no complete rows remain after dropping missing values");
    return {PointCloud(axis_columns, std::move(coords), std::move(ids), std::move(meta)), report};
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return in;
}

}  // namespace

LoadResult read_csv(std::istream& in,
                    const std::vector<std::string>& axis_columns,
                    const std::vector<std::string>& meta_columns) {
    return read_table(in, axis_columns, &meta_columns);
}

LoadResult load_csv(const std::string& path,
                    const std::vector<std::string>& axis_columns,
                    const std::vector<std::string>& meta_columns) {
    auto in = open_input(path);
    return read_csv(in, axis_columns, meta_columns);
}

LoadResult read_csv_all(std::istream& in, const std::vector<std::string>& axis_columns) {
    return read_table(in, axis_columns, nullptr);
}

LoadResult load_csv_all(const std::string& path, const std::vector<std::string>& axis_columns) {
    auto in = open_input(path);
    return read_csv_all(in, axis_columns);
}

void write_csv(const PointCloud& cloud, std::ostream& out) {
    std::vector<std::string> fields;
    for (const auto& a : cloud.axis_names()) fields.push_back(a);
    for (const auto& m : cloud.meta()) fields.push_back(m.name);
    write_csv_row(out, fields);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        fields.clear();
        for (double v : cloud.row(i)) fields.push_back(format_real(v));
        for (const auto& m : cloud.meta()) fields.push_back(m.values[i]);
        write_csv_row(out, fields);
    }
}

void save_csv(const PointCloud& cloud, const std::string& path) {
    std::ostringstream buf;
    write_csv(cloud, buf);
    write_file_atomic(path, buf.str());
}

FilterResult filter_range(const PointCloud& cloud, std::string_view column, double lo, double hi) {
    if (std::isnan(lo) || std::isnan(hi)) throw ArgumentError("filter bounds must not be NaN");
    if (lo > hi) throw ArgumentError("filter lower bound exceeds upper bound");
    const auto values = cloud.numeric_column(column);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] >= lo && values[i] <= hi) keep.push_back(i);
    PrepReport report;
    report.rows_in = cloud.size();
    report.rows_out = keep.size();
    report.rows_dropped_filter = cloud.size() - keep.size();
    if (keep.empty()) throw DataError("filter on '" + std::string(column) + "' removed every row");
    return {cloud.subset(keep), report};
}

namespace {

std::string cell_text(const PointCloud& cloud, std::string_view column, std::size_t i) {
    if (auto a = cloud.axis_index(column)) return format_real(cloud(i, *a));
    return cloud.meta_column(column)->values[i];
}

}  // namespace

PointCloud select_group(const PointCloud& cloud, std::string_view column, std::string_view value) {
    if (!cloud.has_column(column)) throw DataError("unknown column '" + std::string(column) + "'");
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < cloud.size(); ++i)
        if (cell_text(cloud, column, i) == value) keep.push_back(i);
    if (keep.empty())
        throw DataError("no rows with " + std::string(column) + " = '" + std::string(value) + "'");
    return cloud.subset(keep);
}

std::vector<std::string> group_values(const PointCloud& cloud, std::string_view column) {
    if (!cloud.has_column(column)) throw DataError("unknown column '" + std::string(column) + "'");
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        auto v = cell_text(cloud, column, i);
        if (seen.insert(v).second) out.push_back(std::move(v));
    }
    return out;
}

std::vector<RollingMoments> rolling_moments(std::span<const double> series, std::size_t window) {
    if (window < 2) throw ArgumentError("rolling window must be at least 2");
    if (series.size() < window)
        throw ArgumentError("series of length " + std::to_string(series.size()) +
                            " is shorter than the window " + std::to_string(window));
    for (double v : series)
        if (!std::isfinite(v)) throw DataError("rolling moments need finite input");

    const double w = static_cast<double>(window);
    std::vector<RollingMoments> out;
    out.reserve(series.size() - window + 1);
    for (std::size_t start = 0; start + window <= series.size(); ++start) {
        auto win = series.subspan(start, window);
        // Power sums of deviations from the first element; the central
        // moments follow from the binomial expansion around the shift.
        const double shift = win[0];
        double s1 = 0.0, s2 = 0.0, s3 = 0.0;
        bool constant = true;
        for (double x : win) {
            const double d = x - shift;
            s1 += d;
            s2 += d * d;
            s3 += d * d * d;
            constant = constant && (x == shift);
        }
        const double dm = s1 / w;
        RollingMoments m;
        m.mean = shift + dm;
        if (constant) {
            m.sd = 0.0;
        } else {
            const double m2 = std::max(0.0, s2 / w - dm * dm);
            const double m3 = s3 / w - 3.0 * dm * (s2 / w) + 2.0 * dm * dm * dm;
            m.sd = std::sqrt(m2 * w / (w - 1.0));
            m.skewness = m2 > 0.0 ? std::optional<double>(m3 / std::pow(m2, 1.5)) : std::nullopt;
        }
        out.push_back(m);
    }
    return out;
}

NormalizeResult normalize_minmax(const PointCloud& cloud) {
    const std::size_t n = cloud.size(), d = cloud.dims();
    std::vector<AxisRange> ranges;
    for (std::size_t a = 0; a < d; ++a) {
        AxisRange r{cloud.axis_names()[a], cloud(0, a), cloud(0, a)};
        for (std::size_t i = 1; i < n; ++i) {
            r.min = std::min(r.min, cloud(i, a));
            r.max = std::max(r.max, cloud(i, a));
        }
        if (!(r.max > r.min)) throw DataError("cannot normalize constant axis '" + r.axis + "'");
        ranges.push_back(r);
    }
    std::vector<double> coords(n * d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < d; ++a)
            coords[i * d + a] = (cloud(i, a) - ranges[a].min) / (ranges[a].max - ranges[a].min);
    return {PointCloud(cloud.axis_names(), std::move(coords), cloud.row_ids(), cloud.meta()),
            std::move(ranges)};
}

}  // namespace ballmapper
