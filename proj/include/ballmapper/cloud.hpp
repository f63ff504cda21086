#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ballmapper {

// Non-axis column carried alongside the coordinates. Values are kept as
// text; numeric access parses on demand.
struct MetaColumn {
    std::string name;
    std::vector<std::string> values;
};

// Audit trail for every data preparation step.
// Invariant: rows_in == rows_out + rows_dropped_missing + rows_dropped_filter.
struct PrepReport {
    std::size_t rows_in = 0;
    std::size_t rows_dropped_missing = 0;
    std::size_t rows_dropped_filter = 0;
    std::size_t rows_out = 0;

    bool balanced() const {
        return rows_in == rows_out + rows_dropped_missing + rows_dropped_filter;
    }
    std::string to_json() const;
};

/// An n x d matrix of finite coordinates with named axes, optional metadata
/// columns aligned to rows, and the source row index of every point.
///
/// Immutable after construction; the constructor enforces n >= 1, d >= 1,
/// finite coordinates, unique nonempty axis names and unique row ids.
class PointCloud {
public:
    PointCloud(std::vector<std::string> axis_names,
               std::vector<double> coords,
               std::vector<std::size_t> row_ids,
               std::vector<MetaColumn> meta = {});

    // Convenience for tests and bindings: rows given as nested vectors,
    // row ids 0..n-1.
    static PointCloud from_rows(std::vector<std::string> axis_names,
                                const std::vector<std::vector<double>>& rows,
                                std::vector<MetaColumn> meta = {});

    std::size_t size() const { return row_ids_.size(); }
    std::size_t dims() const { return axis_names_.size(); }

    double operator()(std::size_t row, std::size_t axis) const {
        return coords_[row * dims() + axis];
    }
    std::span<const double> row(std::size_t i) const {
        return {coords_.data() + i * dims(), dims()};
    }
    std::span<const double> coords() const { return coords_; }

    const std::vector<std::string>& axis_names() const { return axis_names_; }
    const std::vector<std::size_t>& row_ids() const { return row_ids_; }
    const std::vector<MetaColumn>& meta() const { return meta_; }

    std::optional<std::size_t> axis_index(std::string_view name) const;
    const MetaColumn* meta_column(std::string_view name) const;
    bool has_column(std::string_view name) const;

    // Values of an axis or a meta column as reals. Throws DataError for
    // unknown columns or meta cells that are not finite numbers.
    std::vector<double> numeric_column(std::string_view name) const;
    std::vector<double> axis_values(std::size_t axis) const;

    // Rows at the given positions, in the given order.
    PointCloud subset(std::span<const std::size_t> positions) const;

    // Stable fingerprint of axis names and row ids (FNV-1a 64, hex).
    std::string fingerprint() const;

private:
    std::vector<std::string> axis_names_;
    std::vector<double> coords_;
    std::vector<std::size_t> row_ids_;
    std::vector<MetaColumn> meta_;
};

struct LoadResult {
    PointCloud cloud;
    PrepReport report;
};

// Comma separated, '.' decimal, header row. Rows whose axis cells are
// empty, non-numeric or non-finite are dropped and counted. Row ids are
// 0-based positions among the data rows of the file.
LoadResult load_csv(const std::string& path,
                    const std::vector<std::string>& axis_columns,
                    const std::vector<std::string>& meta_columns);
LoadResult read_csv(std::istream& in,
                    const std::vector<std::string>& axis_columns,
                    const std::vector<std::string>& meta_columns);

// Same as load_csv but every non-axis column becomes a meta column, in
// file order.
LoadResult load_csv_all(const std::string& path, const std::vector<std::string>& axis_columns);
LoadResult read_csv_all(std::istream& in, const std::vector<std::string>& axis_columns);

// Writes axis columns then meta columns. Reals use the shortest
// representation that round-trips exactly.
void write_csv(const PointCloud& cloud, std::ostream& out);
void save_csv(const PointCloud& cloud, const std::string& path);

struct FilterResult {
    PointCloud cloud;
    PrepReport report;
};

// Keeps rows with lo <= value <= hi. The column may be an axis or a numeric
// meta column.
FilterResult filter_range(const PointCloud& cloud, std::string_view column, double lo, double hi);

// Keeps rows whose meta (or axis) cell equals `value` textually.
PointCloud select_group(const PointCloud& cloud, std::string_view column, std::string_view value);

// Distinct values of a column in order of first appearance.
std::vector<std::string> group_values(const PointCloud& cloud, std::string_view column);

struct RollingMoments {
    double mean = 0.0;
    double sd = 0.0;                 // sample sd, divisor window - 1
    std::optional<double> skewness;  // m3 / m2^1.5, divisor window; empty when the window is constant
};

// One triple per contiguous window, aligned to the window's last element.
std::vector<RollingMoments> rolling_moments(std::span<const double> series, std::size_t window);

struct AxisRange {
    std::string axis;
    double min = 0.0;
    double max = 0.0;
};

struct NormalizeResult {
    PointCloud cloud;
    std::vector<AxisRange> ranges;  // of the input, per axis
};

// Maps every axis onto [0, 1] with (x - min) / (max - min).
NormalizeResult normalize_minmax(const PointCloud& cloud);

// Parses a finite real using the C locale. Returns nullopt for empty,
// non-numeric or non-finite text.
std::optional<double> parse_real(std::string_view text);

// Shortest decimal text that parses back to the same double.
std::string format_real(double value);

}  // namespace ballmapper
