#include "ballmapper/color.hpp"

#include "ballmapper/csv_io.hpp"
#include "ballmapper/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_set>

namespace ballmapper {

Coloring Coloring::from_values(std::vector<double> values, std::string label) {
    Coloring c;
    c.label = std::move(label);
    if (!values.empty()) {
        auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        c.v_min = *lo;
        c.v_max = *hi;
    }
    c.values = std::move(values);
    return c;
}

ReferenceSpec ReferenceSpec::column_range(std::string column, double lo, double hi) {
    if (lo > hi) throw ArgumentError("reference range lower bound exceeds upper bound");
    ReferenceSpec s;
    s.range = Range{std::move(column), lo, hi};
    return s;
}

ReferenceSpec ReferenceSpec::rows(std::vector<std::size_t> ids) {
    ReferenceSpec s;
    s.row_ids = std::move(ids);
    return s;
}

std::vector<std::size_t> ReferenceSpec::select(const PointCloud& cloud) const {
    std::vector<std::size_t> out;
    if (range) {
        const auto values = cloud.numeric_column(range->column);
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i] >= range->lo && values[i] <= range->hi) out.push_back(i);
    } else {
        std::unordered_set<std::size_t> wanted(row_ids.begin(), row_ids.end());
        for (std::size_t i = 0; i < cloud.size(); ++i)
            if (wanted.count(cloud.row_ids()[i]) != 0) out.push_back(i);
    }
    if (out.empty()) throw DataError("reference selection is empty");
    return out;
}

Coloring color_by_values(const BMGraph& graph, const std::vector<double>& point_values,
                         std::string label) {
    std::vector<double> values;
    values.reserve(graph.vertex_count());
    for (const auto& node : graph.nodes) {
        double sum = 0.0;
        for (std::size_t p : node.members) {
            if (p >= point_values.size()) throw DataError("ball member outside the value column");
            sum += point_values[p];
        }
        values.push_back(sum / static_cast<double>(node.count()));
    }
    return Coloring::from_values(std::move(values), std::move(label));
}

Coloring color_by_outcome(const BMGraph& graph, const PointCloud& cloud,
                          const std::string& outcome_column) {
    check_graph_matches(graph, cloud);
    return color_by_values(graph, cloud.numeric_column(outcome_column), outcome_column);
}

Coloring color_by_axis(const BMGraph& graph, const PointCloud& cloud, const std::string& axis) {
    check_graph_matches(graph, cloud);
    auto a = cloud.axis_index(axis);
    if (!a) throw DataError("unknown axis '" + axis + "'");
    return color_by_values(graph, cloud.axis_values(*a), axis);
}

Coloring color_by_year(const BMGraph& graph, const PointCloud& cloud, const std::string& year_column) {
    return color_by_outcome(graph, cloud, year_column);
}

Coloring color_by_distance(const BMGraph& graph, const PointCloud& cloud, const ReferenceSpec& ref) {
    check_graph_matches(graph, cloud);
    const auto selected = ref.select(cloud);
    const std::size_t d = cloud.dims();

    std::vector<double> centroid(d, 0.0);
    for (std::size_t p : selected)
        for (std::size_t a = 0; a < d; ++a) centroid[a] += cloud(p, a);
    for (auto& c : centroid) c /= static_cast<double>(selected.size());

    std::vector<double> values;
    std::vector<double> mean(d);
    for (const auto& node : graph.nodes) {
        std::fill(mean.begin(), mean.end(), 0.0);
        for (std::size_t p : node.members)
            for (std::size_t a = 0; a < d; ++a) mean[a] += cloud(p, a);
        double dist = 0.0;
        for (std::size_t a = 0; a < d; ++a)
            dist += std::abs(mean[a] / static_cast<double>(node.count()) - centroid[a]);
        values.push_back(dist);
    }
    return Coloring::from_values(std::move(values), "distance");
}

std::string Rgb::hex() const {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

namespace {

constexpr std::array<std::array<double, 3>, 7> kRainbow{{
    {255, 0, 0},     // red
    {255, 127, 0},   // orange
    {255, 255, 0},   // yellow
    {0, 255, 0},     // green
    {0, 0, 255},     // blue
    {75, 0, 130},    // indigo
    {148, 0, 211},   // violet
}};

std::uint8_t channel(double v) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
}

}  // namespace

Rgb palette_color(double t) {
    t = std::clamp(std::isnan(t) ? 0.5 : t, 0.0, 1.0);
    const double pos = t * static_cast<double>(kRainbow.size() - 1);
    const auto seg = std::min<std::size_t>(static_cast<std::size_t>(pos), kRainbow.size() - 2);
    const double f = pos - static_cast<double>(seg);
    const auto& a = kRainbow[seg];
    const auto& b = kRainbow[seg + 1];
    return {channel(a[0] + (b[0] - a[0]) * f), channel(a[1] + (b[1] - a[1]) * f),
            channel(a[2] + (b[2] - a[2]) * f)};
}

std::vector<Rgb> scale_to_palette(const Coloring& coloring) {
    std::vector<Rgb> out;
    out.reserve(coloring.values.size());
    const double span = coloring.v_max - coloring.v_min;
    for (double v : coloring.values)
        out.push_back(palette_color(span > 0.0 ? (v - coloring.v_min) / span : 0.5));
    return out;
}

void write_coloring_csv(const Coloring& coloring, std::ostream& out) {
    write_csv_row(out, {"ball", "value", "color"});
    const auto colors = scale_to_palette(coloring);
    for (std::size_t b = 0; b < coloring.values.size(); ++b)
        write_csv_row(out, {std::to_string(b), format_real(coloring.values[b]), colors[b].hex()});
}

}  // namespace ballmapper
