#pragma once

#include "ballmapper/cloud.hpp"
#include "ballmapper/graph.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ballmapper {

enum class Palette { rainbow_red_to_purple };

// One finite value per ball plus the range used to map it onto the palette.
struct Coloring {
    std::vector<double> values;
    std::string label;
    double v_min = 0.0;
    double v_max = 0.0;
    Palette palette = Palette::rainbow_red_to_purple;

    static Coloring from_values(std::vector<double> values, std::string label);
};

// Rows selecting the reference set: either rows whose column value lies in
// [lo, hi], or an explicit list of source row ids.
struct ReferenceSpec {
    struct Range {
        std::string column;
        double lo = 0.0;
        double hi = 0.0;
    };
    std::optional<Range> range;
    std::vector<std::size_t> row_ids;

    static ReferenceSpec column_range(std::string column, double lo, double hi);
    static ReferenceSpec rows(std::vector<std::size_t> ids);

    // Cloud positions selected; throws DataError when nothing is selected.
    std::vector<std::size_t> select(const PointCloud& cloud) const;
};

// Mean of a per-point value over each ball's members.
Coloring color_by_values(const BMGraph& graph, const std::vector<double>& point_values,
                         std::string label);

Coloring color_by_outcome(const BMGraph& graph, const PointCloud& cloud,
                          const std::string& outcome_column);
Coloring color_by_axis(const BMGraph& graph, const PointCloud& cloud, const std::string& axis);
Coloring color_by_year(const BMGraph& graph, const PointCloud& cloud, const std::string& year_column);

// L1 distance between each ball's axis-mean vector and the per-axis mean of
// the reference rows.
Coloring color_by_distance(const BMGraph& graph, const PointCloud& cloud, const ReferenceSpec& ref);

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    std::string hex() const;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Seven-stop rainbow, red at 0 through violet at 1, linear in RGB.
Rgb palette_color(double t);
std::vector<Rgb> scale_to_palette(const Coloring& coloring);

// Columns: ball, value, color.
void write_coloring_csv(const Coloring& coloring, std::ostream& out);

}  // namespace ballmapper
