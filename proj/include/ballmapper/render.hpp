#pragma once

#include "ballmapper/color.hpp"
#include "ballmapper/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ballmapper {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Positions in abstract units where the natural spring length is 1, and
/// radii radius_scale * sqrt(count) in the same units.
struct Layout {
    std::vector<Point2> positions;
    std::vector<double> radii;
    double radius_scale = 0.0;
    double spring_length = 1.0;
    std::size_t iterations = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::size_t kDefaultLayoutIterations = 500;

// Fruchterman-Reingold embedding of each connected component with linear
// cooling, then components packed row by row in bounding boxes ordered by
// their smallest ball id. A lone component stays centred on the origin.
Layout layout_graph(const BMGraph& graph, std::uint64_t seed,
                    std::size_t iterations = kDefaultLayoutIterations);

struct SvgOptions {
    bool legend = true;
    bool labels = true;
    double pixels_per_unit = 40.0;
};

// One <circle> per ball and one <line> per edge; the legend uses <rect> and
// <text> only. Without a coloring balls are drawn in a neutral grey.
std::string render_svg(const BMGraph& graph, const Layout& layout, const Coloring* coloring,
                       const SvgOptions& options = {});

// Undirected DOT; node width proportional to sqrt(count), fillcolor only
// when a coloring is given.
std::string export_dot(const BMGraph& graph, const Coloring* coloring = nullptr);

}  // namespace ballmapper
