#pragma once

#include "ballmapper/cloud.hpp"
#include "ballmapper/net.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ballmapper {

struct BallNode {
    std::size_t id = 0;
    std::size_t center_row = 0;          // position of the centre in the cloud
    std::vector<std::size_t> members;    // ascending cloud positions
    std::size_t count() const { return members.size(); }
};

// Undirected edge, a < b, between balls sharing at least one point.
struct BallEdge {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t shared = 0;

    friend bool operator==(const BallEdge&, const BallEdge&) = default;
};

// How the cloud behind a graph was built, carried in the graph JSON.
struct GraphProvenance {
    std::string cloud_fingerprint;
    bool normalized = false;
    std::optional<std::string> group_column;
    std::optional<std::string> group_value;
};

/// Ball Mapper graph: one vertex per ball, one edge per pair of balls with a
/// nonempty intersection. Nodes are ascending by id, edges by (a, b).
struct BMGraph {
    double epsilon = 0.0;
    Metric metric = Metric::euclidean;
    NetPolicy policy;
    std::vector<std::string> axis_names;
    std::size_t point_count = 0;
    std::vector<BallNode> nodes;
    std::vector<BallEdge> edges;
    GraphProvenance provenance;

    std::size_t vertex_count() const { return nodes.size(); }
    std::size_t edge_count() const { return edges.size(); }
    std::vector<std::size_t> degrees() const;
};

BMGraph build_graph(const BallCover& cover, const std::vector<std::string>& axis_names = {});

// Isolated vertices, ascending.
std::vector<std::size_t> list_outliers(const BMGraph& graph);

// Components ordered by their smallest ball id; ids ascending within each.
std::vector<std::vector<std::size_t>> connected_components(const BMGraph& graph);

/// Per-ball aggregate table. Row b holds ball b's axis means, the min and
/// max of each requested meta column over its members, and its size.
struct BallSummary {
    std::vector<std::string> axis_names;
    std::vector<std::string> meta_names;
    struct Row {
        std::size_t ball = 0;
        std::vector<double> axis_means;
        std::vector<double> meta_min;
        std::vector<double> meta_max;
        std::size_t count = 0;
    };
    std::vector<Row> rows;

    // Columns: ball, axis means..., <meta>_min, <meta>_max per meta, n.
    void write_csv(std::ostream& out) const;
};

BallSummary ball_summary(const BMGraph& graph, const PointCloud& cloud,
                         const std::vector<std::string>& meta_columns);

// Throws DataError when the graph was not built over a cloud of this size
// or member positions fall outside it.
void check_graph_matches(const BMGraph& graph, const PointCloud& cloud);

std::string graph_to_json(const BMGraph& graph);
BMGraph graph_from_json(const std::string& text);

}  // namespace ballmapper
