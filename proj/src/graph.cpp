#include "ballmapper/graph.hpp"

#include "ballmapper/csv_io.hpp"
#include "ballmapper/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>

namespace ballmapper {

std::vector<std::size_t> BMGraph::degrees() const {
    std::vector<std::size_t> deg(nodes.size(), 0);
    for (const auto& e : edges) {
        ++deg[e.a];
        ++deg[e.b];
    }
    return deg;
}

BMGraph build_graph(const BallCover& cover, const std::vector<std::string>& axis_names) {
    BMGraph g;
    g.epsilon = cover.epsilon;
    g.metric = cover.metric;
    g.policy = cover.policy;
    g.axis_names = axis_names;
    g.point_count = cover.point_count();
    for (std::size_t b = 0; b < cover.ball_count(); ++b)
        g.nodes.push_back({b, cover.centers[b], cover.members[b]});

    // Every pair of balls listed in one point's cover vector is an edge.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> shared;
    for (const auto& balls : cover.membership) {
        for (std::size_t i = 0; i < balls.size(); ++i) {
            for (std::size_t j = i + 1; j < balls.size(); ++j) {
                auto key = std::minmax(balls[i], balls[j]);
                ++shared[{key.first, key.second}];
            }
        }
    }
    g.edges.reserve(shared.size());
    for (const auto& [key, count] : shared) g.edges.push_back({key.first, key.second, count});
    return g;
}

std::vector<std::size_t> list_outliers(const BMGraph& graph) {
    const auto deg = graph.degrees();
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < deg.size(); ++v)
        if (deg[v] == 0) out.push_back(v);
    return out;
}

std::vector<std::vector<std::size_t>> connected_components(const BMGraph& graph) {
    const std::size_t n = graph.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& e : graph.edges) {
        auto ra = find(e.a), rb = find(e.b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    // Each root is the smallest id of its component.
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t v = 0; v < n; ++v) {
        const auto r = find(v);
        if (slot[r] == n) {
            slot[r] = comps.size();
            comps.emplace_back();
        }
        comps[slot[r]].push_back(v);
    }
    return comps;
}

void check_graph_matches(const BMGraph& graph, const PointCloud& cloud) {
    if (graph.point_count != 0 && graph.point_count != cloud.size())
        throw DataError("graph was built over " + std::to_string(graph.point_count) +
                        " points but the cloud has " + std::to_string(cloud.size()));
    for (const auto& node : graph.nodes)
        for (std::size_t p : node.members)
            if (p >= cloud.size()) throw DataError("graph member index outside the cloud");
    if (!graph.provenance.cloud_fingerprint.empty() &&
        graph.provenance.cloud_fingerprint != cloud.fingerprint())
        throw DataError("graph and cloud do not match (fingerprint " +
                        graph.provenance.cloud_fingerprint + " vs " + cloud.fingerprint() + ")");
}

BallSummary ball_summary(const BMGraph& graph, const PointCloud& cloud,
                         const std::vector<std::string>& meta_columns) {
    check_graph_matches(graph, cloud);
    std::vector<std::vector<double>> meta_values;
    for (const auto& name : meta_columns) {
        if (!cloud.has_column(name)) throw DataError("unknown meta column '" + name + "'");
        meta_values.push_back(cloud.numeric_column(name));
    }

    BallSummary s;
    s.axis_names = cloud.axis_names();
    s.meta_names = meta_columns;
    const std::size_t d = cloud.dims();
    for (const auto& node : graph.nodes) {
        BallSummary::Row row;
        row.ball = node.id;
        row.count = node.count();
        row.axis_means.assign(d, 0.0);
        for (std::size_t p : node.members)
            for (std::size_t a = 0; a < d; ++a) row.axis_means[a] += cloud(p, a);
        for (auto& m : row.axis_means) m /= static_cast<double>(node.count());
        for (const auto& values : meta_values) {
            double lo = values[node.members.front()], hi = lo;
            for (std::size_t p : node.members) {
                lo = std::min(lo, values[p]);
                hi = std::max(hi, values[p]);
            }
            row.meta_min.push_back(lo);
            row.meta_max.push_back(hi);
        }
        s.rows.push_back(std::move(row));
    }
    return s;
}

void BallSummary::write_csv(std::ostream& out) const {
    std::vector<std::string> fields{"ball"};
    for (const auto& a : axis_names) fields.push_back(a);
    for (const auto& m : meta_names) {
        fields.push_back(m + "_min");
        fields.push_back(m + "_max");
    }
    fields.push_back("n");
    write_csv_row(out, fields);
    for (const auto& r : rows) {
        fields.clear();
        fields.push_back(std::to_string(r.ball));
        for (double v : r.axis_means) fields.push_back(format_real(v));
        for (std::size_t m = 0; m < meta_names.size(); ++m) {
            fields.push_back(format_real(r.meta_min[m]));
            fields.push_back(format_real(r.meta_max[m]));
        }
        fields.push_back(std::to_string(r.count));
        write_csv_row(out, fields);
    }
}

std::string graph_to_json(const BMGraph& graph) {
    using nlohmann::ordered_json;
    ordered_json meta;
    meta["epsilon"] = graph.epsilon;
    meta["metric"] = std::string(to_string(graph.metric));
    meta["axes"] = graph.axis_names;
    meta["points"] = graph.point_count;
    meta["pick_order"] = std::string(to_string(graph.policy.pick_order));
    meta["seed"] = graph.policy.seed;
    meta["cloud_hash"] = graph.provenance.cloud_fingerprint;
    meta["normalized"] = graph.provenance.normalized;
    if (graph.provenance.group_column) {
        meta["group_column"] = *graph.provenance.group_column;
        meta["group_value"] = graph.provenance.group_value.value_or("");
    }

    ordered_json nodes = ordered_json::array();
    for (const auto& n : graph.nodes) {
        ordered_json j;
        j["id"] = n.id;
        j["center_row"] = n.center_row;
        j["members"] = n.members;
        j["count"] = n.count();
        nodes.push_back(std::move(j));
    }
    ordered_json edges = ordered_json::array();
    for (const auto& e : graph.edges) {
        ordered_json j;
        j["a"] = e.a;
        j["b"] = e.b;
        j["shared"] = e.shared;
        edges.push_back(std::move(j));
    }
    ordered_json doc;
    doc["meta"] = std::move(meta);
    doc["nodes"] = std::move(nodes);
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

BMGraph graph_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError(std::string("graph JSON does not parse: ") + e.what());
    }
    try {
        BMGraph g;
        const auto& meta = doc.at("meta");
        g.epsilon = meta.at("epsilon").get<double>();
        g.metric = parse_metric(meta.at("metric").get<std::string>());
        g.axis_names = meta.at("axes").get<std::vector<std::string>>();
        g.point_count = meta.value("points", std::size_t{0});
        if (meta.contains("pick_order"))
            g.policy.pick_order = parse_pick_order(meta.at("pick_order").get<std::string>());
        g.policy.seed = meta.value("seed", std::uint64_t{0});
        g.provenance.cloud_fingerprint = meta.value("cloud_hash", std::string{});
        g.provenance.normalized = meta.value("normalized", false);
        if (meta.contains("group_column")) {
            g.provenance.group_column = meta.at("group_column").get<std::string>();
            g.provenance.group_value = meta.value("group_value", std::string{});
        }
        for (const auto& j : doc.at("nodes")) {
            BallNode n;
            n.id = j.at("id").get<std::size_t>();
            n.center_row = j.at("center_row").get<std::size_t>();
            n.members = j.at("members").get<std::vector<std::size_t>>();
            if (n.id != g.nodes.size()) throw DataError("graph JSON node ids must be 0..k-1 in order");
            if (j.at("count").get<std::size_t>() != n.members.size())
                throw DataError("graph JSON node " + std::to_string(n.id) + " count disagrees with members");
            g.nodes.push_back(std::move(n));
        }
        for (const auto& j : doc.at("edges")) {
            BallEdge e{j.at("a").get<std::size_t>(), j.at("b").get<std::size_t>(),
                       j.at("shared").get<std::size_t>()};
            if (e.a >= e.b || e.b >= g.nodes.size()) throw DataError("graph JSON has an invalid edge");
            g.edges.push_back(e);
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("graph JSON is missing fields: ") + e.what());
    }
}

}  // namespace ballmapper
