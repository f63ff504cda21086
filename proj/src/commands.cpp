#include "ballmapper/cli.hpp"

#include "ballmapper/csv_io.hpp"
#include "ballmapper/error.hpp"
#include "ballmapper/render.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>

namespace ballmapper::cli {

namespace {

void add_unique(std::vector<std::string>& list, const std::string& name) {
    if (std::find(list.begin(), list.end(), name) == list.end()) list.push_back(name);
}

// "kind:NAME" split; kind alone when there is no colon.
std::pair<std::string, std::string> split_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) return {spec, ""};
    return {spec.substr(0, colon), spec.substr(colon + 1)};
}

Coloring coloring_from_spec(const BMGraph& graph, const PointCloud& cloud, const std::string& spec,
                            const std::optional<ReferenceSpec>& ref) {
    const auto [kind, name] = split_spec(spec);
    if (kind == "distance") {
        if (!ref) throw ArgumentError("distance coloring needs --ref or --ref-rows");
        return color_by_distance(graph, cloud, *ref);
    }
    if (name.empty()) throw ArgumentError("coloring spec '" + spec + "' needs a column name");
    if (kind == "axis") return color_by_axis(graph, cloud, name);
    if (kind == "outcome") return color_by_outcome(graph, cloud, name);
    if (kind == "year") return color_by_year(graph, cloud, name);
    throw ArgumentError("unknown coloring '" + kind + "' (expected axis, outcome, year or distance)");
}

// Column a coloring spec reads, when it is not an axis.
std::optional<std::string> spec_column(const std::string& spec) {
    const auto [kind, name] = split_spec(spec);
    if (kind == "outcome" || kind == "year") return name;
    return std::nullopt;
}

void write_renderings(const BMGraph& graph, const Coloring* coloring,
                      const std::optional<std::string>& svg, const std::optional<std::string>& dot,
                      std::uint64_t layout_seed, std::size_t iterations) {
    if (svg) {
        const auto layout = layout_graph(graph, layout_seed, iterations);
        write_file_atomic(*svg, render_svg(graph, layout, coloring));
    }
    if (dot) write_file_atomic(*dot, export_dot(graph, coloring));
}

std::string safe_path_component(const std::string& value) {
    std::string out;
    for (char c : value) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                        c == '-' || c == '_' || c == '.';
        out += ok ? c : '_';
    }
    if (out.empty() || out == "." || out == "..") out = "_" + out;
    return out;
}

void map_one(const MapConfig& config, const CloudSource& source, const std::string& output,
             const std::optional<std::string>& svg, const std::optional<std::string>& dot) {
    const PointCloud cloud = load_source(source);
    const BMGraph graph = map_cloud(cloud, config.epsilon, config.metric, config.policy, source);
    std::optional<Coloring> coloring;
    if (config.color_by) coloring = coloring_from_spec(graph, cloud, *config.color_by, std::nullopt);
    write_file_atomic(output, graph_to_json(graph));
    write_renderings(graph, coloring ? &*coloring : nullptr, svg, dot, config.layout_seed,
                     config.iterations);
}

}  // namespace

PointCloud load_source(const CloudSource& source) {
    auto meta = source.meta;
    if (source.group_column && !std::count(source.axes.begin(), source.axes.end(), *source.group_column))
        add_unique(meta, *source.group_column);
    // Meta names that are also axes come through the axis columns.
    std::erase_if(meta, [&](const std::string& m) {
        return std::find(source.axes.begin(), source.axes.end(), m) != source.axes.end();
    });
    auto loaded = load_csv(source.input, source.axes, meta);
    PointCloud cloud = std::move(loaded.cloud);
    if (source.group_column) {
        if (!source.group_value) throw ArgumentError("group column given without a group value");
        cloud = select_group(cloud, *source.group_column, *source.group_value);
    }
    if (source.normalize) cloud = normalize_minmax(cloud).cloud;
    return cloud;
}

CloudSource source_for_graph(const BMGraph& graph, const std::string& input,
                             std::vector<std::string> extra_meta) {
    CloudSource s;
    s.input = input;
    s.axes = graph.axis_names;
    s.meta = std::move(extra_meta);
    s.normalize = graph.provenance.normalized;
    s.group_column = graph.provenance.group_column;
    s.group_value = graph.provenance.group_value;
    if (s.axes.empty()) throw DataError("graph JSON does not list its axes");
    return s;
}

BMGraph map_cloud(const PointCloud& cloud, double epsilon, Metric metric, const NetPolicy& policy,
                  const CloudSource& source) {
    const auto cover = greedy_net(cloud, epsilon, metric, policy);
    BMGraph graph = build_graph(cover, cloud.axis_names());
    graph.provenance.cloud_fingerprint = cloud.fingerprint();
    graph.provenance.normalized = source.normalize;
    graph.provenance.group_column = source.group_column;
    graph.provenance.group_value = source.group_value;
    return graph;
}

void cmd_map(const MapConfig& config) {
    if (!config.group_by) {
        map_one(config, config.source, config.output, config.svg, config.dot);
        return;
    }
    // One pipeline per distinct group value, each into <output>/<value>/.
    CloudSource all = config.source;
    all.normalize = false;
    add_unique(all.meta, *config.group_by);
    const auto groups = group_values(load_source(all), *config.group_by);
    namespace fs = std::filesystem;
    const fs::path root(config.output);
    auto file_name = [](const std::optional<std::string>& p, const char* fallback) {
        return p ? fs::path(*p).filename().string() : std::string(fallback);
    };
    for (const auto& value : groups) {
        CloudSource source = config.source;
        source.group_column = config.group_by;
        source.group_value = value;
        const fs::path dir = root / safe_path_component(value);
        std::optional<std::string> svg, dot;
        if (config.svg) svg = (dir / file_name(config.svg, "graph.svg")).string();
        if (config.dot) dot = (dir / file_name(config.dot, "graph.dot")).string();
        map_one(config, source, (dir / "graph.json").string(), svg, dot);
    }
}

std::vector<SweepRow> cmd_sweep(const SweepConfig& config, std::ostream& out) {
    if (config.epsilons.empty()) throw ArgumentError("sweep needs at least one epsilon");
    const PointCloud cloud = load_source(config.source);
    std::vector<SweepRow> rows;
    for (double eps : config.epsilons) {
        const auto graph = map_cloud(cloud, eps, config.metric, config.policy, config.source);
        rows.push_back({eps, graph.vertex_count(), graph.edge_count(),
                        connected_components(graph).size(), list_outliers(graph).size()});
    }
    std::ostringstream table;
    write_csv_row(table, {"epsilon", "balls", "edges", "components", "outliers"});
    for (const auto& r : rows)
        write_csv_row(table, {format_real(r.epsilon), std::to_string(r.balls), std::to_string(r.edges),
                              std::to_string(r.components), std::to_string(r.outliers)});
    if (config.output)
        write_file_atomic(*config.output, table.str());
    else
        out << table.str();
    return rows;
}

Coloring cmd_color(const ColorConfig& config) {
    const BMGraph graph = graph_from_json(read_file(config.graph));
    std::vector<std::string> extra;
    if (auto col = spec_column(config.by)) extra.push_back(*col);
    if (config.ref && config.ref->range && !std::count(graph.axis_names.begin(), graph.axis_names.end(),
                                                       config.ref->range->column))
        extra.push_back(config.ref->range->column);
    const PointCloud cloud = load_source(source_for_graph(graph, config.input, extra));
    check_graph_matches(graph, cloud);
    const Coloring coloring = coloring_from_spec(graph, cloud, config.by, config.ref);

    std::ostringstream csv;
    write_coloring_csv(coloring, csv);
    write_file_atomic(config.output, csv.str());
    write_renderings(graph, &coloring, config.svg, config.dot, config.layout_seed, config.iterations);
    return coloring;
}

BallSummary cmd_stats(const StatsConfig& config, std::ostream& out) {
    const BMGraph graph = graph_from_json(read_file(config.graph));
    std::vector<std::string> extra;
    for (const auto& m : config.meta)
        if (!std::count(graph.axis_names.begin(), graph.axis_names.end(), m)) extra.push_back(m);
    const PointCloud cloud = load_source(source_for_graph(graph, config.input, extra));
    const auto summary = ball_summary(graph, cloud, config.meta);
    std::ostringstream csv;
    summary.write_csv(csv);
    if (config.output)
        write_file_atomic(*config.output, csv.str());
    else
        out << csv.str();
    return summary;
}

ReferenceSpec parse_reference(const std::string& text) {
    const auto colon = text.rfind(':');
    const auto dots = text.find("..", colon == std::string::npos ? 0 : colon);
    if (colon == std::string::npos || dots == std::string::npos || colon == 0)
        throw ArgumentError("reference must look like column:lo..hi, got '" + text + "'");
    const std::string column = text.substr(0, colon);
    const std::string lo_text = text.substr(colon + 1, dots - colon - 1);
    const std::string hi_text = text.substr(dots + 2);
    auto bound = [&](const std::string& s, double open) {
        if (s.empty()) return open;
        auto v = parse_real(s);
        if (!v) throw ArgumentError("reference bound '" + s + "' is not a number");
        return *v;
    };
    return ReferenceSpec::column_range(column, bound(lo_text, -std::numeric_limits<double>::infinity()),
                                       bound(hi_text, std::numeric_limits<double>::infinity()));
}

}  // namespace ballmapper::cli
