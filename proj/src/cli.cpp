#include "ballmapper/cli.hpp"

#include "ballmapper/error.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <ostream>

namespace ballmapper::cli {

namespace {

std::optional<std::string> opt(const std::string& s) {
    return s.empty() ? std::nullopt : std::optional<std::string>(s);
}

// Explicit path, else <$BALLMAPPER_OUT_DIR or .>/<default_name>.
std::string resolve_output(const std::string& explicit_path, const std::string& default_name) {
    if (!explicit_path.empty()) return explicit_path;
    const char* dir = std::getenv(kOutDirEnv);
    return (std::filesystem::path(dir != nullptr && *dir != '\0' ? dir : ".") / default_name).string();
}

struct SourceFlags {
    std::string input;
    std::vector<std::string> axes;
    std::vector<std::string> meta;
    bool normalize = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("-i,--input", input, "Input CSV (header row, comma separated)")->required();
        cmd->add_option("-a,--axes", axes, "Axis columns")->required()->delimiter(',');
        cmd->add_option("-m,--meta", meta, "Metadata columns to carry along")->delimiter(',');
        cmd->add_flag("--normalize", normalize, "Min-max normalize every axis onto [0,1]");
    }
    CloudSource source() const { return {input, axes, meta, normalize, std::nullopt, std::nullopt}; }
};

struct NetFlags {
    std::string metric = "euclidean";
    std::string pick = "first";
    std::uint64_t seed = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--metric", metric, "euclidean or manhattan")
            ->check(CLI::IsMember({"euclidean", "manhattan"}))
            ->capture_default_str();
        cmd->add_option("--pick", pick, "Centre pick order: first or random")
            ->check(CLI::IsMember({"first", "random", "first_uncovered_by_row", "random_with_seed"}))
            ->capture_default_str();
        cmd->add_option("--seed", seed, "Seed for --pick random")->capture_default_str();
    }
    NetPolicy policy() const { return {parse_pick_order(pick), seed}; }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ball Mapper: epsilon-net covers, graphs, colorings and renderings of point clouds",
                 "ballmapper"};
    app.set_config("--config", "", "TOML config file; command-line flags take precedence");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    // map
    MapConfig map;
    SourceFlags map_src;
    NetFlags map_net;
    std::string map_out, map_svg, map_dot, map_color, map_group;
    auto* map_cmd = app.add_subcommand("map", "Build the Ball Mapper graph and write it as JSON");
    map_src.attach(map_cmd);
    map_net.attach(map_cmd);
    map_cmd->add_option("-e,--epsilon", map.epsilon, "Ball radius")->required()->check(CLI::PositiveNumber);
    map_cmd->add_option("-o,--output", map_out, "Graph JSON path (a directory with --group-by)");
    map_cmd->add_option("--svg", map_svg, "Also render an SVG");
    map_cmd->add_option("--dot", map_dot, "Also export DOT");
    map_cmd->add_option("--color-by", map_color, "axis:NAME, outcome:NAME or year:NAME");
    map_cmd->add_option("--group-by", map_group, "Run the pipeline separately per value of this column");
    map_cmd->add_option("--layout-seed", map.layout_seed, "Layout seed")->capture_default_str();
    map_cmd->add_option("--iterations", map.iterations, "Layout iterations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // sweep
    SweepConfig sweep;
    SourceFlags sweep_src;
    NetFlags sweep_net;
    std::string sweep_out;
    auto* sweep_cmd = app.add_subcommand("sweep", "Graph statistics over a list of epsilon values");
    sweep_src.attach(sweep_cmd);
    sweep_net.attach(sweep_cmd);
    sweep_cmd->add_option("-e,--epsilons", sweep.epsilons, "Comma separated radii")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("-o,--output", sweep_out, "CSV path (stdout when omitted)");

    // color
    ColorConfig color;
    std::string color_ref, color_out, color_svg, color_dot;
    std::vector<std::size_t> color_ref_rows;
    auto* color_cmd = app.add_subcommand("color", "Per-ball coloring of an existing graph");
    color_cmd->add_option("-g,--graph", color.graph, "Graph JSON from `map`")->required();
    color_cmd->add_option("-i,--input", color.input, "The CSV the graph was built from")->required();
    color_cmd->add_option("--by", color.by, "axis:NAME, outcome:NAME, year:NAME or distance")->required();
    color_cmd->add_option("--ref", color_ref, "Reference rows for distance coloring: column:lo..hi");
    color_cmd->add_option("--ref-rows", color_ref_rows, "Reference source row ids")->delimiter(',');
    color_cmd->add_option("-o,--output", color_out, "Coloring CSV path");
    color_cmd->add_option("--svg", color_svg, "Also render an SVG");
    color_cmd->add_option("--dot", color_dot, "Also export DOT");
    color_cmd->add_option("--layout-seed", color.layout_seed, "Layout seed")->capture_default_str();
    color_cmd->add_option("--iterations", color.iterations, "Layout iterations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // stats
    StatsConfig stats;
    std::string stats_out;
    auto* stats_cmd = app.add_subcommand("stats", "Per-ball summary table");
    stats_cmd->add_option("-g,--graph", stats.graph, "Graph JSON from `map`")->required();
    stats_cmd->add_option("-i,--input", stats.input, "The CSV the graph was built from")->required();
    stats_cmd->add_option("-m,--meta", stats.meta, "Numeric columns to report min/max for")->delimiter(',');
    stats_cmd->add_option("-o,--output", stats_out, "CSV path (stdout when omitted)");

    // prep
    auto* prep_cmd = app.add_subcommand("prep", "Data preparation");
    prep_cmd->require_subcommand(1);
    RollingConfig rolling;
    std::string rolling_group, rolling_report;
    auto* rolling_cmd = prep_cmd->add_subcommand("rolling", "Rolling mean, sd and skewness of a column");
    rolling_cmd->add_option("-i,--input", rolling.input, "Input CSV")->required();
    rolling_cmd->add_option("--col", rolling.column, "Series column")->required();
    rolling_cmd->add_option("-w,--window", rolling.window, "Window length")
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    rolling_cmd->add_option("--group-by", rolling_group, "Roll separately within each group");
    rolling_cmd->add_option("-o,--output", rolling.output, "Output CSV");
    rolling_cmd->add_option("--report", rolling_report, "PrepReport JSON path");

    NormalizeConfig normalize;
    std::string normalize_report;
    auto* normalize_cmd = prep_cmd->add_subcommand("normalize", "Min-max normalize axes onto [0,1]");
    normalize_cmd->add_option("-i,--input", normalize.input, "Input CSV")->required();
    normalize_cmd->add_option("-a,--axes", normalize.axes, "Columns to normalize")->required()->delimiter(',');
    normalize_cmd->add_option("-o,--output", normalize.output, "Output CSV");
    normalize_cmd->add_option("--report", normalize_report, "PrepReport JSON path");

    FilterConfig filter;
    std::string filter_report;
    filter.lo = -std::numeric_limits<double>::infinity();
    filter.hi = std::numeric_limits<double>::infinity();
    auto* filter_cmd = prep_cmd->add_subcommand("filter", "Keep rows with lo <= column <= hi");
    filter_cmd->add_option("-i,--input", filter.input, "Input CSV")->required();
    filter_cmd->add_option("--col", filter.column, "Numeric column")->required();
    filter_cmd->add_option("--lo", filter.lo, "Lower bound (inclusive)");
    filter_cmd->add_option("--hi", filter.hi, "Upper bound (inclusive)");
    filter_cmd->add_option("-o,--output", filter.output, "Output CSV");
    filter_cmd->add_option("--report", filter_report, "PrepReport JSON path");

    // synth
    auto* synth_cmd = app.add_subcommand("synth", "Artificial data with controlled correlation");
    synth_cmd->require_subcommand(1);
    SynthConfig synth;
    std::string synth_sidecar;
    auto common_synth = [&](CLI::App* cmd) {
        cmd->add_option("-n,--n", synth.n, "Observations")->capture_default_str();
        cmd->add_option("--seed", synth.seed, "Generator seed")->capture_default_str();
        cmd->add_option("-o,--output", synth.output, "Output CSV");
        cmd->add_option("--sidecar", synth_sidecar, "Parameter JSON (default <output>.json)");
    };
    auto outcome_flags = [&](CLI::App* cmd) {
        cmd->add_option("--coef-x", synth.coef_x, "Outcome weight on x0")->capture_default_str();
        cmd->add_option("--coef-y", synth.coef_y, "Outcome weight on y0")->capture_default_str();
        cmd->add_option("--sd", synth.noise_sd, "Outcome noise sd")->capture_default_str();
    };
    auto* correlated_cmd = synth_cmd->add_subcommand("correlated", "x0, y0 and a column with exact correlation r to x0");
    common_synth(correlated_cmd);
    correlated_cmd->add_option("-r,--r", synth.r, "Target correlation")->required()->check(CLI::Range(-1.0, 1.0));
    auto* outcome_cmd = synth_cmd->add_subcommand("outcome", "x0, y0 and M = a*x0 + b*y0 + noise");
    common_synth(outcome_cmd);
    outcome_flags(outcome_cmd);
    auto* cloud_cmd = synth_cmd->add_subcommand("cloud", "Multi-column normal cloud");
    common_synth(cloud_cmd);
    outcome_flags(cloud_cmd);
    cloud_cmd->add_flag("--grid", synth.grid, "x_0 plus 198 columns with r = i/100 - 1");
    cloud_cmd->add_option("--targets", synth.targets, "Correlations of x1.. with x0")->delimiter(',');
    cloud_cmd->add_flag("--outcome", synth.with_outcome, "Append an outcome column M");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) reversed.pop_back();  // program name
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "ballmapper: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (map_cmd->parsed()) {
            map.source = map_src.source();
            map.metric = parse_metric(map_net.metric);
            map.policy = map_net.policy();
            map.output = map_group.empty() ? resolve_output(map_out, "graph.json") : resolve_output(map_out, "groups");
            map.svg = opt(map_svg);
            map.dot = opt(map_dot);
            map.color_by = opt(map_color);
            map.group_by = opt(map_group);
            cmd_map(map);
        } else if (sweep_cmd->parsed()) {
            sweep.source = sweep_src.source();
            sweep.metric = parse_metric(sweep_net.metric);
            sweep.policy = sweep_net.policy();
            sweep.output = opt(sweep_out);
            cmd_sweep(sweep, out);
        } else if (color_cmd->parsed()) {
            if (!color_ref.empty() && !color_ref_rows.empty())
                throw ArgumentError("give either --ref or --ref-rows, not both");
            if (!color_ref.empty()) color.ref = parse_reference(color_ref);
            if (!color_ref_rows.empty()) color.ref = ReferenceSpec::rows(color_ref_rows);
            color.output = resolve_output(color_out, "coloring.csv");
            color.svg = opt(color_svg);
            color.dot = opt(color_dot);
            cmd_color(color);
        } else if (stats_cmd->parsed()) {
            stats.output = opt(stats_out);
            cmd_stats(stats, out);
        } else if (rolling_cmd->parsed()) {
            rolling.group_by = opt(rolling_group);
            rolling.report = opt(rolling_report);
            rolling.output = resolve_output(rolling.output, "rolling.csv");
            cmd_prep_rolling(rolling);
        } else if (normalize_cmd->parsed()) {
            normalize.report = opt(normalize_report);
            normalize.output = resolve_output(normalize.output, "normalized.csv");
            cmd_prep_normalize(normalize);
        } else if (filter_cmd->parsed()) {
            filter.report = opt(filter_report);
            filter.output = resolve_output(filter.output, "filtered.csv");
            cmd_prep_filter(filter);
        } else {
            if (correlated_cmd->parsed()) synth.kind = SynthKind::correlated;
            else if (outcome_cmd->parsed()) synth.kind = SynthKind::outcome;
            else synth.kind = SynthKind::cloud;
            if (synth.kind == SynthKind::cloud && synth.grid && !synth.targets.empty())
                throw ArgumentError("--grid and --targets are mutually exclusive");
            synth.output = resolve_output(synth.output, "synth.csv");
            synth.sidecar = opt(synth_sidecar);
            cmd_synth(synth);
        }
    } catch (const ArgumentError& e) {
        err << "ballmapper: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        err << "ballmapper: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        err << "ballmapper: " << e.what() << "\n";
        return kExitData;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "ballmapper: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace ballmapper::cli
