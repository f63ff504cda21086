#pragma once

#include "ballmapper/color.hpp"
#include "ballmapper/graph.hpp"
#include "ballmapper/net.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ballmapper::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitData = 3;

// Directory used for outputs whose path is not given explicitly.
inline constexpr const char* kOutDirEnv = "BALLMAPPER_OUT_DIR";

// Everything needed to rebuild the cloud a graph is computed over.
struct CloudSource {
    std::string input;
    std::vector<std::string> axes;
    std::vector<std::string> meta;
    bool normalize = false;
    std::optional<std::string> group_column;
    std::optional<std::string> group_value;
};

struct MapConfig {
    CloudSource source;
    double epsilon = 0.0;
    Metric metric = Metric::euclidean;
    NetPolicy policy;
    std::string output;                  // graph JSON; a directory with group_by
    std::optional<std::string> svg;
    std::optional<std::string> dot;
    std::optional<std::string> color_by; // axis:NAME | outcome:NAME | year:NAME
    std::optional<std::string> group_by;
    std::uint64_t layout_seed = 0;
    std::size_t iterations = 500;
};

struct SweepRow {
    double epsilon = 0.0;
    std::size_t balls = 0;
    std::size_t edges = 0;
    std::size_t components = 0;
    std::size_t outliers = 0;
};

struct SweepConfig {
    CloudSource source;
    std::vector<double> epsilons;
    Metric metric = Metric::euclidean;
    NetPolicy policy;
    std::optional<std::string> output;  // stdout when empty
};

struct ColorConfig {
    std::string graph;
    std::string input;
    std::string by;                      // axis:NAME | outcome:NAME | year:NAME | distance
    std::optional<ReferenceSpec> ref;
    std::string output;
    std::optional<std::string> svg;
    std::optional<std::string> dot;
    std::uint64_t layout_seed = 0;
    std::size_t iterations = 500;
};

struct StatsConfig {
    std::string graph;
    std::string input;
    std::vector<std::string> meta;
    std::optional<std::string> output;  // stdout when empty
};

struct RollingConfig {
    std::string input;
    std::string column;
    std::size_t window = 10;
    std::optional<std::string> group_by;
    std::string output;
    std::optional<std::string> report;
};

struct NormalizeConfig {
    std::string input;
    std::vector<std::string> axes;
    std::string output;
    std::optional<std::string> report;
};

struct FilterConfig {
    std::string input;
    std::string column;
    double lo = 0.0;
    double hi = 0.0;
    std::string output;
    std::optional<std::string> report;
};

enum class SynthKind { correlated, outcome, cloud };

struct SynthConfig {
    SynthKind kind = SynthKind::correlated;
    std::size_t n = 1000;
    std::uint64_t seed = 0;
    double r = 0.0;                       // correlated
    double coef_x = 0.3;                  // outcome
    double coef_y = 0.6;
    double noise_sd = 1.0;
    bool grid = false;                    // cloud
    std::vector<double> targets;
    bool with_outcome = false;
    std::string output;
    std::optional<std::string> sidecar;   // defaults to <output>.json
};

PrepReport cmd_prep_rolling(const RollingConfig& config);
PrepReport cmd_prep_normalize(const NormalizeConfig& config);
PrepReport cmd_prep_filter(const FilterConfig& config);
void cmd_synth(const SynthConfig& config);

// Builds the cloud exactly as `map` does: load, optional group selection,
// optional min-max normalization.
PointCloud load_source(const CloudSource& source);

// Reconstructs the source a graph JSON was built from, adding `extra_meta`
// to the loaded meta columns.
CloudSource source_for_graph(const BMGraph& graph, const std::string& input,
                             std::vector<std::string> extra_meta);

BMGraph map_cloud(const PointCloud& cloud, double epsilon, Metric metric, const NetPolicy& policy,
                  const CloudSource& source);

void cmd_map(const MapConfig& config);
std::vector<SweepRow> cmd_sweep(const SweepConfig& config, std::ostream& out);
Coloring cmd_color(const ColorConfig& config);
BallSummary cmd_stats(const StatsConfig& config, std::ostream& out);

// Parses "col:lo..hi"; either bound may be empty for an open side.
ReferenceSpec parse_reference(const std::string& text);

// Full command-line entry point; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ballmapper::cli
