#include "ballmapper/cli.hpp"

#include "ballmapper/csv_io.hpp"
#include "ballmapper/error.hpp"
#include "ballmapper/random.hpp"
#include "ballmapper/synth.hpp"

#include "json.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace ballmapper::cli {

namespace {

std::vector<std::string> read_header(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    CsvReader reader(in);
    auto header = reader.next();
    if (!header) throw DataError("CSV has no header row");
    return *header;
}

std::string cell(const PointCloud& cloud, const std::string& column, std::size_t row) {
    if (auto a = cloud.axis_index(column)) return format_real(cloud(row, *a));
    return cloud.meta_column(column)->values[row];
}

// Writes the cloud's rows with columns in the original file order.
std::string cloud_in_header_order(const PointCloud& cloud, const std::vector<std::string>& header) {
    std::ostringstream out;
    write_csv_row(out, header);
    std::vector<std::string> fields;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        fields.clear();
        for (const auto& name : header) fields.push_back(cell(cloud, name, i));
        write_csv_row(out, fields);
    }
    return out.str();
}

nlohmann::ordered_json report_json(const PrepReport& r) {
    nlohmann::ordered_json j;
    j["rows_in"] = r.rows_in;
    j["rows_dropped_missing"] = r.rows_dropped_missing;
    j["rows_dropped_filter"] = r.rows_dropped_filter;
    j["rows_out"] = r.rows_out;
    return j;
}

void write_report(const std::optional<std::string>& path, const nlohmann::ordered_json& j) {
    if (path) write_file_atomic(*path, j.dump(2) + "\n");
}

std::string csv_of(const std::vector<std::string>& names, const std::vector<std::vector<double>>& columns) {
    std::ostringstream out;
    write_csv_row(out, names);
    const std::size_t n = columns.empty() ? 0 : columns.front().size();
    std::vector<std::string> fields;
    for (std::size_t i = 0; i < n; ++i) {
        fields.clear();
        for (const auto& c : columns) fields.push_back(format_real(c[i]));
        write_csv_row(out, fields);
    }
    return out.str();
}

}  // namespace

PrepReport cmd_prep_rolling(const RollingConfig& config) {
    if (config.window < 2) throw ArgumentError("rolling window must be at least 2");
    const auto header = read_header(config.input);
    const auto loaded = load_csv_all(config.input, {config.column});
    const PointCloud& cloud = loaded.cloud;

    // Row positions per group, in file order.
    std::vector<std::vector<std::size_t>> groups;
    if (config.group_by) {
        std::map<std::string, std::size_t> slot;
        for (const auto& value : group_values(cloud, *config.group_by)) {
            slot[value] = groups.size();
            groups.emplace_back();
        }
        for (std::size_t i = 0; i < cloud.size(); ++i)
            groups[slot.at(cell(cloud, *config.group_by, i))].push_back(i);
    } else {
        groups.emplace_back(cloud.size());
        for (std::size_t i = 0; i < cloud.size(); ++i) groups[0][i] = i;
    }

    const std::string suffix = std::to_string(config.window);
    auto out_header = header;
    out_header.push_back(config.column + "_mean" + suffix);
    out_header.push_back(config.column + "_sd" + suffix);
    out_header.push_back(config.column + "_skew" + suffix);

    std::ostringstream out;
    write_csv_row(out, out_header);
    const auto values = cloud.axis_values(0);
    PrepReport report;
    report.rows_in = loaded.report.rows_in;
    report.rows_dropped_missing = loaded.report.rows_dropped_missing;
    std::size_t undefined = 0;
    std::vector<std::string> fields;
    for (const auto& rows : groups) {
        if (rows.size() < config.window) {
            if (!config.group_by) rolling_moments(values, config.window);  // raises the length error
            report.rows_dropped_filter += rows.size();
            continue;
        }
        std::vector<double> series;
        for (std::size_t r : rows) series.push_back(values[r]);
        const auto moments = rolling_moments(series, config.window);
        report.rows_dropped_filter += config.window - 1;
        for (std::size_t k = 0; k < moments.size(); ++k) {
            const std::size_t row = rows[k + config.window - 1];
            fields.clear();
            for (const auto& name : header) fields.push_back(cell(cloud, name, row));
            fields.push_back(format_real(moments[k].mean));
            fields.push_back(format_real(moments[k].sd));
            if (moments[k].skewness) {
                fields.push_back(format_real(*moments[k].skewness));
            } else {
                fields.emplace_back();
                ++undefined;
            }
            write_csv_row(out, fields);
            ++report.rows_out;
        }
    }
    if (report.rows_out == 0) throw DataError("no group is long enough for the rolling window");
    write_file_atomic(config.output, out.str());

    auto j = report_json(report);
    j["window"] = config.window;
    j["alignment"] = "window_end";
    j["sd_divisor"] = "n-1";
    j["skewness"] = "g1 = m3 / m2^1.5, central moments with divisor n";
    j["undefined_skewness"] = undefined;
    write_report(config.report, j);
    return report;
}

PrepReport cmd_prep_normalize(const NormalizeConfig& config) {
    const auto header = read_header(config.input);
    const auto loaded = load_csv_all(config.input, config.axes);
    const auto normalized = normalize_minmax(loaded.cloud);
    write_file_atomic(config.output, cloud_in_header_order(normalized.cloud, header));

    auto j = report_json(loaded.report);
    nlohmann::ordered_json ranges = nlohmann::ordered_json::array();
    for (const auto& r : normalized.ranges) {
        nlohmann::ordered_json e;
        e["axis"] = r.axis;
        e["min"] = r.min;
        e["max"] = r.max;
        ranges.push_back(std::move(e));
    }
    j["ranges"] = std::move(ranges);
    write_report(config.report, j);
    return loaded.report;
}

PrepReport cmd_prep_filter(const FilterConfig& config) {
    const auto header = read_header(config.input);
    const auto loaded = load_csv_all(config.input, {config.column});
    const auto filtered = filter_range(loaded.cloud, config.column, config.lo, config.hi);
    write_file_atomic(config.output, cloud_in_header_order(filtered.cloud, header));

    PrepReport report = loaded.report;
    report.rows_dropped_filter = filtered.report.rows_dropped_filter;
    report.rows_out = filtered.report.rows_out;
    auto j = report_json(report);
    j["column"] = config.column;
    j["lo"] = config.lo;
    j["hi"] = config.hi;
    write_report(config.report, j);
    return report;
}

void cmd_synth(const SynthConfig& config) {
    nlohmann::ordered_json side;
    side["generator"] = std::string(Rng::name);
    side["generator_version"] = Rng::version;
    side["seed"] = config.seed;
    side["n"] = config.n;

    std::string csv;
    switch (config.kind) {
        case SynthKind::correlated: {
            if (config.n < 3) throw ArgumentError("n must be at least 3");
            const auto base = base_draws(config.n, config.seed);
            const auto xi = gen_correlated(base.x0, base.y0, config.r);
            csv = csv_of({"x0", "y0", "x1"}, {base.x0, base.y0, xi});
            side["command"] = "correlated";
            side["r"] = config.r;
            side["formula"] = "x1 = standardize(x0)*r + standardize(resid(y0~x0))*sqrt(1-r^2)";
            break;
        }
        case SynthKind::outcome: {
            const auto base = base_draws(config.n, config.seed);
            const OutcomeSpec spec{config.coef_x, config.coef_y, config.noise_sd};
            const auto m = gen_outcome(base.x0, base.y0, spec, config.seed);
            csv = csv_of({"x0", "y0", "M"}, {base.x0, base.y0, m});
            side["command"] = "outcome";
            side["coef_x"] = spec.coef_x;
            side["coef_y"] = spec.coef_y;
            side["noise_sd"] = spec.noise_sd;
            break;
        }
        case SynthKind::cloud: {
            PointCloud cloud = [&] {
                if (config.grid) {
                    SyntheticSpec spec;
                    spec.n = config.n;
                    spec.seed = config.seed;
                    return gen_grid(spec);
                }
                return gen_normal_cloud(config.n, config.targets.size() + 1, config.targets, config.seed);
            }();
            std::vector<std::string> names = cloud.axis_names();
            std::vector<std::vector<double>> columns;
            for (std::size_t a = 0; a < cloud.dims(); ++a) columns.push_back(cloud.axis_values(a));
            if (config.with_outcome) {
                if (config.grid) {
                    const auto base = base_draws(config.n, config.seed);
                    const OutcomeSpec spec{config.coef_x, config.coef_y, config.noise_sd};
                    names.push_back("y_0");
                    columns.push_back(base.y0);
                    names.push_back("M");
                    columns.push_back(gen_outcome(base.x0, base.y0, spec, config.seed));
                } else {
                    if (cloud.dims() < 2) throw ArgumentError("--outcome needs at least two columns");
                    const OutcomeSpec spec{config.coef_x, config.coef_y, config.noise_sd};
                    names.push_back("M");
                    columns.push_back(gen_outcome(columns[0], columns[1], spec, config.seed));
                }
                side["coef_x"] = config.coef_x;
                side["coef_y"] = config.coef_y;
                side["noise_sd"] = config.noise_sd;
            }
            csv = csv_of(names, columns);
            side["command"] = "cloud";
            side["grid"] = config.grid;
            if (config.grid)
                side["r_grid"] = "r_i = i/100 - 1, i = 1..198";
            else
                side["targets"] = config.targets;
            side["columns"] = names;
            break;
        }
    }
    write_file_atomic(config.output, csv);
    write_file_atomic(config.sidecar.value_or(config.output + ".json"), side.dump(2) + "\n");
}

}  // namespace ballmapper::cli
