#include "ballmapper/render.hpp"

#include "ballmapper/error.hpp"
#include "ballmapper/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace ballmapper {

namespace {

struct Box {
    double min_x, min_y, max_x, max_y;
    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }
};

// Spring embedding of one component, centred on its centroid.
std::vector<Point2> embed_component(const std::vector<std::size_t>& ids,
                                    const std::vector<std::vector<std::size_t>>& local_adj,
                                    std::uint64_t seed, std::size_t iterations, double k) {
    const std::size_t m = ids.size();
    std::vector<Point2> pos(m);
    if (m == 1) return pos;

    Rng rng(seed);
    const double side = std::sqrt(static_cast<double>(m)) * k;
    for (auto& p : pos) {
        p.x = (rng.uniform() - 0.5) * side;
        p.y = (rng.uniform() - 0.5) * side;
    }

    const double t0 = 0.1 * side + 0.5 * k;
    std::vector<Point2> disp(m);
    for (std::size_t it = 0; it < iterations; ++it) {
        const double temp = t0 * (1.0 - static_cast<double>(it) / static_cast<double>(iterations));
        std::fill(disp.begin(), disp.end(), Point2{});
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                double dx = pos[i].x - pos[j].x, dy = pos[i].y - pos[j].y;
                double d = std::hypot(dx, dy);
                if (d < 1e-9) {
                    // Coincident nodes: separate along a fixed direction.
                    dx = 1e-3 * static_cast<double>(j - i);
                    dy = 1e-3;
                    d = std::hypot(dx, dy);
                }
                const double f = k * k / d;
                disp[i].x += dx / d * f;
                disp[i].y += dy / d * f;
                disp[j].x -= dx / d * f;
                disp[j].y -= dy / d * f;
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j : local_adj[i]) {
                if (j <= i) continue;
                const double dx = pos[i].x - pos[j].x, dy = pos[i].y - pos[j].y;
                const double d = std::hypot(dx, dy);
                if (d < 1e-12) continue;
                const double f = d * d / k;
                disp[i].x -= dx / d * f;
                disp[i].y -= dy / d * f;
                disp[j].x += dx / d * f;
                disp[j].y += dy / d * f;
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            const double len = std::hypot(disp[i].x, disp[i].y);
            if (len < 1e-12) continue;
            const double step = std::min(len, temp);
            pos[i].x += disp[i].x / len * step;
            pos[i].y += disp[i].y / len * step;
        }
    }

    Point2 c;
    for (const auto& p : pos) {
        c.x += p.x;
        c.y += p.y;
    }
    c.x /= static_cast<double>(m);
    c.y /= static_cast<double>(m);
    for (auto& p : pos) {
        p.x -= c.x;
        p.y -= c.y;
    }
    return pos;
}

std::string fmt(double v, int decimals = 3) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    std::string s(buf);
    if (s.find_first_not_of("-0.") == std::string::npos) return decimals > 0 ? "0." + std::string(decimals, '0') : "0";
    return s;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

Layout layout_graph(const BMGraph& graph, std::uint64_t seed, std::size_t iterations) {
    if (iterations == 0) throw ArgumentError("layout needs at least one iteration");
    const std::size_t n = graph.vertex_count();
    if (n == 0) throw ArgumentError("layout needs at least one vertex");

    Layout layout;
    layout.iterations = iterations;
    layout.seed = seed;
    layout.positions.resize(n);

    std::size_t max_count = 1;
    for (const auto& node : graph.nodes) max_count = std::max(max_count, node.count());
    layout.radius_scale = std::max(0.4 / std::sqrt(static_cast<double>(max_count)), 0.02);
    for (const auto& node : graph.nodes)
        layout.radii.push_back(layout.radius_scale * std::sqrt(static_cast<double>(node.count())));

    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : graph.edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }

    const auto comps = connected_components(graph);
    std::vector<std::vector<Point2>> placed;
    std::vector<Box> boxes;
    std::vector<std::size_t> local(n);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto& ids = comps[c];
        for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = i;
        std::vector<std::vector<std::size_t>> local_adj(ids.size());
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t v : adj[ids[i]]) local_adj[i].push_back(local[v]);
        auto pos = embed_component(ids, local_adj, derive_seed(seed, c), iterations,
                                   layout.spring_length);
        Box box{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
                std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const double r = layout.radii[ids[i]];
            box.min_x = std::min(box.min_x, pos[i].x - r);
            box.min_y = std::min(box.min_y, pos[i].y - r);
            box.max_x = std::max(box.max_x, pos[i].x + r);
            box.max_y = std::max(box.max_y, pos[i].y + r);
        }
        placed.push_back(std::move(pos));
        boxes.push_back(box);
    }

    if (comps.size() == 1) {
        for (std::size_t i = 0; i < comps[0].size(); ++i) layout.positions[comps[0][i]] = placed[0][i];
        return layout;
    }

    // Shelf packing: fill rows left to right up to a width that keeps the
    // overall picture roughly square.
    const double gap = layout.spring_length;
    double area = 0.0, widest = 0.0;
    for (const auto& b : boxes) {
        area += (b.width() + gap) * (b.height() + gap);
        widest = std::max(widest, b.width() + gap);
    }
    const double row_limit = std::max(widest, std::sqrt(area));
    double x = 0.0, y = 0.0, row_height = 0.0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto& b = boxes[c];
        if (x > 0.0 && x + b.width() > row_limit) {
            x = 0.0;
            y += row_height + gap;
            row_height = 0.0;
        }
        for (std::size_t i = 0; i < comps[c].size(); ++i) {
            layout.positions[comps[c][i]] = {placed[c][i].x - b.min_x + x, placed[c][i].y - b.min_y + y};
        }
        x += b.width() + gap;
        row_height = std::max(row_height, b.height());
    }
    return layout;
}

std::string render_svg(const BMGraph& graph, const Layout& layout, const Coloring* coloring,
                       const SvgOptions& options) {
    const std::size_t n = graph.vertex_count();
    if (layout.positions.size() != n || layout.radii.size() != n)
        throw DataError("layout does not match the graph");
    if (coloring != nullptr && coloring->values.size() != n)
        throw DataError("coloring has " + std::to_string(coloring->values.size()) +
                        " values for " + std::to_string(n) + " balls");

    const double ppu = options.pixels_per_unit;
    const double margin = 20.0;
    double min_x = std::numeric_limits<double>::max(), min_y = min_x;
    double max_x = std::numeric_limits<double>::lowest(), max_y = max_x;
    for (std::size_t v = 0; v < n; ++v) {
        const auto& p = layout.positions[v];
        const double r = layout.radii[v];
        min_x = std::min(min_x, p.x - r);
        min_y = std::min(min_y, p.y - r);
        max_x = std::max(max_x, p.x + r);
        max_y = std::max(max_y, p.y + r);
    }
    const bool legend = options.legend && coloring != nullptr;
    const double legend_height = legend ? 50.0 : 0.0;
    const double width = std::max((max_x - min_x) * ppu + 2 * margin, 240.0);
    const double height = (max_y - min_y) * ppu + 2 * margin + legend_height;
    auto sx = [&](double x) { return (x - min_x) * ppu + margin; };
    auto sy = [&](double y) { return (y - min_y) * ppu + margin; };

    std::vector<Rgb> fills;
    if (coloring != nullptr) fills = scale_to_palette(*coloring);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width, 1)
        << "\" height=\"" << fmt(height, 1) << "\" viewBox=\"0 0 " << fmt(width, 1) << ' '
        << fmt(height, 1) << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width, 1) << "\" height=\"" << fmt(height, 1)
        << "\" fill=\"#ffffff\"/>\n";

    out << "<g stroke=\"#555555\" stroke-width=\"1.5\">\n";
    for (const auto& e : graph.edges) {
        const auto& a = layout.positions[e.a];
        const auto& b = layout.positions[e.b];
        out << "<line x1=\"" << fmt(sx(a.x)) << "\" y1=\"" << fmt(sy(a.y)) << "\" x2=\""
            << fmt(sx(b.x)) << "\" y2=\"" << fmt(sy(b.y)) << "\"/>\n";
    }
    out << "</g>\n<g stroke=\"#222222\" stroke-width=\"1\">\n";
    for (std::size_t v = 0; v < n; ++v) {
        const auto& p = layout.positions[v];
        const std::string fill = coloring != nullptr ? fills[v].hex() : std::string("#cccccc");
        out << "<circle id=\"ball-" << graph.nodes[v].id << "\" cx=\"" << fmt(sx(p.x)) << "\" cy=\""
            << fmt(sy(p.y)) << "\" r=\"" << fmt(layout.radii[v] * ppu) << "\" fill=\"" << fill
            << "\"/>\n";
    }
    out << "</g>\n";

    if (options.labels) {
        out << "<g font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\" "
               "dominant-baseline=\"central\" fill=\"#000000\">\n";
        for (std::size_t v = 0; v < n; ++v) {
            const auto& p = layout.positions[v];
            out << "<text x=\"" << fmt(sx(p.x)) << "\" y=\"" << fmt(sy(p.y)) << "\">"
                << graph.nodes[v].id << "</text>\n";
        }
        out << "</g>\n";
    }

    if (legend) {
        const double top = height - legend_height + 10.0;
        const int steps = 20;
        const double bar_width = std::min(200.0, width - 2 * margin);
        out << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"10\">\n";
        for (int s = 0; s < steps; ++s) {
            const double t = static_cast<double>(s) / (steps - 1);
            out << "<rect x=\"" << fmt(margin + bar_width * s / steps) << "\" y=\"" << fmt(top)
                << "\" width=\"" << fmt(bar_width / steps) << "\" height=\"12\" fill=\""
                << palette_color(t).hex() << "\"/>\n";
        }
        out << "<text x=\"" << fmt(margin) << "\" y=\"" << fmt(top + 25) << "\">"
            << escape_xml(format_real(coloring->v_min)) << "</text>\n"
            << "<text x=\"" << fmt(margin + bar_width) << "\" y=\"" << fmt(top + 25)
            << "\" text-anchor=\"end\">" << escape_xml(format_real(coloring->v_max)) << "</text>\n"
            << "<text x=\"" << fmt(margin + bar_width + 10) << "\" y=\"" << fmt(top + 10) << "\">"
            << escape_xml(coloring->label) << "</text>\n"
            << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string export_dot(const BMGraph& graph, const Coloring* coloring) {
    if (coloring != nullptr && coloring->values.size() != graph.vertex_count())
        throw DataError("coloring does not match the graph");
    std::vector<Rgb> fills;
    if (coloring != nullptr) fills = scale_to_palette(*coloring);

    std::ostringstream out;
    out << "graph ballmapper {\n";
    out << "  node [shape=circle" << (coloring != nullptr ? ", style=filled" : "") << "];\n";
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        const auto& node = graph.nodes[v];
        out << "  " << node.id << " [label=\"" << node.id << "\", count=" << node.count()
            << ", width=" << fmt(0.1 * std::sqrt(static_cast<double>(node.count())), 4);
        if (coloring != nullptr)
            out << ", fillcolor=\"" << fills[v].hex() << "\", value=\"" << format_real(coloring->values[v])
                << "\"";
        out << "];\n";
    }
    for (const auto& e : graph.edges)
        out << "  " << e.a << " -- " << e.b << " [weight=" << e.shared << "];\n";
    out << "}\n";
    return out.str();
}

}  // namespace ballmapper
