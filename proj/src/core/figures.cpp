#include "figures.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace homcolor {

namespace {

double to_d(const Rat& r) { return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r)); }

struct Box {
    double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
    bool first = true;
    void add(double x, double y) {
        if (first) {
            x0 = x1 = x;
            y0 = y1 = y;
            first = false;
        } else {
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
    }
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

struct Svg {
    std::ostringstream body;
    Box box;

    void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& stroke,
                 const std::string& fill, double opacity) {
        body << "<polygon points=\"";
        for (auto [x, y] : pts) {
            body << fmt(x) << "," << fmt(-y) << " ";
            box.add(x, -y);
        }
        body << "\" fill=\"" << fill << "\" fill-opacity=\"" << fmt(opacity) << "\" stroke=\""
             << stroke << "\" stroke-width=\"0.5%\"/>\n";
    }
    void line(double x1, double y1, double x2, double y2, const std::string& color) {
        body << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(-y1) << "\" x2=\"" << fmt(x2)
             << "\" y2=\"" << fmt(-y2) << "\" stroke=\"" << color << "\" stroke-width=\"0.4%\"/>\n";
        box.add(x1, -y1);
        box.add(x2, -y2);
    }
    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& color) {
        body << "<polyline points=\"";
        for (auto [x, y] : pts) {
            body << fmt(x) << "," << fmt(-y) << " ";
            box.add(x, -y);
        }
        body << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"0.4%\"/>\n";
    }
    void dot(double x, double y, const std::string& color, const std::string& label) {
        body << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(-y) << "\" r=\"0.8%\" fill=\""
             << color << "\"/>\n";
        if (!label.empty())
            body << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(-y)
                 << "\" dx=\"1%\" dy=\"-1%\" font-size=\"2.5%\">" << label << "</text>\n";
        box.add(x, -y);
    }

    std::string finish() {
        double w = box.x1 - box.x0, h = box.y1 - box.y0;
        if (w <= 0) w = 1;
        if (h <= 0) h = 1;
        double mx = 0.08 * w, my = 0.08 * h;
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(box.x0 - mx) << " "
            << fmt(box.y0 - my) << " " << fmt(w + 2 * mx) << " " << fmt(h + 2 * my) << "\">\n";
        out << body.str();
        out << "</svg>\n";
        return out.str();
    }
};

std::vector<std::pair<double, double>> homothet_outline(const ConvexRange& range,
                                                        const Homothet& h) {
    std::vector<std::pair<double, double>> pts;
    for (const Vec2& v : range.vertices())
        pts.push_back({to_d(h.center.x) + to_d(h.scaling) * to_d(v.x),
                       to_d(h.center.y) + to_d(h.scaling) * to_d(v.y)});
    return pts;
}

}  // namespace

std::string svg_primal(const ConvexRange& range, const PointSet& points,
                       const DelaunayGraph* graph) {
    Svg svg;
    if (graph) {
        for (const auto& [edge, witness] : graph->witnesses) {
            const Homothet* h = nullptr;
            if (const auto* wh = std::get_if<WitnessHomothet>(&witness)) h = &wh->h;
            if (const auto* wl = std::get_if<WitnessLexRule>(&witness)) h = &wl->h;
            if (h) svg.polygon(homothet_outline(range, *h), "#bbbbbb", "#dddddd", 0.15);
        }
        for (auto [u, v] : graph->graph.edges())
            svg.line(to_d(points.points()[u].p.x), to_d(points.points()[u].p.y),
                     to_d(points.points()[v].p.x), to_d(points.points()[v].p.y), "#333333");
    }
    for (const auto& lp : points.points())
        svg.dot(to_d(lp.p.x), to_d(lp.p.y), kPalette[0], lp.label);
    return svg.finish();
}

std::string svg_dual(const ConvexRange& range, const DualFamily& family, const DualGraph* graph) {
    Svg svg;
    for (std::size_t i = 0; i < family.members.size(); ++i)
        svg.polygon(homothet_outline(range, family.members[i].h), kPalette[i % 8],
                    kPalette[i % 8], 0.12);
    if (graph)
        for (auto [u, v] : graph->graph.edges())
            svg.line(to_d(family.members[u].h.center.x), to_d(family.members[u].h.center.y),
                     to_d(family.members[v].h.center.x), to_d(family.members[v].h.center.y),
                     "#333333");
    for (const auto& m : family.members)
        svg.dot(to_d(m.h.center.x), to_d(m.h.center.y), "#000000", m.label);
    return svg.finish();
}

std::string svg_lifted(const DualFamily& family, const DualGraph& graph) {
    Svg svg;
    for (auto [u, v] : graph.graph.edges()) {
        auto it = graph.apex_witness.find({u, v});
        std::pair<double, double> pu{to_d(family.members[u].h.center.x),
                                     to_d(family.members[u].h.center.y)};
        std::pair<double, double> pv{to_d(family.members[v].h.center.x),
                                     to_d(family.members[v].h.center.y)};
        if (it != graph.apex_witness.end()) {
            std::pair<double, double> apex{to_d(it->second.x), to_d(it->second.y)};
            svg.polyline({pu, apex, pv}, "#333333");
        } else {
            svg.polyline({pu, pv}, "#999999");
        }
    }
    for (const auto& m : family.members)
        svg.dot(to_d(m.h.center.x), to_d(m.h.center.y), kPalette[1], m.label);
    return svg.finish();
}

}  // namespace homcolor
