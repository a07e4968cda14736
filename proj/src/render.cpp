#include "kinn/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace kinn {

namespace {

constexpr double kSize = 480.0;
constexpr double kCenter = kSize / 2.0;
constexpr double kRadius = 190.0;
constexpr double kLabelRadius = 212.0;

struct Point {
    double x, y;
};

// Vertex j sits at angle -90 + 360*j/n degrees; the y axis is flipped so
// that increasing labels run counterclockwise on screen with 0 at the bottom.
Point vertex_point(int n, int j, double radius) {
    const double angle = (-90.0 + 360.0 * j / n) * std::numbers::pi / 180.0;
    return {kCenter + radius * std::cos(angle), kCenter - radius * std::sin(angle)};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // normalize -0
    return buf;
}

}  // namespace

std::string render_svg(const Dissection& d, const std::optional<Face>& marked) {
    const int n = d.n();
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(kSize) +
           "\" height=\"" + fmt(kSize) + "\" viewBox=\"0 0 " + fmt(kSize) + " " + fmt(kSize) +
           "\">\n";

    if (marked) {
        svg += "  <polygon class=\"marked-face\" points=\"";
        for (std::size_t i = 0; i < marked->size(); ++i) {
            if (i) svg += ' ';
            const Point p = vertex_point(n, (*marked)[i], kRadius);
            svg += fmt(p.x) + "," + fmt(p.y);
        }
        svg += "\" fill=\"#f5c76f\" stroke=\"none\"/>\n";
    }

    svg += "  <polygon class=\"polygon\" points=\"";
    for (int j = 0; j < n; ++j) {
        if (j) svg += ' ';
        const Point p = vertex_point(n, j, kRadius);
        svg += fmt(p.x) + "," + fmt(p.y);
    }
    svg += "\" fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"2\"/>\n";

    for (const Diagonal& diag : d.diagonals()) {
        const Point a = vertex_point(n, diag.a, kRadius);
        const Point b = vertex_point(n, diag.b, kRadius);
        svg += "  <line class=\"diagonal\" x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" +
               fmt(b.x) + "\" y2=\"" + fmt(b.y) + "\" stroke=\"#2563a8\" stroke-width=\"1.5\"/>\n";
    }

    for (int j = 0; j < n; ++j) {
        const Point p = vertex_point(n, j, kRadius);
        svg += "  <circle class=\"vertex\" cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) +
               "\" r=\"4\" fill=\"#1a1a1a\"/>\n";
    }

    for (int j = 0; j < n; ++j) {
        const Point p = vertex_point(n, j, kLabelRadius);
        svg += "  <text x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y) +
               "\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
               std::to_string(j) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

std::string render_svg(const KInN& x) { return render_svg(x.dissection(), x.marked_face()); }

}  // namespace kinn
