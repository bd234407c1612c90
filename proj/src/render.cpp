#include "edlayout/render.hpp"

#include <algorithm>
#include <sstream>

namespace edl {

namespace {

constexpr double kScale = 20.0;  // px per meter
constexpr double kMargin = 30.0;
constexpr double kHeader = 50.0;

std::string px(double v) { return format_decimal(v, 2); }

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Canvas {
    double width_m = 0.0;
    double height_m = 0.0;

    double x(double m) const { return kMargin + m * kScale; }
    // SVG y grows downward; layout y grows upward
    double y(double m) const { return kHeader + kMargin + (height_m - m) * kScale; }
};

void rect(std::ostringstream& out, const Canvas& c, const Rect& r, const char* cls, const char* fill) {
    out << "  <rect class=\"" << cls << "\" x=\"" << px(c.x(r.x)) << "\" y=\"" << px(c.y(r.top())) << "\" width=\""
        << px(r.width * kScale) << "\" height=\"" << px(r.depth * kScale) << "\" fill=\"" << fill
        << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
}

void text(std::ostringstream& out, double x, double y, double size, const std::string& s, const char* anchor = "middle") {
    out << "  <text x=\"" << px(x) << "\" y=\"" << px(y) << "\" font-size=\"" << px(size) << "\" text-anchor=\""
        << anchor << "\" font-family=\"sans-serif\">" << escape(s) << "</text>\n";
}

}  // namespace

std::string render_svg(const DecodedLayout& layout, const Scenario& scenario, const std::string& title,
                       const ObjectiveVector& objectives) {
    const auto& tpl = scenario.layout_template;
    Canvas c;
    for (const auto& row : tpl.rows) c.width_m = std::max(c.width_m, row.max_length);
    auto grow = [&](const Rect& r) {
        c.width_m = std::max(c.width_m, r.right());
        c.height_m = std::max(c.height_m, r.top());
    };
    for (const auto& r : layout.rects) grow(r);
    for (const auto& b : layout.blocks) grow(b.rect);
    for (const auto& k : layout.corridors) grow(k.rect);

    const double w = 2 * kMargin + c.width_m * kScale;
    const double h = kHeader + 2 * kMargin + c.height_m * kScale;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(w) << "\" height=\"" << px(h)
        << "\" viewBox=\"0 0 " << px(w) << ' ' << px(h) << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << px(w) << "\" height=\"" << px(h) << "\" fill=\"#fff\"/>\n";
    text(out, kMargin, 20, 13, title, "start");
    text(out, kMargin, 40, 12,
         "F1 = " + format_general(objectives.f1, 10) + ", F2 = " + format_general(objectives.f2, 10), "start");

    // horizontal corridor bands sit directly below every raised row
    for (std::size_t r = 0; r < tpl.rows.size(); ++r) {
        const auto& row = tpl.rows[r];
        if (row.baseline_y <= 0.0) continue;
        const double depth = r == 0 ? tpl.upper_corridor_depth : tpl.lower_corridor_depth;
        if (depth <= 0.0) continue;
        rect(out, c, {0.0, row.baseline_y - depth, row.max_length, depth}, "hallway", "#eeeeee");
        text(out, c.x(row.max_length / 2), c.y(row.baseline_y - depth / 2) + 4, 10,
             "H" + std::to_string(r + 1) + " = " + format_decimal(depth, 3) + " m");
    }
    for (const auto& k : layout.corridors) {
        rect(out, c, k.rect, "corridor", "#dde8f5");
        text(out, c.x(k.rect.center().x), c.y(k.rect.center().y) + 4, 10,
             k.id + "=" + format_decimal(k.rect.width, 4) + " m");
    }
    for (const auto& b : layout.blocks) {
        rect(out, c, b.rect, "block", "#cccccc");
        text(out, c.x(b.rect.center().x), c.y(b.rect.center().y) + 3, 8, b.name);
    }
    for (std::size_t i = 0; i < layout.rects.size(); ++i) {
        const auto& r = layout.rects[i];
        const auto& area = scenario.areas[i];
        rect(out, c, r, "area", area.fixed ? "#f6d8b8" : "#c9e7c9");
        text(out, c.x(r.center().x), c.y(r.center().y) + 4, 12, std::to_string(area.id));
        text(out, c.x(r.center().x), c.y(r.center().y) + 16, 7, area.name);
    }
    for (const auto& row : tpl.rows) {
        const double x = c.x(row.max_length);
        out << "  <line class=\"row-bound\" x1=\"" << px(x) << "\" y1=\"" << px(c.y(row.baseline_y)) << "\" x2=\""
            << px(x) << "\" y2=\"" << px(c.y(row.baseline_y) - 4.5 * kScale)
            << "\" stroke=\"#b00\" stroke-dasharray=\"4 3\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace edl
