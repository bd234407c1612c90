#include "edlayout/layout.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace edl {

namespace {

constexpr double kGeomEps = 1e-9;

std::string fmt(double v) { return format_decimal(v, 4); }

}  // namespace

double overlap_area(const Rect& a, const Rect& b) {
    const double w = std::min(a.right(), b.right()) - std::max(a.x, b.x);
    const double h = std::min(a.top(), b.top()) - std::max(a.y, b.y);
    return (w > 0.0 && h > 0.0) ? w * h : 0.0;
}

double DecodedLayout::violation_total() const {
    double total = 0.0;
    for (const auto& v : violations) total += v.amount;
    return total;
}

DecodedLayout decode(const LayoutGenome& genome, const Scenario& scenario) {
    const auto ids = scenario.relocatable_ids();
    const auto& tpl = scenario.layout_template;
    const auto variable = tpl.variable_corridors();
    const std::size_t expected = ids.size() + variable.size();
    if (genome.genes.size() != expected)
        throw InvalidArgument("decode: genome has " + std::to_string(genome.genes.size()) + " genes, scenario needs " +
                              std::to_string(expected));
    for (double g : genome.genes)
        if (!(g >= 0.0 && g <= 1.0)) throw InvalidArgument("decode: gene outside [0, 1]");

    std::vector<std::size_t> order(ids.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return genome.genes[a] < genome.genes[b]; });

    DecodedLayout out;
    const std::size_t n = scenario.size();
    out.rects.assign(n, Rect{});
    out.centroids.assign(n, Point{});
    out.corridor_widths.resize(tpl.corridors.size());
    for (std::size_t k = 0; k < tpl.corridors.size(); ++k) {
        const auto& c = tpl.corridors[k];
        out.corridor_ids.push_back(c.id);
        out.corridor_widths[k] = c.min_width;
    }
    for (std::size_t v = 0; v < variable.size(); ++v) {
        const auto& c = tpl.corridors[variable[v]];
        const double g = genome.genes[ids.size() + v];
        out.corridor_widths[variable[v]] = c.min_width + g * (c.max_width - c.min_width);
    }
    auto corridor_width = [&](const std::string& id) {
        for (std::size_t k = 0; k < tpl.corridors.size(); ++k)
            if (tpl.corridors[k].id == id) return out.corridor_widths[k];
        throw InvalidArgument("decode: unknown corridor " + id);
    };

    struct Occupant {
        Rect rect;
        std::string label;
    };
    std::vector<Occupant> occupants;
    std::size_t next_rank = 0;

    for (std::size_t r = 0; r < tpl.rows.size(); ++r) {
        const auto& row = tpl.rows[r];
        out.row_orders.emplace_back();
        double cursor = 0.0;
        double band = 0.0;
        std::vector<std::pair<std::string, double>> strips;  // corridor id, left x
        int free_left = 0;

        for (const auto& cell : row.cells) {
            switch (cell.kind) {
                case CellKind::Free: {
                    if (next_rank >= order.size()) throw InvalidArgument("decode: template has more free cells than areas");
                    const int id = ids[order[next_rank++]];
                    const auto& a = scenario.areas[id];
                    out.rects[id] = Rect{cursor, row.baseline_y, a.width, a.depth};
                    out.row_orders.back().push_back(id);
                    occupants.push_back({out.rects[id], "area " + std::to_string(id)});
                    cursor += a.width;
                    band = std::max(band, a.depth);
                    ++free_left;
                    break;
                }
                case CellKind::Fixed: {
                    const auto& a = scenario.areas[cell.area];
                    const Point anchor = a.anchor.value_or(Point{cursor, row.baseline_y});
                    out.rects[cell.area] = Rect{anchor.x, anchor.y, a.width, a.depth};
                    occupants.push_back({out.rects[cell.area], "area " + std::to_string(cell.area)});
                    cursor = std::max(cursor, anchor.x + a.width);
                    band = std::max(band, anchor.y + a.depth - row.baseline_y);
                    break;
                }
                case CellKind::Block: {
                    const double x = cell.anchor_x.value_or(cursor);
                    Rect rect{x, row.baseline_y, cell.width, cell.depth};
                    out.blocks.push_back({cell.name, r, rect});
                    occupants.push_back({rect, cell.name});
                    cursor = std::max(cursor, x + cell.width);
                    band = std::max(band, cell.depth);
                    if (tpl.isolation && tpl.isolation->block == cell.name &&
                        free_left != tpl.isolation->free_cells_left) {
                        out.violations.push_back({"isolation_rule",
                                                  cell.name + " has " + std::to_string(free_left) + " areas to its left",
                                                  std::abs(static_cast<double>(free_left - tpl.isolation->free_cells_left))});
                    }
                    break;
                }
                case CellKind::Corridor: {
                    const double w = corridor_width(cell.corridor);
                    strips.emplace_back(cell.corridor, cursor);
                    cursor += w;
                    break;
                }
            }
        }
        for (const auto& [id, x] : strips) {
            Rect rect{x, row.baseline_y, corridor_width(id), band};
            out.corridors.push_back({id, r, rect});
            occupants.push_back({rect, "corridor " + id});
        }
        // every placement advances the cursor to at least its right edge
        const double length = cursor;
        out.row_lengths.push_back(length);
        if (length > row.max_length + kGeomEps)
            out.violations.push_back({"row_length", "row " + std::to_string(r + 1) + " occupies " + fmt(length) + " m of " +
                                                        fmt(row.max_length) + " m",
                                      length - row.max_length});
    }

    for (std::size_t k = 0; k < tpl.corridors.size(); ++k) {
        const auto& c = tpl.corridors[k];
        const double w = out.corridor_widths[k];
        if (w < c.min_width - kGeomEps || w > c.max_width + kGeomEps)
            out.violations.push_back({"corridor_bounds", c.id + " width " + fmt(w) + " m outside bounds",
                                      std::max(c.min_width - w, w - c.max_width)});
    }

    for (std::size_t i = 0; i < occupants.size(); ++i) {
        for (std::size_t j = i + 1; j < occupants.size(); ++j) {
            const double area = overlap_area(occupants[i].rect, occupants[j].rect);
            if (area > kGeomEps)
                out.violations.push_back({"overlap", occupants[i].label + " overlaps " + occupants[j].label, area});
        }
    }

    for (std::size_t i = 0; i < n; ++i) out.centroids[i] = out.rects[i].center();
    return out;
}

LayoutGenome encode(const std::vector<std::vector<int>>& rows, const std::vector<double>& corridor_widths,
                    const Scenario& scenario) {
    const auto ids = scenario.relocatable_ids();
    const auto& tpl = scenario.layout_template;
    const auto variable = tpl.variable_corridors();
    LayoutGenome g;
    g.genes.assign(ids.size() + variable.size(), 0.0);

    std::vector<int> sequence;
    for (const auto& r : rows) sequence.insert(sequence.end(), r.begin(), r.end());
    if (sequence.size() != ids.size()) throw InvalidArgument("encode: row orders must list every relocatable area once");
    std::vector<bool> seen(ids.size(), false);
    for (std::size_t pos = 0; pos < sequence.size(); ++pos) {
        const auto it = std::find(ids.begin(), ids.end(), sequence[pos]);
        if (it == ids.end()) throw InvalidArgument("encode: area " + std::to_string(sequence[pos]) + " is not relocatable");
        const auto k = static_cast<std::size_t>(it - ids.begin());
        if (seen[k]) throw InvalidArgument("encode: area " + std::to_string(sequence[pos]) + " listed twice");
        seen[k] = true;
        g.genes[k] = (static_cast<double>(pos) + 0.5) / static_cast<double>(sequence.size());
    }
    // the decoder fills free cells in template order, so per-row counts must match
    std::size_t r = 0;
    for (const auto& row : tpl.rows) {
        const std::size_t have = r < rows.size() ? rows[r].size() : 0;
        if (have != row.free_cells()) throw InvalidArgument("encode: row " + std::to_string(r + 1) + " needs " +
                                                            std::to_string(row.free_cells()) + " areas");
        ++r;
    }
    for (std::size_t v = 0; v < variable.size(); ++v) {
        const auto& c = tpl.corridors[variable[v]];
        const double w = variable[v] < corridor_widths.size() ? corridor_widths[variable[v]] : c.min_width;
        g.genes[ids.size() + v] = std::clamp((w - c.min_width) / (c.max_width - c.min_width), 0.0, 1.0);
    }
    return g;
}

double rectilinear_distance(Point p, Point q) { return std::abs(p.x - q.x) + std::abs(p.y - q.y); }

double average_relocatable_width(const Scenario& scenario) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& a : scenario.areas) {
        if (a.fixed) continue;
        sum += a.width;
        ++count;
    }
    if (count == 0) throw InvalidArgument("average_relocatable_width: no relocatable areas");
    return sum / static_cast<double>(count);
}

double normalized_distance(double distance, double average_width) {
    if (!(average_width > 0.0)) throw InvalidArgument("normalized_distance: average width must be positive");
    return distance / average_width;
}

double adjacency_coefficient(double nd, const AdjacencyCoefficientTable& table) {
    if (table.steps.empty()) throw InvalidArgument("adjacency_coefficient: empty table");
    const double rounded = std::round(nd);
    for (const auto& step : table.steps)
        if (rounded <= step.max_nd) return step.b;
    return table.steps.back().b;
}

double flow_cost(const DecodedLayout& layout, const FlowMatrix& flows) {
    if (!layout.feasible()) throw InvalidArgument("flow_cost: layout is infeasible");
    const std::size_t n = std::min(flows.size(), layout.centroids.size());
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) total += flows(i, j) * rectilinear_distance(layout.centroids[i], layout.centroids[j]);
    return total;
}

double closeness_cost(const DecodedLayout& layout, const Scenario& scenario) {
    if (!layout.feasible()) throw InvalidArgument("closeness_cost: layout is infeasible");
    const double wa = average_relocatable_width(scenario);
    const std::size_t n = scenario.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const int r = scenario.ratings(i, j);
            if (r == 0) continue;
            const double nd = normalized_distance(rectilinear_distance(layout.centroids[i], layout.centroids[j]), wa);
            total += r * (1.0 - adjacency_coefficient(nd, scenario.b_table));
        }
    }
    return total;
}

Evaluation evaluate_detailed(const LayoutGenome& genome, const Scenario& scenario) {
    const auto layout = decode(genome, scenario);
    if (!layout.feasible()) {
        const double v = kPenalty * (1.0 + layout.violation_total());
        return {{v, v}, false};
    }
    return {{flow_cost(layout, scenario.flows), closeness_cost(layout, scenario)}, true};
}

ObjectiveVector evaluate(const LayoutGenome& genome, const Scenario& scenario) {
    return evaluate_detailed(genome, scenario).objectives;
}

std::string compact_repr(const DecodedLayout& layout) {
    std::ostringstream os;
    os << '{';
    for (std::size_t r = 0; r < layout.row_orders.size(); ++r) {
        if (r) os << ',';
        os << '[';
        for (std::size_t k = 0; k < layout.row_orders[r].size(); ++k) {
            if (k) os << ',';
            os << layout.row_orders[r][k];
        }
        os << ']';
    }
    os << '}';
    for (std::size_t k = 0; k < layout.corridor_widths.size(); ++k)
        os << ", " << layout.corridor_ids[k] << '=' << fmt(layout.corridor_widths[k]) << " m";
    return os.str();
}

CompactLayout parse_compact_repr(const std::string& text) {
    CompactLayout out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("compact layout: expected '") + c + "' at offset " + std::to_string(pos));
        ++pos;
    };
    auto read_number = [&]() {
        skip_ws();
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(text.substr(pos), &used);
        } catch (const std::exception&) {
            throw ParseError("compact layout: expected a number at offset " + std::to_string(pos));
        }
        pos += used;
        return v;
    };

    expect('{');
    skip_ws();
    while (pos < text.size() && text[pos] == '[') {
        ++pos;
        out.rows.emplace_back();
        skip_ws();
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
        } else {
            for (;;) {
                const double v = read_number();
                if (v != std::floor(v)) throw ParseError("compact layout: area ids must be integers");
                out.rows.back().push_back(static_cast<int>(v));
                skip_ws();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                expect(']');
                break;
            }
        }
        skip_ws();
        if (pos < text.size() && text[pos] == ',') ++pos;
        skip_ws();
    }
    expect('}');
    skip_ws();
    while (pos < text.size()) {
        expect(',');
        skip_ws();
        const std::size_t eq = text.find('=', pos);
        if (eq == std::string::npos) throw ParseError("compact layout: corridor entry needs '='");
        std::string id = text.substr(pos, eq - pos);
        while (!id.empty() && std::isspace(static_cast<unsigned char>(id.back()))) id.pop_back();
        pos = eq + 1;
        const double w = read_number();
        skip_ws();
        if (text.compare(pos, 1, "m") == 0) ++pos;
        out.corridors.emplace_back(std::move(id), w);
        skip_ws();
    }
    return out;
}

}  // namespace edl
