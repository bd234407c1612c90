#include "edlayout/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace edl {

using nlohmann::json;

AdjacencyCoefficientTable AdjacencyCoefficientTable::standard() {
    return {{{0, 1.0}, {1, 0.75}, {2, 0.5}, {3, 0.25}, {4, 0.0}}};
}

std::string AdjacencyCoefficientTable::check() const {
    if (steps.empty()) return "table has no steps";
    if (steps.front().max_nd != 0.0 || steps.front().b != 1.0)
        return "first step must cover nd = 0 with b = 1";
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const auto& s = steps[k];
        if (!(s.b >= 0.0 && s.b <= 1.0)) return "coefficient outside [0, 1]";
        if (k > 0) {
            if (!(s.max_nd > steps[k - 1].max_nd)) return "step bounds must increase";
            if (s.b > steps[k - 1].b) return "coefficients must be non-increasing";
        }
    }
    return {};
}

Cell Cell::fixed(int area_id) {
    Cell c;
    c.kind = CellKind::Fixed;
    c.area = area_id;
    return c;
}

Cell Cell::free() { return Cell{}; }

Cell Cell::corridor_cell(std::string id) {
    Cell c;
    c.kind = CellKind::Corridor;
    c.corridor = std::move(id);
    return c;
}

Cell Cell::block(std::string name, double width, double depth, std::optional<double> anchor_x) {
    Cell c;
    c.kind = CellKind::Block;
    c.name = std::move(name);
    c.width = width;
    c.depth = depth;
    c.anchor_x = anchor_x;
    return c;
}

std::size_t TemplateRow::free_cells() const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return c.kind == CellKind::Free; }));
}

std::size_t PlacementTemplate::free_cells() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.free_cells();
    return n;
}

const CorridorBounds* PlacementTemplate::find_corridor(const std::string& id) const {
    for (const auto& c : corridors)
        if (c.id == id) return &c;
    return nullptr;
}

std::vector<std::size_t> PlacementTemplate::variable_corridors() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < corridors.size(); ++k)
        if (corridors[k].variable()) out.push_back(k);
    return out;
}

std::vector<int> Scenario::relocatable_ids() const {
    std::vector<int> ids;
    for (const auto& a : areas)
        if (!a.fixed) ids.push_back(a.id);
    return ids;
}

std::size_t Scenario::relocatable_count() const { return relocatable_ids().size(); }

std::size_t Scenario::genome_length() const {
    return relocatable_count() + layout_template.variable_corridors().size();
}

bool ValidationReport::has(const std::string& code) const {
    return std::any_of(findings.begin(), findings.end(), [&](const Finding& f) { return f.code == code; });
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < findings.size(); ++k) {
        if (k) os << "; ";
        os << findings[k].message << " [" << findings[k].code << "]";
    }
    return os.str();
}

ValidationReport validate(const Scenario& s) {
    ValidationReport report;
    auto add = [&](std::string code, std::string message) {
        report.findings.push_back({std::move(code), std::move(message)});
    };
    const std::size_t n = s.areas.size();
    if (n == 0) add("no_areas", "scenario has no service areas");

    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = s.areas[i];
        if (a.id != static_cast<int>(i))
            add("noncontiguous_ids", "area ids must be 0..N-1 in order (position " + std::to_string(i) +
                                         " holds id " + std::to_string(a.id) + ")");
        if (!(a.width > 0.0) || !(a.depth > 0.0))
            add("invalid_area_size", "area " + std::to_string(a.id) + " needs positive width and depth");
        if (a.fixed && !a.anchor) add("missing_anchor", "fixed area " + std::to_string(a.id) + " has no anchor");
    }

    if (s.flows.size() != n || s.ratings.size() != n) {
        add("dimension_mismatch", "dimension mismatch: flow and rating matrices must be " + std::to_string(n) +
                                      "x" + std::to_string(n));
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double f = s.flows(i, j);
                if (!std::isfinite(f))
                    add("nonfinite_flow", "flow (" + std::to_string(i) + "," + std::to_string(j) + ") is not finite");
                else if (f < 0.0)
                    add("negative_flow", "negative flow at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                if (i == j && f != 0.0) add("nonzero_diagonal_flow", "nonzero diagonal flow at area " + std::to_string(i));

                const int r = s.ratings(i, j);
                if (r < 0 || r > 5)
                    add("rating_out_of_range", "rating outside AEIOUX set at (" + std::to_string(i) + "," +
                                                   std::to_string(j) + "): " + std::to_string(r));
                if (i == j && r != 0) add("nonzero_diagonal_rating", "nonzero diagonal rating at area " + std::to_string(i));
                if (i < j && r != s.ratings(j, i))
                    add("asymmetric_rating", "rating (" + std::to_string(i) + "," + std::to_string(j) + ") differs from its mirror");
            }
        }
    }

    const auto& t = s.layout_template;
    if (t.rows.size() != 3) add("row_count", "template must have exactly 3 rows");

    const std::size_t relocatable = s.relocatable_count();
    const std::size_t free = t.free_cells();
    if (free < relocatable)
        add("free_cell_deficit", "free-cell deficit: " + std::to_string(free) + " free cells for " +
                                     std::to_string(relocatable) + " relocatable areas");
    else if (free > relocatable)
        add("free_cell_surplus", "free-cell surplus: " + std::to_string(free) + " free cells for " +
                                     std::to_string(relocatable) + " relocatable areas");

    std::vector<int> fixed_seen(n, 0);
    std::set<std::string> block_names;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (!(row.max_length > 0.0)) add("row_length", "row " + std::to_string(r) + " needs a positive max length");
        for (const auto& c : row.cells) {
            switch (c.kind) {
                case CellKind::Fixed:
                    if (c.area < 0 || static_cast<std::size_t>(c.area) >= n)
                        add("unknown_area", "fixed cell references unknown area " + std::to_string(c.area));
                    else if (!s.areas[c.area].fixed)
                        add("relocatable_in_fixed_cell", "area " + std::to_string(c.area) + " is relocatable but sits in a fixed cell");
                    else
                        ++fixed_seen[c.area];
                    break;
                case CellKind::Corridor:
                    if (!t.find_corridor(c.corridor)) add("unknown_corridor", "cell references unknown corridor " + c.corridor);
                    break;
                case CellKind::Block:
                    if (!(c.width > 0.0) || !(c.depth > 0.0)) add("block_size", "block " + c.name + " needs positive size");
                    block_names.insert(c.name);
                    break;
                case CellKind::Free:
                    break;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (s.areas[i].fixed && fixed_seen[i] != 1)
            add("fixed_area_placement", "fixed area " + std::to_string(i) + " must appear in exactly one fixed cell (found " +
                                            std::to_string(fixed_seen[i]) + ")");
    }

    for (const auto& c : t.corridors) {
        if (!(c.min_width > 0.0) || c.max_width < c.min_width)
            add("corridor_bounds", "corridor " + c.id + " needs 0 < min <= max");
    }

    if (t.isolation) {
        bool found = false;
        for (const auto& row : t.rows) {
            int free_left = 0;
            for (const auto& c : row.cells) {
                if (c.kind == CellKind::Block && c.name == t.isolation->block) {
                    found = true;
                    if (free_left != t.isolation->free_cells_left)
                        add("isolation_rule", "isolation block " + c.name + " has " + std::to_string(free_left) +
                                                  " free cells to its left, expected " +
                                                  std::to_string(t.isolation->free_cells_left));
                    break;
                }
                if (c.kind == CellKind::Free) ++free_left;
            }
        }
        if (!found) add("isolation_rule", "isolation block " + t.isolation->block + " not found in template");
    }

    if (auto msg = s.b_table.check(); !msg.empty()) add("b_table", "adjacency coefficient table: " + msg);
    return report;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

template <typename T>
T get_field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError(where + ": missing key '" + key + "'");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(where + ": bad value for '" + key + "': " + e.what());
    }
}

template <typename T>
std::vector<std::vector<T>> get_table(const json& value, const std::string& what) {
    if (!value.is_array()) throw ParseError(what + " must be an array of rows");
    std::vector<std::vector<T>> rows;
    try {
        for (const auto& row : value) rows.push_back(row.get<std::vector<T>>());
    } catch (const json::exception& e) {
        throw ParseError(what + ": " + e.what());
    }
    return rows;
}

template <typename T>
SquareMatrix<T> to_square(const std::vector<std::vector<T>>& rows, std::size_t n, const std::string& what) {
    if (rows.size() != n)
        throw ValidationError("dimension mismatch: " + what + " has " + std::to_string(rows.size()) +
                              " rows, expected " + std::to_string(n));
    SquareMatrix<T> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw ValidationError("dimension mismatch: " + what + " row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) + " columns, expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<std::vector<double>> read_csv_rows(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open flow file " + path.string());
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(cell, &used));
                if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw ParseError(path.string() + ":" + std::to_string(line_no) + ": not a number: '" + cell + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json cell_to_json(const Cell& c) {
    switch (c.kind) {
        case CellKind::Fixed:
            return {{"type", "fixed"}, {"area", c.area}};
        case CellKind::Free:
            return {{"type", "free"}};
        case CellKind::Corridor:
            return {{"type", "corridor"}, {"id", c.corridor}};
        case CellKind::Block: {
            json j = {{"type", "block"}, {"name", c.name}, {"width_m", c.width}, {"depth_m", c.depth}};
            if (c.anchor_x) j["anchor_x_m"] = *c.anchor_x;
            return j;
        }
    }
    return {};
}

Cell cell_from_json(const json& j, const std::string& where) {
    const auto type = get_field<std::string>(j, "type", where);
    if (type == "fixed") return Cell::fixed(get_field<int>(j, "area", where));
    if (type == "free") return Cell::free();
    if (type == "corridor") return Cell::corridor_cell(get_field<std::string>(j, "id", where));
    if (type == "block") {
        std::optional<double> ax;
        if (j.contains("anchor_x_m")) ax = get_field<double>(j, "anchor_x_m", where);
        return Cell::block(get_field<std::string>(j, "name", where), get_field<double>(j, "width_m", where),
                           get_field<double>(j, "depth_m", where), ax);
    }
    throw ParseError(where + ": unknown cell type '" + type + "'");
}

}  // namespace

FlowMatrix read_flow_csv(const std::filesystem::path& path) {
    auto rows = read_csv_rows(path);
    return to_square(rows, rows.size(), "flow file " + path.filename().string());
}

Scenario scenario_from_json(const json& doc, const std::filesystem::path& base_dir) {
    if (!doc.is_object()) throw ParseError("scenario document must be a JSON object");
    Scenario s;

    if (doc.contains("meta")) {
        const auto& m = doc.at("meta");
        s.meta.name = m.value("name", "");
        s.meta.units = m.value("units", "m");
        s.meta.flow_source = m.value("flow_source", "");
    }
    if (s.meta.units != "m") throw ValidationError("unsupported units '" + s.meta.units + "' (only meters)");

    if (!doc.contains("areas") || !doc.at("areas").is_array()) throw ParseError("scenario: 'areas' must be an array");
    for (const auto& a : doc.at("areas")) {
        ServiceArea area;
        const std::string where = "area";
        area.id = get_field<int>(a, "id", where);
        area.name = a.value("name", "");
        area.width = get_field<double>(a, "width_m", where);
        area.depth = get_field<double>(a, "depth_m", where);
        area.fixed = get_field<bool>(a, "fixed", where);
        if (a.contains("anchor")) {
            auto xy = get_field<std::vector<double>>(a, "anchor", where);
            if (xy.size() != 2) throw ParseError("area " + std::to_string(area.id) + ": anchor must be [x, y]");
            area.anchor = Point{xy[0], xy[1]};
        }
        s.areas.push_back(std::move(area));
    }
    const std::size_t n = s.areas.size();

    if (!doc.contains("flows")) throw ParseError("scenario: missing key 'flows'");
    const auto& flows = doc.at("flows");
    if (flows.is_string()) {
        std::filesystem::path p = flows.get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        s.flows = to_square(read_csv_rows(p), n, "flow file");
    } else {
        s.flows = to_square(get_table<double>(flows, "flows"), n, "flow matrix");
    }
    if (!doc.contains("ratings")) throw ParseError("scenario: missing key 'ratings'");
    s.ratings = to_square(get_table<int>(doc.at("ratings"), "ratings"), n, "rating matrix");

    if (!doc.contains("template")) throw ParseError("scenario: missing key 'template'");
    const auto& t = doc.at("template");
    auto& tpl = s.layout_template;
    tpl.upper_corridor_depth = t.value("upper_corridor_depth_m", 0.0);
    tpl.lower_corridor_depth = t.value("lower_corridor_depth_m", 0.0);
    for (const auto& c : t.value("corridors", json::array())) {
        tpl.corridors.push_back({get_field<std::string>(c, "id", "corridor"), get_field<double>(c, "min_m", "corridor"),
                                 get_field<double>(c, "max_m", "corridor")});
    }
    if (!t.contains("rows") || !t.at("rows").is_array()) throw ParseError("template: 'rows' must be an array");
    for (const auto& r : t.at("rows")) {
        TemplateRow row;
        row.max_length = get_field<double>(r, "max_length_m", "row");
        row.baseline_y = get_field<double>(r, "baseline_y_m", "row");
        if (!r.contains("cells") || !r.at("cells").is_array()) throw ParseError("row: 'cells' must be an array");
        for (const auto& c : r.at("cells")) row.cells.push_back(cell_from_json(c, "cell"));
        tpl.rows.push_back(std::move(row));
    }
    if (t.contains("isolation_rule") && !t.at("isolation_rule").is_null()) {
        const auto& iso = t.at("isolation_rule");
        tpl.isolation = IsolationRule{get_field<std::string>(iso, "block", "isolation_rule"),
                                      get_field<int>(iso, "free_cells_left", "isolation_rule")};
    }

    if (doc.contains("adjacency_table")) {
        s.b_table.steps.clear();
        for (const auto& st : doc.at("adjacency_table"))
            s.b_table.steps.push_back({get_field<double>(st, "max_nd", "adjacency_table"),
                                       get_field<double>(st, "b", "adjacency_table")});
    }

    auto report = validate(s);
    if (!report.ok()) throw ValidationError(report.summary());
    return s;
}

json scenario_to_json(const Scenario& s) {
    json areas = json::array();
    for (const auto& a : s.areas) {
        json j = {{"id", a.id}, {"name", a.name}, {"width_m", a.width}, {"depth_m", a.depth}, {"fixed", a.fixed}};
        if (a.anchor) j["anchor"] = {a.anchor->x, a.anchor->y};
        areas.push_back(std::move(j));
    }
    const std::size_t n = s.size();
    json flows = json::array(), ratings = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json frow = json::array(), rrow = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            frow.push_back(s.flows(i, j));
            rrow.push_back(s.ratings(i, j));
        }
        flows.push_back(std::move(frow));
        ratings.push_back(std::move(rrow));
    }
    const auto& t = s.layout_template;
    json corridors = json::array();
    for (const auto& c : t.corridors) corridors.push_back({{"id", c.id}, {"min_m", c.min_width}, {"max_m", c.max_width}});
    json rows = json::array();
    for (const auto& r : t.rows) {
        json cells = json::array();
        for (const auto& c : r.cells) cells.push_back(cell_to_json(c));
        rows.push_back({{"max_length_m", r.max_length}, {"baseline_y_m", r.baseline_y}, {"cells", std::move(cells)}});
    }
    json tpl = {{"upper_corridor_depth_m", t.upper_corridor_depth},
                {"lower_corridor_depth_m", t.lower_corridor_depth},
                {"corridors", std::move(corridors)},
                {"rows", std::move(rows)}};
    tpl["isolation_rule"] =
        t.isolation ? json{{"block", t.isolation->block}, {"free_cells_left", t.isolation->free_cells_left}} : json(nullptr);
    json table = json::array();
    for (const auto& st : s.b_table.steps) table.push_back({{"max_nd", st.max_nd}, {"b", st.b}});

    return {{"meta", {{"name", s.meta.name}, {"units", s.meta.units}, {"flow_source", s.meta.flow_source}}},
            {"areas", std::move(areas)},
            {"flows", std::move(flows)},
            {"ratings", std::move(ratings)},
            {"template", std::move(tpl)},
            {"adjacency_table", std::move(table)}};
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return scenario_from_json(doc, path.parent_path());
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write scenario file " + path.string());
    out << scenario_to_json(scenario).dump(2) << '\n';
}

FlowMatrix synthetic_flows(const ClosenessMatrix& ratings, std::uint64_t seed) {
    const std::size_t n = ratings.size();
    FlowMatrix f(n, 0.0);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto draw = rng.between(0, 500);  // drawn for every pair to keep the stream layout fixed
            if (i != j && ratings(i, j) != 0) f(i, j) = static_cast<double>(draw);
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// Built-in instance

namespace {

// Upper triangle of the pairwise closeness ratings, row i lists j = i+1..19.
constexpr const char* kDalianRatingRows[] = {
    "4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 3 3 3 3",
    "2 2 2 2 5 3 0 4 4 4 5 3 4 4 3 3 3 4",
    "5 5 2 0 2 1 4 4 4 2 3 4 4 3 3 3 4",
    "5 2 0 2 1 4 4 4 2 3 4 4 3 3 3 4",
    "2 0 2 1 4 4 4 2 3 4 4 3 3 3 4",
    "2 5 1 4 4 4 2 3 5 4 3 3 3 4",
    "3 0 4 4 4 5 3 4 4 3 3 3 4",
    "3 4 4 4 5 3 4 4 3 3 3 4",
    "4 4 4 2 4 4 4 3 3 3 4",
    "5 5 4 4 4 4 3 3 3 4",
    "5 4 4 4 4 3 3 3 4",
    "4 4 4 4 3 3 3 4",
    "4 4 4 3 3 3 4",
    "4 4 3 3 3 4",
    "4 3 3 3 4",
    "3 3 3 4",
    "3 3 4",
    "3 4",
    "4",
};

}  // namespace

Scenario builtin_dalian(const std::optional<std::filesystem::path>& flow_csv, std::uint64_t flow_seed) {
    Scenario s;
    s.meta.name = "Dalian emergency department";

    struct Row {
        const char* name;
        double w, d;
        bool fixed;
        Point anchor;
    };
    // Anchors approximate the published floor plan: lower row baseline y = 0,
    // middle row above the 2.4 m lower corridor, upper row above the 3.6 m
    // upper corridor.
    const Row table[] = {
        {"Soiled utility room", 5.5, 4.5, false, {}},
        {"Gynecology & Obstetrics emergency", 5.5, 4.5, false, {}},
        {"Ophthalmic emergency", 2.75, 4.5, false, {}},
        {"ENT emergency", 3.95, 4.5, false, {}},
        {"Dental emergency", 2.4, 4.5, false, {}},
        {"Neurological emergency", 3.6, 4.5, false, {}},
        {"Dermatology emergency", 3.6, 4.5, false, {}},
        {"Surgical emergency", 3.6, 4.5, false, {}},
        {"Orthopedic emergency", 2.75, 4.5, false, {}},
        {"Clinical laboratory", 5.5, 4.5, false, {}},
        {"Portable imaging room", 2.75, 4.5, false, {}},
        {"Blood bank", 4.5, 4.5, false, {}},
        {"Pediatric emergency", 4.5, 4.5, false, {}},
        {"Operating room", 11.0, 5.4, true, {0.0, 8.8}},
        {"Triage (1)", 9.1, 1.5, true, {54.9, 20.8}},
        {"Registration", 9.1, 3.0, true, {54.9, 17.8}},
        {"Medication room", 6.0, 4.5, true, {16.5, 8.8}},
        {"Triage (2)", 3.9, 4.5, true, {26.1, 8.8}},
        {"Emergency transfusion", 3.9, 4.5, true, {30.0, 8.8}},
        {"Radiology", 13.6, 6.4, true, {0.0, 0.0}},
    };
    for (int i = 0; i < 20; ++i) {
        const auto& r = table[i];
        ServiceArea a{i, r.name, r.w, r.d, r.fixed, std::nullopt};
        if (r.fixed) a.anchor = r.anchor;
        s.areas.push_back(std::move(a));
    }

    s.ratings = ClosenessMatrix(20, 0);
    for (std::size_t i = 0; i < 19; ++i) {
        std::istringstream row(kDalianRatingRows[i]);
        for (std::size_t j = i + 1; j < 20; ++j) {
            int r = 0;
            row >> r;
            s.ratings(i, j) = r;
            s.ratings(j, i) = r;
        }
    }

    auto& t = s.layout_template;
    t.upper_corridor_depth = 3.6;
    t.lower_corridor_depth = 2.4;
    t.corridors = {{"C1", 2.4, 4.0}, {"C2", 3.6, 3.6}};
    t.isolation = IsolationRule{"Airborne infection isolation", 4};

    TemplateRow upper{64.0, 17.8, {}};
    for (int k = 0; k < 4; ++k) upper.cells.push_back(Cell::free());
    upper.cells.push_back(Cell::block("Airborne infection isolation", 4.5, 4.5));
    for (int k = 0; k < 2; ++k) upper.cells.push_back(Cell::free());
    upper.cells.push_back(Cell::corridor_cell("C1"));
    for (int k = 0; k < 3; ++k) upper.cells.push_back(Cell::free());
    upper.cells.push_back(Cell::block("Toilet", 2.0, 4.5, 50.9));
    upper.cells.push_back(Cell::block("Reserved area", 2.0, 4.5, 52.9));
    upper.cells.push_back(Cell::fixed(15));
    upper.cells.push_back(Cell::fixed(14));

    TemplateRow middle{34.3, 8.8, {}};
    middle.cells = {Cell::fixed(13), Cell::free(), Cell::fixed(16), Cell::corridor_cell("C2"), Cell::fixed(17),
                    Cell::fixed(18)};

    TemplateRow lower{34.3, 0.0, {}};
    lower.cells = {Cell::fixed(19),
                   Cell::free(),
                   Cell::free(),
                   Cell::block("Security room", 1.5, 4.5),
                   Cell::free(),
                   Cell::block("Doctors' office", 2.0, 4.5, 32.3)};

    t.rows = {std::move(upper), std::move(middle), std::move(lower)};

    if (flow_csv) {
        s.flows = read_flow_csv(*flow_csv);
        s.meta.flow_source = "file:" + flow_csv->filename().string();
    } else {
        s.flows = synthetic_flows(s.ratings, flow_seed);
        s.meta.flow_source = "synthetic placeholder (uniform 0-500, seed " + std::to_string(flow_seed) + ")";
    }

    auto report = validate(s);
    if (!report.ok()) throw ValidationError("built-in scenario: " + report.summary());
    return s;
}

}  // namespace edl
