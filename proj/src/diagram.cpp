#include "bipath/diagram.hpp"

#include <sstream>

#include <json.hpp>

namespace bipath {

using ordered_json = nlohmann::ordered_json;

std::pair<int, int> layout_cell(const BipathInterval& i, const BipathShape& s) {
    const int m = s.m, n = s.n;
    switch (i.kind) {
        case BipathInterval::Full: return {0, m + n + 2};
        case BipathInterval::L: return {m - i.b, m + 1 + i.a};
        case BipathInterval::U: return {m + i.a, m + i.b};
        case BipathInterval::R: return {m + i.a, m + 1 - i.b};
        case BipathInterval::D: return {m + 1 - i.b, m + 1 - i.a};
    }
    throw error("unreachable");
}

PlanarLayout layout(const BipathDiagram& d) {
    const int m = d.shape.m, n = d.shape.n;
    PlanarLayout out;
    out.width = m + n + 2;
    out.height = m + n + 3;
    out.regions = {
        {'B', 0, 0, m + n + 2, m + n + 2},
        {'L', 0, m, m + 1, m + n + 1},
        {'U', m + 1, m + n, m + 1, m + n},
        {'R', m + 1, m + n + 1, 0, m},
        {'D', 1, m, 1, m},
    };
    static const char tags[] = {'B', 'L', 'R', 'U', 'D'};
    for (const auto& [iv, mult] : d.points) {
        auto [x, y] = layout_cell(iv, d.shape);
        out.points.push_back({iv, tags[iv.kind], x, y, mult});
    }
    return out;
}

namespace {

const char* region_tag(BipathInterval::Kind k) {
    static const char* tags[] = {"B", "L", "R", "U", "D"};
    return tags[k];
}

ordered_json diagram_json(const BipathDiagram& d) {
    ordered_json j;
    j["shape"] = {d.shape.n, d.shape.m};
    if (d.degree.has_value()) j["degree"] = *d.degree;
    ordered_json pts = ordered_json::array();
    for (const auto& [iv, mult] : d.points) {
        if (mult < 1) throw error("diagram multiplicities must be positive");
        auto [s, t] = display_coords(iv, d.shape);
        ordered_json p;
        p["region"] = region_tag(iv.kind);
        p["s"] = s;
        p["t"] = t;
        p["multiplicity"] = mult;
        pts.push_back(p);
    }
    j["points"] = pts;
    return j;
}

int parse_vertex_token(const std::string& tok, char expected_path, int len, int endpoint_value,
                       const std::string& endpoint_token) {
    if (tok == endpoint_token) return endpoint_value;
    if (tok.size() < 2 || tok[0] != expected_path)
        throw error("bad coordinate token '" + tok + "'");
    int v = std::stoi(tok.substr(1));
    if (v < 1 || v > len) throw error("coordinate token '" + tok + "' out of range");
    return v;
}

BipathInterval interval_from_tokens(const std::string& region, const std::string& s,
                                    const std::string& t, const BipathShape& shape) {
    if (region == "B") return BipathInterval::make_full();
    if (region == "L")
        return BipathInterval::make_L(parse_vertex_token(t, 'u', shape.n, 0, "0"),
                                      parse_vertex_token(s, 'l', shape.m, 0, "0"));
    if (region == "R")
        return BipathInterval::make_R(parse_vertex_token(s, 'u', shape.n, shape.n + 1, "1"),
                                      parse_vertex_token(t, 'l', shape.m, shape.m + 1, "1"), shape);
    if (region == "U")
        return BipathInterval::make_U(parse_vertex_token(s, 'u', shape.n, -1, ""),
                                      parse_vertex_token(t, 'u', shape.n, -1, ""), shape);
    if (region == "D")
        return BipathInterval::make_D(parse_vertex_token(t, 'l', shape.m, -1, ""),
                                      parse_vertex_token(s, 'l', shape.m, -1, ""), shape);
    throw error("unknown region '" + region + "'");
}

}  // namespace

std::string emit_json(const BipathDiagram& d) { return diagram_json(d).dump(); }

std::string emit_csv(const BipathDiagram& d) {
    std::ostringstream out;
    out << "region,s,t,multiplicity\n";
    for (const auto& [iv, mult] : d.points) {
        auto [s, t] = display_coords(iv, d.shape);
        out << region_tag(iv.kind) << "," << s << "," << t << "," << mult << "\n";
    }
    return out.str();
}

std::string emit_svg(const BipathDiagram& d) {
    const PlanarLayout lay = layout(d);
    const int cell = 40, margin = 70;
    const int w = margin * 2 + lay.width * cell;
    const int h = margin * 2 + lay.height * cell;
    auto px = [&](int x) { return margin + x * cell; };
    auto py = [&](int y) { return margin + (lay.height - 1 - y) * cell; };  // y grows upward

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    svg << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    static const std::map<char, const char*> fills = {
        {'B', "#d0d0f8"}, {'L', "#eef4ff"}, {'U', "#eaffea"}, {'R', "#fff2e2"}, {'D', "#ffecec"}};
    for (const RegionRect& r : lay.regions) {
        svg << "<rect x=\"" << px(r.x0) - cell / 2 << "\" y=\"" << py(r.y1) - cell / 2
            << "\" width=\"" << (r.x1 - r.x0 + 1) * cell << "\" height=\""
            << (r.y1 - r.y0 + 1) * cell << "\" fill=\"" << fills.at(r.region)
            << "\" stroke=\"#888\"/>\n";
        svg << "<text x=\"" << px(r.x0) - cell / 2 + 4 << "\" y=\"" << py(r.y1) - cell / 2 + 14
            << "\" font-size=\"12\" fill=\"#555\">" << r.region << "</text>\n";
    }
    // axis tick labels: top edge serves the upper-left half, bottom edge the
    // lower-right half; matching labels on opposite edges hint at the wrap-
    // around identification of the grid
    const int n = d.shape.n, m = d.shape.m;
    auto text = [&](int x, int y, const std::string& t, const char* anchor) {
        svg << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"11\" fill=\"#333\" text-anchor=\""
            << anchor << "\">" << t << "</text>\n";
    };
    for (int x = 0; x <= m; ++x)
        text(px(x), py(m + n + 1) - cell, x == m ? "0" : "l" + std::to_string(m - x), "middle");
    for (int x = m + 1; x <= m + n; ++x)
        text(px(x), py(m + n + 1) - cell, "u" + std::to_string(x - m), "middle");
    for (int x = 1; x <= m; ++x)
        text(px(x), py(0) + cell, "l" + std::to_string(m + 1 - x), "middle");
    for (int x = m + 1; x <= m + n + 1; ++x)
        text(px(x), py(0) + cell, x == m + n + 1 ? "1" : "u" + std::to_string(x - m), "middle");
    for (int y = m + 1; y <= m + n + 1; ++y)
        text(px(0) - cell, py(y), y == m + 1 ? "0" : "u" + std::to_string(y - m - 1), "end");
    for (int y = 1; y <= m; ++y)
        text(px(0) - cell, py(y), "l" + std::to_string(m + 1 - y), "end");
    for (int y = 0; y <= m; ++y)
        text(px(m + n + 1) + cell, py(y), y == 0 ? "1" : "l" + std::to_string(m + 1 - y), "start");
    for (int y = m + 1; y <= m + n; ++y)
        text(px(m + n + 1) + cell, py(y), "u" + std::to_string(y - m), "start");

    for (const LayoutPoint& p : lay.points) {
        svg << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y)
            << "\" r=\"9\" fill=\"#3a4ecc\"/>\n";
        svg << "<text x=\"" << px(p.x) << "\" y=\"" << py(p.y) + 4
            << "\" font-size=\"11\" fill=\"white\" text-anchor=\"middle\">" << p.mult
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string emit(const BipathDiagram& d, const std::string& format) {
    if (format == "json") return emit_json(d);
    if (format == "csv") return emit_csv(d);
    if (format == "svg") return emit_svg(d);
    throw error("unknown output format '" + format + "'");
}

BipathDiagram parse_diagram_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw error(std::string("diagram JSON parse failure: ") + e.what());
    }
    BipathDiagram d;
    if (!j.contains("shape") || !j["shape"].is_array() || j["shape"].size() != 2)
        throw error("diagram JSON needs \"shape\":[n,m]");
    d.shape = BipathShape(j["shape"][0].get<int>(), j["shape"][1].get<int>());
    if (j.contains("degree")) d.degree = j["degree"].get<int>();
    for (const auto& p : j.value("points", ordered_json::array())) {
        BipathInterval iv = interval_from_tokens(p.at("region").get<std::string>(),
                                                 p.value("s", ""), p.value("t", ""), d.shape);
        int mult = p.at("multiplicity").get<int>();
        if (mult < 1) throw error("diagram multiplicities must be positive");
        if (d.points.count(iv)) throw error("duplicate diagram point");
        d.points[iv] = mult;
    }
    return d;
}

}  // namespace bipath
