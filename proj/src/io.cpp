#include "bipath/io.hpp"

#include <json.hpp>

namespace bipath {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string arrow_key(const BipathShape& s, Path p, int pos) {
    auto name = [&](int q) { return vertex_name(s, vertex_id(s, p, q)); };
    return name(pos) + "->" + name(pos + 1);
}

ordered_json matrix_to_json(const FMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

FMatrix matrix_from_json(const ordered_json& j, int rows, int cols, FieldSpec f,
                         const std::string& key) {
    FMatrix m(rows, cols, f);
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw error("map '" + key + "': expected " + std::to_string(rows) + " rows");
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
            throw error("map '" + key + "': expected " + std::to_string(cols) + " columns");
        for (int c = 0; c < cols; ++c) {
            long v = j[i][c].get<long>();
            if (v < 0 || v >= static_cast<long>(f.p))
                throw error("map '" + key + "': entry outside [0, p)");
            m.at(i, c) = static_cast<std::uint32_t>(v);
        }
    }
    return m;
}

}  // namespace

std::string module_to_json(const BipathModule& v) {
    ordered_json j;
    j["shape"] = {v.shape.n, v.shape.m};
    j["p"] = v.field.p;
    ordered_json dims;
    dims["0"] = v.dim0;
    for (int k = 1; k <= v.shape.n; ++k) dims["u" + std::to_string(k)] = v.dim_up[k - 1];
    for (int k = 1; k <= v.shape.m; ++k) dims["l" + std::to_string(k)] = v.dim_low[k - 1];
    dims["1"] = v.dim1;
    j["dims"] = dims;
    ordered_json maps;
    for (Path p : {Path::Upper, Path::Lower})
        for (int pos = 0; pos <= path_len(v.shape, p); ++pos) {
            const FMatrix& m = v.map_at(p, pos);
            if (m.rows() == 0 || m.cols() == 0) continue;
            maps[arrow_key(v.shape, p, pos)] = matrix_to_json(m);
        }
    j["maps"] = maps;
    return j.dump(2) + "\n";
}

BipathModule module_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw error(std::string("module JSON parse failure: ") + e.what());
    }
    if (!j.contains("shape") || !j["shape"].is_array() || j["shape"].size() != 2)
        throw error("module JSON needs \"shape\":[n,m]");
    BipathShape shape(j["shape"][0].get<int>(), j["shape"][1].get<int>());
    FieldSpec field(j.value("p", 2u));
    BipathModule v = BipathModule::zeros(shape, field);
    if (!j.contains("dims")) throw error("module JSON needs \"dims\"");
    const ordered_json& dims = j.at("dims");
    auto dim_of = [&](const std::string& key) {
        if (!dims.contains(key)) throw error("module JSON: missing dimension for vertex " + key);
        int d = dims.at(key).get<int>();
        if (d < 0) throw error("module JSON: negative dimension at vertex " + key);
        return d;
    };
    v.dim0 = dim_of("0");
    v.dim1 = dim_of("1");
    for (int k = 1; k <= shape.n; ++k) v.dim_up[k - 1] = dim_of("u" + std::to_string(k));
    for (int k = 1; k <= shape.m; ++k) v.dim_low[k - 1] = dim_of("l" + std::to_string(k));
    const ordered_json maps = j.value("maps", ordered_json::object());
    for (Path p : {Path::Upper, Path::Lower})
        for (int pos = 0; pos <= path_len(shape, p); ++pos) {
            std::string key = arrow_key(shape, p, pos);
            int rows = v.dim_at(p, pos + 1), cols = v.dim_at(p, pos);
            if (!maps.contains(key)) {
                if (rows != 0 && cols != 0)
                    throw error("module JSON: missing map '" + key +
                                "' (only maps with a zero endpoint may be omitted)");
                v.map_at(p, pos) = FMatrix(rows, cols, field);
            } else {
                v.map_at(p, pos) = matrix_from_json(maps.at(key), rows, cols, field, key);
            }
        }
    for (const auto& [key, val] : maps.items()) {
        bool known = false;
        for (Path p : {Path::Upper, Path::Lower})
            for (int pos = 0; pos <= path_len(shape, p); ++pos)
                if (key == arrow_key(shape, p, pos)) known = true;
        if (!known) throw error("module JSON: unknown map key '" + key + "'");
    }
    Violation check = validate(v);
    if (!check.ok) throw error("module JSON: " + check.message);
    return v;
}

namespace {

struct GridPoint {
    long x = 0, y = 0;
    bool leq(const GridPoint& o) const { return x <= o.x && y <= o.y; }
};

GridPoint point_from(const ordered_json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2)
        throw error("embedding JSON: " + what + " must be a pair [x,y]");
    return {j[0].get<long>(), j[1].get<long>()};
}

}  // namespace

BipathFiltration restrict_grid(const std::string& grid_json, const std::string& embedding_json) {
    ordered_json grid, emb;
    try {
        grid = ordered_json::parse(grid_json);
        emb = ordered_json::parse(embedding_json);
    } catch (const std::exception& e) {
        throw error(std::string("JSON parse failure: ") + e.what());
    }
    if (!emb.contains("shape") || !emb["shape"].is_array() || emb["shape"].size() != 2)
        throw error("embedding JSON needs \"shape\":[n,m]");
    BipathShape shape(emb["shape"][0].get<int>(), emb["shape"][1].get<int>());
    GridPoint zero = point_from(emb.at("zero"), "zero");
    GridPoint one = point_from(emb.at("one"), "one");
    std::vector<GridPoint> upper, lower;
    for (const auto& p : emb.at("upper")) upper.push_back(point_from(p, "upper point"));
    for (const auto& p : emb.at("lower")) lower.push_back(point_from(p, "lower point"));
    if (static_cast<int>(upper.size()) != shape.n || static_cast<int>(lower.size()) != shape.m)
        throw error("embedding JSON: path point counts must match the shape");

    // order embedding check: comparabilities in the poset must map exactly
    // to comparabilities in the grid
    auto point_at = [&](int vid) -> const GridPoint& {
        if (vid == 0) return zero;
        if (vid == shape.max_vertex()) return one;
        if (vid <= shape.n) return upper[vid - 1];
        return lower[vid - shape.n - 1];
    };
    auto poset_leq = [&](int a, int b) {
        if (a == b || a == 0 || b == shape.max_vertex()) return true;
        if (b == 0 || a == shape.max_vertex()) return false;
        bool a_up = a <= shape.n, b_up = b <= shape.n;
        return a_up == b_up && a <= b;
    };
    for (int a = 0; a < shape.num_vertices(); ++a)
        for (int b = 0; b < shape.num_vertices(); ++b)
            if (poset_leq(a, b) != point_at(a).leq(point_at(b)))
                throw error("embedding JSON: the points do not form an order embedding (vertices " +
                            vertex_name(shape, a) + ", " + vertex_name(shape, b) + ")");

    BipathFiltration f;
    f.shape = shape;
    if (!grid.contains("simplices") || !grid["simplices"].is_array())
        throw error("grid JSON needs \"simplices\":[...]");
    for (const auto& js : grid["simplices"]) {
        Simplex s;
        s.id = js.at("id").get<std::string>();
        for (const auto& v : js.at("v")) s.verts.push_back(v.get<int>());
        GridPoint g = point_from(js.at("grade"), "simplex grade");
        std::sort(s.verts.begin(), s.verts.end());
        s.u = shape.n + 1;
        if (g.leq(zero)) s.u = 0;
        else
            for (int k = 1; k <= shape.n; ++k)
                if (g.leq(upper[k - 1])) { s.u = k; break; }
        s.l = shape.m + 1;
        if (g.leq(zero)) s.l = 0;
        else
            for (int k = 1; k <= shape.m; ++k)
                if (g.leq(lower[k - 1])) { s.l = k; break; }
        f.simplices.push_back(std::move(s));
    }
    // round-trip through the parser to reuse its validation
    return parse_filtration(format_filtration(f));
}

}  // namespace bipath
