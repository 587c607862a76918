#include "bipath/poset.hpp"

namespace bipath {

int vertex_id(const BipathShape& s, Path p, int pos) {
    int len = path_len(s, p);
    if (pos < 0 || pos > len + 1) throw error("vertex position out of range");
    if (pos == 0) return 0;
    if (pos == len + 1) return s.max_vertex();
    return p == Path::Upper ? pos : s.n + pos;
}

std::string vertex_name(const BipathShape& s, int vid) {
    if (vid == 0) return "0";
    if (vid == s.max_vertex()) return "1";
    if (vid <= s.n) return "u" + std::to_string(vid);
    if (vid <= s.n + s.m) return "l" + std::to_string(vid - s.n);
    throw error("vertex id out of range");
}

std::string render(const PathInterval& i, const BipathShape& s) {
    int len = path_len(s, i.path);
    auto name = [&](int pos) { return vertex_name(s, vertex_id(s, i.path, pos)); };
    if (i.d > len + 1) throw error("path interval out of range");
    return "[" + name(i.b) + "," + name(i.d) + "]";
}

bool hom_nonzero(const PathInterval& i, const PathInterval& j) {
    if (i.path != j.path) throw error("hom_nonzero: intervals on different paths");
    return j.b <= i.b && i.b <= j.d && j.d <= i.d;
}

std::vector<PathInterval> projective_injective_order(const BipathShape& s, Path p) {
    int K = path_len(s, p) + 1;
    std::vector<PathInterval> order;
    for (int d = 0; d <= K; ++d) order.emplace_back(p, 0, d);
    for (int b = 1; b <= K; ++b) order.emplace_back(p, b, K);
    return order;
}

int chain_index(const PathInterval& i, int K) {
    if (i.b == 0) return i.d;
    if (i.d == K) return K + i.b;
    throw error("chain_index: interval does not touch an endpoint");
}

BipathInterval BipathInterval::make_L(int t, int s) {
    if (t < 0 || s < 0) throw error("L interval requires t >= 0 and s >= 0");
    return {L, t, s};
}

BipathInterval BipathInterval::make_R(int s, int t, const BipathShape& shape) {
    if (s < 1 || s > shape.n + 1 || t < 1 || t > shape.m + 1)
        throw error("R interval coordinates out of range");
    return {R, s, t};
}

BipathInterval BipathInterval::make_U(int birth, int death, const BipathShape& shape) {
    if (birth < 1 || birth > death || death > shape.n)
        throw error("U interval must stay strictly inside the upper path");
    return {U, birth, death};
}

BipathInterval BipathInterval::make_D(int birth, int death, const BipathShape& shape) {
    if (birth < 1 || birth > death || death > shape.m)
        throw error("D interval must stay strictly inside the lower path");
    return {D, birth, death};
}

std::vector<BipathInterval> enumerate_intervals(const BipathShape& s) {
    std::vector<BipathInterval> out;
    out.push_back(BipathInterval::make_full());
    for (int t = 0; t <= s.n; ++t)
        for (int l = 0; l <= s.m; ++l) out.push_back(BipathInterval::make_L(t, l));
    for (int u = 1; u <= s.n + 1; ++u)
        for (int l = 1; l <= s.m + 1; ++l) out.push_back(BipathInterval::make_R(u, l, s));
    for (int b = 1; b <= s.n; ++b)
        for (int d = b; d <= s.n; ++d) out.push_back(BipathInterval::make_U(b, d, s));
    for (int b = 1; b <= s.m; ++b)
        for (int d = b; d <= s.m; ++d) out.push_back(BipathInterval::make_D(b, d, s));
    return out;
}

bool interval_contains(const BipathInterval& i, const BipathShape& s, int vid) {
    bool is_min = vid == 0;
    bool is_max = vid == s.max_vertex();
    bool on_upper = vid >= 1 && vid <= s.n;
    int up = on_upper ? vid : 0;
    bool on_lower = vid > s.n && vid <= s.n + s.m;
    int lo = on_lower ? vid - s.n : 0;
    switch (i.kind) {
        case BipathInterval::Full: return true;
        case BipathInterval::L:
            return is_min || (on_upper && up <= i.a) || (on_lower && lo <= i.b);
        case BipathInterval::R:
            return is_max || (on_upper && up >= i.a) || (on_lower && lo >= i.b);
        case BipathInterval::U: return on_upper && up >= i.a && up <= i.b;
        case BipathInterval::D: return on_lower && lo >= i.a && lo <= i.b;
    }
    throw error("unreachable");
}

std::vector<int> dim_vector(const BipathInterval& i, const BipathShape& s) {
    std::vector<int> v(s.num_vertices(), 0);
    for (int vid = 0; vid < s.num_vertices(); ++vid)
        if (interval_contains(i, s, vid)) v[vid] = 1;
    return v;
}

std::pair<std::string, std::string> display_coords(const BipathInterval& i, const BipathShape& s) {
    auto up = [&](int t) { return t == 0 ? std::string("0") : "u" + std::to_string(t); };
    auto lo = [&](int t) { return t == 0 ? std::string("0") : "l" + std::to_string(t); };
    auto up_r = [&](int t) { return t == s.n + 1 ? std::string("1") : "u" + std::to_string(t); };
    auto lo_r = [&](int t) { return t == s.m + 1 ? std::string("1") : "l" + std::to_string(t); };
    switch (i.kind) {
        case BipathInterval::Full: return {"", ""};
        case BipathInterval::L: return {lo(i.b), up(i.a)};
        case BipathInterval::R: return {up_r(i.a), lo_r(i.b)};
        case BipathInterval::U: return {"u" + std::to_string(i.a), "u" + std::to_string(i.b)};
        case BipathInterval::D: return {"l" + std::to_string(i.b), "l" + std::to_string(i.a)};
    }
    throw error("unreachable");
}

std::string render(const BipathInterval& i, const BipathShape& s) {
    if (i.kind == BipathInterval::Full) return "B";
    static const char* tags[] = {"B", "L", "R", "U", "D"};
    auto [a, b] = display_coords(i, s);
    return std::string(tags[i.kind]) + "<" + a + "," + b + ">";
}

bool interval_subset(const BipathInterval& inner, const BipathInterval& outer, const BipathShape& s) {
    for (int vid = 0; vid < s.num_vertices(); ++vid)
        if (interval_contains(inner, s, vid) && !interval_contains(outer, s, vid)) return false;
    return true;
}

}  // namespace bipath
