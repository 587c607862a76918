#include "bipath/module.hpp"

#include <algorithm>

namespace bipath {

int BipathModule::dim_at(Path p, int pos) const {
    int len = path_len(shape, p);
    if (pos < 0 || pos > len + 1) throw error("dim_at: position out of range");
    if (pos == 0) return dim0;
    if (pos == len + 1) return dim1;
    return p == Path::Upper ? dim_up[pos - 1] : dim_low[pos - 1];
}

int BipathModule::dim_vertex(int vid) const {
    if (vid == 0) return dim0;
    if (vid == shape.max_vertex()) return dim1;
    if (vid <= shape.n) return dim_up[vid - 1];
    return dim_low[vid - shape.n - 1];
}

const FMatrix& BipathModule::map_at(Path p, int pos) const {
    const auto& maps = p == Path::Upper ? up_maps : low_maps;
    if (pos < 0 || pos >= static_cast<int>(maps.size())) throw error("map_at: position out of range");
    return maps[pos];
}

FMatrix& BipathModule::map_at(Path p, int pos) {
    auto& maps = p == Path::Upper ? up_maps : low_maps;
    if (pos < 0 || pos >= static_cast<int>(maps.size())) throw error("map_at: position out of range");
    return maps[pos];
}

FMatrix BipathModule::composite(Path p, int from, int to) const {
    if (from > to) throw error("composite: from > to");
    FMatrix r = FMatrix::identity(dim_at(p, from), field);
    for (int pos = from; pos < to; ++pos) r = map_at(p, pos).mul(r);
    return r;
}

BipathModule BipathModule::zeros(const BipathShape& shape, FieldSpec field) {
    BipathModule v;
    v.shape = shape;
    v.field = field;
    v.dim_up.assign(shape.n, 0);
    v.dim_low.assign(shape.m, 0);
    v.up_maps.assign(shape.n + 1, FMatrix(0, 0, field));
    v.low_maps.assign(shape.m + 1, FMatrix(0, 0, field));
    return v;
}

FMatrix PathModule::composite(int from, int to) const {
    if (from > to || to > K()) throw error("composite: range out of bounds");
    FMatrix r = FMatrix::identity(dims[from], field);
    for (int pos = from; pos < to; ++pos) r = maps[pos].mul(r);
    return r;
}

Violation validate(const BipathModule& v) {
    if (static_cast<int>(v.dim_up.size()) != v.shape.n ||
        static_cast<int>(v.dim_low.size()) != v.shape.m ||
        static_cast<int>(v.up_maps.size()) != v.shape.n + 1 ||
        static_cast<int>(v.low_maps.size()) != v.shape.m + 1)
        return {false, "dimension/map lists do not match the shape"};
    for (Path p : {Path::Upper, Path::Lower}) {
        int len = path_len(v.shape, p);
        for (int pos = 0; pos <= len; ++pos) {
            const FMatrix& m = v.map_at(p, pos);
            if (m.field().p != v.field.p) return {false, "map field mismatch"};
            int src = v.dim_at(p, pos), dst = v.dim_at(p, pos + 1);
            if (static_cast<int>(m.rows()) != dst || static_cast<int>(m.cols()) != src) {
                std::string path_tag = p == Path::Upper ? "upper" : "lower";
                return {false, "map shape mismatch on " + path_tag + " arrow at position " +
                                   std::to_string(pos) + ": expected " + std::to_string(dst) + "x" +
                                   std::to_string(src) + ", got " + std::to_string(m.rows()) + "x" +
                                   std::to_string(m.cols())};
            }
        }
    }
    FMatrix up = v.composite(Path::Upper, 0, v.shape.n + 1);
    FMatrix low = v.composite(Path::Lower, 0, v.shape.m + 1);
    if (up != low)
        return {false, "commutativity violated: the upper and lower composites from the minimum "
                       "to the maximum differ"};
    return {};
}

BipathModule interval_module(const BipathInterval& i, const BipathShape& shape, FieldSpec field) {
    BipathModule v = BipathModule::zeros(shape, field);
    v.dim0 = interval_contains(i, shape, 0) ? 1 : 0;
    v.dim1 = interval_contains(i, shape, shape.max_vertex()) ? 1 : 0;
    for (int k = 1; k <= shape.n; ++k) v.dim_up[k - 1] = interval_contains(i, shape, k) ? 1 : 0;
    for (int k = 1; k <= shape.m; ++k)
        v.dim_low[k - 1] = interval_contains(i, shape, shape.n + k) ? 1 : 0;
    for (Path p : {Path::Upper, Path::Lower}) {
        int len = path_len(shape, p);
        for (int pos = 0; pos <= len; ++pos) {
            int src = v.dim_at(p, pos), dst = v.dim_at(p, pos + 1);
            FMatrix m(dst, src, field);
            if (src == 1 && dst == 1) m.at(0, 0) = 1;
            v.map_at(p, pos) = m;
        }
    }
    return v;
}

BipathModule direct_sum(const BipathModule& v, const BipathModule& w) {
    if (!(v.shape == w.shape) || v.field.p != w.field.p)
        throw error("direct_sum: shape or field mismatch");
    BipathModule r = BipathModule::zeros(v.shape, v.field);
    r.dim0 = v.dim0 + w.dim0;
    r.dim1 = v.dim1 + w.dim1;
    for (int k = 0; k < v.shape.n; ++k) r.dim_up[k] = v.dim_up[k] + w.dim_up[k];
    for (int k = 0; k < v.shape.m; ++k) r.dim_low[k] = v.dim_low[k] + w.dim_low[k];
    for (Path p : {Path::Upper, Path::Lower}) {
        int len = path_len(v.shape, p);
        for (int pos = 0; pos <= len; ++pos) {
            const FMatrix& a = v.map_at(p, pos);
            const FMatrix& b = w.map_at(p, pos);
            FMatrix m(a.rows() + b.rows(), a.cols() + b.cols(), v.field);
            for (std::size_t i = 0; i < a.rows(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
            r.map_at(p, pos) = m;
        }
    }
    return r;
}

PathModule restrict_path(const BipathModule& v, Path p) {
    PathModule pm;
    pm.field = v.field;
    int len = path_len(v.shape, p);
    for (int pos = 0; pos <= len + 1; ++pos) pm.dims.push_back(v.dim_at(p, pos));
    for (int pos = 0; pos <= len; ++pos) pm.maps.push_back(v.map_at(p, pos));
    return pm;
}

namespace {

std::uint64_t next_rand(std::uint64_t& state) {
    // splitmix64
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

FMatrix random_invertible(std::size_t n, FieldSpec field, std::uint64_t& state) {
    while (true) {
        FMatrix m(n, n, field);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = static_cast<std::uint32_t>(next_rand(state) % field.p);
        if (rank(m) == n) return m;
    }
}

std::pair<BipathModule, std::map<BipathInterval, int>> scrambled_sum(
    const std::vector<BipathInterval>& intervals, const BipathShape& shape, FieldSpec field,
    std::uint64_t seed) {
    BipathModule v = BipathModule::zeros(shape, field);
    std::map<BipathInterval, int> truth;
    for (const BipathInterval& i : intervals) {
        v = direct_sum(v, interval_module(i, shape, field));
        ++truth[i];
    }
    std::uint64_t state = seed ^ 0x5eedb1a7a7b1d5eeull;
    std::vector<FMatrix> g(shape.num_vertices());
    for (int vid = 0; vid < shape.num_vertices(); ++vid)
        g[vid] = random_invertible(v.dim_vertex(vid), field, state);
    for (Path p : {Path::Upper, Path::Lower}) {
        int len = path_len(shape, p);
        for (int pos = 0; pos <= len; ++pos) {
            int a = vertex_id(shape, p, pos), b = vertex_id(shape, p, pos + 1);
            v.map_at(p, pos) = g[b].mul(v.map_at(p, pos)).mul(invert(g[a]));
        }
    }
    return {v, truth};
}

}  // namespace bipath
