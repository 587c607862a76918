#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace oracle {

bool poset_leq(const BipathShape& s, int a, int b) {
    if (a == b || a == 0 || b == s.max_vertex()) return true;
    if (b == 0 || a == s.max_vertex()) return false;
    bool a_up = a <= s.n, b_up = b <= s.n;
    return a_up == b_up && a <= b;
}

std::vector<std::set<int>> brute_force_intervals(const BipathShape& s) {
    int nv = s.num_vertices();
    // Hasse diagram adjacency (covering relations in either direction)
    auto covers = [&](int a, int b) {
        if (!poset_leq(s, a, b) || a == b) return false;
        for (int c = 0; c < nv; ++c)
            if (c != a && c != b && poset_leq(s, a, c) && poset_leq(s, c, b)) return false;
        return true;
    };
    std::vector<std::vector<int>> adj(nv);
    for (int a = 0; a < nv; ++a)
        for (int b = 0; b < nv; ++b)
            if (covers(a, b) || covers(b, a)) adj[a].push_back(b);

    std::vector<std::set<int>> out;
    for (unsigned mask = 1; mask < (1u << nv); ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < nv; ++v)
            if (mask & (1u << v)) verts.push_back(v);
        bool convex = true;
        for (int a : verts)
            for (int b : verts)
                for (int c = 0; c < nv && convex; ++c)
                    if (!(mask & (1u << c)) && poset_leq(s, a, c) && poset_leq(s, c, b))
                        convex = false;
        if (!convex) continue;
        // connectivity in the Hasse diagram restricted to the subset
        std::set<int> seen = {verts[0]};
        std::vector<int> stack = {verts[0]};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if ((mask & (1u << w)) && seen.insert(w).second) stack.push_back(w);
        }
        if (static_cast<int>(seen.size()) != static_cast<int>(verts.size())) continue;
        out.emplace_back(verts.begin(), verts.end());
    }
    return out;
}

namespace {

// global canonical index of the q-simplices of f (sorted by vertex list)
std::vector<std::vector<int>> simplices_of_dim(const BipathFiltration& f, int q) {
    std::vector<std::vector<int>> out;
    for (const Simplex& s : f.simplices)
        if (s.dim() == q) out.push_back(s.verts);
    std::sort(out.begin(), out.end());
    return out;
}

bool present_at(const BipathFiltration& f, const std::vector<int>& verts, int vid) {
    for (const Simplex& s : f.simplices)
        if (s.verts == verts) {
            if (vid == 0) return s.u == 0;
            if (vid == f.shape.max_vertex()) return true;
            if (vid <= f.shape.n) return s.u <= vid;
            return s.l <= vid - f.shape.n;
        }
    throw error("oracle: unknown simplex");
}

// boundary of one simplex in global (q-1)-chain coordinates
std::vector<std::uint32_t> boundary_chain(const std::vector<int>& verts,
                                          const std::vector<std::vector<int>>& faces_index,
                                          FieldSpec f) {
    std::vector<std::uint32_t> chain(faces_index.size(), 0);
    for (std::size_t k = 0; k < verts.size(); ++k) {
        std::vector<int> face = verts;
        face.erase(face.begin() + static_cast<long>(k));
        auto it = std::lower_bound(faces_index.begin(), faces_index.end(), face);
        if (it == faces_index.end() || *it != face) throw error("oracle: filtration not closed");
        std::uint32_t sign = (k % 2 == 0) ? 1 : f.p - 1;
        chain[static_cast<std::size_t>(it - faces_index.begin())] = sign % f.p;
    }
    return chain;
}

struct VertexHomology {
    FMatrix reps;        // columns: homology basis representatives (global q-chain coords)
    FMatrix boundaries;  // columns: basis of the boundary space
};

VertexHomology homology_at(const BipathFiltration& f, int q, int vid, FieldSpec field,
                           const std::vector<std::vector<int>>& qs,
                           const std::vector<std::vector<int>>& q1s,
                           const std::vector<std::vector<int>>& qm1s) {
    FieldSpec fp = field;
    std::size_t nq = qs.size();
    // included q-simplices and the boundary map on them
    std::vector<std::size_t> included;
    for (std::size_t i = 0; i < nq; ++i)
        if (present_at(f, qs[i], vid)) included.push_back(i);
    FMatrix d(q == 0 ? 0 : qm1s.size(), included.size(), fp);
    if (q > 0)
        for (std::size_t c = 0; c < included.size(); ++c)
            d.set_col(c, boundary_chain(qs[included[c]], qm1s, fp));
    FMatrix coeffs = q == 0 ? FMatrix::identity(included.size(), fp) : kernel_basis(d);
    FMatrix cycles(nq, coeffs.cols(), fp);
    for (std::size_t j = 0; j < coeffs.cols(); ++j)
        for (std::size_t c = 0; c < included.size(); ++c)
            cycles.at(included[c], j) = coeffs.at(c, j);

    FMatrix bd_cols(nq, 0, fp);
    for (const auto& t : q1s)
        if (present_at(f, t, vid)) {
            FMatrix one(nq, 1, fp);
            one.set_col(0, boundary_chain(t, qs, fp));
            bd_cols = bd_cols.hstack(one);
        }
    FMatrix bd = column_space_basis(bd_cols);

    FMatrix both = column_space_basis(bd.hstack(cycles));
    VertexHomology h;
    h.boundaries = bd;
    h.reps = both.submatrix(0, bd.cols(), nq, both.cols() - bd.cols());
    return h;
}

}  // namespace

BipathModule brute_force_homology(const BipathFiltration& f, int q, FieldSpec field) {
    auto qs = simplices_of_dim(f, q);
    auto q1s = simplices_of_dim(f, q + 1);
    auto qm1s = q == 0 ? std::vector<std::vector<int>>{} : simplices_of_dim(f, q - 1);

    const BipathShape& s = f.shape;
    std::vector<VertexHomology> h(s.num_vertices());
    for (int vid = 0; vid < s.num_vertices(); ++vid)
        h[vid] = homology_at(f, q, vid, field, qs, q1s, qm1s);

    BipathModule v = BipathModule::zeros(s, field);
    v.dim0 = static_cast<int>(h[0].reps.cols());
    v.dim1 = static_cast<int>(h[s.max_vertex()].reps.cols());
    for (int k = 1; k <= s.n; ++k) v.dim_up[k - 1] = static_cast<int>(h[k].reps.cols());
    for (int k = 1; k <= s.m; ++k) v.dim_low[k - 1] = static_cast<int>(h[s.n + k].reps.cols());

    auto induced = [&](int src, int dst) {
        const VertexHomology& a = h[src];
        const VertexHomology& b = h[dst];
        FMatrix sys = b.reps.hstack(b.boundaries);
        FMatrix m(b.reps.cols(), a.reps.cols(), field);
        for (std::size_t j = 0; j < a.reps.cols(); ++j) {
            auto x = solve(sys, a.reps.col(j));
            if (!x) throw error("oracle: cycle not expressible downstream");
            for (std::size_t i = 0; i < b.reps.cols(); ++i) m.at(i, j) = (*x)[i];
        }
        return m;
    };
    for (Path p : {Path::Upper, Path::Lower})
        for (int pos = 0; pos <= path_len(s, p); ++pos)
            v.map_at(p, pos) = induced(vertex_id(s, p, pos), vertex_id(s, p, pos + 1));

    Violation check = validate(v);
    if (!check.ok) throw error("oracle: homology module invalid: " + check.message);
    return v;
}

BipathFiltration random_filtration(std::mt19937_64& rng, const BipathShape& shape,
                                   int num_vertices, int max_extra_dim) {
    auto grade_u = [&]() { return std::uniform_int_distribution<int>(0, shape.n + 1)(rng); };
    auto grade_l = [&]() { return std::uniform_int_distribution<int>(0, shape.m + 1)(rng); };
    auto coin = [&](double p) { return std::uniform_real_distribution<>(0, 1)(rng) < p; };

    BipathFiltration f;
    f.shape = shape;
    std::map<std::vector<int>, std::pair<int, int>> grades;
    int counter = 0;
    auto add = [&](std::vector<int> verts) {
        int u = grade_u(), l = grade_l();
        for (std::size_t k = 0; k < verts.size() && verts.size() > 1; ++k) {
            std::vector<int> face = verts;
            face.erase(face.begin() + static_cast<long>(k));
            u = std::max(u, grades.at(face).first);
            l = std::max(l, grades.at(face).second);
        }
        if ((u == 0) != (l == 0)) {  // the shared initial space needs both grades zero
            if (u == 0) u = 1;
            else l = 1;
        }
        grades[verts] = {u, l};
        Simplex s;
        s.id = "s" + std::to_string(counter++);
        s.verts = std::move(verts);
        s.u = u;
        s.l = l;
        f.simplices.push_back(std::move(s));
    };

    for (int v = 0; v < num_vertices; ++v) add({v});
    std::vector<std::vector<int>> prev;
    for (int v = 0; v < num_vertices; ++v) prev.push_back({v});
    for (int dim = 1; dim <= max_extra_dim; ++dim) {
        std::vector<std::vector<int>> cur;
        // candidate (dim)-simplices: extend each present (dim-1)-simplex
        for (const auto& base : prev)
            for (int v = base.back() + 1; v < num_vertices; ++v) {
                std::vector<int> verts = base;
                verts.push_back(v);
                if (grades.count(verts)) continue;
                bool closed = true;
                for (std::size_t k = 0; k < verts.size(); ++k) {
                    std::vector<int> face = verts;
                    face.erase(face.begin() + static_cast<long>(k));
                    if (!grades.count(face)) closed = false;
                }
                if (!closed || !coin(dim == 1 ? 0.55 : 0.4)) continue;
                add(verts);
                cur.push_back(verts);
            }
        prev = std::move(cur);
    }
    return f;
}

std::vector<BipathInterval> random_intervals(std::mt19937_64& rng, const BipathShape& shape,
                                             int count) {
    std::vector<BipathInterval> all = enumerate_intervals(shape);
    std::vector<BipathInterval> out;
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int i = 0; i < count; ++i) out.push_back(all[pick(rng)]);
    return out;
}

}  // namespace oracle
