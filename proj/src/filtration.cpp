#include "bipath/filtration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace bipath {

int BipathFiltration::max_dim() const {
    int d = -1;
    for (const Simplex& s : simplices) d = std::max(d, s.dim());
    return d;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw error("line " + std::to_string(line) + ": " + msg);
}

std::vector<int> face_of(const std::vector<int>& verts, std::size_t skip) {
    std::vector<int> f;
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (i != skip) f.push_back(verts[i]);
    return f;
}

}  // namespace

BipathFiltration parse_filtration(const std::string& text) {
    BipathFiltration f;
    bool have_header = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::map<std::string, int> id_line;
    std::map<std::vector<int>, int> vert_line;
    std::vector<int> simplex_line;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "bipath") {
            if (have_header) parse_fail(lineno, "duplicate bipath header");
            int n, m;
            if (!(ls >> n >> m)) parse_fail(lineno, "bipath header needs two integers");
            if (n < 1 || m < 1) parse_fail(lineno, "bipath shape requires n >= 1 and m >= 1");
            f.shape = BipathShape(n, m);
            have_header = true;
            continue;
        }
        if (word != "simplex") parse_fail(lineno, "unknown directive '" + word + "'");
        if (!have_header) parse_fail(lineno, "simplex before bipath header");
        Simplex s;
        if (!(ls >> s.id)) parse_fail(lineno, "simplex needs an id");
        bool have_v = false, have_u = false, have_l = false;
        std::string field;
        while (ls >> field) {
            if (field.rfind("v=", 0) == 0) {
                std::string list = field.substr(2);
                std::replace(list.begin(), list.end(), ',', ' ');
                std::istringstream vs(list);
                int v;
                while (vs >> v) s.verts.push_back(v);
                have_v = true;
            } else if (field.rfind("u=", 0) == 0) {
                s.u = std::stoi(field.substr(2));
                have_u = true;
            } else if (field.rfind("l=", 0) == 0) {
                s.l = std::stoi(field.substr(2));
                have_l = true;
            } else {
                parse_fail(lineno, "unknown field '" + field + "'");
            }
        }
        if (!have_v || s.verts.empty()) parse_fail(lineno, "simplex needs a nonempty vertex list");
        if (!have_u || !have_l) parse_fail(lineno, "simplex needs u= and l= grades");
        std::sort(s.verts.begin(), s.verts.end());
        if (std::adjacent_find(s.verts.begin(), s.verts.end()) != s.verts.end())
            parse_fail(lineno, "repeated vertex in simplex '" + s.id + "'");
        if (s.u < 0 || s.u > f.shape.n + 1)
            parse_fail(lineno, "u grade out of range 0.." + std::to_string(f.shape.n + 1));
        if (s.l < 0 || s.l > f.shape.m + 1)
            parse_fail(lineno, "l grade out of range 0.." + std::to_string(f.shape.m + 1));
        if ((s.u == 0) != (s.l == 0))
            parse_fail(lineno, "grade 0 must hold on both axes or neither (shared initial space)");
        if (id_line.count(s.id)) parse_fail(lineno, "duplicate simplex id '" + s.id + "'");
        if (vert_line.count(s.verts))
            parse_fail(lineno, "duplicate simplex (same vertices as line " +
                                   std::to_string(vert_line[s.verts]) + ")");
        id_line[s.id] = lineno;
        vert_line[s.verts] = lineno;
        simplex_line.push_back(lineno);
        f.simplices.push_back(std::move(s));
    }
    if (!have_header) throw error("missing bipath header");
    std::map<std::vector<int>, const Simplex*> by_verts;
    for (const Simplex& s : f.simplices) by_verts[s.verts] = &s;
    for (std::size_t i = 0; i < f.simplices.size(); ++i) {
        const Simplex& s = f.simplices[i];
        if (s.dim() == 0) continue;
        for (std::size_t k = 0; k < s.verts.size(); ++k) {
            std::vector<int> face = face_of(s.verts, k);
            auto it = by_verts.find(face);
            if (it == by_verts.end())
                parse_fail(simplex_line[i], "closure violation: face of '" + s.id + "' is missing");
            if (it->second->u > s.u || it->second->l > s.l)
                parse_fail(simplex_line[i], "closure violation: face '" + it->second->id +
                                                "' enters after '" + s.id + "'");
        }
    }
    return f;
}

std::string format_filtration(const BipathFiltration& f) {
    std::ostringstream out;
    out << "bipath " << f.shape.n << " " << f.shape.m << "\n";
    for (const Simplex& s : f.simplices) {
        out << "simplex " << s.id << " v=";
        for (std::size_t i = 0; i < s.verts.size(); ++i)
            out << (i ? "," : "") << s.verts[i];
        out << " u=" << s.u << " l=" << s.l << "\n";
    }
    return out.str();
}

namespace {

struct Reducer {
    const BipathFiltration& f;
    Path path;
    FieldSpec field;
    std::vector<int> order;                    // simplex indices in path order
    std::vector<std::vector<std::uint32_t>> R; // reduced boundary columns (rows in path order)
    std::vector<std::vector<std::uint32_t>> V; // column operations applied
    std::vector<int> pivot_owner;              // row -> column with that low, or -1

    int grade(int si) const { return path == Path::Upper ? f.simplices[si].u : f.simplices[si].l; }

    Reducer(const BipathFiltration& f_, Path p, FieldSpec fld) : f(f_), path(p), field(fld) {
        const std::size_t N = f.simplices.size();
        order.resize(N);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return std::make_tuple(grade(a), f.simplices[a].dim(), f.simplices[a].id) <
                   std::make_tuple(grade(b), f.simplices[b].dim(), f.simplices[b].id);
        });
        std::map<std::vector<int>, int> pos_of;  // verts -> position in path order
        for (std::size_t p2 = 0; p2 < N; ++p2) pos_of[f.simplices[order[p2]].verts] = static_cast<int>(p2);

        R.assign(N, std::vector<std::uint32_t>(N, 0));
        V.assign(N, std::vector<std::uint32_t>(N, 0));
        pivot_owner.assign(N, -1);
        for (std::size_t j = 0; j < N; ++j) {
            V[j][j] = 1;
            const Simplex& s = f.simplices[order[j]];
            if (s.dim() > 0)
                for (std::size_t k = 0; k < s.verts.size(); ++k) {
                    int row = pos_of.at(face_of(s.verts, k));
                    R[j][row] = (k % 2 == 0) ? 1 : field.neg(1);
                }
            while (true) {
                int low = -1;
                for (int r = static_cast<int>(N) - 1; r >= 0; --r)
                    if (R[j][r] != 0) { low = r; break; }
                if (low < 0) break;
                int owner = pivot_owner[low];
                if (owner < 0) {
                    pivot_owner[low] = static_cast<int>(j);
                    break;
                }
                std::uint32_t c = field.mul(R[j][low], field.inv(R[owner][low]));
                for (std::size_t r = 0; r < N; ++r) {
                    R[j][r] = field.sub(R[j][r], field.mul(c, R[owner][r]));
                    V[j][r] = field.sub(V[j][r], field.mul(c, V[owner][r]));
                }
            }
        }
    }

    bool is_zero_col(const std::vector<std::uint32_t>& c) const {
        return std::all_of(c.begin(), c.end(), [](std::uint32_t v) { return v == 0; });
    }
};

}  // namespace

PathReduction reduce_path(const BipathFiltration& f, Path path, int q, FieldSpec field) {
    Reducer red(f, path, field);
    const int K = path_len(f.shape, path) + 1;
    const std::size_t N = f.simplices.size();

    // path-independent coordinates for degree-q chains
    std::vector<int> q_simplices;  // simplex indices, sorted by vertex list
    for (std::size_t i = 0; i < N; ++i)
        if (f.simplices[i].dim() == q) q_simplices.push_back(static_cast<int>(i));
    std::sort(q_simplices.begin(), q_simplices.end(),
              [&](int a, int b) { return f.simplices[a].verts < f.simplices[b].verts; });
    std::map<int, int> coord;  // simplex index -> coordinate row
    for (std::size_t i = 0; i < q_simplices.size(); ++i) coord[q_simplices[i]] = static_cast<int>(i);

    auto to_coords = [&](const std::vector<std::uint32_t>& col) {
        std::vector<std::uint32_t> v(q_simplices.size(), 0);
        for (std::size_t p = 0; p < N; ++p)
            if (col[p] != 0) {
                int si = red.order[p];
                if (f.simplices[si].dim() != q) throw error("reduce_path: chain leaves degree q");
                v[coord.at(si)] = col[p];
            }
        return v;
    };

    PathReduction out;
    out.path = path;
    out.q = q;
    out.K = K;
    out.field = field;

    std::vector<std::vector<std::uint32_t>> bdry_min, bdry_max;
    for (std::size_t j = 0; j < N; ++j) {
        const Simplex& sj = f.simplices[red.order[j]];
        if (sj.dim() == q + 1 && !red.is_zero_col(red.R[j])) {
            // paired: the reduced boundary column kills the class born with its low
            int low = -1;
            for (int r = static_cast<int>(N) - 1; r >= 0; --r)
                if (red.R[j][r] != 0) { low = r; break; }
            int birth = red.grade(red.order[low]);
            int death_entry = red.grade(red.order[j]);
            if (death_entry > birth)
                out.bars.push_back({PathInterval(path, birth, death_entry - 1), to_coords(red.R[j])});
            bdry_max.push_back(to_coords(red.R[j]));
            if (death_entry == 0) bdry_min.push_back(to_coords(red.R[j]));
        }
        if (sj.dim() == q && red.is_zero_col(red.R[j]) &&
            red.pivot_owner[j] < 0)
            out.bars.push_back({PathInterval(path, red.grade(red.order[j]), K), to_coords(red.V[j])});
    }
    std::stable_sort(out.bars.begin(), out.bars.end(), [&](const PathBarRep& a, const PathBarRep& b) {
        return canonical_bar_key(a.bar, K) < canonical_bar_key(b.bar, K);
    });

    out.boundary_at_min = FMatrix(q_simplices.size(), bdry_min.size(), field);
    for (std::size_t j = 0; j < bdry_min.size(); ++j) out.boundary_at_min.set_col(j, bdry_min[j]);
    out.boundary_at_max = FMatrix(q_simplices.size(), bdry_max.size(), field);
    for (std::size_t j = 0; j < bdry_max.size(); ++j) out.boundary_at_max.set_col(j, bdry_max[j]);
    return out;
}

namespace {

FMatrix express(const std::vector<const PathBarRep*>& basis_bars, const FMatrix& boundaries,
                const std::vector<const PathBarRep*>& targets, FieldSpec field,
                std::size_t chain_dim) {
    FMatrix basis(chain_dim, basis_bars.size() + boundaries.cols(), field);
    for (std::size_t j = 0; j < basis_bars.size(); ++j) basis.set_col(j, basis_bars[j]->cycle);
    for (std::size_t j = 0; j < boundaries.cols(); ++j)
        for (std::size_t i = 0; i < chain_dim; ++i)
            basis.at(i, basis_bars.size() + j) = boundaries.at(i, j);
    FMatrix out(basis_bars.size(), targets.size(), field);
    for (std::size_t j = 0; j < targets.size(); ++j) {
        auto x = solve(basis, targets[j]->cycle);
        if (!x.has_value())
            throw error("lambda_gamma: representative cycle outside the expected span");
        for (std::size_t i = 0; i < basis_bars.size(); ++i) out.at(i, j) = (*x)[i];
    }
    return out;
}

}  // namespace

std::pair<FMatrix, FMatrix> lambda_gamma(const PathReduction& up, const PathReduction& low) {
    if (up.q != low.q || up.field.p != low.field.p)
        throw error("lambda_gamma: mismatched reductions");
    const FieldSpec field = up.field;
    if (up.boundary_at_max.rows() != low.boundary_at_max.rows())
        throw error("lambda_gamma: chain spaces disagree");
    const std::size_t chain_dim = low.boundary_at_max.rows();

    auto bars_at = [](const PathReduction& r, bool at_min) {
        std::vector<const PathBarRep*> out;
        for (const PathBarRep& b : r.bars)
            if (at_min ? b.bar.b == 0 : b.bar.d == r.K) out.push_back(&b);
        return out;
    };
    auto up_min = bars_at(up, true);
    auto low_min = bars_at(low, true);
    auto up_max = bars_at(up, false);
    auto low_max = bars_at(low, false);

    FMatrix lambda = express(low_min, low.boundary_at_min, up_min, field, chain_dim);
    FMatrix gamma = express(low_max, low.boundary_at_max, up_max, field, chain_dim);

    // the square condition: gamma * X(min<=max) = Y(min<=max) * lambda,
    // where X and Y are the 0/1 barcode composites
    auto composite01 = [&](const std::vector<const PathBarRep*>& at_max,
                           const std::vector<const PathBarRep*>& at_min) {
        FMatrix m(at_max.size(), at_min.size(), field);
        for (std::size_t i = 0; i < at_max.size(); ++i)
            for (std::size_t j = 0; j < at_min.size(); ++j)
                if (at_max[i] == at_min[j]) m.at(i, j) = 1;
        return m;
    };
    FMatrix X = composite01(up_max, up_min);
    FMatrix Y = composite01(low_max, low_min);
    if (gamma.mul(X) != Y.mul(lambda))
        throw error("lambda_gamma: the commuting-square condition failed");
    return {lambda, gamma};
}

std::map<BipathInterval, int> bipath_pd(const BipathFiltration& f, int q, FieldSpec field) {
    PathReduction up = reduce_path(f, Path::Upper, q, field);
    PathReduction low = reduce_path(f, Path::Lower, q, field);
    auto [lambda, gamma] = lambda_gamma(up, low);
    const int Ku = f.shape.n + 1, Kl = f.shape.m + 1;
    std::vector<PathInterval> lam_rows, lam_cols, gam_rows, gam_cols, up_bars, low_bars;
    for (const PathBarRep& b : up.bars) {
        up_bars.push_back(b.bar);
        if (b.bar.b == 0) lam_cols.push_back(b.bar);
        if (b.bar.d == Ku) gam_cols.push_back(b.bar);
    }
    for (const PathBarRep& b : low.bars) {
        low_bars.push_back(b.bar);
        if (b.bar.b == 0) lam_rows.push_back(b.bar);
        if (b.bar.d == Kl) gam_rows.push_back(b.bar);
    }
    BlockProblem bp = assemble_problem(f.shape, lambda, gamma, lam_rows, lam_cols, gam_rows, gam_cols);
    NormalizeResult nr = normalize(bp);
    return glue(nr.nf, up_bars, low_bars, f.shape);
}

std::vector<std::map<BipathInterval, int>> bipath_pd_all(const BipathFiltration& f, FieldSpec field) {
    int top = f.max_dim();
    std::vector<std::map<BipathInterval, int>> out(top + 1);
    std::vector<std::exception_ptr> errs(top + 1);
    std::vector<std::thread> workers;
    for (int q = 0; q <= top; ++q)
        workers.emplace_back([&, q]() {
            try {
                out[q] = bipath_pd(f, q, field);
            } catch (...) {
                errs[q] = std::current_exception();
            }
        });
    for (auto& w : workers) w.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace bipath
