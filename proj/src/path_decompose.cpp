#include "bipath/path_decompose.hpp"

#include <algorithm>
#include <numeric>

namespace bipath {

long canonical_bar_key(const PathInterval& iv, int K) {
    if (iv.b == 0 || iv.d == K) return chain_index(iv, K);
    return 2L * K + 1 + static_cast<long>(iv.b) * (K + 2) + iv.d;
}

namespace {

struct Bar {
    int birth = 0;
    int death = -1;                                   // last vertex alive; -1 while open
    std::vector<std::vector<std::uint32_t>> traj;     // traj[k] = vector at vertex birth + k
};

}  // namespace

PathDecomposition decompose_path(const PathModule& pm, Path path) {
    const FieldSpec f = pm.field;
    const int K = pm.K();
    std::vector<Bar> bars;
    std::vector<int> live;  // indices into bars, in birth order

    auto complete_newborns = [&](int v, FMatrix& span, std::vector<int>& span_bar) {
        // span holds the vectors already present at v; extend with standard
        // basis vectors, lowest index first, until it is a full basis.
        for (int r = 0; r < pm.dims[v]; ++r) {
            std::vector<std::uint32_t> e(pm.dims[v], 0);
            e[r] = 1;
            if (span.cols() > 0 && solve(span, e).has_value()) continue;
            if (span.cols() == 0 && pm.dims[v] == 0) continue;
            Bar nb;
            nb.birth = v;
            nb.traj.push_back(e);
            bars.push_back(nb);
            live.push_back(static_cast<int>(bars.size()) - 1);
            FMatrix wider(span.rows(), span.cols() + 1, f);
            for (std::size_t i = 0; i < span.rows(); ++i)
                for (std::size_t j = 0; j < span.cols(); ++j) wider.at(i, j) = span.at(i, j);
            wider.set_col(span.cols(), e);
            span = wider;
            span_bar.push_back(static_cast<int>(bars.size()) - 1);
            if (static_cast<int>(span.cols()) == pm.dims[v]) break;
        }
    };

    {
        FMatrix span(pm.dims[0], 0, f);
        std::vector<int> span_bar;
        complete_newborns(0, span, span_bar);
    }

    for (int v = 0; v < K; ++v) {
        const FMatrix& M = pm.maps[v];
        FMatrix kept(pm.dims[v + 1], 0, f);
        std::vector<int> kept_bar;
        std::vector<int> next_live;
        for (int bi : live) {
            Bar& bar = bars[bi];
            std::vector<std::uint32_t> y = M.mul_vec(bar.traj.back());
            std::optional<std::vector<std::uint32_t>> c;
            if (kept.cols() > 0 || std::all_of(y.begin(), y.end(), [](std::uint32_t t) { return t == 0; }))
                c = kept.cols() > 0 ? solve(kept, y)
                                    : std::optional<std::vector<std::uint32_t>>(std::vector<std::uint32_t>{});
            if (c.has_value()) {
                // the image is dependent on earlier-born survivors: fold
                // those summands out of this bar's whole trajectory so its
                // image becomes exactly zero, and close the bar at v
                for (std::size_t t = 0; t < c->size(); ++t) {
                    std::uint32_t coeff = (*c)[t];
                    if (coeff == 0) continue;
                    const Bar& other = bars[kept_bar[t]];
                    for (int w = bar.birth; w <= v; ++w) {
                        std::vector<std::uint32_t>& mine = bar.traj[w - bar.birth];
                        const std::vector<std::uint32_t>& theirs = other.traj[w - other.birth];
                        for (std::size_t r = 0; r < mine.size(); ++r)
                            mine[r] = f.sub(mine[r], f.mul(coeff, theirs[r]));
                    }
                }
                bar.death = v;
            } else {
                bar.traj.push_back(y);
                FMatrix wider(kept.rows(), kept.cols() + 1, f);
                for (std::size_t i = 0; i < kept.rows(); ++i)
                    for (std::size_t j = 0; j < kept.cols(); ++j) wider.at(i, j) = kept.at(i, j);
                wider.set_col(kept.cols(), y);
                kept = wider;
                kept_bar.push_back(bi);
                next_live.push_back(bi);
            }
        }
        live = next_live;
        // appends newborns after the survivors, keeping `live` in birth order
        complete_newborns(v + 1, kept, kept_bar);
    }
    for (int bi : live) bars[bi].death = K;

    // canonical order: stable sort by the shared bar key
    std::vector<int> order(bars.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        PathInterval ia(path, bars[a].birth, bars[a].death);
        PathInterval ib(path, bars[b].birth, bars[b].death);
        return canonical_bar_key(ia, K) < canonical_bar_key(ib, K);
    });

    PathDecomposition dec;
    dec.path = path;
    for (int bi : order) dec.intervals.emplace_back(path, bars[bi].birth, bars[bi].death);
    dec.alive.resize(K + 1);
    dec.vertex_basis.resize(K + 1);
    dec.bases.resize(K + 1);
    for (int v = 0; v <= K; ++v) {
        std::vector<int> idx;
        for (std::size_t s = 0; s < order.size(); ++s) {
            const Bar& bar = bars[order[s]];
            if (bar.birth <= v && v <= bar.death) idx.push_back(static_cast<int>(s));
        }
        FMatrix P(pm.dims[v], idx.size(), f);
        for (std::size_t j = 0; j < idx.size(); ++j) {
            const Bar& bar = bars[order[idx[j]]];
            P.set_col(j, bar.traj[v - bar.birth]);
        }
        dec.alive[v] = idx;
        dec.vertex_basis[v] = P;
        dec.bases[v] = invert(P);
    }
    return dec;
}

std::map<PathInterval, int> barcode_by_ranks(const PathModule& pm, Path path) {
    const int K = pm.K();
    auto r = [&](int x, int y) -> int {
        if (x < 0 || y > K) return 0;
        return static_cast<int>(rank(pm.composite(x, y)));
    };
    std::map<PathInterval, int> out;
    for (int b = 0; b <= K; ++b)
        for (int d = b; d <= K; ++d) {
            int mult = r(b, d) - r(b - 1, d) - r(b, d + 1) + r(b - 1, d + 1);
            if (mult > 0) out[PathInterval(path, b, d)] = mult;
        }
    return out;
}

}  // namespace bipath
