#include "bipath/block_matrix.hpp"

#include <algorithm>

namespace bipath {

namespace {

// Index where the central ([0,K]-labeled) group starts in a sorted label
// list; for gamma faces it instead ends where the r group starts.
std::size_t count_while(const std::vector<PathInterval>& labels, bool born_at_min, int K) {
    std::size_t c = 0;
    for (const PathInterval& l : labels) {
        bool is_l = born_at_min ? (l.b == 0 && l.d < K) : (l.b == 0 && l.d == K);
        if (!is_l) break;
        ++c;
    }
    return c;
}

void check_problem(const BlockProblem& bp) {
    const int Ku = bp.shape.n + 1, Kl = bp.shape.m + 1;
    if (bp.lambda.rows() != bp.lambda_rows.size() || bp.lambda.cols() != bp.lambda_cols.size() ||
        bp.gamma.rows() != bp.gamma_rows.size() || bp.gamma.cols() != bp.gamma_cols.size())
        throw error("block problem: label lists do not match matrix shapes");
    if (bp.lambda.rows() != bp.lambda.cols() || bp.gamma.rows() != bp.gamma.cols())
        throw error("block problem: lambda/gamma must be square");
    for (const PathInterval& l : bp.lambda_rows)
        if (l.path != Path::Lower || l.b != 0) throw error("block problem: bad lambda row label");
    for (const PathInterval& l : bp.lambda_cols)
        if (l.path != Path::Upper || l.b != 0) throw error("block problem: bad lambda col label");
    for (const PathInterval& l : bp.gamma_rows)
        if (l.path != Path::Lower || l.d != Kl) throw error("block problem: bad gamma row label");
    for (const PathInterval& l : bp.gamma_cols)
        if (l.path != Path::Upper || l.d != Ku) throw error("block problem: bad gamma col label");
    auto sorted = [](const std::vector<PathInterval>& labels, int K) {
        for (std::size_t i = 1; i < labels.size(); ++i)
            if (chain_index(labels[i - 1], K) > chain_index(labels[i], K)) return false;
        return true;
    };
    if (!sorted(bp.lambda_rows, Kl) || !sorted(bp.lambda_cols, Ku) ||
        !sorted(bp.gamma_rows, Kl) || !sorted(bp.gamma_cols, Ku))
        throw error("block problem: labels not in projective/injective order");

    std::size_t lr = count_while(bp.lambda_rows, true, Kl);
    std::size_t lc = count_while(bp.lambda_cols, true, Ku);
    std::size_t cc_l = bp.lambda.rows() - lr, cc_u = bp.lambda.cols() - lc;
    std::size_t gc_u = count_while(bp.gamma_cols, false, Ku);
    std::size_t gc_l = count_while(bp.gamma_rows, false, Kl);
    if (cc_l != cc_u || cc_l != gc_u || cc_l != gc_l)
        throw error("block problem: central block multiplicities disagree");
    std::size_t cc = cc_l;

    for (std::size_t i = 0; i < cc; ++i)
        for (std::size_t j = 0; j < lc; ++j)
            if (bp.lambda.at(lr + i, j) != 0)
                throw error("structural zero violated in lambda (full rows over finite columns)");
    for (std::size_t i = 0; i < bp.gamma.rows() - cc; ++i)
        for (std::size_t j = 0; j < cc; ++j)
            if (bp.gamma.at(cc + i, j) != 0)
                throw error("structural zero violated in gamma (late rows over full columns)");
    if (bp.lambda.submatrix(lr, lc, cc, cc) != bp.gamma.submatrix(0, 0, cc, cc))
        throw error("central blocks of lambda and gamma disagree");
    if (rank(bp.lambda.submatrix(0, 0, lr, lc)) != lr)
        throw error("left corner block of lambda is singular");
    if (rank(bp.gamma.submatrix(0, 0, cc, cc)) != cc)
        throw error("central block is singular");
    std::size_t rr = bp.gamma.rows() - cc;
    if (rank(bp.gamma.submatrix(cc, cc, rr, rr)) != rr)
        throw error("right corner block of gamma is singular");
}

std::vector<PathInterval> alive_labels(const PathDecomposition& dec, int vertex) {
    std::vector<PathInterval> out;
    for (int idx : dec.alive[vertex]) out.push_back(dec.intervals[idx]);
    return out;
}

}  // namespace

BlockProblem build_problem(const BipathModule& v, const PathDecomposition& up,
                           const PathDecomposition& low) {
    BlockProblem bp;
    bp.shape = v.shape;
    const int Ku = v.shape.n + 1, Kl = v.shape.m + 1;
    bp.lambda = low.bases[0].mul(up.vertex_basis[0]);
    bp.gamma = low.bases[Kl].mul(up.vertex_basis[Ku]);
    bp.lambda_rows = alive_labels(low, 0);
    bp.lambda_cols = alive_labels(up, 0);
    bp.gamma_rows = alive_labels(low, Kl);
    bp.gamma_cols = alive_labels(up, Ku);
    check_problem(bp);
    return bp;
}

BlockProblem assemble_problem(const BipathShape& shape, FMatrix lambda, FMatrix gamma,
                              std::vector<PathInterval> lambda_rows,
                              std::vector<PathInterval> lambda_cols,
                              std::vector<PathInterval> gamma_rows,
                              std::vector<PathInterval> gamma_cols) {
    BlockProblem bp;
    bp.shape = shape;
    bp.lambda = std::move(lambda);
    bp.gamma = std::move(gamma);
    bp.lambda_rows = std::move(lambda_rows);
    bp.lambda_cols = std::move(lambda_cols);
    bp.gamma_rows = std::move(gamma_rows);
    bp.gamma_cols = std::move(gamma_cols);
    check_problem(bp);
    return bp;
}

std::pair<FMatrix, OpTranscript> one_way_reduce(const FMatrix& a) {
    if (a.rows() != a.cols()) throw error("one_way_reduce: matrix not square");
    const std::size_t d = a.rows();
    const FieldSpec& f = a.field();
    FMatrix w = a;
    OpTranscript t;
    for (std::size_t col = 0; col < d; ++col) {
        // pivot in the lowest nonzero row of this column
        std::size_t row = d;
        for (std::size_t i = 0; i < d; ++i)
            if (w.at(i, col) != 0) row = i;
        if (row == d) throw error("one_way_reduce: matrix is singular");
        std::uint32_t inv = f.inv(w.at(row, col));
        if (inv != 1) {
            w.scale_row(row, inv);
            t.scale_row(row, inv);
        }
        for (std::size_t j = col + 1; j < d; ++j) {
            std::uint32_t v = w.at(row, j);
            if (v != 0) {
                w.add_col(col, j, f.neg(v));
                t.add_col(col, j, f.neg(v));
            }
        }
        for (std::size_t i = 0; i < row; ++i) {
            std::uint32_t v = w.at(i, col);
            if (v != 0) {
                w.add_row(row, i, f.neg(v));
                t.add_row(row, i, f.neg(v));
            }
        }
    }
    // the walk above must leave a permutation matrix
    for (std::size_t i = 0; i < d; ++i) {
        std::size_t ones = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (w.at(i, j) != 0 && w.at(i, j) != 1) throw error("one_way_reduce: non-unit residue");
            ones += w.at(i, j);
        }
        if (ones != 1) throw error("one_way_reduce: result is not a permutation");
    }
    return {w, t};
}

NormalizeResult normalize(const BlockProblem& bp) {
    check_problem(bp);
    NormalizeResult res;
    FMatrix L = bp.lambda, G = bp.gamma;
    const FieldSpec& f = L.field();
    const int Ku = bp.shape.n + 1, Kl = bp.shape.m + 1;
    const std::size_t lr = count_while(bp.lambda_rows, true, Kl);
    const std::size_t lc = count_while(bp.lambda_cols, true, Ku);
    const std::size_t cc = L.rows() - lr;
    const std::size_t rr = G.rows() - cc;

    // 1. central block -> identity, by row operations on the [0,K]-labeled
    //    rows, applied to both faces
    for (std::size_t k = 0; k < cc; ++k) {
        std::size_t piv = cc;
        for (std::size_t i = k; i < cc; ++i)
            if (G.at(i, k) != 0) { piv = i; break; }
        if (piv == cc) throw error("normalize: central block singular");
        if (piv != k) {
            L.swap_rows(lr + piv, lr + k);
            G.swap_rows(piv, k);
            res.lambda_ops.swap_rows(lr + piv, lr + k);
            res.gamma_ops.swap_rows(piv, k);
        }
        std::uint32_t inv = f.inv(G.at(k, k));
        if (inv != 1) {
            L.scale_row(lr + k, inv);
            G.scale_row(k, inv);
            res.lambda_ops.scale_row(lr + k, inv);
            res.gamma_ops.scale_row(k, inv);
        }
        for (std::size_t i = 0; i < cc; ++i) {
            if (i == k) continue;
            std::uint32_t v = G.at(i, k);
            if (v != 0) {
                L.add_row(lr + k, lr + i, f.neg(v));
                G.add_row(k, i, f.neg(v));
                res.lambda_ops.add_row(lr + k, lr + i, f.neg(v));
                res.gamma_ops.add_row(k, i, f.neg(v));
            }
        }
    }

    // 2. zero the blocks right of the central identity in gamma, with
    //    column additions out of the central columns; those columns are
    //    absent at the minimum, so lambda is untouched
    for (std::size_t j = 0; j < rr; ++j)
        for (std::size_t i = 0; i < cc; ++i) {
            std::uint32_t v = G.at(i, cc + j);
            if (v != 0) {
                G.add_col(i, cc + j, f.neg(v));
                res.gamma_ops.add_col(i, cc + j, f.neg(v));
            }
        }

    // 3. zero the blocks above the central identity in lambda, with row
    //    additions out of the central rows; those rows are absent at the
    //    maximum, so gamma is untouched
    for (std::size_t i = 0; i < lr; ++i)
        for (std::size_t j = 0; j < cc; ++j) {
            std::uint32_t v = L.at(i, lc + j);
            if (v != 0) {
                L.add_row(lr + j, i, f.neg(v));
                res.lambda_ops.add_row(lr + j, i, f.neg(v));
            }
        }

    // 4. reduce the two remaining corner problems independently
    auto [pl, tl] = one_way_reduce(L.submatrix(0, 0, lr, lc));
    // the corner block sits at the origin, so its op indices are global
    tl.apply(L);
    res.lambda_ops.ops.insert(res.lambda_ops.ops.end(), tl.ops.begin(), tl.ops.end());
    auto [pr, tr] = one_way_reduce(G.submatrix(cc, cc, rr, rr));
    OpTranscript tr_shifted;
    for (ElemOp op : tr.ops) {
        op.i += cc;
        op.j += cc;
        tr_shifted.ops.push_back(op);
    }
    tr_shifted.apply(G);
    res.gamma_ops.ops.insert(res.gamma_ops.ops.end(), tr_shifted.ops.begin(), tr_shifted.ops.end());

    // final shape checks
    for (std::size_t i = 0; i < L.rows(); ++i)
        for (std::size_t j = 0; j < L.cols(); ++j) {
            bool in_perm = i < lr && j < lc;
            bool in_central = i >= lr && j >= lc;
            std::uint32_t expect = in_perm ? pl.at(i, j) : (in_central && i - lr == j - lc ? 1 : 0);
            if (L.at(i, j) != expect) throw error("normalize: lambda did not reach normal form");
        }
    for (std::size_t i = 0; i < G.rows(); ++i)
        for (std::size_t j = 0; j < G.cols(); ++j) {
            bool in_perm = i >= cc && j >= cc;
            bool in_central = i < cc && j < cc;
            std::uint32_t expect = in_perm ? pr.at(i - cc, j - cc) : (in_central && i == j ? 1 : 0);
            if (G.at(i, j) != expect) throw error("normalize: gamma did not reach normal form");
        }

    res.nf.central_size = static_cast<int>(cc);
    for (std::size_t i = 0; i < lr; ++i)
        for (std::size_t j = 0; j < lc; ++j)
            if (pl.at(i, j) == 1)
                res.nf.left_pairs.emplace_back(bp.lambda_cols[j], bp.lambda_rows[i]);
    for (std::size_t i = 0; i < rr; ++i)
        for (std::size_t j = 0; j < rr; ++j)
            if (pr.at(i, j) == 1)
                res.nf.right_pairs.emplace_back(bp.gamma_cols[cc + j], bp.gamma_rows[cc + i]);
    res.lambda_final = L;
    res.gamma_final = G;
    return res;
}

bool audit_transcript(const OpTranscript& t, const std::vector<PathInterval>& row_labels,
                      const std::vector<PathInterval>& col_labels) {
    for (const ElemOp& op : t.ops) {
        switch (op.kind) {
            case OpKind::SwapRows:
                if (!(row_labels[op.i] == row_labels[op.j])) return false;
                break;
            case OpKind::SwapCols:
                if (!(col_labels[op.i] == col_labels[op.j])) return false;
                break;
            case OpKind::ScaleRow:
            case OpKind::ScaleCol:
                if (op.c == 0) return false;
                break;
            case OpKind::AddRow: {
                const PathInterval& src = row_labels[op.i];
                const PathInterval& dst = row_labels[op.j];
                if (!(src == dst) && !hom_nonzero(src, dst)) return false;
                break;
            }
            case OpKind::AddCol: {
                const PathInterval& src = col_labels[op.i];
                const PathInterval& dst = col_labels[op.j];
                if (!(src == dst) && !hom_nonzero(dst, src)) return false;
                break;
            }
        }
    }
    return true;
}

std::map<BipathInterval, int> glue(const NormalForm& nf, const std::vector<PathInterval>& up_bars,
                                   const std::vector<PathInterval>& low_bars,
                                   const BipathShape& shape) {
    const int Ku = shape.n + 1, Kl = shape.m + 1;
    std::map<BipathInterval, int> out;
    if (nf.central_size > 0) out[BipathInterval::make_full()] += nf.central_size;
    for (const auto& [u, l] : nf.left_pairs) out[BipathInterval::make_L(u.d, l.d)] += 1;
    for (const auto& [u, l] : nf.right_pairs) out[BipathInterval::make_R(u.b, l.b, shape)] += 1;
    for (const PathInterval& b : up_bars)
        if (b.b > 0 && b.d < Ku) out[BipathInterval::make_U(b.b, b.d, shape)] += 1;
    for (const PathInterval& b : low_bars)
        if (b.b > 0 && b.d < Kl) out[BipathInterval::make_D(b.b, b.d, shape)] += 1;
    return out;
}

std::map<BipathInterval, int> decompose_bipath(const BipathModule& v) {
    Violation check = validate(v);
    if (!check.ok) throw error("decompose: invalid module: " + check.message);
    PathDecomposition up = decompose_path(restrict_path(v, Path::Upper), Path::Upper);
    PathDecomposition low = decompose_path(restrict_path(v, Path::Lower), Path::Lower);
    BlockProblem bp = build_problem(v, up, low);
    NormalizeResult nr = normalize(bp);
    return glue(nr.nf, up.intervals, low.intervals, v.shape);
}

}  // namespace bipath
