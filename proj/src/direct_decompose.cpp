#include "bipath/direct_decompose.hpp"

#include "bipath/path_decompose.hpp"

namespace bipath {

namespace {

// extends independent columns to a full basis with standard basis vectors,
// lowest index first
FMatrix complete_basis(const FMatrix& m, std::size_t dim, FieldSpec f) {
    FMatrix b = m;
    for (std::size_t r = 0; r < dim && b.cols() < dim; ++r) {
        std::vector<std::uint32_t> e(dim, 0);
        e[r] = 1;
        if (solve(b, e).has_value()) continue;
        FMatrix wider(dim, b.cols() + 1, f);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) wider.at(i, j) = b.at(i, j);
        wider.set_col(b.cols(), e);
        b = wider;
    }
    if (b.cols() != dim) throw error("complete_basis: input columns were dependent");
    return b;
}

FMatrix composite_to_vertex(const BipathModule& v, int vid) {
    if (vid == 0) return FMatrix::identity(v.dim0, v.field);
    if (vid == v.shape.max_vertex()) return v.full_composite();
    if (vid <= v.shape.n) return v.composite(Path::Upper, 0, vid);
    return v.composite(Path::Lower, 0, vid - v.shape.n);
}

void require(bool cond, const char* msg) {
    if (!cond) throw error(msg);
}

}  // namespace

SplitResult split_full(const BipathModule& v) {
    Violation check = validate(v);
    require(check.ok, "split_full: module does not validate");
    const FieldSpec f = v.field;
    FMatrix C = v.full_composite();
    const std::size_t r = rank(C);
    if (r == 0) return {{}, v};

    // section of the image: columns of the space at the minimum whose
    // composite images stay independent
    FMatrix U(v.dim0, 0, f);
    FMatrix img(v.dim1, 0, f);
    for (int k = 0; k < v.dim0 && U.cols() < r; ++k) {
        std::vector<std::uint32_t> e(v.dim0, 0);
        e[k] = 1;
        std::vector<std::uint32_t> ce = C.mul_vec(e);
        if (solve(img, ce).has_value()) continue;
        FMatrix u2(v.dim0, U.cols() + 1, f), i2(v.dim1, img.cols() + 1, f);
        for (std::size_t i = 0; i < U.rows(); ++i)
            for (std::size_t j = 0; j < U.cols(); ++j) u2.at(i, j) = U.at(i, j);
        u2.set_col(U.cols(), e);
        for (std::size_t i = 0; i < img.rows(); ++i)
            for (std::size_t j = 0; j < img.cols(); ++j) i2.at(i, j) = img.at(i, j);
        i2.set_col(img.cols(), ce);
        U = u2;
        img = i2;
    }
    require(U.cols() == r, "split_full: section construction failed");

    const int top = v.shape.max_vertex();
    std::vector<FMatrix> basis(v.shape.num_vertices());
    basis[0] = complete_basis(U.hstack(kernel_basis(C)), v.dim0, f);
    for (int vid = 1; vid <= top; ++vid) {
        FMatrix y = composite_to_vertex(v, vid).mul(U);
        basis[vid] = complete_basis(y, v.dim_vertex(vid), f);
    }

    auto conj = [&](Path p, int pos) {
        int a = vertex_id(v.shape, p, pos), b = vertex_id(v.shape, p, pos + 1);
        return invert(basis[b]).mul(v.map_at(p, pos)).mul(basis[a]);
    };
    auto g_block = [&](const FMatrix& m) { return m.submatrix(0, r, r, m.cols() - r); };
    auto t_block = [&](const FMatrix& m) {
        return m.submatrix(r, r, m.rows() - r, m.cols() - r);
    };

    // choose the complement correction at each vertex so that every
    // off-diagonal block dies; the last arrow out of the minimum on the
    // lower path is then zero automatically by commutativity
    std::vector<FMatrix> delta(v.shape.num_vertices());
    delta[top] = FMatrix(r, v.dim1 - r, f);
    for (Path p : {Path::Upper, Path::Lower}) {
        int len = path_len(v.shape, p);
        for (int pos = len; pos >= (p == Path::Upper ? 0 : 1); --pos) {
            int a = vertex_id(v.shape, p, pos), b = vertex_id(v.shape, p, pos + 1);
            FMatrix m = conj(p, pos);
            delta[a] = delta[b].mul(t_block(m)).sub(g_block(m));
        }
    }
    for (int vid = 0; vid <= top; ++vid) {
        // fold the correction into the complement columns
        FMatrix yd = basis[vid].submatrix(0, 0, basis[vid].rows(), r).mul(delta[vid]);
        for (std::size_t i = 0; i < basis[vid].rows(); ++i)
            for (std::size_t j = 0; j < yd.cols(); ++j)
                basis[vid].at(i, r + j) = f.add(basis[vid].at(i, r + j), yd.at(i, j));
    }

    BipathModule rem = BipathModule::zeros(v.shape, f);
    rem.dim0 = v.dim0 - static_cast<int>(r);
    rem.dim1 = v.dim1 - static_cast<int>(r);
    for (int k = 0; k < v.shape.n; ++k) rem.dim_up[k] = v.dim_up[k] - static_cast<int>(r);
    for (int k = 0; k < v.shape.m; ++k) rem.dim_low[k] = v.dim_low[k] - static_cast<int>(r);
    for (Path p : {Path::Upper, Path::Lower}) {
        int len = path_len(v.shape, p);
        for (int pos = 0; pos <= len; ++pos) {
            FMatrix m = conj(p, pos);
            require(m.submatrix(0, 0, r, r) == FMatrix::identity(r, f),
                    "split_full: identity block lost");
            require(m.submatrix(r, 0, m.rows() - r, r).is_zero(),
                    "split_full: lower-left block nonzero");
            require(g_block(m).is_zero(), "split_full: off-diagonal block did not vanish");
            rem.map_at(p, pos) = t_block(m);
        }
    }
    require(rem.full_composite().is_zero(), "split_full: remainder composite nonzero");
    require(validate(rem).ok, "split_full: remainder does not validate");

    SplitResult out;
    out.extracted[BipathInterval::make_full()] = static_cast<int>(r);
    out.remainder = rem;
    return out;
}

SplitResult split_left(const BipathModule& w) {
    Violation check = validate(w);
    require(check.ok, "split_left: module does not validate");
    require(w.full_composite().is_zero(), "split_left: composite must be zero");
    const FieldSpec f = w.field;
    const int n = w.shape.n, m = w.shape.m;

    // kernel flags of the two paths on the space at the minimum
    std::vector<FMatrix> ku(n + 2), kd(m + 2);
    ku[0] = FMatrix(w.dim0, 0, f);
    kd[0] = FMatrix(w.dim0, 0, f);
    for (int t = 1; t <= n; ++t) ku[t] = kernel_basis(w.composite(Path::Upper, 0, t));
    for (int s = 1; s <= m; ++s) kd[s] = kernel_basis(w.composite(Path::Lower, 0, s));
    ku[n + 1] = FMatrix::identity(w.dim0, f);
    kd[m + 1] = FMatrix::identity(w.dim0, f);
    auto isect = [&](int a, int b) {
        return static_cast<int>(intersect_columnspaces(ku[a], kd[b]).cols());
    };

    SplitResult out;
    for (int t = 0; t <= n; ++t)
        for (int s = 0; s <= m; ++s) {
            int mult = isect(t + 1, s + 1) - isect(t, s + 1) - isect(t + 1, s) + isect(t, s);
            require(mult >= 0, "split_left: negative multiplicity");
            if (mult > 0) out.extracted[BipathInterval::make_L(t, s)] = mult;
        }

    // the remainder is the quotient by the submodule generated at the minimum
    const int top = w.shape.max_vertex();
    std::vector<FMatrix> basis(w.shape.num_vertices());
    std::vector<std::size_t> sub_dim(w.shape.num_vertices());
    for (int vid = 0; vid <= top; ++vid) {
        FMatrix c = column_space_basis(composite_to_vertex(w, vid));
        sub_dim[vid] = c.cols();
        basis[vid] = complete_basis(c, w.dim_vertex(vid), f);
    }
    BipathModule rem = BipathModule::zeros(w.shape, f);
    rem.dim0 = w.dim0 - static_cast<int>(sub_dim[0]);
    rem.dim1 = w.dim1 - static_cast<int>(sub_dim[top]);
    for (int k = 1; k <= n; ++k) rem.dim_up[k - 1] = w.dim_up[k - 1] - static_cast<int>(sub_dim[k]);
    for (int k = 1; k <= m; ++k)
        rem.dim_low[k - 1] = w.dim_low[k - 1] - static_cast<int>(sub_dim[n + k]);
    for (Path p : {Path::Upper, Path::Lower}) {
        int len = path_len(w.shape, p);
        for (int pos = 0; pos <= len; ++pos) {
            int a = vertex_id(w.shape, p, pos), b = vertex_id(w.shape, p, pos + 1);
            FMatrix mc = invert(basis[b]).mul(w.map_at(p, pos)).mul(basis[a]);
            require(mc.submatrix(sub_dim[b], 0, mc.rows() - sub_dim[b], sub_dim[a]).is_zero(),
                    "split_left: generated subspace is not preserved");
            rem.map_at(p, pos) =
                mc.submatrix(sub_dim[b], sub_dim[a], mc.rows() - sub_dim[b], mc.cols() - sub_dim[a]);
        }
    }
    require(rem.dim0 == 0, "split_left: remainder nonzero at the minimum");
    require(validate(rem).ok, "split_left: remainder does not validate");
    out.remainder = rem;
    return out;
}

namespace {

BipathModule opposite(const BipathModule& x) {
    BipathModule op = BipathModule::zeros(x.shape, x.field);
    op.dim0 = x.dim1;
    op.dim1 = x.dim0;
    for (int i = 1; i <= x.shape.n; ++i) op.dim_up[i - 1] = x.dim_up[x.shape.n - i];
    for (int j = 1; j <= x.shape.m; ++j) op.dim_low[j - 1] = x.dim_low[x.shape.m - j];
    for (int p = 0; p <= x.shape.n; ++p) op.up_maps[p] = x.up_maps[x.shape.n - p].transpose();
    for (int p = 0; p <= x.shape.m; ++p) op.low_maps[p] = x.low_maps[x.shape.m - p].transpose();
    return op;
}

}  // namespace

SplitResult split_right(const BipathModule& x) {
    Violation check = validate(x);
    require(check.ok, "split_right: module does not validate");
    require(x.dim0 == 0, "split_right: space at the minimum must be zero");
    SplitResult inner = split_left(opposite(x));
    SplitResult out;
    for (const auto& [iv, mult] : inner.extracted) {
        require(iv.kind == BipathInterval::L, "split_right: unexpected interval class");
        out.extracted[BipathInterval::make_R(x.shape.n + 1 - iv.a, x.shape.m + 1 - iv.b, x.shape)] =
            mult;
    }
    out.remainder = opposite(inner.remainder);
    require(out.remainder.dim0 == 0 && out.remainder.dim1 == 0,
            "split_right: remainder endpoints nonzero");
    require(validate(out.remainder).ok, "split_right: remainder does not validate");
    return out;
}

std::map<BipathInterval, int> split_rest(const BipathModule& z) {
    require(z.dim0 == 0 && z.dim1 == 0, "split_rest: endpoint spaces must be zero");
    std::map<BipathInterval, int> out;
    for (Path p : {Path::Upper, Path::Lower}) {
        int K = path_len(z.shape, p) + 1;
        for (const auto& [bar, mult] : barcode_by_ranks(restrict_path(z, p), p)) {
            require(bar.b > 0 && bar.d < K, "split_rest: endpoint bar in interior module");
            BipathInterval iv = p == Path::Upper ? BipathInterval::make_U(bar.b, bar.d, z.shape)
                                                 : BipathInterval::make_D(bar.b, bar.d, z.shape);
            out[iv] += mult;
        }
    }
    return out;
}

std::map<BipathInterval, int> decompose_direct(const BipathModule& v) {
    SplitResult a = split_full(v);
    SplitResult b = split_left(a.remainder);
    SplitResult c = split_right(b.remainder);
    std::map<BipathInterval, int> out = split_rest(c.remainder);
    for (const auto& stage : {a.extracted, b.extracted, c.extracted})
        for (const auto& [iv, mult] : stage) out[iv] += mult;
    return out;
}

}  // namespace bipath
