#include "bipath/matrix.hpp"

#include <algorithm>

namespace bipath {

FMatrix FMatrix::identity(std::size_t n, FieldSpec field) {
    FMatrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool FMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t v) { return v == 0; });
}

std::vector<std::uint32_t> FMatrix::col(std::size_t j) const {
    std::vector<std::uint32_t> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void FMatrix::set_col(std::size_t j, const std::vector<std::uint32_t>& v) {
    if (v.size() != rows_) throw error("set_col: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

FMatrix FMatrix::mul(const FMatrix& o) const {
    if (cols_ != o.rows_ || field_.p != o.field_.p) throw error("mul: dimension or field mismatch");
    FMatrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint32_t v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = field_.add(r.at(i, j), field_.mul(v, o.at(k, j)));
        }
    return r;
}

std::vector<std::uint32_t> FMatrix::mul_vec(const std::vector<std::uint32_t>& v) const {
    if (v.size() != cols_) throw error("mul_vec: dimension mismatch");
    std::vector<std::uint32_t> r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
    return r;
}

FMatrix FMatrix::transpose() const {
    FMatrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

FMatrix FMatrix::add(const FMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("add: dimension mismatch");
    FMatrix r(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
    return r;
}

FMatrix FMatrix::sub(const FMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("sub: dimension mismatch");
    FMatrix r(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
    return r;
}

FMatrix FMatrix::hstack(const FMatrix& o) const {
    if (rows_ != o.rows_) throw error("hstack: row mismatch");
    FMatrix r(rows_, cols_ + o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

FMatrix FMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw error("submatrix: out of range");
    FMatrix r(nr, nc, field_);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

void FMatrix::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void FMatrix::swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void FMatrix::scale_row(std::size_t i, std::uint32_t c) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = field_.mul(at(i, k), c);
}

void FMatrix::scale_col(std::size_t j, std::uint32_t c) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, j) = field_.mul(at(k, j), c);
}

void FMatrix::add_row(std::size_t src, std::size_t dst, std::uint32_t c) {
    for (std::size_t k = 0; k < cols_; ++k) at(dst, k) = field_.add(at(dst, k), field_.mul(c, at(src, k)));
}

void FMatrix::add_col(std::size_t src, std::size_t dst, std::uint32_t c) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, dst) = field_.add(at(k, dst), field_.mul(c, at(k, src)));
}

namespace {

// Reduced row echelon form in place; returns pivot column list.
std::vector<std::size_t> rref(FMatrix& m) {
    const FieldSpec& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m.at(pr, c) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r) m.swap_rows(pr, r);
        std::uint32_t inv = f.inv(m.at(r, c));
        if (inv != 1) m.scale_row(r, inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            std::uint32_t v = m.at(i, c);
            if (v != 0) m.add_row(r, i, f.neg(v));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const FMatrix& m) {
    FMatrix w = m;
    return rref(w).size();
}

std::optional<std::vector<std::uint32_t>> solve(const FMatrix& a, const std::vector<std::uint32_t>& b) {
    if (a.rows() != b.size()) throw error("solve: dimension mismatch");
    FMatrix aug(a.rows(), a.cols() + 1, a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<std::uint32_t> x(a.cols(), 0);
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, a.cols());
    return x;
}

FMatrix kernel_basis(const FMatrix& m) {
    FMatrix w = m;
    std::vector<std::size_t> pivots = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    FMatrix k(m.cols(), m.cols() - pivots.size(), m.field());
    std::size_t out = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        k.at(c, out) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            k.at(pivots[r], out) = m.field().neg(w.at(r, c));
        ++out;
    }
    return k;
}

FMatrix invert(const FMatrix& m) {
    if (m.rows() != m.cols()) throw error("invert: matrix not square");
    std::size_t n = m.rows();
    FMatrix aug = m.hstack(FMatrix::identity(n, m.field()));
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
        throw error("invert: matrix is singular");
    return aug.submatrix(0, n, n, n);
}

FMatrix intersect_columnspaces(const FMatrix& a, const FMatrix& b) {
    if (a.rows() != b.rows()) throw error("intersect_columnspaces: row mismatch");
    FMatrix cat = a.hstack(b);
    FMatrix k = kernel_basis(cat);
    // for kernel vector (x; y), a·x = -b·y lies in the intersection
    FMatrix cand(a.rows(), k.cols(), a.field());
    for (std::size_t j = 0; j < k.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) {
            std::uint32_t s = 0;
            for (std::size_t t = 0; t < a.cols(); ++t)
                s = a.field().add(s, a.field().mul(a.at(i, t), k.at(t, j)));
            cand.at(i, j) = s;
        }
    return column_space_basis(cand);
}

FMatrix column_space_basis(const FMatrix& m) {
    FMatrix w = m;
    std::vector<std::size_t> pivots = rref(w);
    FMatrix r(m.rows(), pivots.size(), m.field());
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) r.at(i, j) = m.at(i, pivots[j]);
    return r;
}

void OpTranscript::apply(FMatrix& m) const {
    for (const ElemOp& op : ops) {
        switch (op.kind) {
            case OpKind::SwapRows: m.swap_rows(op.i, op.j); break;
            case OpKind::SwapCols: m.swap_cols(op.i, op.j); break;
            case OpKind::ScaleRow: m.scale_row(op.i, op.c); break;
            case OpKind::ScaleCol: m.scale_col(op.i, op.c); break;
            case OpKind::AddRow: m.add_row(op.i, op.j, op.c); break;
            case OpKind::AddCol: m.add_col(op.i, op.j, op.c); break;
        }
    }
}

}  // namespace bipath
