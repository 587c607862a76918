#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bipath/field.hpp"

namespace bipath {

/// Dense matrix over a prime field. Row-major; zero-row / zero-column
/// matrices are first-class values.
class FMatrix {
public:
    FMatrix() : rows_(0), cols_(0), field_(2) {}
    FMatrix(std::size_t rows, std::size_t cols, FieldSpec field)
        : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

    static FMatrix identity(std::size_t n, FieldSpec field);
    static FMatrix zeros(std::size_t rows, std::size_t cols, FieldSpec field) {
        return FMatrix(rows, cols, field);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    std::uint32_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::uint32_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    bool operator==(const FMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && field_.p == o.field_.p && data_ == o.data_;
    }
    bool operator!=(const FMatrix& o) const { return !(*this == o); }

    bool is_zero() const;

    std::vector<std::uint32_t> col(std::size_t j) const;
    void set_col(std::size_t j, const std::vector<std::uint32_t>& v);

    FMatrix mul(const FMatrix& o) const;
    std::vector<std::uint32_t> mul_vec(const std::vector<std::uint32_t>& v) const;
    FMatrix transpose() const;
    FMatrix add(const FMatrix& o) const;
    FMatrix sub(const FMatrix& o) const;

    /// Horizontal concatenation [this | o].
    FMatrix hstack(const FMatrix& o) const;
    FMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    // elementary operations (in place)
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void scale_row(std::size_t i, std::uint32_t c);
    void scale_col(std::size_t j, std::uint32_t c);
    void add_row(std::size_t src, std::size_t dst, std::uint32_t c);  // row dst += c * row src
    void add_col(std::size_t src, std::size_t dst, std::uint32_t c);  // col dst += c * col src

private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<std::uint32_t> data_;
};

std::size_t rank(const FMatrix& m);

/// Solve a x = b; empty optional when b is outside the column space.
std::optional<std::vector<std::uint32_t>> solve(const FMatrix& a, const std::vector<std::uint32_t>& b);

/// Columns form a basis of ker m.
FMatrix kernel_basis(const FMatrix& m);

/// Two-sided inverse; throws bipath::error when singular.
FMatrix invert(const FMatrix& m);

/// Basis of im(a) ∩ im(b), via the kernel of [a | b].
FMatrix intersect_columnspaces(const FMatrix& a, const FMatrix& b);

/// Columns of m that increase rank left to right, as a basis of im m.
FMatrix column_space_basis(const FMatrix& m);

enum class OpKind { SwapRows, SwapCols, ScaleRow, ScaleCol, AddRow, AddCol };

struct ElemOp {
    OpKind kind;
    std::size_t i, j;   // AddRow/AddCol: dst (j) += c * src (i)
    std::uint32_t c;
};

struct OpTranscript {
    std::vector<ElemOp> ops;

    void swap_rows(std::size_t i, std::size_t j) { ops.push_back({OpKind::SwapRows, i, j, 0}); }
    void swap_cols(std::size_t i, std::size_t j) { ops.push_back({OpKind::SwapCols, i, j, 0}); }
    void scale_row(std::size_t i, std::uint32_t c) { ops.push_back({OpKind::ScaleRow, i, i, c}); }
    void scale_col(std::size_t j, std::uint32_t c) { ops.push_back({OpKind::ScaleCol, j, j, c}); }
    void add_row(std::size_t src, std::size_t dst, std::uint32_t c) { ops.push_back({OpKind::AddRow, src, dst, c}); }
    void add_col(std::size_t src, std::size_t dst, std::uint32_t c) { ops.push_back({OpKind::AddCol, src, dst, c}); }

    /// Replays every recorded operation, in order, on m.
    void apply(FMatrix& m) const;
};

}  // namespace bipath
