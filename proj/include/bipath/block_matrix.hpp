#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bipath/path_decompose.hpp"

namespace bipath {

/// The labeled change-of-basis matrices at the two endpoints.
/// lambda: rows = lower-path summands alive at the minimum, cols = upper-
/// path summands alive at the minimum, both sorted by
/// projective_injective_order; gamma likewise at the maximum.
struct BlockProblem {
    BipathShape shape;
    FMatrix lambda, gamma;
    std::vector<PathInterval> lambda_rows, lambda_cols;  // lower / upper labels
    std::vector<PathInterval> gamma_rows, gamma_cols;
};

/// Matching extracted from the reduced problem.
struct NormalForm {
    int central_size = 0;  // multiplicity of the full interval
    // matched (upper label, lower label) pairs
    std::vector<std::pair<PathInterval, PathInterval>> left_pairs;
    std::vector<std::pair<PathInterval, PathInterval>> right_pairs;
};

struct NormalizeResult {
    NormalForm nf;
    FMatrix lambda_final, gamma_final;
    OpTranscript lambda_ops, gamma_ops;
};

/// Builds the problem from the two path decompositions and checks its
/// structural zeros (forced by commutativity) and block invertibility.
BlockProblem build_problem(const BipathModule& v, const PathDecomposition& up,
                           const PathDecomposition& low);

/// Variant used by the filtration pipeline, where lambda/gamma come from
/// representative cycles rather than module bases.
BlockProblem assemble_problem(const BipathShape& shape, FMatrix lambda, FMatrix gamma,
                              std::vector<PathInterval> lambda_rows,
                              std::vector<PathInterval> lambda_cols,
                              std::vector<PathInterval> gamma_rows,
                              std::vector<PathInterval> gamma_cols);

/// Reduces an invertible matrix to a permutation matrix using only row/
/// column scalings, additions of a row to a strictly higher row, and
/// additions of a column to a strictly righter column.
std::pair<FMatrix, OpTranscript> one_way_reduce(const FMatrix& a);

NormalizeResult normalize(const BlockProblem& bp);

/// Audit helper: true iff every transcript operation is within-label or
/// crosses labels in the permitted hom-order direction.
bool audit_transcript(const OpTranscript& t, const std::vector<PathInterval>& row_labels,
                      const std::vector<PathInterval>& col_labels);

std::map<BipathInterval, int> glue(const NormalForm& nf, const std::vector<PathInterval>& up_bars,
                                   const std::vector<PathInterval>& low_bars,
                                   const BipathShape& shape);

/// The full matrix-problem pipeline.
std::map<BipathInterval, int> decompose_bipath(const BipathModule& v);

}  // namespace bipath
