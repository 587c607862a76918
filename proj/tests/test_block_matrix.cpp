#include <doctest.h>

#include <random>

#include "bipath/block_matrix.hpp"
#include "oracles.hpp"

using namespace bipath;

namespace {

FMatrix from_rows(const std::vector<std::vector<std::uint32_t>>& rows, FieldSpec f) {
    FMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), f);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

bool is_permutation(const FMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t row_ones = 0, col_ones = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j)) {
                if (m.at(i, j) != 1) return false;
                ++row_ones;
            }
            if (m.at(j, i)) ++col_ones;
        }
        if (row_ones != 1 || col_ones != 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("one_way_reduce turns an invertible matrix into a permutation") {
    FieldSpec f2(2);
    FMatrix a = from_rows({{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}, f2);
    auto [perm, ops] = one_way_reduce(a);
    CHECK(perm == FMatrix::identity(3, f2));
    FMatrix replay = a;
    ops.apply(replay);
    CHECK(replay == perm);
    // every recorded addition is one-way: rows flow upward, columns rightward
    for (const auto& op : ops.ops) {
        if (op.kind == OpKind::AddRow) CHECK(op.i > op.j);
        if (op.kind == OpKind::AddCol) CHECK(op.i < op.j);
        CHECK(op.kind != OpKind::SwapRows);
        CHECK(op.kind != OpKind::SwapCols);
    }
}

TEST_CASE("one_way_reduce on random invertible matrices") {
    std::mt19937_64 rng(41);
    for (std::uint32_t p : {2u, 5u, 13u}) {
        FieldSpec f(p);
        std::uint64_t state = 314159;
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t n = 1 + trial % 6;
            FMatrix a = random_invertible(n, f, state);
            auto [perm, ops] = one_way_reduce(a);
            CHECK(is_permutation(perm));
            FMatrix replay = a;
            ops.apply(replay);
            CHECK(replay == perm);
            for (const auto& op : ops.ops) {
                if (op.kind == OpKind::AddRow) CHECK(op.i > op.j);
                if (op.kind == OpKind::AddCol) CHECK(op.i < op.j);
                CHECK(op.kind != OpKind::SwapRows);
                CHECK(op.kind != OpKind::SwapCols);
            }
        }
    }
    (void)rng;
}

TEST_CASE("build_problem satisfies the structural constraints on scrambled sums") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        BipathShape shape(1 + trial % 4, 1 + (trial / 4) % 4);
        FieldSpec f(trial % 2 ? 2u : 5u);
        auto ivs = oracle::random_intervals(rng, shape, 1 + trial % 8);
        auto [v, truth] = scrambled_sum(ivs, shape, f, 9000 + trial);
        (void)truth;
        PathDecomposition up = decompose_path(restrict_path(v, Path::Upper), Path::Upper);
        PathDecomposition low = decompose_path(restrict_path(v, Path::Lower), Path::Lower);
        // build_problem itself asserts structural zeros, sorting, and block
        // invertibility; reaching here without a throw is the check
        BlockProblem bp = build_problem(v, up, low);
        CHECK(bp.lambda.rows() == bp.lambda_rows.size());
        CHECK(bp.lambda.cols() == bp.lambda_cols.size());
        CHECK(bp.gamma.rows() == bp.gamma_rows.size());
        CHECK(bp.gamma.cols() == bp.gamma_cols.size());
        CHECK(static_cast<int>(bp.lambda.rows()) == v.dim0);
        CHECK(static_cast<int>(bp.gamma.rows()) == v.dim1);
    }
}

TEST_CASE("normalize transcripts pass the permissibility audit") {
    std::mt19937_64 rng(47);
    for (std::uint32_t p : {2u, 5u, 13u}) {
        FieldSpec f(p);
        for (int trial = 0; trial < 200; ++trial) {
            BipathShape shape(1 + trial % 4, 1 + (trial / 4) % 4);
            auto ivs = oracle::random_intervals(rng, shape, 1 + trial % 10);
            auto [v, truth] = scrambled_sum(ivs, shape, f, 100000 * p + trial);
            (void)truth;
            PathDecomposition up = decompose_path(restrict_path(v, Path::Upper), Path::Upper);
            PathDecomposition low = decompose_path(restrict_path(v, Path::Lower), Path::Lower);
            BlockProblem bp = build_problem(v, up, low);
            NormalizeResult nr = normalize(bp);
            CHECK(audit_transcript(nr.lambda_ops, bp.lambda_rows, bp.lambda_cols));
            CHECK(audit_transcript(nr.gamma_ops, bp.gamma_rows, bp.gamma_cols));
            // the transcripts genuinely produce the reported final faces
            FMatrix l = bp.lambda, g = bp.gamma;
            nr.lambda_ops.apply(l);
            nr.gamma_ops.apply(g);
            CHECK(l == nr.lambda_final);
            CHECK(g == nr.gamma_final);
        }
    }
}

TEST_CASE("audit_transcript rejects a wrong-direction operation") {
    BipathShape s(2, 1);
    auto chain = projective_injective_order(s, Path::Upper);
    // labels strictly increasing along the chain: an AddRow from a later
    // label to an earlier one is forbidden, the reverse is allowed
    std::vector<PathInterval> labels = {chain[0], chain[2]};
    OpTranscript good, bad;
    good.add_row(0, 1, 1);  // toward the later label: receives from earlier? check hom direction
    bad.add_row(1, 0, 1);
    bool g = audit_transcript(good, labels, labels);
    bool b = audit_transcript(bad, labels, labels);
    CHECK(g != b);  // exactly one direction is permissible
    // within-label operations always pass
    std::vector<PathInterval> twice = {chain[1], chain[1]};
    OpTranscript swap_ok;
    swap_ok.swap_rows(0, 1);
    CHECK(audit_transcript(swap_ok, twice, {}));
    OpTranscript swap_bad;
    swap_bad.swap_rows(0, 1);
    CHECK_FALSE(audit_transcript(swap_bad, labels, {}));
}

TEST_CASE("decompose_bipath is the identity on single interval modules") {
    for (auto shape : {BipathShape(3, 2), BipathShape(1, 1)}) {
        FieldSpec f(3);
        for (const auto& iv : enumerate_intervals(shape)) {
            BipathModule v = interval_module(iv, shape, f);
            std::map<BipathInterval, int> want = {{iv, 1}};
            CHECK(decompose_bipath(v) == want);
        }
    }
}

TEST_CASE("decompose_bipath recovers scrambled ground truth") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 150; ++trial) {
        BipathShape shape(1 + trial % 5, 1 + (trial / 5) % 5);
        FieldSpec f(trial % 3 == 0 ? 5u : 2u);
        auto ivs = oracle::random_intervals(rng, shape, 1 + trial % 12);
        auto [v, truth] = scrambled_sum(ivs, shape, f, 31337 + trial);
        CHECK(decompose_bipath(v) == truth);
    }
}

TEST_CASE("diagram conserves dimensions at every vertex") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        BipathShape shape(1 + trial % 3, 1 + (trial / 3) % 3);
        FieldSpec f(2);
        auto ivs = oracle::random_intervals(rng, shape, 2 + trial % 8);
        auto [v, truth] = scrambled_sum(ivs, shape, f, 271828 + trial);
        (void)truth;
        auto diagram = decompose_bipath(v);
        std::vector<int> total(shape.num_vertices(), 0);
        for (const auto& [iv, mult] : diagram) {
            auto dv = dim_vector(iv, shape);
            for (int vid = 0; vid < shape.num_vertices(); ++vid) total[vid] += mult * dv[vid];
        }
        for (int vid = 0; vid < shape.num_vertices(); ++vid)
            CHECK(total[vid] == v.dim_vertex(vid));
    }
}

TEST_CASE("decomposition is independent of the scrambling seed") {
    std::mt19937_64 rng(61);
    BipathShape shape(3, 3);
    FieldSpec f(5);
    auto ivs = oracle::random_intervals(rng, shape, 7);
    std::map<BipathInterval, int> first;
    for (std::uint64_t seed : {1ull, 2ull, 99ull, 424242ull}) {
        auto [v, truth] = scrambled_sum(ivs, shape, f, seed);
        auto diagram = decompose_bipath(v);
        CHECK(diagram == truth);
        if (first.empty()) first = diagram;
        CHECK(diagram == first);
    }
}
