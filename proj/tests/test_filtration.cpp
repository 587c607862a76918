#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "bipath/block_matrix.hpp"
#include "bipath/direct_decompose.hpp"
#include "bipath/filtration.hpp"
#include "bipath/io.hpp"
#include "oracles.hpp"

using namespace bipath;

namespace {

std::string data_file(const std::string& name) {
    std::ifstream in(std::string(BIPATH_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

BipathFiltration sec5() { return parse_filtration(data_file("sec5.bft")); }

void check_line(const std::string& text, const std::string& needle, int line) {
    try {
        parse_filtration(text);
        FAIL_CHECK("expected a parse error: " << needle);
    } catch (const error& e) {
        std::string msg = e.what();
        CHECK(msg.find(needle) != std::string::npos);
        CHECK(msg.find("line " + std::to_string(line)) != std::string::npos);
    }
}

std::map<PathInterval, int> bar_multiset(const PathReduction& r) {
    std::map<PathInterval, int> out;
    for (const auto& b : r.bars) out[b.bar]++;
    return out;
}

}  // namespace

TEST_CASE("parse_filtration reports precise errors") {
    check_line("simplex a v=0 u=0 l=0\n", "header", 1);
    check_line("bipath 0 2\n", "shape", 1);
    check_line("bipath 2 2\nsimplex a v=0 u=5 l=0\n", "grade", 2);
    check_line("bipath 2 2\nsimplex a v=0 u=0 l=1\n", "both", 2);
    check_line("bipath 2 2\nsimplex a v=0 u=0 l=0\nsimplex a v=1 u=0 l=0\n", "duplicate", 3);
    check_line("bipath 2 2\nsimplex a v=0 u=0 l=0\nsimplex aa v=0,0 u=0 l=0\n", "repeated", 3);
    // face missing entirely
    check_line("bipath 2 2\nsimplex a v=0 u=0 l=0\nsimplex ab v=0,1 u=1 l=1\n", "face", 3);
    // face present but entering later on one path
    check_line(
        "bipath 2 2\nsimplex a v=0 u=0 l=0\nsimplex b v=1 u=2 l=2\nsimplex ab v=0,1 u=1 l=2\n",
        "face", 4);
    check_line("bipath 2 2\nsimplex a w=0 u=0 l=0\n", "field", 2);
}

TEST_CASE("format_filtration round trips") {
    BipathFiltration f = sec5();
    BipathFiltration g = parse_filtration(format_filtration(f));
    REQUIRE(g.simplices.size() == f.simplices.size());
    CHECK(g.shape == f.shape);
    for (std::size_t i = 0; i < f.simplices.size(); ++i) {
        CHECK(g.simplices[i].id == f.simplices[i].id);
        CHECK(g.simplices[i].verts == f.simplices[i].verts);
        CHECK(g.simplices[i].u == f.simplices[i].u);
        CHECK(g.simplices[i].l == f.simplices[i].l);
    }
}

TEST_CASE("path reductions of the worked example") {
    BipathFiltration f = sec5();
    FieldSpec f2(2);

    PathReduction u0 = reduce_path(f, Path::Upper, 0, f2);
    CHECK(u0.K == 4);
    CHECK(bar_multiset(u0) == std::map<PathInterval, int>{{{Path::Upper, 0, 0}, 2},
                                                          {{Path::Upper, 0, 4}, 1}});
    PathReduction l0 = reduce_path(f, Path::Lower, 0, f2);
    CHECK(l0.K == 3);
    CHECK(bar_multiset(l0) == std::map<PathInterval, int>{{{Path::Lower, 0, 0}, 1},
                                                          {{Path::Lower, 0, 1}, 1},
                                                          {{Path::Lower, 0, 3}, 1}});

    PathReduction u1 = reduce_path(f, Path::Upper, 1, f2);
    CHECK(bar_multiset(u1) == std::map<PathInterval, int>{{{Path::Upper, 1, 4}, 2},
                                                          {{Path::Upper, 2, 4}, 1},
                                                          {{Path::Upper, 3, 3}, 1}});
    PathReduction l1 = reduce_path(f, Path::Lower, 1, f2);
    CHECK(bar_multiset(l1) == std::map<PathInterval, int>{{{Path::Lower, 1, 1}, 1},
                                                          {{Path::Lower, 1, 3}, 1},
                                                          {{Path::Lower, 2, 3}, 1},
                                                          {{Path::Lower, 3, 3}, 1}});
}

TEST_CASE("endpoint change-of-basis matrices of the worked example") {
    BipathFiltration f = sec5();
    FieldSpec f2(2);

    PathReduction u0 = reduce_path(f, Path::Upper, 0, f2);
    PathReduction l0 = reduce_path(f, Path::Lower, 0, f2);
    auto [lam0, gam0] = lambda_gamma(u0, l0);
    // the two components {a,d} and {a,e} swap between the path orders
    FMatrix want0(3, 3, f2);
    want0.at(0, 1) = 1;
    want0.at(1, 0) = 1;
    want0.at(2, 2) = 1;
    CHECK(lam0 == want0);
    CHECK(gam0 == FMatrix::identity(1, f2));

    PathReduction u1 = reduce_path(f, Path::Upper, 1, f2);
    PathReduction l1 = reduce_path(f, Path::Lower, 1, f2);
    auto [lam1, gam1] = lambda_gamma(u1, l1);
    CHECK(lam1.rows() == 0);
    CHECK(lam1.cols() == 0);
    CHECK(gam1 == FMatrix::identity(3, f2));
}

TEST_CASE("persistence diagrams of the worked example") {
    BipathFiltration f = sec5();
    FieldSpec f2(2);
    auto all = bipath_pd_all(f, f2);
    REQUIRE(all.size() == 3);
    std::map<BipathInterval, int> want0 = {
        {BipathInterval::make_full(), 1},
        {BipathInterval::make_L(0, 0), 1},
        {BipathInterval::make_L(0, 1), 1},
    };
    std::map<BipathInterval, int> want1 = {
        {BipathInterval::make_R(1, 1, f.shape), 1},
        {BipathInterval::make_R(1, 2, f.shape), 1},
        {BipathInterval::make_R(2, 3, f.shape), 1},
        {BipathInterval::make_U(3, 3, f.shape), 1},
        {BipathInterval::make_D(1, 1, f.shape), 1},
    };
    CHECK(all[0] == want0);
    CHECK(all[1] == want1);
    CHECK(all[2].empty());
    CHECK(bipath_pd(f, 5, f2).empty());
    // the diagram does not depend on the coefficient field here
    CHECK(bipath_pd(f, 0, FieldSpec(5)) == want0);
    CHECK(bipath_pd(f, 1, FieldSpec(5)) == want1);
}

TEST_CASE("filtration pipeline agrees with homology built from scratch") {
    std::mt19937_64 rng(79);
    int done = 0;
    while (done < 50) {
        BipathShape shape(1 + done % 4, 1 + (done / 4) % 3);
        BipathFiltration f = oracle::random_filtration(rng, shape, 4 + done % 3);
        if (static_cast<int>(f.simplices.size()) > 40) continue;
        FieldSpec field(done % 2 ? 2u : 3u);
        for (int q = 0; q <= f.max_dim(); ++q) {
            BipathModule h = oracle::brute_force_homology(f, q, field);
            auto from_filtration = bipath_pd(f, q, field);
            CHECK(decompose_bipath(h) == from_filtration);
            CHECK(decompose_direct(h) == from_filtration);
        }
        ++done;
    }
}

TEST_CASE("restrict_grid thresholds along an order embedding") {
    std::string grid = R"({"simplices":[
        {"id":"a","v":[0],"grade":[0,0]},
        {"id":"b","v":[1],"grade":[0,0]},
        {"id":"ab","v":[0,1],"grade":[2,1]},
        {"id":"far","v":[2],"grade":[9,9]}
    ]})";
    std::string emb = R"({"shape":[2,1],"zero":[0,0],"one":[4,4],
                          "upper":[[3,1],[3,2]],"lower":[[1,3]]})";
    BipathFiltration f = restrict_grid(grid, emb);
    CHECK(f.shape == BipathShape(2, 1));
    REQUIRE(f.simplices.size() == 4);
    auto find = [&](const std::string& id) -> const Simplex& {
        for (const auto& s : f.simplices)
            if (s.id == id) return s;
        FAIL("missing simplex");
        return f.simplices[0];
    };
    CHECK(find("a").u == 0);
    CHECK(find("a").l == 0);
    // [2,1] is below [3,1] (first upper point) but not [1,3]
    CHECK(find("ab").u == 1);
    CHECK(find("ab").l == 2);
    // [9,9] is dominated by no embedded point except the maximum
    CHECK(find("far").u == 3);
    CHECK(find("far").l == 2);
}

TEST_CASE("restrict_grid rejects a non-embedding") {
    std::string grid = R"({"simplices":[{"id":"a","v":[0],"grade":[0,0]}]})";
    // the two upper points are incomparable in the grid: not an embedding
    std::string emb = R"({"shape":[2,1],"zero":[0,0],"one":[4,4],
                          "upper":[[3,1],[1,2]],"lower":[[1,3]]})";
    CHECK_THROWS_AS(restrict_grid(grid, emb), error);
    // upper point above the maximum
    std::string emb2 = R"({"shape":[1,1],"zero":[0,0],"one":[2,2],
                           "upper":[[3,1]],"lower":[[1,1]]})";
    CHECK_THROWS_AS(restrict_grid(grid, emb2), error);
}
