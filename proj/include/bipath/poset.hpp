#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "bipath/field.hpp"

namespace bipath {

/// Two monotone paths of lengths n and m joined at a global minimum and a
/// global maximum.  Vertex ids: 0 = the minimum ("0"), 1..n = upper path,
/// n+1..n+m = lower path, n+m+1 = the maximum ("1").
struct BipathShape {
    int n = 1, m = 1;

    BipathShape() = default;
    BipathShape(int n_, int m_) : n(n_), m(m_) {
        if (n < 1 || m < 1) throw error("bipath shape requires n >= 1 and m >= 1");
    }

    int num_vertices() const { return n + m + 2; }
    int max_vertex() const { return n + m + 1; }
    int path_len(bool upper) const { return upper ? n : m; }

    bool operator==(const BipathShape& o) const { return n == o.n && m == o.m; }
};

enum class Path { Upper, Lower };

inline int path_len(const BipathShape& s, Path p) { return p == Path::Upper ? s.n : s.m; }

/// Vertex id for a path position: 0 = minimum, 1..len = inner path
/// vertices, len+1 = maximum.
int vertex_id(const BipathShape& s, Path p, int pos);
std::string vertex_name(const BipathShape& s, int vid);

/// An interval [b, d] on one path extended by the two endpoints; positions
/// as in vertex_id (0 = minimum, len+1 = maximum).
struct PathInterval {
    Path path = Path::Upper;
    int b = 0, d = 0;

    PathInterval() = default;
    PathInterval(Path p, int b_, int d_) : path(p), b(b_), d(d_) {
        if (b < 0 || d < b) throw error("path interval requires 0 <= b <= d");
    }

    bool operator==(const PathInterval& o) const { return path == o.path && b == o.b && d == o.d; }
    bool operator!=(const PathInterval& o) const { return !(*this == o); }
    bool operator<(const PathInterval& o) const {
        return std::tie(path, b, d) < std::tie(o.path, o.b, o.d);
    }
};

std::string render(const PathInterval& i, const BipathShape& s);

/// True iff there is a nonzero morphism from the interval module of i to
/// the interval module of j: writing i = [a,b], j = [c,d], this is
/// c <= a <= d <= b.  Throws when the intervals live on different paths.
bool hom_nonzero(const PathInterval& i, const PathInterval& j);

/// The total order refining the hom relation on endpoint-touching
/// intervals of one path: [0,0], [0,1], ..., [0,K], [1,K], ..., [K,K]
/// where K = len + 1.
std::vector<PathInterval> projective_injective_order(const BipathShape& s, Path p);

/// Position of an endpoint-touching interval in projective_injective_order.
int chain_index(const PathInterval& i, int K);

/// The five interval classes of the bipath poset.
///   Full        — the whole poset.
///   L(t, s)     — the minimum, upper prefix 1..t, lower prefix 1..s
///                 (t = 0 or s = 0: nothing on that path).
///   R(s, t)     — the maximum, upper suffix s..n, lower suffix t..m
///                 (s = n+1 or t = m+1: nothing on that path).
///   U(b, d)     — upper vertices b..d, 1 <= b <= d <= n.
///   D(b, d)     — lower vertices b..d, 1 <= b <= d <= m; displayed with
///                 death first.
struct BipathInterval {
    enum Kind { Full, L, R, U, D };
    Kind kind = Full;
    int a = 0, b = 0;  // L: (t, s); R: (s, t); U/D: (birth, death)

    static BipathInterval make_full() { return {Full, 0, 0}; }
    static BipathInterval make_L(int t, int s);
    static BipathInterval make_R(int s, int t, const BipathShape& shape);
    static BipathInterval make_U(int birth, int death, const BipathShape& shape);
    static BipathInterval make_D(int birth, int death, const BipathShape& shape);

    bool operator==(const BipathInterval& o) const {
        return kind == o.kind && a == o.a && b == o.b;
    }
    bool operator<(const BipathInterval& o) const {
        return std::tie(kind, a, b) < std::tie(o.kind, o.a, o.b);
    }
};

std::vector<BipathInterval> enumerate_intervals(const BipathShape& s);

bool interval_contains(const BipathInterval& i, const BipathShape& s, int vid);

/// Indicator dimension vector indexed by vertex id.
std::vector<int> dim_vector(const BipathInterval& i, const BipathShape& s);

/// Display coordinates (s, t) of the interval, using the vertex encoding
/// "0", "1", "u<i>", "l<j>"; Full yields a pair of empty strings.
std::pair<std::string, std::string> display_coords(const BipathInterval& i, const BipathShape& s);

std::string render(const BipathInterval& i, const BipathShape& s);

/// True iff every vertex of inner lies in outer.
bool interval_subset(const BipathInterval& inner, const BipathInterval& outer, const BipathShape& s);

}  // namespace bipath
