#include "bipath.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "bipath/block_matrix.hpp"
#include "bipath/diagram.hpp"
#include "bipath/direct_decompose.hpp"
#include "bipath/filtration.hpp"
#include "bipath/io.hpp"

struct bp_diagram {
    bipath::BipathDiagram d;
};

struct bp_diagram_set {
    std::vector<bipath::BipathDiagram> diagrams;
};

namespace {

thread_local std::string g_last_error;

int fail(const std::string& msg, int code = BP_ERR_INVALID) {
    g_last_error = msg;
    return code;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
int guarded(F&& f) {
    try {
        g_last_error.clear();
        return f();
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

// the worked example shipped as data/sec5.bft, embedded for the selftest
const char* kSelftestFixture = R"(bipath 3 2
simplex a v=0 u=0 l=0
simplex b v=1 u=0 l=0
simplex c v=2 u=0 l=0
simplex d v=3 u=0 l=0
simplex e v=4 u=0 l=0
simplex ab v=0,1 u=0 l=0
simplex bc v=1,2 u=0 l=0
simplex ac v=0,2 u=1 l=1
simplex ad v=0,3 u=1 l=2
simplex ae v=0,4 u=1 l=1
simplex de v=3,4 u=1 l=2
simplex cd v=2,3 u=2 l=3
simplex ce v=2,4 u=3 l=1
simplex ace v=0,2,4 u=4 l=2
)";

}  // namespace

extern "C" {

int bp_pd(const char* bft_text, int degree, unsigned p, bp_diagram** out) {
    return guarded([&]() {
        if (!bft_text || !out) return fail("null argument");
        if (degree < 0) return fail("degree must be nonnegative");
        bipath::BipathFiltration f = bipath::parse_filtration(bft_text);
        bipath::BipathDiagram d;
        d.shape = f.shape;
        d.degree = degree;
        d.points = bipath::bipath_pd(f, degree, bipath::FieldSpec(p));
        *out = new bp_diagram{std::move(d)};
        return BP_OK;
    });
}

int bp_pd_all(const char* bft_text, unsigned p, bp_diagram_set** out) {
    return guarded([&]() {
        if (!bft_text || !out) return fail("null argument");
        bipath::BipathFiltration f = bipath::parse_filtration(bft_text);
        auto all = bipath::bipath_pd_all(f, bipath::FieldSpec(p));
        auto* set = new bp_diagram_set;
        for (std::size_t q = 0; q < all.size(); ++q) {
            if (all[q].empty()) continue;
            bipath::BipathDiagram d;
            d.shape = f.shape;
            d.degree = static_cast<int>(q);
            d.points = std::move(all[q]);
            set->diagrams.push_back(std::move(d));
        }
        *out = set;
        return BP_OK;
    });
}

int bp_decompose(const char* module_json, const char* method, bp_diagram** out) {
    return guarded([&]() {
        if (!module_json || !method || !out) return fail("null argument");
        std::string mode = method;
        if (mode != "matrix" && mode != "direct" && mode != "both")
            return fail("method must be matrix, direct, or both");
        bipath::BipathModule v = bipath::module_from_json(module_json);
        bipath::BipathDiagram d;
        d.shape = v.shape;
        if (mode == "matrix") {
            d.points = bipath::decompose_bipath(v);
        } else if (mode == "direct") {
            d.points = bipath::decompose_direct(v);
        } else {
            auto a = bipath::decompose_bipath(v);
            auto b = bipath::decompose_direct(v);
            if (a != b)
                return fail("the matrix and direct decompositions disagree", BP_ERR_MISMATCH);
            d.points = std::move(a);
        }
        *out = new bp_diagram{std::move(d)};
        return BP_OK;
    });
}

int bp_diagram_emit(const bp_diagram* d, const char* format, char** out_bytes) {
    return guarded([&]() {
        if (!d || !format || !out_bytes) return fail("null argument");
        *out_bytes = copy_string(bipath::emit(d->d, format));
        return BP_OK;
    });
}

int bp_diagram_parse(const char* json_text, bp_diagram** out) {
    return guarded([&]() {
        if (!json_text || !out) return fail("null argument");
        *out = new bp_diagram{bipath::parse_diagram_json(json_text)};
        return BP_OK;
    });
}

int bp_diagram_set_size(const bp_diagram_set* s) {
    return s ? static_cast<int>(s->diagrams.size()) : 0;
}

const bp_diagram* bp_diagram_set_get(const bp_diagram_set* s, int index) {
    if (!s || index < 0 || index >= static_cast<int>(s->diagrams.size())) return nullptr;
    // the wrapper layout is a single diagram, so the element can be aliased
    return reinterpret_cast<const bp_diagram*>(&s->diagrams[index]);
}

int bp_diagram_set_emit_json(const bp_diagram_set* s, char** out_bytes) {
    return guarded([&]() {
        if (!s || !out_bytes) return fail("null argument");
        std::string body = "{\"diagrams\":[";
        for (std::size_t i = 0; i < s->diagrams.size(); ++i) {
            if (i) body += ",";
            body += bipath::emit_json(s->diagrams[i]);
        }
        body += "]}";
        *out_bytes = copy_string(body);
        return BP_OK;
    });
}

int bp_restrict_grid(const char* grid_json, const char* embedding_json, char** out_bft) {
    return guarded([&]() {
        if (!grid_json || !embedding_json || !out_bft) return fail("null argument");
        bipath::BipathFiltration f = bipath::restrict_grid(grid_json, embedding_json);
        *out_bft = copy_string(bipath::format_filtration(f));
        return BP_OK;
    });
}

int bp_selftest(void) {
    return guarded([&]() -> int {
        using bipath::BipathInterval;
        bipath::BipathFiltration f = bipath::parse_filtration(kSelftestFixture);
        bipath::FieldSpec f2(2);
        auto all = bipath::bipath_pd_all(f, f2);

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
        if (all.size() != 3 || all[0] != want0 || all[1] != want1 || !all[2].empty())
            return fail("selftest: worked-example diagrams are wrong");

        std::uint64_t seed = 12345;
        if (const char* env = std::getenv("BIPATH_SEED")) seed = std::strtoull(env, nullptr, 10);
        std::vector<BipathInterval> intervals = {
            BipathInterval::make_full(),
            BipathInterval::make_L(2, 0),
            BipathInterval::make_R(3, 1, f.shape),
            BipathInterval::make_U(1, 2, f.shape),
            BipathInterval::make_D(2, 2, f.shape),
            BipathInterval::make_D(2, 2, f.shape),
        };
        auto [mod, truth] = bipath::scrambled_sum(intervals, f.shape, f2, seed);
        if (bipath::decompose_bipath(mod) != truth)
            return fail("selftest: matrix-method round trip failed");
        if (bipath::decompose_direct(mod) != truth)
            return fail("selftest: direct-method round trip failed");
        return BP_OK;
    });
}

const char* bp_last_error(void) { return g_last_error.c_str(); }

void bp_diagram_free(bp_diagram* d) { delete d; }
void bp_diagram_set_free(bp_diagram_set* s) { delete s; }
void bp_string_free(char* s) { std::free(s); }

}  // extern "C"
