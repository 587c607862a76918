// Command-line front end; talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bipath.h"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return 1;
    }
    out << text;
    return 0;
}

int report(int code) {
    std::cerr << "error: " << bp_last_error() << "\n";
    return code;
}

std::string format_for(const std::string& out_path, const std::string& fallback) {
    auto dot = out_path.rfind('.');
    if (dot == std::string::npos) return fallback;
    std::string ext = out_path.substr(dot + 1);
    if (ext == "json" || ext == "csv" || ext == "svg") return ext;
    return fallback;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interval decomposition and persistence diagrams over bipath posets"};
    app.require_subcommand(1);

    std::string input, out_path, degree = "0", method = "both";
    std::string grid_path, embedding_path, emit_format;
    unsigned field = 2;

    auto* pd = app.add_subcommand("pd", "Persistence diagram of a bipath filtration (.bft)");
    pd->add_option("--input", input, "bipath filtration file")->required();
    pd->add_option("--degree", degree, "homology degree, or 'all'")->capture_default_str();
    pd->add_option("--field", field, "prime field characteristic")->capture_default_str();
    pd->add_option("--out", out_path, "output file (default stdout)");
    pd->add_option("--format", emit_format, "json, csv, or svg (single degree only)");

    auto* dec = app.add_subcommand("decompose", "Interval decomposition of an explicit module");
    dec->add_option("--input", input, "module JSON file")->required();
    dec->add_option("--method", method, "matrix, direct, or both")->capture_default_str();
    dec->add_option("--out", out_path, "output file (default stdout)");
    dec->add_option("--format", emit_format, "json, csv, or svg");

    auto* plot = app.add_subcommand("plot", "Render a diagram JSON file as SVG");
    plot->add_option("--input", input, "diagram JSON file")->required();
    plot->add_option("--out", out_path, "SVG output file")->required();

    auto* res = app.add_subcommand("restrict",
                                   "Restrict a grid filtration along a bipath order embedding");
    res->add_option("--grid", grid_path, "grid filtration JSON")->required();
    res->add_option("--embedding", embedding_path, "order embedding JSON")->required();
    res->add_option("--out", out_path, "bft output file (default stdout)");

    app.add_subcommand("selftest", "Run the built-in end-to-end checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (pd->parsed()) {
            std::string text = read_file(input);
            if (degree == "all") {
                if (!emit_format.empty() && emit_format != "json") {
                    std::cerr << "error: --degree all supports only JSON output\n";
                    return 1;
                }
                bp_diagram_set* set = nullptr;
                if (int rc = bp_pd_all(text.c_str(), field, &set)) return report(rc);
                char* bytes = nullptr;
                int rc = bp_diagram_set_emit_json(set, &bytes);
                bp_diagram_set_free(set);
                if (rc) return report(rc);
                std::string body(bytes);
                bp_string_free(bytes);
                return write_out(body, out_path);
            }
            int q;
            try {
                std::size_t used = 0;
                q = std::stoi(degree, &used);
                if (used != degree.size()) throw std::invalid_argument(degree);
            } catch (const std::exception&) {
                std::cerr << "error: --degree must be a nonnegative integer or 'all'\n";
                return 1;
            }
            bp_diagram* d = nullptr;
            if (int rc = bp_pd(text.c_str(), q, field, &d)) return report(rc);
            std::string fmt = emit_format.empty() ? format_for(out_path, "json") : emit_format;
            char* bytes = nullptr;
            int rc = bp_diagram_emit(d, fmt.c_str(), &bytes);
            bp_diagram_free(d);
            if (rc) return report(rc);
            std::string body(bytes);
            bp_string_free(bytes);
            return write_out(body, out_path);
        }
        if (dec->parsed()) {
            std::string text = read_file(input);
            bp_diagram* d = nullptr;
            if (int rc = bp_decompose(text.c_str(), method.c_str(), &d)) return report(rc);
            std::string fmt = emit_format.empty() ? format_for(out_path, "json") : emit_format;
            char* bytes = nullptr;
            int rc = bp_diagram_emit(d, fmt.c_str(), &bytes);
            bp_diagram_free(d);
            if (rc) return report(rc);
            std::string body(bytes);
            bp_string_free(bytes);
            return write_out(body, out_path);
        }
        if (plot->parsed()) {
            std::string text = read_file(input);
            bp_diagram* d = nullptr;
            if (int rc = bp_diagram_parse(text.c_str(), &d)) return report(rc);
            char* bytes = nullptr;
            int rc = bp_diagram_emit(d, "svg", &bytes);
            bp_diagram_free(d);
            if (rc) return report(rc);
            std::string body(bytes);
            bp_string_free(bytes);
            return write_out(body, out_path);
        }
        if (res->parsed()) {
            std::string grid = read_file(grid_path);
            std::string emb = read_file(embedding_path);
            char* bytes = nullptr;
            if (int rc = bp_restrict_grid(grid.c_str(), emb.c_str(), &bytes)) return report(rc);
            std::string body(bytes);
            bp_string_free(bytes);
            return write_out(body, out_path);
        }
        // selftest
        if (int rc = bp_selftest()) return report(rc);
        std::cout << "selftest passed\n";
        return 0;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
