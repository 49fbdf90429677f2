// Batch CLI over the arrangeops C API: validate, compose, analyze and render
// operad documents. Exit codes: 0 success, 2 validation failure, 3 law-check
// failure, 1 I/O or usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "arrangeops.h"

namespace {

struct DocDeleter {
    void operator()(aop_doc* d) const { aop_doc_free(d); }
};
using DocPtr = std::unique_ptr<aop_doc, DocDeleter>;

struct StringDeleter {
    void operator()(char* s) const { aop_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_code_for(aop_status st) {
    switch (st) {
        case AOP_OK:
            return 0;
        case AOP_ERR_VALIDATION:
        case AOP_ERR_NOT_GENERIC:
        case AOP_ERR_NON_FACTORIZABLE:
            return 2;
        case AOP_ERR_LAW_FAILURE:
            return 3;
        default:
            return 1;
    }
}

int report_error(aop_status st) {
    std::cerr << "error: " << aop_last_error() << "\n";
    return exit_code_for(st);
}

DocPtr load_doc(const std::string& path, aop_status& st) {
    aop_doc* raw = nullptr;
    st = aop_doc_read_file(path.c_str(), &raw);
    return DocPtr(raw);
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return 0;
    }
    std::ofstream out(out_path);
    if (!out.good()) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 1;
    }
    out << text;
    return 0;
}

int emit_doc(const aop_doc* doc, const std::string& out_path) {
    char* raw = nullptr;
    aop_status st = aop_doc_to_json(doc, &raw);
    if (st != AOP_OK) return report_error(st);
    StringPtr text(raw);
    return emit(text.get(), out_path);
}

unsigned long long default_seed() {
    if (const char* env = std::getenv("ARRANGEOPS_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            std::cerr << "error: ARRANGEOPS_SEED is not an integer\n";
            std::exit(1);
        }
    }
    return 7;
}

// Runs an analysis returning a JSON string.
template <typename F>
int run_json_op(const std::string& file, const std::string& out_path, F&& op) {
    aop_status st;
    DocPtr doc = load_doc(file, st);
    if (st != AOP_OK) return report_error(st);
    char* raw = nullptr;
    st = op(doc.get(), &raw);
    StringPtr text(raw);
    if (st != AOP_OK) return report_error(st);
    return emit(text.get(), out_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact operads of planar rooted line arrangements"};
    app.set_version_flag("--version", aop_version());
    app.require_subcommand(1);

    std::string file_a, file_b, out_path, at_point;
    std::string operad = "arrangement", theory = "yang:eta=1";
    int slot = 1, samples = 100;
    unsigned long long seed = default_seed();
    bool with_envelope = false;

    auto* validate = app.add_subcommand("validate", "check a document's invariants");
    validate->add_option("file", file_a)->required();

    auto* compose = app.add_subcommand("compose", "partial composition a o_i b");
    compose->add_option("file_a", file_a)->required();
    compose->add_option("slot", slot, "1-based composition slot")->required();
    compose->add_option("file_b", file_b)->required();
    compose->add_option("--out", out_path, "write the result here");

    auto* normalize = app.add_subcommand("normalize", "rest-frame form plus the moving frame");
    normalize->add_option("file", file_a)->required();
    normalize->add_option("--out", out_path);

    auto* decompose = app.add_subcommand("decompose", "rank-3 generator decomposition");
    decompose->add_option("file", file_a)->required();
    decompose->add_option("--out", out_path);

    auto* classify = app.add_subcommand("classify", "combinatorial type of a rank-3 arrangement");
    classify->add_option("file", file_a)->required();
    classify->add_option("--out", out_path);

    auto* project = app.add_subcommand("project", "slide all lines through one point");
    project->add_option("file", file_a)->required();
    project->add_option("--at", at_point, "pivot as q,t with t > 0")->required();
    project->add_option("--out", out_path);

    auto* envelope = app.add_subcommand("envelope", "upper envelope vertex list");
    envelope->add_option("file", file_a)->required();
    envelope->add_option("--out", out_path);

    auto* regions = app.add_subcommand("regions", "count bounded regions");
    regions->add_option("file", file_a)->required();
    regions->add_option("--out", out_path);

    auto* permutahedron = app.add_subcommand("permutahedron", "collision chain in the permutahedron");
    permutahedron->add_option("file", file_a)->required();
    permutahedron->add_option("--out", out_path);

    auto* reduced = app.add_subcommand("reduced-word", "adjacent-transposition word of a generic arrangement");
    reduced->add_option("file", file_a)->required();
    reduced->add_option("--out", out_path);

    auto* laws = app.add_subcommand("laws", "seeded associativity law suite");
    laws->add_option("--operad", operad, "tiling|points|chain|word|tree|arrangement|tuple");
    laws->add_option("--samples", samples);
    laws->add_option("--seed", seed);
    laws->add_option("--out", out_path);

    auto* yb = app.add_subcommand("yb-check", "Yang-Baxter residual of a built-in theory");
    yb->add_option("--theory", theory, "identity|flip|yang:eta=<v>|broken|skew");
    yb->add_option("--samples", samples);
    yb->add_option("--seed", seed);
    yb->add_option("--out", out_path);

    auto* render = app.add_subcommand("render", "SVG figure of an arrangement");
    render->add_option("file", file_a)->required();
    render->add_option("--out", out_path);
    render->add_flag("--envelope", with_envelope, "highlight the upper envelope");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (validate->parsed()) {
        aop_status st;
        DocPtr doc = load_doc(file_a, st);
        if (st != AOP_OK) return report_error(st);
        std::cout << "{\n  \"valid\": true,\n  \"kind\": \"" << aop_doc_kind(doc.get())
                  << "\",\n  \"arity\": " << aop_doc_arity(doc.get()) << "\n}\n";
        return 0;
    }
    if (compose->parsed()) {
        aop_status st;
        DocPtr a = load_doc(file_a, st);
        if (st != AOP_OK) return report_error(st);
        DocPtr b = load_doc(file_b, st);
        if (st != AOP_OK) return report_error(st);
        aop_doc* raw = nullptr;
        st = aop_compose(a.get(), slot, b.get(), &raw);
        DocPtr result(raw);
        if (st != AOP_OK) return report_error(st);
        return emit_doc(result.get(), out_path);
    }
    if (normalize->parsed()) return run_json_op(file_a, out_path, aop_normalize);
    if (decompose->parsed()) return run_json_op(file_a, out_path, aop_decompose);
    if (classify->parsed()) return run_json_op(file_a, out_path, aop_classify);
    if (project->parsed()) {
        auto comma = at_point.find(',');
        if (comma == std::string::npos) {
            std::cerr << "error: --at expects q,t\n";
            return 1;
        }
        aop_status st;
        DocPtr doc = load_doc(file_a, st);
        if (st != AOP_OK) return report_error(st);
        aop_doc* raw = nullptr;
        st = aop_project(doc.get(), at_point.substr(0, comma).c_str(),
                         at_point.substr(comma + 1).c_str(), &raw);
        DocPtr result(raw);
        if (st != AOP_OK) return report_error(st);
        return emit_doc(result.get(), out_path);
    }
    if (envelope->parsed()) return run_json_op(file_a, out_path, aop_envelope);
    if (regions->parsed()) {
        aop_status st;
        DocPtr doc = load_doc(file_a, st);
        if (st != AOP_OK) return report_error(st);
        long long count = 0;
        st = aop_regions(doc.get(), &count);
        if (st != AOP_OK) return report_error(st);
        return emit("{\n  \"bounded_regions\": " + std::to_string(count) + "\n}\n",
                    out_path);
    }
    if (permutahedron->parsed()) return run_json_op(file_a, out_path, aop_permutahedron);
    if (reduced->parsed()) return run_json_op(file_a, out_path, aop_reduced_word);
    if (laws->parsed()) {
        char* raw = nullptr;
        aop_status st = aop_laws(operad.c_str(), samples, seed, &raw);
        StringPtr text(raw);
        if (st != AOP_OK && !raw) return report_error(st);
        int emit_rc = emit(text.get(), out_path);
        return st == AOP_OK ? emit_rc : exit_code_for(st);
    }
    if (yb->parsed()) {
        char* raw = nullptr;
        aop_status st = aop_yb_check(theory.c_str(), samples, seed, &raw);
        StringPtr text(raw);
        if (st != AOP_OK && !raw) return report_error(st);
        int emit_rc = emit(text.get(), out_path);
        return st == AOP_OK ? emit_rc : exit_code_for(st);
    }
    if (render->parsed()) {
        aop_status st;
        DocPtr doc = load_doc(file_a, st);
        if (st != AOP_OK) return report_error(st);
        char* raw = nullptr;
        st = aop_render_svg(doc.get(), with_envelope ? 1 : 0, &raw);
        StringPtr text(raw);
        if (st != AOP_OK) return report_error(st);
        return emit(text.get(), out_path);
    }
    return 1;
}
