#include "arrangeops.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "arrangeops/document.hpp"
#include "arrangeops/error.hpp"
#include "arrangeops/laws_registry.hpp"
#include "arrangeops/operad.hpp"
#include "arrangeops/scattering.hpp"
#include "arrangeops/svg.hpp"

using namespace arrangeops;
using nlohmann::json;

struct aop_doc {
    Document doc;
};

namespace {

thread_local std::string g_last_error;

aop_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::Argument: return AOP_ERR_ARGUMENT;
        case ErrorCode::Parse: return AOP_ERR_PARSE;
        case ErrorCode::Validation: return AOP_ERR_VALIDATION;
        case ErrorCode::IndexOutOfRange: return AOP_ERR_INDEX;
        case ErrorCode::Domain: return AOP_ERR_DOMAIN;
        case ErrorCode::NotGeneric: return AOP_ERR_NOT_GENERIC;
        case ErrorCode::NonFactorizable: return AOP_ERR_NON_FACTORIZABLE;
        case ErrorCode::LawFailure: return AOP_ERR_LAW_FAILURE;
        case ErrorCode::Io: return AOP_ERR_IO;
    }
    return AOP_ERR_INTERNAL;
}

template <typename F>
aop_status guarded(F&& body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return AOP_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return AOP_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

aop_status bad_argument(const char* message) {
    g_last_error = message;
    return AOP_ERR_ARGUMENT;
}

const Arrangement& need_arrangement(const aop_doc* doc) {
    require(doc->doc.kind == DocKind::Arrangement, ErrorCode::Argument,
            std::string("expected an arrangement document, got ") +
                doc_kind_name(doc->doc.kind));
    return doc->doc.as_arrangement();
}

json arrangement_json(const Arrangement& a) {
    json lines = json::array();
    for (const RootedLine& l : a.lines())
        lines.push_back({{"q", l.q.str()}, {"p", l.p.str()}});
    return json{{"arrangement", {{"lines", std::move(lines)}}}};
}

json law_report_json(const LawReport& rep) {
    json failures = json::array();
    for (const LawFailure& f : rep.failures)
        failures.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    return json{{"law", law_name(rep.law)},
                {"samples", rep.samples_tested},
                {"failures", std::move(failures)}};
}

} // namespace

extern "C" {

const char* aop_version(void) { return "0.1.0"; }

const char* aop_last_error(void) { return g_last_error.c_str(); }

aop_status aop_doc_from_json(const char* text, aop_doc** out) {
    if (!text || !out) return bad_argument("null argument");
    return guarded([&] {
        *out = new aop_doc{document_from_json(text)};
        return AOP_OK;
    });
}

aop_status aop_doc_read_file(const char* path, aop_doc** out) {
    if (!path || !out) return bad_argument("null argument");
    return guarded([&] {
        std::ifstream in(path);
        require(in.good(), ErrorCode::Io, std::string("cannot open ") + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        *out = new aop_doc{document_from_json(buf.str())};
        return AOP_OK;
    });
}

aop_status aop_doc_to_json(const aop_doc* doc, char** json_out) {
    if (!doc || !json_out) return bad_argument("null argument");
    return guarded([&] {
        *json_out = dup_string(document_to_json(doc->doc));
        return AOP_OK;
    });
}

const char* aop_doc_kind(const aop_doc* doc) {
    return doc ? doc_kind_name(doc->doc.kind) : nullptr;
}

int aop_doc_arity(const aop_doc* doc) { return doc ? doc->doc.arity() : -1; }

void aop_doc_free(aop_doc* doc) { delete doc; }

void aop_string_free(char* s) { std::free(s); }

aop_status aop_compose(const aop_doc* a, int slot, const aop_doc* b, aop_doc** out) {
    if (!a || !b || !out) return bad_argument("null argument");
    return guarded([&] {
        *out = new aop_doc{compose_documents(a->doc, slot, b->doc)};
        return AOP_OK;
    });
}

aop_status aop_normalize(const aop_doc* doc, char** json_out) {
    if (!doc || !json_out) return bad_argument("null argument");
    return guarded([&] {
        auto [normalized, frame] = normalize(need_arrangement(doc));
        json j = arrangement_json(normalized.arrangement());
        j["frame"] = {{"m11", frame.m11().str()}, {"m12", frame.m12().str()},
                      {"m13", frame.m13().str()}, {"m21", frame.m21().str()},
                      {"m22", frame.m22().str()}, {"m23", frame.m23().str()}};
        *json_out = dup_string(j.dump(2));
        return AOP_OK;
    });
}

aop_status aop_decompose(const aop_doc* doc, char** json_out) {
    if (!doc || !json_out) return bad_argument("null argument");
    return guarded([&] {
        GeneratorDecomposition dec = decompose_generators(need_arrangement(doc));
        json gens = json::array();
        for (const auto& g : dec.generators)
            gens.push_back({{"slot", g.first}, {"generator", arrangement_json(g.second)}});
        json j{{"base", arrangement_json(dec.base)}, {"generators", std::move(gens)}};
        *json_out = dup_string(j.dump(2));
        return AOP_OK;
    });
}

aop_status aop_classify(const aop_doc* doc, char** json_out) {
    if (!doc || !json_out) return bad_argument("null argument");
    return guarded([&] {
        Rank3Type t = classify_rank3(need_arrangement(doc));
        json j{{"type", rank3_type_name(t)}};
        *json_out = dup_string(j.dump(2));
        return AOP_OK;
    });
}

aop_status aop_project(const aop_doc* doc, const char* at_q, const char* at_t,
                       aop_doc** out) {
    if (!doc || !at_q || !at_t || !out) return bad_argument("null argument");
    return guarded([&] {
        Point2 a{Rat::parse(at_q), Rat::parse(at_t)};
        *out = new aop_doc{make_document(z_project(need_arrangement(doc), a))};
        return AOP_OK;
    });
}

aop_status aop_envelope(const aop_doc* doc, char** json_out) {
    if (!doc || !json_out) return bad_argument("null argument");
    return guarded([&] {
        json verts = json::array();
        for (const Point2& v : upper_envelope(need_arrangement(doc)))
            verts.push_back({v.q.str(), v.t.str()});
        json j{{"envelope", std::move(verts)}};
        *json_out = dup_string(j.dump(2));
        return AOP_OK;
    });
}

aop_status aop_regions(const aop_doc* doc, long long* count_out) {
    if (!doc || !count_out) return bad_argument("null argument");
    return guarded([&] {
        *count_out = count_bounded_regions(need_arrangement(doc));
        return AOP_OK;
    });
}

aop_status aop_permutahedron(const aop_doc* doc, char** json_out) {
    if (!doc || !json_out) return bad_argument("null argument");
    return guarded([&] {
        OrderedPartitionChain chain = permutahedron_chain(need_arrangement(doc));
        json events = json::array();
        for (const auto& ev : chain.events) {
            json blocks = json::array();
            for (const auto& b : ev.blocks) blocks.push_back(b);
            events.push_back({{"time", ev.time.str()}, {"blocks", std::move(blocks)}});
        }
        json states = json::array();
        for (const auto& st : chain.states) states.push_back(st);
        json j{{"events", std::move(events)}, {"states", std::move(states)}};
        *json_out = dup_string(j.dump(2));
        return AOP_OK;
    });
}

aop_status aop_reduced_word(const aop_doc* doc, char** json_out) {
    if (!doc || !json_out) return bad_argument("null argument");
    return guarded([&] {
        std::vector<int> word = reduced_word(need_arrangement(doc));
        json j{{"word", word}, {"length", word.size()}};
        *json_out = dup_string(j.dump(2));
        return AOP_OK;
    });
}

aop_status aop_laws(const char* operad, int samples, unsigned long long seed,
                    char** report_json) {
    if (!operad || !report_json) return bad_argument("null argument");
    return guarded([&] {
        LawSuiteResult res = run_named_law_suite(operad, samples, seed);
        json j{{"operad", res.operad},
               {"samples", res.samples},
               {"seed", res.seed},
               {"sequential", law_report_json(res.sequential)},
               {"parallel", law_report_json(res.parallel)},
               {"passed", res.passed()}};
        *report_json = dup_string(j.dump(2));
        return res.passed() ? AOP_OK : AOP_ERR_LAW_FAILURE;
    });
}

aop_status aop_yb_check(const char* theory, int samples, unsigned long long seed,
                        char** report_json) {
    if (!theory || !report_json) return bad_argument("null argument");
    return guarded([&] {
        require(samples > 0, ErrorCode::Argument, "sample count must be positive");
        RMatrixTheory th = builtin_theory(theory);
        double worst = 0.0;
        for (int k = 0; k < samples; ++k) {
            auto rng = rng_for_sample(seed, static_cast<std::uint64_t>(k));
            std::uniform_real_distribution<double> dist(0.0, 6.0);
            double u[3];
            do {
                for (double& v : u) v = dist(rng);
            } while (std::abs(u[0] - u[1]) < 0.05 || std::abs(u[0] - u[2]) < 0.05 ||
                     std::abs(u[1] - u[2]) < 0.05);
            std::sort(u, u + 3, std::greater<double>());
            worst = std::max(worst, check_yang_baxter(th, u[0], u[1], u[2]));
        }
        bool passed = worst <= th.tolerance;
        json j{{"theory", theory},      {"samples", samples}, {"seed", seed},
               {"max_residual", worst}, {"tolerance", th.tolerance},
               {"passed", passed}};
        *report_json = dup_string(j.dump(2));
        return passed ? AOP_OK : AOP_ERR_LAW_FAILURE;
    });
}

aop_status aop_render_svg(const aop_doc* doc, int highlight_envelope, char** svg_out) {
    if (!doc || !svg_out) return bad_argument("null argument");
    return guarded([&] {
        *svg_out = dup_string(render_svg(need_arrangement(doc), highlight_envelope != 0));
        return AOP_OK;
    });
}

} // extern "C"
