#include <doctest.h>

#include <json.hpp>

#include <string>

#include "arrangeops.h"

using nlohmann::json;

namespace {

struct Doc {
    aop_doc* handle = nullptr;
    ~Doc() { aop_doc_free(handle); }
};

struct Str {
    char* s = nullptr;
    ~Str() { aop_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

constexpr const char* kRank3 =
    R"({"arrangement":{"lines":[{"q":"0","p":"3"},{"q":"1","p":"1"},{"q":"2","p":"0"}]}})";

} // namespace

TEST_CASE("c api: document lifecycle and kind probes") {
    Doc doc;
    REQUIRE(aop_doc_from_json(kRank3, &doc.handle) == AOP_OK);
    CHECK(std::string(aop_doc_kind(doc.handle)) == "arrangement");
    CHECK(aop_doc_arity(doc.handle) == 2);

    Str out;
    REQUIRE(aop_doc_to_json(doc.handle, &out.s) == AOP_OK);
    Doc again;
    CHECK(aop_doc_from_json(out.s, &again.handle) == AOP_OK);

    CHECK(aop_doc_kind(nullptr) == nullptr);
    CHECK(aop_doc_arity(nullptr) == -1);
    aop_doc_free(nullptr);  // harmless
    aop_string_free(nullptr);
}

TEST_CASE("c api: status codes carry the failure class") {
    Doc doc;
    CHECK(aop_doc_from_json("garbage", &doc.handle) == AOP_ERR_PARSE);
    CHECK(std::string(aop_last_error()).size() > 0);
    CHECK(aop_doc_from_json(
              R"({"arrangement":{"lines":[{"q":"0","p":"1"},{"q":"1","p":"1"}]}})",
              &doc.handle) == AOP_ERR_VALIDATION);
    CHECK(std::string(aop_last_error()).find("ParallelPair(1,2)") != std::string::npos);
    CHECK(aop_doc_from_json(nullptr, &doc.handle) == AOP_ERR_ARGUMENT);
    CHECK(aop_doc_read_file("/nonexistent/file.json", &doc.handle) == AOP_ERR_IO);
}

TEST_CASE("c api: compose and slot errors") {
    Doc a, b, out;
    REQUIRE(aop_doc_from_json(kRank3, &a.handle) == AOP_OK);
    REQUIRE(aop_doc_from_json(
                R"({"arrangement":{"lines":[{"q":"0","p":"0"},{"q":"1","p":"-1"}]}})",
                &b.handle) == AOP_OK);
    CHECK(aop_compose(a.handle, 1, b.handle, &out.handle) == AOP_OK);
    CHECK(aop_doc_arity(out.handle) == 2);
    aop_doc* bad = nullptr;
    CHECK(aop_compose(a.handle, 9, b.handle, &bad) == AOP_ERR_INDEX);
}

TEST_CASE("c api: arrangement analyses return parseable json") {
    Doc doc;
    REQUIRE(aop_doc_from_json(kRank3, &doc.handle) == AOP_OK);

    Str norm;
    CHECK(aop_normalize(doc.handle, &norm.s) == AOP_OK);
    json jn = json::parse(norm.str());
    CHECK(jn.contains("arrangement"));
    CHECK(jn.contains("frame"));

    Str dec;
    CHECK(aop_decompose(doc.handle, &dec.s) == AOP_OK);
    json jd = json::parse(dec.str());
    CHECK(jd["generators"].size() == 1);

    Str cls;
    CHECK(aop_classify(doc.handle, &cls.s) == AOP_OK);
    CHECK(json::parse(cls.str())["type"] == "MiddleLeft");

    Doc projected;
    CHECK(aop_project(doc.handle, "0", "1", &projected.handle) == AOP_OK);
    Str perm;
    CHECK(aop_permutahedron(projected.handle, &perm.s) == AOP_OK);
    json jp = json::parse(perm.str());
    CHECK(jp["events"].size() == 1);
    CHECK(jp["events"][0]["blocks"][0] == json::array({1, 2, 3}));
    Doc nowhere;
    CHECK(aop_project(doc.handle, "0", "-1", &nowhere.handle) == AOP_ERR_DOMAIN);
    CHECK(aop_project(doc.handle, "zero", "1", &nowhere.handle) == AOP_ERR_PARSE);

    Str env;
    CHECK(aop_envelope(doc.handle, &env.s) == AOP_OK);
    CHECK(json::parse(env.str())["envelope"].size() == 4);

    long long regions = -1;
    CHECK(aop_regions(doc.handle, &regions) == AOP_OK);
    CHECK(regions == 1);

    Str word;
    CHECK(aop_reduced_word(doc.handle, &word.s) == AOP_OK);
    CHECK(json::parse(word.str())["word"] == json::array({1, 2, 1}));
    Str blocked;
    CHECK(aop_reduced_word(projected.handle, &blocked.s) == AOP_ERR_NOT_GENERIC);

    Str svg;
    CHECK(aop_render_svg(doc.handle, 1, &svg.s) == AOP_OK);
    CHECK(svg.str().find("<svg") != std::string::npos);

    // kind guards
    Doc tiling;
    REQUIRE(aop_doc_from_json(R"({"tiling":["1/2","1/2"]})", &tiling.handle) == AOP_OK);
    Str nope;
    CHECK(aop_envelope(tiling.handle, &nope.s) == AOP_ERR_ARGUMENT);
}

TEST_CASE("c api: law suites and yb checks") {
    Str report;
    CHECK(aop_laws("tiling", 20, 5, &report.s) == AOP_OK);
    json jr = json::parse(report.str());
    CHECK(jr["passed"] == true);
    CHECK(jr["sequential"]["failures"].empty());

    Str unknown;
    CHECK(aop_laws("nonesuch", 20, 5, &unknown.s) == AOP_ERR_ARGUMENT);

    Str yb;
    CHECK(aop_yb_check("yang:eta=1", 10, 5, &yb.s) == AOP_OK);
    json jy = json::parse(yb.str());
    CHECK(jy["passed"] == true);
    CHECK(jy["max_residual"].get<double>() < 1e-10);

    // the diagonal broken family satisfies the identity; skew does not
    Str broken;
    CHECK(aop_yb_check("broken", 10, 5, &broken.s) == AOP_OK);
    CHECK(json::parse(broken.str())["max_residual"].get<double>() == 0.0);

    Str skewed;
    CHECK(aop_yb_check("skew", 10, 5, &skewed.s) == AOP_ERR_LAW_FAILURE);
    json jb = json::parse(skewed.str());
    CHECK(jb["passed"] == false);
    CHECK(jb["max_residual"].get<double>() > 1e-6);
}
