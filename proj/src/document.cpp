#include "arrangeops/document.hpp"

#include <json.hpp>

#include "arrangeops/error.hpp"

namespace arrangeops {

using nlohmann::json;

const char* doc_kind_name(DocKind k) {
    switch (k) {
        case DocKind::Arrangement: return "arrangement";
        case DocKind::Tiling: return "tiling";
        case DocKind::Points: return "points";
        case DocKind::Chain: return "chain";
    }
    return "?";
}

const Arrangement& Document::as_arrangement() const {
    require(kind == DocKind::Arrangement, ErrorCode::Argument,
            "document is not an arrangement");
    return std::get<Arrangement>(payload);
}

const IntervalTiling& Document::as_tiling() const {
    require(kind == DocKind::Tiling, ErrorCode::Argument, "document is not a tiling");
    return std::get<IntervalTiling>(payload);
}

const PointConfig& Document::as_points() const {
    require(kind == DocKind::Points, ErrorCode::Argument,
            "document is not a point configuration");
    return std::get<PointConfig>(payload);
}

const PolygonalChain& Document::as_chain() const {
    require(kind == DocKind::Chain, ErrorCode::Argument, "document is not a chain");
    return std::get<PolygonalChain>(payload);
}

int Document::arity() const {
    switch (kind) {
        case DocKind::Arrangement: return as_arrangement().arity();
        case DocKind::Tiling: return static_cast<int>(as_tiling().lengths.size());
        case DocKind::Points: return config_arity(as_points());
        case DocKind::Chain: return chain_arity(as_chain());
    }
    return 0;
}

namespace {

Rat rat_from(const json& j, const char* what) {
    require(j.is_string(), ErrorCode::Parse,
            std::string(what) + ": rationals must be JSON strings");
    return Rat::parse(j.get<std::string>());
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    require(!j.is_discarded(), ErrorCode::Parse, "malformed JSON");
    require(j.is_object(), ErrorCode::Parse, "document must be a JSON object");
    return j;
}

} // namespace

Document document_from_json(const std::string& text) {
    json j = parse_text(text);
    std::optional<std::string> name;
    if (j.contains("name")) {
        require(j["name"].is_string(), ErrorCode::Parse, "\"name\" must be a string");
        name = j["name"].get<std::string>();
    }
    if (j.contains("arrangement")) {
        const json& a = j["arrangement"];
        require(a.is_object() && a.contains("lines") && a["lines"].is_array(),
                ErrorCode::Parse, "arrangement needs a \"lines\" array");
        std::vector<RootedLine> lines;
        for (const json& l : a["lines"]) {
            require(l.is_object() && l.contains("q") && l.contains("p"), ErrorCode::Parse,
                    "each line needs \"q\" and \"p\"");
            lines.push_back(RootedLine{rat_from(l["q"], "q"), rat_from(l["p"], "p")});
        }
        return make_document(Arrangement::validate(std::move(lines)), std::move(name));
    }
    if (j.contains("tiling")) {
        require(j["tiling"].is_array(), ErrorCode::Parse, "tiling must be an array");
        std::vector<Rat> lengths;
        for (const json& v : j["tiling"]) lengths.push_back(rat_from(v, "tiling"));
        return make_document(make_tiling(std::move(lengths)), std::move(name));
    }
    if (j.contains("points")) {
        require(j["points"].is_array(), ErrorCode::Parse, "points must be an array");
        std::vector<Rat> pts;
        for (const json& v : j["points"]) pts.push_back(rat_from(v, "points"));
        return make_document(make_point_config(std::move(pts)), std::move(name));
    }
    if (j.contains("chain")) {
        require(j["chain"].is_array(), ErrorCode::Parse, "chain must be an array");
        std::vector<std::pair<Rat, Rat>> vs;
        for (const json& v : j["chain"]) {
            require(v.is_array() && v.size() == 2, ErrorCode::Parse,
                    "chain vertices are [q, s] pairs");
            vs.emplace_back(rat_from(v[0], "chain"), rat_from(v[1], "chain"));
        }
        return make_document(make_chain(std::move(vs)), std::move(name));
    }
    fail(ErrorCode::Parse,
         "document needs one of: arrangement, tiling, points, chain");
}

std::string document_to_json(const Document& doc) {
    json j;
    if (doc.name) j["name"] = *doc.name;
    switch (doc.kind) {
        case DocKind::Arrangement: {
            json lines = json::array();
            for (const RootedLine& l : doc.as_arrangement().lines())
                lines.push_back({{"q", l.q.str()}, {"p", l.p.str()}});
            j["arrangement"] = {{"lines", std::move(lines)}};
            break;
        }
        case DocKind::Tiling: {
            json arr = json::array();
            for (const Rat& r : doc.as_tiling().lengths) arr.push_back(r.str());
            j["tiling"] = std::move(arr);
            break;
        }
        case DocKind::Points: {
            json arr = json::array();
            for (const Rat& r : doc.as_points().points) arr.push_back(r.str());
            j["points"] = std::move(arr);
            break;
        }
        case DocKind::Chain: {
            json arr = json::array();
            for (const auto& v : doc.as_chain().vertices)
                arr.push_back({v.first.str(), v.second.str()});
            j["chain"] = std::move(arr);
            break;
        }
    }
    return j.dump(2);
}

Document make_document(Arrangement a, std::optional<std::string> name) {
    return Document{DocKind::Arrangement, std::move(a), std::move(name)};
}
Document make_document(IntervalTiling t, std::optional<std::string> name) {
    return Document{DocKind::Tiling, std::move(t), std::move(name)};
}
Document make_document(PointConfig p, std::optional<std::string> name) {
    return Document{DocKind::Points, std::move(p), std::move(name)};
}
Document make_document(PolygonalChain c, std::optional<std::string> name) {
    return Document{DocKind::Chain, std::move(c), std::move(name)};
}

Document compose_documents(const Document& a, int slot, const Document& b) {
    require(a.kind == b.kind, ErrorCode::Argument,
            std::string("cannot compose ") + doc_kind_name(a.kind) + " with " +
                doc_kind_name(b.kind));
    switch (a.kind) {
        case DocKind::Arrangement:
            return make_document(compose_hat(a.as_arrangement(), slot, b.as_arrangement()));
        case DocKind::Tiling:
            return make_document(tiling_compose(a.as_tiling(), slot, b.as_tiling()));
        case DocKind::Points:
            return make_document(chat_compose(a.as_points(), slot, b.as_points()));
        case DocKind::Chain:
            return make_document(chain_compose(a.as_chain(), slot, b.as_chain()));
    }
    fail(ErrorCode::Argument, "unreachable document kind");
}

} // namespace arrangeops
