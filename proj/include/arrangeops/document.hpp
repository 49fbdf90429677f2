#pragma once

#include <optional>
#include <string>
#include <variant>

#include "arrangeops/arrangement.hpp"
#include "arrangeops/chain.hpp"
#include "arrangeops/intervals.hpp"

namespace arrangeops {

enum class DocKind { Arrangement, Tiling, Points, Chain };
const char* doc_kind_name(DocKind k);

// One operad element per file. Rationals travel as strings ("p/q" or "p");
// the payload key names the kind:
//   {"arrangement": {"lines": [{"q":"0","p":"0"}, ...]}}
//   {"tiling": ["1/3","1/3","1/3"]}
//   {"points": ["0","1/3","1","2"]}
//   {"chain": [["0","0"],["1","1"]]}
// plus an optional "name".
struct Document {
    DocKind kind;
    std::variant<Arrangement, IntervalTiling, PointConfig, PolygonalChain> payload;
    std::optional<std::string> name;

    const Arrangement& as_arrangement() const;
    const IntervalTiling& as_tiling() const;
    const PointConfig& as_points() const;
    const PolygonalChain& as_chain() const;

    int arity() const;
};

Document document_from_json(const std::string& json_text);
std::string document_to_json(const Document& doc);

Document make_document(Arrangement a, std::optional<std::string> name = std::nullopt);
Document make_document(IntervalTiling t, std::optional<std::string> name = std::nullopt);
Document make_document(PointConfig p, std::optional<std::string> name = std::nullopt);
Document make_document(PolygonalChain c, std::optional<std::string> name = std::nullopt);

// Kind-dispatched partial composition; both documents must share a kind.
Document compose_documents(const Document& a, int slot, const Document& b);

} // namespace arrangeops
