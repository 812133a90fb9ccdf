#include <json.hpp>

#include "pathbasis/errors.hpp"
#include "pathbasis/ingest.hpp"

namespace pathbasis {

using nlohmann::ordered_json;

namespace {

std::string require_string(const ordered_json& j, const char* field,
                           const std::string& where) {
    if (!j.contains(field) || !j[field].is_string()) {
        throw ParseError(where + ": missing or non-string field \"" + field + "\"");
    }
    return j[field].get<std::string>();
}

} // namespace

Cfg parse_json_cfg(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top-level JSON value must be an object");

    Cfg cfg(doc.contains("name") && doc["name"].is_string()
                ? doc["name"].get<std::string>()
                : "");

    if (!doc.contains("nodes") || !doc["nodes"].is_array()) {
        throw ParseError("missing \"nodes\" array");
    }
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
        throw ParseError("missing \"edges\" array");
    }

    std::size_t node_no = 0;
    for (const auto& jn : doc["nodes"]) {
        std::string where = "node " + std::to_string(node_no++);
        std::string id = require_string(jn, "id", where);
        std::string kind_str = require_string(jn, "kind", where);
        auto kind = node_kind_from_string(kind_str);
        if (!kind) {
            throw ParseError(where + ": unknown kind \"" + kind_str + "\"");
        }
        std::optional<int> line;
        if (jn.contains("line") && jn["line"].is_number_integer()) {
            line = jn["line"].get<int>();
        }
        try {
            cfg.add_node(id, *kind, line);
        } catch (const StructuralError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }

    std::size_t edge_no = 0;
    for (const auto& je : doc["edges"]) {
        std::string where = "edge " + std::to_string(edge_no++);
        std::string from = require_string(je, "from", where);
        std::string to = require_string(je, "to", where);
        NodeId f = cfg.find(from);
        NodeId t = cfg.find(to);
        if (f == kNoNode) throw ParseError(where + ": unknown node \"" + from + "\"");
        if (t == kNoNode) throw ParseError(where + ": unknown node \"" + to + "\"");
        std::string label;
        if (je.contains("label")) {
            if (!je["label"].is_string()) {
                throw ParseError(where + ": non-string \"label\"");
            }
            label = je["label"].get<std::string>();
        }
        cfg.add_edge(f, t, label);
    }

    std::string begin = require_string(doc, "begin", "document");
    std::string end = require_string(doc, "end", "document");
    NodeId b = cfg.find(begin);
    NodeId e = cfg.find(end);
    if (b == kNoNode) throw ParseError("\"begin\" names unknown node \"" + begin + "\"");
    if (e == kNoNode) throw ParseError("\"end\" names unknown node \"" + end + "\"");
    cfg.set_begin(b);
    cfg.set_end(e);
    return cfg;
}

std::string serialize_json_cfg(const Cfg& cfg) {
    ordered_json doc;
    doc["name"] = cfg.name();
    doc["begin"] = cfg.has_begin_end() ? cfg.node(cfg.begin()).name : "";
    doc["end"] = cfg.has_begin_end() ? cfg.node(cfg.end()).name : "";
    doc["nodes"] = ordered_json::array();
    for (const Node& n : cfg.nodes()) {
        ordered_json jn;
        jn["id"] = n.name;
        jn["kind"] = to_string(n.kind);
        if (n.line) jn["line"] = *n.line;
        doc["nodes"].push_back(std::move(jn));
    }
    doc["edges"] = ordered_json::array();
    for (const Edge& e : cfg.edges()) {
        ordered_json je;
        je["from"] = cfg.node(e.from).name;
        je["to"] = cfg.node(e.to).name;
        if (!e.label.empty()) je["label"] = e.label;
        doc["edges"].push_back(std::move(je));
    }
    return doc.dump(2) + "\n";
}

} // namespace pathbasis
