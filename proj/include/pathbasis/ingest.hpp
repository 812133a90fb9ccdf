#ifndef PATHBASIS_INGEST_HPP
#define PATHBASIS_INGEST_HPP

#include <string>

#include "pathbasis/cfg.hpp"

namespace pathbasis {

// JSON document schema (field names are part of the contract):
//   {"name": str, "begin": str, "end": str,
//    "nodes": [{"id": str, "kind": "begin"|"end"|"action"|"decision"}],
//    "edges": [{"from": str, "to": str, "label": str?}]}
// Edge order in the document is the edge order of the Cfg.

Cfg parse_json_cfg(const std::string& text);
std::string serialize_json_cfg(const Cfg& cfg);

// Supported DOT subset:
//   digraph NAME { id [kind=...]; id -> id [label="..."]; }
// Edge order follows statement order. begin/end come from kind
// attributes, or from the unique source/sink when no kinds are given.
// Subgraphs, ports and undirected edges are rejected.
Cfg parse_dot_cfg(const std::string& text);
std::string serialize_dot_cfg(const Cfg& cfg);

} // namespace pathbasis

#endif
