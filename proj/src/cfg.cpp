#include "pathbasis/cfg.hpp"

#include <algorithm>
#include <deque>

#include "pathbasis/errors.hpp"

namespace pathbasis {

const char* to_string(NodeKind k) {
    switch (k) {
    case NodeKind::Begin: return "begin";
    case NodeKind::End: return "end";
    case NodeKind::Action: return "action";
    case NodeKind::Decision: return "decision";
    }
    return "action";
}

std::optional<NodeKind> node_kind_from_string(const std::string& s) {
    if (s == "begin") return NodeKind::Begin;
    if (s == "end") return NodeKind::End;
    if (s == "action") return NodeKind::Action;
    if (s == "decision") return NodeKind::Decision;
    return std::nullopt;
}

NodeId Cfg::add_node(const std::string& name, NodeKind kind, std::optional<int> line) {
    if (index_.count(name) != 0) {
        throw StructuralError("duplicate node id '" + name + "'");
    }
    NodeId id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(Node{name, kind, line});
    out_.emplace_back();
    in_.emplace_back();
    index_.emplace(name, id);
    return id;
}

EdgeId Cfg::add_edge(NodeId from, NodeId to, std::string label) {
    if (from >= nodes_.size() || to >= nodes_.size()) {
        throw StructuralError("edge endpoint does not exist");
    }
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{from, to, std::move(label)});
    out_[from].push_back(id);
    in_[to].push_back(id);
    return id;
}

void Cfg::set_begin(NodeId n) {
    if (n >= nodes_.size()) throw StructuralError("begin node does not exist");
    begin_ = n;
}

void Cfg::set_end(NodeId n) {
    if (n >= nodes_.size()) throw StructuralError("end node does not exist");
    end_ = n;
}

NodeId Cfg::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? kNoNode : it->second;
}

bool Cfg::operator==(const Cfg& other) const {
    if (begin_ != other.begin_ || end_ != other.end_) return false;
    if (nodes_.size() != other.nodes_.size() || edges_.size() != other.edges_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].name != other.nodes_[i].name || nodes_[i].kind != other.nodes_[i].kind) {
            return false;
        }
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& a = edges_[i];
        const Edge& b = other.edges_[i];
        if (a.from != b.from || a.to != b.to || a.label != b.label) return false;
    }
    return true;
}

ClosedCfg close_graph(const Cfg& cfg) {
    if (cfg.node_count() == 0) {
        throw StructuralError("cannot close an empty graph");
    }
    if (!cfg.has_begin_end()) {
        throw StructuralError("graph has no designated begin/end nodes");
    }
    ClosedCfg closed{cfg, static_cast<EdgeId>(cfg.edge_count())};
    closed.graph.add_edge(cfg.end(), cfg.begin(), "");
    return closed;
}

int cyclomatic_complexity(const ClosedCfg& closed) {
    // closed edge count is e+1, so this is (e+1) - v + 1 = e - v + 2.
    return static_cast<int>(closed.graph.edge_count()) -
           static_cast<int>(closed.graph.node_count()) + 1;
}

namespace {

void bfs(const Cfg& g, NodeId start, bool forward, std::vector<bool>& seen) {
    std::deque<NodeId> queue;
    if (start == kNoNode) return;
    seen[start] = true;
    queue.push_back(start);
    while (!queue.empty()) {
        NodeId n = queue.front();
        queue.pop_front();
        const auto& adj = forward ? g.out_edges(n) : g.in_edges(n);
        for (EdgeId e : adj) {
            NodeId next = forward ? g.edge(e).to : g.edge(e).from;
            if (!seen[next]) {
                seen[next] = true;
                queue.push_back(next);
            }
        }
    }
}

} // namespace

bool is_strongly_connected(const ClosedCfg& closed) {
    const Cfg& g = closed.graph;
    if (g.node_count() == 0) return false;
    std::vector<bool> fwd(g.node_count(), false), back(g.node_count(), false);
    bfs(g, g.begin(), true, fwd);
    bfs(g, g.begin(), false, back);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        if (!fwd[i] || !back[i]) return false;
    }
    return true;
}

ReachSets reach_sets(const Cfg& cfg) {
    ReachSets r;
    r.from_begin.assign(cfg.node_count(), false);
    r.to_end.assign(cfg.node_count(), false);
    bfs(cfg, cfg.begin(), true, r.from_begin);
    bfs(cfg, cfg.end(), false, r.to_end);
    return r;
}

} // namespace pathbasis
