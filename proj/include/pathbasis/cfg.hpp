#ifndef PATHBASIS_CFG_HPP
#define PATHBASIS_CFG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pathbasis {

// Nodes and edges are identified by dense 0-based indices. Edge identity
// is positional: parallel edges (same endpoints) stay distinct, and the
// edge order is the coordinate system of every path vector downstream.
using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

enum class NodeKind { Begin, End, Action, Decision };

const char* to_string(NodeKind k);
std::optional<NodeKind> node_kind_from_string(const std::string& s);

struct Node {
    std::string name;
    NodeKind kind = NodeKind::Action;
    std::optional<int> line; // source line, when lowered from a program
};

struct Edge {
    NodeId from = kNoNode;
    NodeId to = kNoNode;
    std::string label; // optional; empty means unlabeled
};

/// Directed multigraph of a sequential program's control flow with
/// designated begin and end nodes. Immutable once built; all analysis
/// functions in this library are pure, so distinct graphs can be
/// processed from different threads.
class Cfg {
public:
    Cfg() = default;
    explicit Cfg(std::string name) : name_(std::move(name)) {}

    NodeId add_node(const std::string& name, NodeKind kind = NodeKind::Action,
                    std::optional<int> line = std::nullopt);
    EdgeId add_edge(NodeId from, NodeId to, std::string label = {});

    void set_begin(NodeId n);
    void set_end(NodeId n);

    const std::string& name() const { return name_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const Node& node(NodeId n) const { return nodes_[n]; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

    NodeId begin() const { return begin_; }
    NodeId end() const { return end_; }
    bool has_begin_end() const { return begin_ != kNoNode && end_ != kNoNode; }

    /// Looks a node up by name; kNoNode when absent.
    NodeId find(const std::string& name) const;

    const std::vector<EdgeId>& out_edges(NodeId n) const { return out_[n]; }
    const std::vector<EdgeId>& in_edges(NodeId n) const { return in_[n]; }

    bool operator==(const Cfg& other) const;

private:
    std::string name_;
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> out_, in_;
    std::unordered_map<std::string, NodeId> index_;
    NodeId begin_ = kNoNode;
    NodeId end_ = kNoNode;
};

/// A Cfg closed by the virtual end->begin edge. The virtual edge is a
/// first-class edge and always the last one, so downstream path vectors
/// have a fixed coordinate layout: original edges in order, virtual last.
struct ClosedCfg {
    Cfg graph;          // base graph plus the appended virtual edge
    EdgeId virtual_edge; // always == original edge count

    std::size_t original_edge_count() const { return virtual_edge; }
};

/// Appends the end->begin virtual edge; the input graph is not modified.
/// Throws StructuralError when the graph is empty or lacks begin/end.
ClosedCfg close_graph(const Cfg& cfg);

/// (e+1) - v + 1 for the closed graph, i.e. e - v + 2 over the original
/// edge and node counts: the dimension of the begin-to-end path space.
/// (The pre-closure form for an already strongly connected graph would be
/// e - v + 1; only the closed form is exposed here.)
int cyclomatic_complexity(const ClosedCfg& closed);

/// True iff every ordered node pair is joined by a directed path.
bool is_strongly_connected(const ClosedCfg& closed);

struct ReachSets {
    std::vector<bool> from_begin; // forward closure of the begin node
    std::vector<bool> to_end;     // backward closure of the end node
};

ReachSets reach_sets(const Cfg& cfg);

} // namespace pathbasis

#endif
