#include "pathbasis/report.hpp"

#include <json.hpp>
#include <map>
#include <sstream>

namespace pathbasis {

using nlohmann::ordered_json;

namespace {

bool single_char_labels(const Cfg& cfg) {
    bool any = false;
    for (const Edge& e : cfg.edges()) {
        if (e.label.empty()) continue;
        any = true;
        if (e.label.size() != 1) return false;
    }
    return any;
}

std::string edge_token(const Cfg& cfg, EdgeId e) {
    const std::string& label = cfg.edge(e).label;
    return label.empty() ? "#" + std::to_string(e) : label;
}

ordered_json names_of(const Cfg& cfg, const std::vector<NodeId>& nodes) {
    ordered_json arr = ordered_json::array();
    for (NodeId n : nodes) arr.push_back(cfg.node(n).name);
    return arr;
}

ordered_json flaw_report_to_json(const Cfg& cfg, const FlawReport& report) {
    ordered_json doc;
    doc["flaws"] = ordered_json::array();
    for (const Flaw& f : report.flaws) {
        ordered_json jf;
        jf["kind"] = to_string(f.kind);
        jf["nodes"] = names_of(cfg, f.nodes);
        jf["edges"] = f.edges;
        jf["message"] = f.message;
        doc["flaws"].push_back(std::move(jf));
    }
    doc["blocking"] = report.blocking;
    return doc;
}

ordered_json certificate_to_json(const Cfg& cfg,
                                 const VerificationCertificate& cert) {
    ordered_json doc;
    doc["complexity"] = cert.complexity;
    doc["rank"] = cert.rank;
    doc["path_count"] = cert.path_count;
    doc["is_basis"] = cert.is_basis;
    ordered_json cov;
    cov["covered"] = cert.covered_edges;
    cov["total"] = cert.total_edges;
    cov["fraction"] = cert.total_edges == 0
                          ? 1.0
                          : static_cast<double>(cert.covered_edges) /
                                static_cast<double>(cert.total_edges);
    cov["missing_edges"] = cert.missing_edges;
    doc["edge_coverage"] = std::move(cov);
    ordered_json acc;
    acc["backbone_term"] = 1;
    acc["blocks"] = ordered_json::array();
    for (const BlockTerm& b : cert.accounting.blocks) {
        ordered_json jb;
        jb["from"] = cfg.node(b.from).name;
        jb["to"] = cfg.node(b.to).name;
        jb["complexity"] = b.complexity;
        acc["blocks"].push_back(std::move(jb));
    }
    acc["loops"] = ordered_json::array();
    for (const LoopTerm& l : cert.accounting.loops) {
        ordered_json jl;
        jl["header"] = cfg.node(l.header).name;
        jl["contribution"] = l.contribution;
        acc["loops"].push_back(std::move(jl));
    }
    acc["residual"] = cert.accounting.residual;
    doc["accounting"] = std::move(acc);
    return doc;
}

ordered_json decomposition_to_json(const Cfg& cfg, const Decomposition& d) {
    ordered_json doc;
    ordered_json cuts = ordered_json::array();
    for (NodeId n : d.chain.cut_vertices) cuts.push_back(cfg.node(n).name);
    doc["cut_vertices"] = std::move(cuts);
    doc["loopless_edges"] = d.loopless.edges;
    doc["blocks"] = ordered_json::array();
    for (const Block& b : d.chain.blocks) {
        ordered_json jb;
        jb["from"] = cfg.node(b.from).name;
        jb["to"] = cfg.node(b.to).name;
        jb["edges"] = b.edges;
        jb["parts"] = ordered_json::array();
        for (const ParallelPart& part : b.parts) {
            ordered_json jp;
            jp["edges"] = part.edges;
            jp["interior"] = names_of(cfg, part.interior);
            jb["parts"].push_back(std::move(jp));
        }
        doc["blocks"].push_back(std::move(jb));
    }
    doc["loops"] = ordered_json::array();
    for (const LoopGraph& loop : d.loops) {
        ordered_json jl;
        jl["header"] = cfg.node(loop.header).name;
        jl["body"] = names_of(cfg, loop.body);
        jl["back_edges"] = loop.back_edges;
        jl["internal_edges"] = loop.internal_edges;
        jl["contribution"] = loop.contribution();
        doc["loops"].push_back(std::move(jl));
    }
    return doc;
}

} // namespace

std::string path_text(const Cfg& cfg, const Path& path) {
    bool compact = single_char_labels(cfg);
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i <= path.edges.size(); ++i) {
        // closers before openers so back-to-back loops read ")(",
        // marks in path order so nesting opens outermost first
        for (const LoopMark& m : path.loops) {
            if (m.last == i) tokens.push_back(")");
        }
        for (const LoopMark& m : path.loops) {
            if (m.first == i) tokens.push_back("(");
        }
        if (i < path.edges.size()) tokens.push_back(edge_token(cfg, path.edges[i]));
    }
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += tokens[i];
    }
    return out;
}

std::string flaw_report_text(const Cfg& cfg, const FlawReport& report) {
    std::ostringstream out;
    if (report.flaws.empty()) {
        out << "no flaws\n";
        return out.str();
    }
    for (const Flaw& f : report.flaws) {
        out << (is_blocking(f.kind) ? "[blocking] " : "[repairable] ")
            << to_string(f.kind) << ": " << f.message << "\n";
    }
    out << (report.blocking ? "verdict: blocking flaws present\n"
                            : "verdict: no blocking flaws\n");
    (void)cfg;
    return out.str();
}

std::string certificate_text(const Cfg& cfg, const VerificationCertificate& cert) {
    std::ostringstream out;
    out << "complexity:  " << cert.complexity << "\n";
    out << "paths:       " << cert.path_count << "\n";
    out << "rank (GF2):  " << cert.rank << "\n";
    out << "coverage:    " << cert.covered_edges << "/" << cert.total_edges
        << " edges";
    if (!cert.missing_edges.empty()) {
        out << ", missing:";
        for (EdgeId e : cert.missing_edges) {
            out << " " << edge_token(cfg, e);
        }
    }
    out << "\n";
    out << "accounting:  1 (backbone)";
    for (const BlockTerm& b : cert.accounting.blocks) {
        out << " + " << (b.complexity - 1) << " (block " << cfg.node(b.from).name
            << ".." << cfg.node(b.to).name << ")";
    }
    for (const LoopTerm& l : cert.accounting.loops) {
        out << " + " << l.contribution << " (loop @" << cfg.node(l.header).name
            << ")";
    }
    out << ", residual " << cert.accounting.residual << "\n";
    out << "is_basis:    " << (cert.is_basis ? "true" : "false") << "\n";
    return out.str();
}

std::string plan_text(const TestPlan& plan) {
    std::ostringstream out;
    if (plan.aborted) {
        out << flaw_report_text(plan.graph, plan.flaws);
        out << "plan aborted: fix blocking flaws first\n";
        return out.str();
    }
    out << "complexity " << plan.complexity << ", " << plan.paths.paths.size()
        << " independent paths:\n";
    for (std::size_t i = 0; i < plan.paths.paths.size(); ++i) {
        out << path_text(plan.graph, plan.paths.paths[i]);
        if (i == plan.paths.backbone_index) out << "    [backbone]";
        out << "\n";
    }
    return out.str();
}

std::string flaw_report_json(const Cfg& cfg, const FlawReport& report) {
    return flaw_report_to_json(cfg, report).dump(2) + "\n";
}

std::string certificate_json(const Cfg& cfg, const VerificationCertificate& cert) {
    return certificate_to_json(cfg, cert).dump(2) + "\n";
}

std::string decomposition_json(const Cfg& cfg, const Decomposition& d) {
    return decomposition_to_json(cfg, d).dump(2) + "\n";
}

std::string plan_json(const TestPlan& plan, bool include_decomposition) {
    ordered_json doc;
    doc["complexity"] = plan.complexity;
    doc["paths"] = ordered_json::array();
    if (!plan.aborted) {
        for (std::size_t i = 0; i < plan.paths.paths.size(); ++i) {
            const Path& p = plan.paths.paths[i];
            ordered_json jp;
            jp["edges"] = p.edges;
            ordered_json labels = ordered_json::array();
            for (EdgeId e : p.edges) labels.push_back(plan.graph.edge(e).label);
            jp["labels"] = std::move(labels);
            jp["role"] = i == plan.paths.backbone_index ? "backbone" : "basis";
            if (!p.loops.empty()) {
                ordered_json jloops = ordered_json::array();
                for (const LoopMark& m : p.loops) {
                    ordered_json jm;
                    jm["first"] = m.first;
                    jm["last"] = m.last;
                    jm["header"] = plan.graph.node(m.header).name;
                    jloops.push_back(std::move(jm));
                }
                jp["loops"] = std::move(jloops);
            }
            doc["paths"].push_back(std::move(jp));
        }
        doc["verification"] = certificate_to_json(plan.graph, plan.certificate);
    }
    doc["flaws"] = flaw_report_to_json(plan.graph, plan.flaws);
    if (include_decomposition && !plan.aborted) {
        doc["decomposition"] = decomposition_to_json(plan.graph, plan.decomposition);
    }
    return doc.dump(2) + "\n";
}

std::string plan_dot(const TestPlan& plan) {
    const Cfg& g = plan.graph;
    std::vector<std::vector<std::size_t>> edge_paths(g.edge_count());
    for (std::size_t i = 0; i < plan.paths.paths.size(); ++i) {
        for (EdgeId e : plan.paths.paths[i].edges) {
            if (edge_paths[e].empty() || edge_paths[e].back() != i) {
                edge_paths[e].push_back(i);
            }
        }
    }
    std::ostringstream out;
    out << "digraph \"" << (g.name().empty() ? "plan" : g.name()) << "\" {\n";
    for (std::size_t i = 0; i < plan.paths.paths.size(); ++i) {
        out << "  // path " << i
            << (i == plan.paths.backbone_index ? " (backbone): " : ": ")
            << path_text(g, plan.paths.paths[i]) << "\n";
    }
    for (const Node& n : g.nodes()) {
        out << "  \"" << n.name << "\" [kind=" << to_string(n.kind) << "];\n";
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        out << "  \"" << g.node(edge.from).name << "\" -> \""
            << g.node(edge.to).name << "\" [";
        if (!edge.label.empty()) out << "label=\"" << edge.label << "\", ";
        out << "paths=\"";
        for (std::size_t i = 0; i < edge_paths[e].size(); ++i) {
            if (i) out << ",";
            out << edge_paths[e][i];
        }
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace pathbasis
