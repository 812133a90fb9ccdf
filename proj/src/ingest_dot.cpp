#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pathbasis/errors.hpp"
#include "pathbasis/ingest.hpp"

namespace pathbasis {

namespace {

struct Token {
    enum Type { Ident, String, Punct, EndOfInput } type;
    std::string text;
    int line;
};

class DotLexer {
public:
    explicit DotLexer(const std::string& text) : src_(text) {}

    Token next() {
        skip_space_and_comments();
        if (pos_ >= src_.size()) return {Token::EndOfInput, "", line_};
        char c = src_[pos_];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_' || src_[pos_] == '.')) {
                ++pos_;
            }
            return {Token::Ident, src_.substr(start, pos_ - start), line_};
        }
        if (c == '"') {
            ++pos_;
            std::string value;
            while (pos_ < src_.size() && src_[pos_] != '"') {
                if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) ++pos_;
                if (src_[pos_] == '\n') ++line_;
                value += src_[pos_++];
            }
            if (pos_ >= src_.size()) {
                throw ParseError("DOT line " + std::to_string(line_) +
                                 ": unterminated string");
            }
            ++pos_; // closing quote
            return {Token::String, value, line_};
        }
        if (c == '-' && pos_ + 1 < src_.size()) {
            char d = src_[pos_ + 1];
            if (d == '>' || d == '-') {
                pos_ += 2;
                return {Token::Punct, std::string("-") + d, line_};
            }
        }
        ++pos_;
        return {Token::Punct, std::string(1, c), line_};
    }

private:
    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') {
                pos_ += 2;
                while (pos_ + 1 < src_.size() &&
                       !(src_[pos_] == '*' && src_[pos_ + 1] == '/')) {
                    if (src_[pos_] == '\n') ++line_;
                    ++pos_;
                }
                pos_ = std::min(pos_ + 2, src_.size());
            } else {
                break;
            }
        }
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

[[noreturn]] void fail(const Token& t, const std::string& what) {
    throw ParseError("DOT line " + std::to_string(t.line) + ": " + what);
}

} // namespace

Cfg parse_dot_cfg(const std::string& text) {
    DotLexer lex(text);
    Token t = lex.next();
    if (t.type != Token::Ident || t.text != "digraph") {
        fail(t, "expected 'digraph'");
    }
    t = lex.next();
    std::string graph_name;
    if (t.type == Token::Ident || t.type == Token::String) {
        graph_name = t.text;
        t = lex.next();
    }
    if (t.type != Token::Punct || t.text != "{") fail(t, "expected '{'");

    Cfg cfg(graph_name);
    std::map<std::string, std::optional<NodeKind>> declared_kind;
    struct PendingEdge {
        std::string from, to, label;
    };
    std::vector<PendingEdge> pending_edges;
    std::vector<std::string> node_order;

    auto note_node = [&](const std::string& id) {
        if (declared_kind.find(id) == declared_kind.end()) {
            declared_kind[id] = std::nullopt;
            node_order.push_back(id);
        }
    };

    auto parse_attrs = [&](std::map<std::string, std::string>& attrs) {
        // caller consumed '['
        while (true) {
            Token key = lex.next();
            if (key.type == Token::Punct && key.text == "]") return;
            if (key.type != Token::Ident && key.type != Token::String) {
                fail(key, "expected attribute name");
            }
            Token eq = lex.next();
            if (eq.type != Token::Punct || eq.text != "=") fail(eq, "expected '='");
            Token val = lex.next();
            if (val.type != Token::Ident && val.type != Token::String) {
                fail(val, "expected attribute value");
            }
            attrs[key.text] = val.text;
            Token sep = lex.next();
            if (sep.type == Token::Punct && sep.text == "]") return;
            if (sep.type != Token::Punct || (sep.text != "," && sep.text != ";")) {
                fail(sep, "expected ',' or ']' in attribute list");
            }
        }
    };

    t = lex.next();
    while (!(t.type == Token::Punct && t.text == "}")) {
        if (t.type == Token::EndOfInput) fail(t, "unexpected end of input, missing '}'");
        if (t.type == Token::Ident && (t.text == "subgraph" || t.text == "graph" ||
                                       t.text == "node" || t.text == "edge")) {
            fail(t, "unsupported construct '" + t.text + "'");
        }
        if (t.type != Token::Ident && t.type != Token::String) {
            fail(t, "expected node id");
        }
        std::string id = t.text;
        t = lex.next();
        if (t.type == Token::Punct && t.text == ":") {
            fail(t, "unsupported construct: port");
        }
        if (t.type == Token::Punct && t.text == "--") {
            fail(t, "unsupported construct: undirected edge");
        }
        note_node(id);
        // chain of  id -> id -> id  with optional trailing attributes
        std::vector<std::string> chain{id};
        while (t.type == Token::Punct && t.text == "->") {
            Token target = lex.next();
            if (target.type != Token::Ident && target.type != Token::String) {
                fail(target, "expected edge target");
            }
            note_node(target.text);
            chain.push_back(target.text);
            t = lex.next();
        }
        std::map<std::string, std::string> attrs;
        if (t.type == Token::Punct && t.text == "[") {
            parse_attrs(attrs);
            t = lex.next();
        }
        if (t.type == Token::Punct && t.text == ";") t = lex.next();

        if (chain.size() == 1) {
            // node statement
            auto it = attrs.find("kind");
            if (it != attrs.end()) {
                auto kind = node_kind_from_string(it->second);
                if (!kind) {
                    throw ParseError("DOT: unknown kind \"" + it->second +
                                     "\" on node " + id);
                }
                declared_kind[id] = kind;
            }
        } else {
            std::string label;
            auto it = attrs.find("label");
            if (it != attrs.end()) label = it->second;
            for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
                pending_edges.push_back({chain[i], chain[i + 1], label});
            }
        }
    }

    for (const std::string& id : node_order) {
        cfg.add_node(id, declared_kind[id].value_or(NodeKind::Action));
    }
    for (const PendingEdge& pe : pending_edges) {
        cfg.add_edge(cfg.find(pe.from), cfg.find(pe.to), pe.label);
    }

    // begin/end from declared kinds, else unique source/sink
    std::vector<NodeId> begins, ends;
    for (NodeId n = 0; n < cfg.node_count(); ++n) {
        if (cfg.node(n).kind == NodeKind::Begin) begins.push_back(n);
        if (cfg.node(n).kind == NodeKind::End) ends.push_back(n);
    }
    if (begins.empty()) {
        for (NodeId n = 0; n < cfg.node_count(); ++n) {
            if (cfg.in_edges(n).empty()) begins.push_back(n);
        }
        if (begins.size() != 1) {
            throw ParseError("DOT: ambiguous begin node (no kind=begin and " +
                             std::to_string(begins.size()) + " source nodes)");
        }
    }
    if (ends.empty()) {
        for (NodeId n = 0; n < cfg.node_count(); ++n) {
            if (cfg.out_edges(n).empty()) ends.push_back(n);
        }
        if (ends.size() != 1) {
            throw ParseError("DOT: ambiguous end node (no kind=end and " +
                             std::to_string(ends.size()) + " sink nodes)");
        }
    }
    cfg.set_begin(begins.front());
    cfg.set_end(ends.front());
    return cfg;
}

std::string serialize_dot_cfg(const Cfg& cfg) {
    std::ostringstream out;
    // node ids are quoted: lowered graphs name nodes after statement text
    out << "digraph \"" << (cfg.name().empty() ? "cfg" : cfg.name()) << "\" {\n";
    for (const Node& n : cfg.nodes()) {
        out << "  \"" << n.name << "\" [kind=" << to_string(n.kind) << "];\n";
    }
    for (const Edge& e : cfg.edges()) {
        out << "  \"" << cfg.node(e.from).name << "\" -> \""
            << cfg.node(e.to).name << "\"";
        if (!e.label.empty()) out << " [label=\"" << e.label << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace pathbasis
