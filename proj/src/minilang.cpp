#include "pathbasis/minilang.hpp"

#include <cctype>
#include <set>
#include <unordered_map>

#include "pathbasis/errors.hpp"

namespace pathbasis {

namespace {

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class MiniLexer {
public:
    explicit MiniLexer(const std::string& src) : src_(src) {}

    void skip_blank() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip_blank();
        return pos_ >= src_.size();
    }

    int line() const { return line_; }

    char peek_char() {
        skip_blank();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool peek_ident(std::string& out) {
        skip_blank();
        if (pos_ >= src_.size() || !is_ident_char(src_[pos_]) ||
            std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            return false;
        }
        std::size_t p = pos_;
        while (p < src_.size() && is_ident_char(src_[p])) ++p;
        out = src_.substr(pos_, p - pos_);
        return true;
    }

    std::string take_ident() {
        std::string id;
        if (!peek_ident(id)) fail("expected identifier");
        pos_ += id.size();
        return id;
    }

    void expect(char c, const char* what) {
        skip_blank();
        if (pos_ >= src_.size() || src_[pos_] != c) {
            fail(std::string("expected '") + c + "' " + what);
        }
        ++pos_;
    }

    bool try_take(char c) {
        skip_blank();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    /// Raw text up to the ')' matching an already consumed '('.
    std::string paren_text() {
        std::string out;
        int depth = 1;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '(') ++depth;
            if (c == ')') {
                --depth;
                if (depth == 0) {
                    ++pos_;
                    return trim(out);
                }
            }
            if (c == '\n') ++line_;
            out += c;
            ++pos_;
        }
        fail("unterminated '('");
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(line_) + ": " + msg);
    }

    static std::string trim(const std::string& s) {
        std::size_t a = s.find_first_not_of(" \t\n\r");
        if (a == std::string::npos) return "";
        std::size_t b = s.find_last_not_of(" \t\n\r");
        return s.substr(a, b - a + 1);
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

const std::set<std::string> kKeywords = {"if", "else", "while", "do", "for", "goto"};

class MiniParser {
public:
    explicit MiniParser(const std::string& src) : lex_(src) {}

    MiniAst parse() {
        MiniAst ast;
        while (!lex_.at_end()) {
            ast.program.push_back(parse_stmt());
        }
        for (const auto& [target, line] : goto_targets_) {
            if (labels_.count(target) == 0) {
                throw ParseError("line " + std::to_string(line) +
                                 ": unresolved goto target '" + target + "'");
            }
        }
        ast.labels.assign(label_order_.begin(), label_order_.end());
        return ast;
    }

private:
    MiniStatement parse_stmt() {
        MiniStatement s;
        s.line = lex_.line();
        std::string id;
        if (!lex_.peek_ident(id)) {
            lex_.fail("expected a statement");
        }
        if (id == "if") {
            lex_.take_ident();
            s.kind = MiniStatement::Kind::If;
            lex_.expect('(', "after 'if'");
            s.text = lex_.paren_text();
            s.body = parse_block();
            std::string next;
            if (lex_.peek_ident(next) && next == "else") {
                lex_.take_ident();
                s.has_else = true;
                s.else_body = parse_block();
            }
            return s;
        }
        if (id == "while") {
            lex_.take_ident();
            s.kind = MiniStatement::Kind::While;
            lex_.expect('(', "after 'while'");
            s.text = lex_.paren_text();
            s.body = parse_block();
            return s;
        }
        if (id == "do") {
            lex_.take_ident();
            s.kind = MiniStatement::Kind::DoWhile;
            s.body = parse_block();
            std::string kw = lex_.take_ident();
            if (kw != "while") lex_.fail("expected 'while' after do-block");
            lex_.expect('(', "after 'while'");
            s.text = lex_.paren_text();
            lex_.expect(';', "after do-while");
            return s;
        }
        if (id == "for") {
            lex_.take_ident();
            s.kind = MiniStatement::Kind::For;
            lex_.expect('(', "after 'for'");
            std::string clauses = lex_.paren_text();
            std::vector<std::string> parts = split_top_level(clauses);
            if (parts.size() != 3) {
                lex_.fail("'for' needs init;cond;step clauses");
            }
            s.init = MiniLexer::trim(parts[0]);
            s.text = MiniLexer::trim(parts[1]);
            s.step = MiniLexer::trim(parts[2]);
            s.body = parse_block();
            return s;
        }
        if (id == "goto") {
            lex_.take_ident();
            s.kind = MiniStatement::Kind::Goto;
            s.text = lex_.take_ident();
            if (kKeywords.count(s.text)) lex_.fail("goto target cannot be a keyword");
            goto_targets_.emplace_back(s.text, s.line);
            lex_.expect(';', "after goto");
            return s;
        }
        if (id == "else") {
            lex_.fail("'else' without matching 'if'");
        }
        // plain statement or label
        lex_.take_ident();
        if (lex_.try_take(':')) {
            s.kind = MiniStatement::Kind::Label;
            s.text = id;
            if (!labels_.insert(id).second) {
                lex_.fail("duplicate label '" + id + "'");
            }
            label_order_.push_back(id);
            return s;
        }
        lex_.expect(';', "after statement");
        s.kind = MiniStatement::Kind::Plain;
        s.text = id;
        return s;
    }

    std::vector<MiniStatement> parse_block() {
        lex_.expect('{', "to open a block");
        std::vector<MiniStatement> stmts;
        while (!lex_.try_take('}')) {
            if (lex_.at_end()) lex_.fail("unterminated block");
            stmts.push_back(parse_stmt());
        }
        return stmts;
    }

    static std::vector<std::string> split_top_level(const std::string& text) {
        std::vector<std::string> parts;
        std::string cur;
        int depth = 0;
        for (char c : text) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == ';' && depth == 0) {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        parts.push_back(cur);
        return parts;
    }

    MiniLexer lex_;
    std::set<std::string> labels_;
    std::vector<std::string> label_order_;
    std::vector<std::pair<std::string, int>> goto_targets_;
};

// ---------------------------------------------------------------------------
// Lowering

class Lowering {
public:
    Cfg run(const MiniAst& ast) {
        NodeId begin = new_node("begin", NodeKind::Begin, 0);
        std::vector<ExitRef> exits = lower_seq(ast.program, {dangling(begin, "")});
        NodeId end = new_node("end", NodeKind::End, 0);
        connect(exits, end);
        cfg_.set_begin(begin);
        cfg_.set_end(end);
        for (const ProtoEdge& pe : proto_) {
            if (pe.to == kNoNode) {
                throw ContractError("internal: unresolved edge target in lowering");
            }
            cfg_.add_edge(pe.from, pe.to, pe.label);
        }
        return std::move(cfg_);
    }

private:
    struct ProtoEdge {
        NodeId from;
        NodeId to; // kNoNode until patched
        std::string label;
    };
    // A pending control transfer: either an edge that exists but has no
    // target yet, or a source node whose outgoing edge is not created
    // until the target is known (this is what keeps loop back edges after
    // loop exit edges in the final order).
    struct ExitRef {
        bool is_edge;
        std::size_t edge; // into proto_
        NodeId from;
        std::string label;
    };

    static ExitRef dangling(NodeId from, std::string label) {
        return ExitRef{false, 0, from, std::move(label)};
    }
    ExitRef edge_ref(std::size_t e) { return ExitRef{true, e, kNoNode, {}}; }

    NodeId new_node(const std::string& base, NodeKind kind, int line) {
        std::string name = base.empty() ? "stmt" : base;
        auto& n = name_counts_[name];
        ++n;
        if (n > 1) name += "_" + std::to_string(n);
        return cfg_.add_node(name, kind, line > 0 ? std::optional<int>(line) : std::nullopt);
    }

    std::size_t new_edge(NodeId from, std::string label) {
        proto_.push_back(ProtoEdge{from, kNoNode, std::move(label)});
        return proto_.size() - 1;
    }

    void connect(const std::vector<ExitRef>& exits, NodeId target) {
        for (const ExitRef& x : exits) {
            if (x.is_edge) {
                proto_[x.edge].to = target;
            } else {
                std::size_t e = new_edge(x.from, x.label);
                proto_[e].to = target;
            }
        }
    }

    std::vector<ExitRef> lower_seq(const std::vector<MiniStatement>& stmts,
                                   std::vector<ExitRef> incoming) {
        for (const MiniStatement& s : stmts) {
            incoming = lower_stmt(s, std::move(incoming));
        }
        return incoming;
    }

    std::vector<ExitRef> lower_stmt(const MiniStatement& s,
                                    std::vector<ExitRef> incoming) {
        using Kind = MiniStatement::Kind;
        switch (s.kind) {
        case Kind::Plain: {
            NodeId n = new_node(s.text, NodeKind::Action, s.line);
            connect(incoming, n);
            return {dangling(n, "")};
        }
        case Kind::Label: {
            NodeId n = new_node(s.text, NodeKind::Action, s.line);
            connect(incoming, n);
            label_nodes_[s.text] = n;
            auto range = goto_fixups_.equal_range(s.text);
            for (auto it = range.first; it != range.second; ++it) {
                proto_[it->second].to = n;
            }
            goto_fixups_.erase(range.first, range.second);
            return {dangling(n, "")};
        }
        case Kind::Goto: {
            NodeId n = new_node("goto_" + s.text, NodeKind::Action, s.line);
            connect(incoming, n);
            std::size_t jump = new_edge(n, "");
            auto it = label_nodes_.find(s.text);
            if (it != label_nodes_.end()) {
                proto_[jump].to = it->second; // backward jump: a loop edge
            } else {
                goto_fixups_.emplace(s.text, jump); // forward jump
            }
            return {}; // no fall-through
        }
        case Kind::If: {
            NodeId d = new_node(s.text, NodeKind::Decision, s.line);
            connect(incoming, d);
            std::size_t then_edge = new_edge(d, s.text);
            std::vector<ExitRef> exits = lower_seq(s.body, {edge_ref(then_edge)});
            std::size_t else_edge = new_edge(d, "!" + s.text);
            if (s.has_else) {
                std::vector<ExitRef> else_exits =
                    lower_seq(s.else_body, {edge_ref(else_edge)});
                exits.insert(exits.end(), else_exits.begin(), else_exits.end());
            } else {
                exits.push_back(edge_ref(else_edge));
            }
            return exits;
        }
        case Kind::While: {
            NodeId c = new_node(s.text, NodeKind::Decision, s.line);
            connect(incoming, c);
            std::size_t enter = new_edge(c, s.text);
            std::vector<ExitRef> body_exits = lower_seq(s.body, {edge_ref(enter)});
            std::size_t exit = new_edge(c, "!" + s.text);
            connect(body_exits, c); // back edges, after the exit edge
            return {edge_ref(exit)};
        }
        case Kind::DoWhile: {
            NodeId entry_before = static_cast<NodeId>(cfg_.node_count());
            std::vector<ExitRef> body_exits = lower_seq(s.body, std::move(incoming));
            bool body_empty = cfg_.node_count() == entry_before;
            NodeId c = new_node(s.text, NodeKind::Decision, s.line);
            NodeId body_entry = body_empty ? c : entry_before;
            connect(body_exits, c);
            std::size_t exit = new_edge(c, "!" + s.text);
            std::size_t back = new_edge(c, s.text);
            proto_[back].to = body_entry;
            return {edge_ref(exit)};
        }
        case Kind::For: {
            // init; while (cond) { body; step; }
            std::vector<ExitRef> at_cond = std::move(incoming);
            if (!s.init.empty()) {
                NodeId init = new_node(s.init, NodeKind::Action, s.line);
                connect(at_cond, init);
                at_cond = {dangling(init, "")};
            }
            NodeId c = new_node(s.text.empty() ? "for" : s.text, NodeKind::Decision,
                                s.line);
            connect(at_cond, c);
            std::size_t enter = new_edge(c, s.text);
            std::vector<ExitRef> body_exits = lower_seq(s.body, {edge_ref(enter)});
            if (!s.step.empty()) {
                NodeId step = new_node(s.step, NodeKind::Action, s.line);
                connect(body_exits, step);
                body_exits = {dangling(step, "")};
            }
            std::size_t exit = new_edge(c, "!" + s.text);
            connect(body_exits, c); // back edges, after the exit edge
            return {edge_ref(exit)};
        }
        }
        throw ContractError("internal: unknown statement kind");
    }

    Cfg cfg_{"program"};
    std::vector<ProtoEdge> proto_;
    std::unordered_map<std::string, int> name_counts_;
    std::unordered_map<std::string, NodeId> label_nodes_;
    std::unordered_multimap<std::string, std::size_t> goto_fixups_;
};

} // namespace

MiniAst parse_minilang(const std::string& source) {
    return MiniParser(source).parse();
}

Cfg lower_ast(const MiniAst& ast) {
    return Lowering().run(ast);
}

} // namespace pathbasis
