#ifndef PATHBASIS_MINILANG_HPP
#define PATHBASIS_MINILANG_HPP

#include <string>
#include <vector>

#include "pathbasis/cfg.hpp"

namespace pathbasis {

// Small imperative language used to exercise CFG construction:
//
//   program := stmt*
//   stmt    := ID ';'
//            | 'if' '(' TEXT ')' block ('else' block)?
//            | 'while' '(' TEXT ')' block
//            | 'do' block 'while' '(' TEXT ')' ';'
//            | 'for' '(' TEXT ';' TEXT ';' TEXT ')' block
//            | 'goto' ID ';'
//            | ID ':'
//   block   := '{' stmt* '}'
//
// '//' starts a line comment. Conditions and for-clauses are opaque text.

struct MiniStatement {
    enum class Kind { Plain, If, While, DoWhile, For, Label, Goto };

    Kind kind = Kind::Plain;
    std::string text;      // Plain: statement text; Label/Goto: label name;
                           // If/While/DoWhile/For: condition text
    std::string init;      // For only
    std::string step;      // For only
    std::vector<MiniStatement> body;      // If then-branch, loop bodies
    std::vector<MiniStatement> else_body; // If only
    bool has_else = false;
    int line = 0;
};

struct MiniAst {
    std::vector<MiniStatement> program;
    std::vector<std::string> labels; // declaration order, unique
};

/// Throws ParseError on syntax errors, duplicate labels, or gotos whose
/// target label does not exist.
MiniAst parse_minilang(const std::string& source);

/// Lowers the AST to a Cfg wrapped in synthetic begin/end nodes. Every
/// plain statement becomes exactly one action node. Decision nodes carry
/// the condition text; branch edges are labeled with the condition and
/// its negation. Loop back edges are emitted after the loop's exit edge
/// so the edge order (and thus all path vectors) is reproducible.
Cfg lower_ast(const MiniAst& ast);

} // namespace pathbasis

#endif
