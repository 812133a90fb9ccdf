#include "pathbasis/gen.hpp"

#include <random>
#include <string>
#include <vector>

#include "pathbasis/minilang.hpp"

namespace pathbasis {

namespace {

class ProgramGenerator {
public:
    ProgramGenerator(std::uint64_t seed, int stmt_budget)
        : rng_(seed), budget_(stmt_budget) {}

    std::vector<MiniStatement> gen_program() {
        return gen_seq(0, std::max(1, budget_));
    }

private:
    int pick(int lo, int hi) { // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }
    bool chance(int percent) { return pick(1, 100) <= percent; }

    MiniStatement plain() {
        MiniStatement s;
        s.kind = MiniStatement::Kind::Plain;
        s.text = "s" + std::to_string(++stmt_counter_);
        --budget_;
        return s;
    }

    std::string new_cond() { return "c" + std::to_string(++cond_counter_); }

    MiniStatement forward_jump() {
        // if (c) { goto L; } with L somewhere later (possibly outside a loop)
        MiniStatement s;
        s.kind = MiniStatement::Kind::If;
        s.text = new_cond();
        MiniStatement g;
        g.kind = MiniStatement::Kind::Goto;
        g.text = open_labels_[static_cast<std::size_t>(
            pick(0, static_cast<int>(open_labels_.size()) - 1))];
        s.body.push_back(std::move(g));
        budget_ -= 2;
        return s;
    }

    std::vector<MiniStatement> gen_seq(int depth, int budget) {
        std::vector<MiniStatement> stmts;
        int local = budget;

        // sometimes promise a label later in this sequence so nested
        // statements can jump forward to it
        bool has_skip_label = depth < 4 && local > 4 && chance(35);
        std::string skip_label;
        if (has_skip_label) {
            skip_label = "L" + std::to_string(++label_counter_);
            open_labels_.push_back(skip_label);
        }

        int segments = pick(2, std::max(2, std::min(7, local)));
        for (int i = 0; i < segments && budget_ > 0 && local > 0; ++i) {
            int roll = pick(1, 100);
            if (!open_labels_.empty() && roll <= 12 && local >= 2) {
                stmts.push_back(forward_jump());
                local -= 2;
                // an unconditional trailing statement keeps flow alive
                stmts.push_back(plain());
                --local;
            } else if (roll <= 40 || depth >= 4 || local < 3) {
                stmts.push_back(plain());
                --local;
            } else if (roll <= 62) {
                MiniStatement s;
                s.kind = MiniStatement::Kind::If;
                s.text = new_cond();
                --budget_;
                int sub = std::max(1, local / 2);
                s.body = gen_seq(depth + 1, sub);
                if (chance(55)) {
                    s.has_else = true;
                    s.else_body = gen_seq(depth + 1, std::max(1, sub / 2));
                }
                local -= sub;
                stmts.push_back(std::move(s));
            } else if (roll <= 80) {
                MiniStatement s;
                s.kind = MiniStatement::Kind::While;
                s.text = new_cond();
                --budget_;
                s.body = gen_seq(depth + 1, std::max(1, local / 2));
                local -= std::max(1, local / 2);
                stmts.push_back(std::move(s));
            } else if (roll <= 90) {
                MiniStatement s;
                s.kind = MiniStatement::Kind::DoWhile;
                s.text = new_cond();
                --budget_;
                s.body = gen_seq(depth + 1, std::max(1, local / 3));
                local -= std::max(1, local / 3);
                stmts.push_back(std::move(s));
            } else {
                MiniStatement s;
                s.kind = MiniStatement::Kind::For;
                s.init = "i" + std::to_string(++stmt_counter_);
                s.text = new_cond();
                s.step = "k" + std::to_string(++stmt_counter_);
                budget_ -= 3;
                s.body = gen_seq(depth + 1, std::max(1, local / 3));
                local -= std::max(1, local / 3);
                stmts.push_back(std::move(s));
            }
        }
        if (stmts.empty()) stmts.push_back(plain());

        if (has_skip_label) {
            open_labels_.pop_back();
            MiniStatement label;
            label.kind = MiniStatement::Kind::Label;
            label.text = skip_label;
            stmts.push_back(std::move(label));
            // a statement after the label keeps it from dangling at "end"
            stmts.push_back(plain());
        }
        return stmts;
    }

    std::mt19937_64 rng_;
    int budget_;
    int stmt_counter_ = 0;
    int cond_counter_ = 0;
    int label_counter_ = 0;
    std::vector<std::string> open_labels_;
};

} // namespace

Cfg random_reducible_cfg(const GenOptions& options) {
    // Shrink the statement budget until the lowered graph fits the caps.
    int budget = std::max(2, options.max_nodes * 3 / 4);
    for (int attempt = 0;; ++attempt) {
        ProgramGenerator gen(options.seed + static_cast<std::uint64_t>(attempt),
                             budget);
        MiniAst ast;
        ast.program = gen.gen_program();
        Cfg cfg = lower_ast(ast);
        if (static_cast<int>(cfg.node_count()) <= options.max_nodes &&
            static_cast<int>(cfg.edge_count()) <= options.max_edges) {
            return cfg;
        }
        budget = std::max(2, budget * 2 / 3);
    }
}

} // namespace pathbasis
