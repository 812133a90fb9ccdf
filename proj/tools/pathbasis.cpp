// Command-line front end: flaw scanning, path planning, plan
// verification, base-path substitution, mini-language lowering, and the
// random graph generator used by the test harness.
//
// Exit codes: 0 success (or verified basis), 1 input/parse error,
// 2 blocking design flaws, 3 verification failure.

#include <CLI11.hpp>
#include <cctype>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "pathbasis/errors.hpp"
#include "pathbasis/gen.hpp"
#include "pathbasis/ingest.hpp"
#include "pathbasis/minilang.hpp"
#include "pathbasis/pipeline.hpp"
#include "pathbasis/report.hpp"

namespace {

using namespace pathbasis;

enum ExitCode { kOk = 0, kInputError = 1, kBlockingFlaws = 2, kVerifyFailed = 3 };

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + out_path);
    out << content;
}

std::string detect_format(const std::string& path) {
    auto dot = path.find_last_of('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "json") return "json";
    if (ext == "dot" || ext == "gv") return "dot";
    if (ext == "mini") return "mini";
    throw ParseError("cannot detect input format of '" + path +
                     "'; pass --format json|dot|mini");
}

Cfg load_cfg(const std::string& path, std::string format) {
    if (format == "auto") format = detect_format(path);
    std::string text = read_file(path);
    if (format == "json") return parse_json_cfg(text);
    if (format == "dot") return parse_dot_cfg(text);
    if (format == "mini") return lower_ast(parse_minilang(text));
    throw ParseError("unknown input format: " + format);
}

// Plan files are either TestPlan JSON or plain text: one path per line,
// written as edge labels (whitespace separated, or concatenated when all
// labels are single characters). "#N" names edge N directly; parentheses
// from loop notation are ignored.
std::vector<Path> parse_plan_paths(const Cfg& cfg, const std::string& text) {
    std::vector<Path> paths;
    std::string trimmed = text;
    std::size_t first = trimmed.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && trimmed[first] == '{') {
        auto doc = nlohmann::json::parse(text);
        if (!doc.contains("paths") || !doc["paths"].is_array()) {
            throw ParseError("plan JSON has no \"paths\" array");
        }
        for (const auto& jp : doc["paths"]) {
            Path p;
            for (const auto& je : jp.at("edges")) {
                p.edges.push_back(je.get<EdgeId>());
            }
            paths.push_back(std::move(p));
        }
        return paths;
    }

    std::map<std::string, std::vector<EdgeId>> by_label;
    bool all_single = true;
    for (EdgeId e = 0; e < cfg.edge_count(); ++e) {
        const std::string& label = cfg.edge(e).label;
        if (label.empty()) continue;
        by_label[label].push_back(e);
        if (label.size() != 1) all_single = false;
    }
    auto lookup = [&](const std::string& token) -> EdgeId {
        if (token.size() > 1 && token[0] == '#') {
            EdgeId e = static_cast<EdgeId>(std::stoul(token.substr(1)));
            if (e >= cfg.edge_count()) {
                throw ParseError("edge id out of range: " + token);
            }
            return e;
        }
        auto it = by_label.find(token);
        if (it == by_label.end()) throw ParseError("unknown label '" + token + "'");
        if (it->second.size() > 1) {
            throw ParseError("ambiguous label '" + token + "'");
        }
        return it->second.front();
    };

    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        // drop bracketed annotations such as the [backbone] marker
        std::size_t lb;
        while ((lb = line.find('[')) != std::string::npos) {
            std::size_t rb = line.find(']', lb);
            line.erase(lb, rb == std::string::npos ? std::string::npos
                                                   : rb - lb + 1);
        }
        // strip remaining punctuation and loop parentheses
        std::string clean;
        for (char c : line) {
            if (c == '(' || c == ')') {
                clean += ' ';
            } else if (c == '#' || std::isalnum(static_cast<unsigned char>(c)) ||
                       c == '_' || c == '!' || c == '<' || c == '>' || c == '=') {
                clean += c;
            } else {
                clean += ' ';
            }
        }
        std::istringstream words(clean);
        std::vector<std::string> tokens;
        std::string word;
        while (words >> word) tokens.push_back(word);
        if (tokens.empty()) continue;
        Path p;
        for (const std::string& token : tokens) {
            if (by_label.count(token) || token[0] == '#') {
                p.edges.push_back(lookup(token));
            } else if (all_single) {
                for (char c : token) {
                    p.edges.push_back(lookup(std::string(1, c)));
                }
            } else {
                throw ParseError("unknown label '" + token + "'");
            }
        }
        paths.push_back(std::move(p));
    }
    return paths;
}

int cmd_flaws(const std::string& input, const std::string& format,
              const std::string& emit, const std::string& out) {
    Cfg cfg = load_cfg(input, format);
    PurifyResult result = purify(cfg);
    write_output(out, emit == "json"
                          ? flaw_report_json(result.graph, result.report)
                          : flaw_report_text(result.graph, result.report));
    return result.report.blocking ? kBlockingFlaws : kOk;
}

int cmd_paths(const std::string& input, const std::string& format,
              const std::string& emit, const std::string& out,
              bool dump_decomposition) {
    Cfg cfg = load_cfg(input, format);
    TestPlan plan = test_pipeline(cfg);
    if (plan.aborted) {
        write_output(out, emit == "json" ? plan_json(plan)
                                         : plan_text(plan));
        return kBlockingFlaws;
    }
    std::string rendered;
    if (emit == "json") {
        rendered = plan_json(plan, dump_decomposition);
    } else if (emit == "dot") {
        rendered = plan_dot(plan);
    } else {
        rendered = plan_text(plan);
        if (dump_decomposition) {
            rendered += decomposition_json(plan.graph, plan.decomposition);
        }
    }
    write_output(out, rendered);
    return kOk;
}

int cmd_verify(const std::string& input, const std::string& format,
               const std::string& plan_file, const std::string& emit,
               const std::string& out) {
    Cfg cfg = load_cfg(input, format);
    PurifyResult purified = purify(cfg);
    if (purified.report.blocking) {
        write_output(out, flaw_report_text(purified.graph, purified.report));
        return kBlockingFlaws;
    }
    const Cfg& g = purified.graph;
    std::vector<Path> paths = parse_plan_paths(g, read_file(plan_file));
    for (const Path& p : paths) {
        if (!is_valid_walk(g, p.edges, g.begin(), g.end())) {
            std::ostringstream msg;
            msg << "plan path is not a valid begin-to-end walk: "
                << path_text(g, p) << "\n";
            write_output(out, msg.str());
            return kInputError;
        }
    }
    PathSet set;
    set.paths = std::move(paths);
    if (!set.paths.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < set.paths.size(); ++i) {
            if (set.paths[i].edges.size() < set.paths[best].edges.size()) best = i;
        }
        set.backbone_index = best;
    }
    ClosedCfg closed = close_graph(g);
    Decomposition d = decompose(g);
    VerificationCertificate cert = verify_basis(set, closed, d);
    write_output(out, emit == "json" ? certificate_json(g, cert)
                                     : certificate_text(g, cert));
    return cert.is_basis ? kOk : kVerifyFailed;
}

int cmd_substitute(const std::string& input, const std::string& format,
                   const std::string& plan_file, const std::string& reject,
                   const std::string& candidates_file, const std::string& out) {
    Cfg cfg = load_cfg(input, format);
    PurifyResult purified = purify(cfg);
    if (purified.report.blocking) {
        write_output(out, flaw_report_text(purified.graph, purified.report));
        return kBlockingFlaws;
    }
    const Cfg& g = purified.graph;
    PathSet basis;
    basis.paths = parse_plan_paths(g, read_file(plan_file));

    std::size_t rejected = basis.paths.size();
    if (!reject.empty() &&
        reject.find_first_not_of("0123456789") == std::string::npos) {
        rejected = std::stoul(reject);
    } else {
        std::vector<Path> key = parse_plan_paths(g, reject);
        if (key.size() == 1) {
            for (std::size_t i = 0; i < basis.paths.size(); ++i) {
                if (basis.paths[i].edges == key.front().edges) rejected = i;
            }
        }
    }
    if (rejected >= basis.paths.size()) {
        throw ParseError("--reject does not name a path of the plan");
    }

    std::vector<Path> candidates = parse_plan_paths(g, read_file(candidates_file));
    ClosedCfg closed = close_graph(g);
    PathSet next;
    try {
        next = substitute_path(basis, rejected, candidates, closed);
    } catch (const SubstituteError& e) {
        write_output(out, std::string(e.what()) + "\n");
        return kVerifyFailed;
    }

    std::ostringstream rendered;
    for (std::size_t i = 0; i < next.paths.size(); ++i) {
        rendered << path_text(g, next.paths[i]);
        if (i == next.backbone_index) rendered << "    [backbone]";
        rendered << "\n";
    }
    write_output(out, rendered.str());
    return kOk;
}

int cmd_lower(const std::string& input, const std::string& out) {
    Cfg cfg = lower_ast(parse_minilang(read_file(input)));
    write_output(out, serialize_json_cfg(cfg));
    return kOk;
}

int cmd_gen(std::uint64_t seed, int max_nodes, int max_edges,
            const std::string& out) {
    GenOptions options{seed, max_nodes, max_edges};
    write_output(out, serialize_json_cfg(random_reducible_cfg(options)));
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"independent begin-to-end path planning over control-flow graphs"};
    app.require_subcommand(1);

    std::string input, format = "auto", emit = "text", out, plan_file;
    std::string reject, candidates_file;
    bool dump_decomposition = false;
    std::uint64_t seed = 1;
    int max_nodes = 60, max_edges = 120;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "CFG file (.json, .dot, .mini)")
            ->required();
        cmd->add_option("--format", format, "input format: auto|json|dot|mini");
        cmd->add_option("--out", out, "output file (default stdout)");
    };

    CLI::App* flaws = app.add_subcommand("flaws", "scan for design flaws");
    add_input(flaws);
    flaws->add_option("--emit", emit, "output: text|json");

    CLI::App* paths = app.add_subcommand("paths", "compute the independent paths");
    add_input(paths);
    paths->add_option("--emit", emit, "output: text|json|dot");
    paths->add_flag("--dump-decomposition", dump_decomposition,
                    "include the block/loop decomposition");

    CLI::App* verify = app.add_subcommand("verify", "certify a path plan");
    add_input(verify);
    verify->add_option("plan", plan_file, "plan file (labels or plan JSON)")
        ->required();
    verify->add_option("--emit", emit, "output: text|json");

    CLI::App* substitute =
        app.add_subcommand("substitute", "replace an untestable base path");
    add_input(substitute);
    substitute->add_option("plan", plan_file, "plan file")->required();
    substitute->add_option("--reject", reject, "path to replace (index or labels)")
        ->required();
    substitute
        ->add_option("--candidates", candidates_file, "candidate paths file")
        ->required();

    CLI::App* lower = app.add_subcommand("lower", "lower a mini program to CFG JSON");
    lower->add_option("input", input, "mini-language source")->required();
    lower->add_option("--out", out, "output file (default stdout)");

    CLI::App* gen = app.add_subcommand("gen", "emit a random reducible CFG");
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--max-nodes", max_nodes, "node cap");
    gen->add_option("--max-edges", max_edges, "edge cap");
    gen->add_option("--out", out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(flaws)) return cmd_flaws(input, format, emit, out);
        if (app.got_subcommand(paths)) {
            return cmd_paths(input, format, emit, out, dump_decomposition);
        }
        if (app.got_subcommand(verify)) {
            return cmd_verify(input, format, plan_file, emit, out);
        }
        if (app.got_subcommand(substitute)) {
            return cmd_substitute(input, format, plan_file, reject,
                                  candidates_file, out);
        }
        if (app.got_subcommand(lower)) return cmd_lower(input, out);
        if (app.got_subcommand(gen)) return cmd_gen(seed, max_nodes, max_edges, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
