#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "trs/checker.hpp"
#include "trs/dp.hpp"
#include "trs/graph.hpp"
#include "trs/io.hpp"
#include "trs/unify.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw trs::Error("io_error", "cannot read '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct DpResult {
    trs::Trs modulo;
    std::vector<trs::Rule> pairs;
};

DpResult marked_pairs(const trs::Trs& system) {
    if (auto err = trs::check_dp_preconditions(system))
        throw trs::Error("dp_precondition_failed", err->message());
    trs::MarkResult marked = trs::mark(system, trs::mkdp(system));
    return DpResult{std::move(marked.rules), std::move(marked.pairs)};
}

trs::EdgeFn edge_fn(const std::string& approx, const trs::Trs& modulo) {
    if (approx == "hde")
        return [](const trs::Rule& a, const trs::Rule& b) { return trs::hde_edge(a, b); };
    return [&modulo](const trs::Rule& a, const trs::Rule& b) {
        return trs::dpg_unif_edge(modulo, a, b);
    };
}

int run_check(const std::string& trs_path, const std::string& cert_path, bool json_mode) {
    trs::ParsedTrs parsed = trs::parse_trs(read_file(trs_path));
    trs::Proof proof = trs::parse_certificate(read_file(cert_path), parsed.system.sig());
    trs::Verdict verdict = trs::check(trs::Problem{trs::FullProblem{parsed.system}}, proof);

    if (json_mode) {
        nlohmann::json report;
        report["verdict"] = verdict.accepted() ? "accepted" : "rejected";
        if (!verdict.accepted()) {
            const trs::Rejection& r = verdict.rejection();
            report["path"] = r.path;
            report["code"] = r.code;
            report["reason"] = r.reason;
        }
        std::cout << report.dump(2) << "\n";
    } else if (verdict.accepted()) {
        std::cout << "ACCEPTED\n";
    } else {
        const trs::Rejection& r = verdict.rejection();
        std::cout << "REJECTED\n";
        std::string where;
        for (const std::string& step : r.path) where += (where.empty() ? "" : " / ") + step;
        std::cerr << "at " << where << ": " << r.reason << "\n";
    }
    return verdict.accepted() ? 0 : 1;
}

int run_dp(const std::string& trs_path, bool json_mode) {
    trs::ParsedTrs parsed = trs::parse_trs(read_file(trs_path));
    DpResult dp = marked_pairs(parsed.system);
    if (json_mode) {
        nlohmann::json report;
        report["pairs"] = nlohmann::json::array();
        for (const trs::Rule& p : dp.pairs) report["pairs"].push_back(trs::to_string(p));
        std::cout << report.dump(2) << "\n";
    } else {
        for (const trs::Rule& p : dp.pairs) std::cout << trs::to_string(p) << "\n";
    }
    return 0;
}

int run_graph(const std::string& trs_path, const std::string& approx, bool json_mode) {
    trs::ParsedTrs parsed = trs::parse_trs(read_file(trs_path));
    DpResult dp = marked_pairs(parsed.system);
    trs::DpGraph g = trs::build_graph(edge_fn(approx, dp.modulo), dp.pairs);
    auto components = trs::sccs(g);

    if (json_mode) {
        nlohmann::json report;
        report["approx"] = approx;
        report["pairs"] = nlohmann::json::array();
        for (const trs::Rule& p : g.nodes) report["pairs"].push_back(trs::to_string(p));
        report["adjacency"] = nlohmann::json::array();
        for (const auto& row : g.adjacency) {
            nlohmann::json jrow = nlohmann::json::array();
            for (bool b : row) jrow.push_back(b);
            report["adjacency"].push_back(jrow);
        }
        report["sccs"] = components;
        std::cout << report.dump(2) << "\n";
        return 0;
    }

    std::cout << "pairs:\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        std::cout << "  " << i << ": " << trs::to_string(g.nodes[i]) << "\n";
    std::cout << "edges (" << approx << "):\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (std::size_t j = 0; j < g.nodes.size(); ++j)
            if (g.adjacency[i][j]) std::cout << "  " << i << " -> " << j << "\n";
    std::cout << "sccs (reverse topological):\n";
    for (const auto& comp : components) {
        std::cout << "  {";
        for (std::size_t k = 0; k < comp.size(); ++k)
            std::cout << (k ? " " : "") << comp[k];
        std::cout << "}\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Termination certificate checker for term rewrite systems"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit machine-readable diagnostics");

    std::string trs_path, cert_path, approx = "hde";

    CLI::App* cmd_check = app.add_subcommand("check", "verify a certificate against a system");
    cmd_check->add_option("trs", trs_path, "rule-set file")->required();
    cmd_check->add_option("cert", cert_path, "certificate file")->required();

    CLI::App* cmd_dp = app.add_subcommand("dp", "print the marked dependency pairs");
    cmd_dp->add_option("trs", trs_path, "rule-set file")->required();

    CLI::App* cmd_graph = app.add_subcommand("graph", "print the approximated dependency graph");
    cmd_graph->add_option("trs", trs_path, "rule-set file")->required();
    cmd_graph->add_option("--approx", approx, "edge approximation")
        ->check(CLI::IsMember({"hde", "unif"}));

    try {
        app.parse(argc, argv);
        if (cmd_check->parsed()) return run_check(trs_path, cert_path, json_mode);
        if (cmd_dp->parsed()) return run_dp(trs_path, json_mode);
        return run_graph(trs_path, approx, json_mode);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const trs::Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
