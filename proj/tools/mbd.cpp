// Command-line front end: graph ingestion, solving, verification against the
// published results, and certificate handling.
//
// Exit codes: 0 success / all claims pass, 1 a claim or verification failed,
// 2 usage or parse error, 3 search budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mbd/bounds.hpp"
#include "mbd/errors.hpp"
#include "mbd/graph.hpp"
#include "mbd/solver.hpp"
#include "mbd/strategies.hpp"

using nlohmann::json;
using namespace mbd;

namespace {

Graph load_graph(const std::string& input) {
    std::string trimmed = input;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
        trimmed.erase(trimmed.begin());
    if (trimmed.rfind("gen:", 0) == 0) return parse_graph(trimmed);
    std::ifstream in(input);
    if (!in) throw ParseError(0, "cannot open input file '" + input + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

json count_json(MoveCount c) {
    if (c.is_infinite()) return json("inf");
    return json(c.v);
}

json report_json(const GameValueReport& r) {
    return json{{"outcome", to_string(r.outcome)},
                {"gmb", count_json(r.gmb)},
                {"gmb_prime", count_json(r.gmb_prime)},
                {"gsmb", count_json(r.gsmb)},
                {"gsmb_prime", count_json(r.gsmb_prime)},
                {"nodes", r.nodes_explored},
                {"ms", r.elapsed.count()}};
}

VertexSet parse_vertex_list(const std::string& csv) {
    VertexSet s;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        s.set(std::stoi(tok));
    }
    return s;
}

struct Config {
    std::string input;
    std::uint64_t budget_nodes = std::uint64_t(1) << 62;
    std::int64_t budget_ms = 0;
    int threads = 1;
    bool json_out = false;
    int depth_cap = 0;
    std::string filter;

    SolveOptions options() const {
        SolveOptions o;
        o.max_nodes = budget_nodes;
        o.wall_clock = std::chrono::milliseconds(budget_ms);
        o.threads = threads;
        if (const char* env = std::getenv("MBD_TABLE_ENTRIES"))
            o.max_table_entries = std::strtoull(env, nullptr, 10);
        return o;
    }
};

int cmd_solve(const Config& cfg) {
    Graph g = load_graph(cfg.input);
    SolveOptions opts = cfg.options();

    // very large boards: bounded-depth Staller values instead of a full solve
    if (cfg.depth_cap > 0 && g.order() > 18) {
        auto dgame = staller_value_bounded(g, Player::Dominator, cfg.depth_cap, opts);
        auto sgame = staller_value_bounded(g, Player::Staller, cfg.depth_cap, opts);
        auto fmt = [](const std::optional<MoveCount>& v) {
            return v ? to_string(*v) : std::string("unknown");
        };
        if (cfg.json_out) {
            json out{{"depth_cap", cfg.depth_cap},
                     {"gsmb_bounded", fmt(dgame)},
                     {"gsmb_prime_bounded", fmt(sgame)}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "bounded search, cap " << cfg.depth_cap << "\n"
                      << "gsmb  <= cap: " << fmt(dgame) << "\n"
                      << "gsmb' <= cap: " << fmt(sgame) << "\n";
        }
        return 0;
    }

    GameValueReport r = solve(g, opts);
    if (cfg.json_out) {
        std::cout << report_json(r).dump(2) << "\n";
    } else {
        std::cout << "outcome " << to_string(r.outcome) << "\n"
                  << "gmb    " << to_string(r.gmb) << "\n"
                  << "gmb'   " << to_string(r.gmb_prime) << "\n"
                  << "gsmb   " << to_string(r.gsmb) << "\n"
                  << "gsmb'  " << to_string(r.gsmb_prime) << "\n"
                  << "nodes  " << r.nodes_explored << "\n"
                  << "ms     " << r.elapsed.count() << "\n";
    }
    return 0;
}

int cmd_outcome(const Config& cfg) {
    Graph g = load_graph(cfg.input);
    Outcome o = solve_outcome(g, cfg.options());
    if (cfg.json_out)
        std::cout << json{{"outcome", to_string(o)}}.dump(2) << "\n";
    else
        std::cout << to_string(o) << "\n";
    return 0;
}

int cmd_verify_paper(const Config& cfg) {
    auto results = verify_claims(cfg.filter, cfg.options());
    bool any_fail = false;
    json arr = json::array();
    for (const auto& r : results) {
        any_fail |= r.status == ClaimStatus::fail;
        if (cfg.json_out) {
            std::string expected;
            if (r.claim.quantity == Quantity::outcome)
                expected = to_string(r.claim.expected_outcome);
            else if (r.claim.quantity == Quantity::bound_interval)
                expected = "[" + to_string(r.claim.expected_interval.lo) + "," +
                           to_string(r.claim.expected_interval.hi) + "]";
            else
                expected = to_string(r.claim.expected_count);
            arr.push_back(json{{"id", r.claim.id},
                               {"expected", expected},
                               {"computed", r.computed},
                               {"status", r.status == ClaimStatus::pass   ? "pass"
                                          : r.status == ClaimStatus::fail ? "fail"
                                                                          : "skipped"},
                               {"nodes", r.nodes},
                               {"ms", r.millis}});
        } else {
            std::cout << format_claim_line(r) << "\n";
        }
    }
    if (cfg.json_out) std::cout << arr.dump(2) << "\n";
    if (!cfg.json_out) {
        int pass = 0, fail = 0, skip = 0;
        for (const auto& r : results) {
            if (r.status == ClaimStatus::pass) ++pass;
            if (r.status == ClaimStatus::fail) ++fail;
            if (r.status == ClaimStatus::skipped) ++skip;
        }
        std::cout << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
    }
    return any_fail ? 1 : 0;
}

int cmd_pairing(const Config& cfg, const std::string& anchors, const std::string& staller,
                const std::string& check_file) {
    Graph g = load_graph(cfg.input);
    if (!check_file.empty()) {
        std::ifstream in(check_file);
        if (!in) throw ParseError(0, "cannot open certificate file '" + check_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        PairingCertificate cert = parse_pairing(buf.str());
        MoveCount bound = pairing_playout(g, cert);
        std::cout << "certificate valid; Dominator wins within " << to_string(bound)
                  << " moves\n";
        return 0;
    }
    VertexSet x = parse_vertex_list(anchors);
    VertexSet y = parse_vertex_list(staller);
    auto cert = find_pairing(g, x, y);
    if (!cert) {
        std::cout << "no pairing certificate exists for these sets\n";
        return 1;
    }
    MoveCount bound = pairing_playout(g, *cert);
    std::cout << serialize_pairing(*cert);
    std::cout << "# Dominator wins within " << to_string(bound) << " moves\n";
    return 0;
}

int cmd_cover(const Config& cfg) {
    Graph g = load_graph(cfg.input);
    auto witness = find_nontrivial_path_cover(g);
    bool condition = has_nontrivial_path_cover(g, CoverMethod::IsolationCondition);
    if (witness.has_value() != condition)
        throw std::logic_error("cover search and isolation condition disagree");
    if (cfg.json_out) {
        json out{{"exists", witness.has_value()}};
        if (witness) {
            json paths = json::array();
            for (const auto& p : witness->paths) paths.push_back(p);
            out["paths"] = paths;
        }
        std::cout << out.dump(2) << "\n";
    } else if (witness) {
        std::cout << "nontrivial path cover exists\n";
        for (const auto& p : witness->paths) {
            std::cout << "path:";
            for (int v : p) std::cout << " " << v;
            std::cout << "\n";
        }
    } else {
        std::cout << "no nontrivial path cover\n";
    }
    return 0;
}

int cmd_dominate(const Config& cfg) {
    Graph g = load_graph(cfg.input);
    int gamma = domination_number(g, cfg.budget_nodes);
    if (cfg.json_out)
        std::cout << json{{"gamma", gamma}}.dump(2) << "\n";
    else
        std::cout << gamma << "\n";
    return 0;
}

int cmd_certificate(const Config& cfg, const std::string& which_name,
                    const std::string& out_file) {
    Graph g = load_graph(cfg.input);
    WhichValue which;
    if (which_name == "gmb")
        which = WhichValue::Gmb;
    else if (which_name == "gmbp")
        which = WhichValue::GmbPrime;
    else if (which_name == "gsmb")
        which = WhichValue::Gsmb;
    else if (which_name == "gsmbp")
        which = WhichValue::GsmbPrime;
    else
        throw CLI::ValidationError("--for must be one of gmb, gmbp, gsmb, gsmbp");

    StrategyCertificate cert = extract_certificate(g, which, cfg.options());
    bool ok = verify_certificate(g, cert);
    if (!out_file.empty()) {
        json entries = json::array();
        for (const auto& [pos, v] : cert.move_table) {
            json dom = json::array(), sta = json::array();
            pos.dominator.for_each([&](int u) { dom.push_back(u); });
            pos.staller.for_each([&](int u) { sta.push_back(u); });
            entries.push_back(json{{"dominator", dom}, {"staller", sta}, {"move", v}});
        }
        json doc{{"for", which_name},
                 {"claimed_value", count_json(cert.claimed_value)},
                 {"moves", entries}};
        std::ofstream out(out_file);
        out << doc.dump(1) << "\n";
    }
    if (cfg.json_out) {
        std::cout << json{{"for", which_name},
                          {"claimed_value", count_json(cert.claimed_value)},
                          {"entries", cert.move_table.size()},
                          {"verified", ok}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "certificate for " << which_name << ": value "
                  << to_string(cert.claimed_value) << ", " << cert.move_table.size()
                  << " table entries, replay " << (ok ? "verified" : "FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maker-Breaker domination game solver"};
    app.require_subcommand(1);

    Config cfg;
    std::string anchors, staller, check_file, which = "gmb", cert_out;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("input,--input", cfg.input,
                            "edge-list file or generator expression (gen: ...)")
                ->required();
        cmd->add_option("--budget-nodes", cfg.budget_nodes, "max search nodes");
        cmd->add_option("--budget-ms", cfg.budget_ms, "wall-clock limit in ms");
        cmd->add_option("--threads", cfg.threads, "solver worker threads")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--json", cfg.json_out, "machine-readable output");
    };

    CLI::App* solve_cmd = app.add_subcommand("solve", "outcome and all four move counts");
    add_common(solve_cmd, true);
    solve_cmd->add_option("--depth-cap", cfg.depth_cap,
                          "bounded Staller search on graphs with more than 18 vertices");

    CLI::App* outcome_cmd = app.add_subcommand("outcome", "winner-only searches");
    add_common(outcome_cmd, true);

    CLI::App* verify_cmd = app.add_subcommand("verify-paper", "run the published-results registry");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--filter", cfg.filter, "only claims whose id/citation contains TAG");

    CLI::App* pairing_cmd = app.add_subcommand("pairing", "find or validate a pairing certificate");
    add_common(pairing_cmd, true);
    pairing_cmd->add_option("--anchors", anchors, "Dominator's pre-played vertices (csv)");
    pairing_cmd->add_option("--staller", staller, "Staller's pre-played vertices (csv)");
    pairing_cmd->add_option("--check", check_file, "validate this certificate file instead");

    CLI::App* cover_cmd = app.add_subcommand("cover", "nontrivial path cover existence + witness");
    add_common(cover_cmd, true);

    CLI::App* dominate_cmd = app.add_subcommand("dominate", "exact domination number");
    add_common(dominate_cmd, true);

    CLI::App* cert_cmd = app.add_subcommand("certificate", "extract and verify a strategy");
    add_common(cert_cmd, true);
    cert_cmd->add_option("--for", which, "invariant: gmb, gmbp, gsmb, gsmbp");
    cert_cmd->add_option("--out", cert_out, "write the move table to this file (JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(cfg);
        if (outcome_cmd->parsed()) return cmd_outcome(cfg);
        if (verify_cmd->parsed()) return cmd_verify_paper(cfg);
        if (pairing_cmd->parsed()) return cmd_pairing(cfg, anchors, staller, check_file);
        if (cover_cmd->parsed()) return cmd_cover(cfg);
        if (dominate_cmd->parsed()) return cmd_dominate(cfg);
        if (cert_cmd->parsed()) return cmd_certificate(cfg, which, cert_out);
    } catch (const ResourceLimit& e) {
        std::cerr << "budget exhausted: " << e.what() << " (nodes=" << e.nodes_explored << ")\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
