// tg: command-line front end for the temporal-graph toolkit.
//
// Exit codes: 0 success (including infeasible results), 2 usage error,
// 3 input error, 4 budget exceeded, 5 internal verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tempo/decomposition.hpp"
#include "tempo/expansion.hpp"
#include "tempo/export.hpp"
#include "tempo/generators.hpp"
#include "tempo/reach.hpp"
#include "tempo/solvers.hpp"
#include "tempo/temporal_graph.hpp"
#include "tempo/twidth.hpp"

using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitBudget = 4;
constexpr int kExitVerification = 5;

struct VerificationFailure : std::runtime_error {
    explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

tempo::TemporalGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tempo::ParseError(path + ": cannot open");
    try {
        return tempo::parse_temporal_graph(in);
    } catch (const tempo::ParseError& e) {
        throw tempo::ParseError(path + ": " + e.what());
    }
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw tempo::ParseError(path + ": cannot open for writing");
    return file;
}

json walk_to_json(const tempo::TemporalWalk& w) {
    json edges = json::array();
    for (const auto& e : w.edges) edges.push_back({e.u, e.v, e.t});
    return {{"edges", edges}, {"arrival", w.arrival()}};
}

json edges_to_json(const std::vector<tempo::TemporalEdge>& es) {
    json out = json::array();
    for (const auto& e : es) out.push_back({e.u, e.v, e.t});
    return out;
}

void emit_envelope(const json& envelope, const std::string& format) {
    if (format == "json") {
        std::cout << envelope.dump(2) << '\n';
        return;
    }
    std::cout << "status: " << envelope["status"].get<std::string>() << '\n';
    if (!envelope["value"].is_null()) std::cout << "value: " << envelope["value"] << '\n';
    if (!envelope["witness"].is_null()) std::cout << "witness: " << envelope["witness"] << '\n';
}

// --- solve subcommand -------------------------------------------------------

struct SolveOptions {
    std::string problem;
    std::string graph_path;
    std::string td_path;
    std::string format = "text";
    bool oracle = false;
    bool strict = false;
    bool return_to_base = false;
    bool always_connected = false;
    int s = 0, z = 1, root = 0;
    int k = -1, h = 0;
    int delta = 1;
    int alpha = -1, beta = -1;
};

tempo::TreeDecomposition load_or_compute_td(const SolveOptions& opt, const tempo::StaticGraph& g) {
    if (!opt.td_path.empty()) {
        std::ifstream in(opt.td_path);
        if (!in) throw tempo::ParseError(opt.td_path + ": cannot open");
        return tempo::read_td(in);
    }
    return tempo::treewidth_heuristic(g).second;
}

int run_solve(const SolveOptions& opt) {
    tempo::TemporalGraph g = load_graph(opt.graph_path);
    json envelope{{"status", "infeasible"}, {"value", nullptr}, {"witness", nullptr}};

    if (opt.problem == "separation") {
        tempo::SeparationInstance inst{opt.s, opt.z, opt.strict};
        const int k = opt.k < 0 ? g.num_vertices() : opt.k;
        tempo::SeparationResult res;
        if (opt.oracle) {
            res = tempo::separation_bruteforce(g, inst, k);
        } else {
            res = tempo::separation_dp(g, inst, k, load_or_compute_td(opt, g.underlying_graph()));
        }
        if (res.feasible) {
            // Re-verify: no surviving s-z walk.
            std::vector<char> removed(g.num_vertices(), 0);
            for (tempo::Vertex v : res.separator) removed[v] = 1;
            if (tempo::z_reachable(g, inst, removed))
                throw VerificationFailure("separator does not separate");
            envelope["status"] = "feasible";
            envelope["value"] = res.separator.size();
            envelope["witness"] = res.separator;
        }
    } else if (opt.problem == "rmtc") {
        tempo::RmtcResult res;
        if (opt.oracle) {
            res = tempo::rmtc_bruteforce(g, opt.root);
        } else {
            res = tempo::rmtc_dp(g, opt.root, load_or_compute_td(opt, g.underlying_graph()));
        }
        if (res.feasible) {
            tempo::TemporalGraph sub(g.num_vertices(), g.lifetime(), res.edges);
            if (!tempo::temporally_r_connected(sub, opt.root))
                throw VerificationFailure("r-MTC witness is not r-connected");
            envelope["status"] = "feasible";
            envelope["value"] = res.total_weight.to_decimal_string();
            envelope["witness"] = edges_to_json(res.edges);
        }
    } else if (opt.problem == "matching") {
        auto res = tempo::matching_exact(g, opt.delta);
        for (std::size_t i = 0; i < res.matching.size(); ++i)
            for (std::size_t j = i + 1; j < res.matching.size(); ++j)
                if (!tempo::matching_pair_ok(res.matching[i], res.matching[j], opt.delta))
                    throw VerificationFailure("matching violates the delta condition");
        envelope["status"] = "feasible";
        envelope["value"] = res.matching.size();
        envelope["witness"] = edges_to_json(res.matching);
        if (!res.exact) envelope["note"] = "greedy lower bound (instance above exact budget)";
    } else if (opt.problem == "trted") {
        const int alpha = opt.alpha < 0 ? 1 : opt.alpha;
        const int beta = opt.beta < 0 ? 1 : opt.beta;
        auto res = tempo::trted_bruteforce(g, alpha, beta, opt.k < 0 ? 0 : opt.k, opt.h);
        if (res.feasible) {
            tempo::TemporalGraph reduced = g.remove_edges(res.deleted);
            if (tempo::max_strict_path_reach(reduced, alpha, beta) > opt.h)
                throw VerificationFailure("deletion set does not bound reach");
            envelope["status"] = "feasible";
            envelope["value"] = res.deleted.size();
            envelope["witness"] = edges_to_json(res.deleted);
        }
    } else if (opt.problem == "reach") {
        tempo::WalkQuery q;
        q.source = opt.s;
        q.strict = opt.strict;
        if (opt.alpha >= 0) q.alpha = opt.alpha;
        if (opt.beta >= 0) q.beta = opt.beta;
        auto set = tempo::reachable_set(g, q);
        envelope["status"] = "feasible";
        envelope["value"] = set.size();
        envelope["witness"] = set;
    } else if (opt.problem == "foremost") {
        tempo::WalkQuery q;
        q.source = opt.s;
        q.target = opt.z;
        q.strict = opt.strict;
        if (opt.alpha >= 0) q.alpha = opt.alpha;
        if (opt.beta >= 0) q.beta = opt.beta;
        auto w = tempo::foremost_walk(g, q);
        if (w) {
            if (!tempo::verify_walk(g, *w, q))
                throw VerificationFailure("foremost walk fails verification");
            envelope["status"] = "feasible";
            envelope["value"] = w->arrival();
            envelope["witness"] = walk_to_json(*w);
            if (opt.format != "json") {
                // v0 -(t1)- v1 -(t2)- ... vk
                auto seq = w->vertex_sequence(q.source);
                std::string line = std::to_string(seq[0]);
                for (std::size_t i = 0; i < w->edges.size(); ++i)
                    line += " -(" + std::to_string(w->edges[i].t) + ")- " +
                            std::to_string(seq[i + 1]);
                std::cout << line << '\n';
            }
        }
    } else if (opt.problem == "explore") {
        std::optional<tempo::ExplorationSchedule> sched;
        if (opt.always_connected) {
            sched = tempo::explore_connected(g, opt.s);
        } else {
            sched = tempo::explore_bruteforce(g, opt.s, opt.return_to_base);
        }
        if (sched) {
            if (!tempo::schedule_explores_all(g, *sched, opt.always_connected ? false : opt.return_to_base))
                throw VerificationFailure("schedule replay failed");
            json moves = json::array();
            for (const auto& mv : sched->moves) {
                if (mv.traverse)
                    moves.push_back({{"t", mv.time}, {"edge", {mv.edge.u, mv.edge.v, mv.edge.t}}});
                else
                    moves.push_back({{"t", mv.time}, {"stay", true}});
            }
            auto replay = tempo::replay_schedule(g, *sched);
            envelope["status"] = "feasible";
            envelope["value"] = replay.last_traversal_time;
            envelope["witness"] = moves;
        }
    } else {
        std::cerr << "unknown problem '" << opt.problem
                  << "' (expected separation|rmtc|matching|trted|explore|reach|foremost)\n";
        return kExitUsage;
    }
    emit_envelope(envelope, opt.format);
    return 0;
}

// --- params subcommand -------------------------------------------------------

int run_params(const std::string& path, std::vector<int> deltas, bool heuristic, int budget,
               const std::string& format) {
    tempo::TemporalGraph g = load_graph(path);
    if (deltas.empty())
        for (int d = 1; d <= g.lifetime(); ++d) deltas.push_back(d);
    auto report = tempo::width_report(
        g, std::vector<tempo::TimeStep>(deltas.begin(), deltas.end()),
        heuristic ? tempo::WidthMode::Heuristic : tempo::WidthMode::Exact, budget);

    // The chain tw_inf <= tw_delta <= tw_down <= ttw must hold whenever all
    // values are exact; a violation is an internal error by construction.
    if (report.tw_layer_exact && report.tw_underlying_exact) {
        bool ok = report.tw_layer_max <= report.tw_underlying;
        for (const auto& [d, val] : report.tw_slice)
            if (val.second)
                ok = ok && report.tw_layer_max <= val.first && val.first <= report.tw_underlying;
        if (report.ttw_exact)
            ok = ok && report.tw_underlying <= report.ttw &&
                 report.ttw <= (report.tw_underlying + 1) * g.lifetime() - 1;
        if (!ok) throw VerificationFailure("width parameter ordering violated");
    }

    auto tag = [](bool exact) { return exact ? "exact" : "heuristic"; };
    if (format == "json") {
        json slices = json::object();
        for (const auto& [d, val] : report.tw_slice)
            slices[std::to_string(d)] = {{"value", val.first}, {"mode", tag(val.second)}};
        json out{{"tw_layer_max", {{"value", report.tw_layer_max}, {"mode", tag(report.tw_layer_exact)}}},
                 {"tw_underlying", {{"value", report.tw_underlying}, {"mode", tag(report.tw_underlying_exact)}}},
                 {"tw_slice", slices},
                 {"ttw", {{"value", report.ttw}, {"mode", tag(report.ttw_exact)}}}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "tw_inf " << report.tw_layer_max << " (" << tag(report.tw_layer_exact) << ")\n";
        for (const auto& [d, val] : report.tw_slice)
            std::cout << "tw_slice[" << d << "] " << val.first << " (" << tag(val.second) << ")\n";
        std::cout << "tw_down " << report.tw_underlying << " (" << tag(report.tw_underlying_exact)
                  << ")\n";
        std::cout << "ttw " << report.ttw << " (" << tag(report.ttw_exact) << ")\n";
    }
    return 0;
}

// --- gen subcommand ----------------------------------------------------------

tempo::Sat3Formula parse_formula(const std::string& text) {
    tempo::Sat3Formula f;
    std::stringstream clauses(text);
    std::string clause;
    while (std::getline(clauses, clause, '/')) {
        std::istringstream lits(clause);
        std::vector<int> c;
        int lit;
        while (lits >> lit) {
            c.push_back(lit);
            f.num_vars = std::max(f.num_vars, lit > 0 ? lit : -lit);
        }
        if (!c.empty()) f.clauses.push_back(c);
    }
    return f;
}

tempo::StaticGraph parse_edge_list(int n, const std::string& text) {
    tempo::StaticGraph g(n);
    std::stringstream edges(text);
    std::string item;
    while (std::getline(edges, item, ';')) {
        if (item.empty()) continue;
        auto dash = item.find('-');
        if (dash == std::string::npos) throw tempo::ParseError("edge list entries must be u-v");
        g.add_edge(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    return g;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"temporal-graph algorithms toolkit"};
    app.require_subcommand(1);

    std::string path, out_path, sidecar_path, format = "text";
    bool heuristic = false;
    int budget = 25;

    // info
    auto* info = app.add_subcommand("info", "summarize a .tg file");
    info->add_option("file", path)->required();
    info->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // params
    auto* params = app.add_subcommand("params", "width parameters of a temporal graph");
    params->add_option("file", path)->required();
    std::vector<int> deltas;
    params->add_option("--delta", deltas, "window lengths for tw_slice");
    params->add_flag("--heuristic", heuristic, "use the min-fill heuristic");
    bool exact_flag = false;
    params->add_flag("--exact", exact_flag, "use the exact solver (default)");
    params->add_option("--budget-n", budget, "vertex budget for the exact solver");
    params->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // expand / linegraph / labelgraph
    auto* expand = app.add_subcommand("expand", "static expansion of a temporal graph");
    bool strict_exp = false, undirected = false;
    expand->add_option("file", path)->required();
    expand->add_flag("--strict", strict_exp);
    expand->add_flag("--undirected", undirected);
    expand->add_option("-o,--output", out_path);
    expand->add_option("--format", format)->check(CLI::IsMember({"dot", "dimacs", "text"}));

    auto* linegraph = app.add_subcommand("linegraph", "delta-temporal line graph");
    int lg_delta = 1;
    linegraph->add_option("file", path)->required();
    linegraph->add_option("--delta", lg_delta)->required();
    linegraph->add_option("-o,--output", out_path);
    linegraph->add_option("--format", format)->check(CLI::IsMember({"dot", "dimacs", "text"}));

    auto* labelgraph = app.add_subcommand("labelgraph", "bit-label graph");
    labelgraph->add_option("file", path)->required();
    labelgraph->add_option("-o,--output", out_path);
    labelgraph->add_option("--format", format)->check(CLI::IsMember({"dot", "text"}));

    // tdc
    auto* tdc = app.add_subcommand("tdc", "tree decomposition of the underlying graph");
    tdc->add_option("file", path)->required();
    tdc->add_flag("--heuristic", heuristic);
    tdc->add_option("--budget-n", budget);
    tdc->add_option("-o,--output", out_path);

    // validate
    auto* validate = app.add_subcommand("validate", "validate a decomposition against a graph");
    std::string td_path, ttdc_path;
    validate->add_option("file", path)->required();
    validate->add_option("--td", td_path);
    validate->add_option("--ttdc", ttdc_path);

    // solve
    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "run a problem solver");
    solve->add_option("problem", solve_opt.problem)->required();
    solve->add_option("file", solve_opt.graph_path)->required();
    solve->add_option("--td", solve_opt.td_path, "tree decomposition input (.td)");
    solve->add_flag("--oracle", solve_opt.oracle, "force the brute-force oracle");
    solve->add_flag("--strict", solve_opt.strict);
    bool nonstrict = false;
    solve->add_flag("--nonstrict", nonstrict);
    solve->add_flag("--return-to-base", solve_opt.return_to_base);
    solve->add_flag("--always-connected", solve_opt.always_connected);
    solve->add_option("-s,--source", solve_opt.s);
    solve->add_option("-z,--target", solve_opt.z);
    solve->add_option("-r,--root", solve_opt.root);
    solve->add_option("-k", solve_opt.k);
    solve->add_option("--reach-bound", solve_opt.h);
    solve->add_option("--delta", solve_opt.delta);
    solve->add_option("--alpha", solve_opt.alpha);
    solve->add_option("--beta", solve_opt.beta);
    solve->add_option("--format", solve_opt.format)->check(CLI::IsMember({"text", "json"}));

    // gen
    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    auto* gen_sat = gen->add_subcommand("sat", "3-SAT(3) -> RTB-TGE star instance");
    std::string formula;
    gen_sat->add_option("--formula", formula, "clauses separated by '/', literals as signed ints")
        ->required();
    gen_sat->add_option("-o,--output", out_path);
    gen_sat->add_option("--sidecar", sidecar_path);

    auto* gen_clique = gen->add_subcommand("clique", "Clique -> (alpha,beta)-TRTED instance");
    int gc_n = 1, gc_r = 1, gc_alpha = 1, gc_beta = 2;
    std::string gc_edges;
    gen_clique->add_option("-n", gc_n)->required();
    gen_clique->add_option("-r", gc_r)->required();
    gen_clique->add_option("--edges", gc_edges, "semicolon-separated u-v list");
    gen_clique->add_option("--alpha", gc_alpha);
    gen_clique->add_option("--beta", gc_beta);
    gen_clique->add_option("-o,--output", out_path);
    gen_clique->add_option("--sidecar", sidecar_path);

    auto* gen_random_cmd = gen->add_subcommand("random", "independent (pair,time) coin flips");
    int gr_n = 1, gr_tau = 1;
    double gr_p = 0.5;
    std::uint64_t gr_seed = 0;
    bool gr_weighted = false;
    gen_random_cmd->add_option("-n", gr_n)->required();
    gen_random_cmd->add_option("--tau", gr_tau)->required();
    gen_random_cmd->add_option("-p", gr_p);
    gen_random_cmd->add_option("--seed", gr_seed);
    gen_random_cmd->add_flag("--weighted", gr_weighted);
    gen_random_cmd->add_option("-o,--output", out_path);

    auto* gen_conn = gen->add_subcommand("connected", "random graph with connected layers");
    gen_conn->add_option("-n", gr_n)->required();
    gen_conn->add_option("--tau", gr_tau)->required();
    gen_conn->add_option("-p", gr_p);
    gen_conn->add_option("--seed", gr_seed);
    gen_conn->add_option("-o,--output", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*info) {
            tempo::TemporalGraph g = load_graph(path);
            auto iso = g.isolated_vertices();
            if (format == "json") {
                json layers = json::array();
                for (int t = 1; t <= g.lifetime(); ++t)
                    layers.push_back(g.layer(t).num_edges());
                json out{{"n", g.num_vertices()},
                         {"tau", g.lifetime()},
                         {"m", g.num_edges()},
                         {"layer_edges", layers},
                         {"isolated", iso}};
                std::cout << out.dump(2) << '\n';
            } else {
                std::cout << "n=" << g.num_vertices() << " tau=" << g.lifetime()
                          << " m=" << g.num_edges() << '\n';
                for (int t = 1; t <= g.lifetime(); ++t)
                    std::cout << "layer " << t << ": " << g.layer(t).num_edges() << " edges\n";
                std::cout << "isolated: " << iso.size() << '\n';
            }
            return 0;
        }
        if (*params) return run_params(path, deltas, heuristic, budget, format);
        if (*expand) {
            tempo::TemporalGraph g = load_graph(path);
            std::ofstream file;
            std::ostream& out = open_output(file, out_path);
            if (undirected) {
                auto u = tempo::undirected_static_expansion(g);
                if (format == "dot") tempo::write_dot(u, out);
                else if (format == "dimacs") tempo::write_dimacs(u, out);
                else {
                    out << u.num_vertices() << ' ' << u.num_edges() << '\n';
                    for (const auto& [a, b] : u.edges()) out << a << ' ' << b << '\n';
                }
            } else {
                auto h = strict_exp ? tempo::strict_static_expansion(g) : tempo::static_expansion(g);
                if (format == "dot") tempo::write_dot(h, out);
                else if (format == "dimacs") tempo::write_dimacs(h, out);
                else {
                    out << h.num_vertices() << ' ' << h.num_arcs() << '\n';
                    for (const auto& [a, b] : h.arcs()) out << a << ' ' << b << '\n';
                }
            }
            return 0;
        }
        if (*linegraph) {
            tempo::TemporalGraph g = load_graph(path);
            auto lg = tempo::delta_temporal_line_graph(g, lg_delta);
            std::ofstream file;
            std::ostream& out = open_output(file, out_path);
            if (format == "dot") tempo::write_dot(lg, out);
            else if (format == "dimacs") tempo::write_dimacs(lg, out);
            else {
                out << lg.num_vertices() << ' ' << lg.num_edges() << '\n';
                for (const auto& [a, b] : lg.edges()) out << a << ' ' << b << '\n';
            }
            return 0;
        }
        if (*labelgraph) {
            tempo::TemporalGraph g = load_graph(path);
            auto lg = tempo::label_graph(g);
            std::ofstream file;
            std::ostream& out = open_output(file, out_path);
            if (format == "dot") tempo::write_dot(lg, out);
            else {
                for (const auto& [e, bits] : lg.label)
                    out << e.first << ' ' << e.second << ' ' << bits << '\n';
            }
            return 0;
        }
        if (*tdc) {
            tempo::TemporalGraph g = load_graph(path);
            auto under = g.underlying_graph();
            auto [w, dec] = heuristic ? tempo::treewidth_heuristic(under)
                                      : tempo::treewidth_exact(under, budget);
            auto check = tempo::validate_tdc(under, dec);
            if (!check.ok()) throw VerificationFailure("computed decomposition invalid: " + check.detail);
            std::ofstream file;
            std::ostream& out = open_output(file, out_path);
            tempo::write_td(dec, g.num_vertices(), out);
            return 0;
        }
        if (*validate) {
            tempo::TemporalGraph g = load_graph(path);
            if (!td_path.empty()) {
                std::ifstream in(td_path);
                if (!in) throw tempo::ParseError(td_path + ": cannot open");
                auto d = tempo::read_td(in);
                auto r = tempo::validate_tdc(g.underlying_graph(), d);
                std::cout << "structure: " << (r.structure_ok ? "pass" : "fail") << '\n'
                          << "vertices covered: " << (r.vertices_covered ? "pass" : "fail") << '\n'
                          << "edges covered: " << (r.edges_covered ? "pass" : "fail") << '\n'
                          << "occurrences connected: " << (r.occurrences_connected ? "pass" : "fail")
                          << '\n';
                if (!r.ok()) std::cout << "witness: " << r.detail << '\n';
                std::cout << (r.ok() ? "valid" : "invalid") << " width=" << d.width() << '\n';
            } else if (!ttdc_path.empty()) {
                std::ifstream in(ttdc_path);
                if (!in) throw tempo::ParseError(ttdc_path + ": cannot open");
                auto d = tempo::read_ttdc(in);
                auto r = tempo::validate_ttdc(g, d);
                std::cout << "structure: " << (r.structure_ok ? "pass" : "fail") << '\n'
                          << "appearances covered: " << (r.appearances_covered ? "pass" : "fail") << '\n'
                          << "edges co-bagged: " << (r.edges_cobagged ? "pass" : "fail") << '\n'
                          << "successions co-bagged: " << (r.successions_cobagged ? "pass" : "fail")
                          << '\n'
                          << "occurrences connected: " << (r.occurrences_connected ? "pass" : "fail")
                          << '\n';
                if (!r.ok()) std::cout << "witness: " << r.detail << '\n';
                std::cout << (r.ok() ? "valid" : "invalid") << " width=" << d.width() << '\n';
            } else {
                std::cerr << "validate requires --td or --ttdc\n";
                return kExitUsage;
            }
            return 0;
        }
        if (*solve) {
            if (solve_opt.strict && nonstrict) {
                std::cerr << "--strict and --nonstrict are mutually exclusive\n";
                return kExitUsage;
            }
            return run_solve(solve_opt);
        }
        if (*gen) {
            tempo::TemporalGraph result(1, 1, {});
            json sidecar;
            if (*gen_sat) {
                auto f = parse_formula(formula);
                auto built = tempo::gen_rtbtge_from_sat(f);
                result = built.graph;
                sidecar["kind"] = "rtbtge-from-sat";
                sidecar["source"] = built.source;
                json vars = json::array();
                for (const auto& v : built.variables)
                    vars.push_back({{"false_in", v.false_in}, {"mid", v.mid}, {"true_out", v.true_out}});
                sidecar["variables"] = vars;
                json cls = json::array();
                for (const auto& ws : built.clause_windows) {
                    json windows = json::array();
                    for (const auto& [in, ex] : ws) windows.push_back({in, ex});
                    cls.push_back(windows);
                }
                sidecar["clause_windows"] = cls;
            } else if (*gen_clique) {
                tempo::CliqueInstance ci{parse_edge_list(gc_n, gc_edges), gc_r};
                auto inst = tempo::gen_trted_from_clique(ci, gc_alpha, gc_beta);
                result = inst.graph;
                sidecar = {{"kind", "trted-from-clique"}, {"alpha", inst.alpha}, {"beta", inst.beta},
                           {"k", inst.k},                {"h", inst.h},         {"x", inst.x},
                           {"y", inst.y},                {"p_leaves", inst.p_leaf},
                           {"e_leaves", inst.e_leaf}};
            } else if (*gen_random_cmd) {
                result = gr_weighted ? tempo::gen_random_weighted(gr_n, gr_tau, gr_p, gr_seed)
                                     : tempo::gen_random(gr_n, gr_tau, gr_p, gr_seed);
                sidecar = {{"kind", "random"}, {"seed", gr_seed}, {"p", gr_p}};
            } else if (*gen_conn) {
                result = tempo::gen_connected_layers(gr_n, gr_tau, gr_p, gr_seed);
                sidecar = {{"kind", "connected-layers"}, {"seed", gr_seed}, {"extra_p", gr_p}};
            }
            std::ofstream file;
            std::ostream& out = open_output(file, out_path);
            tempo::serialize_temporal_graph(result, out);
            if (!sidecar_path.empty()) {
                std::ofstream sc(sidecar_path);
                if (!sc) throw tempo::ParseError(sidecar_path + ": cannot open for writing");
                sc << sidecar.dump(2) << '\n';
            }
            return 0;
        }
    } catch (const VerificationFailure& e) {
        std::cerr << "internal verification failure: " << e.what() << '\n';
        return kExitVerification;
    } catch (const tempo::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const tempo::ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const tempo::DomainError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
