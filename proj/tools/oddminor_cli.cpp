// oddminor: construct, verify and brute-force cross-check odd minor
// certificates in graphs with independence number at most two.
//
// Exit codes: 0 success, 1 oracle found nothing, 2 bad input/precondition,
// 3 verification failure, 4 theorem-contradiction event.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddminor/construct.hpp"
#include "oddminor/errors.hpp"
#include "oddminor/invariants.hpp"
#include "oddminor/json_io.hpp"
#include "oddminor/oracle.hpp"
#include "oddminor/sweep.hpp"

using nlohmann::json;
using namespace oddminor;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitVerification = 3;
constexpr int kExitContradiction = 4;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = slurp(path);
    if (format == "graph6") {
        // first nonempty line
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) return parse_graph6(line);
        throw parse_error("no graph6 line in input");
    }
    return parse_edge_list(text);  // handles both plain and dimacs
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
    }
}

struct IoOpts {
    std::string input = "-";
    std::string format = "graph6";
    std::string output;
};

void add_io(CLI::App* cmd, IoOpts& io) {
    cmd->add_option("-i,--input", io.input, "input file or - for stdin");
    cmd->add_option("--format", io.format, "graph format")
        ->check(CLI::IsMember({"graph6", "dimacs", "edges"}));
    cmd->add_option("-o,--output", io.output, "output file (default stdout)");
}

json error_json(const char* reason, const std::exception& e) {
    return {{"error", reason}, {"message", e.what()}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"odd complete-bipartite / odd clique minor workbench for alpha<=2 graphs"};
    app.require_subcommand(1);

    IoOpts io;

    auto* inv = app.add_subcommand("invariants", "report n, alpha, chi, omega, kappa");
    add_io(inv, io);

    auto* find = app.add_subcommand("find", "construct a verified odd-minor certificate");
    add_io(find, io);
    int ell = 1;
    std::string pattern_kind = "bipartite";
    find->add_option("--ell", ell, "left part size");
    find->add_option("--pattern", pattern_kind, "target shape")
        ->check(CLI::IsMember({"bipartite", "half-order", "clique"}));

    auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
    add_io(verify, io);
    std::string cert_path;
    bool special = false;
    verify->add_option("--certificate", cert_path, "certificate JSON file")->required();
    verify->add_flag("--special", special, "also require the special condition");

    auto* oracle = app.add_subcommand("oracle", "brute-force odd-model existence search");
    add_io(oracle, io);
    int o_ell = 1, o_right = -1, o_size = 0;
    std::string o_kind = "bipartite";
    bool o_special = false;
    oracle->add_option("--pattern", o_kind, "pattern kind")
        ->check(CLI::IsMember({"clique", "bipartite", "bipartite_plus_clique"}));
    oracle->add_option("--ell", o_ell, "left part size (bipartite kinds)");
    oracle->add_option("--right", o_right, "right part size (default chi - ell)");
    oracle->add_option("--size", o_size, "clique size (clique kind)");
    oracle->add_flag("--special", o_special, "require the special condition");

    auto* sweep = app.add_subcommand("sweep", "run the theorem over many graphs");
    SweepOptions sopts;
    std::string sweep_mode = "exhaustive", sweep_input = "-", sweep_output;
    int sweep_n = 5, sweep_count = 100, sweep_jobs = 1;
    uint64_t sweep_seed = 1;
    bool sweep_oracle = false, sweep_c17 = false;
    sweep->add_option("--mode", sweep_mode, "graph source")
        ->check(CLI::IsMember({"exhaustive", "random", "stream"}));
    sweep->add_option("-n,--n", sweep_n, "vertex count (exhaustive <= 7)");
    sweep->add_option("--count", sweep_count, "number of graphs (random mode)");
    sweep->add_option("--seed", sweep_seed, "base seed (random mode)");
    sweep->add_option("--jobs", sweep_jobs, "worker threads (per-graph parallelism)");
    sweep->add_flag("--oracle", sweep_oracle, "brute-force cross-check every pair (n <= 6)");
    sweep->add_flag("--conjecture17", sweep_c17, "also probe K^l via the oracle for 2l <= chi");
    sweep->add_option("-i,--input", sweep_input, "graph6 stream file (stream mode)");
    sweep->add_option("-o,--output", sweep_output, "report file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*inv) {
            Graph g = load_graph(io.input, io.format);
            json j = {{"n", g.n()},
                      {"alpha", independence_number(g)},
                      {"chi", chromatic_number(g).chi},
                      {"omega", max_clique_size(g)},
                      {"kappa", vertex_connectivity(g)}};
            emit(j, io.output);
            return kExitOk;
        }

        if (*find) {
            Graph g = load_graph(io.input, io.format);
            ConstructionTrace trace;
            OddModel m;
            if (pattern_kind == "bipartite") {
                m = special_bipartite_model(g, ell, &trace);
            } else if (pattern_kind == "half-order") {
                m = special_model_half_order(g, ell, &trace);
            } else {
                int ch = (g.n() + 1) / 2;
                if (!independence_at_most_two(g))
                    throw precondition_error("find --clique: alpha(G) > 2");
                if (vertex_connectivity(g) < ch)
                    m = odd_clique_from_cut(g, &trace);
                else
                    m = odd_clique_via_clique_and_paths(g, &trace);
            }
            auto violations = verify_odd_model(g, m, pattern_kind != "clique");
            if (!violations.empty()) {
                emit({{"error", "verification"}, {"violations", violations_to_json(violations)}},
                     io.output);
                return kExitVerification;
            }
            emit(model_to_json(m, &trace), io.output);
            return kExitOk;
        }

        if (*verify) {
            Graph g = load_graph(io.input, io.format);
            OddModel m = model_from_json(json::parse(slurp(cert_path)));
            auto violations = verify_odd_model(g, m, special);
            emit({{"valid", violations.empty()}, {"violations", violations_to_json(violations)}},
                 io.output);
            return violations.empty() ? kExitOk : kExitVerification;
        }

        if (*oracle) {
            Graph g = load_graph(io.input, io.format);
            Pattern p;
            if (o_kind == "clique") {
                p = Pattern::clique(o_size);
            } else {
                int right = o_right >= 0 ? o_right : chromatic_number(g).chi - o_ell;
                p = o_kind == "bipartite" ? Pattern::bipartite(o_ell, right)
                                          : Pattern::bipartite_plus_clique(o_ell, right);
            }
            auto m = brute_force_odd_model(g, p, o_special);
            if (!m) {
                emit({{"found", false}, {"pattern", pattern_to_json(p)}}, io.output);
                return kExitNotFound;
            }
            json j = model_to_json(*m);
            j["found"] = true;
            emit(j, io.output);
            return kExitOk;
        }

        if (*sweep) {
            sopts.mode = sweep_mode == "exhaustive" ? SweepMode::Exhaustive
                         : sweep_mode == "random"   ? SweepMode::Random
                                                    : SweepMode::Stream;
            sopts.n = sweep_n;
            sopts.count = sweep_count;
            sopts.seed = sweep_seed;
            sopts.jobs = sweep_jobs;
            sopts.oracle_check = sweep_oracle;
            sopts.conjecture17 = sweep_c17;
            if (sopts.mode == SweepMode::Exhaustive && sweep_n > 7 && !guard_override_enabled())
                throw guard_error("sweep: exhaustive mode guard n <= 7");
            if (sopts.oracle_check && sweep_n > 6 && !guard_override_enabled())
                throw guard_error("sweep: oracle cross-check guard n <= 6");
            std::ifstream stream_file;
            if (sopts.mode == SweepMode::Stream && sweep_input != "-") {
                stream_file.open(sweep_input);
                if (!stream_file) throw parse_error("cannot open " + sweep_input);
                sopts.stream = &stream_file;
            } else if (sopts.mode == SweepMode::Stream) {
                sopts.stream = &std::cin;
            }
            SweepReport report = run_sweep(sopts);
            emit(report_to_json(report), sweep_output);
            return report.contradiction_events == 0 ? kExitOk : kExitContradiction;
        }
    } catch (const contradiction_error& e) {
        json j = error_json("theorem-contradiction", e);
        if (!e.graph6.empty()) j["graph6"] = e.graph6;
        std::cerr << j.dump(2) << "\n";
        return kExitContradiction;
    } catch (const parse_error& e) {
        std::cerr << error_json("parse", e).dump(2) << "\n";
        return kExitPrecondition;
    } catch (const precondition_error& e) {
        std::cerr << error_json("precondition", e).dump(2) << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << error_json("internal", e).dump(2) << "\n";
        return kExitPrecondition;
    }
    return kExitPrecondition;
}
