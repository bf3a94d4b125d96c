// Python bindings.  JSON-heavy payloads (certificates, sweep reports) cross
// the boundary as JSON strings so the python side stays a thin wrapper.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include <json.hpp>

#include "oddminor/construct.hpp"
#include "oddminor/errors.hpp"
#include "oddminor/invariants.hpp"
#include "oddminor/json_io.hpp"
#include "oddminor/oracle.hpp"
#include "oddminor/sweep.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace oddminor;

namespace {

Graph load(const std::string& text, const std::string& format) {
    if (format == "graph6") return parse_graph6(text);
    if (format == "edges" || format == "dimacs") return parse_edge_list(text);
    throw precondition_error("unknown format: " + format);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "odd complete-bipartite / odd clique minor workbench core";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<contradiction_error>(m, "ContradictionError", PyExc_RuntimeError);

    m.def(
        "invariants",
        [](const std::string& text, const std::string& format) {
            Graph g = load(text, format);
            json j = {{"n", g.n()},
                      {"alpha", independence_number(g)},
                      {"chi", chromatic_number(g).chi},
                      {"omega", max_clique_size(g)},
                      {"kappa", vertex_connectivity(g)}};
            return j.dump();
        },
        py::arg("graph"), py::arg("format") = "graph6",
        "JSON string with n, alpha, chi, omega, kappa");

    m.def(
        "find_bipartite",
        [](const std::string& text, int ell, const std::string& format) {
            Graph g = load(text, format);
            ConstructionTrace trace;
            OddModel mdl = special_bipartite_model(g, ell, &trace);
            return model_to_json(mdl, &trace).dump();
        },
        py::arg("graph"), py::arg("ell"), py::arg("format") = "graph6",
        "Verified special odd K_{l,chi-l} certificate as a JSON string");

    m.def(
        "find_half_order",
        [](const std::string& text, int ell, const std::string& format) {
            Graph g = load(text, format);
            ConstructionTrace trace;
            OddModel mdl = special_model_half_order(g, ell, &trace);
            return model_to_json(mdl, &trace).dump();
        },
        py::arg("graph"), py::arg("ell"), py::arg("format") = "graph6",
        "Verified special odd K^l_{l,ceil(n/2)-l} certificate as a JSON string");

    m.def(
        "verify",
        [](const std::string& text, const std::string& certificate, bool special,
           const std::string& format) {
            Graph g = load(text, format);
            OddModel mdl = model_from_json(json::parse(certificate));
            auto violations = verify_odd_model(g, mdl, special);
            json j = {{"valid", violations.empty()},
                      {"violations", violations_to_json(violations)}};
            return j.dump();
        },
        py::arg("graph"), py::arg("certificate"), py::arg("special") = false,
        py::arg("format") = "graph6",
        "Check a certificate; returns {valid, violations} as a JSON string");

    m.def(
        "oracle",
        [](const std::string& text, const std::string& kind, int left, int right, bool special,
           const std::string& format) {
            Graph g = load(text, format);
            Pattern p = kind == "clique"      ? Pattern::clique(left)
                        : kind == "bipartite" ? Pattern::bipartite(left, right)
                                              : Pattern::bipartite_plus_clique(left, right);
            auto mdl = brute_force_odd_model(g, p, special);
            if (!mdl) return json({{"found", false}}).dump();
            json j = model_to_json(*mdl);
            j["found"] = true;
            return j.dump();
        },
        py::arg("graph"), py::arg("kind"), py::arg("left"), py::arg("right") = 0,
        py::arg("special") = false, py::arg("format") = "graph6",
        "Brute-force odd-model search (n <= 9); JSON string {found, ...}");

    m.def(
        "sweep",
        [](int n, const std::string& mode, int count, uint64_t seed, int jobs, bool oracle_check,
           bool conjecture17, const std::string& stream_text) {
            SweepOptions opts;
            opts.mode = mode == "exhaustive" ? SweepMode::Exhaustive
                        : mode == "random"   ? SweepMode::Random
                                             : SweepMode::Stream;
            opts.n = n;
            opts.count = count;
            opts.seed = seed;
            opts.jobs = jobs;
            opts.oracle_check = oracle_check;
            opts.conjecture17 = conjecture17;
            std::istringstream stream(stream_text);
            if (opts.mode == SweepMode::Stream) opts.stream = &stream;
            return report_to_json(run_sweep(opts)).dump();
        },
        py::arg("n"), py::arg("mode") = "exhaustive", py::arg("count") = 100, py::arg("seed") = 1,
        py::arg("jobs") = 1, py::arg("oracle_check") = false, py::arg("conjecture17") = false,
        py::arg("stream_text") = "", "Run the theorem over many graphs; JSON report string");

    m.def(
        "encode_graph6", [](const std::string& edges) { return encode_graph6(parse_edge_list(edges)); },
        py::arg("edges"), "Edge-list / DIMACS text to graph6");

    m.def(
        "complement_graph6",
        [](const std::string& g6) { return encode_graph6(complement(parse_graph6(g6))); },
        py::arg("graph6"));

    m.def(
        "random_alpha2_graph6",
        [](int n, uint64_t seed) { return encode_graph6(random_alpha2_graph(n, seed)); },
        py::arg("n"), py::arg("seed"),
        "Seeded random graph with independence number <= 2, as graph6");
}
