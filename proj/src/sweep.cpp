#include "oddminor/sweep.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "oddminor/construct.hpp"
#include "oddminor/errors.hpp"
#include "oddminor/invariants.hpp"
#include "oddminor/json_io.hpp"
#include "oddminor/oracle.hpp"

namespace oddminor {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

GraphRecord process_graph(const std::string& g6, const SweepOptions& opts) {
    GraphRecord rec;
    rec.graph6 = g6;
    Graph g = parse_graph6(g6);
    rec.n = g.n();
    rec.alpha = independence_number(g);
    if (rec.alpha > 2) {
        rec.error = "alpha > 2";
        return rec;
    }
    rec.chi = chromatic_number(g).chi;
    rec.omega = max_clique_size(g);
    rec.kappa = vertex_connectivity(g);

    for (int ell = 1; ell < rec.chi; ++ell) {
        EllResult er;
        er.ell = ell;
        auto t0 = clock_type::now();
        try {
            ConstructionTrace trace;
            OddModel m = special_bipartite_model(g, ell, &trace);
            auto violations = verify_odd_model(g, m, true);
            if (!violations.empty())
                throw contradiction_error("verifier rejected constructed certificate",
                                          encode_graph6(g));
            if (opts.oracle_check) {
                auto oracle = brute_force_odd_model(
                    g, Pattern::bipartite(ell, rec.chi - ell), true);
                if (!oracle)
                    throw contradiction_error("oracle found no model where constructor succeeded",
                                              encode_graph6(g));
            }
            er.outcome = "verified";
            er.route = trace.empty() ? "" : trace.front().rule;
        } catch (const contradiction_error& e) {
            er.outcome = "contradiction-event";
            er.detail = e.what();
        }
        er.millis = ms_since(t0);
        rec.results.push_back(std::move(er));
    }

    if (opts.conjecture17) {
        for (int ell = 1; 2 * ell <= rec.chi; ++ell) {
            Conjecture17Result cr;
            cr.ell = ell;
            if (g.n() > 9 && !guard_override_enabled()) {
                cr.outcome = "guard-exceeded";
            } else {
                auto m = brute_force_odd_model(
                    g, Pattern::bipartite_plus_clique(ell, rec.chi - ell), true);
                cr.outcome = m ? "found" : "none";
            }
            rec.conjecture17.push_back(cr);
        }
    }
    rec.oracle_checked = opts.oracle_check;
    return rec;
}

}  // namespace

SweepReport run_sweep(const SweepOptions& opts) {
    auto t0 = clock_type::now();
    SweepReport report;
    report.options = opts;

    std::vector<std::string> inputs;
    switch (opts.mode) {
        case SweepMode::Exhaustive:
            enumerate_alpha2_graphs(opts.n,
                                    [&](const Graph& g) { inputs.push_back(encode_graph6(g)); });
            break;
        case SweepMode::Random:
            for (int i = 0; i < opts.count; ++i)
                inputs.push_back(encode_graph6(random_alpha2_graph(opts.n, opts.seed + i)));
            break;
        case SweepMode::Stream: {
            if (!opts.stream) throw precondition_error("sweep: stream mode without a stream");
            std::string line;
            while (std::getline(*opts.stream, line)) {
                if (line.empty()) continue;
                try {
                    inputs.push_back(encode_graph6(complement(parse_graph6(line))));
                } catch (const parse_error&) {
                    ++report.parse_failures;
                }
            }
            break;
        }
    }

    report.records.resize(inputs.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= inputs.size()) break;
            try {
                report.records[i] = process_graph(inputs[i], opts);
            } catch (const std::exception& e) {
                report.records[i].graph6 = inputs[i];
                report.records[i].error = e.what();
            }
        }
    };
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const GraphRecord& rec : report.records) {
        ++report.graphs;
        for (const EllResult& er : rec.results) {
            ++report.pairs;
            if (er.outcome == "verified") {
                ++report.verified;
            } else {
                ++report.contradiction_events;
                report.contradictions.push_back(rec.graph6 + " ell=" + std::to_string(er.ell) +
                                                " " + er.detail);
            }
        }
    }
    report.total_millis = ms_since(t0);
    return report;
}

nlohmann::json report_to_json(const SweepReport& r, bool include_timing) {
    using nlohmann::json;
    const SweepOptions& o = r.options;
    json opts = {
        {"mode", o.mode == SweepMode::Exhaustive ? "exhaustive"
                 : o.mode == SweepMode::Random   ? "random"
                                                 : "stream"},
        {"n", o.n},
        {"count", o.count},
        {"seed", o.seed},
        {"jobs", o.jobs},
        {"oracle", o.oracle_check},
        {"conjecture17", o.conjecture17},
    };
    json records = json::array();
    for (const GraphRecord& rec : r.records) {
        json results = json::array();
        for (const EllResult& er : rec.results) {
            json e = {{"ell", er.ell}, {"outcome", er.outcome}, {"route", er.route}};
            if (!er.detail.empty()) e["detail"] = er.detail;
            if (include_timing) e["millis"] = er.millis;
            results.push_back(std::move(e));
        }
        json jr = {{"graph6", rec.graph6}, {"n", rec.n},         {"alpha", rec.alpha},
                   {"chi", rec.chi},       {"omega", rec.omega}, {"kappa", rec.kappa},
                   {"results", results}};
        if (!rec.conjecture17.empty()) {
            json c17 = json::array();
            for (const Conjecture17Result& cr : rec.conjecture17)
                c17.push_back({{"ell", cr.ell}, {"outcome", cr.outcome}});
            jr["conjecture17"] = c17;
        }
        if (rec.oracle_checked) jr["oracle_checked"] = true;
        if (!rec.error.empty()) jr["error"] = rec.error;
        records.push_back(std::move(jr));
    }
    json out = {{"options", opts},
                {"records", records},
                {"aggregate",
                 {{"graphs", r.graphs},
                  {"pairs", r.pairs},
                  {"verified", r.verified},
                  {"contradiction_events", r.contradiction_events},
                  {"parse_failures", r.parse_failures}}},
                {"contradictions", r.contradictions}};
    if (include_timing) out["total_millis"] = r.total_millis;
    return out;
}

}  // namespace oddminor
