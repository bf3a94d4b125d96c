#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oddminor/graph.hpp"

namespace oddminor {

enum class SweepMode { Exhaustive, Random, Stream };

struct SweepOptions {
    SweepMode mode = SweepMode::Exhaustive;
    int n = 5;
    int count = 100;          // random mode
    uint64_t seed = 1;        // random mode
    int jobs = 1;
    bool oracle_check = false;       // brute-force cross-check (n <= 6)
    bool conjecture17 = false;       // oracle-only K^l probe for 2l <= chi
    std::istream* stream = nullptr;  // stream mode: graph6 lines of
                                     // triangle-free graphs, complemented
};

struct EllResult {
    int ell = 0;
    std::string outcome;  // verified | contradiction-event
    std::string route;
    std::string detail;
    double millis = 0;
};

struct Conjecture17Result {
    int ell = 0;
    std::string outcome;  // found | none | guard-exceeded
};

struct GraphRecord {
    std::string graph6;
    int n = 0, alpha = 0, chi = 0, omega = 0, kappa = 0;
    std::vector<EllResult> results;
    std::vector<Conjecture17Result> conjecture17;
    bool oracle_checked = false;
    std::string error;  // worker failure isolated per graph
};

struct SweepReport {
    SweepOptions options;
    std::vector<GraphRecord> records;
    long graphs = 0;
    long pairs = 0;
    long verified = 0;
    long contradiction_events = 0;
    long parse_failures = 0;
    std::vector<std::string> contradictions;  // "graph6 ell message"
    double total_millis = 0;
};

SweepReport run_sweep(const SweepOptions& opts);
nlohmann::json report_to_json(const SweepReport& r, bool include_timing = true);

}  // namespace oddminor
