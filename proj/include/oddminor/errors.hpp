#pragma once

#include <stdexcept>
#include <string>

namespace oddminor {

// Malformed input (graph6 / edge list / certificate schema).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its contract (wrong alpha, bad ell, ...).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Size guard tripped; liftable via ODDMINOR_GUARD_OVERRIDE.
struct guard_error : precondition_error {
    explicit guard_error(const std::string& what) : precondition_error(what) {}
};

// A step the underlying theorems guarantee has failed.  This is the
// research-significant event: it carries the offending graph so the sweep
// can dump it.
struct contradiction_error : std::runtime_error {
    std::string graph6;
    contradiction_error(const std::string& what, std::string g6 = {})
        : std::runtime_error(what), graph6(std::move(g6)) {}
};

bool guard_override_enabled();
void check_size_guard(int n, int limit, const char* op);

}  // namespace oddminor
