#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fock {

struct VerifyConfig {
    uint64_t seed = 7;
    int probe_samples = 24;
    bool timings = false;  // wall-clock per check; off by default so reports are byte-stable
};

struct CheckOutcome {
    std::string name;
    std::string status;  // pass | fail | fitted
    bool passed = true;  // for fitted checks: finite constant with drift below the limit
    double metric = 0.0;    // max residual (gates) or fitted constant
    double threshold = 0.0; // residual tolerance or drift limit
    double drift = 0.0;     // fitted checks only
    double runtime_ms = 0.0;
    std::string detail;
};

struct VerifyReport {
    VerifyConfig config;
    std::vector<CheckOutcome> checks;

    /// Exit-code rule: every non-fitted check passes.
    bool all_gates_pass() const;
    const CheckOutcome* find(const std::string& name) const;
};

/// Runs the full oracle/property suite. Deterministic for a fixed config.
VerifyReport run_verify(const VerifyConfig& cfg);

/// Stable serialization (insertion-ordered keys; shortest round-trip floats).
std::string report_to_json(const VerifyReport& report);

void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace fock
