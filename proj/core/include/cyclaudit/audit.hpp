#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclaudit/errors.hpp"
#include "cyclaudit/report.hpp"

namespace cyclaudit {

inline constexpr const char* kVersion = "0.1.0";

/// Audit configuration; every knob is echoed into the report so a report is
/// reproducible from its own header.
struct AuditConfig {
    std::vector<std::string> sections{"classical", "q", "modular", "analytic"};
    int n_max = 10;             // classical symbolic ceiling, hard cap 16
    int q_integer_n_max = 2;    // integer-triple q checks cover n <= this
    int q_symbolic_n_max = 2;   // symbolic/sampled q checks cover n <= this
    std::string q_mode = "sampled";  // "sampled" (with symbolic escalation) or "symbolic"
    int weight_min = 4;
    int weight_max = 30;
    std::uint64_t seed = 42;
    int samples = 5;
    int truncation = 40;  // Delta q-expansion length for the numeric pipeline
    double tol = 1e-8;    // generic numeric tolerance for the audit grid
    bool expect_known = false;
    bool timing = false;
};

struct CheckEntry {
    std::string name;
    std::string params;
    std::string status;  // "verified" | "defect" | "error"
    std::string residual;
    std::optional<double> error_estimate;
    double elapsed_ms = 0.0;
    bool known = false;  // defect matches the known-discrepancy manifest
};

struct AuditReport {
    std::string version = kVersion;
    AuditConfig config;
    std::vector<CheckEntry> checks;  // sorted by (name, params)
    int verified = 0, defect = 0, error = 0;
};

/// A paper claim for which the engine computes a provably nonzero residual.
/// Defects matching an entry are reported but, under --expect-known, do not
/// fail the run.
struct KnownDiscrepancy {
    std::string id;
    std::string paper_claim;
    std::string check_prefix;     // matches CheckEntry.name by prefix
    std::string params_required;  // substring that must appear ("" = any)
    std::string params_forbidden; // substring that must not appear ("" = none)
};
const std::vector<KnownDiscrepancy>& known_discrepancies();
bool matches_known(const KnownDiscrepancy& k, const std::string& check, const std::string& params);

/// Run every configured section; individual check failures are captured as
/// entries, never thrown. Throws ConfigError on an invalid configuration.
AuditReport run_audit(const AuditConfig& config);

/// Render the report; JSON follows the fixed schema
///   {version, config, checks:[{name, params, status, residual,
///    error_estimate?, known?, elapsed_ms}], summary:{verified, defect, error}}
/// and is byte-identical for identical configuration and seeds (elapsed_ms is
/// 0 unless timing was requested).
std::string emit_report(const AuditReport& report, bool json);

/// Exit-code contract: 0 clean; 1 any defect (known defects are forgiven when
/// expect_known); 3 when only errors remain (numeric non-convergence); usage
/// errors map to 2 at the CLI boundary.
int exit_code_for(const AuditReport& report);

}  // namespace cyclaudit
