#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spinlab::harness {

enum class ArithmeticMode { integer_exact, floating };

ArithmeticMode parse_mode(const std::string& name);  // "integer" | "float"

struct RunConfig {
    std::string suite = "all";
    std::uint64_t seed = 42;
    int trials = 200;
    double tol = 1e-9;
    std::optional<std::string> json_path;
    ArithmeticMode mode = ArithmeticMode::floating;
};

struct CaseResult {
    std::string name;
    bool pass = false;
    double max_residual = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int trials = 0;
    double tolerance = 0.0;
    std::vector<CaseResult> cases;
    bool passed = false;
};

const std::vector<std::string>& registered_suites();  // spinfactor, normlab, clifford, observer, all

/// Run every registered property case of the selected suite with
/// deterministic per-case sub-seeds. Exactness cases always run in integer
/// arithmetic; quadrature/boost cases always in floating point; dual-capable
/// algebra-law cases honor cfg.mode. Throws UsageError for an unknown suite
/// or invalid config.
SuiteReport run_suite(const RunConfig& cfg);

/// Serialized report: UTF-8, keys {suite, seed, trials, tolerance, cases,
/// passed}, two-space indentation, trailing newline. Byte-stable for a fixed
/// (config, version).
std::string to_json(const SuiteReport& report);

}  // namespace spinlab::harness
