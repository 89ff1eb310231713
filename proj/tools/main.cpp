#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinlab/errors.hpp"
#include "spinlab/harness.hpp"
#include "spinlab/norms.hpp"
#include "spinlab/observer.hpp"
#include "spinlab/spin_factor.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<double> parse_reals(const std::string& text, std::size_t expected,
                                const std::string& flag) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string token =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t used = 0;
            values.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw spinlab::UsageError(flag + " expects comma-separated reals, got '" + text + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (values.size() != expected)
        throw spinlab::UsageError(flag + " expects exactly " + std::to_string(expected) +
                                  " comma-separated values");
    return values;
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int run_verify(const spinlab::harness::RunConfig& cfg) {
    const auto report = spinlab::harness::run_suite(cfg);
    for (const auto& c : report.cases) {
        std::printf("%-4s %-45s residual %.3e\n", c.pass ? "ok" : "FAIL", c.name.c_str(),
                    c.max_residual);
    }
    std::printf("%s: %zu cases, suite %s, seed %llu\n", report.passed ? "PASSED" : "FAILED",
                report.cases.size(), report.suite.c_str(),
                static_cast<unsigned long long>(report.seed));
    return report.passed ? kExitPass : kExitFail;
}

int run_norm(const std::string& point_text, int steps) {
    const auto coords = parse_reals(point_text, 4, "--point");
    const spinlab::Signature sig{3, 0};
    const auto s = spinlab::from_coordinates(coords, sig);
    const auto candidate = spinlab::norms::identity_candidate(sig);
    const auto integrated = spinlab::norms::unital_norm(s, candidate, steps);
    const double closed = spinlab::norms::closed_form_norm(s);
    std::printf("integrated      %s\n", format_real(integrated.value).c_str());
    std::printf("closed_form     %s\n", format_real(closed).c_str());
    std::printf("abs_difference  %s\n", format_real(std::abs(integrated.value - closed)).c_str());
    std::printf("quadrature      %d panels, refinement estimate %s\n", integrated.path_steps,
                format_real(integrated.residual_estimate).c_str());
    return kExitPass;
}

int run_quad(const std::string& a_text, const std::string& b_text, double velocity) {
    if (!(std::abs(velocity) < 1.0))
        throw spinlab::UsageError("--v expects a boost velocity with |v| < 1");
    const auto a_coords = parse_reals(a_text, 4, "--a");
    const auto b_coords = parse_reals(b_text, 4, "--b");

    const auto frame = spinlab::observer::ObserverFrame<double>::standard();
    const auto a = spinlab::observer::from_frame_coordinates<double>(
        {a_coords[0], a_coords[1], a_coords[2], a_coords[3]}, frame);
    const auto b = spinlab::observer::from_frame_coordinates<double>(
        {b_coords[0], b_coords[1], b_coords[2], b_coords[3]}, frame);

    const auto paths = spinlab::observer::quad_product_paths(a, b, frame);
    const spinlab::observer::BoostVelocity v(velocity);
    const auto boosted =
        spinlab::observer::quad_product_paths(spinlab::observer::boost(a, v, frame),
                                              spinlab::observer::boost(b, v, frame), frame);
    std::printf("wedge_pipeline  %s\n", format_real(paths.wedge_value).c_str());
    std::printf("determinant     %s\n", format_real(paths.determinant_value).c_str());
    std::printf("boosted         %s  (v = %s)\n", format_real(boosted.determinant_value).c_str(),
                format_real(velocity).c_str());
    return kExitPass;
}

int run_uncurl(const std::string& signature_text, int samples) {
    const auto sig_values = parse_reals(signature_text, 2, "--signature");
    const spinlab::Signature sig{static_cast<int>(sig_values[0]),
                                 static_cast<int>(sig_values[1])};
    spinlab::norms::SolverConfig cfg;
    cfg.sample_count = samples;
    const auto result = spinlab::norms::solve_uncurling(sig, cfg);

    std::printf("signature            (%d,%d)\n", sig.plus, sig.minus);
    std::printf("curl_nullspace_dim   %d\n", result.curl_nullspace_dim);
    std::printf("constraint_residual  %s\n", format_real(result.constraint_residual).c_str());
    std::printf("L =\n");
    const std::size_t n = result.candidate.entries.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::printf(" ");
        for (std::size_t j = 0; j < n; ++j)
            std::printf(" % .10f", result.candidate.entries(i, j));
        std::printf("\n");
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spinlab: spin-factor algebra, uncurling metrics, and spacetime products"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the seeded property suites");
    spinlab::harness::RunConfig cfg;
    std::string mode_name = "float";
    std::string json_path;
    verify->add_option("--suite", cfg.suite, "suite name (spinfactor|normlab|clifford|observer|all)");
    verify->add_option("--seed", cfg.seed, "64-bit seed for the instance streams");
    verify->add_option("--trials", cfg.trials, "trials per case (where not pinned)");
    verify->add_option("--tol", cfg.tol, "default tolerance for unpinned float cases");
    verify->add_option("--json", json_path, "write the machine-readable report here");
    verify->add_option("--mode", mode_name, "arithmetic for dual-mode cases (integer|float)");

    // norm
    auto* norm = app.add_subcommand("norm", "integrated unital norm vs the closed form");
    std::string point_text;
    int steps = 1024;
    norm->add_option("--point", point_text, "element as sigma,s1,s2,s3 in signature (3,0)")
        ->required();
    norm->add_option("--steps", steps, "quadrature panels along the path");

    // quad
    auto* quad = app.add_subcommand("quad", "quad pseudoscalar product of two grade-1 elements");
    std::string a_text, b_text;
    double velocity = 0.0;
    quad->add_option("--a", a_text, "first element as w0,w1,w2,w3")->required();
    quad->add_option("--b", b_text, "second element as w0,w1,w2,w3")->required();
    quad->add_option("--v", velocity, "boost velocity, |v| < 1");

    // uncurl
    auto* uncurl = app.add_subcommand("uncurl", "solve for the uncurling metric");
    std::string signature_text = "3,0";
    int samples = 200;
    uncurl->add_option("--signature", signature_text, "signature as M,N");
    uncurl->add_option("--samples", samples, "sample count for constraint assembly");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            cfg.mode = spinlab::harness::parse_mode(mode_name);
            if (!json_path.empty()) cfg.json_path = json_path;
            return run_verify(cfg);
        }
        if (norm->parsed()) return run_norm(point_text, steps);
        if (quad->parsed()) return run_quad(a_text, b_text, velocity);
        if (uncurl->parsed()) return run_uncurl(signature_text, samples);
    } catch (const spinlab::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const spinlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
