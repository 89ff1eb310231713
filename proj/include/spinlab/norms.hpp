#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spinlab/linalg.hpp"
#include "spinlab/rng.hpp"
#include "spinlab/spin_factor.hpp"

namespace spinlab::norms {

using Element = SpinFactorElement<double>;

inline constexpr double kDefaultQFloor = 0.05;

/// Candidate uncurling metric: symmetric L with its normalization data.
struct UncurlingCandidate {
    linalg::SymmetricMatrix entries;
    double unit_norm_sq = 1.0;
    Signature sig;
};

/// L = identity; the canonical candidate for signatures (m, 0).
UncurlingCandidate identity_candidate(const Signature& sig);

struct SolverConfig {
    int sample_count = 200;
    double box_radius = 0.4;      // sampling half-width around the identity
    double q_floor = kDefaultQFloor;
    double svd_threshold = 1e-8;  // relative to the largest singular value
    std::uint64_t seed = 0x5EEDCAFEull;
};

void require_valid(const SolverConfig& cfg);

struct UncurlResult {
    int curl_nullspace_dim = 0;
    UncurlingCandidate candidate;
    double constraint_residual = 0.0;  // worst violation over the fitted constraints
};

struct NormResult {
    double value = 0.0;
    int path_steps = 0;
    double residual_estimate = 0.0;  // bound on the change under step doubling
};

/// sqrt(s' L s) for a plain symmetric matrix on R^n.
/// Throws OutsideNormDomain when s' L s is nonpositive.
double bilinear_norm_value(const linalg::SymmetricMatrix& l, const std::vector<double>& s);

/// Fixed-point defect of the vector-space norm equation: max-norm of
/// L s - l(s) grad l(s), with the gradient taken by central differences.
/// Zero for exact gradients, so the return is bounded by the difference error.
double bilinear_norm_residual(const linalg::SymmetricMatrix& l, const std::vector<double>& s);

/// Jacobian of the inverse map s -> s^{-1} in standard coordinates, from the
/// closed-form derivative of (sigma, -s)/Q.
linalg::Matrix inverse_field_jacobian(const Element& s);

/// Max absolute entry of the antisymmetric part of L J(s): the pointwise
/// curl-freeness defect of the field s -> L s^{-1}.
double curl_symmetry_residual(const Element& s, const UncurlingCandidate& l);

/// Euclidean pairing s . (L s^{-1}); equals unit_norm_sq for a valid metric.
double inverse_metric_pairing(const Element& s, const UncurlingCandidate& l);

/// Draw `count` elements with coordinates uniform in a box around the
/// identity, rejecting those with Q below cfg.q_floor.
/// Throws SamplingFailure when the floor is unattainable.
std::vector<Element> sample_units(const Signature& sig, const SolverConfig& cfg, Rng& rng,
                                  int count);

/// Solve for the uncurling metric: assemble "L J(s) symmetric" rows over the
/// samples, take the null space by singular-value thresholding, then pin the
/// candidate with the pairing rows s' L s^{-1} = unit_norm_sq and the
/// normalization 1' L 1 = unit_norm_sq (minimum-norm least squares).
UncurlResult solve_uncurling(const Signature& sig, const SolverConfig& cfg);

/// Unital norm u(s) = exp( (1/unit_norm_sq) * int_1^s [L t^{-1}] . dt ) along
/// the straight segment, composite 8th-order Gauss-Legendre with `steps`
/// panels. Every quadrature node must keep Q above q_floor.
NormResult unital_norm(const Element& s, const UncurlingCandidate& l, int steps = 1024,
                       double q_floor = kDefaultQFloor);

/// Same integral along a polyline of waypoints starting at the identity.
NormResult unital_norm_along(std::span<const Element> waypoints, const UncurlingCandidate& l,
                             int steps = 1024, double q_floor = kDefaultQFloor);

/// Closed-form norm sqrt(Q(s)); requires Q(s) > 0.
double closed_form_norm(const Element& s);

/// Max-norm of L s^{-1} - unit_norm_sq * grad u(s) / u(s), the gradient taken
/// by central differences on the integrated norm. Bounded by the
/// finite-difference error for a valid uncurling metric.
double gradient_relation_residual(const Element& s, const UncurlingCandidate& l,
                                  int steps = 1024);

}  // namespace spinlab::norms
