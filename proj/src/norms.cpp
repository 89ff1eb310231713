#include "spinlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "spinlab/errors.hpp"
#include "spinlab/numeric.hpp"

namespace spinlab::norms {

namespace {

// Diagonal of the conjugation matrix K (negates the vector part) and of the
// quadratic-form matrix G (Q(x) = x' G x) in standard coordinates.
std::vector<double> conjugation_diagonal(const Signature& sig) {
    std::vector<double> k(sig.dim() + 1, -1.0);
    k[0] = 1.0;
    return k;
}

std::vector<double> quadratic_form_diagonal(const Signature& sig) {
    std::vector<double> g(sig.dim() + 1, 0.0);
    g[0] = 1.0;
    for (int i = 0; i < sig.plus; ++i) g[1 + i] = -1.0;
    for (int i = sig.plus; i < sig.dim(); ++i) g[1 + i] = 1.0;
    return g;
}

std::size_t packed_index(std::size_t n, std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
}

}  // namespace

UncurlingCandidate identity_candidate(const Signature& sig) {
    spinlab::require_valid(sig);
    return {linalg::SymmetricMatrix::identity(static_cast<std::size_t>(sig.dim()) + 1), 1.0, sig};
}

void require_valid(const SolverConfig& cfg) {
    if (!(cfg.box_radius > 0.0 && cfg.box_radius < 1.0))
        throw std::invalid_argument("box_radius must lie in (0, 1)");
    if (!(cfg.q_floor > 0.0)) throw std::invalid_argument("q_floor must be positive");
    if (!(cfg.svd_threshold > 0.0)) throw std::invalid_argument("svd_threshold must be positive");
    if (cfg.sample_count < 0) throw std::invalid_argument("sample_count must be nonnegative");
}

double bilinear_norm_value(const linalg::SymmetricMatrix& l, const std::vector<double>& s) {
    const std::vector<double> ls = l.apply(s);
    double quad = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) quad += s[i] * ls[i];
    if (!(quad > 0.0)) throw OutsideNormDomain("s' L s must be positive");
    return std::sqrt(quad);
}

double bilinear_norm_residual(const linalg::SymmetricMatrix& l, const std::vector<double>& s) {
    const double ell = bilinear_norm_value(l, s);
    const std::vector<double> grad = numeric::central_gradient(
        [&l](const std::vector<double>& x) { return bilinear_norm_value(l, x); }, s);
    const std::vector<double> ls = l.apply(s);
    double worst = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i)
        worst = std::max(worst, std::abs(ls[i] - ell * grad[i]));
    return worst;
}

linalg::Matrix inverse_field_jacobian(const Element& s) {
    if (!is_unit(s)) throw NullElement("Jacobian of the inverse map requires a unit");
    const std::size_t n = static_cast<std::size_t>(s.sig.dim()) + 1;
    const std::vector<double> x = coordinates(s);
    const std::vector<double> k = conjugation_diagonal(s.sig);
    const std::vector<double> g = quadratic_form_diagonal(s.sig);
    const double q = quadratic_form(s);

    // d/dx_j [k_i x_i / Q] = k_i delta_ij / Q - 2 k_i x_i g_j x_j / Q^2
    linalg::Matrix jac(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double entry = -2.0 * k[i] * x[i] * g[j] * x[j] / (q * q);
            if (i == j) entry += k[i] / q;
            jac(i, j) = entry;
        }
    }
    return jac;
}

double curl_symmetry_residual(const Element& s, const UncurlingCandidate& l) {
    const linalg::Matrix jac = inverse_field_jacobian(s);
    const std::size_t n = jac.rows();
    linalg::Matrix lj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += l.entries(i, k) * jac(k, j);
            lj(i, j) = acc;
        }
    return linalg::asymmetry(lj);
}

double inverse_metric_pairing(const Element& s, const UncurlingCandidate& l) {
    const std::vector<double> inv = coordinates(inverse(s));
    const std::vector<double> ls = l.entries.apply(inv);
    const std::vector<double> x = coordinates(s);
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * ls[i];
    return acc;
}

std::vector<Element> sample_units(const Signature& sig, const SolverConfig& cfg, Rng& rng,
                                  int count) {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(count));
    const int dim = sig.dim();
    long attempts_left = 1000L * std::max(count, 1);
    while (static_cast<int>(out.size()) < count) {
        if (attempts_left-- <= 0)
            throw SamplingFailure("could not sample elements above the quadratic-form floor");
        Element s = Element::identity(sig);
        s.scalar += rng.uniform(-cfg.box_radius, cfg.box_radius);
        for (int i = 0; i < dim; ++i) s.vec[i] = rng.uniform(-cfg.box_radius, cfg.box_radius);
        if (quadratic_form(s) >= cfg.q_floor) out.push_back(std::move(s));
    }
    return out;
}

UncurlResult solve_uncurling(const Signature& sig, const SolverConfig& cfg) {
    spinlab::require_valid(sig);
    require_valid(cfg);
    if (cfg.sample_count == 0) throw EmptySolution("no samples requested; nothing to constrain");

    const std::size_t n = static_cast<std::size_t>(sig.dim()) + 1;
    const std::size_t unknowns = n * (n + 1) / 2;

    Rng rng(cfg.seed);
    const std::vector<Element> samples = sample_units(sig, cfg, rng, cfg.sample_count);

    // Curl constraints: for each sample and pair r < c, (L J)_rc - (L J)_cr = 0,
    // linear in the packed entries of symmetric L.
    const std::size_t pairs = n * (n - 1) / 2;
    linalg::Matrix curl_rows(samples.size() * pairs, unknowns);
    std::size_t row = 0;
    for (const Element& s : samples) {
        const linalg::Matrix jac = inverse_field_jacobian(s);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = r + 1; c < n; ++c) {
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = i; j < n; ++j) {
                        double coef = 0.0;
                        // coefficient of L_ij in (L J)_rc
                        if (r == i) coef += jac(j, c);
                        if (i != j && r == j) coef += jac(i, c);
                        // minus its coefficient in (L J)_cr
                        if (c == i) coef -= jac(j, r);
                        if (i != j && c == j) coef -= jac(i, r);
                        curl_rows(row, packed_index(n, i, j)) = coef;
                    }
                }
                ++row;
            }
        }
    }

    const linalg::Svd curl_svd = linalg::svd(curl_rows);
    const linalg::Matrix basis = linalg::null_space(curl_svd, cfg.svd_threshold);
    const std::size_t dim_null = basis.cols();
    if (dim_null == 0) throw EmptySolution("curl constraints admit no symmetric metric");

    // Pairing rows s' L s^{-1} = unit_norm_sq over the samples, plus the
    // normalization 1' L 1 = unit_norm_sq, expressed in null-space coordinates.
    const double unit_norm_sq = 1.0;
    linalg::Matrix pairing(samples.size() + 1, dim_null);
    std::vector<double> rhs(samples.size() + 1, unit_norm_sq);
    for (std::size_t si = 0; si < samples.size(); ++si) {
        const std::vector<double> x = coordinates(samples[si]);
        const std::vector<double> inv = coordinates(inverse(samples[si]));
        for (std::size_t k = 0; k < dim_null; ++k) {
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    acc += x[i] * basis(packed_index(n, i, j), k) * inv[j];
            pairing(si, k) = acc;
        }
    }
    for (std::size_t k = 0; k < dim_null; ++k)
        pairing(samples.size(), k) = basis(packed_index(n, 0, 0), k);  // 1' L 1 = L_00

    const std::vector<double> coef = linalg::least_squares(pairing, rhs, cfg.svd_threshold);

    UncurlingCandidate candidate{linalg::SymmetricMatrix(n), unit_norm_sq, sig};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < dim_null; ++k)
                acc += basis(packed_index(n, i, j), k) * coef[k];
            candidate.entries.at(i, j) = acc;
        }

    // Exact renormalization of 1' L 1.
    const double l00 = candidate.entries(0, 0);
    if (std::abs(l00) < 1e-10) throw EmptySolution("candidate cannot be normalized at the identity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            candidate.entries.at(i, j) *= unit_norm_sq / l00;

    double residual = 0.0;
    for (const Element& s : samples) {
        residual = std::max(residual, curl_symmetry_residual(s, candidate));
        residual = std::max(residual,
                            std::abs(inverse_metric_pairing(s, candidate) - unit_norm_sq));
    }
    if (residual > 1e-6)
        throw EmptySolution("no metric satisfies the assembled constraints to tolerance");

    return {static_cast<int>(dim_null), std::move(candidate), residual};
}

namespace {

// Line integral of [L t^{-1}] . dt over one straight segment, checking the
// quadratic-form floor at every quadrature node.
double segment_integral(const Element& from, const Element& to, const UncurlingCandidate& l,
                        int panels, double q_floor) {
    const std::vector<double> a = coordinates(from);
    const std::vector<double> b = coordinates(to);
    std::vector<double> direction(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) direction[i] = b[i] - a[i];

    const Signature sig = from.sig;
    auto integrand = [&](double tau) {
        std::vector<double> point(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) point[i] = a[i] + tau * direction[i];
        const Element t = from_coordinates(point, sig);
        if (quadratic_form(t) < q_floor)
            throw PathCrossesNullCone("integration path drops below the quadratic-form floor");
        const std::vector<double> field = l.entries.apply(coordinates(inverse(t)));
        double acc = 0.0;
        for (std::size_t i = 0; i < field.size(); ++i) acc += field[i] * direction[i];
        return acc;
    };
    return numeric::integrate(integrand, 0.0, 1.0, panels);
}

}  // namespace

NormResult unital_norm_along(std::span<const Element> waypoints, const UncurlingCandidate& l,
                             int steps, double q_floor) {
    if (steps < 1) throw std::invalid_argument("steps must be positive");
    if (waypoints.size() < 2) throw std::invalid_argument("need at least two waypoints");
    double integral = 0.0, integral_fine = 0.0;
    for (std::size_t k = 0; k + 1 < waypoints.size(); ++k) {
        require_same_signature(waypoints[k], waypoints[k + 1]);
        integral += segment_integral(waypoints[k], waypoints[k + 1], l, steps, q_floor);
        integral_fine += segment_integral(waypoints[k], waypoints[k + 1], l, 2 * steps, q_floor);
    }
    const double value = std::exp(integral / l.unit_norm_sq);
    const double value_fine = std::exp(integral_fine / l.unit_norm_sq);
    const double estimate = std::abs(value_fine - value) +
                            std::numeric_limits<double>::epsilon() * (1.0 + std::abs(value));
    return {value, steps, estimate};
}

NormResult unital_norm(const Element& s, const UncurlingCandidate& l, int steps, double q_floor) {
    const Element one = Element::identity(s.sig);
    const Element path[2] = {one, s};
    return unital_norm_along(path, l, steps, q_floor);
}

double closed_form_norm(const Element& s) {
    const double q = quadratic_form(s);
    if (!(q > 0.0)) throw OutsideNormDomain("closed-form norm requires Q(s) > 0");
    return std::sqrt(q);
}

double gradient_relation_residual(const Element& s, const UncurlingCandidate& l, int steps) {
    const double u = unital_norm(s, l, steps).value;
    const std::vector<double> grad = numeric::central_gradient(
        [&](const std::vector<double>& x) {
            return unital_norm(from_coordinates(x, s.sig), l, steps).value;
        },
        coordinates(s), 1e-5);

    const std::vector<double> field = l.entries.apply(coordinates(inverse(s)));
    double worst = 0.0;
    for (std::size_t i = 0; i < field.size(); ++i)
        worst = std::max(worst, std::abs(field[i] - l.unit_norm_sq * grad[i] / u));
    return worst;
}

}  // namespace spinlab::norms
