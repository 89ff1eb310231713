#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "spinlab/clifford.hpp"
#include "spinlab/errors.hpp"
#include "spinlab/spin_factor.hpp"

namespace spinlab::observer {

using clifford::CliffordSignature;
using clifford::Multivector;

inline constexpr CliffordSignature kSta{1, 3};

namespace detail {
template <class T>
bool near_value(T actual, T expected) {
    if constexpr (std::is_integral_v<T>) {
        return actual == expected;
    } else {
        return std::abs(actual - expected) <= T(1e-12);
    }
}
}  // namespace detail

/// Ordered orthonormal basis (gamma0, gamma1, gamma2, gamma3) of the grade-1
/// space of Cl(1,3): gamma0 is the time-like observer, gamma1 the space-like
/// observed. Orthonormality is validated at construction.
template <class T>
struct ObserverFrame {
    std::array<Multivector<T>, 4> gamma;

    explicit ObserverFrame(std::array<Multivector<T>, 4> basis) : gamma(std::move(basis)) {
        for (int mu = 0; mu < 4; ++mu) {
            if (gamma[mu].signature() != kSta || !gamma[mu].pure_grade(1))
                throw std::invalid_argument("frame entries must be grade-1 elements of Cl(1,3)");
            for (int nu = mu; nu < 4; ++nu) {
                const T expected = (mu != nu) ? T(0) : (mu == 0 ? T(1) : T(-1));
                if (!detail::near_value(clifford::vector_inner(gamma[mu], gamma[nu]), expected))
                    throw std::invalid_argument("frame fails the orthonormality relations");
            }
        }
    }

    static ObserverFrame standard() {
        return ObserverFrame({Multivector<T>::basis_vector(kSta, 0),
                              Multivector<T>::basis_vector(kSta, 1),
                              Multivector<T>::basis_vector(kSta, 2),
                              Multivector<T>::basis_vector(kSta, 3)});
    }

    friend bool operator==(const ObserverFrame&, const ObserverFrame&) = default;
};

template <class T>
void require_same_frame(const ObserverFrame<T>& a, const ObserverFrame<T>& b) {
    if (!(a == b)) throw FrameMismatch("paravectors built against different frames");
}

/// Coordinates of a grade-1 element in the frame: a^0 = <a,g0>, a^i = -<a,gi>.
template <class T>
std::array<T, 4> frame_coordinates(const Multivector<T>& a, const ObserverFrame<T>& frame) {
    if (!a.pure_grade(1)) throw std::invalid_argument("expected a pure grade-1 element");
    std::array<T, 4> c;
    c[0] = clifford::vector_inner(a, frame.gamma[0]);
    for (int i = 1; i < 4; ++i) c[i] = -clifford::vector_inner(a, frame.gamma[i]);
    return c;
}

template <class T>
Multivector<T> from_frame_coordinates(const std::array<T, 4>& c, const ObserverFrame<T>& frame) {
    Multivector<T> out(kSta);
    for (int mu = 0; mu < 4; ++mu) out += c[mu] * frame.gamma[mu];
    return out;
}

/// Element of P = {p gamma0}: scalar part plus coefficients on the spatial
/// bivectors gamma_i gamma0.
template <class T>
struct Paravector {
    T time{};
    std::array<T, 3> space{};
    ObserverFrame<T> frame;

    friend bool operator==(const Paravector&, const Paravector&) = default;
};

/// The spacetime split a gamma0: time a^0 on the scalar blade, space a^i on
/// the gamma_i gamma0 bivectors.
template <class T>
Paravector<T> spacetime_split(const Multivector<T>& a, const ObserverFrame<T>& frame) {
    const std::array<T, 4> c = frame_coordinates(a, frame);
    return Paravector<T>{c[0], {c[1], c[2], c[3]}, frame};
}

/// The multivector a gamma0 itself, for round-trip checks against the split.
template <class T>
Multivector<T> paravector_multivector(const Paravector<T>& x) {
    Multivector<T> out = x.time * Multivector<T>::scalar(kSta, T(1));
    for (int i = 0; i < 3; ++i)
        out += x.space[i] *
               clifford::geometric_product(x.frame.gamma[i + 1], x.frame.gamma[0]);
    return out;
}

/// Vector-space isomorphism onto R (+) R^{3,0}.
template <class T>
SpinFactorElement<T> to_spinfactor(const Paravector<T>& x) {
    return SpinFactorElement<T>(x.time, {x.space[0], x.space[1], x.space[2]},
                                Signature{3, 0});
}

/// (a gamma0) star (b gamma0) = ab: the frame-independent product on P.
template <class T>
Multivector<T> star(const Paravector<T>& x, const Paravector<T>& y) {
    require_same_frame(x.frame, y.frame);
    const Multivector<T> a = from_frame_coordinates({x.time, x.space[0], x.space[1], x.space[2]},
                                                    x.frame);
    const Multivector<T> b = from_frame_coordinates({y.time, y.space[0], y.space[1], y.space[2]},
                                                    y.frame);
    return clifford::geometric_product(a, b);
}

/// The projected product on P: time <a,b>, space b^0 a - a^0 b.
/// Isomorphic to the non-unital circ product on R (+) R^{3,0}.
template <class T>
Paravector<T> circ_p(const Paravector<T>& x, const Paravector<T>& y) {
    require_same_frame(x.frame, y.frame);
    Paravector<T> out{T{}, {}, x.frame};
    out.time = x.time * y.time;
    for (int i = 0; i < 3; ++i) out.time -= x.space[i] * y.space[i];
    for (int i = 0; i < 3; ++i) out.space[i] = y.time * x.space[i] - x.time * y.space[i];
    return out;
}

/// a diamond b = <a,b> gamma0 + [b^0 a - a^0 b]_spatial: the grade-1 carrier
/// of the projected product, recovered by multiplying circ_p by gamma0.
template <class T>
Multivector<T> diamond(const Multivector<T>& a, const Multivector<T>& b,
                       const ObserverFrame<T>& frame) {
    const std::array<T, 4> ca = frame_coordinates(a, frame);
    const std::array<T, 4> cb = frame_coordinates(b, frame);
    T inner = ca[0] * cb[0];
    for (int i = 1; i < 4; ++i) inner -= ca[i] * cb[i];
    Multivector<T> out = inner * frame.gamma[0];
    for (int i = 1; i < 4; ++i) out += (cb[0] * ca[i] - ca[0] * cb[i]) * frame.gamma[i];
    return out;
}

/// The observer-observed partial wedge: 2x2 determinants with top row b,
/// bottom row a, against the 0-column: coefficients b^0 a^i - a^0 b^i on
/// gamma_1..gamma_3.
template <class T>
Multivector<T> partial_wedge(const Multivector<T>& a, const Multivector<T>& b,
                             const ObserverFrame<T>& frame) {
    const std::array<T, 4> ca = frame_coordinates(a, frame);
    const std::array<T, 4> cb = frame_coordinates(b, frame);
    Multivector<T> out(kSta);
    for (int i = 1; i < 4; ++i) out += (cb[0] * ca[i] - ca[0] * cb[i]) * frame.gamma[i];
    return out;
}

/// Time-boost reflection of the partial wedge: the 0 and 1 component values
/// interchange, so the determinants run against the 1-column.
template <class T>
Multivector<T> partial_wedge_dagger(const Multivector<T>& a, const Multivector<T>& b,
                                    const ObserverFrame<T>& frame) {
    const std::array<T, 4> ca = frame_coordinates(a, frame);
    const std::array<T, 4> cb = frame_coordinates(b, frame);
    Multivector<T> out(kSta);
    out += (cb[1] * ca[0] - cb[0] * ca[1]) * frame.gamma[1];
    out += (cb[1] * ca[2] - cb[2] * ca[1]) * frame.gamma[2];
    out += (cb[1] * ca[3] - cb[3] * ca[1]) * frame.gamma[3];
    return out;
}

/// Coefficient of the frame pseudoscalar g0^g1^g2^g3 in a multivector.
template <class T>
T pseudoscalar_coefficient(const Multivector<T>& w, const ObserverFrame<T>& frame) {
    Multivector<T> pseudo = frame.gamma[0];
    for (int mu = 1; mu < 4; ++mu) pseudo = clifford::wedge(pseudo, frame.gamma[mu]);
    const T denom = clifford::scalar_part(clifford::geometric_product(pseudo, clifford::reverse(pseudo)));
    const T numer = clifford::scalar_part(clifford::geometric_product(w, clifford::reverse(pseudo)));
    return numer / denom;  // denom is -1 for orthonormal frames of Cl(1,3)
}

template <class T>
struct QuadPaths {
    T wedge_value;        // pseudoscalar coefficient of g0^g1^(pw)^(pw dagger)
    T determinant_value;  // det(b0 b1; a0 a1) * det(b2 b3; a2 a3)
};

/// Both evaluation routes of the quad pseudoscalar product.
template <class T>
QuadPaths<T> quad_product_paths(const Multivector<T>& a, const Multivector<T>& b,
                                const ObserverFrame<T>& frame) {
    const Multivector<T> pipeline = clifford::wedge(
        clifford::wedge(frame.gamma[0], frame.gamma[1]),
        clifford::wedge(partial_wedge(a, b, frame), partial_wedge_dagger(a, b, frame)));

    const std::array<T, 4> ca = frame_coordinates(a, frame);
    const std::array<T, 4> cb = frame_coordinates(b, frame);
    const T det01 = cb[0] * ca[1] - cb[1] * ca[0];
    const T det23 = cb[2] * ca[3] - cb[3] * ca[2];

    return {pseudoscalar_coefficient(pipeline, frame), det01 * det23};
}

namespace detail {
template <class T>
bool paths_agree(T wedge_value, T det_value) {
    if constexpr (std::is_integral_v<T>) {
        return wedge_value == det_value;
    } else {
        return std::abs(wedge_value - det_value) <=
               1e-9 * std::max(T(1), std::abs(det_value));
    }
}
}  // namespace detail

/// The quad pseudoscalar product, evaluated through both the wedge pipeline
/// and the determinant factorization. A disagreement is an internal bug, not
/// a data condition, hence logic_error.
template <class T>
T quad_product(const Multivector<T>& a, const Multivector<T>& b, const ObserverFrame<T>& frame) {
    const QuadPaths<T> paths = quad_product_paths(a, b, frame);
    if (!detail::paths_agree(paths.wedge_value, paths.determinant_value))
        throw std::logic_error("quad product evaluation paths disagree");
    return paths.wedge_value;
}

/// Same product with the 0 and 1 indices of the first factor exchanged:
/// det(b1 b0; a1 a0) carried on gamma1^gamma0. Equal to quad_product because
/// determinant and 2-blade each flip sign.
template <class T>
T quad_product_exchanged(const Multivector<T>& a, const Multivector<T>& b,
                         const ObserverFrame<T>& frame) {
    const std::array<T, 4> ca = frame_coordinates(a, frame);
    const std::array<T, 4> cb = frame_coordinates(b, frame);
    const T det10 = cb[1] * ca[0] - cb[0] * ca[1];
    const T det23 = cb[2] * ca[3] - cb[3] * ca[2];
    const Multivector<T> first =
        det10 * clifford::wedge(frame.gamma[1], frame.gamma[0]);
    const Multivector<T> second =
        det23 * clifford::wedge(frame.gamma[2], frame.gamma[3]);
    return pseudoscalar_coefficient(clifford::wedge(first, second), frame);
}

/// Scale the (gamma0, gamma1)-plane component and the orthogonal-plane
/// component of a grade-1 element independently.
template <class T>
Multivector<T> scale_plane_components(const Multivector<T>& a, const ObserverFrame<T>& frame,
                                      T lambda01, T lambda23) {
    std::array<T, 4> c = frame_coordinates(a, frame);
    c[0] *= lambda01;
    c[1] *= lambda01;
    c[2] *= lambda23;
    c[3] *= lambda23;
    return from_frame_coordinates(c, frame);
}

/// Boost velocity in units of c = 1; strictly |v| < 1.
struct BoostVelocity {
    double v = 0.0;

    explicit BoostVelocity(double velocity) : v(velocity) {
        if (!(std::abs(v) < 1.0)) throw std::invalid_argument("boost requires |v| < 1");
    }
};

/// Passive boost along the observed direction: mixes the 0 and 1 frame
/// coordinates, fixes the orthogonal plane.
inline Multivector<double> boost(const Multivector<double>& w, BoostVelocity v,
                                 const ObserverFrame<double>& frame) {
    const std::array<double, 4> c = frame_coordinates(w, frame);
    const double gamma_factor = 1.0 / std::sqrt(1.0 - v.v * v.v);
    const std::array<double, 4> boosted = {gamma_factor * (c[0] - v.v * c[1]),
                                           gamma_factor * (c[1] - v.v * c[0]), c[2], c[3]};
    return from_frame_coordinates(boosted, frame);
}

struct InvarianceReport {
    bool boost_invariant = false;
    bool exchange_invariant = false;
    bool commutative = false;
    bool hemi_linear = false;
    double boost_residual = 0.0;
    double exchange_residual = 0.0;
    double commutativity_residual = 0.0;
    double hemi_residual = 0.0;

    bool all() const {
        return boost_invariant && exchange_invariant && commutative && hemi_linear;
    }
};

/// Measures the four advertised properties of the quad product on one
/// (a, b, v) instance. Findings are reported, never thrown.
inline InvarianceReport check_invariances(const Multivector<double>& a,
                                          const Multivector<double>& b,
                                          const ObserverFrame<double>& frame, BoostVelocity v,
                                          double tol = 1e-9) {
    InvarianceReport r;
    const double q = quad_product(a, b, frame);
    const double scale = std::max(1.0, std::abs(q));

    r.boost_residual = std::abs(quad_product(boost(a, v, frame), boost(b, v, frame), frame) - q) / scale;
    r.boost_invariant = r.boost_residual <= tol;

    r.exchange_residual = std::abs(quad_product_exchanged(a, b, frame) - q) / scale;
    r.exchange_invariant = r.exchange_residual <= tol;

    r.commutativity_residual = std::abs(quad_product(b, a, frame) - q) / scale;
    r.commutative = r.commutativity_residual <= tol;

    // Linearity in each plane component, lambda = 3 on a's blocks and b's blocks.
    const double lambda = 3.0;
    double worst = 0.0;
    worst = std::max(worst, std::abs(quad_product(scale_plane_components(a, frame, lambda, 1.0), b, frame) - lambda * q));
    worst = std::max(worst, std::abs(quad_product(scale_plane_components(a, frame, 1.0, lambda), b, frame) - lambda * q));
    worst = std::max(worst, std::abs(quad_product(a, scale_plane_components(b, frame, lambda, 1.0), frame) - lambda * q));
    worst = std::max(worst, std::abs(quad_product(a, scale_plane_components(b, frame, 1.0, lambda), frame) - lambda * q));
    r.hemi_residual = worst / (lambda * scale);
    r.hemi_linear = r.hemi_residual <= tol;

    return r;
}

}  // namespace spinlab::observer
