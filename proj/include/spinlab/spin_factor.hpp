#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <vector>

#include "spinlab/errors.hpp"

namespace spinlab {

/// Count of +1 and -1 directions of the bilinear form on the vector part.
struct Signature {
    int plus = 0;   // +1 squares
    int minus = 0;  // -1 squares

    int dim() const { return plus + minus; }

    friend bool operator==(const Signature&, const Signature&) = default;
};

inline void require_valid(const Signature& sig) {
    if (sig.plus < 0 || sig.minus < 0 || sig.dim() < 1)
        throw std::invalid_argument("signature must have m+n >= 1 with nonnegative counts");
}

/// Element of the spin factor Jordan algebra on R (+) R^{m,n}: a scalar part
/// plus a vector part carrying the signature bilinear form.
template <class T>
struct SpinFactorElement {
    T scalar{};
    std::vector<T> vec;
    Signature sig;

    SpinFactorElement() = default;
    SpinFactorElement(T scalar_part, std::vector<T> vector_part, Signature signature)
        : scalar(scalar_part), vec(std::move(vector_part)), sig(signature) {
        require_valid(sig);
        if (static_cast<int>(vec.size()) != sig.dim())
            throw std::invalid_argument("vector part length must equal m+n");
    }

    static SpinFactorElement identity(Signature signature) {
        return SpinFactorElement(T(1), std::vector<T>(signature.dim(), T(0)), signature);
    }

    /// Pure scalar alpha * 1.
    static SpinFactorElement from_scalar(T alpha, Signature signature) {
        return SpinFactorElement(alpha, std::vector<T>(signature.dim(), T(0)), signature);
    }

    /// i-th basis vector e_i of the vector part (0-based).
    static SpinFactorElement basis(Signature signature, int i) {
        std::vector<T> v(signature.dim(), T(0));
        v.at(static_cast<std::size_t>(i)) = T(1);
        return SpinFactorElement(T(0), std::move(v), signature);
    }

    friend bool operator==(const SpinFactorElement&, const SpinFactorElement&) = default;
};

template <class T>
void require_same_signature(const SpinFactorElement<T>& x, const SpinFactorElement<T>& y) {
    if (x.sig != y.sig) throw SignatureMismatch("elements carry different signatures");
}

/// Signature bilinear form on the vector parts: sum of products over the
/// first m coordinates minus the sum over the remaining n.
template <class T>
T signature_form(const Signature& sig, const std::vector<T>& a, const std::vector<T>& b) {
    T acc{};
    for (int i = 0; i < sig.plus; ++i) acc += a[i] * b[i];
    for (int i = sig.plus; i < sig.dim(); ++i) acc -= a[i] * b[i];
    return acc;
}

template <class T>
SpinFactorElement<T> operator+(const SpinFactorElement<T>& x, const SpinFactorElement<T>& y) {
    require_same_signature(x, y);
    SpinFactorElement<T> out = x;
    out.scalar += y.scalar;
    for (std::size_t i = 0; i < out.vec.size(); ++i) out.vec[i] += y.vec[i];
    return out;
}

template <class T>
SpinFactorElement<T> operator-(const SpinFactorElement<T>& x, const SpinFactorElement<T>& y) {
    require_same_signature(x, y);
    SpinFactorElement<T> out = x;
    out.scalar -= y.scalar;
    for (std::size_t i = 0; i < out.vec.size(); ++i) out.vec[i] -= y.vec[i];
    return out;
}

template <class T>
SpinFactorElement<T> operator*(T c, const SpinFactorElement<T>& x) {
    SpinFactorElement<T> out = x;
    out.scalar *= c;
    for (auto& v : out.vec) v *= c;
    return out;
}

/// The Jordan product: (alpha+a) . (beta+b) = [alpha beta + <a,b>] + [beta a + alpha b].
/// Commutative, bilinear, with 1 as two-sided identity.
template <class T>
SpinFactorElement<T> bullet(const SpinFactorElement<T>& x, const SpinFactorElement<T>& y) {
    require_same_signature(x, y);
    SpinFactorElement<T> out;
    out.sig = x.sig;
    out.scalar = x.scalar * y.scalar + signature_form(x.sig, x.vec, y.vec);
    out.vec.resize(x.vec.size());
    for (std::size_t i = 0; i < x.vec.size(); ++i)
        out.vec[i] = y.scalar * x.vec[i] + x.scalar * y.vec[i];
    return out;
}

/// Conjugation (alpha+a)* = alpha-a. Involution.
template <class T>
SpinFactorElement<T> conjugate(const SpinFactorElement<T>& x) {
    SpinFactorElement<T> out = x;
    for (auto& v : out.vec) v = -v;
    return out;
}

/// Q(x) = scalar^2 - <vec,vec>_sig; the scalar part of bullet(x, x*).
template <class T>
T quadratic_form(const SpinFactorElement<T>& x) {
    return x.scalar * x.scalar - signature_form(x.sig, x.vec, x.vec);
}

/// Minkowski pairing: alpha beta - <a,b>_sig. Also the scalar part of
/// (x o y + y o x)/2, whose vector part cancels exactly.
template <class T>
T minkowski_inner(const SpinFactorElement<T>& x, const SpinFactorElement<T>& y) {
    require_same_signature(x, y);
    return x.scalar * y.scalar - signature_form(x.sig, x.vec, y.vec);
}

/// The non-unital product x o y = bullet(x, y*). Right-unital only: x o 1 = x,
/// but 1 o x = x* differs whenever the vector part is nonzero.
template <class T>
SpinFactorElement<T> circ(const SpinFactorElement<T>& x, const SpinFactorElement<T>& y) {
    return bullet(x, conjugate(y));
}

namespace detail {
inline bool is_null(double q, const SpinFactorElement<double>& x) {
    double euclid_sq = x.scalar * x.scalar;
    for (double v : x.vec) euclid_sq += v * v;
    return std::abs(q) <= 1e-12 * (1.0 + euclid_sq);
}
inline bool is_null(std::int64_t q, const SpinFactorElement<std::int64_t>&) { return q == 0; }
}  // namespace detail

template <class T>
bool is_unit(const SpinFactorElement<T>& x) {
    return !detail::is_null(quadratic_form(x), x);
}

/// Unique inverse of a unit: x* / Q(x). Throws NullElement when Q(x) is zero
/// within the scale-aware tolerance.
template <std::floating_point T>
SpinFactorElement<T> inverse(const SpinFactorElement<T>& x) {
    const T q = quadratic_form(x);
    if (detail::is_null(q, x)) throw NullElement("quadratic form vanishes; element has no inverse");
    SpinFactorElement<T> out = conjugate(x);
    out.scalar /= q;
    for (auto& v : out.vec) v /= q;
    return out;
}

/// Coordinates (scalar, vec...) as a flat tuple; the layout shared with the
/// metric solver and the inverse-map Jacobian.
template <class T>
std::vector<T> coordinates(const SpinFactorElement<T>& x) {
    std::vector<T> c(x.vec.size() + 1);
    c[0] = x.scalar;
    for (std::size_t i = 0; i < x.vec.size(); ++i) c[i + 1] = x.vec[i];
    return c;
}

template <class T>
SpinFactorElement<T> from_coordinates(const std::vector<T>& c, Signature sig) {
    if (static_cast<int>(c.size()) != sig.dim() + 1)
        throw std::invalid_argument("coordinate length must equal m+n+1");
    return SpinFactorElement<T>(c[0], std::vector<T>(c.begin() + 1, c.end()), sig);
}

}  // namespace spinlab
