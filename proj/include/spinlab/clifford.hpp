#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "spinlab/errors.hpp"

namespace spinlab::clifford {

/// Signature of Cl(p,q): p generators squaring to +1 first, then q squaring
/// to -1. Dimension capped at 6 (64 blades).
struct CliffordSignature {
    int p = 0;
    int q = 0;

    int dim() const { return p + q; }
    std::size_t blade_count() const { return std::size_t{1} << dim(); }

    friend bool operator==(const CliffordSignature&, const CliffordSignature&) = default;
};

inline void require_valid(const CliffordSignature& sig) {
    if (sig.p < 0 || sig.q < 0 || sig.dim() < 1 || sig.dim() > 6)
        throw std::invalid_argument("Clifford signature requires 1 <= p+q <= 6");
}

/// Sign of gamma_i^2: +1 for i < p, -1 otherwise.
inline int generator_square(const CliffordSignature& sig, int i) { return i < sig.p ? 1 : -1; }

/// Sign from reordering the concatenation of two ascending blades into
/// ascending order: counts generator transpositions.
inline int reorder_sign(unsigned a, unsigned b) {
    int swaps = 0;
    for (unsigned rest = a >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & b);
    return (swaps & 1) ? -1 : 1;
}

/// Full blade product sign: transposition count plus the metric signs of the
/// generators shared by both blades.
inline int blade_product_sign(const CliffordSignature& sig, unsigned a, unsigned b) {
    int sign = reorder_sign(a, b);
    for (unsigned common = a & b; common != 0; common &= common - 1)
        sign *= generator_square(sig, std::countr_zero(common));
    return sign;
}

/// Dense multivector over Cl(p,q): one coefficient per basis blade, indexed by
/// generator bitmask (bit i set <=> gamma_i present, factors in ascending
/// index order).
template <class T>
class Multivector {
  public:
    Multivector() = default;
    explicit Multivector(CliffordSignature sig) : sig_(sig) {
        require_valid(sig);
        coeff_.assign(sig.blade_count(), T(0));
    }

    static Multivector scalar(CliffordSignature sig, T value) {
        Multivector m(sig);
        m.coeff_[0] = value;
        return m;
    }

    static Multivector basis_blade(CliffordSignature sig, unsigned mask, T value = T(1)) {
        Multivector m(sig);
        m.coeff_.at(mask) = value;
        return m;
    }

    /// Grade-1 generator gamma_i.
    static Multivector basis_vector(CliffordSignature sig, int i) {
        return basis_blade(sig, 1u << i);
    }

    const CliffordSignature& signature() const { return sig_; }
    std::size_t blade_count() const { return coeff_.size(); }

    T operator[](std::size_t mask) const { return coeff_[mask]; }
    T& operator[](std::size_t mask) { return coeff_[mask]; }

    bool is_zero() const {
        for (const T& c : coeff_)
            if (c != T(0)) return false;
        return true;
    }

    bool pure_grade(int k) const {
        for (std::size_t mask = 0; mask < coeff_.size(); ++mask)
            if (coeff_[mask] != T(0) && std::popcount(mask) != k) return false;
        return true;
    }

    friend bool operator==(const Multivector&, const Multivector&) = default;

    Multivector& operator+=(const Multivector& o) {
        require_same(o);
        for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
        return *this;
    }
    Multivector& operator-=(const Multivector& o) {
        require_same(o);
        for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
        return *this;
    }
    Multivector& operator*=(T c) {
        for (T& v : coeff_) v *= c;
        return *this;
    }

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(T c, Multivector a) { return a *= c; }
    friend Multivector operator*(Multivector a, T c) { return a *= c; }

    void require_same(const Multivector& o) const {
        if (sig_ != o.sig_) throw SignatureMismatch("multivectors carry different signatures");
    }

  private:
    CliffordSignature sig_;
    std::vector<T> coeff_;
};

/// The geometric product, extended bilinearly from blade products.
template <class T>
Multivector<T> geometric_product(const Multivector<T>& x, const Multivector<T>& y) {
    x.require_same(y);
    Multivector<T> out(x.signature());
    for (std::size_t a = 0; a < x.blade_count(); ++a) {
        if (x[a] == T(0)) continue;
        for (std::size_t b = 0; b < y.blade_count(); ++b) {
            if (y[b] == T(0)) continue;
            const int sign = blade_product_sign(x.signature(), static_cast<unsigned>(a),
                                                static_cast<unsigned>(b));
            out[a ^ b] += T(sign) * x[a] * y[b];
        }
    }
    return out;
}

/// Exterior (wedge) product: blade products restricted to disjoint blades, so
/// no metric factors enter. Associative and alternating.
template <class T>
Multivector<T> wedge(const Multivector<T>& x, const Multivector<T>& y) {
    x.require_same(y);
    Multivector<T> out(x.signature());
    for (std::size_t a = 0; a < x.blade_count(); ++a) {
        if (x[a] == T(0)) continue;
        for (std::size_t b = 0; b < y.blade_count(); ++b) {
            if (y[b] == T(0) || (a & b) != 0) continue;
            out[a | b] += T(reorder_sign(static_cast<unsigned>(a), static_cast<unsigned>(b))) *
                          x[a] * y[b];
        }
    }
    return out;
}

template <class T>
Multivector<T> grade_project(const Multivector<T>& x, int k) {
    if (k < 0 || k > x.signature().dim())
        throw std::invalid_argument("grade_project: grade out of range");
    Multivector<T> out(x.signature());
    for (std::size_t mask = 0; mask < x.blade_count(); ++mask)
        if (std::popcount(mask) == k) out[mask] = x[mask];
    return out;
}

template <class T>
T scalar_part(const Multivector<T>& x) {
    return x[0];
}

/// Reversion: each grade-k blade picks up (-1)^(k(k-1)/2).
template <class T>
Multivector<T> reverse(const Multivector<T>& x) {
    Multivector<T> out = x;
    for (std::size_t mask = 0; mask < x.blade_count(); ++mask) {
        const int k = std::popcount(mask);
        if ((k * (k - 1) / 2) & 1) out[mask] = -out[mask];
    }
    return out;
}

/// Inner product of grade-1 elements: the scalar part of (ab+ba)/2, which
/// recovers the R^{p,q} bilinear form.
template <class T>
T vector_inner(const Multivector<T>& a, const Multivector<T>& b) {
    if (!a.pure_grade(1) || !b.pure_grade(1))
        throw std::invalid_argument("vector_inner requires pure grade-1 inputs");
    const T twice =
        scalar_part(geometric_product(a, b)) + scalar_part(geometric_product(b, a));
    return twice / T(2);
}

}  // namespace spinlab::clifford
