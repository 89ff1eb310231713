#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "spinlab/errors.hpp"
#include "spinlab/rng.hpp"
#include "spinlab/spin_factor.hpp"

using namespace spinlab;

namespace {
const Signature kSig{3, 0};

SpinFactorElement<double> elem(double s, double v1, double v2, double v3) {
    return SpinFactorElement<double>(s, {v1, v2, v3}, kSig);
}
}  // namespace

TEST_CASE("bullet worked examples") {
    const auto one = SpinFactorElement<double>::identity(kSig);
    const auto x = elem(0.7, 0.1, -2.0, 0.4);
    CHECK(bullet(one, x) == x);

    // (2+e1) . (3+e2) = 6 + 3 e1 + 2 e2
    const auto p = bullet(elem(2, 1, 0, 0), elem(3, 0, 1, 0));
    CHECK(p == elem(6, 3, 2, 0));

    // e1 . e1 = 1
    const auto e1 = SpinFactorElement<double>::basis(kSig, 0);
    CHECK(bullet(e1, e1) == one);
}

TEST_CASE("bullet respects mixed signatures") {
    const Signature mixed{1, 1};
    const auto e_plus = SpinFactorElement<double>::basis(mixed, 0);
    const auto e_minus = SpinFactorElement<double>::basis(mixed, 1);
    CHECK(bullet(e_plus, e_plus).scalar == 1.0);
    CHECK(bullet(e_minus, e_minus).scalar == -1.0);
    CHECK_THROWS_AS(bullet(e_plus, SpinFactorElement<double>::basis(kSig, 0)),
                    SignatureMismatch);
}

TEST_CASE("conjugation is an involution fixing the scalar part") {
    const auto x = elem(0.5, 1.0, -1.5, 2.0);
    const auto star = conjugate(x);
    CHECK(star.scalar == x.scalar);
    CHECK(star.vec[0] == -x.vec[0]);
    CHECK(conjugate(star) == x);
    CHECK(conjugate(SpinFactorElement<double>::identity(kSig)) ==
          SpinFactorElement<double>::identity(kSig));
}

TEST_CASE("quadratic form worked examples") {
    CHECK(quadratic_form(SpinFactorElement<double>::identity(kSig)) == 1.0);
    CHECK(quadratic_form(elem(2, 1, 0, 0)) == 3.0);
    CHECK(quadratic_form(elem(1, 1, 0, 0)) == 0.0);
    const auto x = elem(0.3, 0.2, -1.1, 0.7);
    CHECK(quadratic_form(x) == bullet(x, conjugate(x)).scalar);
}

TEST_CASE("inverse worked examples") {
    const auto inv_scalar = inverse(elem(2, 0, 0, 0));
    CHECK(inv_scalar == elem(0.5, 0, 0, 0));

    const auto x = elem(2, 1, 0, 0);
    const auto inv = inverse(x);
    CHECK(inv.scalar == doctest::Approx(2.0 / 3.0));
    CHECK(inv.vec[0] == doctest::Approx(-1.0 / 3.0));
    const auto back = bullet(x, inv);
    CHECK(back.scalar == doctest::Approx(1.0));
    CHECK(back.vec[0] == doctest::Approx(0.0));

    CHECK_THROWS_AS(inverse(elem(1, 1, 0, 0)), NullElement);
}

TEST_CASE("null tolerance scales with the element") {
    // Quadratic form 1e-9 on an O(1e3) element: inside the scaled tolerance.
    const double big = 1e3;
    const auto nearly_null = elem(std::sqrt(big * big + 1e-9), big, 0, 0);
    CHECK_THROWS_AS(inverse(nearly_null), NullElement);
}

TEST_CASE("minkowski inner worked examples") {
    const auto one = SpinFactorElement<double>::identity(kSig);
    CHECK(minkowski_inner(one, one) == 1.0);
    const auto e1 = SpinFactorElement<double>::basis(kSig, 0);
    CHECK(minkowski_inner(e1, e1) == -1.0);
    CHECK(minkowski_inner(elem(2, 1, 0, 0), elem(3, 0, 1, 0)) == 6.0);
}

TEST_CASE("circ worked examples: right identity only") {
    const auto one = SpinFactorElement<double>::identity(kSig);
    const auto x = elem(4, 1, 2, 0);
    CHECK(circ(x, one) == x);
    CHECK(circ(one, x) == conjugate(x));
    CHECK(circ(one, x) != x);

    // (2+e1) o (3+e2) = 6 + 3 e1 - 2 e2
    CHECK(circ(elem(2, 1, 0, 0), elem(3, 0, 1, 0)) == elem(6, 3, -2, 0));
}

TEST_CASE("integer-mode arithmetic is closed and exact") {
    using IntElem = SpinFactorElement<std::int64_t>;
    const IntElem x(3, {1, -2, 4}, kSig);
    const IntElem y(-1, {0, 5, 2}, kSig);
    const auto p = bullet(x, y);
    CHECK(p.scalar == 3 * -1 + (0 - 10 + 8));
    CHECK(p.vec[0] == -1 * 1 + 3 * 0);
    CHECK(quadratic_form(x) == 9 - (1 + 4 + 16));
    CHECK(minkowski_inner(x, y) == -3 - (0 - 10 + 8));
}

TEST_CASE("element construction validates the vector length") {
    CHECK_THROWS_AS((SpinFactorElement<double>(1.0, {1.0, 2.0}, kSig)), std::invalid_argument);
    CHECK_THROWS_AS((SpinFactorElement<double>(1.0, {}, Signature{0, 0})), std::invalid_argument);
}

TEST_CASE("random units invert consistently in both orders") {
    Rng rng(2024);
    for (int t = 0; t < 50; ++t) {
        SpinFactorElement<double> x = SpinFactorElement<double>::identity(kSig);
        x.scalar = rng.uniform(-2.0, 2.0);
        for (auto& v : x.vec) v = rng.uniform(-2.0, 2.0);
        if (std::abs(quadratic_form(x)) < 0.2) continue;
        const auto round_trip = inverse(inverse(x));
        CHECK(round_trip.scalar == doctest::Approx(x.scalar).epsilon(1e-10));
        for (int i = 0; i < 3; ++i)
            CHECK(round_trip.vec[i] == doctest::Approx(x.vec[i]).epsilon(1e-10));
    }
}
