#include <doctest.h>

#include <cstdint>

#include "spinlab/clifford.hpp"
#include "spinlab/rng.hpp"

using namespace spinlab::clifford;
using spinlab::Rng;

namespace {
const CliffordSignature kSta{1, 3};
using IntMv = Multivector<std::int64_t>;

IntMv gamma(int mu) { return IntMv::basis_vector(kSta, mu); }
}  // namespace

TEST_CASE("generator squares and anticommutation in Cl(1,3)") {
    CHECK(geometric_product(gamma(0), gamma(0)) == IntMv::scalar(kSta, 1));
    for (int i = 1; i < 4; ++i)
        CHECK(geometric_product(gamma(i), gamma(i)) == IntMv::scalar(kSta, -1));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            if (mu == nu) continue;
            CHECK((geometric_product(gamma(mu), gamma(nu)) +
                   geometric_product(gamma(nu), gamma(mu)))
                      .is_zero());
        }
}

TEST_CASE("wedge worked examples") {
    CHECK(wedge(gamma(0), gamma(0)).is_zero());

    // For grade-1 a, b: ab - <a,b> = a^b.
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        IntMv a(kSta), b(kSta);
        for (int mu = 0; mu < 4; ++mu) {
            a[1u << mu] = rng.uniform_int(-9, 9);
            b[1u << mu] = rng.uniform_int(-9, 9);
        }
        const auto product = geometric_product(a, b);
        const auto decomposed = IntMv::scalar(kSta, vector_inner(a, b)) + wedge(a, b);
        CHECK(product == decomposed);
    }

    // Top blade: g0 ^ g1 ^ g2 ^ g3 is the unit pseudoscalar.
    const auto pseudo = wedge(wedge(wedge(gamma(0), gamma(1)), gamma(2)), gamma(3));
    CHECK(pseudo == IntMv::basis_blade(kSta, 0b1111));
}

TEST_CASE("grade projection partitions a multivector") {
    Rng rng(5);
    IntMv x(kSta);
    for (std::size_t mask = 0; mask < x.blade_count(); ++mask) x[mask] = rng.uniform_int(-9, 9);

    CHECK(grade_project(IntMv::scalar(kSta, 1) + geometric_product(gamma(0), gamma(1)), 0) ==
          IntMv::scalar(kSta, 1));

    IntMv total(kSta);
    for (int k = 0; k <= 4; ++k) {
        const auto part = grade_project(x, k);
        CHECK(grade_project(part, k) == part);  // idempotent
        total += part;
    }
    CHECK(total == x);
    CHECK_THROWS_AS(grade_project(x, 5), std::invalid_argument);
    CHECK_THROWS_AS(grade_project(x, -1), std::invalid_argument);
}

TEST_CASE("vector_inner worked examples") {
    CHECK(vector_inner(gamma(0), gamma(0)) == 1);
    CHECK(vector_inner(gamma(0), gamma(1)) == 0);
    CHECK(vector_inner(gamma(0) + gamma(1), gamma(0) - gamma(1)) == 2);
    CHECK_THROWS_AS(vector_inner(IntMv::scalar(kSta, 2), gamma(0)), std::invalid_argument);
}

TEST_CASE("geometric product is associative on random triples") {
    Rng rng(99);
    for (int t = 0; t < 50; ++t) {
        IntMv x(kSta), y(kSta), z(kSta);
        for (std::size_t mask = 0; mask < x.blade_count(); ++mask) {
            x[mask] = rng.uniform_int(-9, 9);
            y[mask] = rng.uniform_int(-9, 9);
            z[mask] = rng.uniform_int(-9, 9);
        }
        CHECK(geometric_product(geometric_product(x, y), z) ==
              geometric_product(x, geometric_product(y, z)));
    }
}

TEST_CASE("reversion flips 2- and 3-blades only") {
    const auto b01 = geometric_product(gamma(0), gamma(1));
    CHECK(reverse(b01) == std::int64_t(-1) * b01);
    const auto b012 = geometric_product(b01, gamma(2));
    CHECK(reverse(b012) == std::int64_t(-1) * b012);
    const auto pseudo = geometric_product(b012, gamma(3));
    CHECK(reverse(pseudo) == pseudo);
    CHECK(reverse(gamma(2)) == gamma(2));
}

TEST_CASE("signatures outside the supported range are rejected") {
    CHECK_THROWS_AS((Multivector<double>(CliffordSignature{4, 3})), std::invalid_argument);
    CHECK_THROWS_AS((Multivector<double>(CliffordSignature{0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(
        (geometric_product(Multivector<double>(CliffordSignature{1, 3}),
                           Multivector<double>(CliffordSignature{3, 1}))),
        spinlab::SignatureMismatch);
}

TEST_CASE("kernel works across signatures up to dimension six") {
    const CliffordSignature big{3, 3};
    const auto e0 = Multivector<double>::basis_vector(big, 0);
    const auto e5 = Multivector<double>::basis_vector(big, 5);
    CHECK(geometric_product(e0, e0) == Multivector<double>::scalar(big, 1.0));
    CHECK(geometric_product(e5, e5) == Multivector<double>::scalar(big, -1.0));
    const auto top = wedge(wedge(wedge(wedge(wedge(
        Multivector<double>::basis_vector(big, 0), Multivector<double>::basis_vector(big, 1)),
        Multivector<double>::basis_vector(big, 2)), Multivector<double>::basis_vector(big, 3)),
        Multivector<double>::basis_vector(big, 4)), e5);
    CHECK(top == Multivector<double>::basis_blade(big, 0b111111));
}
