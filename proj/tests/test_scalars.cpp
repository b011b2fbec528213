#include <random>

#include "doctest.h"
#include "hopfcycl/module.hpp"
#include "hopfcycl/scalars.hpp"

using namespace hopfcycl;

namespace {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Scalar random_scalar(const Ring& ring, std::mt19937& rng) {
    std::uniform_int_distribution<long> dist(-9, 9);
    if (ring.kind() == Ring::Kind::Cyclotomic) {
        std::vector<mpq_class> c(ring.extension_degree());
        for (auto& x : c) x = mpq_class(dist(rng), 1 + (dist(rng) + 9) % 4);
        return Scalar::from_coefficients(ring, c);
    }
    if (ring.kind() == Ring::Kind::Rationals) return Scalar::from_rational(ring, mpq_class(dist(rng), 1 + (dist(rng) + 9) % 5));
    return Scalar::from_int(ring, dist(rng) * 7919 + dist(rng));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
    CHECK(cyclotomic_polynomial(2) == IntPoly{1, 1});
    CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
    for (unsigned n = 1; n <= 24; ++n) {
        CHECK(cyclotomic_polynomial(n).size() == euler_phi(n) + 1);
        IntPoly prod{1};
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
        IntPoly expected(n + 1, mpz_class(0));
        expected[0] = -1;
        expected[n] = 1;
        CHECK(prod == expected);
    }
}

TEST_CASE("roots of unity are primitive") {
    for (unsigned n = 1; n <= 12; ++n) {
        const Ring k = Ring::cyclotomic(n);
        const Scalar z = Scalar::zeta(k);
        for (unsigned j = 1; j < n; ++j) CHECK_FALSE(z.pow(j).is_one());
        CHECK(z.pow(n).is_one());
    }
}

TEST_CASE("basic ring arithmetic") {
    const Ring q3 = Ring::cyclotomic(3);
    const Scalar z = Scalar::zeta(q3);
    CHECK((z * z.inverse()).is_one());
    const Ring z4 = Ring::integers_mod(4);
    CHECK((Scalar::from_int(z4, 2) * Scalar::from_int(z4, 2)).is_zero());
    CHECK_THROWS_AS(Scalar::from_int(z4, 2).inverse(), Error);
    CHECK(Scalar::from_int(z4, 3).inverse() == Scalar::from_int(z4, 3));
    CHECK(Scalar::from_int(z4, -1).residue() == 3);
    const Ring f7 = Ring::prime_field(7);
    CHECK((Scalar::from_int(f7, 3) * Scalar::from_int(f7, 3).inverse()).is_one());
    CHECK(Scalar::from_rational(f7, mpq_class(1, 2)) == Scalar::from_int(f7, 4));
    CHECK(Scalar::from_rational(Ring::rationals(), mpq_class(2, 4)).rational() == mpq_class(1, 2));
    CHECK_THROWS_AS(Scalar::one(q3) + Scalar::one(f7), Error);
    try {
        (void)(Scalar::one(q3) * Scalar::one(Ring::rationals()));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::RingMismatch);
    }
}

TEST_CASE("(1 + zeta)^6 in Q(zeta3) against exponent folding") {
    const Ring q3 = Ring::cyclotomic(3);
    const Scalar one = Scalar::one(q3);
    const Scalar z = Scalar::zeta(q3);
    Scalar acc = one;
    for (int i = 0; i < 6; ++i) acc *= one + z;
    // Oracle: expand (1 + x)^6, fold exponents mod 3 (x^3 = 1), then x^2 = -1 - x.
    long binom[7] = {1, 6, 15, 20, 15, 6, 1};
    long folded[3] = {0, 0, 0};
    for (int e = 0; e <= 6; ++e) folded[e % 3] += binom[e];
    const std::vector<mpq_class> expected{mpq_class(folded[0] - folded[2]), mpq_class(folded[1] - folded[2])};
    CHECK(acc.coefficients() == expected);
    CHECK(acc.is_one());
    CHECK(acc == (one + z).pow(6));
}

TEST_CASE("ring parsing") {
    CHECK(Ring::parse("Z") == Ring::integers());
    CHECK(Ring::parse("Q") == Ring::rationals());
    CHECK(Ring::parse("Z/4") == Ring::integers_mod(4));
    CHECK(Ring::parse("F7") == Ring::prime_field(7));
    CHECK(Ring::parse("Q(zeta3)") == Ring::cyclotomic(3));
    CHECK(Ring::parse("Q(zeta_3)") == Ring::cyclotomic(3));
    CHECK_THROWS_AS(Ring::parse("F8"), Error);
    CHECK_THROWS_AS(Ring::parse("R"), Error);
    CHECK_THROWS_AS(Ring::parse("Z/1"), Error);
    CHECK(Ring::parse("Q(zeta4)").to_string() == "Q(zeta4)");
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(12345);
    const std::vector<Ring> rings{Ring::integers(), Ring::rationals(), Ring::integers_mod(12), Ring::prime_field(13),
                                  Ring::cyclotomic(3), Ring::cyclotomic(5), Ring::cyclotomic(8)};
    for (const auto& k : rings) {
        for (int trial = 0; trial < 30; ++trial) {
            const Scalar a = random_scalar(k, rng), b = random_scalar(k, rng), c = random_scalar(k, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
            if (k.is_field() && !a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("annihilator and quotient") {
    auto [ann, quo] = annihilator_and_quotient(2, Ring::integers());
    CHECK(ann.is_zero());
    CHECK(quo == HomologyModule::from_factors(Ring::integers(), 0, {2}));
    auto [ann_q, quo_q] = annihilator_and_quotient(3, Ring::rationals());
    CHECK(ann_q.is_zero());
    CHECK(quo_q.is_zero());
    // Z/4: enumerate residues for the annihilator of 2 and the image 2 Z/4.
    const Ring z4 = Ring::integers_mod(4);
    std::size_t ann_size = 0, image_size = 0;
    std::vector<bool> in_image(4, false);
    for (long x = 0; x < 4; ++x) {
        if ((2 * x) % 4 == 0) ++ann_size;
        in_image[static_cast<std::size_t>((2 * x) % 4)] = true;
    }
    for (bool b : in_image) image_size += b;
    CHECK(ann_size == 2);
    CHECK(4 / image_size == 2);
    auto [ann4, quo4] = annihilator_and_quotient(2, z4);
    CHECK(ann4 == HomologyModule::from_factors(z4, 0, {2}));
    CHECK(quo4 == ann4);
    auto [ann0, quo0] = annihilator_and_quotient(0, z4);
    CHECK(ann0 == HomologyModule::free(z4, 1));
    auto [ann_c, quo_c] = annihilator_and_quotient(2, Ring::cyclotomic(3));
    CHECK(ann_c.is_zero());
    CHECK(quo_c.is_zero());
}

TEST_CASE("module normalization") {
    const Ring z = Ring::integers();
    auto m = HomologyModule::from_factors(z, 1, {2, 3, 4, 1});
    CHECK(m.free_rank == 1);
    CHECK(m.torsion == std::vector<mpz_class>{2, 12});
    CHECK((m + HomologyModule::from_factors(z, 0, {5})).torsion == std::vector<mpz_class>{2, 60});
    CHECK(m.to_string() == "Z + Z/2 + Z/12");
    CHECK(HomologyModule::from_factors(Ring::integers_mod(4), 0, {4, 2}).free_rank == 1);
}
