#include <doctest.h>

#include <memory>
#include <random>

#include "hopfcycl/cyclic.hpp"
#include "hopfcycl/groups.hpp"

using namespace hopfcycl;

namespace {

std::shared_ptr<const HopfAlgebraData> kg(const FiniteGroup& g, const Ring& ring) {
    return std::make_shared<const HopfAlgebraData>(group_algebra(g, ring));
}

HopfCyclicModule group_module(const std::shared_ptr<const HopfAlgebraData>& h, std::uint32_t pi,
                              const Character& alpha, const Character& beta) {
    return HopfCyclicModule(h, check_cm_triple(*h, group_element(h->ring(), pi), alpha, beta));
}

HopfCyclicModule trivial_module(const FiniteGroup& g, const Ring& ring, std::uint32_t pi) {
    auto h = kg(g, ring);
    const Character eps = counit_character(*h);
    return group_module(h, pi, eps, eps);
}

// t_n(g_1..g_n) = pi (g_1..g_n)^{-1} (x) g_1 (x) ... (x) g_{n-1}, scaled by
// alpha(g_1..g_n) beta(g_n) for characters; built directly from the group table.
SparseMatrix group_t_oracle(const FiniteGroup& g, const Ring& ring, std::uint32_t pi, unsigned n,
                            const Character& alpha, const Character& beta) {
    const std::size_t d = g.order();
    std::size_t size = 1;
    for (unsigned k = 0; k < n; ++k) size *= d;
    std::vector<SparseMatrix::Column> cols(size);
    for (std::size_t idx = 0; idx < size; ++idx) {
        std::vector<std::uint32_t> x(n);
        std::size_t r = idx;
        for (unsigned k = n; k-- > 0;) {
            x[k] = static_cast<std::uint32_t>(r % d);
            r /= d;
        }
        std::uint32_t prod = g.identity();
        for (auto v : x) prod = g.mul(prod, v);
        std::size_t out = g.mul(pi, g.inv(prod));
        for (unsigned k = 0; k + 1 < n; ++k) out = out * d + x[k];
        const Scalar c = alpha.values[prod] * beta.values[x[n - 1]];
        cols[idx].emplace_back(static_cast<std::uint32_t>(out), c);
    }
    return SparseMatrix::from_columns(ring, size, std::move(cols));
}

}  // namespace

TEST_CASE("cyclic laws for Q[Z/3]") {
    for (std::uint32_t pi : {0u, 1u}) {
        const auto m = trivial_module(FiniteGroup::cyclic(3), Ring::rationals(), pi);
        const auto r = verify_cyclic_axioms(m, 3);
        CHECK(r.all_pass());
        CHECK(verify_bicomplex_identities(m, 3).all_pass());
    }
}

TEST_CASE("cyclic operator of a group algebra matches the twisted permutation") {
    const Ring k = Ring::cyclotomic(4);
    auto h = kg(FiniteGroup::cyclic(4), k);
    const FiniteGroup g = FiniteGroup::cyclic(4);
    const Character eps = counit_character(*h);
    for (std::uint32_t pi = 0; pi < 4; ++pi) {
        const auto m = group_module(h, pi, eps, eps);
        for (unsigned n = 1; n <= 3; ++n) CHECK(m.cyclic(n) == group_t_oracle(g, k, pi, n, eps, eps));
    }
    // alpha = beta with alpha(g^2) = 1
    const Character alpha = cyclic_group_character(Scalar::zeta(k, 2), 4);
    const auto m = group_module(h, 2, alpha, alpha);
    for (unsigned n = 1; n <= 3; ++n) CHECK(m.cyclic(n) == group_t_oracle(g, k, 2, n, alpha, alpha));

    const FiniteGroup s3 = FiniteGroup::symmetric3();
    const auto ms = trivial_module(s3, Ring::rationals(), 0);
    const Character eps3{std::vector<Scalar>(6, Scalar::one(Ring::rationals()))};
    for (unsigned n = 1; n <= 3; ++n) CHECK(ms.cyclic(n) == group_t_oracle(s3, Ring::rationals(), 0, n, eps3, eps3));
}

TEST_CASE("classical cyclic module laws") {
    auto a = std::make_shared<const AlgebraData>(group_algebra(FiniteGroup::symmetric3(), Ring::rationals()).algebra);
    const ClassicalCyclicModule m(a);
    CHECK(verify_cyclic_axioms(m, 2).all_pass());
    CHECK(verify_bicomplex_identities(m, 2).all_pass());
}

TEST_CASE("invalid triples are rejected unless forced") {
    const Ring k = Ring::cyclotomic(3);
    auto h = kg(FiniteGroup::cyclic(3), k);
    const Character alpha = cyclic_group_character(Scalar::zeta(k), 3);
    const auto t = check_cm_triple(*h, group_element(k, 1), alpha, alpha);
    CHECK_FALSE(t.valid);
    CHECK_THROWS_AS(HopfCyclicModule(h, t), Error);
    const HopfCyclicModule forced(h, t, true);
    CHECK_FALSE(verify_cyclic_axioms(forced, 2).all_pass());
}

TEST_CASE("HC of the trivial Hopf algebra") {
    for (const Ring& ring : {Ring::integers(), Ring::rationals(), Ring::prime_field(5)}) {
        const auto m = trivial_module(FiniteGroup::cyclic(1), ring, 0);
        for (unsigned n = 0; n <= 5; ++n) {
            const auto hc = cyclic_bicomplex_hc(m, n);
            CHECK(hc == HomologyModule::free(ring, n % 2 == 0 ? 1 : 0));
        }
    }
    const auto mq = trivial_module(FiniteGroup::cyclic(1), Ring::rationals(), 0);
    for (unsigned n = 0; n <= 5; ++n) CHECK(connes_lambda_hc(mq, n).dimension() == (n % 2 == 0 ? 1u : 0u));
}

TEST_CASE("HC of Z[Z/2] at pi = 1 has torsion in degree 1") {
    const Ring z = Ring::integers();
    const auto m = trivial_module(FiniteGroup::cyclic(2), z, 0);
    CHECK(cyclic_bicomplex_hc(m, 0) == HomologyModule::free(z, 1));
    CHECK(cyclic_bicomplex_hc(m, 1) == HomologyModule::from_factors(z, 0, {2}));
    CHECK(cyclic_bicomplex_hc(m, 2) == HomologyModule::free(z, 1));
    CHECK_THROWS_AS(connes_lambda_hc(m, 1), Error);
}

TEST_CASE("HC of Q[Z/3] at pi = 1") {
    const auto m = trivial_module(FiniteGroup::cyclic(3), Ring::rationals(), 0);
    const std::vector<std::size_t> expected{1, 0, 1, 0};
    for (unsigned n = 0; n < 4; ++n) {
        CHECK(connes_lambda_hc(m, n).dimension() == expected[n]);
        CHECK(cyclic_bicomplex_hc(m, n).dimension() == expected[n]);
    }
}

TEST_CASE("simplicial homology equals the coefficient Hochschild complex") {
    struct Case {
        FiniteGroup g;
        Ring ring;
    };
    for (const auto& c : {Case{FiniteGroup::cyclic(2), Ring::rationals()}, Case{FiniteGroup::cyclic(2), Ring::integers()},
                          Case{FiniteGroup::cyclic(3), Ring::integers()}, Case{FiniteGroup::symmetric3(), Ring::integers()}}) {
        auto h = kg(c.g, c.ring);
        const Character eps = counit_character(*h);
        const auto m = group_module(h, 0, eps, eps);
        const unsigned N = c.g.order() > 3 ? 2 : 3;
        const auto w1 = hochschild_window(m, N);
        const auto w2 = coefficient_hochschild_window(*h, eps, eps, N);
        CHECK(w1.squares_to_zero());
        CHECK(w2.squares_to_zero());
        for (unsigned n = 0; n <= N; ++n) CHECK(w1.homology(n) == w2.homology(n));
    }
    // group homology of Z/2 with integer coefficients: Z, Z/2, 0, Z/2
    const Ring z = Ring::integers();
    const auto w = hochschild_window(trivial_module(FiniteGroup::cyclic(2), z, 0), 3);
    CHECK(w.homology(0) == HomologyModule::free(z, 1));
    CHECK(w.homology(1) == HomologyModule::from_factors(z, 0, {2}));
    CHECK(w.homology(2).is_zero());
    CHECK(w.homology(3) == HomologyModule::from_factors(z, 0, {2}));
}

TEST_CASE("bimodule path with M = A gives the classical Hochschild homology") {
    // HH_n(Q[Z/3]) = Q^3 in degree 0 and 0 above (separable algebra).
    auto a = group_algebra(FiniteGroup::cyclic(3), Ring::rationals()).algebra;
    const auto w = algebra_hochschild_window(a, 2);
    CHECK(w.squares_to_zero());
    CHECK(w.homology(0).dimension() == 3);
    CHECK(w.homology(1).dimension() == 0);
    CHECK(w.homology(2).dimension() == 0);
    const ClassicalCyclicModule cm(std::make_shared<const AlgebraData>(a));
    const auto w2 = hochschild_window(cm, 2);
    for (unsigned n = 0; n <= 2; ++n) CHECK(w2.homology(n) == w.homology(n));
}

TEST_CASE("lambda complex agrees with the bicomplex on random valid triples") {
    std::mt19937 rng(20261015);
    int tested = 0;
    while (tested < 10) {
        const unsigned m = 2 + rng() % 3;
        const Ring k = Ring::cyclotomic(m);
        auto h = kg(FiniteGroup::cyclic(m), k);
        const std::uint32_t pi = rng() % m;
        const Character alpha = cyclic_group_character(Scalar::zeta(k, rng() % m), m);
        const Character beta = cyclic_group_character(Scalar::zeta(k, rng() % m), m);
        const auto t = check_cm_triple(*h, group_element(k, pi), alpha, beta);
        if (!t.valid) continue;
        ++tested;
        const HopfCyclicModule mod(h, t);
        for (unsigned n = 0; n <= 3; ++n) {
            CAPTURE(m);
            CAPTURE(pi);
            CAPTURE(n);
            CHECK(connes_lambda_hc(mod, n) == cyclic_bicomplex_hc(mod, n));
        }
    }
}

TEST_CASE("SBI bookkeeping") {
    const auto m = trivial_module(FiniteGroup::cyclic(2), Ring::rationals(), 0);
    const auto r = sbi_check(m, 4);
    CHECK(r.consistent);
    // HH = 1,0,0,0,0 and HC = 1,0,1,0,1 for Q[Z/2] at pi = 1
    CHECK(sbi_check({1, 0, 0, 0, 0}, {1, 0, 1, 0, 1}).consistent);
    CHECK_FALSE(sbi_check({1, 0, 0, 0, 0}, {1, 0, 2, 0, 1}).consistent);
    CHECK_FALSE(sbi_check({1, 0, 0}, {2, 0, 1}).consistent);
}

TEST_CASE("resource cap") {
    auto h = kg(FiniteGroup::symmetric3(), Ring::rationals());
    const Character eps = counit_character(*h);
    const HopfCyclicModule m(h, check_cm_triple(*h, group_element(Ring::rationals(), 0), eps, eps), false, 100);
    CHECK_NOTHROW(m.face(2, 1));
    try {
        (void)m.face(3, 1);
        FAIL("expected ResourceCap");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ResourceCap);
    }
}
