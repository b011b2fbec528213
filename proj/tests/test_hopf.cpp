#include <doctest.h>

#include <memory>

#include "hopfcycl/groups.hpp"
#include "hopfcycl/hopf.hpp"

using namespace hopfcycl;

TEST_CASE("group algebras satisfy the Hopf axioms") {
    for (const auto& [g, ring] : {std::pair{FiniteGroup::cyclic(3), Ring::rationals()},
                                  std::pair{FiniteGroup::cyclic(4), Ring::integers()},
                                  std::pair{FiniteGroup::symmetric3(), Ring::rationals()},
                                  std::pair{FiniteGroup::cyclic(2), Ring::integers_mod(4)}}) {
        const auto h = group_algebra(g, ring);
        const auto report = verify_hopf_axioms(h);
        CAPTURE(ring.to_string());
        CHECK(report.all_pass());
        for (std::uint32_t x = 0; x < g.order(); ++x) {
            CHECK(h.antipode.at(g.inv(x), x).is_one());
            CHECK(h.antipode.column(x).size() == 1);
        }
    }
}

TEST_CASE("Z/2 antipode is the identity permutation") {
    const auto h = group_algebra(FiniteGroup::cyclic(2), Ring::rationals());
    CHECK(h.antipode == SparseMatrix::identity(Ring::rationals(), 2));
}

TEST_CASE("broken structure is caught") {
    auto h = group_algebra(FiniteGroup::cyclic(3), Ring::rationals());
    const Ring q = Ring::rationals();
    h.antipode = SparseMatrix::identity(q, 3);
    auto r = verify_hopf_axioms(h);
    CHECK_FALSE(r.passed("antipode"));
    CHECK(r.passed("associativity"));

    auto h2 = group_algebra(FiniteGroup::cyclic(3), q);
    h2.counit[1] = Scalar::from_int(q, 2);
    auto r2 = verify_hopf_axioms(h2);
    CHECK_FALSE(r2.passed("counit"));
}

TEST_CASE("iterated coproduct agrees with left splitting") {
    const auto h = group_algebra(FiniteGroup::symmetric3(), Ring::rationals());
    const SparseVec x = normalize(h.ring(), {{1, Scalar::from_int(h.ring(), 2)}, {4, Scalar::from_int(h.ring(), -1)}});
    for (unsigned r = 1; r <= 4; ++r) CHECK(iterated_coproduct(h, x, r) == iterated_coproduct_left(h, x, r));
    const auto t = iterated_coproduct(h, basis_vector(h.ring(), 3), 3);
    REQUIRE(t.size() == 1);
    CHECK(t.begin()->first == std::vector<std::uint32_t>{3, 3, 3});
}

TEST_CASE("characters of cyclic group algebras") {
    for (unsigned m : {2u, 3u, 4u}) {
        const Ring k = Ring::cyclotomic(m);
        const auto h = group_algebra(FiniteGroup::cyclic(m), k);
        const auto chars = enumerate_characters_monomial(h.algebra);
        CHECK(chars.size() == m);
        for (const auto& c : chars) CHECK(is_character(h, c));
        for (unsigned j = 0; j < m; ++j) CHECK(is_character(h, cyclic_group_character(Scalar::zeta(k, j), m)));
    }
    // Over Q only the trivial character exists for Z/3, and two for Z/2.
    CHECK(enumerate_characters_monomial(group_algebra(FiniteGroup::cyclic(3), Ring::rationals()).algebra).size() == 1);
    CHECK(enumerate_characters_monomial(group_algebra(FiniteGroup::cyclic(2), Ring::rationals()).algebra).size() == 2);
    CHECK_THROWS_AS(cyclic_group_character(Scalar::zeta(Ring::cyclotomic(3)), 2), Error);
}

TEST_CASE("S_3 has two characters over Q") {
    const auto h = group_algebra(FiniteGroup::symmetric3(), Ring::rationals());
    CHECK(enumerate_characters_monomial(h.algebra).size() == 2);
}

TEST_CASE("grouplikes and CM triples in group algebras") {
    const Ring k = Ring::cyclotomic(4);
    const auto h = group_algebra(FiniteGroup::cyclic(4), k);
    for (std::uint32_t g = 0; g < 4; ++g) CHECK(is_grouplike(h, basis_vector(k, g)));
    CHECK_FALSE(is_grouplike(h, normalize(k, {{0, Scalar::one(k)}, {1, Scalar::one(k)}})));
    const Character eps = counit_character(h);
    for (std::uint32_t s = 0; s < 4; ++s) CHECK(check_cm_triple(h, group_element(k, s), eps, eps).valid);
    // alpha(g) = i: alpha(pi) = 1 only for pi = 1.
    const Character alpha = cyclic_group_character(Scalar::zeta(k), 4);
    CHECK(check_cm_triple(h, group_element(k, 0), alpha, alpha).valid);
    const auto bad = check_cm_triple(h, group_element(k, 2), alpha, eps);
    CHECK_FALSE(bad.valid);
    CHECK(bad.failure == "alpha(pi) != 1; (alpha*S_pi*beta)^2 != id");
}

TEST_CASE("convolution with the counit is neutral") {
    const auto h = group_algebra(FiniteGroup::symmetric3(), Ring::rationals());
    const SparseMatrix id = SparseMatrix::identity(h.ring(), h.dim());
    CHECK(convolution(h, unit_counit_map(h), id) == id);
    CHECK(convolution(h, id, unit_counit_map(h)) == id);
    CHECK(convolution(h, h.antipode, id) == unit_counit_map(h));
    const SparseMatrix eps = counit_map(h);
    CHECK(convolution(h, eps, eps) == eps);
}
