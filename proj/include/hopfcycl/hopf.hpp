#ifndef HOPFCYCL_HOPF_HPP
#define HOPFCYCL_HOPF_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfcycl/linalg.hpp"
#include "hopfcycl/scalars.hpp"

namespace hopfcycl {

/// Sparse vector over a basis: sorted (index, nonzero value) pairs.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;
/// Element of H^{(x) r}: basis tuples with nonzero coefficients, ordered by tuple.
using TensorVec = std::map<std::vector<std::uint32_t>, Scalar>;

SparseVec normalize(const Ring& ring, SparseVec v);
SparseVec basis_vector(const Ring& ring, std::uint32_t i);

/**
 * Finite-dimensional associative unital algebra given by structure constants:
 * b_i * b_j = sum_k mult[i * dim + j][k] b_k.
 */
struct AlgebraData {
    Ring ring = Ring::rationals();
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<SparseVec> mult;
    SparseVec unit;

    const SparseVec& product(std::uint32_t i, std::uint32_t j) const { return mult[i * dim + j]; }
    SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
    /// Matrix of left multiplication by x.
    SparseMatrix left_multiplication(const SparseVec& x) const;
    std::uint32_t index_of(const std::string& label) const;
};

struct Coproduct2Term {
    std::uint32_t left;
    std::uint32_t right;
    Scalar coeff;
};

/// Hopf algebra by tables: coproduct per basis element, counit, antipode matrix (column k = S(b_k)).
struct HopfAlgebraData {
    AlgebraData algebra;
    std::vector<std::vector<Coproduct2Term>> coproduct;
    std::vector<Scalar> counit;
    SparseMatrix antipode = SparseMatrix(Ring::rationals(), 0, 0);

    const Ring& ring() const noexcept { return algebra.ring; }
    std::size_t dim() const noexcept { return algebra.dim; }
};

struct Character {
    std::vector<Scalar> values;
    Scalar operator()(const SparseVec& x) const;
};

struct GroupLike {
    SparseVec element;
};

struct CMTriple {
    GroupLike pi;
    Character alpha;
    Character beta;
    bool valid = false;
    /// Empty when valid; otherwise "alpha(pi) != 1", "beta(pi) != 1" or "(alpha*S_pi*beta)^2 != id".
    std::string failure;
};

struct AxiomReport {
    std::vector<std::pair<std::string, bool>> items;
    bool all_pass() const;
    bool passed(const std::string& name) const;
};

/// Delta^{(r-1)} x in H^{(x) r}, computed by repeatedly splitting the last factor.
TensorVec iterated_coproduct(const HopfAlgebraData& h, const SparseVec& x, unsigned r);
/// Same tensor computed by splitting the first factor (for coassociativity checks).
TensorVec iterated_coproduct_left(const HopfAlgebraData& h, const SparseVec& x, unsigned r);

/// Counit as a 1 x dim matrix; eta * eps as a dim x dim matrix.
SparseMatrix counit_map(const HopfAlgebraData& h);
SparseMatrix unit_counit_map(const HopfAlgebraData& h);
SparseMatrix character_map(const Ring& ring, const Character& c);

/**
 * (f * g)(a) = f(a1) g(a2). Maps are matrices with dim columns and either 1
 * row (target k) or dim rows (target H).
 */
SparseMatrix convolution(const HopfAlgebraData& h, const SparseMatrix& f, const SparseMatrix& g);

/// S_pi(a) = pi S(a).
SparseMatrix twisted_antipode(const HopfAlgebraData& h, const GroupLike& pi);

bool is_character(const HopfAlgebraData& h, const Character& c);
bool is_grouplike(const HopfAlgebraData& h, const SparseVec& x);

CMTriple check_cm_triple(const HopfAlgebraData& h, const GroupLike& pi, const Character& alpha, const Character& beta);

/// Associativity, unit, coassociativity, counit, antipode, and multiplicativity of Delta and eps.
AxiomReport verify_hopf_axioms(const HopfAlgebraData& h);

/**
 * All characters of an algebra whose structure constants are monomial
 * (every b_i b_j is 0 or a single basis element with coefficient 1), found by
 * backtracking over the solutions of x^k = x^l for each basis element.
 * Throws UnsupportedCombination for non-monomial algebras.
 */
std::vector<Character> enumerate_characters_monomial(const AlgebraData& a);

Character counit_character(const HopfAlgebraData& h);

}  // namespace hopfcycl

#endif
