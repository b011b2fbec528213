#ifndef HOPFCYCL_QUIVERS_HPP
#define HOPFCYCL_QUIVERS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopfcycl/cyclic.hpp"
#include "hopfcycl/hopf.hpp"

namespace hopfcycl {

/**
 * Finite quiver. Paths compose right to left: the word (w_1, ..., w_L) is the
 * algebra product w_1 ... w_L, so w_L is traversed first and consecutive
 * arrows satisfy source(w_i) = target(w_{i+1}).
 */
struct Quiver {
    struct Arrow {
        std::string id;
        std::uint32_t source;
        std::uint32_t target;
    };
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    /// n vertices e_0..e_{n-1}, arrows a_i: e_i -> e_{i+1 mod n}.
    static Quiver crown(unsigned n);
    static Quiver one_loop();
    /// v0 -> v1.
    static Quiver a2();
    /// {"vertices": [...], "arrows": [{"id", "src", "tgt"}]} or {"crown": n}.
    static Quiver from_json(const std::string& text);
    /// Disjoint union with k isolated vertices.
    Quiver with_isolated_vertices(unsigned k) const;
};

struct Path {
    std::vector<std::uint32_t> word;  // product order
    std::uint32_t source = 0;
    std::uint32_t target = 0;
    std::size_t length() const noexcept { return word.size(); }
    bool is_cycle() const noexcept { return source == target; }
    friend bool operator<(const Path& a, const Path& b) {
        return std::tie(a.word, a.source, a.target) < std::tie(b.word, b.source, b.target);
    }
    friend bool operator==(const Path& a, const Path& b) = default;
};

std::string path_label(const Quiver& q, const Path& p);

/// All paths of length L, ordered by word (vertex paths ordered by vertex).
std::vector<Path> paths_of_length(const Quiver& q, std::size_t L);
/// p * r, or nullopt when not composable.
std::optional<Path> concatenate(const Path& p, const Path& r);

/**
 * kQ / m^n for n >= 1: basis all paths of length < n ordered by length, the
 * product of two paths is their concatenation when composable and shorter
 * than n, zero otherwise.
 */
class TruncatedPathAlgebra {
   public:
    TruncatedPathAlgebra(Quiver q, unsigned n, const Ring& ring);

    const Quiver& quiver() const noexcept { return q_; }
    unsigned truncation() const noexcept { return n_; }
    const Ring& ring() const noexcept { return data_->ring; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Path>& basis() const noexcept { return basis_; }
    std::size_t grade(std::uint32_t i) const { return basis_[i].length(); }
    /// Basis index of a path, or nullopt when it vanishes in the quotient.
    std::optional<std::uint32_t> index_of(const Path& p) const;
    std::shared_ptr<const AlgebraData> algebra() const noexcept { return data_; }

   private:
    Quiver q_;
    unsigned n_;
    std::vector<Path> basis_;
    std::map<Path, std::uint32_t> index_;
    std::shared_ptr<AlgebraData> data_;
};

struct CycleCounts {
    std::size_t a_q = 0;          // rotation orbits of closed paths of length q
    std::vector<std::size_t> b;   // b[r] for r = 0..q: orbits of primitive cycles of length r
};

/// Brute-force enumeration of closed paths and their rotation orbits.
CycleCounts cycle_orbit_counts(const Quiver& q, std::size_t length);

/// Length of the middle paths in P_i: nc for i = 2c, nc + 1 for i = 2c + 1.
std::size_t anick_green_length(unsigned n, unsigned i);

/// One graded chain complex: C_0 .. C_top with boundaries and a grade per basis element.
struct GradedWindow {
    ChainComplexWindow window;
    std::vector<std::vector<std::size_t>> grades;  // grades[i][basis index]

    /// H_i restricted to grade q.
    HomologyModule homology(unsigned i, std::size_t q) const;
    /// Grades carried by C_i.
    std::vector<std::size_t> grades_in(unsigned i) const;
};

/**
 * Projective bimodule resolution P_i = A (x)_E k Gamma^(i) (x)_E A of A = kQ/m^n
 * (E = kQ_0), i = 0 .. i_max, with basis triples (u, gamma, v).
 */
struct SkoldbergResolution {
    std::vector<std::vector<std::tuple<std::uint32_t, Path, std::uint32_t>>> basis;
    std::vector<SparseMatrix> d;   // d[i]: P_i -> P_{i-1}; d[0]: P_0 -> A (multiplication)
    std::vector<std::vector<std::size_t>> grades;
};

SkoldbergResolution skoldberg_resolution(const TruncatedPathAlgebra& a, unsigned i_max);

struct ExactnessReport {
    bool squares_to_zero = false;
    bool grade_preserving = false;
    bool exact = false;  // augmented complex exact at A, P_0, ..., P_{i_max - 1}
    std::vector<std::string> failures;
};

/// Rank check over the fraction field (Q for Z, the ring itself for fields).
ExactnessReport check_resolution(const TruncatedPathAlgebra& a, const SkoldbergResolution& r);

/**
 * M (x)_{A^e} P for a finite bimodule M whose basis vectors are vertex-homogeneous
 * (e_s m e_t = m for one pair s, t). left[k] and right[k] are the actions of the
 * basis path k. Degrees 0 .. top. Grades are len(gamma) + m_grade[m].
 */
GradedWindow skoldberg_tensor_complex(const TruncatedPathAlgebra& a, const std::vector<SparseMatrix>& left,
                                      const std::vector<SparseMatrix>& right, const std::vector<std::size_t>& m_grade,
                                      unsigned top);

/// A (x)_{A^e} P: Hochschild complex of A from the resolution, degrees 0 .. top.
GradedWindow skoldberg_hochschild_complex(const TruncatedPathAlgebra& a, unsigned top);

struct GradedHomology {
    HomologyModule total;
    std::map<std::size_t, HomologyModule> by_grade;  // nonzero grades only
};

GradedHomology hh_via_skoldberg(const TruncatedPathAlgebra& a, unsigned p);

/**
 * Normalized bar complex relative to E = kQ_0: A (x)_E rad^{(x)_E p}, graded by
 * path length. Independent of the resolution; degrees 0 .. top.
 */
GradedWindow relative_bar_complex(const TruncatedPathAlgebra& a, unsigned top);

/// Closed formula for HH_{p,q}(kQ/m^n).
HomologyModule hh_closed_form(const Quiver& q, unsigned n, unsigned p, std::size_t grade, const Ring& ring);

/// Vertex characters alpha_s of kQ/m^n (value 1 on e_s, 0 on every other path).
Character vertex_character(const TruncatedPathAlgebra& a, std::uint32_t s);

/// H_p(A, _beta k_alpha) from the closed description: paths of length nc (p = 2c) or nc + 1 (p = 2c + 1)
/// from the vertex of beta to the vertex of alpha.
HomologyModule coefficient_homology_closed(const TruncatedPathAlgebra& a, std::uint32_t alpha_vertex,
                                           std::uint32_t beta_vertex, unsigned p);
/// Same homology computed from the complex _beta k_alpha (x)_{A^e} P.
HomologyModule coefficient_homology_skoldberg(const TruncatedPathAlgebra& a, std::uint32_t alpha_vertex,
                                              std::uint32_t beta_vertex, unsigned p);

struct PathAlgebraHH {
    std::vector<std::size_t> hh0, hh1;  // indexed by grade 0..L
};

/// HH_0, HH_1 of the full path algebra per grade, from the length-one resolution.
PathAlgebraHH path_algebra_hh(const Quiver& q, std::size_t max_grade, const Ring& ring = Ring::rationals());

struct SemisimpleReport {
    std::size_t vertices = 0;
    std::vector<std::size_t> hh;            // computed, degrees 0..N
    std::vector<std::size_t> hc;            // computed, degrees 0..N
    std::vector<std::size_t> hc_quoted;     // #vertices in even degrees, 0 in odd
    std::size_t h0_equal_computed = 0;      // dim H_0(kQ_0, _a k_a)
    std::size_t h0_distinct_computed = 0;   // dim H_0(kQ_0, _b k_a), a != b (needs 2 vertices)
    std::size_t h0_equal_quoted = 0;        // #vertices
    long h0_distinct_quoted = 0;            // #vertices - 2
    std::vector<std::size_t> h_positive_computed;  // sum over all character pairs of dim H_p, p = 1..N
};

/// kQ/m = kQ_0 over a field containing Q, degrees 0..N.
SemisimpleReport semisimple_case(const Quiver& q, const Ring& ring, unsigned N);

/// Rings containing Q: HC_n from the graded splitting of the SBI sequence, n = 0..N.
std::vector<std::size_t> graded_sbi_hc(const TruncatedPathAlgebra& a, unsigned N);

enum class CorrectionReading { RDoesNotDivideN, NDoesNotDivideR };

/// Closed dimension formula for HC_p(kQ/m^n), n >= 2.
std::size_t hc_closed_form_truncated(const Quiver& q, unsigned n, unsigned p,
                                     CorrectionReading reading = CorrectionReading::RDoesNotDivideN);

// ---------------------------------------------------------------- Taft algebras

/// Primitive n-th root of unity in the ring; throws MissingRootOfUnity.
Scalar primitive_root_of_unity(const Ring& ring, unsigned n);

struct TaftAlgebra {
    std::shared_ptr<const TruncatedPathAlgebra> algebra;
    std::shared_ptr<const HopfAlgebraData> hopf;
    Scalar q;
    unsigned n;

    std::uint32_t e(unsigned i) const;
    std::uint32_t a(unsigned i) const;
    /// pi_i = sum_l q^{il} e_l.
    GroupLike grouplike(unsigned i) const;
    /// alpha_u: 1 on e_u.
    Character character(unsigned u) const;
};

/// The n-crown truncated at n with the Taft coproduct, counit and antipode (default ring Q(zeta_n)).
TaftAlgebra taft_hopf(unsigned n);
TaftAlgebra taft_hopf(unsigned n, const Ring& ring);

/// Grouplikes among the candidate sums sum_l c_l e_l with c_l in the n-th roots of unity.
std::vector<GroupLike> enumerate_grouplikes_taft(const TaftAlgebra& t);

struct TaftTriple {
    unsigned i, u, v;
    bool by_congruence;
    bool by_matrix;
};

/// All n^3 candidates (pi_i, alpha_u, alpha_v) with both verdicts.
std::vector<TaftTriple> taft_cm_triples(const TaftAlgebra& t);
bool taft_congruence(unsigned n, unsigned i, unsigned u, unsigned v);

/// HC_p^{pi_i, alpha_u, alpha_v}(Lambda_n) via the lambda complex.
HomologyModule taft_cm_homology(const TaftAlgebra& t, unsigned i, unsigned u, unsigned v, unsigned p);
/// HC_0 .. HC_N for one triple, sharing the cyclic module across degrees.
std::vector<std::size_t> taft_cm_table(const TaftAlgebra& t, unsigned i, unsigned u, unsigned v, unsigned N);
/// Dimension predicted by the closed formula.
std::size_t taft_cm_closed(unsigned n, unsigned i, unsigned u, unsigned v, unsigned p);

struct TaftDecompositionRow {
    unsigned degree;
    std::size_t classical;
    std::size_t cm_sum;  // sum over valid triples
};

/// Classical HC_p(Lambda_n) against the sum of the CM homologies over all valid triples.
std::vector<TaftDecompositionRow> taft_decomposition_report(const TaftAlgebra& t, unsigned N);

}  // namespace hopfcycl

#endif
