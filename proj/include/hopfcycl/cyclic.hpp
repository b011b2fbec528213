#ifndef HOPFCYCL_CYCLIC_HPP
#define HOPFCYCL_CYCLIC_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopfcycl/hopf.hpp"
#include "hopfcycl/linalg.hpp"
#include "hopfcycl/module.hpp"

namespace hopfcycl {

/// Carrier bound from HOPFCYCL_MAX_CARRIER, default 100000.
std::size_t default_carrier_cap();

/**
 * A cyclic module X_0, X_1, ... with X_n free of finite rank.
 *
 * Simplicial indexing: face(n, i): X_n -> X_{n-1} for 0 <= i <= n,
 * degeneracy(n, j): X_n -> X_{n+1} for 0 <= j <= n, cyclic(n): X_n -> X_n the
 * unsigned operator tau_n of order n + 1. Operators are built on first use
 * and cached.
 */
class CyclicModule {
   public:
    explicit CyclicModule(const Ring& ring, std::size_t carrier_cap = default_carrier_cap());
    virtual ~CyclicModule() = default;

    const Ring& ring() const noexcept { return ring_; }
    std::size_t carrier_cap() const noexcept { return cap_; }
    virtual std::size_t dim(unsigned n) const = 0;

    const SparseMatrix& face(unsigned n, unsigned i) const;
    const SparseMatrix& degeneracy(unsigned n, unsigned j) const;
    const SparseMatrix& cyclic(unsigned n) const;

    /// b = sum_{i=0}^{n} (-1)^i d_i : X_n -> X_{n-1} (zero map into X_{-1} = 0 for n = 0).
    const SparseMatrix& hochschild_boundary(unsigned n) const;
    /// b' = sum_{i=0}^{n-1} (-1)^i d_i.
    const SparseMatrix& bar_boundary(unsigned n) const;
    /// t = (-1)^n tau_n.
    const SparseMatrix& signed_cyclic(unsigned n) const;
    /// N = sum_{j=0}^{n} t^j.
    const SparseMatrix& norm(unsigned n) const;
    /// 1 - t.
    const SparseMatrix& one_minus_t(unsigned n) const;

   protected:
    virtual SparseMatrix build_face(unsigned n, unsigned i) const = 0;
    virtual SparseMatrix build_degeneracy(unsigned n, unsigned j) const = 0;
    virtual SparseMatrix build_cyclic(unsigned n) const = 0;
    void require_level(unsigned n) const;

   private:
    enum class Op : std::uint8_t { Face, Degeneracy, Cyclic, B, BPrime, SignedT, Norm, OneMinusT };
    const SparseMatrix& cached(Op op, unsigned n, unsigned i) const;

    Ring ring_;
    std::size_t cap_;
    mutable std::mutex mutex_;
    mutable std::map<std::tuple<Op, unsigned, unsigned>, std::unique_ptr<SparseMatrix>> cache_;
};

/**
 * Connes-Moscovici module C_n = H^{(x) n} of a Hopf algebra with a triple
 * (pi, alpha, beta). Level-n basis: n-tuples of basis indices, first factor
 * most significant.
 */
class HopfCyclicModule : public CyclicModule {
   public:
    /// Throws PreconditionFailed unless the triple is flagged valid, except with allow_invalid.
    HopfCyclicModule(std::shared_ptr<const HopfAlgebraData> h, CMTriple triple, bool allow_invalid = false,
                     std::size_t carrier_cap = default_carrier_cap());

    std::size_t dim(unsigned n) const override;
    const HopfAlgebraData& hopf() const noexcept { return *h_; }
    const CMTriple& triple() const noexcept { return triple_; }

   protected:
    SparseMatrix build_face(unsigned n, unsigned i) const override;
    SparseMatrix build_degeneracy(unsigned n, unsigned j) const override;
    SparseMatrix build_cyclic(unsigned n) const override;

   private:
    struct LegTerm {
        std::uint32_t mid;
        std::uint32_t last;
        Scalar coeff;
    };
    std::shared_ptr<const HopfAlgebraData> h_;
    CMTriple triple_;
    std::vector<std::vector<LegTerm>> legs_;  // a -> sum alpha(a1) a2 (x) a3
    SparseMatrix s_pi_;
};

/// Classical cyclic module X_n = A^{(x)(n+1)} of an algebra.
class ClassicalCyclicModule : public CyclicModule {
   public:
    explicit ClassicalCyclicModule(std::shared_ptr<const AlgebraData> a,
                                   std::size_t carrier_cap = default_carrier_cap());
    std::size_t dim(unsigned n) const override;
    const AlgebraData& algebra() const noexcept { return *a_; }

   protected:
    SparseMatrix build_face(unsigned n, unsigned i) const override;
    SparseMatrix build_degeneracy(unsigned n, unsigned j) const override;
    SparseMatrix build_cyclic(unsigned n) const override;

   private:
    std::shared_ptr<const AlgebraData> a_;
};

/// Chain complex C_0 .. C_top with boundaries d_n : C_n -> C_{n-1} for n = 1 .. top.
struct ChainComplexWindow {
    Ring ring = Ring::rationals();
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> boundaries;  // boundaries[n] for n >= 1; boundaries[0] is 0 x dims[0]

    unsigned top() const { return static_cast<unsigned>(dims.size()) - 1; }
    /// Homology at C_n for n < top (needs d_{n+1}).
    HomologyModule homology(unsigned n) const;
    bool squares_to_zero() const;
};

/// Hochschild complex (C_n, b) of a cyclic module, degrees 0 .. N + 1.
ChainComplexWindow hochschild_window(const CyclicModule& m, unsigned N);

/**
 * Standard Hochschild complex M (x) A^{(x) n} of an algebra with coefficients
 * in a finite bimodule M, given by action matrices (left[a], right[a] are
 * dim M x dim M matrices of m -> b_a m and m -> m b_a). Degrees 0 .. N + 1.
 */
ChainComplexWindow bimodule_hochschild_window(const AlgebraData& a, const std::vector<SparseMatrix>& left,
                                              const std::vector<SparseMatrix>& right, unsigned N);

/// _beta k_alpha: a . x . b = beta(a) x alpha(b).
ChainComplexWindow coefficient_hochschild_window(const HopfAlgebraData& h, const Character& alpha,
                                                 const Character& beta, unsigned N);

/// Hochschild complex of A with coefficients in A through the bimodule code path.
ChainComplexWindow algebra_hochschild_window(const AlgebraData& a, unsigned N);

/// HC_n as homology of the total complex of the (b, -b', 1 - t, N) bicomplex.
HomologyModule cyclic_bicomplex_hc(const CyclicModule& m, unsigned n);

/// HC_n from Connes' quotient C / (1 - t); needs Q inside the ring.
HomologyModule connes_lambda_hc(const CyclicModule& m, unsigned n);

struct CyclicAxiomReport {
    std::vector<std::pair<std::string, bool>> items;
    bool all_pass() const;
    bool passed_prefix(const std::string& prefix) const;
    std::vector<std::string> failures() const;
};

/// Simplicial identities, cyclic compatibilities, and tau_n^{n+1} = id for levels <= N.
CyclicAxiomReport verify_cyclic_axioms(const CyclicModule& m, unsigned N);

/// Bicomplex identities b^2 = 0, b'^2 = 0, (1 - t) b' = b (1 - t), N b = b' N through level N.
CyclicAxiomReport verify_bicomplex_identities(const CyclicModule& m, unsigned N);

struct SbiReport {
    bool consistent = false;
    std::string reason;
    /// Ranks of I: HH_n -> HC_n, S: HC_n -> HC_{n-2}, B: HC_{n-1} -> HH_n.
    std::vector<long> rank_i, rank_s, rank_b;
};

/**
 * Whether dimensions hh[0..N], hc[0..N] admit ranks making
 * ... -> HH_n -> HC_n -> HC_{n-2} -> HH_{n-1} -> ... exact. The ranks are forced
 * from the bottom, so the assignment is unique when it exists.
 */
SbiReport sbi_check(const std::vector<std::size_t>& hh, const std::vector<std::size_t>& hc);

/// Computes HH and HC (lambda complex) dimensions of m through N and runs sbi_check.
SbiReport sbi_check(const CyclicModule& m, unsigned N);

}  // namespace hopfcycl

#endif
