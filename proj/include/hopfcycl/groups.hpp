#ifndef HOPFCYCL_GROUPS_HPP
#define HOPFCYCL_GROUPS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <memory>
#include <string>
#include <vector>

#include "hopfcycl/cyclic.hpp"
#include "hopfcycl/hopf.hpp"

namespace hopfcycl {

/// Finite group by multiplication table; axioms are checked on construction.
class FiniteGroup {
   public:
    /// Throws InvalidInput if the table is not a group.
    static FiniteGroup from_table(std::vector<std::vector<std::uint32_t>> table,
                                  std::vector<std::string> labels = {});
    /// Z/m with element i = g^i.
    static FiniteGroup cyclic(std::uint32_t m);
    /// S_3 as permutations of {0, 1, 2}; element 0 is the identity.
    static FiniteGroup symmetric3();
    /// {"order": m, "table": [[...]]} or {"cyclic": m}.
    static FiniteGroup from_json(const std::string& text);

    std::size_t order() const noexcept { return table_.size(); }
    std::uint32_t identity() const noexcept { return identity_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a][b]; }
    std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
    std::uint32_t power(std::uint32_t a, long k) const;
    std::size_t element_order(std::uint32_t a) const;
    bool is_abelian() const;
    /// Some element generating the group, if cyclic.
    std::optional<std::uint32_t> cyclic_generator() const;
    const std::vector<std::vector<std::uint32_t>>& table() const noexcept { return table_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

   private:
    std::vector<std::vector<std::uint32_t>> table_;
    std::vector<std::uint32_t> inverse_;
    std::uint32_t identity_ = 0;
    std::vector<std::string> labels_;
};

struct Subgroup {
    FiniteGroup group;
    std::vector<std::uint32_t> elements;  // local index -> element of the ambient group
    std::uint32_t local_index(std::uint32_t g) const;
};

std::vector<std::vector<std::uint32_t>> conjugacy_classes(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, std::uint32_t pi);

/// kG with Delta g = g (x) g, eps(g) = 1, S(g) = g^{-1}.
HopfAlgebraData group_algebra(const FiniteGroup& g, const Ring& ring);
GroupLike group_element(const Ring& ring, std::uint32_t g);
/// Character of k[Z/m] with g^i -> zeta^i; throws InvalidCharacter unless zeta^m = 1.
Character cyclic_group_character(const Scalar& zeta, std::uint32_t m);

/**
 * k Gamma(G, pi): level n spanned by (g_0, ..., g_n) with g_0 ... g_n conjugate
 * to pi, tuples in lexicographic order.
 */
class GammaCyclicModule : public CyclicModule {
   public:
    GammaCyclicModule(FiniteGroup g, std::uint32_t pi, const Ring& ring,
                      std::size_t carrier_cap = default_carrier_cap());
    std::size_t dim(unsigned n) const override;
    const std::vector<std::vector<std::uint32_t>>& level(unsigned n) const;
    std::uint32_t index_of(const std::vector<std::uint32_t>& tuple) const;

   protected:
    SparseMatrix build_face(unsigned n, unsigned i) const override;
    SparseMatrix build_degeneracy(unsigned n, unsigned j) const override;
    SparseMatrix build_cyclic(unsigned n) const override;

   private:
    struct Level {
        std::vector<std::vector<std::uint32_t>> tuples;
        std::vector<std::uint32_t> position;  // encoded tuple -> index, or UINT32_MAX
    };
    const Level& level_data(unsigned n) const;
    SparseMatrix permutation_like(unsigned n_src, unsigned n_tgt,
                                  const std::function<std::vector<std::uint32_t>(const std::vector<std::uint32_t>&)>& f) const;

    FiniteGroup g_;
    std::uint32_t pi_;
    std::vector<bool> in_class_;
    mutable std::mutex level_mutex_;
    mutable std::map<unsigned, std::unique_ptr<Level>> levels_;
};

/// The Connes-Moscovici module of kG_pi with (pi, eps, eps).
std::shared_ptr<HopfCyclicModule> centralizer_module(const FiniteGroup& g, std::uint32_t pi, const Ring& ring);

/// theta_n: C_n(kG_pi) -> k Gamma_n(G, pi), h_1..h_n -> (pi (h_1..h_n)^{-1}, h_1, ..., h_n).
SparseMatrix theta_map(const FiniteGroup& g, std::uint32_t pi, unsigned n, const Ring& ring = Ring::rationals());

struct ThetaReport {
    bool chain_map = false;     // theta d_i = d_i theta and theta t = t theta
    bool homology_iso = false;  // Hochschild homology: equal dimensions, induced map onto
    std::vector<std::size_t> source_dims, target_dims;
    std::vector<std::string> failures;
};

/// Over Q, degrees <= N for the identities and < N for the induced map on homology.
ThetaReport theta_check(const FiniteGroup& g, std::uint32_t pi, unsigned N);

struct BurgheleaClassTerm {
    std::uint32_t representative;
    std::size_t centralizer_order;
    std::vector<std::size_t> hc;
};

struct BurgheleaReport {
    bool equal = false;
    std::vector<std::size_t> classical;  // dim HC_n(kG)
    std::vector<std::size_t> summed;     // sum over classes
    std::vector<BurgheleaClassTerm> classes;
};

/// Needs a field; HC via the lambda complex when the ring contains Q, the bicomplex otherwise.
BurgheleaReport burghelea_check(const FiniteGroup& g, const Ring& ring, unsigned N);

/// k + Ann(m)^{n/2} for even n, (k/mk)^{(n+1)/2} for odd n.
HomologyModule closed_hc_cyclic_group(const Ring& ring, std::uint32_t m_pi, unsigned n);
/// Sum of closed_hc_cyclic_group over pi in G with m_pi = [G : <pi>]; G must be cyclic.
HomologyModule closed_hc_group_algebra(const FiniteGroup& g, const Ring& ring, unsigned n);
std::uint32_t index_of_cyclic_subgroup(const FiniteGroup& g, std::uint32_t pi);

/**
 * H_0 .. H_N of the 2-periodic complex for k[Z/m] with coefficients _beta k_alpha,
 * zeta = alpha(g), rho = beta(g): d_odd = zeta rho^{-1} - 1, d_even = sum_i (zeta rho^{-1})^i.
 */
std::vector<HomologyModule> periodic_resolution_homology(std::uint32_t m, const Scalar& zeta, const Scalar& rho,
                                                         unsigned N);

/// Diagonal g^{i_1} (x) ... (x) g^{i_n} -> zeta^{i_1 + ... + i_n}; needs zeta^s = 1 for pi = g^s.
SparseMatrix chi_isomorphism(std::uint32_t m, std::uint32_t s, const Scalar& zeta, unsigned n);

struct ChiReport {
    bool identities = false;  // chi op^{alpha,alpha} = op^{eps,eps} chi for all faces, degeneracies, t
    std::vector<std::size_t> hc_twisted, hc_trivial;
    std::vector<std::string> failures;
};

ChiReport chi_check(std::uint32_t m, std::uint32_t s, const Scalar& zeta, unsigned N);

}  // namespace hopfcycl

#endif
