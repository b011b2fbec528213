#ifndef HOPFCYCL_MODULE_HPP
#define HOPFCYCL_MODULE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hopfcycl/scalars.hpp"

namespace hopfcycl {

/**
 * Finitely generated module over one of the coefficient rings, stored as
 * free rank plus invariant factors d_1 | d_2 | ... (each >= 2).
 *
 * Over Z/m a cyclic summand Z/d with d | m, d < m, is torsion; Z/m itself is
 * counted in free_rank. Over a field torsion is always empty.
 */
struct HomologyModule {
    Ring ring = Ring::rationals();
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;

    static HomologyModule zero(const Ring& ring) { return HomologyModule{ring, 0, {}}; }
    static HomologyModule free(const Ring& ring, std::size_t rank) { return HomologyModule{ring, rank, {}}; }
    /// free_rank copies of the ring plus cyclic summands Z/d (any order; 1s dropped).
    static HomologyModule from_factors(const Ring& ring, std::size_t free_rank, const std::vector<mpz_class>& cyclic_orders);

    bool is_zero() const noexcept { return free_rank == 0 && torsion.empty(); }
    /// Dimension over a field; throws NotAField otherwise.
    std::size_t dimension() const;

    HomologyModule& operator+=(const HomologyModule& other);
    friend HomologyModule operator+(HomologyModule a, const HomologyModule& b) { return a += b; }
    /// k^r as a direct sum of r copies.
    HomologyModule power(std::size_t r) const;

    /// e.g. "Z^2 + Z/2 + Z/6", "Q^3", "0".
    std::string to_string() const;

    friend bool operator==(const HomologyModule& a, const HomologyModule& b) {
        return a.ring == b.ring && a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
};

std::ostream& operator<<(std::ostream& os, const HomologyModule& m);

/**
 * Ann(m) = {x : m x = 0} and k / m k for the ring k, as modules over k.
 * Cyclotomic rings are rejected with UnsupportedRing.
 */
std::pair<HomologyModule, HomologyModule> annihilator_and_quotient(const mpz_class& m, const Ring& ring);

}  // namespace hopfcycl

#endif
