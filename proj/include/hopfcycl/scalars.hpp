#ifndef HOPFCYCL_SCALARS_HPP
#define HOPFCYCL_SCALARS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hopfcycl/errors.hpp"

namespace hopfcycl {

/// Integer polynomial, coefficients from degree 0 upward.
using IntPoly = std::vector<mpz_class>;

/// The n-th cyclotomic polynomial, monic of degree phi(n). Results are memoized.
const IntPoly& cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

/**
 * Descriptor of one of the exact coefficient rings: Z, Q, Z/m, F_p, Q(zeta_n).
 *
 * Q(zeta_n) is Q[x]/(Phi_n(x)) and zeta is the class of x. Rings compare equal
 * when kind and parameter agree.
 */
class Ring {
   public:
    enum class Kind : std::uint8_t { Integers, Rationals, IntegersMod, PrimeField, Cyclotomic };

    static Ring integers() { return Ring(Kind::Integers, 0); }
    static Ring rationals() { return Ring(Kind::Rationals, 0); }
    static Ring integers_mod(std::uint64_t m);
    static Ring prime_field(std::uint64_t p);
    static Ring cyclotomic(unsigned n);

    /// Accepts "Z", "Q", "Z/4", "F7", "Q(zeta3)" (also "Q(zeta_3)").
    static Ring parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    /// m for Z/m, p for F_p, n for Q(zeta_n), 0 otherwise.
    std::uint64_t parameter() const noexcept { return param_; }

    bool is_field() const noexcept {
        return kind_ == Kind::Rationals || kind_ == Kind::PrimeField || kind_ == Kind::Cyclotomic;
    }
    bool contains_rationals() const noexcept {
        return kind_ == Kind::Rationals || kind_ == Kind::Cyclotomic;
    }
    bool is_modular() const noexcept { return kind_ == Kind::IntegersMod || kind_ == Kind::PrimeField; }
    /// phi(n) for Q(zeta_n), 1 otherwise.
    unsigned extension_degree() const noexcept { return degree_; }
    /// True when the ring holds a primitive n-th root of unity.
    bool has_root_of_unity(unsigned n) const noexcept;

    std::string to_string() const;

    friend bool operator==(const Ring& a, const Ring& b) noexcept {
        return a.kind_ == b.kind_ && a.param_ == b.param_;
    }

   private:
    Ring(Kind kind, std::uint64_t param, unsigned degree = 1) : kind_(kind), degree_(degree), param_(param) {}

    Kind kind_;
    unsigned degree_;
    std::uint64_t param_;
};

std::ostream& operator<<(std::ostream& os, const Ring& ring);

/**
 * Immutable-by-convention exact ring element.
 *
 * Payload invariants: rationals in lowest terms with positive denominator,
 * residues in [0, m), cyclotomic coefficient vectors of length phi(n) reduced
 * modulo Phi_n.
 */
class Scalar {
   public:
    explicit Scalar(const Ring& ring);  // zero

    static Scalar zero(const Ring& ring) { return Scalar(ring); }
    static Scalar one(const Ring& ring) { return from_int(ring, 1); }
    static Scalar from_int(const Ring& ring, long value);
    static Scalar from_integer(const Ring& ring, const mpz_class& value);
    /// Rationals and cyclotomic fields only; F_p accepts fractions with denominators prime to p.
    static Scalar from_rational(const Ring& ring, const mpq_class& value);
    /// Element of Q(zeta_n) from coefficients of 1, zeta, zeta^2, ... (any length, reduced).
    static Scalar from_coefficients(const Ring& ring, std::vector<mpq_class> coefficients);
    /// zeta^power in Q(zeta_n); any integer power.
    static Scalar zeta(const Ring& ring, long power = 1);

    const Ring& ring() const noexcept { return ring_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    /// Multiplicative inverse; throws NotAUnit.
    Scalar inverse() const;
    Scalar pow(long exponent) const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Integer payload (Integers only).
    const mpz_class& integer() const;
    /// Rational payload (Rationals only).
    const mpq_class& rational() const;
    /// Residue payload (IntegersMod, PrimeField).
    std::uint64_t residue() const;
    /// Coefficients in the power basis (Cyclotomic only).
    const std::vector<mpq_class>& coefficients() const;
    /// Representative in Z for Integers and residue rings (residue in [0, m)).
    mpz_class lift() const;

    std::string to_string() const;

   private:
    using Payload = std::variant<mpz_class, mpq_class, std::uint64_t, std::vector<mpq_class>>;

    void check_ring(const Scalar& other) const;

    Ring ring_;
    Payload value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hopfcycl

#endif
