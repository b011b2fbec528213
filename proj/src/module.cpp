#include "hopfcycl/module.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace hopfcycl {

namespace {

// Invariant-factor chain from arbitrary cyclic orders via prime-power splitting.
std::vector<mpz_class> invariant_chain(const std::vector<mpz_class>& orders) {
    std::map<mpz_class, std::vector<mpz_class>> by_prime;  // prime -> prime powers
    for (mpz_class d : orders) {
        d = abs(d);
        if (d <= 1) continue;
        mpz_class p = 2;
        while (d > 1) {
            if (p * p > d) p = d;
            if (d % p == 0) {
                mpz_class power = 1;
                while (d % p == 0) {
                    d /= p;
                    power *= p;
                }
                by_prime[p].push_back(power);
            }
            ++p;
        }
    }
    std::size_t count = 0;
    for (auto& [p, powers] : by_prime) {
        std::sort(powers.begin(), powers.end(), std::greater<>());
        count = std::max(count, powers.size());
    }
    // Largest factor collects the largest power of every prime, and so on.
    std::vector<mpz_class> chain(count, mpz_class(1));
    for (const auto& [p, powers] : by_prime)
        for (std::size_t i = 0; i < powers.size(); ++i) chain[count - 1 - i] *= powers[i];
    return chain;
}

}  // namespace

HomologyModule HomologyModule::from_factors(const Ring& ring, std::size_t free_rank,
                                            const std::vector<mpz_class>& cyclic_orders) {
    HomologyModule out{ring, free_rank, {}};
    std::vector<mpz_class> orders;
    for (const auto& d : cyclic_orders) {
        mpz_class a = abs(d);
        if (a == 1) continue;
        switch (ring.kind()) {
            case Ring::Kind::Integers:
                if (a == 0) ++out.free_rank;
                else orders.push_back(a);
                break;
            case Ring::Kind::IntegersMod: {
                const mpz_class m(static_cast<unsigned long>(ring.parameter()));
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
                if (g == m) ++out.free_rank;
                else if (g > 1) orders.push_back(g);
                break;
            }
            case Ring::Kind::PrimeField:
                if (a % static_cast<unsigned long>(ring.parameter()) == 0) ++out.free_rank;
                break;
            case Ring::Kind::Rationals:
            case Ring::Kind::Cyclotomic:
                if (a == 0) ++out.free_rank;
                break;
        }
    }
    out.torsion = invariant_chain(orders);
    return out;
}

std::size_t HomologyModule::dimension() const {
    if (!ring.is_field()) throw Error(Errc::NotAField, "dimension() over " + ring.to_string());
    return free_rank;
}

HomologyModule& HomologyModule::operator+=(const HomologyModule& other) {
    if (!(ring == other.ring)) throw Error(Errc::RingMismatch, ring.to_string() + " vs " + other.ring.to_string());
    free_rank += other.free_rank;
    if (!other.torsion.empty()) {
        std::vector<mpz_class> all = torsion;
        all.insert(all.end(), other.torsion.begin(), other.torsion.end());
        torsion = invariant_chain(all);
    }
    return *this;
}

HomologyModule HomologyModule::power(std::size_t r) const {
    HomologyModule out = zero(ring);
    for (std::size_t i = 0; i < r; ++i) out += *this;
    return out;
}

std::string HomologyModule::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    const std::string k = ring.to_string();
    bool first = true;
    if (free_rank > 0) {
        os << k;
        if (free_rank > 1) os << '^' << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << " + ";
        first = false;
        os << "Z/" << d.get_str();
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HomologyModule& m) { return os << m.to_string(); }

std::pair<HomologyModule, HomologyModule> annihilator_and_quotient(const mpz_class& m, const Ring& ring) {
    const mpz_class a = abs(m);
    switch (ring.kind()) {
        case Ring::Kind::Integers:
            if (a == 0) return {HomologyModule::free(ring, 1), HomologyModule::free(ring, 1)};
            return {HomologyModule::zero(ring), HomologyModule::from_factors(ring, 0, {a})};
        case Ring::Kind::Rationals:
        case Ring::Kind::Cyclotomic:
        case Ring::Kind::PrimeField: {
            const bool vanishes = ring.kind() != Ring::Kind::PrimeField
                                      ? a == 0
                                      : a % static_cast<unsigned long>(ring.parameter()) == 0;
            if (vanishes) return {HomologyModule::free(ring, 1), HomologyModule::free(ring, 1)};
            return {HomologyModule::zero(ring), HomologyModule::zero(ring)};
        }
        case Ring::Kind::IntegersMod: {
            // Both Ann(m) and k/mk are cyclic of order gcd(m, M).
            const mpz_class modulus(static_cast<unsigned long>(ring.parameter()));
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
            auto mod = HomologyModule::from_factors(ring, 0, {g});
            return {mod, mod};
        }
    }
    throw Error(Errc::UnsupportedRing, "annihilator_and_quotient over " + ring.to_string());
}

}  // namespace hopfcycl
