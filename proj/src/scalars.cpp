#include "hopfcycl/scalars.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

namespace hopfcycl {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::RingMismatch: return "RingMismatch";
        case Errc::NotAUnit: return "NotAUnit";
        case Errc::UnsupportedRing: return "UnsupportedRing";
        case Errc::NotAField: return "NotAField";
        case Errc::NotAComplex: return "NotAComplex";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::RingWithoutRationals: return "RingWithoutRationals";
        case Errc::InvalidCharacter: return "InvalidCharacter";
        case Errc::PreconditionFailed: return "PreconditionFailed";
        case Errc::MissingRootOfUnity: return "MissingRootOfUnity";
        case Errc::NegativePartialSum: return "NegativePartialSum";
        case Errc::ParseError: return "ParseError";
        case Errc::UnsupportedCombination: return "UnsupportedCombination";
        case Errc::ResourceCap: return "ResourceCap";
        case Errc::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

namespace {

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

// Inverse of a modulo m, or 0 when gcd(a, m) != 1 (m >= 2).
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) return 0;
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mod(const mpz_class& v, std::uint64_t m) {
    mpz_class r = v % mpz_class(static_cast<unsigned long>(m));
    if (r < 0) r += static_cast<unsigned long>(m);
    return r.get_ui();
}

// --- rational polynomial helpers for inversion in Q(zeta_n) ---

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
    rem = a;
    trim(rem);
    quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, mpq_class(0));
    while (!rem.empty() && rem.size() >= b.size()) {
        const std::size_t shift = rem.size() - b.size();
        mpq_class c = rem.back() / b.back();
        quot[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
        trim(rem);
    }
    trim(quot);
}

struct CyclotomicCache {
    std::mutex mutex;
    std::map<unsigned, std::unique_ptr<IntPoly>> polys;
};

CyclotomicCache& cyclotomic_cache() {
    static CyclotomicCache cache;
    return cache;
}

IntPoly compute_cyclotomic(unsigned n) {
    // x^n - 1 divided exactly by Phi_d for every proper divisor d.
    IntPoly num(n + 1, mpz_class(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const IntPoly& den = cyclotomic_polynomial(d);
        IntPoly q(num.size() - den.size() + 1, mpz_class(0));
        IntPoly rem = num;
        for (std::size_t k = rem.size(); k-- >= den.size();) {
            mpz_class c = rem[k];  // den is monic
            if (c == 0) continue;
            const std::size_t shift = k - (den.size() - 1);
            q[shift] = c;
            for (std::size_t j = 0; j < den.size(); ++j) rem[shift + j] -= c * den[j];
        }
        num = std::move(q);
        trim(num);
    }
    return num;
}

}  // namespace

const IntPoly& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw Error(Errc::InvalidInput, "cyclotomic_polynomial requires n >= 1");
    auto& cache = cyclotomic_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto it = cache.polys.find(n);
        if (it != cache.polys.end()) return *it->second;
    }
    // Recursion on divisors happens outside the lock.
    auto poly = std::make_unique<IntPoly>(compute_cyclotomic(n));
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto [it, inserted] = cache.polys.emplace(n, std::move(poly));
    return *it->second;
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// ---------------------------------------------------------------- Ring

Ring Ring::integers_mod(std::uint64_t m) {
    if (m < 2) throw Error(Errc::InvalidInput, "Z/m requires m >= 2");
    if (m >= (std::uint64_t{1} << 62)) throw Error(Errc::InvalidInput, "modulus too large");
    return Ring(Kind::IntegersMod, m);
}

Ring Ring::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) throw Error(Errc::InvalidInput, "F_p requires p prime, got " + std::to_string(p));
    if (p >= (std::uint64_t{1} << 62)) throw Error(Errc::InvalidInput, "modulus too large");
    return Ring(Kind::PrimeField, p);
}

Ring Ring::cyclotomic(unsigned n) {
    if (n < 1) throw Error(Errc::InvalidInput, "Q(zeta_n) requires n >= 1");
    return Ring(Kind::Cyclotomic, n, euler_phi(n));
}

Ring Ring::parse(std::string_view text) {
    auto number = [&](std::string_view digits) -> std::uint64_t {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
            throw Error(Errc::ParseError, "bad ring string '" + std::string(text) + "'");
        return v;
    };
    if (text == "Z") return integers();
    if (text == "Q") return rationals();
    if (text.starts_with("Z/")) return integers_mod(number(text.substr(2)));
    if (text.starts_with("F")) return prime_field(number(text.substr(1)));
    if (text.starts_with("Q(zeta") && text.ends_with(")")) {
        std::string_view inner = text.substr(6, text.size() - 7);
        if (inner.starts_with("_")) inner.remove_prefix(1);
        const auto n = number(inner);
        if (n == 0 || n > 100000) throw Error(Errc::ParseError, "bad cyclotomic order in '" + std::string(text) + "'");
        return cyclotomic(static_cast<unsigned>(n));
    }
    throw Error(Errc::ParseError, "unknown ring string '" + std::string(text) + "'");
}

bool Ring::has_root_of_unity(unsigned n) const noexcept {
    if (n == 1) return true;
    switch (kind_) {
        case Kind::Cyclotomic:
            return param_ % n == 0 || (n == 2);
        case Kind::PrimeField:
            return (param_ - 1) % n == 0;
        case Kind::IntegersMod:
            return n == 2 && param_ > 2;
        case Kind::Integers:
        case Kind::Rationals:
            return n == 2;
    }
    return false;
}

std::string Ring::to_string() const {
    switch (kind_) {
        case Kind::Integers: return "Z";
        case Kind::Rationals: return "Q";
        case Kind::IntegersMod: return "Z/" + std::to_string(param_);
        case Kind::PrimeField: return "F" + std::to_string(param_);
        case Kind::Cyclotomic: return "Q(zeta" + std::to_string(param_) + ")";
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, const Ring& ring) { return os << ring.to_string(); }

// ---------------------------------------------------------------- Scalar

namespace {

// Reduce a coefficient vector modulo Phi_n in place and pad to length deg.
void reduce_cyclotomic(std::vector<mpq_class>& c, unsigned n) {
    const IntPoly& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = c.size(); k-- > deg;) {
        if (c[k] == 0) continue;
        mpq_class lead = c[k];
        const std::size_t shift = k - deg;
        for (std::size_t j = 0; j <= deg; ++j) {
            if (phi[j] == 0) continue;
            c[shift + j] -= lead * phi[j];
        }
    }
    c.resize(deg, mpq_class(0));
}

}  // namespace

Scalar::Scalar(const Ring& ring) : ring_(ring) {
    switch (ring.kind()) {
        case Ring::Kind::Integers: value_ = mpz_class(0); break;
        case Ring::Kind::Rationals: value_ = mpq_class(0); break;
        case Ring::Kind::IntegersMod:
        case Ring::Kind::PrimeField: value_ = std::uint64_t{0}; break;
        case Ring::Kind::Cyclotomic: value_ = std::vector<mpq_class>(ring.extension_degree(), mpq_class(0)); break;
    }
}

Scalar Scalar::from_int(const Ring& ring, long value) { return from_integer(ring, mpz_class(value)); }

Scalar Scalar::from_integer(const Ring& ring, const mpz_class& value) {
    Scalar s(ring);
    switch (ring.kind()) {
        case Ring::Kind::Integers: s.value_ = value; break;
        case Ring::Kind::Rationals: s.value_ = mpq_class(value); break;
        case Ring::Kind::IntegersMod:
        case Ring::Kind::PrimeField: s.value_ = reduce_mod(value, ring.parameter()); break;
        case Ring::Kind::Cyclotomic: std::get<std::vector<mpq_class>>(s.value_)[0] = value; break;
    }
    return s;
}

Scalar Scalar::from_rational(const Ring& ring, const mpq_class& value) {
    mpq_class v = value;
    v.canonicalize();
    switch (ring.kind()) {
        case Ring::Kind::Rationals: {
            Scalar s(ring);
            s.value_ = v;
            return s;
        }
        case Ring::Kind::Cyclotomic: {
            Scalar s(ring);
            std::get<std::vector<mpq_class>>(s.value_)[0] = v;
            return s;
        }
        case Ring::Kind::PrimeField: {
            const auto p = ring.parameter();
            const auto den = reduce_mod(v.get_den(), p);
            if (den == 0) throw Error(Errc::NotAUnit, "denominator divisible by p");
            Scalar s(ring);
            s.value_ = mul_mod(reduce_mod(v.get_num(), p), inv_mod(den, p), p);
            return s;
        }
        case Ring::Kind::Integers:
        case Ring::Kind::IntegersMod:
            if (v.get_den() != 1) throw Error(Errc::NotAUnit, "fraction in a ring without rationals");
            return from_integer(ring, v.get_num());
    }
    return Scalar(ring);
}

Scalar Scalar::from_coefficients(const Ring& ring, std::vector<mpq_class> coefficients) {
    if (ring.kind() != Ring::Kind::Cyclotomic) {
        if (coefficients.size() > 1 && std::any_of(coefficients.begin() + 1, coefficients.end(), [](const mpq_class& c) { return c != 0; }))
            throw Error(Errc::UnsupportedRing, "polynomial coefficients outside Q(zeta_n)");
        return coefficients.empty() ? Scalar(ring) : from_rational(ring, coefficients[0]);
    }
    for (auto& c : coefficients) c.canonicalize();
    reduce_cyclotomic(coefficients, static_cast<unsigned>(ring.parameter()));
    Scalar s(ring);
    s.value_ = std::move(coefficients);
    return s;
}

Scalar Scalar::zeta(const Ring& ring, long power) {
    if (ring.kind() != Ring::Kind::Cyclotomic) {
        // Q(zeta1)-style degenerate requests: only the trivial root is available.
        throw Error(Errc::MissingRootOfUnity, "zeta requested in " + ring.to_string());
    }
    const long n = static_cast<long>(ring.parameter());
    long e = ((power % n) + n) % n;
    std::vector<mpq_class> c(static_cast<std::size_t>(e) + 1, mpq_class(0));
    c[static_cast<std::size_t>(e)] = 1;
    return from_coefficients(ring, std::move(c));
}

void Scalar::check_ring(const Scalar& other) const {
    if (!(ring_ == other.ring_))
        throw Error(Errc::RingMismatch, ring_.to_string() + " vs " + other.ring_.to_string());
}

bool Scalar::is_zero() const {
    switch (ring_.kind()) {
        case Ring::Kind::Integers: return std::get<mpz_class>(value_) == 0;
        case Ring::Kind::Rationals: return std::get<mpq_class>(value_) == 0;
        case Ring::Kind::IntegersMod:
        case Ring::Kind::PrimeField: return std::get<std::uint64_t>(value_) == 0;
        case Ring::Kind::Cyclotomic: {
            const auto& c = std::get<std::vector<mpq_class>>(value_);
            return std::all_of(c.begin(), c.end(), [](const mpq_class& x) { return x == 0; });
        }
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(ring_); }

bool Scalar::is_unit() const {
    switch (ring_.kind()) {
        case Ring::Kind::Integers: return abs(std::get<mpz_class>(value_)) == 1;
        case Ring::Kind::Rationals:
        case Ring::Kind::PrimeField:
        case Ring::Kind::Cyclotomic: return !is_zero();
        case Ring::Kind::IntegersMod: return inv_mod(std::get<std::uint64_t>(value_), ring_.parameter()) != 0;
    }
    return false;
}

Scalar Scalar::operator-() const {
    Scalar r(ring_);
    switch (ring_.kind()) {
        case Ring::Kind::Integers: r.value_ = mpz_class(-std::get<mpz_class>(value_)); break;
        case Ring::Kind::Rationals: r.value_ = mpq_class(-std::get<mpq_class>(value_)); break;
        case Ring::Kind::IntegersMod:
        case Ring::Kind::PrimeField: {
            const auto v = std::get<std::uint64_t>(value_);
            r.value_ = v == 0 ? 0 : ring_.parameter() - v;
            break;
        }
        case Ring::Kind::Cyclotomic: {
            auto c = std::get<std::vector<mpq_class>>(value_);
            for (auto& x : c) x = -x;
            r.value_ = std::move(c);
            break;
        }
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    check_ring(rhs);
    switch (ring_.kind()) {
        case Ring::Kind::Integers: std::get<mpz_class>(value_) += std::get<mpz_class>(rhs.value_); break;
        case Ring::Kind::Rationals: std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_); break;
        case Ring::Kind::IntegersMod:
        case Ring::Kind::PrimeField: {
            auto& v = std::get<std::uint64_t>(value_);
            const auto m = ring_.parameter();
            v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) + std::get<std::uint64_t>(rhs.value_)) % m);
            break;
        }
        case Ring::Kind::Cyclotomic: {
            auto& c = std::get<std::vector<mpq_class>>(value_);
            const auto& d = std::get<std::vector<mpq_class>>(rhs.value_);
            for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
            break;
        }
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
    check_ring(rhs);
    switch (ring_.kind()) {
        case Ring::Kind::Integers: std::get<mpz_class>(value_) *= std::get<mpz_class>(rhs.value_); break;
        case Ring::Kind::Rationals: std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_); break;
        case Ring::Kind::IntegersMod:
        case Ring::Kind::PrimeField: {
            auto& v = std::get<std::uint64_t>(value_);
            v = mul_mod(v, std::get<std::uint64_t>(rhs.value_), ring_.parameter());
            break;
        }
        case Ring::Kind::Cyclotomic: {
            const auto& a = std::get<std::vector<mpq_class>>(value_);
            const auto& b = std::get<std::vector<mpq_class>>(rhs.value_);
            if (a.size() == 1) {
                std::vector<mpq_class> r{a[0] * b[0]};
                value_ = std::move(r);
                break;
            }
            std::vector<mpq_class> prod(a.size() + b.size() - 1, mpq_class(0));
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] == 0) continue;
                for (std::size_t j = 0; j < b.size(); ++j)
                    if (b[j] != 0) prod[i + j] += a[i] * b[j];
            }
            reduce_cyclotomic(prod, static_cast<unsigned>(ring_.parameter()));
            value_ = std::move(prod);
            break;
        }
    }
    return *this;
}

Scalar Scalar::inverse() const {
    switch (ring_.kind()) {
        case Ring::Kind::Integers: {
            const auto& v = std::get<mpz_class>(value_);
            if (abs(v) != 1) throw Error(Errc::NotAUnit, v.get_str() + " in Z");
            return *this;
        }
        case Ring::Kind::Rationals: {
            const auto& v = std::get<mpq_class>(value_);
            if (v == 0) throw Error(Errc::NotAUnit, "0 in Q");
            Scalar r(ring_);
            r.value_ = mpq_class(1 / v);
            return r;
        }
        case Ring::Kind::IntegersMod:
        case Ring::Kind::PrimeField: {
            const auto inv = inv_mod(std::get<std::uint64_t>(value_), ring_.parameter());
            if (inv == 0) throw Error(Errc::NotAUnit, to_string() + " in " + ring_.to_string());
            Scalar r(ring_);
            r.value_ = inv;
            return r;
        }
        case Ring::Kind::Cyclotomic: {
            if (is_zero()) throw Error(Errc::NotAUnit, "0 in " + ring_.to_string());
            // Extended Euclid: s * a + t * Phi = 1.
            const IntPoly& phi_int = cyclotomic_polynomial(static_cast<unsigned>(ring_.parameter()));
            QPoly phi(phi_int.begin(), phi_int.end());
            QPoly a = std::get<std::vector<mpq_class>>(value_);
            trim(a);
            QPoly r0 = phi, r1 = a, s0, s1{mpq_class(1)};
            while (!r1.empty()) {
                QPoly q, rem;
                divmod(r0, r1, q, rem);
                QPoly s2 = sub(s0, mul(q, s1));
                r0 = std::move(r1);
                r1 = std::move(rem);
                s0 = std::move(s1);
                s1 = std::move(s2);
            }
            // r0 is a nonzero constant since Phi is irreducible and deg a < deg Phi.
            mpq_class c = r0[0];
            for (auto& x : s0) x /= c;
            return from_coefficients(ring_, s0);
        }
    }
    return *this;
}

Scalar Scalar::pow(long exponent) const {
    Scalar base = exponent < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    Scalar result = one(ring_);
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) { return a.ring_ == b.ring_ && a.value_ == b.value_; }

const mpz_class& Scalar::integer() const {
    if (ring_.kind() != Ring::Kind::Integers) throw Error(Errc::UnsupportedRing, "integer() on " + ring_.to_string());
    return std::get<mpz_class>(value_);
}

const mpq_class& Scalar::rational() const {
    if (ring_.kind() != Ring::Kind::Rationals) throw Error(Errc::UnsupportedRing, "rational() on " + ring_.to_string());
    return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
    if (!ring_.is_modular()) throw Error(Errc::UnsupportedRing, "residue() on " + ring_.to_string());
    return std::get<std::uint64_t>(value_);
}

const std::vector<mpq_class>& Scalar::coefficients() const {
    if (ring_.kind() != Ring::Kind::Cyclotomic) throw Error(Errc::UnsupportedRing, "coefficients() on " + ring_.to_string());
    return std::get<std::vector<mpq_class>>(value_);
}

mpz_class Scalar::lift() const {
    if (ring_.kind() == Ring::Kind::Integers) return std::get<mpz_class>(value_);
    if (ring_.is_modular()) return mpz_class(static_cast<unsigned long>(std::get<std::uint64_t>(value_)));
    throw Error(Errc::UnsupportedRing, "lift() on " + ring_.to_string());
}

std::string Scalar::to_string() const {
    switch (ring_.kind()) {
        case Ring::Kind::Integers: return std::get<mpz_class>(value_).get_str();
        case Ring::Kind::Rationals: return std::get<mpq_class>(value_).get_str();
        case Ring::Kind::IntegersMod:
        case Ring::Kind::PrimeField: return std::to_string(std::get<std::uint64_t>(value_));
        case Ring::Kind::Cyclotomic: {
            const auto& c = std::get<std::vector<mpq_class>>(value_);
            std::ostringstream os;
            bool first = true;
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i] == 0) continue;
                mpq_class v = c[i];
                if (!first) os << (v < 0 ? " - " : " + ");
                else if (v < 0) os << "-";
                first = false;
                mpq_class a = abs(v);
                if (i == 0) os << a.get_str();
                else {
                    if (a != 1) os << a.get_str() << "*";
                    os << "z";
                    if (i > 1) os << "^" << i;
                }
            }
            return first ? "0" : os.str();
        }
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hopfcycl
