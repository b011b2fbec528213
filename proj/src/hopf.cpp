#include "hopfcycl/hopf.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hopfcycl {

SparseVec normalize(const Ring& ring, SparseVec v) {
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    out.reserve(v.size());
    for (auto& e : v) {
        if (!out.empty() && out.back().first == e.first) out.back().second += e.second;
        else out.push_back(std::move(e));
    }
    std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
    (void)ring;
    return out;
}

SparseVec basis_vector(const Ring& ring, std::uint32_t i) { return {{i, Scalar::one(ring)}}; }

// ---------------------------------------------------------------- AlgebraData

SparseVec AlgebraData::multiply(const SparseVec& x, const SparseVec& y) const {
    SparseVec acc;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) {
            const Scalar ab = a * b;
            for (const auto& [k, c] : product(i, j)) acc.emplace_back(k, ab * c);
        }
    return normalize(ring, std::move(acc));
}

SparseMatrix AlgebraData::left_multiplication(const SparseVec& x) const {
    std::vector<SparseMatrix::Column> cols(dim);
    for (std::uint32_t k = 0; k < dim; ++k) cols[k] = multiply(x, basis_vector(ring, k));
    return SparseMatrix::from_columns(ring, dim, std::move(cols));
}

std::uint32_t AlgebraData::index_of(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw Error(Errc::InvalidInput, "no basis element labelled " + label);
    return static_cast<std::uint32_t>(it - labels.begin());
}

Scalar Character::operator()(const SparseVec& x) const {
    if (values.empty()) throw Error(Errc::InvalidCharacter, "empty character");
    Scalar s = Scalar::zero(values.front().ring());
    for (const auto& [i, c] : x) s += c * values.at(i);
    return s;
}

bool AxiomReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const auto& p) { return p.second; });
}

bool AxiomReport::passed(const std::string& name) const {
    for (const auto& [n, ok] : items)
        if (n == name) return ok;
    throw Error(Errc::InvalidInput, "no axiom named " + name);
}

// ---------------------------------------------------------------- coproducts

namespace {

void add_term(TensorVec& t, std::vector<std::uint32_t> key, const Scalar& c) {
    auto it = t.find(key);
    if (it == t.end()) t.emplace(std::move(key), c);
    else it->second += c;
}

void prune(TensorVec& t) { std::erase_if(t, [](const auto& kv) { return kv.second.is_zero(); }); }

TensorVec tensor_of(const SparseVec& x) {
    TensorVec t;
    for (const auto& [i, c] : x) t.emplace(std::vector<std::uint32_t>{i}, c);
    return t;
}

}  // namespace

TensorVec iterated_coproduct(const HopfAlgebraData& h, const SparseVec& x, unsigned r) {
    if (r == 0) throw Error(Errc::InvalidInput, "iterated_coproduct needs r >= 1");
    TensorVec cur = tensor_of(x);
    for (unsigned step = 1; step < r; ++step) {
        TensorVec next;
        for (const auto& [key, c] : cur) {
            for (const auto& term : h.coproduct[key.back()]) {
                auto k = key;
                k.back() = term.left;
                k.push_back(term.right);
                add_term(next, std::move(k), c * term.coeff);
            }
        }
        prune(next);
        cur = std::move(next);
    }
    return cur;
}

TensorVec iterated_coproduct_left(const HopfAlgebraData& h, const SparseVec& x, unsigned r) {
    if (r == 0) throw Error(Errc::InvalidInput, "iterated_coproduct needs r >= 1");
    TensorVec cur = tensor_of(x);
    for (unsigned step = 1; step < r; ++step) {
        TensorVec next;
        for (const auto& [key, c] : cur) {
            for (const auto& term : h.coproduct[key.front()]) {
                std::vector<std::uint32_t> k{term.left, term.right};
                k.insert(k.end(), key.begin() + 1, key.end());
                add_term(next, std::move(k), c * term.coeff);
            }
        }
        prune(next);
        cur = std::move(next);
    }
    return cur;
}

SparseMatrix counit_map(const HopfAlgebraData& h) {
    std::vector<SparseMatrix::Column> cols(h.dim());
    for (std::size_t j = 0; j < h.dim(); ++j)
        if (!h.counit[j].is_zero()) cols[j].emplace_back(0, h.counit[j]);
    return SparseMatrix::from_columns(h.ring(), 1, std::move(cols));
}

SparseMatrix character_map(const Ring& ring, const Character& c) {
    std::vector<SparseMatrix::Column> cols(c.values.size());
    for (std::size_t j = 0; j < c.values.size(); ++j)
        if (!c.values[j].is_zero()) cols[j].emplace_back(0, c.values[j]);
    return SparseMatrix::from_columns(ring, 1, std::move(cols));
}

SparseMatrix unit_counit_map(const HopfAlgebraData& h) {
    std::vector<SparseMatrix::Column> cols(h.dim());
    for (std::size_t j = 0; j < h.dim(); ++j)
        for (const auto& [i, u] : h.algebra.unit) cols[j].emplace_back(i, u * h.counit[j]);
    return SparseMatrix::from_columns(h.ring(), h.dim(), std::move(cols));
}

SparseMatrix convolution(const HopfAlgebraData& h, const SparseMatrix& f, const SparseMatrix& g) {
    const std::size_t n = h.dim();
    if (f.cols() != n || g.cols() != n) throw Error(Errc::InvalidInput, "convolution: maps must have source H");
    if ((f.rows() != 1 && f.rows() != n) || (g.rows() != 1 && g.rows() != n))
        throw Error(Errc::InvalidInput, "convolution: targets must be k or H");
    const bool f_scalar = f.rows() == 1, g_scalar = g.rows() == 1;
    const std::size_t out_rows = (f_scalar && g_scalar) ? 1 : n;
    std::vector<SparseMatrix::Column> cols(n);
    for (std::uint32_t a = 0; a < n; ++a) {
        SparseVec acc;
        for (const auto& t : h.coproduct[a]) {
            const auto& fc = f.column(t.left);
            const auto& gc = g.column(t.right);
            if (fc.empty() || gc.empty()) continue;
            if (f_scalar && g_scalar) {
                acc.emplace_back(0, t.coeff * fc[0].second * gc[0].second);
            } else if (f_scalar) {
                const Scalar s = t.coeff * fc[0].second;
                for (const auto& [i, v] : gc) acc.emplace_back(i, s * v);
            } else if (g_scalar) {
                const Scalar s = t.coeff * gc[0].second;
                for (const auto& [i, v] : fc) acc.emplace_back(i, v * s);
            } else {
                for (auto& [i, v] : h.algebra.multiply(fc, gc)) acc.emplace_back(i, t.coeff * v);
            }
        }
        cols[a] = normalize(h.ring(), std::move(acc));
    }
    return SparseMatrix::from_columns(h.ring(), out_rows, std::move(cols));
}

SparseMatrix twisted_antipode(const HopfAlgebraData& h, const GroupLike& pi) {
    return h.algebra.left_multiplication(pi.element) * h.antipode;
}

bool is_character(const HopfAlgebraData& h, const Character& c) {
    const auto& a = h.algebra;
    if (c.values.size() != a.dim) return false;
    if (!c(a.unit).is_one()) return false;
    for (std::uint32_t i = 0; i < a.dim; ++i)
        for (std::uint32_t j = 0; j < a.dim; ++j)
            if (!(c.values[i] * c.values[j] == c(a.product(i, j)))) return false;
    return true;
}

bool is_grouplike(const HopfAlgebraData& h, const SparseVec& x) {
    Character eps{h.counit};
    if (!eps(x).is_one()) return false;
    TensorVec square;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : x) add_term(square, {i, j}, a * b);
    prune(square);
    return iterated_coproduct(h, x, 2) == square;
}

CMTriple check_cm_triple(const HopfAlgebraData& h, const GroupLike& pi, const Character& alpha, const Character& beta) {
    CMTriple t{pi, alpha, beta, false, {}};
    std::vector<std::string> failed;
    if (!alpha(pi.element).is_one()) failed.emplace_back("alpha(pi) != 1");
    if (!beta(pi.element).is_one()) failed.emplace_back("beta(pi) != 1");
    const auto& ring = h.ring();
    const SparseMatrix m = convolution(h, convolution(h, character_map(ring, alpha), twisted_antipode(h, pi)),
                                       character_map(ring, beta));
    if (!(m * m == SparseMatrix::identity(ring, h.dim()))) failed.emplace_back("(alpha*S_pi*beta)^2 != id");
    t.valid = failed.empty();
    for (std::size_t i = 0; i < failed.size(); ++i) t.failure += (i ? "; " : "") + failed[i];
    return t;
}

AxiomReport verify_hopf_axioms(const HopfAlgebraData& h) {
    AxiomReport report;
    const auto& a = h.algebra;
    const Ring& ring = h.ring();
    const std::uint32_t n = static_cast<std::uint32_t>(a.dim);

    bool assoc = true;
    for (std::uint32_t i = 0; i < n && assoc; ++i)
        for (std::uint32_t j = 0; j < n && assoc; ++j)
            for (std::uint32_t k = 0; k < n && assoc; ++k) {
                const auto bi = basis_vector(ring, i), bk = basis_vector(ring, k);
                assoc = a.multiply(a.product(i, j), bk) == a.multiply(bi, a.product(j, k));
            }
    report.items.emplace_back("associativity", assoc);

    bool unit = true;
    for (std::uint32_t i = 0; i < n && unit; ++i) {
        const auto bi = basis_vector(ring, i);
        unit = a.multiply(a.unit, bi) == bi && a.multiply(bi, a.unit) == bi;
    }
    report.items.emplace_back("unit", unit);

    bool coassoc = true;
    for (std::uint32_t i = 0; i < n && coassoc; ++i) {
        const auto bi = basis_vector(ring, i);
        coassoc = iterated_coproduct(h, bi, 3) == iterated_coproduct_left(h, bi, 3);
    }
    report.items.emplace_back("coassociativity", coassoc);

    bool counit = true;
    for (std::uint32_t i = 0; i < n && counit; ++i) {
        SparseVec left, right;
        for (const auto& t : h.coproduct[i]) {
            left.emplace_back(t.right, t.coeff * h.counit[t.left]);
            right.emplace_back(t.left, t.coeff * h.counit[t.right]);
        }
        const auto bi = basis_vector(ring, i);
        counit = normalize(ring, left) == bi && normalize(ring, right) == bi;
    }
    report.items.emplace_back("counit", counit);

    const SparseMatrix id = SparseMatrix::identity(ring, n);
    const SparseMatrix ue = unit_counit_map(h);
    report.items.emplace_back("antipode",
                              convolution(h, h.antipode, id) == ue && convolution(h, id, h.antipode) == ue);

    // Delta and eps are algebra maps.
    bool mult_coproduct = true;
    bool mult_counit = true;
    Character eps{h.counit};
    for (std::uint32_t i = 0; i < n && (mult_coproduct || mult_counit); ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            const auto& p = a.product(i, j);
            TensorVec lhs;
            for (const auto& [k, c] : p)
                for (const auto& t : h.coproduct[k]) add_term(lhs, {t.left, t.right}, c * t.coeff);
            prune(lhs);
            TensorVec rhs;
            for (const auto& s : h.coproduct[i])
                for (const auto& t : h.coproduct[j]) {
                    const Scalar c = s.coeff * t.coeff;
                    for (const auto& [l, x] : a.product(s.left, t.left))
                        for (const auto& [r, y] : a.product(s.right, t.right)) add_term(rhs, {l, r}, c * x * y);
                }
            prune(rhs);
            if (!(lhs == rhs)) mult_coproduct = false;
            if (!(eps(p) == h.counit[i] * h.counit[j])) mult_counit = false;
        }
    {
        TensorVec du;
        for (const auto& [k, c] : a.unit)
            for (const auto& t : h.coproduct[k]) add_term(du, {t.left, t.right}, c * t.coeff);
        prune(du);
        TensorVec uu;
        for (const auto& [i, x] : a.unit)
            for (const auto& [j, y] : a.unit) add_term(uu, {i, j}, x * y);
        prune(uu);
        if (!(du == uu)) mult_coproduct = false;
        if (!eps(a.unit).is_one()) mult_counit = false;
    }
    report.items.emplace_back("coproduct multiplicative", mult_coproduct);
    report.items.emplace_back("counit multiplicative", mult_counit);
    return report;
}

Character counit_character(const HopfAlgebraData& h) { return Character{h.counit}; }

// ---------------------------------------------------------------- characters of monomial algebras

namespace {

std::vector<Scalar> roots_of_unity(const Ring& ring, unsigned d) {
    std::vector<Scalar> out;
    auto consider = [&](const Scalar& w) {
        if (!w.pow(d).is_one()) return;
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    };
    switch (ring.kind()) {
        case Ring::Kind::Integers:
        case Ring::Kind::Rationals:
            consider(Scalar::one(ring));
            consider(-Scalar::one(ring));
            break;
        case Ring::Kind::Cyclotomic: {
            const auto n = static_cast<long>(ring.parameter());
            for (long j = 0; j < n; ++j) {
                consider(Scalar::zeta(ring, j));
                consider(-Scalar::zeta(ring, j));
            }
            break;
        }
        case Ring::Kind::IntegersMod:
        case Ring::Kind::PrimeField:
            break;
    }
    return out;
}

std::vector<Scalar> candidate_values(const AlgebraData& a, std::uint32_t b) {
    const Ring& ring = a.ring;
    if (ring.is_modular()) {
        if (ring.parameter() > 4096) throw Error(Errc::UnsupportedCombination, "character search over a large finite ring");
        std::vector<Scalar> all;
        for (std::uint64_t x = 0; x < ring.parameter(); ++x) all.push_back(Scalar::from_int(ring, static_cast<long>(x)));
        return all;
    }
    // powers b^1, b^2, ... until zero or a repeat
    std::vector<std::int64_t> powers{b};
    for (;;) {
        const auto& p = a.product(static_cast<std::uint32_t>(powers.back()), b);
        if (p.empty()) return {Scalar::zero(ring)};  // nilpotent: x^k = 0 forces x = 0 over a domain
        const auto next = static_cast<std::int64_t>(p.front().first);
        auto it = std::find(powers.begin(), powers.end(), next);
        if (it != powers.end()) {
            const auto l = static_cast<unsigned>(it - powers.begin()) + 1;  // b^{k+1} = b^l
            const auto k1 = static_cast<unsigned>(powers.size()) + 1;
            std::vector<Scalar> out{Scalar::zero(ring)};
            for (auto& w : roots_of_unity(ring, k1 - l)) out.push_back(w);
            return out;
        }
        powers.push_back(next);
    }
}

}  // namespace

std::vector<Character> enumerate_characters_monomial(const AlgebraData& a) {
    const std::uint32_t n = static_cast<std::uint32_t>(a.dim);
    for (const auto& p : a.mult)
        if (p.size() > 1 || (p.size() == 1 && !p.front().second.is_one()))
            throw Error(Errc::UnsupportedCombination, "character enumeration needs a monomial algebra");
    std::vector<std::vector<Scalar>> cand(n);
    for (std::uint32_t b = 0; b < n; ++b) cand[b] = candidate_values(a, b);

    std::vector<Character> out;
    std::vector<Scalar> values(n, Scalar::zero(a.ring));
    std::function<void(std::uint32_t)> search = [&](std::uint32_t b) {
        if (b == n) {
            Character c{values};
            if (!c(a.unit).is_one()) return;
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = 0; j < n; ++j)
                    if (!(values[i] * values[j] == c(a.product(i, j)))) return;
            out.push_back(std::move(c));
            return;
        }
        for (const auto& v : cand[b]) {
            values[b] = v;
            bool ok = true;
            for (std::uint32_t i = 0; i <= b && ok; ++i) {
                for (const auto& [x, y] : {std::pair{i, b}, std::pair{b, i}}) {
                    const auto& p = a.product(x, y);
                    if (p.empty()) {
                        ok = ok && (values[x] * values[y]).is_zero();
                    } else if (p.front().first <= b) {
                        ok = ok && values[x] * values[y] == values[p.front().first];
                    }
                }
            }
            if (ok) search(b + 1);
        }
    };
    search(0);
    return out;
}

}  // namespace hopfcycl
