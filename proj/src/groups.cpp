#include "hopfcycl/groups.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include "json.hpp"

namespace hopfcycl {

namespace {
constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();
}

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::uint32_t>> table, std::vector<std::string> labels) {
    const std::size_t n = table.size();
    if (n == 0) throw Error(Errc::InvalidInput, "empty group table");
    for (const auto& row : table) {
        if (row.size() != n) throw Error(Errc::InvalidInput, "group table is not square");
        for (auto v : row)
            if (v >= n) throw Error(Errc::InvalidInput, "group table entry out of range");
    }
    FiniteGroup g;
    g.table_ = std::move(table);
    bool found = false;
    for (std::uint32_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::uint32_t a = 0; a < n && ok; ++a) ok = g.table_[e][a] == a && g.table_[a][e] == a;
        if (ok) {
            g.identity_ = e;
            found = true;
        }
    }
    if (!found) throw Error(Errc::InvalidInput, "group table has no identity");
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c)
                if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]])
                    throw Error(Errc::InvalidInput, "group table is not associative");
    g.inverse_.assign(n, kAbsent);
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b)
            if (g.table_[a][b] == g.identity_ && g.table_[b][a] == g.identity_) g.inverse_[a] = b;
        if (g.inverse_[a] == kAbsent) throw Error(Errc::InvalidInput, "element without inverse");
    }
    if (labels.empty())
        for (std::size_t a = 0; a < n; ++a) labels.push_back("x" + std::to_string(a));
    if (labels.size() != n) throw Error(Errc::InvalidInput, "label count differs from group order");
    g.labels_ = std::move(labels);
    return g;
}

FiniteGroup FiniteGroup::cyclic(std::uint32_t m) {
    if (m == 0) throw Error(Errc::InvalidInput, "cyclic group of order 0");
    std::vector<std::vector<std::uint32_t>> t(m, std::vector<std::uint32_t>(m));
    std::vector<std::string> labels;
    for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = 0; j < m; ++j) t[i][j] = (i + j) % m;
        labels.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
    }
    return from_table(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::symmetric3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::size_t n = perms.size();
    std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];  // a after b
            t[a][b] = static_cast<std::uint32_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
        labels.push_back("[" + std::to_string(perms[a][0]) + std::to_string(perms[a][1]) +
                         std::to_string(perms[a][2]) + "]");
    }
    return from_table(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    try {
        if (j.contains("cyclic")) return cyclic(j.at("cyclic").get<std::uint32_t>());
        auto table = j.at("table").get<std::vector<std::vector<std::uint32_t>>>();
        if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
            throw Error(Errc::InvalidInput, "order differs from table size");
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        return from_table(std::move(table), std::move(labels));
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

std::uint32_t FiniteGroup::power(std::uint32_t a, long k) const {
    if (k < 0) return power(inv(a), -k);
    std::uint32_t r = identity_;
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

std::size_t FiniteGroup::element_order(std::uint32_t a) const {
    std::size_t k = 1;
    for (std::uint32_t x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (std::uint32_t a = 0; a < order(); ++a)
        for (std::uint32_t b = 0; b < a; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::optional<std::uint32_t> FiniteGroup::cyclic_generator() const {
    for (std::uint32_t a = 0; a < order(); ++a)
        if (element_order(a) == order()) return a;
    return std::nullopt;
}

std::uint32_t Subgroup::local_index(std::uint32_t g) const {
    auto it = std::find(elements.begin(), elements.end(), g);
    if (it == elements.end()) throw Error(Errc::IndexOutOfRange, "element not in subgroup");
    return static_cast<std::uint32_t>(it - elements.begin());
}

std::vector<std::vector<std::uint32_t>> conjugacy_classes(const FiniteGroup& g) {
    std::vector<std::vector<std::uint32_t>> classes;
    std::vector<bool> seen(g.order(), false);
    for (std::uint32_t a = 0; a < g.order(); ++a) {
        if (seen[a]) continue;
        std::vector<std::uint32_t> cls;
        for (std::uint32_t x = 0; x < g.order(); ++x) {
            const std::uint32_t c = g.mul(g.mul(x, a), g.inv(x));
            if (!seen[c]) {
                seen[c] = true;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

Subgroup centralizer(const FiniteGroup& g, std::uint32_t pi) {
    Subgroup s{FiniteGroup::cyclic(1), {}};
    for (std::uint32_t x = 0; x < g.order(); ++x)
        if (g.mul(x, pi) == g.mul(pi, x)) s.elements.push_back(x);
    const std::size_t n = s.elements.size();
    std::vector<std::uint32_t> local(g.order(), kAbsent);
    for (std::size_t i = 0; i < n; ++i) local[s.elements[i]] = static_cast<std::uint32_t>(i);
    std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = local[g.mul(s.elements[i], s.elements[j])];
        labels.push_back(g.labels()[s.elements[i]]);
    }
    s.group = FiniteGroup::from_table(std::move(t), std::move(labels));
    return s;
}

// ---------------------------------------------------------------- group algebra

HopfAlgebraData group_algebra(const FiniteGroup& g, const Ring& ring) {
    HopfAlgebraData h;
    auto& a = h.algebra;
    const std::size_t n = g.order();
    a.ring = ring;
    a.dim = n;
    a.labels = g.labels();
    const Scalar one = Scalar::one(ring);
    a.mult.resize(n * n);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) a.mult[x * n + y] = {{g.mul(x, y), one}};
    a.unit = {{g.identity(), one}};
    h.coproduct.resize(n);
    std::vector<SparseMatrix::Column> s(n);
    for (std::uint32_t x = 0; x < n; ++x) {
        h.coproduct[x] = {{x, x, one}};
        s[x] = {{g.inv(x), one}};
    }
    h.counit.assign(n, one);
    h.antipode = SparseMatrix::from_columns(ring, n, std::move(s));
    return h;
}

GroupLike group_element(const Ring& ring, std::uint32_t g) { return GroupLike{basis_vector(ring, g)}; }

Character cyclic_group_character(const Scalar& zeta, std::uint32_t m) {
    if (!zeta.pow(m).is_one()) throw Error(Errc::InvalidCharacter, "zeta^m != 1 for m = " + std::to_string(m));
    Character c;
    for (std::uint32_t i = 0; i < m; ++i) c.values.push_back(zeta.pow(i));
    return c;
}

// ---------------------------------------------------------------- Gamma(G, pi)

GammaCyclicModule::GammaCyclicModule(FiniteGroup g, std::uint32_t pi, const Ring& ring, std::size_t carrier_cap)
    : CyclicModule(ring, carrier_cap), g_(std::move(g)), pi_(pi), in_class_(g_.order(), false) {
    for (const auto& cls : conjugacy_classes(g_))
        if (std::find(cls.begin(), cls.end(), pi_) != cls.end())
            for (auto x : cls) in_class_[x] = true;
}

const GammaCyclicModule::Level& GammaCyclicModule::level_data(unsigned n) const {
    std::lock_guard<std::mutex> lock(level_mutex_);
    auto it = levels_.find(n);
    if (it != levels_.end()) return *it->second;
    const std::size_t order = g_.order();
    std::size_t total = 1;
    for (unsigned k = 0; k <= n; ++k) {
        total *= order;
        if (total > carrier_cap() * order)
            throw Error(Errc::ResourceCap, "Gamma level " + std::to_string(n) + " too large to enumerate");
    }
    auto lvl = std::make_unique<Level>();
    lvl->position.assign(total, kAbsent);
    std::vector<std::uint32_t> t(n + 1);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t r = idx;
        for (unsigned k = n + 1; k-- > 0;) {
            t[k] = static_cast<std::uint32_t>(r % order);
            r /= order;
        }
        std::uint32_t prod = g_.identity();
        for (auto x : t) prod = g_.mul(prod, x);
        if (!in_class_[prod]) continue;
        lvl->position[idx] = static_cast<std::uint32_t>(lvl->tuples.size());
        lvl->tuples.push_back(t);
    }
    return *levels_.emplace(n, std::move(lvl)).first->second;
}

std::size_t GammaCyclicModule::dim(unsigned n) const { return level_data(n).tuples.size(); }

const std::vector<std::vector<std::uint32_t>>& GammaCyclicModule::level(unsigned n) const {
    return level_data(n).tuples;
}

std::uint32_t GammaCyclicModule::index_of(const std::vector<std::uint32_t>& tuple) const {
    if (tuple.empty()) throw Error(Errc::IndexOutOfRange, "empty tuple");
    const auto& lvl = level_data(static_cast<unsigned>(tuple.size() - 1));
    std::size_t code = 0;
    for (auto x : tuple) code = code * g_.order() + x;
    const std::uint32_t pos = lvl.position[code];
    if (pos == kAbsent) throw Error(Errc::IndexOutOfRange, "tuple product not conjugate to pi");
    return pos;
}

SparseMatrix GammaCyclicModule::permutation_like(
    unsigned n_src, unsigned n_tgt,
    const std::function<std::vector<std::uint32_t>(const std::vector<std::uint32_t>&)>& f) const {
    const auto& src = level(n_src);
    std::vector<SparseMatrix::Column> cols(src.size());
    const Scalar one = Scalar::one(ring());
    for (std::size_t k = 0; k < src.size(); ++k) cols[k].emplace_back(index_of(f(src[k])), one);
    return SparseMatrix::from_columns(ring(), dim(n_tgt), std::move(cols));
}

SparseMatrix GammaCyclicModule::build_face(unsigned n, unsigned i) const {
    return permutation_like(n, n - 1, [&](const std::vector<std::uint32_t>& x) {
        std::vector<std::uint32_t> y;
        if (i < n) {
            y.assign(x.begin(), x.begin() + i);
            y.push_back(g_.mul(x[i], x[i + 1]));
            y.insert(y.end(), x.begin() + i + 2, x.end());
        } else {
            y.push_back(g_.mul(x[n], x[0]));
            y.insert(y.end(), x.begin() + 1, x.begin() + n);
        }
        return y;
    });
}

SparseMatrix GammaCyclicModule::build_degeneracy(unsigned n, unsigned j) const {
    return permutation_like(n, n + 1, [&](const std::vector<std::uint32_t>& x) {
        std::vector<std::uint32_t> y(x.begin(), x.begin() + j + 1);
        y.push_back(g_.identity());
        y.insert(y.end(), x.begin() + j + 1, x.end());
        return y;
    });
}

SparseMatrix GammaCyclicModule::build_cyclic(unsigned n) const {
    return permutation_like(n, n, [&](const std::vector<std::uint32_t>& x) {
        std::vector<std::uint32_t> y{x[n]};
        y.insert(y.end(), x.begin(), x.begin() + n);
        return y;
    });
}

// ---------------------------------------------------------------- theta

std::shared_ptr<HopfCyclicModule> centralizer_module(const FiniteGroup& g, std::uint32_t pi, const Ring& ring) {
    const Subgroup c = centralizer(g, pi);
    auto h = std::make_shared<const HopfAlgebraData>(group_algebra(c.group, ring));
    const Character eps = counit_character(*h);
    return std::make_shared<HopfCyclicModule>(h, check_cm_triple(*h, group_element(ring, c.local_index(pi)), eps, eps));
}

SparseMatrix theta_map(const FiniteGroup& g, std::uint32_t pi, unsigned n, const Ring& ring) {
    const Subgroup c = centralizer(g, pi);
    const GammaCyclicModule gamma(g, pi, ring);
    const std::size_t d = c.elements.size();
    std::size_t src = 1;
    for (unsigned k = 0; k < n; ++k) src *= d;
    std::vector<SparseMatrix::Column> cols(src);
    const Scalar one = Scalar::one(ring);
    std::vector<std::uint32_t> tuple(n + 1);
    for (std::size_t idx = 0; idx < src; ++idx) {
        std::size_t r = idx;
        std::uint32_t prod = g.identity();
        for (unsigned k = n; k-- > 0;) {
            tuple[k + 1] = c.elements[r % d];
            r /= d;
        }
        for (unsigned k = 1; k <= n; ++k) prod = g.mul(prod, tuple[k]);
        tuple[0] = g.mul(pi, g.inv(prod));
        cols[idx].emplace_back(gamma.index_of(tuple), one);
    }
    return SparseMatrix::from_columns(ring, gamma.dim(n), std::move(cols));
}

ThetaReport theta_check(const FiniteGroup& g, std::uint32_t pi, unsigned N) {
    const Ring q = Ring::rationals();
    ThetaReport r;
    const auto src = centralizer_module(g, pi, q);
    const GammaCyclicModule tgt(g, pi, q);
    std::vector<SparseMatrix> theta;
    for (unsigned n = 0; n <= N; ++n) theta.push_back(theta_map(g, pi, n, q));
    r.chain_map = true;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            r.chain_map = false;
            r.failures.push_back(what);
        }
    };
    for (unsigned n = 0; n <= N; ++n) {
        const std::string at = " @" + std::to_string(n);
        expect(theta[n] * src->cyclic(n) == tgt.cyclic(n) * theta[n], "theta t" + at);
        for (unsigned i = 0; n >= 1 && i <= n; ++i)
            expect(theta[n - 1] * src->face(n, i) == tgt.face(n, i) * theta[n], "theta d_" + std::to_string(i) + at);
        for (unsigned j = 0; n + 1 <= N && j <= n; ++j)
            expect(theta[n + 1] * src->degeneracy(n, j) == tgt.degeneracy(n, j) * theta[n],
                   "theta s_" + std::to_string(j) + at);
    }
    r.homology_iso = true;
    for (unsigned n = 0; n < N; ++n) {
        const SparseMatrix& bs = src->hochschild_boundary(n);
        const SparseMatrix& bt = tgt.hochschild_boundary(n);
        const std::size_t hs = src->dim(n) - rank(bs) - rank(src->hochschild_boundary(n + 1));
        const std::size_t ker_t = tgt.dim(n) - rank(bt);
        const std::size_t ht = ker_t - rank(tgt.hochschild_boundary(n + 1));
        r.source_dims.push_back(hs);
        r.target_dims.push_back(ht);
        const SparseMatrix image = hstack(theta[n] * kernel_basis(bs), tgt.hochschild_boundary(n + 1));
        if (hs != ht || rank(image) != ker_t) {
            r.homology_iso = false;
            r.failures.push_back("induced map on HH_" + std::to_string(n));
        }
    }
    return r;
}

// ---------------------------------------------------------------- Burghelea

namespace {

std::size_t hc_dimension(const CyclicModule& m, unsigned n) {
    return (m.ring().contains_rationals() ? connes_lambda_hc(m, n) : cyclic_bicomplex_hc(m, n)).dimension();
}

}  // namespace

BurgheleaReport burghelea_check(const FiniteGroup& g, const Ring& ring, unsigned N) {
    if (!ring.is_field()) throw Error(Errc::NotAField, "burghelea_check compares dimensions");
    BurgheleaReport r;
    auto alg = std::make_shared<const AlgebraData>(group_algebra(g, ring).algebra);
    const ClassicalCyclicModule classical(alg);
    for (unsigned n = 0; n <= N; ++n) r.classical.push_back(hc_dimension(classical, n));
    r.summed.assign(N + 1, 0);
    for (const auto& cls : conjugacy_classes(g)) {
        BurgheleaClassTerm term{cls.front(), centralizer(g, cls.front()).elements.size(), {}};
        const auto m = centralizer_module(g, cls.front(), ring);
        for (unsigned n = 0; n <= N; ++n) {
            term.hc.push_back(hc_dimension(*m, n));
            r.summed[n] += term.hc.back();
        }
        r.classes.push_back(std::move(term));
    }
    r.equal = r.classical == r.summed;
    return r;
}

// ---------------------------------------------------------------- closed formulas

HomologyModule closed_hc_cyclic_group(const Ring& ring, std::uint32_t m_pi, unsigned n) {
    if (m_pi == 0) throw Error(Errc::InvalidInput, "m_pi must be positive");
    const auto [ann, quot] = annihilator_and_quotient(mpz_class(m_pi), ring);
    if (n % 2 == 0) return HomologyModule::free(ring, 1) + ann.power(n / 2);
    return quot.power((n + 1) / 2);
}

std::uint32_t index_of_cyclic_subgroup(const FiniteGroup& g, std::uint32_t pi) {
    return static_cast<std::uint32_t>(g.order() / g.element_order(pi));
}

HomologyModule closed_hc_group_algebra(const FiniteGroup& g, const Ring& ring, unsigned n) {
    if (!g.cyclic_generator()) throw Error(Errc::UnsupportedCombination, "closed formula needs a cyclic group");
    HomologyModule total = HomologyModule::zero(ring);
    for (std::uint32_t pi = 0; pi < g.order(); ++pi)
        total += closed_hc_cyclic_group(ring, index_of_cyclic_subgroup(g, pi), n);
    return total;
}

// ---------------------------------------------------------------- twisted coefficients

std::vector<HomologyModule> periodic_resolution_homology(std::uint32_t m, const Scalar& zeta, const Scalar& rho,
                                                         unsigned N) {
    if (!zeta.pow(m).is_one() || !rho.pow(m).is_one())
        throw Error(Errc::InvalidCharacter, "character values must be m-th roots of unity");
    const Ring& ring = zeta.ring();
    const Scalar ratio = zeta * rho.inverse();
    Scalar norm = Scalar::zero(ring);
    for (std::uint32_t i = 0; i < m; ++i) norm += ratio.pow(i);
    auto boundary = [&](unsigned k) {
        if (k == 0) return SparseMatrix(ring, 0, 1);
        const Scalar v = k % 2 == 1 ? ratio - Scalar::one(ring) : norm;
        return SparseMatrix::from_dense(ring, std::vector<std::vector<Scalar>>{{v}});
    };
    std::vector<HomologyModule> out;
    for (unsigned n = 0; n <= N; ++n) out.push_back(homology_at(boundary(n + 1), boundary(n)));
    return out;
}

SparseMatrix chi_isomorphism(std::uint32_t m, std::uint32_t s, const Scalar& zeta, unsigned n) {
    if (!zeta.pow(s).is_one()) throw Error(Errc::PreconditionFailed, "chi needs zeta^s = 1");
    const Ring& ring = zeta.ring();
    std::size_t size = 1;
    for (unsigned k = 0; k < n; ++k) size *= m;
    std::vector<Scalar> powers;
    for (std::uint32_t i = 0; i < m; ++i) powers.push_back(zeta.pow(i));
    std::vector<SparseMatrix::Column> cols(size);
    for (std::size_t idx = 0; idx < size; ++idx) {
        std::size_t r = idx, sum = 0;
        for (unsigned k = 0; k < n; ++k) {
            sum += r % m;
            r /= m;
        }
        cols[idx].emplace_back(static_cast<std::uint32_t>(idx), powers[sum % m]);
    }
    return SparseMatrix::from_columns(ring, size, std::move(cols));
}

ChiReport chi_check(std::uint32_t m, std::uint32_t s, const Scalar& zeta, unsigned N) {
    const Ring& ring = zeta.ring();
    auto h = std::make_shared<const HopfAlgebraData>(group_algebra(FiniteGroup::cyclic(m), ring));
    const GroupLike pi = group_element(ring, s % m);
    const Character alpha = cyclic_group_character(zeta, m);
    const Character eps = counit_character(*h);
    const HopfCyclicModule twisted(h, check_cm_triple(*h, pi, alpha, alpha));
    const HopfCyclicModule trivial(h, check_cm_triple(*h, pi, eps, eps));
    std::vector<SparseMatrix> chi;
    for (unsigned n = 0; n <= N; ++n) chi.push_back(chi_isomorphism(m, s, zeta, n));
    ChiReport r;
    r.identities = true;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            r.identities = false;
            r.failures.push_back(what);
        }
    };
    for (unsigned n = 0; n <= N; ++n) {
        const std::string at = " @" + std::to_string(n);
        expect(chi[n] * twisted.cyclic(n) == trivial.cyclic(n) * chi[n], "chi t" + at);
        for (unsigned i = 0; n >= 1 && i <= n; ++i)
            expect(chi[n - 1] * twisted.face(n, i) == trivial.face(n, i) * chi[n], "chi d_" + std::to_string(i) + at);
        for (unsigned j = 0; n + 1 <= N && j <= n; ++j)
            expect(chi[n + 1] * twisted.degeneracy(n, j) == trivial.degeneracy(n, j) * chi[n],
                   "chi s_" + std::to_string(j) + at);
    }
    for (unsigned n = 0; n < N; ++n) {
        r.hc_twisted.push_back(hc_dimension(twisted, n));
        r.hc_trivial.push_back(hc_dimension(trivial, n));
    }
    return r;
}

}  // namespace hopfcycl
