#include "hopfcycl/cyclic.hpp"

#include <cstdlib>
#include <limits>

namespace hopfcycl {

std::size_t default_carrier_cap() {
    if (const char* env = std::getenv("HOPFCYCL_MAX_CARRIER")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 100000;
}

namespace {

std::size_t checked_power(std::size_t base, unsigned exp) {
    std::size_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint32_t>::max() / base) return std::numeric_limits<std::size_t>::max();
        r *= base;
    }
    return r;
}

void decode(std::size_t index, std::size_t base, unsigned len, std::vector<std::uint32_t>& digits) {
    digits.resize(len);
    for (unsigned k = len; k-- > 0;) {
        digits[k] = static_cast<std::uint32_t>(index % base);
        index /= base;
    }
}

std::uint32_t encode(const std::vector<std::uint32_t>& digits, std::size_t base, std::size_t from = 0,
                     std::size_t to = std::numeric_limits<std::size_t>::max()) {
    std::size_t r = 0;
    to = std::min(to, digits.size());
    for (std::size_t k = from; k < to; ++k) r = r * base + digits[k];
    return static_cast<std::uint32_t>(r);
}

SparseVec right_multiply_basis(const AlgebraData& a, const SparseVec& p, std::uint32_t m) {
    SparseVec acc;
    for (const auto& [k, c] : p)
        for (const auto& [l, d] : a.product(k, m)) acc.emplace_back(l, c * d);
    return normalize(a.ring, std::move(acc));
}

}  // namespace

// ---------------------------------------------------------------- CyclicModule

CyclicModule::CyclicModule(const Ring& ring, std::size_t carrier_cap) : ring_(ring), cap_(carrier_cap) {}

void CyclicModule::require_level(unsigned n) const {
    const std::size_t d = dim(n);
    if (d > cap_)
        throw Error(Errc::ResourceCap, "carrier at level " + std::to_string(n) + " has dimension " +
                                           (d == std::numeric_limits<std::size_t>::max() ? std::string("> 2^32")
                                                                                         : std::to_string(d)) +
                                           " > cap " + std::to_string(cap_));
}

const SparseMatrix& CyclicModule::cached(Op op, unsigned n, unsigned i) const {
    const auto key = std::make_tuple(op, n, i);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return *it->second;
    }
    std::unique_ptr<SparseMatrix> built;
    switch (op) {
        case Op::Face:
            if (n == 0 || i > n) throw Error(Errc::IndexOutOfRange, "face d_" + std::to_string(i) + " at level " + std::to_string(n));
            require_level(n);
            built = std::make_unique<SparseMatrix>(build_face(n, i));
            break;
        case Op::Degeneracy:
            if (i > n) throw Error(Errc::IndexOutOfRange, "degeneracy s_" + std::to_string(i) + " at level " + std::to_string(n));
            require_level(n + 1);
            built = std::make_unique<SparseMatrix>(build_degeneracy(n, i));
            break;
        case Op::Cyclic:
            require_level(n);
            built = std::make_unique<SparseMatrix>(build_cyclic(n));
            break;
        case Op::B:
        case Op::BPrime: {
            require_level(n);
            if (n == 0) {
                built = std::make_unique<SparseMatrix>(ring_, 0, dim(0));
                break;
            }
            const unsigned top = op == Op::B ? n : n - 1;
            SparseMatrix acc(ring_, dim(n - 1), dim(n));
            for (unsigned k = 0; k <= top; ++k) acc = (k % 2 == 0) ? acc + face(n, k) : acc - face(n, k);
            built = std::make_unique<SparseMatrix>(std::move(acc));
            break;
        }
        case Op::SignedT:
            built = std::make_unique<SparseMatrix>(n % 2 == 0 ? cyclic(n) : cyclic(n).scaled(-Scalar::one(ring_)));
            break;
        case Op::Norm: {
            const SparseMatrix& t = signed_cyclic(n);
            SparseMatrix acc = SparseMatrix::identity(ring_, dim(n));
            SparseMatrix power = acc;
            for (unsigned k = 1; k <= n; ++k) {
                power = power * t;
                acc = acc + power;
            }
            built = std::make_unique<SparseMatrix>(std::move(acc));
            break;
        }
        case Op::OneMinusT:
            built = std::make_unique<SparseMatrix>(SparseMatrix::identity(ring_, dim(n)) - signed_cyclic(n));
            break;
    }
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.emplace(key, std::move(built));
    return *it->second;
}

const SparseMatrix& CyclicModule::face(unsigned n, unsigned i) const { return cached(Op::Face, n, i); }
const SparseMatrix& CyclicModule::degeneracy(unsigned n, unsigned j) const { return cached(Op::Degeneracy, n, j); }
const SparseMatrix& CyclicModule::cyclic(unsigned n) const { return cached(Op::Cyclic, n, 0); }
const SparseMatrix& CyclicModule::hochschild_boundary(unsigned n) const { return cached(Op::B, n, 0); }
const SparseMatrix& CyclicModule::bar_boundary(unsigned n) const { return cached(Op::BPrime, n, 0); }
const SparseMatrix& CyclicModule::signed_cyclic(unsigned n) const { return cached(Op::SignedT, n, 0); }
const SparseMatrix& CyclicModule::norm(unsigned n) const { return cached(Op::Norm, n, 0); }
const SparseMatrix& CyclicModule::one_minus_t(unsigned n) const { return cached(Op::OneMinusT, n, 0); }

// ---------------------------------------------------------------- HopfCyclicModule

HopfCyclicModule::HopfCyclicModule(std::shared_ptr<const HopfAlgebraData> h, CMTriple triple, bool allow_invalid,
                                   std::size_t carrier_cap)
    : CyclicModule(h->ring(), carrier_cap), h_(std::move(h)), triple_(std::move(triple)), s_pi_(h_->ring(), 0, 0) {
    if (!triple_.valid && !allow_invalid)
        throw Error(Errc::PreconditionFailed, "triple does not satisfy (CM): " + triple_.failure);
    const std::size_t d = h_->dim();
    legs_.resize(d);
    for (std::uint32_t a = 0; a < d; ++a) {
        std::map<std::pair<std::uint32_t, std::uint32_t>, Scalar> merged;
        for (const auto& [key, c] : iterated_coproduct(*h_, basis_vector(ring(), a), 3)) {
            const Scalar w = c * triple_.alpha.values[key[0]];
            if (w.is_zero()) continue;
            auto [it, inserted] = merged.emplace(std::make_pair(key[1], key[2]), w);
            if (!inserted) it->second += w;
        }
        for (auto& [k, c] : merged)
            if (!c.is_zero()) legs_[a].push_back({k.first, k.second, c});
    }
    s_pi_ = twisted_antipode(*h_, triple_.pi);
}

std::size_t HopfCyclicModule::dim(unsigned n) const { return checked_power(h_->dim(), n); }

SparseMatrix HopfCyclicModule::build_face(unsigned n, unsigned i) const {
    const std::size_t d = h_->dim();
    const std::size_t src = dim(n), tgt = dim(n - 1);
    const auto& alpha = triple_.alpha.values;
    const auto& beta = triple_.beta.values;
    std::vector<SparseMatrix::Column> cols(src);
    std::vector<std::uint32_t> a, b;
    for (std::size_t idx = 0; idx < src; ++idx) {
        decode(idx, d, n, a);
        auto& col = cols[idx];
        if (i == 0) {
            if (!alpha[a[0]].is_zero()) col.emplace_back(encode(a, d, 1), alpha[a[0]]);
        } else if (i == n) {
            if (!beta[a[n - 1]].is_zero()) col.emplace_back(encode(a, d, 0, n - 1), beta[a[n - 1]]);
        } else {
            for (const auto& [k, c] : h_->algebra.product(a[i - 1], a[i])) {
                b.assign(a.begin(), a.begin() + (i - 1));
                b.push_back(k);
                b.insert(b.end(), a.begin() + i + 1, a.end());
                col.emplace_back(encode(b, d), c);
            }
        }
    }
    return SparseMatrix::from_columns(ring(), tgt, std::move(cols));
}

SparseMatrix HopfCyclicModule::build_degeneracy(unsigned n, unsigned j) const {
    const std::size_t d = h_->dim();
    const std::size_t src = dim(n);
    std::vector<SparseMatrix::Column> cols(src);
    std::vector<std::uint32_t> a, b;
    for (std::size_t idx = 0; idx < src; ++idx) {
        decode(idx, d, n, a);
        for (const auto& [u, c] : h_->algebra.unit) {
            b.assign(a.begin(), a.begin() + j);
            b.push_back(u);
            b.insert(b.end(), a.begin() + j, a.end());
            cols[idx].emplace_back(encode(b, d), c);
        }
    }
    return SparseMatrix::from_columns(ring(), dim(n + 1), std::move(cols));
}

SparseMatrix HopfCyclicModule::build_cyclic(unsigned n) const {
    if (n == 0) return SparseMatrix::identity(ring(), 1);
    const std::size_t d = h_->dim();
    const std::size_t size = dim(n);
    const auto& alg = h_->algebra;
    const auto& beta = triple_.beta.values;
    const std::size_t tail = checked_power(d, n - 1);
    std::vector<SparseMatrix::Column> cols(size);
    std::vector<std::uint32_t> a;
    // state: third legs emitted so far -> accumulated product of second legs
    using State = std::map<std::vector<std::uint32_t>, SparseVec>;
    for (std::size_t idx = 0; idx < size; ++idx) {
        decode(idx, d, n, a);
        State states;
        states.emplace(std::vector<std::uint32_t>{}, alg.unit);
        for (unsigned j = 0; j < n; ++j) {
            const bool last = j + 1 == n;
            State next;
            for (const auto& [key, p] : states) {
                for (const auto& leg : legs_[a[j]]) {
                    Scalar c = leg.coeff;
                    if (last) {
                        if (beta[leg.last].is_zero()) continue;
                        c *= beta[leg.last];
                    }
                    SparseVec q = right_multiply_basis(alg, p, leg.mid);
                    if (q.empty()) continue;
                    auto k = key;
                    if (!last) k.push_back(leg.last);
                    auto& slot = next[k];
                    for (auto& [i, v] : q) slot.emplace_back(i, v * c);
                }
            }
            for (auto& [k, v] : next) v = normalize(ring(), std::move(v));
            std::erase_if(next, [](const auto& kv) { return kv.second.empty(); });
            states = std::move(next);
        }
        auto& col = cols[idx];
        for (const auto& [key, p] : states) {
            const std::uint32_t rest = encode(key, d);
            for (const auto& [k, c] : p)
                for (const auto& [s, v] : s_pi_.column(k))
                    col.emplace_back(static_cast<std::uint32_t>(s * tail + rest), c * v);
        }
    }
    return SparseMatrix::from_columns(ring(), size, std::move(cols));
}

// ---------------------------------------------------------------- ClassicalCyclicModule

ClassicalCyclicModule::ClassicalCyclicModule(std::shared_ptr<const AlgebraData> a, std::size_t carrier_cap)
    : CyclicModule(a->ring, carrier_cap), a_(std::move(a)) {}

std::size_t ClassicalCyclicModule::dim(unsigned n) const { return checked_power(a_->dim, n + 1); }

SparseMatrix ClassicalCyclicModule::build_face(unsigned n, unsigned i) const {
    const std::size_t d = a_->dim;
    const std::size_t src = dim(n);
    std::vector<SparseMatrix::Column> cols(src);
    std::vector<std::uint32_t> x, y;
    for (std::size_t idx = 0; idx < src; ++idx) {
        decode(idx, d, n + 1, x);
        if (i < n) {
            for (const auto& [k, c] : a_->product(x[i], x[i + 1])) {
                y.assign(x.begin(), x.begin() + i);
                y.push_back(k);
                y.insert(y.end(), x.begin() + i + 2, x.end());
                cols[idx].emplace_back(encode(y, d), c);
            }
        } else {
            for (const auto& [k, c] : a_->product(x[n], x[0])) {
                y.assign(1, k);
                y.insert(y.end(), x.begin() + 1, x.begin() + n);
                cols[idx].emplace_back(encode(y, d), c);
            }
        }
    }
    return SparseMatrix::from_columns(ring(), dim(n - 1), std::move(cols));
}

SparseMatrix ClassicalCyclicModule::build_degeneracy(unsigned n, unsigned j) const {
    const std::size_t d = a_->dim;
    const std::size_t src = dim(n);
    std::vector<SparseMatrix::Column> cols(src);
    std::vector<std::uint32_t> x, y;
    for (std::size_t idx = 0; idx < src; ++idx) {
        decode(idx, d, n + 1, x);
        for (const auto& [u, c] : a_->unit) {
            y.assign(x.begin(), x.begin() + j + 1);
            y.push_back(u);
            y.insert(y.end(), x.begin() + j + 1, x.end());
            cols[idx].emplace_back(encode(y, d), c);
        }
    }
    return SparseMatrix::from_columns(ring(), dim(n + 1), std::move(cols));
}

SparseMatrix ClassicalCyclicModule::build_cyclic(unsigned n) const {
    const std::size_t d = a_->dim;
    const std::size_t src = dim(n);
    std::vector<SparseMatrix::Column> cols(src);
    std::vector<std::uint32_t> x, y;
    const Scalar one = Scalar::one(ring());
    for (std::size_t idx = 0; idx < src; ++idx) {
        decode(idx, d, n + 1, x);
        y.assign(1, x[n]);
        y.insert(y.end(), x.begin(), x.begin() + n);
        cols[idx].emplace_back(encode(y, d), one);
    }
    return SparseMatrix::from_columns(ring(), src, std::move(cols));
}

// ---------------------------------------------------------------- windows

HomologyModule ChainComplexWindow::homology(unsigned n) const {
    if (n >= top()) throw Error(Errc::IndexOutOfRange, "homology at the top of a window needs the next boundary");
    return homology_at(boundaries[n + 1], boundaries[n]);
}

bool ChainComplexWindow::squares_to_zero() const {
    for (std::size_t n = 1; n + 1 < boundaries.size(); ++n)
        if (!(boundaries[n] * boundaries[n + 1]).is_zero()) return false;
    return true;
}

ChainComplexWindow hochschild_window(const CyclicModule& m, unsigned N) {
    ChainComplexWindow w;
    w.ring = m.ring();
    for (unsigned n = 0; n <= N + 1; ++n) {
        w.dims.push_back(m.dim(n));
        w.boundaries.push_back(m.hochschild_boundary(n));
    }
    return w;
}

ChainComplexWindow bimodule_hochschild_window(const AlgebraData& a, const std::vector<SparseMatrix>& left,
                                              const std::vector<SparseMatrix>& right, unsigned N) {
    if (left.size() != a.dim || right.size() != a.dim) throw Error(Errc::InvalidInput, "bimodule action tables");
    const std::size_t dm = left.empty() ? 0 : left[0].rows();
    const std::size_t d = a.dim;
    const Ring& ring = a.ring;
    ChainComplexWindow w;
    w.ring = ring;
    const std::size_t cap = default_carrier_cap();
    for (unsigned n = 0; n <= N + 1; ++n) {
        const std::size_t size = dm * checked_power(d, n);
        if (size > cap) throw Error(Errc::ResourceCap, "Hochschild carrier of dimension " + std::to_string(size));
        w.dims.push_back(size);
    }
    w.boundaries.emplace_back(ring, 0, w.dims[0]);
    const Scalar one = Scalar::one(ring);
    std::vector<std::uint32_t> x, y;
    for (unsigned n = 1; n <= N + 1; ++n) {
        const std::size_t blk = checked_power(d, n), blk_out = checked_power(d, n - 1);
        std::vector<SparseMatrix::Column> cols(w.dims[n]);
        for (std::size_t idx = 0; idx < w.dims[n]; ++idx) {
            const std::size_t mi = idx / blk;
            decode(idx % blk, d, n, x);
            auto& col = cols[idx];
            // (m . a_1) (x) a_2 ...
            const std::uint32_t rest_front = encode(x, d, 1);
            for (const auto& [k, c] : right[x[0]].column(mi))
                col.emplace_back(static_cast<std::uint32_t>(k * blk_out + rest_front), c);
            for (unsigned i = 1; i < n; ++i) {
                const Scalar sign = (i % 2 == 0) ? one : -one;
                for (const auto& [k, c] : a.product(x[i - 1], x[i])) {
                    y.assign(x.begin(), x.begin() + (i - 1));
                    y.push_back(k);
                    y.insert(y.end(), x.begin() + i + 1, x.end());
                    col.emplace_back(static_cast<std::uint32_t>(mi * blk_out + encode(y, d)), sign * c);
                }
            }
            const Scalar sign = (n % 2 == 0) ? one : -one;
            const std::uint32_t rest_back = encode(x, d, 0, n - 1);
            for (const auto& [k, c] : left[x[n - 1]].column(mi))
                col.emplace_back(static_cast<std::uint32_t>(k * blk_out + rest_back), sign * c);
        }
        w.boundaries.push_back(SparseMatrix::from_columns(ring, w.dims[n - 1], std::move(cols)));
    }
    return w;
}

ChainComplexWindow coefficient_hochschild_window(const HopfAlgebraData& h, const Character& alpha,
                                                 const Character& beta, unsigned N) {
    std::vector<SparseMatrix> left, right;
    const Ring& ring = h.ring();
    for (std::size_t a = 0; a < h.dim(); ++a) {
        left.push_back(SparseMatrix::from_dense(ring, std::vector<std::vector<Scalar>>{{beta.values[a]}}));
        right.push_back(SparseMatrix::from_dense(ring, std::vector<std::vector<Scalar>>{{alpha.values[a]}}));
    }
    return bimodule_hochschild_window(h.algebra, left, right, N);
}

ChainComplexWindow algebra_hochschild_window(const AlgebraData& a, unsigned N) {
    std::vector<SparseMatrix> left, right;
    for (std::uint32_t k = 0; k < a.dim; ++k) {
        const auto bk = basis_vector(a.ring, k);
        left.push_back(a.left_multiplication(bk));
        std::vector<SparseMatrix::Column> cols(a.dim);
        for (std::uint32_t m = 0; m < a.dim; ++m) cols[m] = a.product(m, k);
        right.push_back(SparseMatrix::from_columns(a.ring, a.dim, std::move(cols)));
    }
    return bimodule_hochschild_window(a, left, right, N);
}

// ---------------------------------------------------------------- cyclic homology

namespace {

// Total complex differential Tot_k -> Tot_{k-1}; column p of Tot_k holds C_{k-p}.
SparseMatrix total_differential(const CyclicModule& m, unsigned k) {
    const Ring& ring = m.ring();
    std::vector<std::size_t> src_off(k + 2, 0), tgt_off(k + 1, 0);
    for (unsigned p = 0; p <= k; ++p) src_off[p + 1] = src_off[p] + m.dim(k - p);
    if (k == 0) return SparseMatrix(ring, 0, src_off[1]);
    for (unsigned p = 0; p + 1 <= k; ++p) tgt_off[p + 1] = tgt_off[p] + m.dim(k - 1 - p);
    std::vector<SparseMatrix::Column> cols(src_off[k + 1]);
    const Scalar minus = -Scalar::one(ring);
    for (unsigned p = 0; p <= k; ++p) {
        const unsigned q = k - p;
        auto place = [&](const SparseMatrix& map, std::size_t row_offset, bool negate) {
            for (std::size_t j = 0; j < map.cols(); ++j)
                for (const auto& [i, v] : map.column(j))
                    cols[src_off[p] + j].emplace_back(static_cast<std::uint32_t>(row_offset + i), negate ? v * minus : v);
        };
        if (q >= 1) {
            if (p % 2 == 0) place(m.hochschild_boundary(q), tgt_off[p], false);
            else place(m.bar_boundary(q), tgt_off[p], true);
        }
        if (p >= 1) {
            if (p % 2 == 1) place(m.one_minus_t(q), tgt_off[p - 1], false);
            else place(m.norm(q), tgt_off[p - 1], false);
        }
    }
    return SparseMatrix::from_columns(ring, tgt_off[k], std::move(cols));
}

}  // namespace

HomologyModule cyclic_bicomplex_hc(const CyclicModule& m, unsigned n) {
    return homology_at(total_differential(m, n + 1), total_differential(m, n));
}

HomologyModule connes_lambda_hc(const CyclicModule& m, unsigned n) {
    if (!m.ring().contains_rationals())
        throw Error(Errc::RingWithoutRationals, "Connes' quotient complex over " + m.ring().to_string());
    const std::size_t r_n = rank(m.one_minus_t(n));
    const std::size_t dim_lambda = m.dim(n) - r_n;
    auto rank_bar = [&](unsigned k, std::size_t r_below) -> std::size_t {
        if (k == 0) return 0;
        return rank(hstack(m.hochschild_boundary(k), m.one_minus_t(k - 1))) - r_below;
    };
    const std::size_t r_below = n == 0 ? 0 : rank(m.one_minus_t(n - 1));
    const std::size_t in_rank = rank_bar(n + 1, r_n);
    const std::size_t out_rank = rank_bar(n, r_below);
    return HomologyModule::free(m.ring(), dim_lambda - out_rank - in_rank);
}

// ---------------------------------------------------------------- axiom checks

bool CyclicAxiomReport::all_pass() const {
    for (const auto& [n, ok] : items)
        if (!ok) return false;
    return true;
}

bool CyclicAxiomReport::passed_prefix(const std::string& prefix) const {
    bool any = false;
    for (const auto& [n, ok] : items) {
        if (n.rfind(prefix, 0) != 0) continue;
        any = true;
        if (!ok) return false;
    }
    return any;
}

std::vector<std::string> CyclicAxiomReport::failures() const {
    std::vector<std::string> out;
    for (const auto& [n, ok] : items)
        if (!ok) out.push_back(n);
    return out;
}

CyclicAxiomReport verify_cyclic_axioms(const CyclicModule& m, unsigned N) {
    CyclicAxiomReport r;
    const Ring& ring = m.ring();
    auto level = [](const std::string& name, unsigned n) { return name + " @" + std::to_string(n); };
    for (unsigned n = 2; n <= N; ++n) {
        bool ok = true;
        for (unsigned j = 1; j <= n && ok; ++j)
            for (unsigned i = 0; i < j && ok; ++i)
                ok = m.face(n - 1, i) * m.face(n, j) == m.face(n - 1, j - 1) * m.face(n, i);
        r.items.emplace_back(level("simplicial d_i d_j", n), ok);
    }
    for (unsigned n = 0; n + 2 <= N; ++n) {
        bool ok = true;
        for (unsigned j = 0; j <= n && ok; ++j)
            for (unsigned i = 0; i <= j && ok; ++i)
                ok = m.degeneracy(n + 1, i) * m.degeneracy(n, j) == m.degeneracy(n + 1, j + 1) * m.degeneracy(n, i);
        r.items.emplace_back(level("simplicial s_i s_j", n), ok);
    }
    for (unsigned n = 0; n + 1 <= N; ++n) {
        bool ok = true;
        const SparseMatrix id = SparseMatrix::identity(ring, m.dim(n));
        for (unsigned j = 0; j <= n && ok; ++j)
            for (unsigned i = 0; i <= n + 1 && ok; ++i) {
                const SparseMatrix lhs = m.face(n + 1, i) * m.degeneracy(n, j);
                if (i < j) ok = lhs == m.degeneracy(n - 1, j - 1) * m.face(n, i);
                else if (i == j || i == j + 1) ok = lhs == id;
                else ok = lhs == m.degeneracy(n - 1, j) * m.face(n, i - 1);
            }
        r.items.emplace_back(level("simplicial d_i s_j", n), ok);
    }
    for (unsigned n = 1; n <= N; ++n) {
        bool ok = m.face(n, 0) * m.cyclic(n) == m.face(n, n);
        for (unsigned i = 1; i <= n && ok; ++i) ok = m.face(n, i) * m.cyclic(n) == m.cyclic(n - 1) * m.face(n, i - 1);
        r.items.emplace_back(level("cyclic d_i t", n), ok);
    }
    for (unsigned n = 0; n + 1 <= N; ++n) {
        bool ok = m.degeneracy(n, 0) * m.cyclic(n) == m.cyclic(n + 1).power(2) * m.degeneracy(n, n);
        for (unsigned i = 1; i <= n && ok; ++i)
            ok = m.degeneracy(n, i) * m.cyclic(n) == m.cyclic(n + 1) * m.degeneracy(n, i - 1);
        r.items.emplace_back(level("cyclic s_i t", n), ok);
    }
    for (unsigned n = 0; n <= N; ++n)
        r.items.emplace_back(level("t^(n+1) = id", n), m.cyclic(n).power(n + 1) == SparseMatrix::identity(ring, m.dim(n)));
    return r;
}

CyclicAxiomReport verify_bicomplex_identities(const CyclicModule& m, unsigned N) {
    CyclicAxiomReport r;
    auto level = [](const std::string& name, unsigned n) { return name + " @" + std::to_string(n); };
    for (unsigned n = 2; n <= N; ++n) {
        r.items.emplace_back(level("b^2 = 0", n), (m.hochschild_boundary(n - 1) * m.hochschild_boundary(n)).is_zero());
        r.items.emplace_back(level("b'^2 = 0", n), (m.bar_boundary(n - 1) * m.bar_boundary(n)).is_zero());
    }
    for (unsigned n = 1; n <= N; ++n) {
        r.items.emplace_back(level("(1-t) b' = b (1-t)", n),
                             m.one_minus_t(n - 1) * m.bar_boundary(n) == m.hochschild_boundary(n) * m.one_minus_t(n));
        r.items.emplace_back(level("N b = b' N", n),
                             m.norm(n - 1) * m.hochschild_boundary(n) == m.bar_boundary(n) * m.norm(n));
    }
    return r;
}

// ---------------------------------------------------------------- SBI

SbiReport sbi_check(const std::vector<std::size_t>& hh, const std::vector<std::size_t>& hc) {
    SbiReport r;
    const std::size_t N = std::min(hh.size(), hc.size());
    auto h = [&](std::size_t n) { return static_cast<long>(hh[n]); };
    auto c = [&](long n) { return n < 0 ? 0L : static_cast<long>(hc[static_cast<std::size_t>(n)]); };
    auto fail = [&](std::size_t n, const std::string& why) {
        r.consistent = false;
        r.reason = "degree " + std::to_string(n) + ": " + why;
        return r;
    };
    long b_prev = 0;  // rank of B: HC_{n-2} -> HH_{n-1}
    for (std::size_t n = 0; n < N; ++n) {
        const long sn = n < 2 ? 0 : c(static_cast<long>(n) - 2) - b_prev;
        const long in = c(static_cast<long>(n)) - sn;
        const long bn = h(n) - in;
        if (sn < 0) return fail(n, "rank S negative");
        if (sn > c(static_cast<long>(n))) return fail(n, "rank S exceeds dim HC_n");
        if (in < 0 || in > h(n)) return fail(n, "rank I out of range");
        if (bn < 0) return fail(n, "rank B negative");
        if (bn > c(static_cast<long>(n) - 1)) return fail(n, "rank B exceeds dim HC_{n-1}");
        r.rank_s.push_back(sn);
        r.rank_i.push_back(in);
        r.rank_b.push_back(bn);
        b_prev = bn;
    }
    r.consistent = true;
    return r;
}

SbiReport sbi_check(const CyclicModule& m, unsigned N) {
    if (!m.ring().is_field()) throw Error(Errc::NotAField, "sbi_check needs dimensions");
    const auto w = hochschild_window(m, N);
    std::vector<std::size_t> hh, hc;
    for (unsigned n = 0; n <= N; ++n) {
        hh.push_back(w.homology(n).dimension());
        hc.push_back((m.ring().contains_rationals() ? connes_lambda_hc(m, n) : cyclic_bicomplex_hc(m, n)).dimension());
    }
    return sbi_check(hh, hc);
}

}  // namespace hopfcycl
