#include "hopfcycl/quivers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "json.hpp"

namespace hopfcycl {

// ---------------------------------------------------------------- quivers and paths

Quiver Quiver::crown(unsigned n) {
    if (n == 0) throw Error(Errc::InvalidInput, "crown needs at least one vertex");
    Quiver q;
    for (unsigned i = 0; i < n; ++i) q.vertices.push_back("e" + std::to_string(i));
    for (unsigned i = 0; i < n; ++i) q.arrows.push_back({"a" + std::to_string(i), i, (i + 1) % n});
    return q;
}

Quiver Quiver::one_loop() { return Quiver{{"v"}, {{"x", 0, 0}}}; }

Quiver Quiver::a2() { return Quiver{{"v0", "v1"}, {{"a", 0, 1}}}; }

Quiver Quiver::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    try {
        if (j.contains("crown")) return crown(j.at("crown").get<unsigned>());
        Quiver q;
        q.vertices = j.at("vertices").get<std::vector<std::string>>();
        auto vertex = [&](const std::string& name) {
            auto it = std::find(q.vertices.begin(), q.vertices.end(), name);
            if (it == q.vertices.end()) throw Error(Errc::InvalidInput, "unknown vertex " + name);
            return static_cast<std::uint32_t>(it - q.vertices.begin());
        };
        for (const auto& a : j.at("arrows"))
            q.arrows.push_back({a.at("id").get<std::string>(), vertex(a.at("src").get<std::string>()),
                                vertex(a.at("tgt").get<std::string>())});
        return q;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

Quiver Quiver::with_isolated_vertices(unsigned k) const {
    Quiver q = *this;
    for (unsigned i = 0; i < k; ++i) q.vertices.push_back("z" + std::to_string(i));
    return q;
}

std::string path_label(const Quiver& q, const Path& p) {
    if (p.word.empty()) return q.vertices[p.source];
    std::string s;
    for (std::size_t i = 0; i < p.word.size(); ++i) s += (i ? "*" : "") + q.arrows[p.word[i]].id;
    return s;
}

std::vector<Path> paths_of_length(const Quiver& q, std::size_t L) {
    std::vector<Path> out;
    if (L == 0) {
        for (std::uint32_t v = 0; v < q.vertices.size(); ++v) out.push_back(Path{{}, v, v});
        return out;
    }
    for (std::uint32_t a = 0; a < q.arrows.size(); ++a) out.push_back(Path{{a}, q.arrows[a].source, q.arrows[a].target});
    for (std::size_t len = 2; len <= L; ++len) {
        std::vector<Path> next;
        for (const auto& p : out)
            for (std::uint32_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].target == p.source) {
                    Path r = p;
                    r.word.push_back(a);
                    r.source = q.arrows[a].source;
                    next.push_back(std::move(r));
                }
        out = std::move(next);
    }
    return out;
}

std::optional<Path> concatenate(const Path& p, const Path& r) {
    if (p.source != r.target) return std::nullopt;
    Path out{p.word, r.source, p.target};
    out.word.insert(out.word.end(), r.word.begin(), r.word.end());
    return out;
}

namespace {

// Subword [begin, end) of a path; an empty slice is the vertex at that junction.
Path slice(const Quiver& q, const Path& p, std::size_t begin, std::size_t end) {
    if (begin >= end) {
        const std::uint32_t v = begin == 0 ? p.target : q.arrows[p.word[begin - 1]].source;
        return Path{{}, v, v};
    }
    Path out{{p.word.begin() + static_cast<long>(begin), p.word.begin() + static_cast<long>(end)}, 0, 0};
    out.source = q.arrows[out.word.back()].source;
    out.target = q.arrows[out.word.front()].target;
    return out;
}

}  // namespace

TruncatedPathAlgebra::TruncatedPathAlgebra(Quiver q, unsigned n, const Ring& ring) : q_(std::move(q)), n_(n) {
    if (n == 0) throw Error(Errc::InvalidInput, "the full path algebra is infinite dimensional; use path_algebra_hh");
    for (std::size_t L = 0; L < n; ++L)
        for (auto& p : paths_of_length(q_, L)) basis_.push_back(std::move(p));
    for (std::uint32_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
    auto data = std::make_shared<AlgebraData>();
    data->ring = ring;
    data->dim = basis_.size();
    const Scalar one = Scalar::one(ring);
    data->mult.resize(data->dim * data->dim);
    for (std::uint32_t i = 0; i < data->dim; ++i) {
        data->labels.push_back(path_label(q_, basis_[i]));
        for (std::uint32_t j = 0; j < data->dim; ++j)
            if (auto p = concatenate(basis_[i], basis_[j]))
                if (auto k = index_of(*p)) data->mult[i * data->dim + j] = {{*k, one}};
    }
    for (std::uint32_t v = 0; v < q_.vertices.size(); ++v) data->unit.emplace_back(v, one);
    data_ = std::move(data);
}

std::optional<std::uint32_t> TruncatedPathAlgebra::index_of(const Path& p) const {
    if (p.length() >= n_) return std::nullopt;
    auto it = index_.find(p);
    if (it == index_.end()) throw Error(Errc::InvalidInput, "not a path of the quiver");
    return it->second;
}

// ---------------------------------------------------------------- cycles

CycleCounts cycle_orbit_counts(const Quiver& q, std::size_t length) {
    CycleCounts c;
    c.b.assign(length + 1, 0);
    for (std::size_t r = 1; r <= length; ++r) {
        std::set<std::vector<std::uint32_t>> orbits, primitive;
        for (const auto& p : paths_of_length(q, r)) {
            if (!p.is_cycle()) continue;
            std::vector<std::uint32_t> best = p.word, rot = p.word;
            std::size_t period = r;
            for (std::size_t s = 1; s < r; ++s) {
                std::rotate(rot.begin(), rot.begin() + 1, rot.end());
                if (rot == p.word && period == r) period = s;
                best = std::min(best, rot);
            }
            orbits.insert(best);
            if (period == r) primitive.insert(best);
        }
        c.b[r] = primitive.size();
        if (r == length) c.a_q = orbits.size();
    }
    return c;
}

std::size_t anick_green_length(unsigned n, unsigned i) {
    return static_cast<std::size_t>(n) * (i / 2) + (i % 2);
}

// ---------------------------------------------------------------- graded windows

namespace {

SparseMatrix submatrix(const SparseMatrix& m, const std::vector<std::uint32_t>& rows,
                       const std::vector<std::uint32_t>& cols) {
    std::vector<std::uint32_t> row_pos(m.rows(), std::numeric_limits<std::uint32_t>::max());
    for (std::uint32_t k = 0; k < rows.size(); ++k) row_pos[rows[k]] = k;
    std::vector<SparseMatrix::Column> out(cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k)
        for (const auto& [r, v] : m.column(cols[k]))
            if (row_pos[r] != std::numeric_limits<std::uint32_t>::max()) out[k].emplace_back(row_pos[r], v);
    return SparseMatrix::from_columns(m.ring(), rows.size(), std::move(out));
}

std::vector<std::uint32_t> with_grade(const std::vector<std::size_t>& grades, std::size_t q) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = 0; k < grades.size(); ++k)
        if (grades[k] == q) out.push_back(k);
    return out;
}

}  // namespace

HomologyModule GradedWindow::homology(unsigned i, std::size_t q) const {
    if (i >= window.top()) throw Error(Errc::IndexOutOfRange, "homology at the top of a window");
    const auto here = with_grade(grades[i], q);
    const auto above = with_grade(grades[i + 1], q);
    const SparseMatrix d_in = submatrix(window.boundaries[i + 1], here, above);
    const SparseMatrix d_out = i == 0 ? SparseMatrix(window.ring, 0, here.size())
                                      : submatrix(window.boundaries[i], with_grade(grades[i - 1], q), here);
    return homology_at(d_in, d_out);
}

std::vector<std::size_t> GradedWindow::grades_in(unsigned i) const {
    std::vector<std::size_t> g = grades[i];
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

// ---------------------------------------------------------------- resolution

namespace {

struct Term {
    Path left;    // u'
    Path middle;  // gamma'
    Path right;   // v'
    int sign;
};

// d(e_t (x) gamma (x) e_s) for gamma in Gamma^(i), i >= 1.
std::vector<Term> resolution_terms(const Quiver& q, unsigned n, unsigned i, const Path& g) {
    std::vector<Term> out;
    const std::size_t L = g.length();
    if (i % 2 == 1) {
        out.push_back({slice(q, g, 0, 1), slice(q, g, 1, L), slice(q, g, L, L), 1});
        out.push_back({slice(q, g, 0, 0), slice(q, g, 0, L - 1), slice(q, g, L - 1, L), -1});
    } else {
        const std::size_t c = i / 2;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t mid_end = (c - 1) * n + j + 1;
            out.push_back({slice(q, g, 0, j), slice(q, g, j, mid_end), slice(q, g, mid_end, L), 1});
        }
    }
    return out;
}

std::optional<std::uint32_t> product_index(const TruncatedPathAlgebra& a, const Path& x, const Path& y) {
    auto p = concatenate(x, y);
    if (!p) return std::nullopt;
    return a.index_of(*p);
}

}  // namespace

SkoldbergResolution skoldberg_resolution(const TruncatedPathAlgebra& a, unsigned i_max) {
    const unsigned n = a.truncation();
    if (n < 2) throw Error(Errc::PreconditionFailed, "the resolution needs n >= 2");
    const Quiver& q = a.quiver();
    const Ring& ring = a.ring();
    const auto& basis = a.basis();
    SkoldbergResolution r;
    std::vector<std::map<std::tuple<std::uint32_t, Path, std::uint32_t>, std::uint32_t>> index(i_max + 1);
    for (unsigned i = 0; i <= i_max; ++i) {
        r.basis.emplace_back();
        r.grades.emplace_back();
        for (const auto& g : paths_of_length(q, anick_green_length(n, i)))
            for (std::uint32_t u = 0; u < basis.size(); ++u) {
                if (basis[u].source != g.target) continue;
                for (std::uint32_t v = 0; v < basis.size(); ++v) {
                    if (basis[v].target != g.source) continue;
                    index[i].emplace(std::make_tuple(u, g, v), static_cast<std::uint32_t>(r.basis[i].size()));
                    r.basis[i].emplace_back(u, g, v);
                    r.grades[i].push_back(basis[u].length() + g.length() + basis[v].length());
                }
            }
    }
    const Scalar one = Scalar::one(ring);
    // augmentation
    {
        std::vector<SparseMatrix::Column> cols(r.basis[0].size());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const auto& [u, g, v] = r.basis[0][k];
            if (auto p = product_index(a, basis[u], basis[v])) cols[k].emplace_back(*p, one);
        }
        r.d.push_back(SparseMatrix::from_columns(ring, a.dim(), std::move(cols)));
    }
    for (unsigned i = 1; i <= i_max; ++i) {
        std::vector<SparseMatrix::Column> cols(r.basis[i].size());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const auto& [u, g, v] = r.basis[i][k];
            for (const auto& t : resolution_terms(q, n, i, g)) {
                auto uu = product_index(a, basis[u], t.left);
                auto vv = product_index(a, t.right, basis[v]);
                if (!uu || !vv) continue;
                const auto it = index[i - 1].find(std::make_tuple(*uu, t.middle, *vv));
                if (it == index[i - 1].end()) throw Error(Errc::InvalidInput, "resolution term outside P_{i-1}");
                cols[k].emplace_back(it->second, t.sign > 0 ? one : -one);
            }
        }
        r.d.push_back(SparseMatrix::from_columns(ring, r.basis[i - 1].size(), std::move(cols)));
    }
    return r;
}

ExactnessReport check_resolution(const TruncatedPathAlgebra& a, const SkoldbergResolution& r) {
    ExactnessReport rep;
    rep.squares_to_zero = true;
    for (std::size_t i = 0; i + 1 < r.d.size(); ++i)
        if (!(r.d[i] * r.d[i + 1]).is_zero()) {
            rep.squares_to_zero = false;
            rep.failures.push_back("d_" + std::to_string(i) + " d_" + std::to_string(i + 1) + " != 0");
        }
    rep.grade_preserving = true;
    for (std::size_t i = 0; i < r.d.size(); ++i) {
        for (std::size_t c = 0; c < r.d[i].cols(); ++c)
            for (const auto& [row, v] : r.d[i].column(c)) {
                const std::size_t target_grade = i == 0 ? a.grade(row) : r.grades[i - 1][row];
                if (target_grade != r.grades[i][c]) rep.grade_preserving = false;
            }
        if (!rep.grade_preserving) {
            rep.failures.push_back("d_" + std::to_string(i) + " changes the grade");
            break;
        }
    }
    rep.exact = rep.squares_to_zero;
    if (rep.exact) {
        // at A: d_0 onto
        if (!homology_at(r.d[0], SparseMatrix(a.ring(), 0, a.dim())).is_zero()) {
            rep.exact = false;
            rep.failures.push_back("augmentation not onto");
        }
        for (std::size_t i = 0; i + 1 < r.d.size(); ++i)
            if (!homology_at(r.d[i + 1], r.d[i]).is_zero()) {
                rep.exact = false;
                rep.failures.push_back("not exact at P_" + std::to_string(i));
            }
    }
    return rep;
}

// ---------------------------------------------------------------- M (x)_{A^e} P

namespace {

std::uint32_t homogeneous_vertex(const std::vector<SparseMatrix>& action, std::size_t vertices, std::uint32_t m) {
    for (std::uint32_t s = 0; s < vertices; ++s) {
        const auto& col = action[s].column(m);
        if (col.size() == 1 && col[0].first == m && col[0].second.is_one()) return s;
    }
    throw Error(Errc::InvalidInput, "bimodule basis vector is not vertex-homogeneous");
}

void apply(const SparseMatrix& a, const SparseMatrix::Column& x, ColumnAccumulator& acc, const Scalar& scale) {
    for (const auto& [k, c] : x)
        for (const auto& [r, v] : a.column(k)) acc.add(r, scale * c * v);
}

}  // namespace

GradedWindow skoldberg_tensor_complex(const TruncatedPathAlgebra& a, const std::vector<SparseMatrix>& left,
                                      const std::vector<SparseMatrix>& right, const std::vector<std::size_t>& m_grade,
                                      unsigned top) {
    const unsigned n = a.truncation();
    if (n < 2) throw Error(Errc::PreconditionFailed, "the resolution needs n >= 2");
    const Quiver& q = a.quiver();
    const Ring& ring = a.ring();
    const std::size_t dm = left.empty() ? 0 : left[0].rows();
    const std::size_t nv = q.vertices.size();
    std::vector<std::uint32_t> lv(dm), rv(dm);
    for (std::uint32_t m = 0; m < dm; ++m) {
        lv[m] = homogeneous_vertex(left, nv, m);
        rv[m] = homogeneous_vertex(right, nv, m);
    }
    GradedWindow w;
    w.window.ring = ring;
    std::vector<std::vector<std::pair<std::uint32_t, Path>>> basis(top + 1);
    std::vector<std::map<std::pair<std::uint32_t, Path>, std::uint32_t>> index(top + 1);
    for (unsigned i = 0; i <= top; ++i) {
        w.grades.emplace_back();
        for (const auto& g : paths_of_length(q, anick_green_length(n, i)))
            for (std::uint32_t m = 0; m < dm; ++m)
                if (lv[m] == g.source && rv[m] == g.target) {
                    index[i].emplace(std::make_pair(m, g), static_cast<std::uint32_t>(basis[i].size()));
                    basis[i].emplace_back(m, g);
                    w.grades[i].push_back(m_grade[m] + g.length());
                }
        w.window.dims.push_back(basis[i].size());
    }
    w.window.boundaries.emplace_back(ring, 0, basis[0].size());
    for (unsigned i = 1; i <= top; ++i) {
        std::vector<SparseMatrix::Column> cols(basis[i].size());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const auto& [m, g] = basis[i][k];
            ColumnAccumulator acc(ring, basis[i - 1].size());
            for (const auto& t : resolution_terms(q, n, i, g)) {
                // (v' m u', gamma')
                const auto u = a.index_of(t.left);
                const auto v = a.index_of(t.right);
                const Scalar sign = t.sign > 0 ? Scalar::one(ring) : -Scalar::one(ring);
                ColumnAccumulator inner(ring, dm);
                apply(right[*u], SparseMatrix::Column{{m, Scalar::one(ring)}}, inner, sign);
                const auto x = inner.take();
                ColumnAccumulator outer(ring, dm);
                apply(left[*v], x, outer, Scalar::one(ring));
                for (const auto& [mm, c] : outer.take()) {
                    const auto it = index[i - 1].find(std::make_pair(mm, t.middle));
                    if (it == index[i - 1].end()) throw Error(Errc::InvalidInput, "tensor term outside C_{i-1}");
                    acc.add(it->second, c);
                }
            }
            cols[k] = acc.take();
        }
        w.window.boundaries.push_back(SparseMatrix::from_columns(ring, basis[i - 1].size(), std::move(cols)));
    }
    return w;
}

GradedWindow skoldberg_hochschild_complex(const TruncatedPathAlgebra& a, unsigned top) {
    const auto alg = a.algebra();
    std::vector<SparseMatrix> left, right;
    std::vector<std::size_t> grade;
    for (std::uint32_t k = 0; k < a.dim(); ++k) {
        left.push_back(alg->left_multiplication(basis_vector(a.ring(), k)));
        std::vector<SparseMatrix::Column> cols(a.dim());
        for (std::uint32_t m = 0; m < a.dim(); ++m) cols[m] = alg->product(m, k);
        right.push_back(SparseMatrix::from_columns(a.ring(), a.dim(), std::move(cols)));
        grade.push_back(a.grade(k));
    }
    return skoldberg_tensor_complex(a, left, right, grade, top);
}

namespace {

GradedHomology graded_homology(const GradedWindow& w, unsigned p) {
    GradedHomology h{HomologyModule::zero(w.window.ring), {}};
    for (std::size_t q : w.grades_in(p)) {
        auto part = w.homology(p, q);
        if (part.is_zero()) continue;
        h.total += part;
        h.by_grade.emplace(q, std::move(part));
    }
    return h;
}

}  // namespace

GradedHomology hh_via_skoldberg(const TruncatedPathAlgebra& a, unsigned p) {
    return graded_homology(skoldberg_hochschild_complex(a, p + 1), p);
}

// ---------------------------------------------------------------- relative bar complex

GradedWindow relative_bar_complex(const TruncatedPathAlgebra& a, unsigned top) {
    const auto& basis = a.basis();
    const Ring& ring = a.ring();
    std::vector<std::uint32_t> rad;
    for (std::uint32_t k = 0; k < basis.size(); ++k)
        if (basis[k].length() > 0) rad.push_back(k);
    GradedWindow w;
    w.window.ring = ring;
    std::vector<std::vector<std::vector<std::uint32_t>>> chains(top + 1);
    std::vector<std::map<std::vector<std::uint32_t>, std::uint32_t>> index(top + 1);
    // chains (w, r_1, ..., r_p) with w r_1 ... r_p composable and closing up
    for (unsigned p = 0; p <= top; ++p) {
        std::vector<std::vector<std::uint32_t>> partial;
        for (std::uint32_t x = 0; x < basis.size(); ++x) partial.push_back({x});
        for (unsigned k = 0; k < p; ++k) {
            std::vector<std::vector<std::uint32_t>> next;
            for (const auto& c : partial)
                for (auto r : rad)
                    if (basis[c.back()].source == basis[r].target) {
                        auto e = c;
                        e.push_back(r);
                        next.push_back(std::move(e));
                    }
            partial = std::move(next);
        }
        w.grades.emplace_back();
        for (auto& c : partial) {
            if (basis[c.back()].source != basis[c.front()].target) continue;
            std::size_t g = 0;
            for (auto x : c) g += basis[x].length();
            index[p].emplace(c, static_cast<std::uint32_t>(chains[p].size()));
            chains[p].push_back(std::move(c));
            w.grades[p].push_back(g);
        }
        w.window.dims.push_back(chains[p].size());
    }
    w.window.boundaries.emplace_back(ring, 0, chains[0].size());
    for (unsigned p = 1; p <= top; ++p) {
        std::vector<SparseMatrix::Column> cols(chains[p].size());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const auto& c = chains[p][k];
            ColumnAccumulator acc(ring, chains[p - 1].size());
            auto emit = [&](std::vector<std::uint32_t> t, int sign) {
                const auto it = index[p - 1].find(t);
                if (it == index[p - 1].end()) throw Error(Errc::InvalidInput, "bar term outside C_{p-1}");
                acc.add(it->second, Scalar::from_int(ring, sign));
            };
            for (unsigned i = 0; i < p; ++i) {
                auto prod = product_index(a, basis[c[i]], basis[c[i + 1]]);
                if (!prod) continue;
                std::vector<std::uint32_t> t(c.begin(), c.begin() + i);
                t.push_back(*prod);
                t.insert(t.end(), c.begin() + i + 2, c.end());
                emit(std::move(t), i % 2 == 0 ? 1 : -1);
            }
            if (auto prod = product_index(a, basis[c[p]], basis[c[0]])) {
                std::vector<std::uint32_t> t{*prod};
                t.insert(t.end(), c.begin() + 1, c.begin() + p);
                emit(std::move(t), p % 2 == 0 ? 1 : -1);
            }
            cols[k] = acc.take();
        }
        w.window.boundaries.push_back(SparseMatrix::from_columns(ring, chains[p - 1].size(), std::move(cols)));
    }
    return w;
}

// ---------------------------------------------------------------- closed formulas

HomologyModule hh_closed_form(const Quiver& q, unsigned n, unsigned p, std::size_t grade, const Ring& ring) {
    if (n < 2) throw Error(Errc::PreconditionFailed, "closed formula needs n >= 2");
    if (p == 0 && grade == 0) return HomologyModule::free(ring, q.vertices.size());
    const std::size_t c = grade / n, e = grade % n;
    if (e >= 1) {
        if (p == 2 * c || p == 2 * c + 1) return HomologyModule::free(ring, cycle_orbit_counts(q, grade).a_q);
        return HomologyModule::zero(ring);
    }
    if (c == 0 || (p != 2 * c && p + 1 != 2 * c)) return HomologyModule::zero(ring);
    const bool kernel = p == 2 * c;
    const auto counts = cycle_orbit_counts(q, grade);
    HomologyModule total = HomologyModule::zero(ring);
    for (std::size_t r = 1; r <= grade; ++r) {
        if (grade % r != 0 || counts.b[r] == 0) continue;
        const std::size_t g = std::gcd<std::size_t>(n, r);
        const auto [ann, quot] = annihilator_and_quotient(mpz_class(static_cast<unsigned long>(n / g)), ring);
        const HomologyModule piece = HomologyModule::free(ring, g - 1) + (kernel ? ann : quot);
        total += piece.power(counts.b[r]);
    }
    return total;
}

Character vertex_character(const TruncatedPathAlgebra& a, std::uint32_t s) {
    Character c;
    for (std::uint32_t k = 0; k < a.dim(); ++k)
        c.values.push_back(a.basis()[k].length() == 0 && a.basis()[k].source == s ? Scalar::one(a.ring())
                                                                                 : Scalar::zero(a.ring()));
    return c;
}

HomologyModule coefficient_homology_closed(const TruncatedPathAlgebra& a, std::uint32_t alpha_vertex,
                                           std::uint32_t beta_vertex, unsigned p) {
    std::size_t count = 0;
    for (const auto& g : paths_of_length(a.quiver(), anick_green_length(a.truncation(), p)))
        if (g.source == beta_vertex && g.target == alpha_vertex) ++count;
    return HomologyModule::free(a.ring(), count);
}

HomologyModule coefficient_homology_skoldberg(const TruncatedPathAlgebra& a, std::uint32_t alpha_vertex,
                                              std::uint32_t beta_vertex, unsigned p) {
    const Character alpha = vertex_character(a, alpha_vertex), beta = vertex_character(a, beta_vertex);
    std::vector<SparseMatrix> left, right;
    for (std::uint32_t k = 0; k < a.dim(); ++k) {
        left.push_back(SparseMatrix::from_dense(a.ring(), std::vector<std::vector<Scalar>>{{beta.values[k]}}));
        right.push_back(SparseMatrix::from_dense(a.ring(), std::vector<std::vector<Scalar>>{{alpha.values[k]}}));
    }
    return skoldberg_tensor_complex(a, left, right, {0}, p + 1).window.homology(p);
}

// ---------------------------------------------------------------- n = 0 and n = 1

PathAlgebraHH path_algebra_hh(const Quiver& q, std::size_t max_grade, const Ring& ring) {
    PathAlgebraHH out;
    const Scalar one = Scalar::one(ring);
    for (std::size_t g = 0; g <= max_grade; ++g) {
        std::vector<Path> cycles;
        for (auto& p : paths_of_length(q, g))
            if (p.is_cycle()) cycles.push_back(std::move(p));
        std::map<Path, std::uint32_t> cyc_index;
        for (std::uint32_t k = 0; k < cycles.size(); ++k) cyc_index.emplace(cycles[k], k);
        std::vector<SparseMatrix::Column> cols;
        if (g >= 1) {
            for (const auto& nu : paths_of_length(q, g - 1))
                for (std::uint32_t a = 0; a < q.arrows.size(); ++a) {
                    const Path arrow{{a}, q.arrows[a].source, q.arrows[a].target};
                    auto na = concatenate(nu, arrow);
                    auto an = concatenate(arrow, nu);
                    if (!na || !an) continue;
                    ColumnAccumulator acc(ring, cycles.size());
                    acc.add(cyc_index.at(*na), one);
                    acc.add(cyc_index.at(*an), -one);
                    cols.push_back(acc.take());
                }
        }
        const std::size_t c1 = cols.size();
        const std::size_t rk = rank(SparseMatrix::from_columns(ring, cycles.size(), std::move(cols)));
        out.hh0.push_back(cycles.size() - rk);
        out.hh1.push_back(c1 - rk);
    }
    return out;
}

namespace {

std::size_t hc_dimension(const CyclicModule& m, unsigned n) {
    return (m.ring().contains_rationals() ? connes_lambda_hc(m, n) : cyclic_bicomplex_hc(m, n)).dimension();
}

ChainComplexWindow character_window(const TruncatedPathAlgebra& a, std::uint32_t alpha_vertex,
                                     std::uint32_t beta_vertex, unsigned N) {
    const Character alpha = vertex_character(a, alpha_vertex), beta = vertex_character(a, beta_vertex);
    std::vector<SparseMatrix> left, right;
    for (std::uint32_t k = 0; k < a.dim(); ++k) {
        left.push_back(SparseMatrix::from_dense(a.ring(), std::vector<std::vector<Scalar>>{{beta.values[k]}}));
        right.push_back(SparseMatrix::from_dense(a.ring(), std::vector<std::vector<Scalar>>{{alpha.values[k]}}));
    }
    return bimodule_hochschild_window(*a.algebra(), left, right, N);
}

}  // namespace

SemisimpleReport semisimple_case(const Quiver& q, const Ring& ring, unsigned N) {
    if (!ring.is_field()) throw Error(Errc::NotAField, "semisimple_case reports dimensions");
    const TruncatedPathAlgebra a(q, 1, ring);
    SemisimpleReport r;
    r.vertices = q.vertices.size();
    const auto w = algebra_hochschild_window(*a.algebra(), N);
    const ClassicalCyclicModule cm(a.algebra());
    for (unsigned p = 0; p <= N; ++p) {
        r.hh.push_back(w.homology(p).dimension());
        r.hc.push_back(hc_dimension(cm, p));
        r.hc_quoted.push_back(p % 2 == 0 ? r.vertices : 0);
    }
    r.h0_equal_quoted = r.vertices;
    r.h0_distinct_quoted = static_cast<long>(r.vertices) - 2;
    r.h0_equal_computed = character_window(a, 0, 0, 0).homology(0).dimension();
    if (r.vertices >= 2) r.h0_distinct_computed = character_window(a, 0, 1, 0).homology(0).dimension();
    r.h_positive_computed.assign(N, 0);
    for (std::uint32_t s = 0; s < r.vertices; ++s)
        for (std::uint32_t t = 0; t < r.vertices; ++t) {
            const auto cw = character_window(a, s, t, N);
            for (unsigned p = 1; p <= N; ++p) r.h_positive_computed[p - 1] += cw.homology(p).dimension();
        }
    return r;
}

// ---------------------------------------------------------------- cyclic homology of truncated algebras

std::vector<std::size_t> graded_sbi_hc(const TruncatedPathAlgebra& a, unsigned N) {
    if (!a.ring().contains_rationals()) throw Error(Errc::RingWithoutRationals, "graded SBI splitting");
    const long v = static_cast<long>(a.quiver().vertices.size());
    const auto w = skoldberg_hochschild_complex(a, N + 1);
    std::vector<long> hh_bar;
    std::vector<std::size_t> hc;
    for (unsigned p = 0; p <= N; ++p) {
        hh_bar.push_back(static_cast<long>(graded_homology(w, p).total.dimension()) - (p == 0 ? v : 0));
        long bar = 0;
        for (unsigned j = 0; j <= p; ++j) bar += ((p - j) % 2 == 0 ? 1 : -1) * hh_bar[j];
        if (bar < 0 || hh_bar[p] < 0)
            throw Error(Errc::NegativePartialSum, "inconsistent HH table at degree " + std::to_string(p));
        hc.push_back(static_cast<std::size_t>(bar + (p % 2 == 0 ? v : 0)));
    }
    return hc;
}

std::size_t hc_closed_form_truncated(const Quiver& q, unsigned n, unsigned p, CorrectionReading reading) {
    if (n < 2) throw Error(Errc::PreconditionFailed, "closed formula needs n >= 2");
    const std::size_t c = p / 2;
    if (p % 2 == 1) {
        const auto counts = cycle_orbit_counts(q, n);
        std::size_t s = 0;
        for (std::size_t r = 1; r <= n; ++r)
            if (n % r == 0) s += (r - 1) * counts.b[r];
        return s;
    }
    long total = static_cast<long>(q.vertices.size());
    for (std::size_t e = 1; e < n; ++e) total += static_cast<long>(cycle_orbit_counts(q, c * n + e).a_q);
    const std::size_t top = (c + 1) * n;
    const auto counts = cycle_orbit_counts(q, top);
    for (std::size_t r = 1; r <= top; ++r) {
        if (top % r != 0) continue;
        const bool included = reading == CorrectionReading::RDoesNotDivideN ? n % r != 0 : r % n != 0;
        if (included) total -= static_cast<long>((std::gcd<std::size_t>(r, n) - 1) * counts.b[r]);
    }
    if (total < 0) throw Error(Errc::NegativePartialSum, "closed formula gave a negative dimension");
    return static_cast<std::size_t>(total);
}

// ---------------------------------------------------------------- Taft algebras

Scalar primitive_root_of_unity(const Ring& ring, unsigned n) {
    if (n == 0) throw Error(Errc::InvalidInput, "order 0");
    std::vector<Scalar> candidates;
    switch (ring.kind()) {
        case Ring::Kind::Integers:
        case Ring::Kind::Rationals:
            candidates = {Scalar::one(ring), -Scalar::one(ring)};
            break;
        case Ring::Kind::Cyclotomic:
            for (long j = 0; j < static_cast<long>(ring.parameter()); ++j) {
                candidates.push_back(Scalar::zeta(ring, j));
                candidates.push_back(-Scalar::zeta(ring, j));
            }
            break;
        case Ring::Kind::IntegersMod:
        case Ring::Kind::PrimeField:
            for (std::uint64_t x = 1; x < ring.parameter() && x < 100000; ++x)
                candidates.push_back(Scalar::from_int(ring, static_cast<long>(x)));
            break;
    }
    for (const auto& w : candidates) {
        if (!w.pow(n).is_one()) continue;
        bool primitive = true;
        for (unsigned d = 1; d < n && primitive; ++d)
            if (n % d == 0 && w.pow(d).is_one()) primitive = false;
        if (primitive) return w;
    }
    throw Error(Errc::MissingRootOfUnity, "no primitive " + std::to_string(n) + "-th root of unity in " + ring.to_string());
}

std::uint32_t TaftAlgebra::e(unsigned i) const { return i % n; }

std::uint32_t TaftAlgebra::a(unsigned i) const {
    const unsigned k = i % n;
    return *algebra->index_of(Path{{k}, k, (k + 1) % n});
}

GroupLike TaftAlgebra::grouplike(unsigned i) const {
    SparseVec v;
    for (unsigned l = 0; l < n; ++l) v.emplace_back(e(l), q.pow(static_cast<long>(i * l)));
    return GroupLike{normalize(q.ring(), std::move(v))};
}

Character TaftAlgebra::character(unsigned u) const { return vertex_character(*algebra, u % n); }

TaftAlgebra taft_hopf(unsigned n) { return taft_hopf(n, Ring::cyclotomic(n)); }

TaftAlgebra taft_hopf(unsigned n, const Ring& ring) {
    if (n < 2) throw Error(Errc::InvalidInput, "Taft algebra needs n >= 2");
    const Scalar q = primitive_root_of_unity(ring, n);
    auto alg = std::make_shared<const TruncatedPathAlgebra>(Quiver::crown(n), n, ring);
    TaftAlgebra t{alg, nullptr, q, n};
    const auto& basis = alg->basis();
    const std::size_t d = alg->dim();
    const auto& A = *alg->algebra();
    using Pairs = std::map<std::pair<std::uint32_t, std::uint32_t>, Scalar>;
    auto add = [&](Pairs& p, std::uint32_t x, std::uint32_t y, const Scalar& c) {
        auto [it, inserted] = p.emplace(std::make_pair(x, y), c);
        if (!inserted) it->second += c;
    };
    auto mul = [&](const Pairs& x, const Pairs& y) {
        Pairs out;
        for (const auto& [k1, c1] : x)
            for (const auto& [k2, c2] : y) {
                const auto& l = A.product(k1.first, k2.first);
                const auto& r = A.product(k1.second, k2.second);
                if (l.empty() || r.empty()) continue;
                add(out, l[0].first, r[0].first, c1 * c2 * l[0].second * r[0].second);
            }
        std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
        return out;
    };
    std::vector<Pairs> delta_gen(n);  // coproduct of a_i
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            const unsigned k = (i + n - j) % n;
            add(delta_gen[i], t.e(j), t.a(k), Scalar::one(ring));
            add(delta_gen[i], t.a(j), t.e(k), q.pow(static_cast<long>(k)));
        }
    const Scalar one = Scalar::one(ring);
    std::vector<SparseMatrix::Column> s_cols(d);
    HopfAlgebraData h;
    h.algebra = A;
    h.coproduct.resize(d);
    h.counit.assign(d, Scalar::zero(ring));
    for (std::uint32_t k = 0; k < d; ++k) {
        const Path& p = basis[k];
        Pairs delta;
        SparseVec s;
        if (p.length() == 0) {
            const unsigned i = p.source;
            for (unsigned j = 0; j < n; ++j) add(delta, t.e(j), t.e((i + n - j) % n), one);
            s = {{t.e((n - i) % n), one}};
            if (i == 0) h.counit[k] = one;
        } else {
            delta = delta_gen[p.word[0]];
            for (std::size_t m = 1; m < p.length(); ++m) delta = mul(delta, delta_gen[p.word[m]]);
            // S(w_1 ... w_L) = S(w_L) ... S(w_1), S(a_i) = -q^{i+1} a_{-i-1}
            SparseVec acc = A.unit;
            for (std::size_t m = p.length(); m-- > 0;) {
                const unsigned i = p.word[m];
                const SparseVec sa{{t.a(n - 1 - i), -q.pow(static_cast<long>(i + 1))}};
                acc = A.multiply(acc, sa);
            }
            s = std::move(acc);
        }
        for (const auto& [key, c] : delta) h.coproduct[k].push_back({key.first, key.second, c});
        s_cols[k] = normalize(ring, std::move(s));
    }
    h.antipode = SparseMatrix::from_columns(ring, d, std::move(s_cols));
    t.hopf = std::make_shared<const HopfAlgebraData>(std::move(h));
    return t;
}

std::vector<GroupLike> enumerate_grouplikes_taft(const TaftAlgebra& t) {
    const Ring& ring = t.q.ring();
    std::vector<Scalar> roots;
    for (unsigned j = 0; j < t.n; ++j) roots.push_back(t.q.pow(j));
    std::vector<GroupLike> out;
    std::vector<unsigned> digits(t.n, 0);
    for (;;) {
        SparseVec v;
        for (unsigned l = 0; l < t.n; ++l) v.emplace_back(t.e(l), roots[digits[l]]);
        v = normalize(ring, std::move(v));
        if (is_grouplike(*t.hopf, v)) out.push_back(GroupLike{v});
        unsigned pos = 0;
        while (pos < t.n && ++digits[pos] == t.n) digits[pos++] = 0;
        if (pos == t.n) break;
    }
    return out;
}

bool taft_congruence(unsigned n, unsigned i, unsigned u, unsigned v) {
    const long N = n;
    auto mod = [&](long x) { return ((x % N) + N) % N; };
    return mod(static_cast<long>(u) * i) == 0 && mod(static_cast<long>(v) * i) == 0 &&
           mod(static_cast<long>(v) - static_cast<long>(u) + 1 + static_cast<long>(i)) == 0;
}

std::vector<TaftTriple> taft_cm_triples(const TaftAlgebra& t) {
    std::vector<TaftTriple> out;
    for (unsigned i = 0; i < t.n; ++i)
        for (unsigned u = 0; u < t.n; ++u)
            for (unsigned v = 0; v < t.n; ++v) {
                const bool by_matrix =
                    check_cm_triple(*t.hopf, t.grouplike(i), t.character(u), t.character(v)).valid;
                out.push_back({i, u, v, taft_congruence(t.n, i, u, v), by_matrix});
            }
    return out;
}

std::vector<std::size_t> taft_cm_table(const TaftAlgebra& t, unsigned i, unsigned u, unsigned v, unsigned N) {
    const HopfCyclicModule m(t.hopf, check_cm_triple(*t.hopf, t.grouplike(i), t.character(u), t.character(v)));
    std::vector<std::size_t> out;
    for (unsigned p = 0; p <= N; ++p) out.push_back(hc_dimension(m, p));
    return out;
}

HomologyModule taft_cm_homology(const TaftAlgebra& t, unsigned i, unsigned u, unsigned v, unsigned p) {
    const HopfCyclicModule m(t.hopf, check_cm_triple(*t.hopf, t.grouplike(i), t.character(u), t.character(v)));
    return m.ring().contains_rationals() ? connes_lambda_hc(m, p) : cyclic_bicomplex_hc(m, p);
}

std::size_t taft_cm_closed(unsigned n, unsigned i, unsigned u, unsigned v, unsigned p) {
    if (i == n - 1 && u == 0 && v == 0) return p % 2 == 0 ? p / 2 + 1 : 0;
    if (i == 0 && v == (u + n - 1) % n) return p % 2 == 0 ? 0 : (p + 1) / 2;
    return 0;
}

std::vector<TaftDecompositionRow> taft_decomposition_report(const TaftAlgebra& t, unsigned N) {
    const auto classical = graded_sbi_hc(*t.algebra, N);
    std::vector<TaftDecompositionRow> rows;
    for (unsigned p = 0; p <= N; ++p) rows.push_back({p, classical[p], 0});
    for (const auto& tr : taft_cm_triples(t)) {
        if (!tr.by_matrix) continue;
        const auto dims = taft_cm_table(t, tr.i, tr.u, tr.v, N);
        for (unsigned p = 0; p <= N; ++p) rows[p].cm_sum += dims[p];
    }
    return rows;
}

}  // namespace hopfcycl
