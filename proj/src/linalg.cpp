#include "hopfcycl/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hopfcycl {

// ---------------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(const Ring& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), columns_(cols) {}

SparseMatrix SparseMatrix::identity(const Ring& ring, std::size_t n) {
    SparseMatrix m(ring, n, n);
    const Scalar one = Scalar::one(ring);
    for (std::size_t j = 0; j < n; ++j) m.columns_[j].emplace_back(static_cast<std::uint32_t>(j), one);
    return m;
}

SparseMatrix SparseMatrix::from_columns(const Ring& ring, std::size_t rows, std::vector<Column> columns) {
    SparseMatrix m(ring, rows, 0);
    m.columns_ = std::move(columns);
    for (auto& col : m.columns_) {
        std::stable_sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
        Column merged;
        merged.reserve(col.size());
        for (auto& e : col) {
            if (e.first >= rows) throw Error(Errc::IndexOutOfRange, "row index outside matrix");
            if (!(e.second.ring() == ring)) throw Error(Errc::RingMismatch, "entry ring differs from matrix ring");
            if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
            else merged.push_back(std::move(e));
        }
        std::erase_if(merged, [](const Entry& e) { return e.second.is_zero(); });
        col = std::move(merged);
    }
    return m;
}

SparseMatrix SparseMatrix::from_dense(const Ring& ring, const std::vector<std::vector<long>>& rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows[0].size();
    std::vector<Column> cols(nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw Error(Errc::InvalidInput, "ragged dense matrix");
        for (std::size_t j = 0; j < nc; ++j)
            if (rows[i][j] != 0) cols[j].emplace_back(static_cast<std::uint32_t>(i), Scalar::from_int(ring, rows[i][j]));
    }
    return from_columns(ring, nr, std::move(cols));
}

SparseMatrix SparseMatrix::from_dense(const Ring& ring, const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows[0].size();
    std::vector<Column> cols(nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw Error(Errc::InvalidInput, "ragged dense matrix");
        for (std::size_t j = 0; j < nc; ++j)
            if (!rows[i][j].is_zero()) cols[j].emplace_back(static_cast<std::uint32_t>(i), rows[i][j]);
    }
    return from_columns(ring, nr, std::move(cols));
}

std::size_t SparseMatrix::nnz() const {
    std::size_t total = 0;
    for (const auto& c : columns_) total += c.size();
    return total;
}

Scalar SparseMatrix::at(std::size_t i, std::size_t j) const {
    const auto& col = columns_.at(j);
    auto it = std::lower_bound(col.begin(), col.end(), i, [](const Entry& e, std::size_t r) { return e.first < r; });
    if (it != col.end() && it->first == i) return it->second;
    return Scalar::zero(ring_);
}

bool SparseMatrix::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(ring_, cols(), rows_);
    for (std::size_t j = 0; j < columns_.size(); ++j)
        for (const auto& [i, v] : columns_[j]) t.columns_[i].emplace_back(static_cast<std::uint32_t>(j), v);
    return t;
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
    SparseMatrix out(ring_, rows_, cols());
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        for (const auto& [i, v] : columns_[j]) {
            Scalar w = v * c;
            if (!w.is_zero()) out.columns_[j].emplace_back(i, std::move(w));
        }
    }
    return out;
}

SparseMatrix SparseMatrix::power(unsigned k) const {
    if (rows_ != cols()) throw Error(Errc::InvalidInput, "power of a non-square matrix");
    SparseMatrix result = identity(ring_, rows_);
    SparseMatrix base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

SparseMatrix SparseMatrix::block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols()) throw Error(Errc::IndexOutOfRange, "block outside matrix");
    SparseMatrix out(ring_, nr, nc);
    for (std::size_t j = 0; j < nc; ++j)
        for (const auto& [i, v] : columns_[c0 + j])
            if (i >= r0 && i < r0 + nr) out.columns_[j].emplace_back(static_cast<std::uint32_t>(i - r0), v);
    return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (!(a.ring_ == b.ring_)) throw Error(Errc::RingMismatch, "matrix product");
    if (a.cols() != b.rows_) throw Error(Errc::InvalidInput, "matrix product shape mismatch");
    SparseMatrix out(a.ring_, a.rows_, b.cols());
    ColumnAccumulator acc(a.ring_, a.rows_);
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (const auto& [k, v] : b.columns_[j])
            for (const auto& [i, w] : a.columns_[k]) acc.add(i, w * v);
        out.columns_[j] = acc.take();
    }
    return out;
}

namespace {

SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
    if (!(a.ring() == b.ring())) throw Error(Errc::RingMismatch, "matrix sum");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::InvalidInput, "matrix sum shape mismatch");
    std::vector<SparseMatrix::Column> cols(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto& x = a.column(j);
        const auto& y = b.column(j);
        auto& out = cols[j];
        std::size_t p = 0, q = 0;
        while (p < x.size() || q < y.size()) {
            if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
                out.push_back(x[p++]);
            } else if (p == x.size() || y[q].first < x[p].first) {
                out.emplace_back(y[q].first, subtract ? -y[q].second : y[q].second);
                ++q;
            } else {
                Scalar s = subtract ? x[p].second - y[q].second : x[p].second + y[q].second;
                if (!s.is_zero()) out.emplace_back(x[p].first, std::move(s));
                ++p;
                ++q;
            }
        }
    }
    return SparseMatrix::from_columns(a.ring(), a.rows(), std::move(cols));
}

}  // namespace

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, false); }
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, true); }

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.columns_ == b.columns_;
}

std::vector<std::vector<Scalar>> SparseMatrix::to_dense() const {
    std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols(), Scalar::zero(ring_)));
    for (std::size_t j = 0; j < columns_.size(); ++j)
        for (const auto& [i, v] : columns_[j]) d[i][j] = v;
    return d;
}

SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b) {
    if (!(a.ring() == b.ring())) throw Error(Errc::RingMismatch, "hstack");
    if (a.rows() != b.rows()) throw Error(Errc::InvalidInput, "hstack row mismatch");
    std::vector<SparseMatrix::Column> cols;
    cols.reserve(a.cols() + b.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
    for (std::size_t j = 0; j < b.cols(); ++j) cols.push_back(b.column(j));
    return SparseMatrix::from_columns(a.ring(), a.rows(), std::move(cols));
}

SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b) {
    if (!(a.ring() == b.ring())) throw Error(Errc::RingMismatch, "vstack");
    if (a.cols() != b.cols()) throw Error(Errc::InvalidInput, "vstack column mismatch");
    std::vector<SparseMatrix::Column> cols(a.cols());
    const auto shift = static_cast<std::uint32_t>(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        cols[j] = a.column(j);
        for (const auto& [i, v] : b.column(j)) cols[j].emplace_back(i + shift, v);
    }
    return SparseMatrix::from_columns(a.ring(), a.rows() + b.rows(), std::move(cols));
}

// ---------------------------------------------------------------- ColumnAccumulator

ColumnAccumulator::ColumnAccumulator(const Ring& ring, std::size_t rows)
    : ring_(ring), dense_(rows, Scalar::zero(ring)), used_(rows, 0) {}

void ColumnAccumulator::add(std::uint32_t row, const Scalar& value) {
    if (!used_[row]) {
        used_[row] = 1;
        touched_.push_back(row);
        dense_[row] = value;
    } else {
        dense_[row] += value;
    }
}

SparseMatrix::Column ColumnAccumulator::take() {
    std::sort(touched_.begin(), touched_.end());
    SparseMatrix::Column col;
    col.reserve(touched_.size());
    const Scalar zero = Scalar::zero(ring_);
    for (auto r : touched_) {
        if (!dense_[r].is_zero()) col.emplace_back(r, std::move(dense_[r]));
        dense_[r] = zero;
        used_[r] = 0;
    }
    touched_.clear();
    return col;
}

// ---------------------------------------------------------------- field elimination

namespace {

struct SparseRow {
    std::vector<std::uint32_t> idx;
    std::vector<Scalar> val;
};

struct Pivot {
    std::uint32_t row;
    std::uint32_t col;
};

// Row-oriented sparse Gaussian elimination over a field. Pivot choice: the
// shortest active row, and within it the column with the fewest active
// entries. Pivot rows are normalized to have 1 at the pivot and never contain
// a pivot column chosen before them.
class FieldEliminator {
   public:
    FieldEliminator(const SparseMatrix& m) : ring_(m.ring()), ncols_(m.cols()), rows_(m.rows()) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (const auto& [i, v] : m.column(j)) {
                rows_[i].idx.push_back(static_cast<std::uint32_t>(j));
                rows_[i].val.push_back(v);
            }
    }

    void run() {
        const std::size_t nrows = rows_.size();
        std::vector<std::vector<std::uint32_t>> col_rows(ncols_);
        std::vector<std::size_t> col_count(ncols_, 0);
        std::set<std::pair<std::size_t, std::uint32_t>> active;
        for (std::uint32_t r = 0; r < nrows; ++r) {
            if (rows_[r].idx.empty()) continue;
            active.emplace(rows_[r].idx.size(), r);
            for (auto c : rows_[r].idx) {
                col_rows[c].push_back(r);
                ++col_count[c];
            }
        }
        std::vector<std::uint32_t> stamp(nrows, 0);
        std::vector<std::uint8_t> is_active(nrows, 0);
        for (const auto& [len, r] : active) is_active[r] = 1;
        std::uint32_t step = 0;

        SparseRow scratch;
        while (!active.empty()) {
            const std::uint32_t r = active.begin()->second;
            active.erase(active.begin());
            is_active[r] = 0;
            SparseRow& prow = rows_[r];
            if (prow.idx.empty()) continue;
            std::size_t best = 0;
            for (std::size_t k = 1; k < prow.idx.size(); ++k)
                if (col_count[prow.idx[k]] < col_count[prow.idx[best]]) best = k;
            const std::uint32_t c = prow.idx[best];
            for (auto cc : prow.idx) --col_count[cc];

            const Scalar inv = prow.val[best].inverse();
            if (!inv.is_one())
                for (auto& v : prow.val) v *= inv;
            pivots_.push_back({r, c});
            ++step;

            for (auto s : col_rows[c]) {
                if (!is_active[s] || stamp[s] == step) continue;
                stamp[s] = step;
                SparseRow& row = rows_[s];
                auto it = std::lower_bound(row.idx.begin(), row.idx.end(), c);
                if (it == row.idx.end() || *it != c) continue;
                const Scalar factor = row.val[static_cast<std::size_t>(it - row.idx.begin())];
                active.erase({row.idx.size(), s});
                axpy(row, factor, prow, scratch, col_rows, col_count, s);
                std::swap(row, scratch);
                if (!row.idx.empty()) active.emplace(row.idx.size(), s);
                else is_active[s] = 0;
            }
            col_rows[c].clear();
            col_rows[c].shrink_to_fit();
        }
    }

    std::size_t rank() const { return pivots_.size(); }

    SparseMatrix kernel() const {
        std::vector<std::int64_t> pivot_of_col(ncols_, -1);
        for (std::size_t k = 0; k < pivots_.size(); ++k) pivot_of_col[pivots_[k].col] = static_cast<std::int64_t>(k);
        std::vector<std::uint32_t> free_index(ncols_, 0);
        std::size_t nfree = 0;
        for (std::size_t j = 0; j < ncols_; ++j)
            if (pivot_of_col[j] < 0) free_index[j] = static_cast<std::uint32_t>(nfree++);
        // value[j] = coordinates of x_j in the free-variable basis
        std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> value(ncols_);
        for (std::size_t j = 0; j < ncols_; ++j)
            if (pivot_of_col[j] < 0) value[j].emplace_back(free_index[j], Scalar::one(ring_));
        ColumnAccumulator acc(ring_, nfree);
        for (std::size_t k = pivots_.size(); k-- > 0;) {
            const SparseRow& row = rows_[pivots_[k].row];
            for (std::size_t t = 0; t < row.idx.size(); ++t) {
                const auto j = row.idx[t];
                if (j == pivots_[k].col) continue;
                const Scalar coeff = -row.val[t];
                for (const auto& [f, v] : value[j]) acc.add(f, coeff * v);
            }
            value[pivots_[k].col] = acc.take();
        }
        std::vector<SparseMatrix::Column> cols(nfree);
        for (std::size_t j = 0; j < ncols_; ++j)
            for (const auto& [f, v] : value[j]) cols[f].emplace_back(static_cast<std::uint32_t>(j), v);
        return SparseMatrix::from_columns(ring_, ncols_, std::move(cols));
    }

   private:
    // out = row - factor * prow, keeping column bookkeeping in sync.
    static void axpy(const SparseRow& row, const Scalar& factor, const SparseRow& prow, SparseRow& out,
                     std::vector<std::vector<std::uint32_t>>& col_rows, std::vector<std::size_t>& col_count,
                     std::uint32_t s) {
        out.idx.clear();
        out.val.clear();
        std::size_t p = 0, q = 0;
        const std::size_t np = row.idx.size(), nq = prow.idx.size();
        while (p < np || q < nq) {
            if (q == nq || (p < np && row.idx[p] < prow.idx[q])) {
                out.idx.push_back(row.idx[p]);
                out.val.push_back(row.val[p]);
                ++p;
            } else if (p == np || prow.idx[q] < row.idx[p]) {
                const auto c = prow.idx[q];
                out.idx.push_back(c);
                out.val.push_back(-(factor * prow.val[q]));
                col_rows[c].push_back(s);
                ++col_count[c];
                ++q;
            } else {
                Scalar v = row.val[p] - factor * prow.val[q];
                if (v.is_zero()) {
                    --col_count[row.idx[p]];
                } else {
                    out.idx.push_back(row.idx[p]);
                    out.val.push_back(std::move(v));
                }
                ++p;
                ++q;
            }
        }
    }

    Ring ring_;
    std::size_t ncols_;
    std::vector<SparseRow> rows_;
    std::vector<Pivot> pivots_;
};

void require_field(const Ring& ring, const char* what) {
    if (!ring.is_field()) throw Error(Errc::NotAField, std::string(what) + " over " + ring.to_string());
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
    require_field(m.ring(), "rank");
    if (m.rows() == 0 || m.cols() == 0) return 0;
    // Eliminate along the shorter side.
    FieldEliminator e(m.rows() <= m.cols() ? m.transpose() : m);
    e.run();
    return e.rank();
}

SparseMatrix kernel_basis(const SparseMatrix& m) {
    require_field(m.ring(), "kernel_basis");
    FieldEliminator e(m);
    e.run();
    return e.kernel();
}

// ---------------------------------------------------------------- integer Smith form

namespace {

using DenseZ = std::vector<std::vector<mpz_class>>;

// Dense Smith reduction. When vinv is non-null it receives the inverse of the
// accumulated column transform V (so that U * A * V is diagonal).
std::vector<mpz_class> dense_smith(DenseZ a, DenseZ* vinv) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? (vinv ? vinv->size() : 0) : a[0].size();
    std::vector<mpz_class> diag;
    auto col_add = [&](std::size_t dst, std::size_t src, const mpz_class& q) {  // col_dst += q col_src
        for (std::size_t i = 0; i < m; ++i)
            if (a[i][src] != 0) a[i][dst] += q * a[i][src];
        if (vinv) {
            auto& w = *vinv;  // Vinv <- E^{-1} Vinv: row_src -= q row_dst
            for (std::size_t k = 0; k < w[src].size(); ++k)
                if (w[dst][k] != 0) w[src][k] -= q * w[dst][k];
        }
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(a[i][x], a[i][y]);
        if (vinv) std::swap((*vinv)[x], (*vinv)[y]);
    };
    auto row_add = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t j = 0; j < n; ++j)
            if (a[src][j] != 0) a[dst][j] += q * a[src][j];
    };

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // smallest nonzero entry of the trailing block
        std::size_t bi = m, bj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a[i][j] != 0 && (bi == m || abs(a[i][j]) < abs(a[bi][bj]))) {
                    bi = i;
                    bj = j;
                }
        if (bi == m) break;
        std::swap(a[t], a[bi]);
        col_swap(t, bj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                row_add(i, t, -q);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                col_add(j, t, -q);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) {
                // move the smallest remainder in row/column t onto the diagonal
                std::size_t si = t, sj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (a[i][t] != 0 && abs(a[i][t]) < abs(a[si][sj])) si = i, sj = t;
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[t][j] != 0 && abs(a[t][j]) < abs(a[si][sj])) si = t, sj = j;
                std::swap(a[t], a[si]);
                col_swap(t, sj);
                continue;
            }
            // divisibility of the trailing block by the pivot
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            row_add(t, bad, 1);
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

}  // namespace

namespace detail {

IntegerReduction integer_smith(const SparseMatrix& mat) {
    // Phase 1: eliminate unit pivots sparsely. With a +-1 pivot at (r, c), row
    // operations clear column c; the column operations that clear row r then
    // touch nothing else, so row r and column c simply drop out.
    if (mat.ring().kind() != Ring::Kind::Integers)
        throw Error(Errc::UnsupportedRing, "integer_smith expects a Z matrix, got " + mat.ring().to_string());
    const std::size_t nrows = mat.rows(), ncols = mat.cols();
    std::vector<std::vector<std::pair<std::uint32_t, mpz_class>>> rows(nrows);
    for (std::size_t j = 0; j < ncols; ++j)
        for (const auto& [i, v] : mat.column(j)) rows[i].emplace_back(static_cast<std::uint32_t>(j), v.lift());
    std::vector<std::vector<std::uint32_t>> col_rows(ncols);
    std::set<std::pair<std::size_t, std::uint32_t>> active;
    std::vector<std::uint8_t> is_active(nrows, 0);
    for (std::uint32_t r = 0; r < nrows; ++r) {
        if (rows[r].empty()) continue;
        active.emplace(rows[r].size(), r);
        is_active[r] = 1;
        for (const auto& e : rows[r]) col_rows[e.first].push_back(r);
    }
    std::size_t units = 0;
    std::vector<std::uint32_t> stamp(nrows, 0);
    std::uint32_t step = 0;
    std::vector<std::pair<std::uint32_t, mpz_class>> scratch;
    std::vector<std::uint8_t> unit_free(nrows, 0);
    for (;;) {
        std::uint32_t r = 0;
        std::size_t pos = 0;
        bool found = false;
        for (const auto& [len, cand] : active) {
            if (unit_free[cand]) continue;
            const auto& row = rows[cand];
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (abs(row[k].second) != 1) continue;
                if (!found || col_rows[row[k].first].size() < col_rows[row[pos].first].size()) pos = k;
                found = true;
            }
            if (found) {
                r = cand;
                break;
            }
            unit_free[cand] = 1;
        }
        if (!found) break;
        ++units;
        ++step;
        active.erase({rows[r].size(), r});
        is_active[r] = 0;
        const auto prow = std::move(rows[r]);
        rows[r].clear();
        const std::uint32_t c = prow[pos].first;
        const mpz_class pv = prow[pos].second;  // +-1
        for (auto s : col_rows[c]) {
            if (!is_active[s] || stamp[s] == step) continue;
            stamp[s] = step;
            auto& row = rows[s];
            auto it = std::lower_bound(row.begin(), row.end(), c,
                                       [](const auto& e, std::uint32_t col) { return e.first < col; });
            if (it == row.end() || it->first != c) continue;
            const mpz_class factor = it->second * pv;  // row -= factor * prow (pv^2 = 1)
            active.erase({row.size(), s});
            scratch.clear();
            std::size_t p = 0, q = 0;
            while (p < row.size() || q < prow.size()) {
                if (q == prow.size() || (p < row.size() && row[p].first < prow[q].first)) {
                    scratch.push_back(std::move(row[p++]));
                } else if (p == row.size() || prow[q].first < row[p].first) {
                    scratch.emplace_back(prow[q].first, -factor * prow[q].second);
                    col_rows[prow[q].first].push_back(s);
                    ++q;
                } else {
                    mpz_class v = row[p].second - factor * prow[q].second;
                    if (v != 0) scratch.emplace_back(row[p].first, std::move(v));
                    ++p;
                    ++q;
                }
            }
            std::swap(row, scratch);
            unit_free[s] = 0;
            if (!row.empty()) active.emplace(row.size(), s);
            else is_active[s] = 0;
        }
        col_rows[c].clear();
    }
    // Phase 2: dense Smith form of what is left.
    std::vector<std::uint32_t> live_rows;
    std::vector<std::int64_t> col_map(ncols, -1);
    std::size_t live_cols = 0;
    for (const auto& [len, r] : active) live_rows.push_back(r);
    std::sort(live_rows.begin(), live_rows.end());
    for (auto r : live_rows)
        for (const auto& e : rows[r])
            if (col_map[e.first] < 0) col_map[e.first] = static_cast<std::int64_t>(live_cols++);
    DenseZ dense(live_rows.size(), std::vector<mpz_class>(live_cols));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
        for (const auto& e : rows[live_rows[i]]) dense[i][static_cast<std::size_t>(col_map[e.first])] = e.second;
    IntegerReduction out;
    out.invariants.assign(units, mpz_class(1));
    auto rest = dense_smith(std::move(dense), nullptr);
    // Diagonal from the dense pass already forms a divisibility chain.
    out.invariants.insert(out.invariants.end(), rest.begin(), rest.end());
    out.rank = out.invariants.size();
    return out;
}

}  // namespace detail

std::vector<mpz_class> smith_normal_form(const SparseMatrix& m) {
    const Ring& ring = m.ring();
    if (ring.kind() == Ring::Kind::Integers) return detail::integer_smith(m).invariants;
    if (ring.kind() != Ring::Kind::IntegersMod) throw Error(Errc::UnsupportedRing, "smith_normal_form over " + ring.to_string());
    const mpz_class modulus(static_cast<unsigned long>(ring.parameter()));
    const Ring z = Ring::integers();
    std::vector<SparseMatrix::Column> cols(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (const auto& [i, v] : m.column(j)) cols[j].emplace_back(i, Scalar::from_integer(z, v.lift()));
        cols[j].emplace_back(static_cast<std::uint32_t>(m.rows() + j), Scalar::from_integer(z, modulus));
    }
    auto lifted = SparseMatrix::from_columns(z, m.rows() + m.cols(), std::move(cols));
    std::vector<mpz_class> out;
    for (auto& d : detail::integer_smith(lifted).invariants)
        if (d != modulus) out.push_back(d);
    return out;
}

// ---------------------------------------------------------------- homology

namespace {

HomologyModule homology_mod(const SparseMatrix& d_in, const SparseMatrix& d_out) {
    const Ring& ring = d_in.ring();
    const mpz_class modulus(static_cast<unsigned long>(ring.parameter()));
    const std::size_t a = d_out.cols();
    if (a == 0) return HomologyModule::zero(ring);
    DenseZ out(d_out.rows(), std::vector<mpz_class>(a));
    for (std::size_t j = 0; j < a; ++j)
        for (const auto& [i, v] : d_out.column(j)) out[i][j] = v.lift();
    DenseZ vinv(a, std::vector<mpz_class>(a));
    for (std::size_t i = 0; i < a; ++i) vinv[i][i] = 1;
    auto g = dense_smith(std::move(out), &vinv);
    // Kernel lattice mod m in y = V^{-1} x coordinates: y_i in (m / gcd(g_i, m)) Z.
    std::vector<mpz_class> lambda(a, mpz_class(1));
    for (std::size_t i = 0; i < a; ++i) {
        mpz_class gi = i < g.size() ? g[i] : mpz_class(0);
        mpz_class gcd;
        mpz_gcd(gcd.get_mpz_t(), gi.get_mpz_t(), modulus.get_mpz_t());
        lambda[i] = modulus / gcd;
    }
    const std::size_t c = d_in.cols();
    DenseZ rel(a, std::vector<mpz_class>(c + a));
    for (std::size_t j = 0; j < c; ++j) {
        for (const auto& [k, v] : d_in.column(j)) {
            const mpz_class x = v.lift();
            for (std::size_t i = 0; i < a; ++i)
                if (vinv[i][k] != 0) rel[i][j] += vinv[i][k] * x;
        }
    }
    for (std::size_t i = 0; i < a; ++i) rel[i][c + i] = modulus;
    for (std::size_t i = 0; i < a; ++i)
        for (auto& e : rel[i]) {
            if (e % lambda[i] != 0) throw Error(Errc::NotAComplex, "image not inside kernel modulo m");
            e /= lambda[i];
        }
    auto factors = dense_smith(std::move(rel), nullptr);
    return HomologyModule::from_factors(ring, 0, factors);
}

}  // namespace

HomologyModule homology_at(const SparseMatrix& d_in, const SparseMatrix& d_out, bool check) {
    if (!(d_in.ring() == d_out.ring())) throw Error(Errc::RingMismatch, "homology_at");
    if (d_in.rows() != d_out.cols()) throw Error(Errc::InvalidInput, "homology_at: shapes not composable");
    if (check && !(d_out * d_in).is_zero()) throw Error(Errc::NotAComplex, "d_out * d_in != 0");
    const Ring& ring = d_in.ring();
    const std::size_t a = d_out.cols();
    switch (ring.kind()) {
        case Ring::Kind::Rationals:
        case Ring::Kind::PrimeField:
        case Ring::Kind::Cyclotomic:
            return HomologyModule::free(ring, a - rank(d_out) - rank(d_in));
        case Ring::Kind::Integers: {
            const auto in = detail::integer_smith(d_in);
            const auto out = detail::integer_smith(d_out);
            std::vector<mpz_class> tors;
            for (const auto& d : in.invariants)
                if (d > 1) tors.push_back(d);
            return HomologyModule::from_factors(ring, a - in.rank - out.rank, tors);
        }
        case Ring::Kind::IntegersMod:
            return homology_mod(d_in, d_out);
    }
    return HomologyModule::zero(ring);
}

}  // namespace hopfcycl
