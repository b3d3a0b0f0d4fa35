#include "starpi/sparse_matrix.hpp"

#include <algorithm>
#include <list>

namespace starpi {

void SparseMatrixQ::set(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    if (is_zero(v))
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

void SparseMatrixQ::add(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    auto key = std::make_pair(r, c);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        if (!is_zero(v)) entries_.emplace(key, v);
        return;
    }
    it->second += v;
    if (is_zero(it->second)) entries_.erase(it);
}

Rational SparseMatrixQ::get(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

QVector SparseMatrixQ::multiply(const QVector& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("dimension mismatch");
    QVector out(rows_, Rational(0));
    for (const auto& [rc, val] : entries_) out[rc.first] += val * v[rc.second];
    return out;
}

namespace {

struct WorkRow {
    int id;
    SparseRow cells;
};

// Eliminates column `col` from `row` using `pivot` (pivot has an entry at col).
void eliminate(SparseRow& row, const SparseRow& pivot, int col) {
    auto it = row.find(col);
    if (it == row.end()) return;
    Rational factor = it->second / pivot.at(col);
    for (const auto& [c, v] : pivot) {
        auto jt = row.find(c);
        if (jt == row.end()) {
            row.emplace(c, -factor * v);
        } else {
            jt->second -= factor * v;
            if (is_zero(jt->second)) row.erase(jt);
        }
    }
}

// Markowitz-lite RREF: repeatedly pick the shortest remaining row (ties by
// original row id), pivot on its smallest column, clear that column everywhere.
// Returns pivot rows normalized to leading 1, keyed by pivot column.
std::map<int, SparseRow> sparse_rref(const std::map<std::pair<int, int>, Rational>& entries) {
    std::map<int, SparseRow> rows;
    for (const auto& [rc, v] : entries) rows[rc.first][rc.second] = v;

    std::list<WorkRow> active;
    for (auto& [id, cells] : rows) active.push_back({id, std::move(cells)});

    std::map<int, SparseRow> pivots;
    while (!active.empty()) {
        auto best = active.begin();
        for (auto it = std::next(active.begin()); it != active.end(); ++it) {
            if (it->cells.size() < best->cells.size() ||
                (it->cells.size() == best->cells.size() && it->id < best->id))
                best = it;
        }
        SparseRow piv = std::move(best->cells);
        active.erase(best);
        if (piv.empty()) continue;
        int col = piv.begin()->first;
        for (auto it = active.begin(); it != active.end();) {
            eliminate(it->cells, piv, col);
            if (it->cells.empty())
                it = active.erase(it);
            else
                ++it;
        }
        for (auto& [pc, prow] : pivots) eliminate(prow, piv, col);
        Rational lead = piv.at(col);
        for (auto& [c, v] : piv) v /= lead;
        pivots.emplace(col, std::move(piv));
    }
    return pivots;
}

}  // namespace

int SparseMatrixQ::rank() const {
    return static_cast<int>(sparse_rref(entries_).size());
}

std::vector<QVector> SparseMatrixQ::kernel_basis() const {
    auto pivots = sparse_rref(entries_);
    std::vector<QVector> basis;
    for (int free_col = 0; free_col < cols_; ++free_col) {
        if (pivots.count(free_col)) continue;
        QVector v(cols_, Rational(0));
        v[free_col] = 1;
        for (const auto& [pc, row] : pivots) {
            auto it = row.find(free_col);
            if (it != row.end()) v[pc] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

SparseRow to_sparse_row(const QVector& v) {
    SparseRow r;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (!is_zero(v[i])) r[i] = v[i];
    return r;
}

SparseRow EchelonSpan::reduce(SparseRow row) const {
    while (!row.empty()) {
        int col = row.begin()->first;
        auto it = basis_.find(col);
        if (it == basis_.end()) break;
        eliminate(row, it->second, col);
    }
    // clear non-leading positions that still match basis pivots
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [c, v] : row) {
            auto it = basis_.find(c);
            if (it != basis_.end()) {
                eliminate(row, it->second, c);
                changed = true;
                break;
            }
        }
    }
    return row;
}

bool EchelonSpan::add_row(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    int col = row.begin()->first;
    Rational lead = row.begin()->second;
    for (auto& [c, v] : row) v /= lead;
    for (auto& [pc, prow] : basis_) eliminate(prow, row, col);
    basis_.emplace(col, std::move(row));
    return true;
}

bool EchelonSpan::add_row(const QVector& row) { return add_row(to_sparse_row(row)); }

bool EchelonSpan::contains(SparseRow row) const { return reduce(std::move(row)).empty(); }

bool EchelonSpan::contains(const QVector& row) const { return contains(to_sparse_row(row)); }

bool in_span(const std::vector<QVector>& vectors, const QVector& target) {
    EchelonSpan span;
    size_t len = target.size();
    for (const auto& v : vectors) {
        if (v.size() != len) throw std::invalid_argument("dimension mismatch");
        span.add_row(v);
    }
    return span.contains(target);
}

}  // namespace starpi
