#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "starpi/rational.hpp"

namespace starpi {

// Sparse row: column index -> nonzero value, sorted by column.
using SparseRow = std::map<int, Rational>;

using QVector = std::vector<Rational>;

// Exact sparse rational matrix. No explicit zeros are stored.
class SparseMatrixQ {
  public:
    SparseMatrixQ(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
    }

    int row_count() const { return rows_; }
    int col_count() const { return cols_; }

    void set(int r, int c, const Rational& v);
    void add(int r, int c, const Rational& v);
    Rational get(int r, int c) const;
    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

    // Exact rank over Q. Pivoting picks the shortest remaining row, then the
    // smallest column index, so elimination is deterministic.
    int rank() const;

    // Basis of the right null space; size is col_count() - rank().
    std::vector<QVector> kernel_basis() const;

    QVector multiply(const QVector& v) const;

  private:
    int rows_, cols_;
    std::map<std::pair<int, int>, Rational> entries_;
};

// Incremental row-echelon accumulator over sparse rational rows. Used for all
// rank / span-membership computations on evaluation coordinates.
class EchelonSpan {
  public:
    // Reduces the row against the current basis; inserts the remainder if
    // nonzero. Returns true when the row enlarged the span.
    bool add_row(SparseRow row);
    bool add_row(const QVector& row);

    // True iff the row already lies in the span.
    bool contains(SparseRow row) const;
    bool contains(const QVector& row) const;

    int rank() const { return static_cast<int>(basis_.size()); }
    const std::map<int, SparseRow>& basis() const { return basis_; }

  private:
    SparseRow reduce(SparseRow row) const;
    // pivot column -> row with leading coefficient 1 at that column
    std::map<int, SparseRow> basis_;
};

SparseRow to_sparse_row(const QVector& v);

bool in_span(const std::vector<QVector>& vectors, const QVector& target);

}  // namespace starpi
