#include "starpi/identity_engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "starpi/parallel.hpp"

namespace starpi {

MultilinearSpace::MultilinearSpace(std::vector<Variable> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end())
        throw std::invalid_argument("variable set has repeats");
    if (vars_.empty()) throw std::invalid_argument("empty variable set");
    Word w(vars_.begin(), vars_.end());
    do {
        index_[w] = static_cast<int>(basis_.size());
        basis_.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

MultilinearSpace MultilinearSpace::signature(int sym_count, int skew_count) {
    std::vector<Variable> vars;
    for (int i = 1; i <= skew_count; ++i) vars.push_back(skew(i));
    for (int i = 1; i <= sym_count; ++i) vars.push_back(sym(i));
    return MultilinearSpace(std::move(vars));
}

QVector MultilinearSpace::coordinates(const NCPoly& p) const {
    QVector v(basis_.size(), Rational(0));
    for (const auto& [w, c] : p.terms()) {
        auto it = index_.find(w);
        if (it == index_.end())
            throw std::invalid_argument("polynomial is not multilinear over this space");
        v[it->second] = c;
    }
    return v;
}

NCPoly MultilinearSpace::from_coordinates(const QVector& v) const {
    if (v.size() != basis_.size()) throw std::invalid_argument("dimension mismatch");
    NCPoly p;
    for (size_t i = 0; i < v.size(); ++i) p.add_term(basis_[i], v[i]);
    return p;
}

namespace {

// Deterministic integer spiral 0, 1, -1, 2, -2, ...
long spiral(int step) {
    if (step == 0) return 0;
    int k = (step + 1) / 2;
    return (step % 2 == 1) ? k : -k;
}

Witness extract_witness(const UTMat& value, Assignment assignment) {
    std::pair<int, int> pos{0, 0};
    ScalarPoly target;
    for (const auto& [ij, p] : value.entries()) {
        pos = ij;
        target = p;
        break;  // entries are sorted; take the first nonzero one
    }
    // choose integer values indeterminate by indeterminate, keeping the
    // target polynomial nonzero; a nonzero polynomial over Q always has a
    // non-vanishing integer point
    std::set<Indeterminate> all;
    for (const auto& [v, m] : assignment.images)
        for (const auto& [ij, p] : m.entries())
            for (const auto& x : p.indeterminates()) all.insert(x);
    std::map<Indeterminate, Rational> chosen;
    for (const auto& x : all) {
        for (int step = 0;; ++step) {
            Rational val(spiral(step));
            ScalarPoly next = target.substitute(x, val);
            if (!next.is_zero()) {
                target = next;
                chosen[x] = val;
                break;
            }
        }
    }
    for (auto& [v, m] : assignment.images) {
        UTMat plain(m.algebra());
        for (const auto& [ij, p] : m.entries()) {
            ScalarPoly q = p;
            for (const auto& x : p.indeterminates()) q = q.substitute(x, chosen.at(x));
            plain.set_entry(ij.first, ij.second, std::move(q));
        }
        m = plain;
    }
    return Witness{std::move(assignment), pos, target.constant_value()};
}

}  // namespace

Verdict is_star_identity(const NCPoly& p, AlgebraName algebra) {
    if (p.is_zero()) return {true, std::nullopt};
    Assignment a = generic_assignment(p, algebra);
    UTMat value = evaluate(p, a);
    if (value.is_zero()) return {true, std::nullopt};
    return {false, extract_witness(value, std::move(a))};
}

SparseMatrixQ evaluation_matrix(AlgebraName algebra, const MultilinearSpace& space) {
    Assignment a = generic_assignment(space.variables(), algebra);
    const auto& basis = space.basis();
    std::function<UTMat(int)> eval = [&](int i) {
        return evaluate(NCPoly(basis[i]), a);
    };
    auto values = parallel_map<UTMat>(space.dimension(), eval);

    using RowKey = std::pair<std::pair<int, int>, Monomial>;
    std::map<RowKey, int> row_index;
    for (const auto& m : values)
        for (const auto& [ij, p] : m.entries())
            for (const auto& [mono, c] : p.terms())
                row_index.emplace(RowKey{ij, mono}, 0);
    int next = 0;
    for (auto& [key, id] : row_index) id = next++;

    SparseMatrixQ mat(next, space.dimension());
    for (int col = 0; col < space.dimension(); ++col)
        for (const auto& [ij, p] : values[col].entries())
            for (const auto& [mono, c] : p.terms())
                mat.set(row_index.at(RowKey{ij, mono}), col, c);
    return mat;
}

std::vector<QVector> identity_kernel(AlgebraName algebra, const MultilinearSpace& space,
                                     int degree_bound) {
    if (static_cast<int>(space.variables().size()) > degree_bound)
        throw std::invalid_argument("degree bound exceeded (--max-degree)");
    return evaluation_matrix(algebra, space).kernel_basis();
}

int independence_rank(const std::vector<NCPoly>& polys, AlgebraName algebra) {
    if (polys.empty()) return 0;
    std::vector<Variable> vars;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        auto pv = p.variables();
        if (vars.empty())
            vars = pv;
        else if (vars != pv)
            throw std::invalid_argument("polynomials range over mixed variable sets");
        if (!is_multilinear(p, vars))
            throw std::invalid_argument("polynomial is not multilinear");
    }
    if (vars.empty()) return 0;
    Assignment a = generic_assignment(vars, algebra);
    using CellKey = std::pair<std::pair<int, int>, Monomial>;
    std::vector<std::map<CellKey, Rational>> cell_rows;
    std::map<CellKey, int> dict;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        UTMat value = evaluate(p, a);
        std::map<CellKey, Rational> cells;
        for (const auto& [ij, q] : value.entries())
            for (const auto& [mono, c] : q.terms()) {
                cells[{ij, mono}] = c;
                dict.emplace(CellKey{ij, mono}, 0);
            }
        cell_rows.push_back(std::move(cells));
    }
    int next = 0;
    for (auto& [key, id] : dict) id = next++;
    EchelonSpan span;
    for (const auto& cells : cell_rows) {
        SparseRow row;
        for (const auto& [key, c] : cells) row[dict.at(key)] = c;
        span.add_row(std::move(row));
    }
    return span.rank();
}

}  // namespace starpi
