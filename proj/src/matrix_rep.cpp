#include "starpi/matrix_rep.hpp"

#include <sstream>
#include <stdexcept>

#include "starpi/parallel.hpp"

namespace starpi {

AlgebraName algebra_from_string(const std::string& s) {
    if (s == "UT2") return AlgebraName::UT2;
    if (s == "UT4") return AlgebraName::UT4;
    if (s == "B") return AlgebraName::B;
    if (s == "A") return AlgebraName::A;
    throw std::invalid_argument("unknown algebra: " + s);
}

std::string to_string(AlgebraName n) {
    switch (n) {
        case AlgebraName::UT2: return "UT2";
        case AlgebraName::UT4: return "UT4";
        case AlgebraName::B: return "B";
        case AlgebraName::A: return "A";
    }
    throw std::logic_error("unreachable");
}

namespace {

AlgebraSpec make_spec(AlgebraName name) {
    AlgebraSpec s;
    s.name = name;
    s.size = (name == AlgebraName::UT2) ? 2 : 4;
    for (int i = 1; i <= s.size; ++i)
        for (int j = i; j <= s.size; ++j) {
            if (name == AlgebraName::A && i == 2 && j == 3) continue;
            if (name == AlgebraName::B && !((i <= 2 && j <= 2) || (i >= 3 && j >= 3))) continue;
            s.support.insert({i, j});
        }
    return s;
}

}  // namespace

const AlgebraSpec& spec(AlgebraName name) {
    static const AlgebraSpec ut2 = make_spec(AlgebraName::UT2);
    static const AlgebraSpec ut4 = make_spec(AlgebraName::UT4);
    static const AlgebraSpec b = make_spec(AlgebraName::B);
    static const AlgebraSpec a = make_spec(AlgebraName::A);
    switch (name) {
        case AlgebraName::UT2: return ut2;
        case AlgebraName::UT4: return ut4;
        case AlgebraName::B: return b;
        case AlgebraName::A: return a;
    }
    throw std::logic_error("unreachable");
}

const ScalarPoly& UTMat::entry(int i, int j) const {
    static const ScalarPoly zero;
    auto it = entries_.find({i, j});
    return it == entries_.end() ? zero : it->second;
}

void UTMat::set_entry(int i, int j, ScalarPoly p) {
    if (!spec_->support.count({i, j})) {
        if (p.is_zero()) return;
        throw std::out_of_range("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside the support of " + to_string(spec_->name));
    }
    if (p.is_zero())
        entries_.erase({i, j});
    else
        entries_[{i, j}] = std::move(p);
}

UTMat UTMat::operator+(const UTMat& o) const {
    if (spec_ != o.spec_) throw std::invalid_argument("algebra mismatch");
    UTMat r = *this;
    for (const auto& [ij, p] : o.entries_) r.set_entry(ij.first, ij.second, r.entry(ij.first, ij.second) + p);
    return r;
}

UTMat UTMat::operator-(const UTMat& o) const {
    if (spec_ != o.spec_) throw std::invalid_argument("algebra mismatch");
    UTMat r = *this;
    for (const auto& [ij, p] : o.entries_) r.set_entry(ij.first, ij.second, r.entry(ij.first, ij.second) - p);
    return r;
}

UTMat UTMat::operator*(const UTMat& o) const {
    if (spec_ != o.spec_) throw std::invalid_argument("algebra mismatch");
    UTMat r(*spec_);
    // support closure guarantees (i,k) lands inside the mask
    for (const auto& [ij, p] : entries_)
        for (const auto& [jk, q] : o.entries_) {
            if (ij.second != jk.first) continue;
            auto key = std::make_pair(ij.first, jk.second);
            r.set_entry(key.first, key.second, r.entry(key.first, key.second) + p * q);
        }
    return r;
}

UTMat UTMat::operator*(const Rational& c) const {
    UTMat r(*spec_);
    if (starpi::is_zero(c)) return r;
    for (const auto& [ij, p] : entries_) r.set_entry(ij.first, ij.second, p * c);
    return r;
}

bool UTMat::operator==(const UTMat& o) const {
    return spec_ == o.spec_ && entries_ == o.entries_;
}

std::string UTMat::str() const {
    std::ostringstream out;
    for (int i = 1; i <= size(); ++i) {
        out << "[";
        for (int j = 1; j <= size(); ++j) {
            if (j > 1) out << ", ";
            out << (j < i ? "0" : entry(i, j).str());
        }
        out << "]\n";
    }
    return out.str();
}

UTMat ut_zero(AlgebraName name) { return UTMat(spec(name)); }

UTMat ut_identity(AlgebraName name) {
    UTMat m(spec(name));
    for (int i = 1; i <= m.size(); ++i) m.set_entry(i, i, ScalarPoly::one());
    return m;
}

UTMat matrix_unit(AlgebraName name, int i, int j) {
    UTMat m(spec(name));
    m.set_entry(i, j, ScalarPoly::one());
    return m;
}

UTMat mat_star(const UTMat& m) {
    int k = m.size();
    UTMat r(m.algebra());
    for (const auto& [ij, p] : m.entries()) r.set_entry(k + 1 - ij.second, k + 1 - ij.first, p);
    return r;
}

UTMat generic_element(AlgebraName name, Parity parity, const std::string& tag) {
    const AlgebraSpec& s = spec(name);
    UTMat m(s);
    for (const auto& [i, j] : s.support)
        m.set_entry(i, j, ScalarPoly(Indeterminate{tag, 10 * i + j}));
    if (parity == Parity::Any) return m;
    Rational half(1, 2);
    UTMat star = mat_star(m);
    return (parity == Parity::Sym) ? (m + star) * half : (m - star) * half;
}

UTMat special_element(SpecialElement which, AlgebraName name) {
    const AlgebraSpec& s = spec(name);
    if (s.size != 4) throw std::invalid_argument("special elements live in size-4 algebras");
    UTMat m(s);
    ScalarPoly one = ScalarPoly::one();
    switch (which) {
        case SpecialElement::Ycorner:
            m.set_entry(1, 3, one);
            m.set_entry(2, 4, one);
            break;
        case SpecialElement::Zdiag:
            m.set_entry(1, 1, one);
            m.set_entry(2, 2, one);
            m.set_entry(3, 3, -one);
            m.set_entry(4, 4, -one);
            break;
        case SpecialElement::ZcornerD:
            m.set_entry(1, 3, one);
            m.set_entry(2, 4, -one);
            break;
        case SpecialElement::Wdiag:
            m.set_entry(2, 2, one);
            m.set_entry(3, 3, one);
            break;
        case SpecialElement::Identity:
            return ut_identity(name);
    }
    return m;
}

ScalarPoly half_trace(const UTMat& c) {
    if (c.size() != 2) throw std::invalid_argument("half_trace expects a UT2 matrix");
    return (c.entry(1, 1) + c.entry(2, 2)) * Rational(1, 2);
}

UTMat embed_block_diag(const UTMat& block, AlgebraName target, bool plus) {
    if (block.size() != 2) throw std::invalid_argument("block must be a UT2 matrix");
    if (spec(target).size != 4) throw std::invalid_argument("target must have size 4");
    UTMat r(spec(target));
    UTMat rb = mat_star(block);
    for (const auto& [ij, p] : block.entries()) r.set_entry(ij.first, ij.second, p);
    for (const auto& [ij, p] : rb.entries())
        r.set_entry(ij.first + 2, ij.second + 2, plus ? p : -p);
    return r;
}

void Assignment::validate() const {
    for (const auto& [v, m] : images) {
        if (m.algebra().name != algebra) throw std::invalid_argument("assignment mixes algebras");
        UTMat star = mat_star(m);
        if (v.kind == Variable::Sym && !(star == m))
            throw parity_error(to_string(v) + " mapped to a non-symmetric matrix");
        if (v.kind == Variable::Skew && !(star == m * Rational(-1)))
            throw parity_error(to_string(v) + " mapped to a non-skew matrix");
    }
}

UTMat evaluate(const NCPoly& p, const Assignment& a) {
    a.validate();
    std::vector<const NCPoly::TermMap::value_type*> terms;
    for (const auto& t : p.terms()) terms.push_back(&t);
    std::function<UTMat(int)> eval_word = [&](int idx) {
        const auto& [w, c] = *terms[idx];
        UTMat m = ut_identity(a.algebra);
        for (const auto& v : w) {
            auto it = a.images.find(v);
            if (it == a.images.end())
                throw std::invalid_argument("unassigned variable " + to_string(v));
            m = m * it->second;
        }
        return m * c;
    };
    auto parts = parallel_map<UTMat>(static_cast<int>(terms.size()), eval_word);
    UTMat acc = ut_zero(a.algebra);
    for (const auto& part : parts) acc = acc + part;
    return acc;
}

Assignment generic_assignment(const std::vector<Variable>& vars, AlgebraName name) {
    Assignment a{name, {}};
    for (const auto& v : vars) {
        Parity p = (v.kind == Variable::Sym) ? Parity::Sym : Parity::Skew;
        a.images.emplace(v, generic_element(name, p, to_string(v)));
    }
    return a;
}

Assignment generic_assignment(const NCPoly& p, AlgebraName name) {
    return generic_assignment(p.variables(), name);
}

}  // namespace starpi
