#include "starpi/free_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace starpi {

std::string to_string(const Variable& v) {
    return (v.kind == Variable::Sym ? "y" : "z") + std::to_string(v.index);
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (size_t i = 0; i < w.size(); ++i) {
        size_t j = i;
        while (j + 1 < w.size() && w[j + 1] == w[i]) ++j;
        if (i > 0) out << " ";
        out << to_string(w[i]);
        if (j > i) out << "^" << (j - i + 1);
        i = j;
    }
    return out.str();
}

NCPoly::NCPoly(const Rational& c) {
    if (!starpi::is_zero(c)) terms_[Word{}] = c;
}

NCPoly::NCPoly(const Variable& v) { terms_[Word{v}] = Rational(1); }

NCPoly::NCPoly(const Word& w, const Rational& c) {
    if (!starpi::is_zero(c)) terms_[w] = c;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (!starpi::is_zero(c)) terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (starpi::is_zero(it->second)) terms_.erase(it);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, Rational(-c));
    return *this;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    r += o;
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    NCPoly r = *this;
    r -= o;
    return r;
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

NCPoly NCPoly::operator*(const Rational& c) const {
    NCPoly r;
    if (starpi::is_zero(c)) return r;
    for (const auto& [w, v] : terms_) r.terms_[w] = v * c;
    return r;
}

NCPoly operator*(const Rational& c, const NCPoly& p) { return p * c; }

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly r;
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : o.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

std::vector<Variable> NCPoly::variables() const {
    std::set<Variable> seen;
    for (const auto& [w, c] : terms_)
        for (const auto& v : w) seen.insert(v);
    return {seen.begin(), seen.end()};
}

NCPoly involute(const NCPoly& p) {
    NCPoly r;
    for (const auto& [w, c] : p.terms()) {
        Word rev(w.rbegin(), w.rend());
        int skew_count = static_cast<int>(
            std::count_if(w.begin(), w.end(), [](const Variable& v) { return v.kind == Variable::Skew; }));
        r.add_term(rev, (skew_count % 2 == 0) ? c : Rational(-c));
    }
    return r;
}

NCPoly commutator(std::span<const NCPoly> args) {
    if (args.size() < 2) throw arity_error("commutator needs at least two arguments");
    NCPoly acc = args[0] * args[1] - args[1] * args[0];
    for (size_t i = 2; i < args.size(); ++i) acc = acc * args[i] - args[i] * acc;
    return acc;
}

NCPoly commutator(std::span<const Variable> letters) {
    std::vector<NCPoly> args;
    args.reserve(letters.size());
    for (const auto& v : letters) args.emplace_back(v);
    return commutator(std::span<const NCPoly>(args));
}

NCPoly commutator(std::initializer_list<NCPoly> args) {
    std::vector<NCPoly> v(args);
    return commutator(std::span<const NCPoly>(v));
}

int commutator_symmetry_sign(std::span<const Variable> letters) {
    if (letters.size() < 2) throw arity_error("commutator needs at least two letters");
    int skew_count = 0;
    for (const auto& v : letters)
        if (v.kind == Variable::Skew) ++skew_count;
    int exponent = static_cast<int>(letters.size()) - 1 + skew_count;
    return (exponent % 2 == 0) ? 1 : -1;
}

std::map<Variable, int> multidegree(const NCPoly& p) {
    if (p.is_zero()) throw homogeneity_error("multidegree of the zero polynomial");
    std::map<Variable, int> deg;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        std::map<Variable, int> d;
        for (const auto& v : w) ++d[v];
        if (first) {
            deg = d;
            first = false;
        } else if (d != deg) {
            throw homogeneity_error("polynomial is not multihomogeneous");
        }
    }
    return deg;
}

bool is_multilinear(const NCPoly& p, const std::vector<Variable>& vars) {
    Word sorted_vars(vars.begin(), vars.end());
    std::sort(sorted_vars.begin(), sorted_vars.end());
    for (const auto& [w, c] : p.terms()) {
        Word s = w;
        std::sort(s.begin(), s.end());
        if (s != sorted_vars) return false;
    }
    return true;
}

NCPoly substitute(const NCPoly& p, const VarAssignment& assignment) {
    for (const auto& [v, image] : assignment) {
        NCPoly istar = involute(image);
        if (v.kind == Variable::Sym && !(istar == image))
            throw parity_error("symmetric variable mapped to a non-symmetric polynomial");
        if (v.kind == Variable::Skew && !(istar == -image))
            throw parity_error("skew variable mapped to a non-skew polynomial");
    }
    NCPoly r;
    for (const auto& [w, c] : p.terms()) {
        NCPoly prod(c);
        for (const auto& v : w) {
            auto it = assignment.find(v);
            prod = (it == assignment.end()) ? prod * NCPoly(v) : prod * it->second;
        }
        r += prod;
    }
    return r;
}

std::string to_string(const NCPoly& p) {
    if (p.is_zero()) return "0";
    // print in graded order so small words lead
    std::vector<const NCPoly::TermMap::value_type*> ts;
    for (const auto& t : p.terms()) ts.push_back(&t);
    std::stable_sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        if (a->first.size() != b->first.size()) return a->first.size() < b->first.size();
        return a->first < b->first;
    });
    std::ostringstream out;
    bool first = true;
    for (auto* t : ts) {
        Rational c = t->second;
        if (first) {
            if (sgn(c) < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        bool unit_word = t->first.empty();
        if (c != 1 || unit_word) {
            out << c.get_str();
            if (!unit_word) out << " ";
        }
        if (!unit_word) out << to_string(t->first);
    }
    return out.str();
}

}  // namespace starpi
