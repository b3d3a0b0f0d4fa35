#include "starpi/scalar_poly.hpp"

#include <set>
#include <sstream>

namespace starpi {

std::string to_string(const Indeterminate& x) {
    return x.name + std::to_string(x.index);
}

int total_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [x, e] : m) d += e;
    return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

ScalarPoly::ScalarPoly(const Rational& c) {
    if (!starpi::is_zero(c)) terms_[Monomial{}] = c;
}

ScalarPoly::ScalarPoly(const Indeterminate& x) {
    terms_[Monomial{{x, 1}}] = Rational(1);
}

bool ScalarPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

void ScalarPoly::add_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!starpi::is_zero(c)) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (starpi::is_zero(it->second)) terms_.erase(it);
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
    return *this;
}

ScalarPoly ScalarPoly::operator+(const ScalarPoly& o) const {
    ScalarPoly r = *this;
    r += o;
    return r;
}

ScalarPoly ScalarPoly::operator-(const ScalarPoly& o) const {
    ScalarPoly r = *this;
    r -= o;
    return r;
}

ScalarPoly ScalarPoly::operator-() const {
    ScalarPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

ScalarPoly ScalarPoly::operator*(const Rational& c) const {
    ScalarPoly r;
    if (starpi::is_zero(c)) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

ScalarPoly ScalarPoly::operator*(const ScalarPoly& o) const {
    ScalarPoly r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (const auto& [x, e] : mb) m[x] += e;
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

ScalarPoly ScalarPoly::substitute(const Indeterminate& x, const Rational& value) const {
    ScalarPoly r;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(x);
        if (it == m.end()) {
            r.add_term(m, c);
            continue;
        }
        Rational scaled = c;
        for (int i = 0; i < it->second; ++i) scaled *= value;
        Monomial rest = m;
        rest.erase(x);
        r.add_term(rest, scaled);
    }
    return r;
}

Rational ScalarPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Indeterminate> ScalarPoly::indeterminates() const {
    std::set<Indeterminate> seen;
    for (const auto& [m, c] : terms_)
        for (const auto& [x, e] : m) seen.insert(x);
    return {seen.begin(), seen.end()};
}

std::string ScalarPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        bool coeff_shown = (a != 1) || m.empty();
        if (coeff_shown) out << a.get_str();
        bool lead = !coeff_shown;
        for (const auto& [x, e] : m) {
            if (!lead) out << "*";
            lead = false;
            out << to_string(x);
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace starpi
