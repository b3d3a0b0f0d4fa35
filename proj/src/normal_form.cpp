#include "starpi/normal_form.hpp"

#include <algorithm>
#include <tuple>
#include <variant>

namespace starpi {

NCPoly OrderedDecomposition::expand_ordered() const {
    NCPoly p;
    for (const auto& [c, seq] : ordered) p += c * commutator(std::span<const Variable>(seq));
    return p;
}

NCPoly OrderedDecomposition::expand() const { return expand_ordered() + two_commutator_part; }

namespace {

struct OrdAcc {
    std::map<std::vector<Variable>, Rational> terms;
    NCPoly residue;
};

// Residue of swapping positions p and p+1 (p >= 2):
//   [X, a, b, rest] = [X, b, a, rest] + [[X,[a,b]], rest],  X = seq[0..p)
NCPoly swap_residue(const std::vector<Variable>& seq, int p) {
    NCPoly base = commutator(std::span<const Variable>(seq.data(), p));
    NCPoly pair = commutator(std::span<const Variable>(seq.data() + p, 2));
    NCPoly r = base * pair - pair * base;
    for (size_t i = p + 2; i < seq.size(); ++i) {
        NCPoly x(seq[i]);
        r = r * x - x * r;
    }
    return r;
}

// seq[0..n-1) satisfies the ordered pattern; the last letter is freshly
// appended. Restores the pattern by tail swaps and, when the new letter is a
// strict minimum, a three-letter Jacobi split.
void insert_letter(std::vector<Variable> seq, const Rational& coeff, OrdAcc& acc) {
    int pos = static_cast<int>(seq.size()) - 1;
    while (pos >= 3 && seq[pos] < seq[pos - 1]) {
        acc.residue += coeff * swap_residue(seq, pos - 1);
        std::swap(seq[pos], seq[pos - 1]);
        --pos;
    }
    if (pos == 2 && seq[2] < seq[1]) {
        // [a,b,c,rest] = [a,c,b,rest] - [b,c,a,rest] with c a new minimum
        Variable a = seq[0], b = seq[1], c = seq[2];
        std::vector<Variable> t1{a, c, b};
        t1.insert(t1.end(), seq.begin() + 3, seq.end());
        acc.terms[t1] += coeff;
        std::vector<Variable> t2{b, c, a};
        t2.insert(t2.end(), seq.begin() + 3, seq.end());
        int q = 2;
        while (q + 1 < static_cast<int>(t2.size()) && t2[q + 1] < t2[q]) {
            acc.residue -= coeff * swap_residue(t2, q);
            std::swap(t2[q], t2[q + 1]);
            ++q;
        }
        acc.terms[t2] -= coeff;
    } else {
        acc.terms[seq] += coeff;
    }
}

OrdAcc decompose(std::span<const Variable> letters) {
    OrdAcc acc;
    size_t n = letters.size();
    if (n < 2) throw arity_error("commutator needs at least two letters");
    if (n == 2) {
        if (letters[0] == letters[1]) return acc;
        if (letters[1] < letters[0])
            acc.terms[{letters[0], letters[1]}] = Rational(1);
        else
            acc.terms[{letters[1], letters[0]}] = Rational(-1);
        return acc;
    }
    OrdAcc prev = decompose(letters.first(n - 1));
    NCPoly x(letters[n - 1]);
    acc.residue = prev.residue * x - x * prev.residue;
    for (const auto& [seq, c] : prev.terms) {
        std::vector<Variable> s = seq;
        s.push_back(letters[n - 1]);
        insert_letter(std::move(s), c, acc);
    }
    return acc;
}

}  // namespace

OrderedDecomposition order_commutator(std::span<const Variable> letters) {
    OrdAcc acc = decompose(letters);
    OrderedDecomposition out;
    for (const auto& [seq, c] : acc.terms)
        if (!is_zero(c)) out.ordered.emplace_back(c, seq);
    out.two_commutator_part = std::move(acc.residue);
    return out;
}

namespace {

// Prefix order for the straightened letter block: y's first, both ascending.
bool letter_before(const Variable& a, const Variable& b) {
    if (a.kind != b.kind) return a.kind == Variable::Sym;
    return a.index < b.index;
}

}  // namespace

std::vector<ProperComponent> proper_decompose(const NCPoly& p) {
    using Factor = std::variant<Variable, std::vector<Variable>>;
    using Seq = std::vector<Factor>;
    std::map<Seq, Rational> pending, done;
    for (const auto& [w, c] : p.terms()) {
        Seq s;
        for (const auto& v : w) s.emplace_back(v);
        pending[s] += c;
    }
    while (!pending.empty()) {
        auto it = pending.begin();
        Seq s = it->first;
        Rational c = it->second;
        pending.erase(it);
        if (is_zero(c)) continue;
        size_t i = 0;
        int rule = 0;
        for (; i + 1 < s.size(); ++i) {
            if (!std::holds_alternative<Variable>(s[i + 1])) continue;
            if (std::holds_alternative<std::vector<Variable>>(s[i])) {
                rule = 1;  // C x = x C + [C, x]
                break;
            }
            if (letter_before(std::get<Variable>(s[i + 1]), std::get<Variable>(s[i]))) {
                rule = 2;  // a b = b a + [a, b]
                break;
            }
        }
        if (rule == 0) {
            done[s] += c;
            continue;
        }
        Variable x = std::get<Variable>(s[i + 1]);
        std::vector<Variable> letters;
        if (rule == 1)
            letters = std::get<std::vector<Variable>>(s[i]);
        else
            letters = {std::get<Variable>(s[i])};
        Seq swapped = s;
        std::swap(swapped[i], swapped[i + 1]);
        pending[swapped] += c;
        Seq merged = s;
        letters.push_back(x);
        merged[i] = letters;
        merged.erase(merged.begin() + i + 1);
        pending[merged] += c;
    }
    std::map<Word, NCPoly> groups;
    for (const auto& [s, c] : done) {
        if (is_zero(c)) continue;
        Word ypre, zword;
        NCPoly tail = NCPoly(c);
        for (const auto& f : s) {
            if (const Variable* v = std::get_if<Variable>(&f)) {
                (v->kind == Variable::Sym ? ypre : zword).push_back(*v);
            } else {
                const auto& letters = std::get<std::vector<Variable>>(f);
                tail = tail * commutator(std::span<const Variable>(letters));
            }
        }
        groups[ypre] += NCPoly(zword) * tail;
    }
    std::vector<ProperComponent> out;
    for (auto& [pre, poly] : groups)
        if (!poly.is_zero()) out.push_back({pre, std::move(poly)});
    return out;
}

NCPoly expand(const std::vector<ProperComponent>& components) {
    NCPoly p;
    for (const auto& comp : components) p += NCPoly(comp.sym_prefix) * comp.proper;
    return p;
}

NCPoly TwoCommInput::expand() const {
    return NCPoly(z_prefix) * commutator(std::span<const Variable>(first)) *
           commutator(std::span<const Variable>(second));
}

std::vector<Variable> TwoCommInput::variables() const {
    std::vector<Variable> v(z_prefix.begin(), z_prefix.end());
    v.insert(v.end(), first.begin(), first.end());
    v.insert(v.end(), second.begin(), second.end());
    return v;
}

NCPoly CanonicalTerm::expand() const {
    return coeff * (NCPoly(prefix) * commutator(std::span<const Variable>(middle)) *
                    commutator(std::span<const Variable>(last)));
}

bool matches_canonical_shape(const CanonicalTerm& t, bool all_symmetric) {
    if (!std::is_sorted(t.prefix.begin(), t.prefix.end())) return false;
    if (t.middle.size() < 2) return false;
    if (!(t.middle[1] < t.middle[0])) return false;
    for (size_t i = 2; i < t.middle.size(); ++i)
        if (t.middle[i] < t.middle[i - 1]) return false;
    Variable k1 = t.last[0], k2 = t.last[1];
    if (!(k2 < k1)) return false;
    if (!t.prefix.empty() && t.prefix.front() < k2) return false;
    if (t.middle[1] < k2) return false;
    if (all_symmetric && t.middle[0] < k1) return false;
    return true;
}

namespace {

// Working shape coeff * pre * [c1] * [c2] * post.
struct WTerm {
    Rational coeff;
    Word pre;
    std::vector<Variable> c1;
    std::vector<Variable> c2;
    Word post;

    NCPoly expand() const {
        return coeff * (NCPoly(pre) * commutator(std::span<const Variable>(c1)) *
                        commutator(std::span<const Variable>(c2)) * NCPoly(post));
    }
};

NCPoly expand_all(const std::vector<WTerm>& ts) {
    NCPoly p;
    for (const auto& t : ts) p += t.expand();
    return p;
}

int letters_sign(const std::vector<Variable>& letters) {
    return commutator_symmetry_sign(std::span<const Variable>(letters));
}

}  // namespace

CanonicalResult two_commutator_canonical(const TwoCommInput& input, const IdealContext& ctx) {
    std::vector<Variable> vars = input.variables();
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
        throw std::invalid_argument("two-commutator input is not multilinear");
    if (input.first.size() < 2 || input.second.size() < 2)
        throw arity_error("commutator factors need at least two letters");
    for (const auto& v : input.z_prefix)
        if (v.kind != Variable::Skew) throw parity_error("prefix letters must be skew");
    if (vars != ctx.space().variables())
        throw std::invalid_argument("ideal context is over a different variable set");

    const Variable mu = vars.front();
    const NCPoly original = input.expand();

    auto certify = [&](const NCPoly& before, const NCPoly& after, const char* step) {
        if (!ctx.contains(before - after))
            throw std::logic_error(std::string("rewriting step is not certified by the consequence span: ") + step);
    };

    std::vector<WTerm> work{{Rational(1), input.z_prefix, input.first, input.second, {}}};

    // relocate the minimal variable into the second commutator
    if (std::find(work[0].pre.begin(), work[0].pre.end(), mu) != work[0].pre.end()) {
        WTerm t = work[0];
        size_t idx = std::find(t.pre.begin(), t.pre.end(), mu) - t.pre.begin();
        while (idx + 1 < t.pre.size()) {
            NCPoly before = t.expand();
            std::swap(t.pre[idx], t.pre[idx + 1]);
            ++idx;
            certify(before, t.expand(), "prefix shuffle");
        }
        t.pre.pop_back();
        // z c1 c2 = -1/2 [c1,z] c2 - 1/2 s1 s2 [c2,z] c1  (mod I)
        int s1 = letters_sign(t.c1), s2 = letters_sign(t.c2);
        WTerm ta = t, tb = t;
        ta.coeff *= Rational(-1, 2);
        ta.c1.push_back(mu);
        tb.coeff *= Rational(-1, 2) * Rational(s1 * s2);
        tb.c1 = t.c2;
        tb.c1.push_back(mu);
        tb.c2 = t.c1;
        std::vector<WTerm> next{ta, tb};
        certify(work[0].expand(), expand_all(next), "2z absorption");
        work = std::move(next);
    }
    for (auto& t : work) {
        if (std::find(t.c1.begin(), t.c1.end(), mu) == t.c1.end()) continue;
        NCPoly before = t.expand();
        t.coeff *= Rational(letters_sign(t.c1) * letters_sign(t.c2));
        std::swap(t.c1, t.c2);
        certify(before, t.expand(), "commutator swap");
    }

    // order the second commutator; its two-commutator remainder dies mod I
    {
        std::vector<WTerm> next;
        for (const auto& t : work) {
            auto od = order_commutator(std::span<const Variable>(t.c2));
            std::vector<WTerm> repl;
            for (const auto& [a, seq] : od.ordered) {
                WTerm u = t;
                u.coeff *= a;
                u.c2 = seq;
                repl.push_back(std::move(u));
            }
            certify(t.expand(), expand_all(repl), "order second commutator");
            next.insert(next.end(), repl.begin(), repl.end());
        }
        work = std::move(next);
    }

    // expand around the core pair [head, mu] and straighten c1 through the
    // left wrapper; both rewrites are exact in the free algebra
    {
        std::vector<WTerm> next;
        for (const auto& t : work) {
            if (t.c2[1] != mu) throw std::logic_error("minimal variable missed the core pair");
            std::vector<Variable> core{t.c2[0], t.c2[1]};
            std::vector<std::tuple<int, Word, Word>> wrap{{1, {}, {}}};
            for (size_t i = 2; i < t.c2.size(); ++i) {
                std::vector<std::tuple<int, Word, Word>> grown;
                for (const auto& [sg, m1, m2] : wrap) {
                    Word right = m2;
                    right.push_back(t.c2[i]);
                    grown.emplace_back(sg, m1, right);
                    Word left{t.c2[i]};
                    left.insert(left.end(), m1.begin(), m1.end());
                    grown.emplace_back(-sg, left, m2);
                }
                wrap = std::move(grown);
            }
            std::vector<WTerm> repl;
            for (const auto& [sg, m1, m2] : wrap) {
                // C w = sum over splittings of w into passed letters and
                // letters absorbed into the commutator
                std::vector<std::pair<Word, std::vector<Variable>>> parts{{{}, t.c1}};
                for (const auto& x : m1) {
                    std::vector<std::pair<Word, std::vector<Variable>>> grown;
                    for (const auto& [w, d] : parts) {
                        Word wx = w;
                        wx.push_back(x);
                        grown.emplace_back(wx, d);
                        auto dx = d;
                        dx.push_back(x);
                        grown.emplace_back(w, dx);
                    }
                    parts = std::move(grown);
                }
                for (const auto& [w, d] : parts) {
                    WTerm u;
                    u.coeff = t.coeff * Rational(sg);
                    u.pre = t.pre;
                    u.pre.insert(u.pre.end(), w.begin(), w.end());
                    u.c1 = d;
                    u.c2 = core;
                    u.post = m2;
                    repl.push_back(std::move(u));
                }
            }
            if (!(t.expand() == expand_all(repl)))
                throw std::logic_error("exact wrapper expansion failed");
            next.insert(next.end(), repl.begin(), repl.end());
        }
        work = std::move(next);
    }

    // letters trailing the commutators move to the front, up to sign, mod I
    for (auto& t : work) {
        while (!t.post.empty()) {
            NCPoly before = t.expand();
            Variable x = t.post.front();
            t.post.erase(t.post.begin());
            t.pre.push_back(x);
            if (x.kind == Variable::Skew) t.coeff = -t.coeff;
            certify(before, t.expand(), "trailing letters");
        }
    }

    // sort the prefix; each transposition drops a bracket lying in I
    for (auto& t : work) {
        for (size_t i = 1; i < t.pre.size(); ++i)
            for (size_t j = i; j > 0 && t.pre[j] < t.pre[j - 1]; --j) {
                NCPoly before = t.expand();
                std::swap(t.pre[j], t.pre[j - 1]);
                certify(before, t.expand(), "prefix sort");
            }
    }

    // order the middle commutator
    {
        std::vector<WTerm> next;
        for (const auto& t : work) {
            auto od = order_commutator(std::span<const Variable>(t.c1));
            std::vector<WTerm> repl;
            for (const auto& [a, seq] : od.ordered) {
                WTerm u = t;
                u.coeff *= a;
                u.c1 = seq;
                repl.push_back(std::move(u));
            }
            certify(t.expand(), expand_all(repl), "order middle commutator");
            next.insert(next.end(), repl.begin(), repl.end());
        }
        work = std::move(next);
    }

    // all-symmetric head reduction: when the core head exceeds the middle
    // head, trade [j1,j2,T][k1,mu] for [k1,j2,T][j1,mu] - [k1,j1,T][j2,mu]
    bool all_symmetric =
        std::all_of(vars.begin(), vars.end(), [](const Variable& v) { return v.kind == Variable::Sym; });
    if (all_symmetric) {
        std::vector<WTerm> next;
        for (const auto& t : work) {
            Variable k1 = t.c2[0];
            if (k1 < t.c1[0]) {
                next.push_back(t);
                continue;
            }
            Variable j1 = t.c1[0], j2 = t.c1[1];
            std::vector<Variable> tail(t.c1.begin() + 2, t.c1.end());
            std::vector<WTerm> repl;
            WTerm g = t;
            g.c1 = {k1, j2};
            g.c1.insert(g.c1.end(), tail.begin(), tail.end());
            g.c2 = {j1, mu};
            repl.push_back(g);
            std::vector<Variable> hmid{k1, j1};
            hmid.insert(hmid.end(), tail.begin(), tail.end());
            auto od = order_commutator(std::span<const Variable>(hmid));
            for (const auto& [a, seq] : od.ordered) {
                WTerm h = t;
                h.coeff *= -a;
                h.c1 = seq;
                h.c2 = {j2, mu};
                repl.push_back(std::move(h));
            }
            certify(t.expand(), expand_all(repl), "all-symmetric head");
            next.insert(next.end(), repl.begin(), repl.end());
        }
        work = std::move(next);
    }

    // collect
    std::map<std::tuple<Word, std::vector<Variable>, std::array<Variable, 2>>, Rational> bucket;
    for (const auto& t : work)
        bucket[{t.pre, t.c1, {t.c2[0], t.c2[1]}}] += t.coeff;
    CanonicalResult result;
    for (const auto& [key, c] : bucket) {
        if (is_zero(c)) continue;
        const auto& [pre, mid, last] = key;
        result.terms.push_back({c, pre, mid, last});
        result.poly += result.terms.back().expand();
    }
    certify(original, result.poly, "final");
    return result;
}

CanonicalResult two_commutator_canonical(const NCPoly& p, const IdealContext& ctx) {
    // recover the structure from any word: some word of the expansion is the
    // concatenation prefix . first . second in original letter order
    for (const auto& [w, c] : p.terms()) {
        for (size_t d = 0; d + 4 <= w.size(); ++d) {
            bool skew_prefix = true;
            for (size_t i = 0; i < d && skew_prefix; ++i)
                if (w[i].kind != Variable::Skew) skew_prefix = false;
            if (!skew_prefix) continue;
            for (size_t a = 2; d + a + 2 <= w.size(); ++a) {
                TwoCommInput in{Word(w.begin(), w.begin() + d),
                                {w.begin() + d, w.begin() + d + a},
                                {w.begin() + d + a, w.end()}};
                NCPoly q = in.expand();
                auto it = q.terms().find(w);
                if (it == q.terms().end()) continue;
                Rational scale = c / it->second;
                if (!(q * scale == p)) continue;
                CanonicalResult r = two_commutator_canonical(in, ctx);
                for (auto& t : r.terms) t.coeff *= scale;
                r.poly = r.poly * scale;
                return r;
            }
        }
    }
    throw std::invalid_argument("shape mismatch: not a z-prefix times two commutators");
}

std::vector<NCPoly> enumerate_omega_z(const std::vector<Variable>& vars) {
    std::vector<Variable> v = vars;
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw std::invalid_argument("variable set has repeats");
    if (v.size() < 2) throw std::invalid_argument("need at least two variables");
    if (v.front().kind != Variable::Skew)
        throw parity_error("the minimal variable must be skew");
    Variable z1 = v.front();
    std::vector<Variable> rest(v.begin() + 1, v.end());
    std::vector<NCPoly> out;
    for (size_t ki = 0; ki < rest.size(); ++ki) {
        Variable k = rest[ki];
        std::vector<Variable> others;
        for (size_t i = 0; i < rest.size(); ++i)
            if (i != ki) others.push_back(rest[i]);
        std::array<Variable, 2> pair{k, z1};
        NCPoly lastc = commutator(std::span<const Variable>(pair));
        int m = static_cast<int>(others.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            Word prefix;
            std::vector<Variable> mid;
            for (int i = 0; i < m; ++i)
                ((mask >> i) & 1 ? mid : prefix).push_back(others[i]);
            if (mid.size() == 1) continue;
            if (mid.empty()) {
                out.push_back(NCPoly(prefix) * lastc);
                continue;
            }
            for (size_t j = 1; j < mid.size(); ++j) {
                std::vector<Variable> arr{mid[j], mid[0]};
                for (size_t i = 1; i < mid.size(); ++i)
                    if (i != j) arr.push_back(mid[i]);
                out.push_back(NCPoly(prefix) * commutator(std::span<const Variable>(arr)) * lastc);
            }
        }
    }
    return out;
}

std::vector<NCPoly> enumerate_omega_y(const std::vector<Variable>& vars) {
    std::vector<Variable> v = vars;
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw std::invalid_argument("variable set has repeats");
    if (v.size() < 4) throw std::invalid_argument("need at least four variables");
    for (const auto& x : v)
        if (x.kind != Variable::Sym) throw parity_error("all variables must be symmetric");
    Variable y1 = v.front();
    std::vector<Variable> rest(v.begin() + 1, v.end());
    std::vector<NCPoly> out;
    for (size_t ki = 0; ki < rest.size(); ++ki) {
        Variable k = rest[ki];
        std::vector<Variable> mid;
        for (size_t i = 0; i < rest.size(); ++i)
            if (i != ki) mid.push_back(rest[i]);
        std::array<Variable, 2> pair{k, y1};
        NCPoly lastc = commutator(std::span<const Variable>(pair));
        for (size_t j = 1; j < mid.size(); ++j) {
            if (!(k < mid[j])) continue;  // head of the middle must exceed k
            std::vector<Variable> arr{mid[j], mid[0]};
            for (size_t i = 1; i < mid.size(); ++i)
                if (i != j) arr.push_back(mid[i]);
            out.push_back(commutator(std::span<const Variable>(arr)) * lastc);
        }
    }
    return out;
}

std::vector<NCPoly> enumerate_B_basis(const MultilinearSpace& space) {
    const auto& v = space.variables();
    int n = static_cast<int>(v.size());
    std::vector<NCPoly> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Word ys, zs;
        std::vector<Variable> comm_part;
        for (int i = 0; i < n; ++i) {
            if ((mask >> i) & 1)
                comm_part.push_back(v[i]);
            else
                (v[i].kind == Variable::Sym ? ys : zs).push_back(v[i]);
        }
        if (comm_part.size() == 1) continue;
        Word prefix = ys;
        prefix.insert(prefix.end(), zs.begin(), zs.end());
        if (comm_part.empty()) {
            out.push_back(NCPoly(prefix));
            continue;
        }
        for (size_t j = 1; j < comm_part.size(); ++j) {
            std::vector<Variable> arr{comm_part[j], comm_part[0]};
            for (size_t i = 1; i < comm_part.size(); ++i)
                if (i != j) arr.push_back(comm_part[i]);
            out.push_back(NCPoly(prefix) * commutator(std::span<const Variable>(arr)));
        }
    }
    return out;
}

}  // namespace starpi
