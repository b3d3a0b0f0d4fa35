#include "starpi/tideal.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace starpi {

NCPoly jacobi_sum(const NCPoly& f, const std::array<Variable, 3>& triple) {
    auto fv = f.variables();
    for (const auto& v : triple) {
        if (v.kind != Variable::Sym) throw parity_error("Jacobi triple must be symmetric");
        if (std::find(fv.begin(), fv.end(), v) == fv.end())
            throw std::invalid_argument("Jacobi triple variable missing from the polynomial");
    }
    auto [a, b, c] = triple;
    VarAssignment sigma{{a, NCPoly(b)}, {b, NCPoly(c)}, {c, NCPoly(a)}};
    VarAssignment sigma2{{a, NCPoly(c)}, {b, NCPoly(a)}, {c, NCPoly(b)}};
    return f + substitute(f, sigma) + substitute(f, sigma2);
}

namespace {

Variable slot_var(Variable::Kind kind, int pos) { return {kind, pos}; }

NCPoly pair_commutator(Variable a, Variable b) {
    std::array<Variable, 2> vs{a, b};
    return commutator(std::span<const Variable>(vs));
}

std::string pattern_name(const std::vector<Variable::Kind>& kinds) {
    std::string s;
    for (auto k : kinds) s += (k == Variable::Sym ? 'y' : 'z');
    return s;
}

}  // namespace

std::vector<ConcreteGenerator> instantiate_generators() {
    std::vector<ConcreteGenerator> out;
    std::set<NCPoly::TermMap> seen;

    auto push = [&](std::string family, NCPoly poly, std::vector<Variable> slots,
                    std::vector<bool> unit_ok = {}) {
        if (poly.is_zero()) return;
        // dedup up to sign: flip so the leading coefficient is positive
        if (sgn(poly.terms().begin()->second) < 0) poly = -poly;
        if (!seen.insert(poly.terms()).second) return;
        if (unit_ok.empty()) unit_ok.assign(slots.size(), false);
        out.push_back({std::move(family), std::move(poly), std::move(slots), std::move(unit_ok)});
    };

    const Variable::Kind kinds[2] = {Variable::Sym, Variable::Skew};

    // F1: products of three length-2 commutators, letters of every parity
    for (auto k1 : kinds)
        for (auto k2 : kinds)
            for (auto k3 : kinds)
                for (auto k4 : kinds)
                    for (auto k5 : kinds)
                        for (auto k6 : kinds) {
                            std::vector<Variable> slots{slot_var(k1, 1), slot_var(k2, 2),
                                                        slot_var(k3, 3), slot_var(k4, 4),
                                                        slot_var(k5, 5), slot_var(k6, 6)};
                            NCPoly p = pair_commutator(slots[0], slots[1]) *
                                       pair_commutator(slots[2], slots[3]) *
                                       pair_commutator(slots[4], slots[5]);
                            push("F1:" + pattern_name({k1, k2, k3, k4, k5, k6}), std::move(p),
                                 std::move(slots));
                        }

    // F2a: v1 u v2 - (v1 u v2)*;  F2b: v1 v2 u - (v1 v2 u)*
    for (auto k1 : kinds)
        for (auto k2 : kinds)
            for (auto ku : kinds)
                for (auto k3 : kinds)
                    for (auto k4 : kinds) {
                        std::vector<Variable> slots{slot_var(k1, 1), slot_var(k2, 2),
                                                    slot_var(ku, 3), slot_var(k3, 4),
                                                    slot_var(k4, 5)};
                        NCPoly v1 = pair_commutator(slots[0], slots[1]);
                        NCPoly v2 = pair_commutator(slots[3], slots[4]);
                        NCPoly u(slots[2]);
                        NCPoly f2a = v1 * u * v2;
                        f2a -= involute(f2a);
                        std::vector<bool> uok{false, false, ku == Variable::Sym, false, false};
                        push("F2a:" + pattern_name({k1, k2, ku, k3, k4}), std::move(f2a), slots,
                             uok);
                        NCPoly f2b = v1 * v2 * u;
                        f2b -= involute(f2b);
                        push("F2b:" + pattern_name({k1, k2, ku, k3, k4}), std::move(f2b),
                             std::move(slots), std::move(uok));
                    }

    // F3a / F3b: the two Jacobi-sum identities in symmetric variables
    {
        std::vector<Variable> s{sym(1), sym(2), sym(3), sym(4)};
        NCPoly base = pair_commutator(s[0], s[1]) * pair_commutator(s[2], s[3]);
        push("F3a", jacobi_sum(base, {s[0], s[1], s[2]}), s);
    }
    {
        std::vector<Variable> s{sym(1), sym(2), sym(3), sym(4), sym(5)};
        std::array<Variable, 3> inner{s[0], s[1], s[3]};
        NCPoly base = commutator(std::span<const Variable>(inner)) * pair_commutator(s[2], s[4]);
        push("F3b", jacobi_sum(base, {s[0], s[1], s[2]}), s);
    }

    return out;
}

ConsequenceOptions default_consequence_options(int n) {
    return ConsequenceOptions{.increasing_boundary = n >= 6};
}

namespace {

// All orderings of a set of variables, or just the increasing one.
std::vector<Word> block_words(const std::vector<Variable>& block, bool increasing_only) {
    Word w(block.begin(), block.end());
    std::sort(w.begin(), w.end());
    std::vector<Word> out;
    if (increasing_only) return {w};
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace

ConsequenceSet multilinear_consequences(const MultilinearSpace& space,
                                        const ConsequenceOptions& opts) {
    const auto& vars = space.variables();
    int n = static_cast<int>(vars.size());
    ConsequenceSet result{space, {}};
    std::set<QVector> seen;

    for (const auto& gen : instantiate_generators()) {
        int k = static_cast<int>(gen.slots.size());
        int required = 0;
        for (size_t s = 0; s < gen.slots.size(); ++s)
            if (!gen.unit_ok[s]) ++required;
        if (required > n) continue;
        // label each variable of V: 0 = left boundary, 1..k = slot blocks,
        // k+1 = right boundary; a symmetric slot may receive the unit (empty
        // block), a skew slot must be nonempty
        std::vector<int> label(n, 0);
        const int label_count = k + 2;
        while (true) {
            std::vector<std::vector<Variable>> blocks(label_count);
            for (int i = 0; i < n; ++i) blocks[label[i]].push_back(vars[i]);
            bool ok = true;
            for (int s = 1; s <= k && ok; ++s) {
                if (blocks[s].empty() && !gen.unit_ok[s - 1]) ok = false;
                // singleton of mismatched parity symmetrizes to zero
                if (ok && blocks[s].size() == 1 &&
                    blocks[s][0].kind != gen.slots[s - 1].kind)
                    ok = false;
            }
            if (ok) {
                auto left_words = block_words(blocks[0], opts.increasing_boundary);
                auto right_words = block_words(blocks[k + 1], opts.increasing_boundary);
                std::vector<std::vector<Word>> slot_words(k);
                for (int s = 0; s < k; ++s) slot_words[s] = block_words(blocks[s + 1], false);

                std::vector<int> pick(k, 0);
                while (true) {
                    VarAssignment sub;
                    bool zero = false;
                    for (int s = 0; s < k && !zero; ++s) {
                        NCPoly w(slot_words[s][pick[s]]);
                        NCPoly image = (gen.slots[s].kind == Variable::Sym)
                                           ? w + involute(w)
                                           : w - involute(w);
                        if (image.is_zero()) zero = true;
                        sub.emplace(gen.slots[s], std::move(image));
                    }
                    if (!zero) {
                        NCPoly core = substitute(gen.poly, sub);
                        if (!core.is_zero()) {
                            for (const auto& lw : left_words)
                                for (const auto& rw : right_words) {
                                    NCPoly full = NCPoly(lw) * core * NCPoly(rw);
                                    QVector coords = space.coordinates(full);
                                    int lead = -1;
                                    for (int i = 0; i < (int)coords.size(); ++i)
                                        if (!is_zero(coords[i])) { lead = i; break; }
                                    if (lead < 0) continue;
                                    Rational scale = coords[lead];
                                    for (auto& c : coords) c /= scale;
                                    if (seen.insert(coords).second) {
                                        std::ostringstream prov;
                                        prov << gen.family << " L=" << to_string(lw)
                                             << " R=" << to_string(rw);
                                        result.vectors.push_back({coords, prov.str()});
                                    }
                                }
                        }
                    }
                    int s = 0;
                    for (; s < k; ++s) {
                        if (++pick[s] < (int)slot_words[s].size()) break;
                        pick[s] = 0;
                    }
                    if (s == k) break;
                }
            }
            int i = 0;
            for (; i < n; ++i) {
                if (++label[i] < label_count) break;
                label[i] = 0;
            }
            if (i == n) break;
        }
    }
    return result;
}

ConsequenceSet multilinear_consequences(const MultilinearSpace& space) {
    return multilinear_consequences(
        space, default_consequence_options(static_cast<int>(space.variables().size())));
}

IdealContext::IdealContext(const MultilinearSpace& space, const ConsequenceOptions& opts)
    : set_(multilinear_consequences(space, opts)) {
    for (const auto& v : set_.vectors) span_.add_row(v.coords);
}

IdealContext::IdealContext(const MultilinearSpace& space)
    : IdealContext(space,
                   default_consequence_options(static_cast<int>(space.variables().size()))) {}

bool IdealContext::contains(const NCPoly& p) const {
    if (p.is_zero()) return true;
    return contains(set_.space.coordinates(p));
}

const IdealContext& ideal_context(const std::vector<Variable>& vars) {
    static std::map<std::vector<Variable>, std::unique_ptr<IdealContext>> cache;
    static std::mutex mutex;
    std::vector<Variable> key = vars;
    std::sort(key.begin(), key.end());
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<IdealContext>(MultilinearSpace(key))).first;
    return *it->second;
}

int ideal_dim(const MultilinearSpace& space) {
    return ideal_context(space.variables()).dim();
}

bool ideal_contains(const MultilinearSpace& space, const NCPoly& p) {
    return ideal_context(space.variables()).contains(p);
}

TheoremReport verify_main_theorem(const MultilinearSpace& space, int degree_bound) {
    if (static_cast<int>(space.variables().size()) > degree_bound)
        throw std::invalid_argument("degree bound exceeded (--max-degree)");
    const IdealContext& ctx = ideal_context(space.variables());
    auto kernel = identity_kernel(AlgebraName::A, space, degree_bound);
    EchelonSpan kernel_span;
    for (const auto& v : kernel) kernel_span.add_row(v);
    bool contained = true;
    for (const auto& cv : ctx.consequences().vectors)
        if (!kernel_span.contains(cv.coords)) {
            contained = false;
            break;
        }
    TheoremReport r;
    r.dim_ideal = ctx.dim();
    r.dim_kernel = static_cast<int>(kernel.size());
    r.equal = (r.dim_ideal == r.dim_kernel);
    r.contained = contained;
    return r;
}

}  // namespace starpi
