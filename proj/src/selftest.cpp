#include "starpi/selftest.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "starpi/normal_form.hpp"
#include "starpi/parallel.hpp"
#include "starpi/parser.hpp"

namespace starpi {

namespace {

UTMat mat_comm(const UTMat& a, const UTMat& b) { return a * b - b * a; }

UTMat mat_comm_chain(const std::vector<UTMat>& ms) {
    UTMat r = ms.at(0);
    for (size_t i = 1; i < ms.size(); ++i) r = mat_comm(r, ms[i]);
    return r;
}

UTMat scale_poly(const UTMat& m, const ScalarPoly& s) {
    UTMat r(m.algebra());
    for (const auto& [ij, p] : m.entries()) r.set_entry(ij.first, ij.second, p * s);
    return r;
}

std::vector<std::pair<int, int>> signatures(int n) {
    std::vector<std::pair<int, int>> out;
    for (int p = n; p >= 0; --p) out.emplace_back(p, n - p);
    return out;
}

// ---- criterion 1: every instantiated generator vanishes on A ----
bool generators_vanish(std::ostream& log) {
    for (const auto& gen : instantiate_generators()) {
        Verdict v = is_star_identity(gen.poly, AlgebraName::A);
        if (!v.is_identity) {
            log << "    generator " << gen.family << " is not an identity of A\n";
            return false;
        }
    }
    return true;
}

// ---- criterion 2: consequence vectors vanish on A for n <= 4 ----
bool consequences_vanish(std::ostream& log) {
    for (int n = 2; n <= 4; ++n)
        for (auto [p, q] : signatures(n)) {
            MultilinearSpace space = MultilinearSpace::signature(p, q);
            SparseMatrixQ mat = evaluation_matrix(AlgebraName::A, space);
            auto set = multilinear_consequences(space);
            for (const auto& cv : set.vectors) {
                QVector image = mat.multiply(cv.coords);
                for (const auto& x : image)
                    if (!is_zero(x)) {
                        log << "    consequence " << cv.provenance << " at (" << p << "," << q
                            << ") does not vanish on A\n";
                        return false;
                    }
            }
        }
    return true;
}

// ---- criterion 3: dim(I cap P_V) = dim(Id(A,*) cap P_V) ----
bool theorem_at_scale(std::ostream& log, bool slow) {
    std::vector<int> degrees{3, 4};
    if (slow) degrees.push_back(5);
    for (int n : degrees)
        for (auto [p, q] : signatures(n)) {
            MultilinearSpace space = MultilinearSpace::signature(p, q);
            TheoremReport r = verify_main_theorem(space);
            if (!r.equal || !r.contained) {
                log << "    signature (" << p << "," << q << "): dim_ideal=" << r.dim_ideal
                    << " dim_kernel=" << r.dim_kernel << " contained=" << r.contained << "\n";
                return false;
            }
        }
    return true;
}

// ---- criterion 4: UT4 witness vs identity of A ----
bool ut4_witness(std::ostream& log) {
    NCPoly p = parse_poly("[y1,z1][y2,z2][y3,z3]");
    Verdict ut4 = is_star_identity(p, AlgebraName::UT4);
    if (ut4.is_identity || !ut4.witness) {
        log << "    expected a UT4 counterexample\n";
        return false;
    }
    const Witness& w = *ut4.witness;
    UTMat value = evaluate(p, w.assignment);
    if (value.entry(w.position.first, w.position.second).constant_value() != w.value ||
        is_zero(w.value)) {
        log << "    witness does not re-evaluate to its claimed value\n";
        return false;
    }
    if (!is_star_identity(p, AlgebraName::A).is_identity) {
        log << "    the polynomial should be an identity of A\n";
        return false;
    }
    return true;
}

// ---- criterion 5: independence ranks of the omega sets ----
bool omega_ranks(std::ostream& log) {
    auto check = [&](const std::vector<NCPoly>& list, int expect_size, const char* what) {
        if (expect_size >= 0 && static_cast<int>(list.size()) != expect_size) {
            log << "    " << what << ": size " << list.size() << ", expected " << expect_size
                << "\n";
            return false;
        }
        int rank = independence_rank(list, AlgebraName::A);
        if (rank != static_cast<int>(list.size())) {
            log << "    " << what << ": rank " << rank << " < size " << list.size() << "\n";
            return false;
        }
        return true;
    };
    std::vector<Variable> y4{sym(1), sym(2), sym(3), sym(4)};
    std::vector<Variable> y5{sym(1), sym(2), sym(3), sym(4), sym(5)};
    std::vector<Variable> z4{skew(1), sym(1), sym(2), sym(3)};
    std::vector<Variable> z5{skew(1), sym(1), sym(2), sym(3), sym(4)};
    return check(enumerate_omega_y(y4), 2, "omega_y n=4") &&
           check(enumerate_omega_y(y5), -1, "omega_y n=5") &&
           check(enumerate_omega_z(z4), -1, "omega_z n=4") &&
           check(enumerate_omega_z(z5), -1, "omega_z n=5");
}

// ---- criterion 6: matrix fixture lemmas on generic entries ----
bool fixture_lemmas(std::ostream& log) {
    UTMat yc = special_element(SpecialElement::Ycorner, AlgebraName::A);
    for (int n = 3; n <= 5; ++n) {
        std::vector<UTMat> blocks, embedded;
        for (int i = 1; i <= n; ++i) {
            blocks.push_back(generic_element(AlgebraName::UT2, Parity::Any, "a" + std::to_string(i)));
            embedded.push_back(embed_block_diag(blocks.back(), AlgebraName::A, true));
        }
        // [Y, Y3, ..., Yn][Y2, Y1] puts -[A2,A1,A3,...,An] in the corner
        std::vector<UTMat> chain{yc};
        for (int i = 3; i <= n; ++i) chain.push_back(embedded[i - 1]);
        UTMat lhs = mat_comm_chain(chain) * mat_comm(embedded[1], embedded[0]);
        std::vector<UTMat> inner{blocks[1], blocks[0]};
        for (int i = 3; i <= n; ++i) inner.push_back(blocks[i - 1]);
        UTMat c = mat_comm_chain(inner);
        UTMat rhs = ut_zero(AlgebraName::A);
        for (const auto& [ij, e] : c.entries())
            rhs.set_entry(ij.first, ij.second + 2, -e);
        if (!(lhs == rhs)) {
            log << "    corner lemma item 1 fails at n=" << n << "\n";
            return false;
        }
        if (n >= 4) {
            // [Y3, ..., Yn, Y][Y2, Y1] = 0
            std::vector<UTMat> chain2;
            for (int i = 3; i <= n; ++i) chain2.push_back(embedded[i - 1]);
            chain2.push_back(yc);
            UTMat z = mat_comm_chain(chain2) * mat_comm(embedded[1], embedded[0]);
            if (!z.is_zero()) {
                log << "    corner lemma item 2 fails at n=" << n << "\n";
                return false;
            }
        }
    }
    // [Y3,...,Yn,W][Y2,Y1] = [Y3,...,Yn][Y2,Y1] for arbitrary elements of A
    UTMat w = special_element(SpecialElement::Wdiag, AlgebraName::A);
    for (int n = 4; n <= 5; ++n) {
        std::vector<UTMat> ys;
        for (int i = 1; i <= n; ++i)
            ys.push_back(generic_element(AlgebraName::A, Parity::Any, "g" + std::to_string(i)));
        std::vector<UTMat> chain(ys.begin() + 2, ys.end());
        UTMat base = mat_comm_chain(chain);
        chain.push_back(w);
        UTMat with_w = mat_comm_chain(chain);
        UTMat tail = mat_comm(ys[1], ys[0]);
        if (!(with_w * tail == base * tail)) {
            log << "    W-lemma fails at n=" << n << "\n";
            return false;
        }
    }
    // corner absorption Q1 Y Q2 = alpha Q1 Q2, alpha the (2,2) entry of Y
    {
        UTMat y = generic_element(AlgebraName::A, Parity::Sym, "w");
        auto corner_form = [&](const std::string& tag) {
            UTMat q(spec(AlgebraName::A));
            q.set_entry(1, 2, ScalarPoly(Indeterminate{tag, 12}));
            q.set_entry(3, 4, ScalarPoly(Indeterminate{tag, 34}));
            q.set_entry(1, 3, ScalarPoly(Indeterminate{tag, 13}));
            q.set_entry(1, 4, ScalarPoly(Indeterminate{tag, 14}));
            q.set_entry(2, 4, ScalarPoly(Indeterminate{tag, 24}));
            return q;
        };
        UTMat q1 = corner_form("q1"), q2 = corner_form("q2");
        if (!(q1 * y * q2 == scale_poly(q1 * q2, y.entry(2, 2)))) {
            log << "    corner absorption fails\n";
            return false;
        }
    }
    return true;
}

// ---- criterion 7: B-basis + kernel(B) spans P_V ----
bool b_basis_shadow(std::ostream& log) {
    for (int n = 1; n <= 4; ++n)
        for (auto [p, q] : signatures(n)) {
            MultilinearSpace space = MultilinearSpace::signature(p, q);
            auto list = enumerate_B_basis(space);
            int rank = independence_rank(list, AlgebraName::B);
            if (rank != static_cast<int>(list.size())) {
                log << "    B-basis dependent at (" << p << "," << q << "): rank " << rank
                    << " of " << list.size() << "\n";
                return false;
            }
            EchelonSpan span;
            for (const auto& e : list) span.add_row(space.coordinates(e));
            for (const auto& k : identity_kernel(AlgebraName::B, space)) span.add_row(k);
            if (span.rank() != space.dimension()) {
                log << "    B-basis + kernel does not span P_V at (" << p << "," << q << "): "
                    << span.rank() << " of " << space.dimension() << "\n";
                return false;
            }
        }
    return true;
}

Variable random_variable(std::mt19937& rng, int max_index) {
    std::uniform_int_distribution<int> kind(0, 1), idx(1, max_index);
    return {kind(rng) ? Variable::Sym : Variable::Skew, idx(rng)};
}

NCPoly random_poly(std::mt19937& rng, int max_words, int max_len) {
    std::uniform_int_distribution<int> words(1, max_words), len(0, max_len), coeff(-3, 3);
    NCPoly p;
    int w = words(rng);
    for (int i = 0; i < w; ++i) {
        Word word;
        int l = len(rng);
        for (int j = 0; j < l; ++j) word.push_back(random_variable(rng, 3));
        p.add_term(word, Rational(coeff(rng)));
    }
    return p;
}

bool ordered_pattern_ok(const std::vector<Variable>& seq) {
    if (seq.size() < 2) return false;
    if (!(seq[1] < seq[0])) return false;
    for (size_t i = 2; i < seq.size(); ++i)
        if (seq[i] < seq[i - 1]) return false;
    return true;
}

// ---- criterion 8: rewriting round-trips ----
bool rewriting_roundtrips(std::ostream& log, bool slow) {
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<int> len(2, 6);
    for (int i = 0; i < 500; ++i) {
        std::vector<Variable> seq;
        int l = len(rng);
        for (int j = 0; j < l; ++j) seq.push_back(random_variable(rng, 3));
        auto od = order_commutator(std::span<const Variable>(seq));
        if (!(od.expand() == commutator(std::span<const Variable>(seq)))) {
            log << "    order_commutator expansion mismatch on " << to_string(Word(seq)) << "\n";
            return false;
        }
        for (const auto& [c, s] : od.ordered)
            if (!ordered_pattern_ok(s)) {
                log << "    order_commutator produced an unordered term\n";
                return false;
            }
    }
    for (int i = 0; i < 500; ++i) {
        NCPoly p = random_poly(rng, 4, 6);
        if (!(expand(proper_decompose(p)) == p)) {
            log << "    proper_decompose expansion mismatch on " << to_string(p) << "\n";
            return false;
        }
    }

    // shape-conforming two-commutator inputs
    auto random_input = [&](const std::vector<Variable>& vars, int delta, int a) {
        std::vector<Variable> pool = vars;
        // prefix letters must be skew: rotate a skew variable to the front
        for (int d = 0; d < delta; ++d) {
            for (size_t j = d; j < pool.size(); ++j)
                if (pool[j].kind == Variable::Skew) {
                    std::swap(pool[d], pool[j]);
                    break;
                }
        }
        std::shuffle(pool.begin() + delta, pool.end(), rng);
        TwoCommInput in;
        in.z_prefix = Word(pool.begin(), pool.begin() + delta);
        in.first = {pool.begin() + delta, pool.begin() + delta + a};
        in.second = {pool.begin() + delta + a, pool.end()};
        return in;
    };
    struct Case {
        std::vector<Variable> vars;
        int delta, a;
    };
    std::vector<Case> cases{
        {{sym(1), sym(2), sym(3), sym(4)}, 0, 2},
        {{skew(1), sym(1), sym(2), sym(3)}, 0, 2},
        {{skew(1), skew(2), sym(1), sym(2)}, 0, 2},
    };
    if (slow) {
        cases.push_back({{sym(1), sym(2), sym(3), sym(4), sym(5)}, 0, 2});
        cases.push_back({{sym(1), sym(2), sym(3), sym(4), sym(5)}, 0, 3});
        cases.push_back({{skew(1), sym(1), sym(2), sym(3), sym(4)}, 1, 2});
        cases.push_back({{skew(1), sym(1), sym(2), sym(3), sym(4)}, 0, 3});
    }
    std::uniform_int_distribution<size_t> pick(0, cases.size() - 1);
    for (int i = 0; i < 100; ++i) {
        const Case& c = cases[pick(rng)];
        TwoCommInput in = random_input(c.vars, c.delta, c.a);
        const IdealContext& ctx = ideal_context(in.variables());
        bool all_sym = std::all_of(c.vars.begin(), c.vars.end(),
                                   [](const Variable& v) { return v.kind == Variable::Sym; });
        try {
            CanonicalResult r = two_commutator_canonical(in, ctx);
            if (!ctx.contains(in.expand() - r.poly)) {
                log << "    canonical output differs from input outside I\n";
                return false;
            }
            for (const auto& t : r.terms)
                if (!matches_canonical_shape(t, all_sym)) {
                    log << "    canonical term out of shape: " << to_string(t.expand()) << "\n";
                    return false;
                }
        } catch (const std::exception& e) {
            log << "    two_commutator_canonical failed on " << to_string(in.expand()) << ": "
                << e.what() << "\n";
            return false;
        }
    }
    return true;
}

// ---- criterion 9: randomized algebra laws + determinism under --jobs ----
bool algebra_laws(std::ostream& log) {
    std::mt19937 rng(77);
    const AlgebraName algebras[4] = {AlgebraName::UT2, AlgebraName::UT4, AlgebraName::B,
                                     AlgebraName::A};
    int checks = 0;
    for (int i = 0; i < 240; ++i) {
        NCPoly p = random_poly(rng, 3, 4), q = random_poly(rng, 3, 4);
        if (!(involute(involute(p)) == p)) {
            log << "    involution is not an involution\n";
            return false;
        }
        ++checks;
        if (!(involute(p * q) == involute(q) * involute(p))) {
            log << "    involution is not an anti-automorphism\n";
            return false;
        }
        ++checks;
        NCPoly a = random_poly(rng, 2, 3), b = random_poly(rng, 2, 3), c = random_poly(rng, 2, 3);
        NCPoly jac = commutator({commutator({a, b}), c}) + commutator({commutator({b, c}), a}) +
                     commutator({commutator({c, a}), b});
        if (!jac.is_zero()) {
            log << "    Jacobi identity fails\n";
            return false;
        }
        ++checks;
    }
    for (int i = 0; i < 140; ++i) {
        AlgebraName alg = algebras[i % 4];
        NCPoly p = random_poly(rng, 2, 3), q = random_poly(rng, 2, 3);
        std::vector<Variable> vars;
        for (const auto& v : (p + q).variables()) vars.push_back(v);
        for (const auto& v : (p * q).variables()) vars.push_back(v);
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        if (vars.empty()) vars.push_back(sym(1));
        Assignment asg = generic_assignment(vars, alg);
        if (!(evaluate(p * q, asg) == evaluate(p, asg) * evaluate(q, asg)) ||
            !(evaluate(p + q, asg) == evaluate(p, asg) + evaluate(q, asg))) {
            log << "    evaluation is not a homomorphism\n";
            return false;
        }
        ++checks;
        if (!(evaluate(involute(p), asg) == mat_star(evaluate(p, asg)))) {
            log << "    evaluation does not intertwine the involutions\n";
            return false;
        }
        ++checks;
    }
    // determinism under --jobs
    MultilinearSpace space = MultilinearSpace::signature(2, 1);
    set_jobs(1);
    auto k1 = identity_kernel(AlgebraName::A, space);
    set_jobs(3);
    auto k3 = identity_kernel(AlgebraName::A, space);
    set_jobs(1);
    if (!(k1 == k3)) {
        log << "    kernel depends on the worker count\n";
        return false;
    }
    ++checks;
    if (checks < 1000) {
        log << "    only " << checks << " law checks ran\n";
        return false;
    }
    return true;
}

}  // namespace

bool run_acceptance(std::ostream& out, const SelftestOptions& opts) {
    struct Criterion {
        const char* name;
        std::function<bool(std::ostream&)> run;
    };
    const bool slow = opts.slow;
    std::vector<Criterion> criteria{
        {"1 generator soundness: all instantiated generators vanish on A",
         [](std::ostream& l) { return generators_vanish(l); }},
        {"2 consequence soundness: multilinear consequences vanish on A (n <= 4)",
         [](std::ostream& l) { return consequences_vanish(l); }},
        {"3 main theorem: ideal span dimension equals evaluation kernel dimension",
         [slow](std::ostream& l) { return theorem_at_scale(l, slow); }},
        {"4 non-identity witness on UT4, identity on A",
         [](std::ostream& l) { return ut4_witness(l); }},
        {"5 independence ranks of the omega enumerations",
         [](std::ostream& l) { return omega_ranks(l); }},
        {"6 matrix fixture lemmas on generic entries",
         [](std::ostream& l) { return fixture_lemmas(l); }},
        {"7 B-basis independent and, with kernel(B), spanning (n <= 4)",
         [](std::ostream& l) { return b_basis_shadow(l); }},
        {"8 rewriting round-trips and canonical forms",
         [slow](std::ostream& l) { return rewriting_roundtrips(l, slow); }},
        {"9 randomized algebra laws and worker-count determinism",
         [](std::ostream& l) { return algebra_laws(l); }},
    };
    bool all_ok = true;
    for (const auto& c : criteria) {
        std::ostringstream detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail << "    exception: " << e.what() << "\n";
        }
        out << (ok ? "pass" : "FAIL") << "  criterion " << c.name << "\n" << detail.str();
        out.flush();
        all_ok = all_ok && ok;
    }
    out << (all_ok ? "acceptance: all criteria pass" : "acceptance: FAILURES above") << "\n";
    return all_ok;
}

}  // namespace starpi
