#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "starpi/normal_form.hpp"
#include "starpi/parallel.hpp"
#include "starpi/parser.hpp"
#include "starpi/selftest.hpp"

using nlohmann::json;
using namespace starpi;

namespace {

std::string read_expr(const std::string& arg) {
    if (!arg.empty() && arg != "-") return arg;
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

json witness_json(const Witness& w) {
    json images = json::object();
    for (const auto& [v, m] : w.assignment.images) {
        json entries = json::array();
        for (const auto& [ij, p] : m.entries())
            entries.push_back({{"row", ij.first}, {"col", ij.second}, {"value", p.str()}});
        images[to_string(v)] = entries;
    }
    return {{"algebra", to_string(w.assignment.algebra)},
            {"position", {w.position.first, w.position.second}},
            {"value", w.value.get_str()},
            {"images", images}};
}

int cmd_check(const std::string& algebra, const std::string& expr_arg) {
    NCPoly p = parse_poly(read_expr(expr_arg));
    AlgebraName alg = algebra_from_string(algebra);
    Verdict v = is_star_identity(p, alg);
    json report{{"verb", "check"},
                {"algebra", to_string(alg)},
                {"polynomial", to_string(p)},
                {"is_identity", v.is_identity}};
    if (v.witness) report["witness"] = witness_json(*v.witness);
    std::cout << report.dump(2) << "\n";
    if (v.is_identity)
        std::cerr << "identity of " << to_string(alg) << "\n";
    else
        std::cerr << "not an identity of " << to_string(alg) << "; witness at ("
                  << v.witness->position.first << "," << v.witness->position.second
                  << ") with value " << v.witness->value.get_str() << "\n";
    return v.is_identity ? 0 : 1;
}

int cmd_reduce(const std::string& expr_arg, int max_degree) {
    NCPoly p = parse_poly(read_expr(expr_arg));
    json report{{"verb", "reduce"}, {"input", to_string(p)}};
    auto vars = p.is_zero() ? std::vector<Variable>{} : p.variables();
    bool canonical_done = false;
    if (!vars.empty() && static_cast<int>(vars.size()) <= max_degree && is_multilinear(p, vars)) {
        try {
            const IdealContext& ctx = ideal_context(vars);
            CanonicalResult r = two_commutator_canonical(p, ctx);
            json terms = json::array();
            for (const auto& t : r.terms) terms.push_back(to_string(t.expand()));
            report["mode"] = "two_commutator_canonical";
            report["terms"] = terms;
            report["output"] = to_string(r.poly);
            report["difference_in_ideal"] = true;
            canonical_done = true;
        } catch (const std::invalid_argument&) {
            // not of the two-commutator shape; fall through
        }
    }
    if (!canonical_done) {
        auto comps = proper_decompose(p);
        json parts = json::array();
        for (const auto& c : comps)
            parts.push_back({{"prefix", to_string(c.sym_prefix)}, {"proper", to_string(c.proper)}});
        report["mode"] = "proper_decompose";
        report["components"] = parts;
    }
    std::cout << report.dump(2) << "\n";
    std::cerr << "reduced via " << report["mode"].get<std::string>() << "\n";
    return 0;
}

int cmd_theorem(int p, int q, int max_degree) {
    MultilinearSpace space = MultilinearSpace::signature(p, q);
    TheoremReport r = verify_main_theorem(space, max_degree);
    json report{{"verb", "theorem"},
                {"sym", p},
                {"skew", q},
                {"dim_ideal", r.dim_ideal},
                {"dim_kernel", r.dim_kernel},
                {"equal", r.equal},
                {"contained", r.contained}};
    std::cout << report.dump(2) << "\n";
    std::cerr << "dim(I cap P_V) = " << r.dim_ideal << ", dim(Id(A,*) cap P_V) = " << r.dim_kernel
              << (r.equal && r.contained ? "  (equal)" : "  (MISMATCH)") << "\n";
    return (r.equal && r.contained) ? 0 : 1;
}

int cmd_dims(const std::string& algebra, int p, int q, int max_degree) {
    AlgebraName alg = algebra_from_string(algebra);
    MultilinearSpace space = MultilinearSpace::signature(p, q);
    int kernel = static_cast<int>(identity_kernel(alg, space, max_degree).size());
    json report{{"verb", "dims"},
                {"algebra", to_string(alg)},
                {"sym", p},
                {"skew", q},
                {"space_dim", space.dimension()},
                {"kernel_dim", kernel}};
    if (alg == AlgebraName::A) report["ideal_dim"] = ideal_dim(space);
    std::cout << report.dump(2) << "\n";
    std::cerr << "P_V dimension " << space.dimension() << ", kernel dimension " << kernel << "\n";
    return 0;
}

int cmd_enumerate(const std::string& which, int p, int q) {
    std::vector<Variable> vars;
    for (int i = 1; i <= q; ++i) vars.push_back(skew(i));
    for (int i = 1; i <= p; ++i) vars.push_back(sym(i));
    std::vector<NCPoly> list;
    if (which == "omega_y")
        list = enumerate_omega_y(vars);
    else if (which == "omega_z")
        list = enumerate_omega_z(vars);
    else if (which == "b_basis")
        list = enumerate_B_basis(MultilinearSpace(vars));
    else
        throw CLI::ValidationError("set must be one of omega_y, omega_z, b_basis");
    json items = json::array();
    for (const auto& e : list) items.push_back(to_string(e));
    json report{{"verb", "enumerate"}, {"set", which}, {"sym", p}, {"skew", q},
                {"count", list.size()}, {"elements", items}};
    std::cout << report.dump(2) << "\n";
    std::cerr << list.size() << " elements\n";
    return 0;
}

int cmd_selftest(bool slow) {
    bool ok = run_acceptance(std::cerr, SelftestOptions{.slow = slow});
    json report{{"verb", "selftest"}, {"slow", slow}, {"pass", ok}};
    std::cout << report.dump(2) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"star-polynomial identity workbench"};
    app.require_subcommand(1);
    int max_degree = kDefaultDegreeBound;
    int jobs = 1;
    app.add_option("--max-degree", max_degree, "degree cap for kernel/ideal computations")
        ->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads (result-invariant)")->capture_default_str();

    std::string algebra = "A", expr, which;
    int p = 0, q = 0;
    bool slow = false;

    auto* check = app.add_subcommand("check", "decide whether EXPR is a *-identity");
    check->add_option("--algebra", algebra, "UT2|UT4|B|A")->capture_default_str();
    check->add_option("expr", expr, "polynomial expression ('-' reads standard input)");

    auto* reduce = app.add_subcommand("reduce", "canonical decomposition of EXPR");
    reduce->add_option("expr", expr, "polynomial expression ('-' reads standard input)");

    auto* theorem = app.add_subcommand("theorem", "compare ideal span and evaluation kernel");
    theorem->add_option("--sym", p, "symmetric variable count")->required();
    theorem->add_option("--skew", q, "skew variable count")->required();

    auto* dims = app.add_subcommand("dims", "kernel and ideal dimensions");
    dims->add_option("--algebra", algebra, "UT2|UT4|B|A")->capture_default_str();
    dims->add_option("--sym", p, "symmetric variable count")->required();
    dims->add_option("--skew", q, "skew variable count")->required();

    auto* enumerate = app.add_subcommand("enumerate", "list omega_y, omega_z or b_basis");
    enumerate->add_option("set", which, "omega_y|omega_z|b_basis")->required();
    enumerate->add_option("--sym", p, "symmetric variable count")->capture_default_str();
    enumerate->add_option("--skew", q, "skew variable count")->capture_default_str();

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->add_flag("--slow", slow, "include the n = 5 suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    set_jobs(jobs);
    try {
        if (check->parsed()) return cmd_check(algebra, expr);
        if (reduce->parsed()) return cmd_reduce(expr, max_degree);
        if (theorem->parsed()) return cmd_theorem(p, q, max_degree);
        if (dims->parsed()) return cmd_dims(algebra, p, q, max_degree);
        if (enumerate->parsed()) return cmd_enumerate(which, p, q);
        if (selftest->parsed()) return cmd_selftest(slow);
    } catch (const parse_error& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
