#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "evaluator.hpp"
#include "heisenberg.hpp"
#include "homcount.hpp"
#include "moves.hpp"
#include "registry.hpp"

using namespace hd;

namespace {

unsigned long parse_field(const std::string& f) {
    if (f == "Q" || f.empty()) return 0;
    if (f.rfind("Fp:", 0) == 0) {
        unsigned long p = std::stoul(f.substr(3));
        if (p < 2) throw ParseError("--field Fp:<p> needs a prime p >= 2");
        for (unsigned long k = 2; k * k <= p; ++k)
            if (p % k == 0) throw ParseError("--field Fp:<p> needs a prime p");
        return p;
    }
    throw ParseError("--field must be Q or Fp:<p>");
}

int env_budget(const char* var, int fallback) {
    const char* s = std::getenv(var);
    return s ? std::atoi(s) : fallback;
}

std::string field_str(unsigned long mod) {
    return mod ? "Fp:" + std::to_string(mod) : "Q";
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += xs[i];
    }
    return out;
}

struct Opts {
    std::string field = "Q";
    int budget_bead, budget_width;
    std::uint64_t seed = 1;
    int steps = 20;
    bool machine = false;
    Opts()
        : budget_bead(env_budget("HDINV_BUDGET_BEAD", 8)),
          budget_width(env_budget("HDINV_BUDGET_WIDTH", 16)) {}
};

int cmd_hopf_validate(const std::string& spec, const Opts& o) {
    HopfAlgebra H = resolve_algebra(spec, parse_field(o.field));
    AxiomReport rep = validate_hopf(H);
    bool ok = rep.all_pass();
    for (const auto& [name, pass] : rep.items)
        std::cout << name << " " << (pass ? "PASS" : "FAIL") << "\n";
    if (!ok) return 1;
    std::cout << "involutory " << (is_involutory(H) ? "yes" : "no") << "\n";
    std::cout << "unimodular " << (is_unimodular(H) ? "yes" : "no") << "\n";
    std::cout << "counimodular " << (is_counimodular(H) ? "yes" : "no") << "\n";
    IntegralData I = normalize_integrals(H);
    auto vec = [](const Vec& v) {
        std::string s = "[";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
        return s + "]";
    };
    std::cout << "mu_R " << vec(I.mu_R) << "\n";
    std::cout << "mu_L " << vec(I.mu_L) << "\n";
    std::cout << "e_L " << vec(I.e_L) << "\n";
    std::cout << "e_R " << vec(I.e_R) << "\n";
    return 0;
}

int cmd_hopf_identities(const std::string& spec, const Opts& o) {
    HopfAlgebra H = resolve_algebra(spec, parse_field(o.field));
    HContext ctx(H);
    ctx.require_admissible();
    bool ok = true;
    auto line = [&](const std::string& name, bool pass) {
        std::cout << name << " " << (pass ? "PASS" : "FAIL") << "\n";
        ok = ok && pass;
    };
    line("pentagon", check_pentagon(ctx));
    line("zero-two", check_zero_two(ctx));
    for (const auto& [name, pass] : check_mp_identities(ctx)) line(name, pass);
    return ok ? 0 : 1;
}

int cmd_ograph_validate(const std::string& spec) {
    OGraph g = resolve_graph(spec);
    ValidationReport r = validate(g);
    std::cout << "N1 " << (r.n1 ? "PASS" : "FAIL") << "\n";
    std::cout << "N2 " << (r.n2 ? "PASS" : "FAIL") << "\n";
    std::cout << "C1 " << (r.c1 ? "PASS" : "FAIL") << "\n";
    std::cout << "C2 " << (r.c2 ? "PASS" : "FAIL") << "\n";
    std::cout << "C3 " << (r.c3 ? "PASS" : "FAIL") << " (edge classes: " << r.c3_count
              << ", expected " << g.n + 1 << ")\n";
    return r.all() ? 0 : 1;
}

int cmd_invariant(const std::string& gspec, const std::string& aspec, const Opts& o) {
    auto t0 = std::chrono::steady_clock::now();
    OGraph g = resolve_graph(gspec);
    HopfAlgebra H = resolve_algebra(aspec, parse_field(o.field));
    HContext ctx(H);
    InvariantOptions iopts;
    iopts.bead_cap = o.budget_bead;
    iopts.width_budget = o.budget_width;
    InvariantResult res = invariant(ctx, g, iopts);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (o.machine) {
        std::cout << "graph=" << gspec << " algebra=" << H.name
                  << " field=" << field_str(H.mod) << " value=" << res.z.str()
                  << " width=" << res.width << " backends=" << join(res.backends, "+")
                  << " ms=" << ms << "\n";
    } else {
        std::cout << res.z.str() << "\n";
    }
    return 0;
}

int cmd_pi1(const std::string& gspec) {
    OGraph g = resolve_graph(gspec);
    Pi1Presentation P = pi1(g);
    std::cout << "generators " << P.ngens << "\n";
    for (const auto& rel : P.rels) {
        std::cout << "relation";
        for (const auto& [gen, e] : rel)
            std::cout << " x" << gen << (e > 0 ? "" : "^-1");
        std::cout << "\n";
    }
    auto [rank, tors] = abelianization(P);
    std::cout << "H1 rank " << rank << " torsion [";
    for (size_t i = 0; i < tors.size(); ++i) std::cout << (i ? ", " : "") << tors[i];
    std::cout << "]\n";
    return 0;
}

int cmd_homcount(const std::string& gspec, const std::string& group) {
    OGraph g = resolve_graph(gspec);
    GroupTable G = builtin_group(group);
    std::cout << count_homs(pi1(g), G) << "\n";
    return 0;
}

int cmd_check(const std::string& gspec, const std::string& group, const Opts& o) {
    OGraph g = resolve_graph(gspec);
    GroupTable G = builtin_group(group);
    HContext ctx(builtin_algebra("Q" + group, 0));
    InvariantOptions iopts;
    iopts.bead_cap = o.budget_bead;
    iopts.width_budget = o.budget_width;
    Scalar z = invariant(ctx, g, iopts).z;
    std::uint64_t homs = count_homs(pi1(g), G);
    bool pass = z == Scalar(long(homs));
    std::cout << (pass ? "PASS" : "FAIL") << " invariant=" << z.str() << " homcount=" << homs
              << "\n";
    return pass ? 0 : 1;
}

int cmd_fuzz(const std::string& gspec, const std::string& aspec, const Opts& o) {
    OGraph g = resolve_graph(gspec);
    HopfAlgebra H = resolve_algebra(aspec, parse_field(o.field));
    HContext ctx(H);
    InvariantOptions iopts;
    iopts.bead_cap = o.budget_bead;
    iopts.width_budget = o.budget_width;
    auto steps = fuzz(g, o.seed, o.steps);
    Scalar z0;
    bool ok = true;
    for (size_t i = 0; i < steps.size(); ++i) {
        Scalar z = invariant(ctx, steps[i].graph, iopts).z;
        if (i == 0) z0 = z;
        bool same = z == z0;
        ok = ok && same;
        std::cout << "step " << i << " move=" << steps[i].kind
                  << " n=" << steps[i].graph.n << " Z=" << z.str()
                  << (same ? "" : " CHANGED") << "\n";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " (" << steps.size() - 1 << " moves, Z = "
              << z0.str() << ")\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 3-manifold invariants from Hopf algebra structure constants"};
    app.require_subcommand(1);
    Opts o;
    app.add_option("--field", o.field, "base field: Q or Fp:<p>")->capture_default_str();
    app.add_option("--budget-bead", o.budget_bead, "max crossings for the bead backend")
        ->capture_default_str();
    app.add_option("--budget-width", o.budget_width, "max contraction width")
        ->capture_default_str();
    app.add_option("--seed", o.seed, "fuzz RNG seed")->capture_default_str();
    app.add_option("--steps", o.steps, "fuzz walk length")->capture_default_str();
    app.add_flag("--machine", o.machine, "stable key=value output lines");

    std::string arg1, arg2;
    auto* hopf = app.add_subcommand("hopf", "Hopf algebra checks");
    hopf->require_subcommand(1);
    auto* hv = hopf->add_subcommand("validate", "axioms, flags and integrals");
    hv->add_option("algebra", arg1)->required();
    auto* hi = hopf->add_subcommand("identities", "pentagon, 0-2 and the 16 pentagon-family identities");
    hi->add_option("algebra", arg1)->required();
    auto* og = app.add_subcommand("ograph", "o-graph checks");
    og->require_subcommand(1);
    auto* ov = og->add_subcommand("validate", "N1/N2/C1/C2/C3 report");
    ov->add_option("graph", arg1)->required();
    auto* inv = app.add_subcommand("invariant", "evaluate Z(graph; algebra)");
    inv->add_option("graph", arg1)->required();
    inv->add_option("algebra", arg2)->required();
    auto* p1 = app.add_subcommand("pi1", "fundamental group presentation");
    p1->add_option("graph", arg1)->required();
    auto* hc = app.add_subcommand("homcount", "count homomorphisms pi1 -> G");
    hc->add_option("graph", arg1)->required();
    hc->add_option("group", arg2)->required();
    auto* ck = app.add_subcommand("check", "invariant over Q[G] vs homomorphism count");
    ck->add_option("graph", arg1)->required();
    ck->add_option("group", arg2)->required();
    auto* fz = app.add_subcommand("fuzz", "seeded move walk, Z at every step");
    fz->add_option("graph", arg1)->required();
    fz->add_option("algebra", arg2)->required();

    CLI11_PARSE(app, argc, argv);
    try {
        if (hv->parsed()) return cmd_hopf_validate(arg1, o);
        if (hi->parsed()) return cmd_hopf_identities(arg1, o);
        if (ov->parsed()) return cmd_ograph_validate(arg1);
        if (inv->parsed()) return cmd_invariant(arg1, arg2, o);
        if (p1->parsed()) return cmd_pi1(arg1);
        if (hc->parsed()) return cmd_homcount(arg1, arg2);
        if (ck->parsed()) return cmd_check(arg1, arg2, o);
        if (fz->parsed()) return cmd_fuzz(arg1, arg2, o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
