// Command-line front end: every operation of the library with exact output,
// optional decimal annotation, and machine-readable JSON.

#include "seshadri/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

using namespace seshadri;

namespace {

struct CommonArgs {
    int type_id = 1;
    std::string bundle;  // "a,b"
    std::string format = "human";
    unsigned digits = 2;
};

DivisorClass parse_bundle(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("-L expects integer coordinates \"a,b\"");
    try {
        std::size_t pos_a = 0, pos_b = 0;
        std::string left = text.substr(0, comma), right = text.substr(comma + 1);
        std::int64_t a = std::stoll(left, &pos_a);
        std::int64_t b = std::stoll(right, &pos_b);
        if (pos_a != left.size() || pos_b != right.size())
            throw CLI::ValidationError("-L coordinates must be integers");
        return {a, b};
    } catch (const CLI::ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw CLI::ValidationError("-L expects integer coordinates \"a,b\"");
    }
}

int default_scan_limit() {
    if (const char* env = std::getenv("SESHADRI_SCAN_LIMIT")) {
        try {
            int m = std::stoi(env);
            if (m >= 2) return m;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid SESHADRI_SCAN_LIMIT\n";
    }
    return 200;
}

std::string approx(const ExactValue& v, unsigned digits) {
    std::string s = v.to_string();
    if (!v.is_rational() || denominator(v.as_rational()) != 1)
        s += " ≈ " + v.to_decimal(digits);
    return s;
}

std::string describe(const SeshadriEstimate& e, unsigned digits) {
    switch (e.kind) {
        case EstimateKind::Exact:
            return "= " + rational_to_string(*e.value) + " (Theorem: " + e.branch + ")";
        case EstimateKind::CertifiedRational:
            return "rational (value undetermined), upper bound = " +
                   approx(*e.upper, digits) + " (Theorem: " + e.branch + ")";
        case EstimateKind::BoundedBelow:
            return "lower = " + approx(*e.lower, digits) +
                   ", upper = " + approx(*e.upper, digits) + ", branch: " + e.branch;
        case EstimateKind::UnknownWithBound:
            return "lower = " + approx(*e.lower, digits) +
                   ", upper = " + approx(*e.upper, digits) +
                   " (rationality open), branch: " + e.branch;
    }
    return {};
}

void emit_estimate(const char* operation, const char* label, const SurfaceType& s,
                   const DivisorClass& l, const SeshadriEstimate& e,
                   const CommonArgs& args) {
    if (args.format == "json") {
        Json j;
        j["type"] = s.type_id;
        j["L"] = to_json(l);
        j["operation"] = operation;
        j["estimate"] = to_json(e);
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << label << " " << describe(e, args.digits) << "\n";
}

void run_classify(const CommonArgs& args) {
    const SurfaceType& s = surface_params(args.type_id);
    DivisorClass l = parse_bundle(args.bundle);
    auto [psi, phi] = fibre_classes(s);
    if (args.format == "json") {
        Json j;
        j["surface"] = to_json(s);
        j["L"] = to_json(l);
        j["ample"] = is_ample(l);
        j["L2"] = self_intersection(l);
        j["psi_fibre"] = to_json(psi);
        j["phi_fibre"] = to_json(phi);
        j["L.A"] = intersect(l, psi);
        j["L.B"] = intersect(l, phi);
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "type " << s.type_id << " (" << s.group_name << "): gamma = " << s.gamma
              << ", mu = " << s.mu << ", singular fibre multiplicities [";
    for (std::size_t i = 0; i < s.sing_mults.size(); ++i)
        std::cout << (i ? ", " : "") << s.sing_mults[i];
    std::cout << "]\n";
    std::cout << "L = (" << l.a << ", " << l.b << "): "
              << (is_ample(l) ? "ample" : "not ample")
              << ", L² = " << self_intersection(l) << "\n";
    std::cout << "fibre classes: A = (" << psi.a << ", " << psi.b << "), B = (" << phi.a
              << ", " << phi.b << ")\n";
    std::cout << "L·A = " << intersect(l, psi) << ", L·B = " << intersect(l, phi)
              << "\n";
}

int run_verify(const CommonArgs& args, int a_max, int b_max, int scan_limit) {
    const SurfaceType& s = surface_params(args.type_id);
    auto rows = cross_check_region(s, a_max, b_max, scan_limit);
    std::map<std::pair<std::int64_t, std::int64_t>, bool> cells;
    for (const auto& row : rows) {
        cells.try_emplace({row.l.a, row.l.b}, true);
        if (!row.pass) cells[{row.l.a, row.l.b}] = false;
        if (args.format == "json") {
            std::cout << to_json(row).dump() << "\n";
        } else if (!row.pass) {
            std::cout << "FAIL L=(" << row.l.a << "," << row.l.b << ") " << row.check
                      << " [" << to_string(row.point) << "]: " << row.detail << "\n";
        }
    }
    int passed = 0;
    for (const auto& [cell, ok] : cells) passed += ok;
    std::ostream& summary = args.format == "json" ? std::cerr : std::cout;
    summary << passed << "/" << cells.size() << " PASS\n";
    return passed == static_cast<int>(cells.size()) ? 0 : 1;
}

void run_table(const CommonArgs& args, int a_max, int b_max) {
    const SurfaceType& s = surface_params(args.type_id);
    bool csv = args.format != "json";
    if (csv) std::cout << "a,b,epsilon_min_branch,epsilon_min,epsilon_one_branch,epsilon_one\n";
    auto summary = [](const SeshadriEstimate& e) -> std::string {
        switch (e.kind) {
            case EstimateKind::Exact: return rational_to_string(*e.value);
            case EstimateKind::CertifiedRational: return "rational<=" + e.upper->to_string();
            case EstimateKind::BoundedBelow:
            case EstimateKind::UnknownWithBound:
                return "[" + e.lower->to_string() + ";" + e.upper->to_string() + "]";
        }
        return {};
    };
    for (int a = 1; a <= a_max; ++a)
        for (int b = 1; b <= b_max; ++b) {
            DivisorClass l{a, b};
            auto em = epsilon_min(s, l);
            auto e1 = epsilon_one(s, l);
            if (csv) {
                std::cout << a << "," << b << "," << em.branch << "," << summary(em)
                          << "," << e1.branch << "," << summary(e1) << "\n";
            } else {
                Json j;
                j["a"] = a;
                j["b"] = b;
                j["epsilon_min"] = to_json(em);
                j["epsilon_one"] = to_json(e1);
                std::cout << j.dump() << "\n";
            }
        }
}

void run_pell_d(const Int& d, const CommonArgs& args) {
    PellSolution sol = pell_fundamental(d);
    ExactValue bound = fsst_lower_bound(d);
    ExcSet exc{d, sol.p, sol.q};
    auto count = exc.reduced_fraction_count();
    if (args.format == "json") {
        Json j;
        j["d"] = d.convert_to<std::int64_t>();
        j["p"] = sol.p.str();
        j["q"] = sol.q.str();
        j["pell_bound"] = to_json(bound);
        j["exc_integer_max"] = isqrt(d).convert_to<std::int64_t>();
        if (count) j["exc_reduced_fraction_count"] = count->str();
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "d = " << d << ": fundamental solution (p, q) = (" << sol.p << ", "
              << sol.q << "), q² - d·p² = 1\n";
    std::cout << "lower bound p·d/q = " << approx(bound, args.digits) << "\n";
    std::cout << "Exc(" << d << ";" << sol.p << "," << sol.q << ") = {1,..,"
              << isqrt(d) << "} ∪ {r/s | 1 ≤ r/s < " << sol.p * d << "/"
              << sol.q << ", 2 ≤ s < " << sol.q * sol.q << "}";
    if (count)
        std::cout << ", " << *count << " reduced fractions";
    std::cout << "\n";
}

void run_pell_compare(const CommonArgs& args) {
    const SurfaceType& s = surface_params(args.type_id);
    DivisorClass l = parse_bundle(args.bundle);
    BoundComparison cmp = compare_bounds(s, l);
    if (args.format == "json") {
        Json j;
        j["type"] = s.type_id;
        j["L"] = to_json(l);
        j["L2"] = self_intersection(l);
        j["our_bound"] = to_json(cmp.our_bound);
        j["pell_applicable"] = cmp.pell_applicable;
        if (cmp.pell_applicable) {
            j["p"] = cmp.pell->p.str();
            j["q"] = cmp.pell->q.str();
            j["pell_bound"] = to_json(*cmp.pell_bound);
            j["larger"] = *cmp.which_larger == Ordering::LT   ? "pell"
                          : *cmp.which_larger == Ordering::GT ? "ours"
                                                              : "equal";
            if (cmp.exc_reduced_fraction_count)
                j["exc_reduced_fraction_count"] = cmp.exc_reduced_fraction_count->str();
        }
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "our bound: " << approx(cmp.our_bound, args.digits) << "\n";
    if (!cmp.pell_applicable) {
        std::cout << "L² = " << self_intersection(l)
                  << " is a perfect square; the Pell bound does not apply\n";
        return;
    }
    std::cout << "Pell bound p·d/q = " << approx(*cmp.pell_bound, args.digits)
              << " from (p, q) = (" << cmp.pell->p << ", " << cmp.pell->q << ")\n";
    std::cout << (*cmp.which_larger == Ordering::LT
                      ? "the Pell bound is larger"
                  : *cmp.which_larger == Ordering::GT
                      ? "our bound is larger"
                      : "the bounds coincide");
    if (cmp.exc_reduced_fraction_count)
        std::cout << "; exceptional set carries " << *cmp.exc_reduced_fraction_count
                  << " reduced fractions";
    std::cout << "\n";
}

void run_delta(const std::string& value, const std::string& constraint,
               const CommonArgs& args) {
    Rational delta = parse_rational(value);
    GenusConstraint gc = constraint == "g" ? GenusConstraint::General
                                           : GenusConstraint::VeryGeneral;
    auto feas = delta_feasibility(delta, gc);
    auto sup = max_feasible_delta(gc);
    if (args.format == "json") {
        Json j;
        j["delta"] = rational_to_string(delta);
        j["constraint"] = constraint == "g" ? "general" : "very_general";
        j["feasible"] = feas.feasible;
        Json v = Json::array();
        for (const auto& m : feas.violating_m) v.push_back(m.convert_to<std::int64_t>());
        j["violating_m"] = std::move(v);
        j["sup_delta_squared"] = rational_to_string(sup.sup_delta_squared);
        j["critical_m"] = sup.critical_m.convert_to<std::int64_t>();
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "delta = " << rational_to_string(delta) << ", constraint = "
              << (gc == GenusConstraint::General ? "general" : "very-general") << ": "
              << (feas.feasible ? "feasible" : "infeasible");
    if (!feas.feasible) {
        std::cout << "; violating m = [";
        for (std::size_t i = 0; i < feas.violating_m.size(); ++i)
            std::cout << (i ? ", " : "") << feas.violating_m[i];
        std::cout << "]";
    }
    std::cout << "\n";
    const Rational& s2 = sup.sup_delta_squared;
    ExactValue sup_delta =
        make_surd(Rational(1, denominator(s2)), numerator(s2) * denominator(s2));
    std::cout << "sup delta² = " << rational_to_string(s2) << " at m = "
              << sup.critical_m << " (sup delta ≈ "
              << sup_delta.to_decimal(args.digits + 2) << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Seshadri constants on the seven types of hyperelliptic surfaces"};
    app.require_subcommand(1);

    CommonArgs args;
    int a_max = 10, b_max = 10;
    int scan_limit = default_scan_limit();
    int fibre_mult = 0;
    bool very_general = false, arbitrary = false, do_compare = false;
    std::int64_t pell_d = 0;
    std::string delta_arg, delta_value, constraint = "vg";

    auto add_common = [&](CLI::App* cmd, bool with_bundle) {
        cmd->add_option("--type,-t", args.type_id, "surface type 1..7")
            ->check(CLI::Range(1, 7))
            ->required();
        if (with_bundle)
            cmd->add_option("-L", args.bundle, "bundle coordinates a,b")->required();
        cmd->add_option("--format,-f", args.format, "output format")
            ->check(CLI::IsMember({"human", "json"}));
        cmd->add_option("--digits", args.digits, "decimal digits in approximations");
    };

    CLI::App* classify = app.add_subcommand("classify", "lattice data of a bundle");
    add_common(classify, true);

    CLI::App* epsilon = app.add_subcommand("epsilon", "least Seshadri constant eps(L)");
    add_common(epsilon, true);

    CLI::App* epsilon1 =
        app.add_subcommand("epsilon1", "Seshadri constant at a very general point");
    add_common(epsilon1, true);
    epsilon1->add_option("--delta", delta_arg, "threshold ratio p/q (default 93/100)");

    CLI::App* point = app.add_subcommand("point", "Seshadri constant at a point class");
    add_common(point, true);
    auto* fm = point->add_option("--fibre-mult", fibre_mult,
                                 "point on a Psi-fibre of this multiplicity");
    auto* vg = point->add_flag("--very-general", very_general, "very general point");
    auto* arb = point->add_flag("--arbitrary", arbitrary, "bounds valid at every point");
    fm->excludes(vg)->excludes(arb);
    vg->excludes(arb);

    CLI::App* pell = app.add_subcommand("pell", "Pell machinery and bound comparison");
    pell->add_option("--d", pell_d, "radicand d >= 2, not a square");
    pell->add_option("--type,-t", args.type_id, "surface type 1..7")->check(CLI::Range(1, 7));
    pell->add_option("-L", args.bundle, "bundle coordinates a,b");
    pell->add_flag("--compare", do_compare, "compare our bound with the Pell bound");
    pell->add_option("--format,-f", args.format)->check(CLI::IsMember({"human", "json"}));
    pell->add_option("--digits", args.digits);

    CLI::App* verify = app.add_subcommand("verify", "oracle cross-check over a grid");
    verify->add_option("--type,-t", args.type_id)->check(CLI::Range(1, 7))->required();
    verify->add_option("--amax", a_max, "grid bound for a")->required();
    verify->add_option("--bmax", b_max, "grid bound for b")->required();
    verify->add_option("-M,--scan-limit", scan_limit, "multiplicity scan limit");
    verify->add_option("--format,-f", args.format)->check(CLI::IsMember({"human", "json"}));

    CLI::App* table = app.add_subcommand("table", "branch map of the (a,b) grid");
    table->add_option("--type,-t", args.type_id)->check(CLI::Range(1, 7))->required();
    table->add_option("--amax", a_max)->required();
    table->add_option("--bmax", b_max)->required();
    table->add_option("--format,-f", args.format)->check(CLI::IsMember({"csv", "json"}));

    CLI::App* delta = app.add_subcommand("delta", "threshold feasibility analysis");
    delta->add_option("--value", delta_value, "candidate delta as p/q")->required();
    delta->add_option("--constraint", constraint, "vg (very general) or g (general)")
        ->check(CLI::IsMember({"vg", "g"}));
    delta->add_option("--format,-f", args.format)->check(CLI::IsMember({"human", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*classify) {
            run_classify(args);
        } else if (*epsilon) {
            const SurfaceType& s = surface_params(args.type_id);
            DivisorClass l = parse_bundle(args.bundle);
            emit_estimate("epsilon_min", "\u03b5(L)", s, l, epsilon_min(s, l), args);
        } else if (*epsilon1) {
            const SurfaceType& s = surface_params(args.type_id);
            DivisorClass l = parse_bundle(args.bundle);
            Rational d = delta_arg.empty() ? default_delta() : parse_rational(delta_arg);
            emit_estimate("epsilon_one", "\u03b5(L,1)", s, l, epsilon_one(s, l, d), args);
        } else if (*point) {
            const SurfaceType& s = surface_params(args.type_id);
            DivisorClass l = parse_bundle(args.bundle);
            PointClass pc = PointClass::arbitrary();
            if (very_general) pc = PointClass::very_general();
            if (fm->count()) pc = PointClass::on_singular_fibre(fibre_mult);
            emit_estimate("epsilon_at_point", "\u03b5(L,x)", s, l, epsilon_at_point(s, l, pc), args);
        } else if (*pell) {
            if (do_compare) {
                if (args.bundle.empty())
                    throw CLI::ValidationError("pell --compare needs --type and -L");
                run_pell_compare(args);
            } else {
                if (pell->count("--d") == 0)
                    throw CLI::ValidationError("pell needs --d or --compare");
                run_pell_d(Int(pell_d), args);
            }
        } else if (*verify) {
            return run_verify(args, a_max, b_max, scan_limit);
        } else if (*table) {
            if (args.format == "human") args.format = "csv";
            run_table(args, a_max, b_max);
        } else if (*delta) {
            run_delta(delta_value, constraint, args);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
