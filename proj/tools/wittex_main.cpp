// Command-line front end: regenerates the classification tables, solves the
// quotient space at explicit weights, runs the degree scans, verifies and
// dualizes interchange records, and checks the derived current algebras.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 at least
// one table row disagrees with the regenerated classification.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "wittex/catalog.hpp"
#include "wittex/error.hpp"
#include "wittex/extension.hpp"
#include "wittex/json_io.hpp"
#include "wittex/solver.hpp"

namespace {

using namespace wittex;
using nlohmann::ordered_json;

// --- tables ------------------------------------------------------------------

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}

void print_tables_md(const TableComparison& tc) {
    std::cout << "| alpha | beta | gamma | degree | class | coordinates | "
                 "status |\n";
    std::cout << "|---|---|---|---|---|---|---|\n";
    for (const RowVerdict& v : tc.rows) {
        std::cout << "| " << v.row.alpha_constraint << " | " << v.row.beta
                  << " | " << v.row.gamma_constraint << " | " << v.row.degree
                  << " | " << v.row.class_polynomial << " | "
                  << v.row.coordinate_system << " | "
                  << (v.matches ? "ok" : "MISMATCH")
                  << (v.variant ? " (alternate statement)" : "") << " |\n";
    }
    if (tc.clean()) {
        std::cout << "\nall rows match the regenerated classification\n";
        return;
    }
    std::cout << "\ndisagreements:\n";
    for (std::size_t i = 0; i < tc.rows.size(); ++i) {
        const RowVerdict& v = tc.rows[i];
        if (v.matches) continue;
        std::cout << "  row " << i + 1 << " (degree " << v.row.degree << ", "
                  << v.row.alpha_constraint
                  << (v.row.beta.empty() ? "" : ", " + v.row.beta)
                  << "): " << v.note << "\n";
        std::cout << "    stated:      " << v.row.class_polynomial << "\n";
        if (!v.regenerated.empty())
            std::cout << "    regenerated: " << v.regenerated << "\n";
    }
}

ordered_json tables_json(const TableComparison& tc) {
    ordered_json out;
    out["table"] = tc.which;
    out["clean"] = tc.clean();
    out["rows"] = ordered_json::array();
    for (const RowVerdict& v : tc.rows) {
        ordered_json r;
        r["alpha"] = v.row.alpha_constraint;
        r["beta"] = v.row.beta;
        r["gamma"] = v.row.gamma_constraint;
        r["degree"] = v.row.degree;
        r["class"] = v.row.class_polynomial;
        r["coordinates"] = v.row.coordinate_system;
        r["variant"] = v.variant;
        r["matches"] = v.matches;
        r["note"] = v.note;
        r["regenerated"] = v.regenerated;
        out["rows"].push_back(std::move(r));
    }
    return out;
}

void print_tables_csv(const TableComparison& tc) {
    std::cout << "alpha,beta,gamma,degree,class,coordinates,variant,matches,"
                 "note,regenerated\n";
    for (const RowVerdict& v : tc.rows) {
        std::cout << csv_quote(v.row.alpha_constraint) << ','
                  << csv_quote(v.row.beta) << ','
                  << csv_quote(v.row.gamma_constraint) << ',' << v.row.degree
                  << ',' << csv_quote(v.row.class_polynomial) << ','
                  << csv_quote(v.row.coordinate_system) << ','
                  << (v.variant ? "true" : "false") << ','
                  << (v.matches ? "true" : "false") << ',' << csv_quote(v.note)
                  << ',' << csv_quote(v.regenerated) << '\n';
    }
}

int run_tables(const std::string& which, const std::string& format) {
    const TableComparison tc = compare_table(which);
    if (format == "md") print_tables_md(tc);
    else if (format == "json") std::cout << tables_json(tc).dump(2) << "\n";
    else print_tables_csv(tc);
    return tc.clean() ? 0 : 3;
}

// --- h1 ----------------------------------------------------------------------

int run_h1(const std::string& alpha, const std::string& beta,
           const std::string& gamma, unsigned degree) {
    const ExtensionParams p(scalar_parse(alpha), scalar_parse(beta),
                            scalar_parse(gamma));
    const H1Report rep = h1_poly(degree, p);
    ordered_json j;
    j["alpha"] = scalar_format(p.alpha);
    j["beta"] = scalar_format(p.beta);
    j["gamma"] = scalar_format(p.gamma);
    j["degree"] = rep.n;
    j["cocycle_space_dim"] = rep.cocycle_space_dim;
    j["coboundary_space_dim"] = rep.coboundary_space_dim;
    j["h1_dim"] = rep.h1_dim;
    j["representatives"] = ordered_json::array();
    for (const Cocycle& c : rep.representatives)
        j["representatives"].push_back(mpoly_format(c.poly));
    std::cout << j.dump(2) << "\n";
    return 0;
}

// --- scan --------------------------------------------------------------------

int run_scan(unsigned max_degree, std::uint64_t seed) {
    std::vector<unsigned> populated_high;
    for (unsigned n = 1; n <= max_degree; ++n) {
        std::cout << "degree " << n << ":\n";
        for (const LineScan& sc : parametric_scan(n, seed)) {
            std::cout << "  line alpha - beta = " << sc.offset
                      << ": generic h1 dim " << sc.generic_h1_dim << "\n";
            for (const MPoly& cls : sc.generic_classes)
                std::cout << "    class: " << mpoly_format(cls) << "\n";
            for (const SpecialPoint& sp : sc.special) {
                std::cout << "    special alpha = " << scalar_format(sp.alpha)
                          << ": h1 dim " << sp.h1_dim << "\n";
                for (const Cocycle& c : sp.representatives)
                    std::cout << "      class: " << mpoly_format(c.poly) << "\n";
            }
            for (const UPoly& f : sc.unresolved)
                std::cout << "    unresolved factor: "
                          << mpoly_format(to_mpoly(f, Var::ALPHA)) << "\n";
            if (n >= 8 && (sc.generic_h1_dim > 0 || !sc.special.empty()))
                populated_high.push_back(n);
        }
    }
    if (max_degree >= 8) {
        if (populated_high.empty()) {
            std::cout << "degrees 8.." << max_degree
                      << ": no nontrivial classes\n";
        } else {
            std::cout << "degrees 8.." << max_degree
                      << ": nontrivial classes found in degrees";
            for (unsigned n : populated_high) std::cout << ' ' << n;
            std::cout << "\n";
        }
    }
    return 0;
}

// --- verify / dualize --------------------------------------------------------

Cocycle load_record(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    ordered_json j = ordered_json::parse(in);
    return cocycle_from_json(j);
}

int run_verify(const std::string& path) {
    const Cocycle c = load_record(path);
    const auto rv = residual_window(c, 6);
    const ModuleWindow mw(c, 12);
    const auto bv = bracket_check(mw, 4);
    if (rv.empty() && bv.empty()) {
        std::cout << "ok: " << render_cocycle(c)
                  << " satisfies the extension identity on the test window "
                     "(residual window 6; bracket check K = 4, radius 12)\n";
        return 0;
    }
    if (!rv.empty()) {
        const ResidualViolation& v = rv.front();
        std::cout << "residual violation at (k, s, m) = (" << v.k << ", " << v.s
                  << ", " << scalar_format(c.params.gamma + Scalar(v.t))
                  << "): " << scalar_format(v.value) << "\n";
    }
    if (!bv.empty()) {
        const BracketViolation& v = bv.front();
        std::cout << "bracket violation at (k, s, m) = (" << v.k << ", " << v.s
                  << ", " << scalar_format(mw.index(v.offset)) << ") on layer "
                  << v.layer << ", component " << v.component << ": "
                  << scalar_format(v.defect) << "\n";
    }
    std::cout << rv.size() + bv.size() << " violations in total\n";
    return 1;
}

int run_dualize(const std::string& path) {
    const Cocycle d = dualize(load_record(path));
    std::cout << cocycle_to_json(d).dump(2) << "\n";
    return 0;
}

// --- check-current-algebra ---------------------------------------------------

int run_current_algebra(bool custom, const std::string& beta,
                        const std::string& mu, bool heisenberg, long K) {
    struct Named {
        std::string name;
        CurrentAlgebra ca;
    };
    std::vector<Named> algebras;
    if (custom) {
        MPoly mp = mpoly_parse(mu);
        if (mp.coeff_of(Var::M, 0) != mp || mp.coeff_of(Var::ALPHA, 0) != mp ||
            mp.coeff_of(Var::BETA, 0) != mp)
            throw ParseError("--mu must be a polynomial in k");
        algebras.push_back({"beta = " + beta + ", mu = " + mu +
                                (heisenberg ? " (Heisenberg)" : " (abelian)"),
                            CurrentAlgebra{scalar_parse(beta),
                                           to_upoly(mp, Var::K), !heisenberg}});
    } else {
        algebras = {
            {"W(2,2): beta = -1, mu = k^3, abelian",
             CurrentAlgebra{Scalar(-1), UPoly::monomial(Scalar(1), 3), true}},
            {"twisted Heisenberg-Virasoro: beta = 0, mu = k^2, Heisenberg",
             CurrentAlgebra{Scalar(0), UPoly::monomial(Scalar(1), 2), false}},
            {"beta = 1, mu = 1, abelian",
             CurrentAlgebra{Scalar(1), UPoly(1), true}},
            {"beta = 1, mu = k, abelian",
             CurrentAlgebra{Scalar(1), UPoly::monomial(Scalar(1), 1), true}},
        };
    }
    bool all_ok = true;
    for (const Named& a : algebras) {
        const auto v = jacobi_check(a.ca, K);
        if (v.empty()) {
            std::cout << a.name << ": Jacobi identity holds on indices [-" << K
                      << ", " << K << "]\n";
        } else {
            all_ok = false;
            const JacobiViolation& f = v.front();
            std::cout << a.name << ": " << v.size()
                      << " Jacobi violations; first on (" << f.x.type
                      << f.x.index << ", " << f.y.type << f.y.index << ", "
                      << f.z.type << f.z.index << ")\n";
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact classification and verification of the structure functions "
        "of length-two extensions of index-graded modules"};
    app.require_subcommand(1);

    std::string which, format = "md";
    CLI::App* tables = app.add_subcommand(
        "tables", "Regenerate a classification table and compare it with the "
                  "stored baseline rows");
    tables->add_option("--which", which, "Which table")
        ->required()
        ->check(CLI::IsMember({"poly-theta", "poly-M", "nonpoly"}));
    tables->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"md", "json", "csv"}));

    std::string alpha, beta, gamma = "0";
    unsigned degree = 1;
    CLI::App* h1 = app.add_subcommand(
        "h1", "Cocycles modulo trivial functions in one polynomial degree at "
              "explicit weights");
    h1->add_option("--alpha", alpha, "Submodule weight")->required();
    h1->add_option("--beta", beta, "Quotient weight")->required();
    h1->add_option("--gamma", gamma, "Common index offset");
    h1->add_option("--degree", degree, "Homogeneous degree")
        ->required()
        ->check(CLI::Range(1u, 14u));

    unsigned max_degree = 8;
    std::uint64_t seed = 0x5eedb015u;
    CLI::App* scan = app.add_subcommand(
        "scan", "Classify polynomial structure functions degree by degree "
                "with the weight symbolic");
    scan->add_option("--max-degree", max_degree, "Highest degree to scan")
        ->required()
        ->check(CLI::Range(1u, 14u));
    scan->add_option("--seed", seed,
                     "Seed for the randomized re-eliminations (the "
                     "classification itself is seed-independent)");

    std::string verify_path;
    CLI::App* verify = app.add_subcommand(
        "verify", "Check a structure-function record against the extension "
                  "identity and the windowed bracket axiom");
    verify->add_option("file", verify_path, "Record to verify")->required();

    std::string dualize_path;
    CLI::App* dual = app.add_subcommand(
        "dualize", "Write the dual record (k, m) -> (k, -m-k) at the "
                   "reflected weights");
    dual->add_option("file", dualize_path, "Record to dualize")->required();

    std::string ca_beta, ca_mu = "0";
    bool heisenberg = false;
    long ca_range = 6;
    CLI::App* cca = app.add_subcommand(
        "check-current-algebra",
        "Verify the Jacobi identity for the derived current algebras");
    CLI::Option* beta_opt =
        cca->add_option("--beta", ca_beta, "Check a custom algebra instead of "
                                           "the shipped constructions");
    cca->add_option("--mu", ca_mu, "Central structure function in k")
        ->needs(beta_opt);
    cca->add_flag("--heisenberg", heisenberg,
                  "Heisenberg bracket on the module layer")
        ->needs(beta_opt);
    cca->add_option("--range", ca_range, "Generator index range")
        ->check(CLI::Range(2L, 12L));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (tables->parsed()) return run_tables(which, format);
        if (h1->parsed()) return run_h1(alpha, beta, gamma, degree);
        if (scan->parsed()) return run_scan(max_degree, seed);
        if (verify->parsed()) return run_verify(verify_path);
        if (dual->parsed()) return run_dualize(dualize_path);
        if (cca->parsed())
            return run_current_algebra(!ca_beta.empty(), ca_beta, ca_mu,
                                       heisenberg, ca_range);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const SerializationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
