#include <CLI11.hpp>

#include <cmath>
#include <iostream>

#include "qsc/format.hpp"
#include "qsc/quantum.hpp"
#include "qsc/quotient.hpp"
#include "qsc/schur.hpp"
#include "qsc/spectrum.hpp"
#include "qsc/verify.hpp"

namespace {

using namespace qsc;

struct CommonArgs {
    int k = 0;
    int n = 0;
    std::string format = "text";
    int xi_exponent = 1;
    int half_exponent = 1;
    double tol = 1e-9;
    double tol_integer = 1e-6;
    unsigned seed = 12345;

    BoxContext ctx() const { return BoxContext(k, n); }
    RootChoice root() const { return RootChoice{xi_exponent, half_exponent}; }
};

void add_box_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--k", args.k, "column bound k of G(k,n)")->required();
    cmd->add_option("--n", args.n, "ambient n of G(k,n)")->required();
}

void add_format_option(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
}

void print_class(const CohClass& a, const std::string& format) {
    if (format == "json")
        std::cout << class_json(a).dump() << "\n";
    else
        std::cout << class_str(a) << "\n";
}

// Exact-string rendering for recognized root-of-unity values.
std::string pretty_real(double v) {
    struct Named {
        double value;
        const char* name;
    };
    static const Named table[] = {{1.0, "1"},
                                  {-1.0, "-1"},
                                  {2.0, "2"},
                                  {-2.0, "-2"},
                                  {std::sqrt(2.0), "√2"},
                                  {-std::sqrt(2.0), "-√2"},
                                  {1.0 / std::sqrt(2.0), "1/√2"},
                                  {-1.0 / std::sqrt(2.0), "-1/√2"},
                                  {0.5, "1/2"},
                                  {-0.5, "-1/2"}};
    for (const auto& e : table)
        if (std::abs(v - e.value) < 1e-9) return e.name;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string pretty_complex(Complex z) {
    const double tol = 1e-9;
    bool re = std::abs(z.real()) > tol, im = std::abs(z.imag()) > tol;
    if (!re && !im) return "0";
    if (re && !im) return pretty_real(z.real());
    std::string izero;
    if (std::abs(z.imag() - 1.0) < tol)
        izero = "i";
    else if (std::abs(z.imag() + 1.0) < tol)
        izero = "-i";
    else
        izero = pretty_real(z.imag()) + "i";
    if (!re) return izero;
    return pretty_real(z.real()) + (z.imag() > 0 ? "+" : "") + izero;
}

int run_spectrum(const CommonArgs& args, bool normalized, bool paper_example) {
    CharacterMatrix cm = character_matrix(args.ctx(), args.root());
    Eigen::MatrixXcd m = normalized ? cm.normalized() : cm.m;
    const int n = cm.basis.size();
    if (args.format == "json") {
        nlohmann::json j;
        j["ctx"] = {{"k", args.k}, {"n", args.n}};
        j["xi_exponent"] = args.xi_exponent;
        j["half_exponent"] = args.half_exponent;
        j["normalized"] = normalized;
        j["order"] = nlohmann::json::array();
        for (const auto& lam : cm.basis.order) j["order"].push_back(lam.parts());
        j["matrix"] = nlohmann::json::array();
        for (int i = 0; i < n; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < n; ++c) row.push_back(complex_json(m(i, c)));
            j["matrix"].push_back(row);
        }
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
    cells[0][0] = "";
    for (int c = 0; c < n; ++c) cells[0][c + 1] = "S" + cm.basis.order[c].str();
    for (int i = 0; i < n; ++i) {
        cells[i + 1][0] = "P" + cm.basis.order[i].str();
        for (int c = 0; c < n; ++c)
            cells[i + 1][c + 1] =
                paper_example ? pretty_complex(m(i, c)) : complex_str(m(i, c), 6);
    }
    std::vector<size_t> width(n + 1, 0);
    for (const auto& row : cells)
        for (int c = 0; c <= n; ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : cells) {
        for (int c = 0; c <= n; ++c) {
            std::cout << row[c];
            if (c < n) std::cout << std::string(width[c] - row[c].size() + 2, ' ');
        }
        std::cout << "\n";
    }
    return 0;
}

int run_verify(const CommonArgs& args, const std::string& suite) {
    VerifyOptions opt;
    opt.tol_identity = args.tol;
    opt.tol_integer = args.tol_integer;
    opt.seed = args.seed;
    BoxContext ctx = args.ctx();
    RootChoice rc = args.root();
    std::vector<CheckResult> results;
    if (suite == "symmetries")
        results = verify_symmetries(ctx, opt);
    else if (suite == "spectrum")
        results = verify_spectrum(ctx, rc, opt);
    else if (suite == "t1")
        results = verify_t1(ctx, rc, opt);
    else if (suite == "f3")
        results = verify_f3(ctx, opt);
    else if (suite == "plr")
        results = verify_plr(6);
    else
        results = verify_all(ctx, rc, opt);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (r.max_dev > 0) std::cout << "  (max dev " << r.max_dev << ")";
        if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
        std::cout << "\n";
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Schubert calculus of Grassmannians at q=1"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string lam_s, mu_s, nu_s, suite;
    bool normalized = false, paper_example = false;

    auto* cprod = app.add_subcommand("cprod", "classical cup product, truncated to the box");
    cprod->add_option("lambda", lam_s)->required();
    cprod->add_option("mu", mu_s)->required();
    add_box_options(cprod, args);
    add_format_option(cprod, args);

    auto* qprodc = app.add_subcommand("qprod", "quantum product at q=1");
    qprodc->add_option("lambda", lam_s)->required();
    qprodc->add_option("mu", mu_s)->required();
    add_box_options(qprodc, args);
    add_format_option(qprodc, args);

    auto* conjc = app.add_subcommand("conj", "complex conjugation of a Schubert class");
    conjc->add_option("lambda", lam_s)->required();
    add_box_options(conjc, args);
    add_format_option(conjc, args);

    auto* dualc = app.add_subcommand("dual", "Poincare dual diagram");
    dualc->add_option("lambda", lam_s)->required();
    add_box_options(dualc, args);
    add_format_option(dualc, args);

    auto* gwc = app.add_subcommand("gw", "three-point invariant of Schubert classes");
    gwc->add_option("lambda", lam_s)->required();
    gwc->add_option("mu", mu_s)->required();
    gwc->add_option("nu", nu_s)->required();
    add_box_options(gwc, args);
    add_format_option(gwc, args);

    auto* plrc = app.add_subcommand("plr-sum", "coefficient-sum identity for one pair");
    plrc->add_option("lambda", lam_s)->required();
    plrc->add_option("mu", mu_s)->required();
    add_format_option(plrc, args);

    auto* spec = app.add_subcommand("spectrum", "character matrix of Spec R");
    add_box_options(spec, args);
    add_format_option(spec, args);
    spec->add_option("--xi-exponent", args.xi_exponent, "exponent of the primitive root");
    spec->add_option("--half-exponent", args.half_exponent, "square root selector");
    spec->add_flag("--normalized", normalized, "divide each column by its P_1 value");
    spec->add_flag("--paper-example", paper_example, "render recognized exact values");

    auto* annpc = app.add_subcommand("annp", "Ann P data and the Theorem 1 comparison");
    add_box_options(annpc, args);
    add_format_option(annpc, args);

    auto* reducec = app.add_subcommand("reduce", "representation mod Ann P in the G_S basis");
    reducec->add_option("lambda", lam_s)->required();
    add_box_options(reducec, args);
    add_format_option(reducec, args);

    auto* psic = app.add_subcommand("psi", "psi image of a G_S class");
    psic->add_option("lambda", lam_s)->required();
    add_box_options(psic, args);
    add_format_option(psic, args);

    auto* posc = app.add_subcommand("positivity-report", "psi positivity over the whole box");
    add_box_options(posc, args);
    add_format_option(posc, args);

    auto* verifyc = app.add_subcommand("verify", "run a verification suite");
    verifyc->add_option("suite", suite, "t1|f3|plr|spectrum|symmetries|all")
        ->required()
        ->check(CLI::IsMember({"t1", "f3", "plr", "spectrum", "symmetries", "all"}));
    add_box_options(verifyc, args);
    verifyc->add_option("--tol", args.tol, "identity tolerance");
    verifyc->add_option("--tol-integer", args.tol_integer, "integer recovery tolerance");
    verifyc->add_option("--seed", args.seed, "seed for random triples");
    verifyc->add_option("--xi-exponent", args.xi_exponent, "exponent of the primitive root");
    verifyc->add_option("--half-exponent", args.half_exponent, "square root selector");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cprod) {
            BoxContext ctx = args.ctx();
            CohClass a = CohClass::schubert(ctx, parse_partition(lam_s));
            CohClass b = CohClass::schubert(ctx, parse_partition(mu_s));
            print_class(cup_product(a, b, ctx), args.format);
        } else if (*qprodc) {
            BoxContext ctx = args.ctx();
            CohClass a = CohClass::schubert(ctx, parse_partition(lam_s));
            CohClass b = CohClass::schubert(ctx, parse_partition(mu_s));
            print_class(qprod(a, b), args.format);
        } else if (*conjc) {
            BoxContext ctx = args.ctx();
            print_class(conj(CohClass::schubert(ctx, parse_partition(lam_s))), args.format);
        } else if (*dualc) {
            BoxContext ctx = args.ctx();
            Partition d = poincare_dual(parse_partition(lam_s), ctx);
            if (args.format == "json")
                std::cout << nlohmann::json(d.parts()).dump() << "\n";
            else
                std::cout << d.str() << "\n";
        } else if (*gwc) {
            BoxContext ctx = args.ctx();
            mpq_class v = gw(CohClass::schubert(ctx, parse_partition(lam_s)),
                             CohClass::schubert(ctx, parse_partition(mu_s)),
                             CohClass::schubert(ctx, parse_partition(nu_s)));
            if (args.format == "json")
                std::cout << nlohmann::json({{"value", rational_str(v)}}).dump() << "\n";
            else
                std::cout << rational_str(v) << "\n";
        } else if (*plrc) {
            Partition lam = parse_partition(lam_s), mu = parse_partition(mu_s);
            mpz_class lhs = lr_sum_lhs(lam, mu), rhs = lr_sum_rhs(lam, mu);
            bool ok = lhs == rhs;
            if (args.format == "json") {
                std::cout << nlohmann::json({{"lhs", lhs.get_str()},
                                             {"rhs", rhs.get_str()},
                                             {"pass", ok}})
                                 .dump()
                          << "\n";
            } else {
                std::cout << "lhs " << lhs.get_str() << "\nrhs " << rhs.get_str() << "\n"
                          << (ok ? "PASS" : "FAIL") << "\n";
            }
            return ok ? 0 : 1;
        } else if (*spec) {
            return run_spectrum(args, normalized, paper_example);
        } else if (*annpc) {
            QuotientData qd = ann_p(args.ctx());
            long expect = binomial(args.ctx().gs_rows() + args.ctx().gs_cols(),
                                   args.ctx().gs_cols());
            bool pass = qd.kernel_equals_ideal && qd.rank == expect;
            if (args.format == "json") {
                std::cout << nlohmann::json({{"kernel_dim", qd.ann_basis.size()},
                                             {"rank", qd.rank},
                                             {"gs_size", expect},
                                             {"kernel_equals_ideal", qd.kernel_equals_ideal},
                                             {"pass", pass}})
                                 .dump()
                          << "\n";
            } else {
                std::cout << "kernel dimension " << qd.ann_basis.size() << "\n"
                          << "rank (dim R_P)   " << qd.rank << "\n"
                          << "|G_S|            " << expect << "\n"
                          << "kernel = ideal({sigma_{k-i} - sigma_i}): "
                          << (qd.kernel_equals_ideal ? "yes" : "no") << "\n"
                          << (pass ? "PASS" : "FAIL") << "\n";
            }
            return pass ? 0 : 1;
        } else if (*reducec) {
            BoxContext ctx = args.ctx();
            QuotientData qd = ann_p(ctx);
            auto combo = reduce_to_gs(qd, CohClass::schubert(ctx, parse_partition(lam_s)));
            CohClass out(ctx);
            for (const auto& [alpha, c] : combo) out.add(alpha, c);
            print_class(out, args.format);
        } else if (*psic) {
            BoxContext ctx = args.ctx();
            QuotientData qd = ann_p(ctx);
            Partition alpha = parse_partition(lam_s);
            std::vector<mpz_class> v = psi(qd, alpha);
            if (args.format == "json") {
                nlohmann::json j;
                j["gs_order"] = nlohmann::json::array();
                for (const auto& g : qd.gs_list) j["gs_order"].push_back(g.parts());
                j["psi"] = nlohmann::json::array();
                for (const auto& c : v) j["psi"].push_back(c.get_str());
                std::cout << j.dump() << "\n";
            } else {
                for (size_t i = 0; i < v.size(); ++i) {
                    if (i) std::cout << "  ";
                    std::cout << v[i].get_str() << " v" << qd.gs_list[i].str();
                }
                std::cout << "\n";
            }
        } else if (*posc) {
            PositivityReport rep = positivity_experiment(args.ctx());
            if (args.format == "json") {
                nlohmann::json rows = nlohmann::json::array();
                for (const auto& row : rep.rows) {
                    nlohmann::json img = nlohmann::json::array();
                    for (const auto& c : row.image) img.push_back(rational_str(c));
                    rows.push_back({{"partition", row.lam.parts()},
                                    {"nonnegative", row.nonnegative},
                                    {"denominator_lcm", row.denom_lcm.get_str()},
                                    {"psi_image", img}});
                }
                std::cout << nlohmann::json({{"ctx", {{"k", args.k}, {"n", args.n}}},
                                             {"all_nonnegative", rep.all_nonnegative},
                                             {"max_denominator", rep.max_denominator.get_str()},
                                             {"rows", rows}})
                                 .dump()
                          << "\n";
            } else {
                for (const auto& row : rep.rows) {
                    std::cout << (row.nonnegative ? "positive " : "NEGATIVE ") << "S"
                              << row.lam.str() << "  ->";
                    for (size_t i = 0; i < row.image.size(); ++i)
                        std::cout << " " << rational_str(row.image[i]);
                    if (row.denom_lcm != 1)
                        std::cout << "  (denominators " << row.denom_lcm.get_str() << ")";
                    std::cout << "\n";
                }
                std::cout << "all nonnegative: " << (rep.all_nonnegative ? "yes" : "no")
                          << "; observed denominator lcm " << rep.max_denominator.get_str()
                          << "\n";
            }
        } else if (*verifyc) {
            return run_verify(args, suite);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "tolerance breach: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
