// Acceptance suite: every top-level requirement, one PASS/FAIL line each,
// with its tolerance and runtime budget pinned in code.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <vector>

#include "qsc/quantum.hpp"
#include "qsc/quotient.hpp"
#include "qsc/schur.hpp"
#include "qsc/spectrum.hpp"
#include "qsc/verify.hpp"

using namespace qsc;

namespace {

int failures = 0;

struct Criterion {
    const char* label;
    double budget_seconds;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void finish(bool pass, const std::string& detail = "") {
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = secs <= budget_seconds;
        bool ok = pass && in_budget;
        std::printf("%s %s (%.2fs of %.0fs budget)%s%s\n", ok ? "PASS" : "FAIL", label, secs,
                    budget_seconds, detail.empty() ? "" : " -- ", detail.c_str());
        if (!in_budget && pass) std::printf("     budget exceeded\n");
        if (!ok) ++failures;
    }
};

std::vector<BoxContext> all_boxes_up_to(int max_n) {
    std::vector<BoxContext> out;
    for (int n = 2; n <= max_n; ++n)
        for (int k = 1; k < n; ++k) out.emplace_back(k, n);
    return out;
}

void criterion1_paper_table() {
    Criterion c{"criterion 1: G(2,4) value table (xi = i) within 1e-9", 1.0};
    const double s = std::sqrt(2.0);
    const Complex i(0, 1);
    const std::vector<std::vector<Complex>> first = {
        {1, s, 1, 1, s, 1},          {1, 0, i, -i, 0, -1}, {1, s * i, -1, -1, -s * i, 1},
        {1, -s * i, -1, -1, s * i, 1}, {1, 0, -i, i, 0, -1}, {1, -s, 1, 1, -s, 1}};
    const std::vector<std::vector<Complex>> second = {
        {1, 1, 1, 1, 1, 1},   {1, 0, i, -i, 0, -1}, {1, i, -1, -1, -i, 1},
        {1, -i, -1, -1, i, 1}, {1, 0, -i, i, 0, -1}, {1, -1, 1, 1, -1, 1}};
    CharacterMatrix cm = character_matrix(BoxContext(2, 4), RootChoice{1, 1});
    Eigen::MatrixXcd nm = cm.normalized();
    double dev = 0;
    for (int r = 0; r < 6; ++r)
        for (int col = 0; col < 6; ++col) {
            dev = std::max(dev, std::abs(cm.m(r, col) - first[r][col]));
            dev = std::max(dev, std::abs(nm(r, col) - second[r][col]));
        }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "max deviation %.2e", dev);
    c.finish(dev < 1e-9, buf);
}

void criterion2_double_specialization() {
    Criterion c{"criterion 2: double specialization symmetry, all n <= 10, within 1e-9", 30.0};
    double dev = 0;
    for (const auto& ctx : all_boxes_up_to(10))
        dev = std::max(dev, double_specialization_max_dev(character_matrix(ctx)));
    char buf[64];
    std::snprintf(buf, sizeof(buf), "max deviation %.2e over 45 boxes", dev);
    c.finish(dev < 1e-9, buf);
}

void criterion3_plr() {
    Criterion c{"criterion 3: coefficient-sum identity, |lam|,|mu| <= 6, exact", 60.0};
    auto res = verify_plr(6);
    c.finish(res[0].pass, res[0].detail);
}

void criterion4_theorem1() {
    Criterion c{"criterion 4: Ann P = ideal and dim R_P = C(floor(l/2)+floor(k/2), floor(k/2))",
                60.0};
    bool ok = true;
    std::string detail = "dims:";
    for (auto [k, n] :
         {std::pair{1, 2}, std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 6}, std::pair{4, 8}}) {
        BoxContext ctx(k, n);
        QuotientData qd = ann_p(ctx);
        long expect = binomial(ctx.gs_rows() + ctx.gs_cols(), ctx.gs_cols());
        ok = ok && qd.kernel_equals_ideal && qd.rank == expect;
        detail += " " + std::to_string(qd.rank);
    }
    c.finish(ok, detail);
}

void criterion5_worked_reduction() {
    Criterion c{"criterion 5: G(4,8) reduction of S[3,2,1] and its psi image, exact", 60.0};
    BoxContext ctx(4, 8);
    QuotientData qd = ann_p(ctx);
    auto combo = reduce_to_gs(qd, CohClass::schubert(ctx, Partition{3, 2, 1}));
    std::map<Partition, mpq_class> expect{{Partition{2, 2}, 1},
                                          {Partition{2}, 1},
                                          {Partition{1, 1}, 1},
                                          {Partition{}, -2}};
    bool ok = combo == expect;
    // gs order: [], [1], [2], [1,1], [2,1], [2,2]
    std::vector<mpq_class> image = psi_image(qd, combo);
    std::vector<mpq_class> expect_image{1, 3, 2, 2, 1, 1};
    ok = ok && image == expect_image;
    c.finish(ok);
}

void criterion6_g612_coefficient() {
    Criterion c{"criterion 6: G(6,12) coefficient of S[6,6,4,3,2,2] equals 2 by both routes",
                60.0};
    BoxContext ctx(6, 12);
    Partition lam{3, 2, 1}, mu{2, 2, 1};
    CohClass prod = qprod(CohClass::schubert(ctx, conjugate_diagram(lam, ctx)),
                          CohClass::schubert(ctx, mu));
    bool rim = prod.coeff(Partition{6, 6, 4, 3, 2, 2}) == 2;

    F3Report rep = f3_check(lam, mu, ctx);
    int a = -1, b = -1;
    for (size_t i = 0; i < rep.gs_list.size(); ++i) {
        if (rep.gs_list[i] == Partition{2, 2}) a = static_cast<int>(i);
        if (rep.gs_list[i] == Partition{2, 1}) b = static_cast<int>(i);
    }
    bool pairs = a >= 0 && b >= 0 && rep.rhs[a][b] == 2 && rep.pass();
    c.finish(rim && pairs, rim && pairs ? "rim-hook 2, tableau pairs 2" : "");
}

void criterion7_cross_oracle() {
    Criterion c{"criterion 7: rim-hook vs diagonalization on every pair, all n <= 10, 1e-6",
                600.0};
    double dev = 0;
    bool ok = true;
    for (const auto& ctx : all_boxes_up_to(10)) {
        CheckResult r = cross_oracle_check(ctx, RootChoice{}, 1e-6);
        dev = std::max(dev, r.max_dev);
        ok = ok && r.pass;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "max deviation %.2e", dev);
    c.finish(ok, buf);
}

bool prop3_bijection(const BoxContext& ctx) {
    std::set<Partition> diag;
    for (const auto& a : enumerate_gs(ctx)) {
        Partition e = embed(a, a, ctx);
        if (gs_from_invariant(e, ctx) != a) return false;
        diag.insert(e);
    }
    std::set<Partition> invariant;
    for (const auto& lam : enumerate_box(ctx))
        if (lam.degree() % ctx.n == 0 && conjugate_diagram(lam, ctx) == lam)
            invariant.insert(lam);
    return diag == invariant;
}

void criterion8_identity_suites() {
    Criterion c{"criterion 8: identity suites, exhaustive small boxes + 200 triples on G(4,8)",
                120.0};
    VerifyOptions opt;
    bool ok = true;
    std::string first_fail;
    auto run = [&](const BoxContext& ctx) {
        for (const auto& r : verify_all(ctx, RootChoice{}, opt))
            if (!r.pass) {
                ok = false;
                if (first_fail.empty()) first_fail = r.name;
            }
        ok = ok && prop3_bijection(ctx);
    };
    run(BoxContext(2, 4));
    run(BoxContext(2, 5));
    run(BoxContext(3, 6));
    opt.random_triples = 200;
    run(BoxContext(4, 8));
    c.finish(ok, first_fail);
}

void criterion9_positivity() {
    Criterion c{"criterion 9: positivity report (informational; G(4,8) S[3,2,1] row positive)",
                600.0};
    bool ok = true;
    for (auto [k, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 6}, std::pair{4, 8}}) {
        PositivityReport rep = positivity_experiment(BoxContext(k, n));
        std::printf("     G(%d,%d): %zu rows, all nonnegative: %s, denominator lcm %s\n", k, n,
                    rep.rows.size(), rep.all_nonnegative ? "yes" : "no",
                    rep.max_denominator.get_str().c_str());
        if (k == 4 && n == 8) {
            bool row_ok = false;
            for (const auto& row : rep.rows)
                if (row.lam == Partition{3, 2, 1}) row_ok = row.nonnegative;
            ok = ok && row_ok;
        }
    }
    c.finish(ok);
}

}  // namespace

int main() {
    criterion1_paper_table();
    criterion2_double_specialization();
    criterion3_plr();
    criterion4_theorem1();
    criterion5_worked_reduction();
    criterion6_g612_coefficient();
    criterion7_cross_oracle();
    criterion8_identity_suites();
    criterion9_positivity();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
