#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsc/spectrum.hpp"

#include "qsc/quantum.hpp"

using namespace qsc;

namespace {
constexpr double kTol = 1e-9;

bool close(Complex a, Complex b, double tol = kTol) { return std::abs(a - b) < tol; }
}  // namespace

TEST_CASE("root resolution") {
    BoxContext ctx(2, 4);
    ResolvedRoot r = resolve_root(ctx, RootChoice{});
    CHECK(close(r.xi(), Complex(0, 1)));
    CHECK(close(r.omega_pow(1), std::polar(1.0, std::acos(-1.0) / 4)));
    CHECK_THROWS_AS(resolve_root(ctx, RootChoice{2, 1}), std::invalid_argument);
    // The other square root of i.
    ResolvedRoot r2 = resolve_root(ctx, RootChoice{1, 0});
    CHECK(close(r2.omega_pow(1), -std::polar(1.0, std::acos(-1.0) / 4)));
    CHECK(close(r2.xi(), Complex(0, 1)));
}

TEST_CASE("point coordinates in G(2,4)") {
    BoxContext ctx(2, 4);
    SpectrumPoint p0 = point(Partition{}, ctx);
    CHECK(close(p0.coords[0], Complex(std::sqrt(2.0), 0)));
    CHECK(close(p0.coords[1], Complex(1, 0)));

    SpectrumPoint p1 = point(Partition{1}, ctx);
    CHECK(close(p1.coords[0], Complex(0, 0)));
    CHECK(close(p1.coords[1], Complex(0, 1)));

    int sum2 = 0;
    for (int v : point(Partition{2, 1}, ctx).index2) sum2 += v;
    CHECK(sum2 == 2 * 3);  // twice the degree

    CHECK_THROWS_AS(point(Partition{3}, ctx), std::invalid_argument);
}

TEST_CASE("paper value table for G(2,4)") {
    const double s = std::sqrt(2.0);
    const Complex i(0, 1);
    const std::vector<std::vector<Complex>> expect = {
        {1, s, 1, 1, s, 1},          {1, 0, i, -i, 0, -1}, {1, s * i, -1, -1, -s * i, 1},
        {1, -s * i, -1, -1, s * i, 1}, {1, 0, -i, i, 0, -1}, {1, -s, 1, 1, -s, 1}};
    CharacterMatrix cm = character_matrix(BoxContext(2, 4));
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) CHECK(std::abs(cm.m(r, c) - expect[r][c]) < kTol);

    const std::vector<std::vector<Complex>> norm = {
        {1, 1, 1, 1, 1, 1},   {1, 0, i, -i, 0, -1}, {1, i, -1, -1, -i, 1},
        {1, -i, -1, -1, i, 1}, {1, 0, -i, i, 0, -1}, {1, -1, 1, 1, -1, 1}};
    Eigen::MatrixXcd nm = cm.normalized();
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) CHECK(std::abs(nm(r, c) - norm[r][c]) < kTol);
}

TEST_CASE("evaluation") {
    BoxContext ctx(3, 6);
    for (const auto& lam : enumerate_box(ctx)) {
        SpectrumPoint p = point(lam, ctx);
        CHECK(close(evaluate(Partition{}, p), Complex(1, 0)));
        for (int i = 1; i <= ctx.k; ++i)
            CHECK(close(evaluate(Partition::row(i), p), p.coords[i - 1]));
    }
}

TEST_CASE("sigma_k eigenvalues") {
    BoxContext ctx(2, 4);
    CHECK(close(sigma_k_value(Partition{1}, ctx), Complex(0, 1)));
    CHECK(close(sigma_k_value(Partition{}, ctx), Complex(1, 0)));
    CHECK(close(sigma_k_value(Partition{2, 2}, ctx), Complex(1, 0)));
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k < n; ++k) {
            BoxContext c(k, n);
            ResolvedRoot root = resolve_root(c, RootChoice{});
            for (const auto& lam : enumerate_box(c))
                CHECK(close(sigma_k_value(lam, c), root.omega_pow(2L * (lam.degree() % n))));
        }
}

TEST_CASE("double specialization") {
    CHECK(double_specialization_max_dev(character_matrix(BoxContext(2, 4))) < kTol);
    CHECK(double_specialization_max_dev(character_matrix(BoxContext(3, 6))) < kTol);
    // Still symmetric for a different primitive root and the other square root.
    CHECK(double_specialization_max_dev(character_matrix(BoxContext(2, 4), RootChoice{3, 1})) <
          kTol);
    CHECK(double_specialization_max_dev(character_matrix(BoxContext(3, 5), RootChoice{2, 0})) <
          kTol);
}

TEST_CASE("ring relations hold at every point") {
    for (auto [k, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 6}}) {
        BoxContext ctx(k, n);
        for (const auto& lam : enumerate_box(ctx))
            CHECK(ring_relation_residual(point(lam, ctx)) < kTol);
    }
}

TEST_CASE("orbit counts") {
    OrbitReport a = orbit_count_check(BoxContext(2, 4));
    CHECK(a.orbits == 2);
    CHECK(a.r0_dim == 2);
    CHECK(a.match);
    OrbitReport b = orbit_count_check(BoxContext(1, 2));
    CHECK(b.orbits == 1);
    CHECK(b.match);
    OrbitReport c = orbit_count_check(BoxContext(3, 6));
    CHECK(c.orbits == 4);
    CHECK(c.match);
}

TEST_CASE("Xi action on points") {
    BoxContext ctx(2, 4);
    CharacterMatrix cm = character_matrix(ctx);
    for (const auto& p : cm.points) {
        auto same = xi_action_on_coords(p, 0);
        for (int i = 0; i < ctx.k; ++i) CHECK(close(same[i], p.coords[i]));
        CHECK_NOTHROW(match_point(cm, xi_action_on_coords(p, 1)));
        auto cycle = xi_action_on_coords(p, ctx.n);
        for (int i = 0; i < ctx.k; ++i) CHECK(close(cycle[i], p.coords[i]));
    }
    // P_1 shifted once lands on a point whose degree is nonzero mod n.
    int idx = match_point(cm, xi_action_on_coords(cm.points[0], 1));
    CHECK(cm.basis.order[idx].degree() % ctx.n != 0);
}

TEST_CASE("spectral oracle recovers the structure constants") {
    BoxContext ctx(2, 4);
    auto tensor = spectral_structure_constants(ctx);
    BasisIndex basis(ctx);
    for (int lam = 0; lam < basis.size(); ++lam)
        for (int mu = 0; mu < basis.size(); ++mu) {
            CohClass pq = qprod(CohClass::schubert(ctx, basis.order[lam]),
                                CohClass::schubert(ctx, basis.order[mu]));
            for (int nu = 0; nu < basis.size(); ++nu) {
                double expect = pq.coeff(basis.order[nu]).get_d();
                CHECK(std::abs(tensor[lam](nu, mu) - Complex(expect)) < 1e-6);
            }
        }
    // Unit law slice.
    for (int nu = 0; nu < basis.size(); ++nu)
        for (int mu = 0; mu < basis.size(); ++mu)
            CHECK(std::abs(tensor[0](nu, mu) - (nu == mu ? 1.0 : 0.0)) < 1e-6);
}
