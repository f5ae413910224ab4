#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsc/partition.hpp"

#include <set>

using namespace qsc;

TEST_CASE("partition normal form and validation") {
    CHECK(Partition{3, 2, 1}.degree() == 6);
    CHECK(Partition({2, 1, 0, 0}) == Partition{2, 1});
    CHECK(Partition{}.empty());
    CHECK(Partition{}.degree() == 0);
    CHECK(Partition{2, 2}.at(1) == 2);
    CHECK(Partition{2, 2}.at(3) == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
    CHECK(Partition::row(0) == Partition{});
    CHECK(Partition::row(3) == Partition{3});
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{4, 2, 1}.str() == "[4,2,1]");
    CHECK(Partition{}.str() == "[]");
}

TEST_CASE("box membership") {
    BoxContext ctx(2, 4);
    CHECK(fits_box(Partition{2, 1}, ctx));
    CHECK_FALSE(fits_box(Partition{3}, ctx));
    CHECK(fits_box(Partition{2, 2}, ctx));
    CHECK_FALSE(fits_box(Partition{1, 1, 1}, ctx));
    CHECK_THROWS_AS(BoxContext(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(BoxContext(0, 3), std::invalid_argument);
}

TEST_CASE("canonical box enumeration") {
    BoxContext ctx(2, 4);
    std::vector<Partition> expect = {Partition{},     Partition{1},    Partition{2},
                                     Partition{1, 1}, Partition{2, 1}, Partition{2, 2}};
    CHECK(enumerate_box(ctx) == expect);
    CHECK(enumerate_box(BoxContext(1, 2)) == std::vector<Partition>{Partition{}, Partition{1}});
    CHECK(enumerate_box(BoxContext(3, 6)).size() == 20);
    for (int n = 2; n <= 9; ++n)
        for (int k = 1; k < n; ++k)
            CHECK((long long)enumerate_box(BoxContext(k, n)).size() == binomial(n, k));
}

TEST_CASE("durfee square") {
    CHECK(durfee(Partition{2, 1}) == 1);
    CHECK(durfee(Partition{}) == 0);
    CHECK(durfee(Partition{3, 3, 2}) == 2);
    CHECK(durfee(Partition{3, 3, 3}) == 3);
    CHECK(durfee(Partition{1, 1, 1, 1}) == 1);
}

TEST_CASE("poincare duality") {
    BoxContext ctx(2, 4);
    CHECK(poincare_dual(Partition{}, ctx) == Partition{2, 2});
    CHECK(poincare_dual(Partition{1, 1}, ctx) == Partition{1, 1});
    CHECK(poincare_dual(Partition{2, 1}, ctx) == Partition{1});
    CHECK_THROWS_AS(poincare_dual(Partition{3}, ctx), std::invalid_argument);

    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k < n; ++k) {
            BoxContext c(k, n);
            for (const auto& lam : enumerate_box(c)) {
                Partition d = poincare_dual(lam, c);
                CHECK(poincare_dual(d, c) == lam);
                CHECK(d.degree() == c.l() * c.k - lam.degree());
            }
        }
}

TEST_CASE("conjugation of diagrams") {
    CHECK(conjugate_diagram(Partition{2, 1}, BoxContext(4, 8)) == Partition{3, 1, 1});
    CHECK(conjugate_diagram(Partition{}, BoxContext(4, 8)) == Partition{});
    CHECK(conjugate_diagram(Partition{}, BoxContext(2, 5)) == Partition{});
    CHECK(conjugate_diagram(Partition{2, 1}, BoxContext(2, 4)) == Partition{1});
    CHECK(conjugate_diagram(Partition{3, 2, 1}, BoxContext(6, 12)) ==
          Partition{6, 5, 2, 2, 2, 1});

    // Involution plus degree law on every box with n <= 12.
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; k < n; ++k) {
            BoxContext c(k, n);
            for (const auto& lam : enumerate_box(c)) {
                Partition bar = conjugate_diagram(lam, c);
                CHECK(fits_box(bar, c));
                CHECK(conjugate_diagram(bar, c) == lam);
                CHECK(bar.degree() == n * durfee(lam) - lam.degree());
            }
        }
}

TEST_CASE("G_S membership and counts") {
    CHECK(in_gs(Partition{1}, BoxContext(2, 4)));
    CHECK_FALSE(in_gs(Partition{1, 1}, BoxContext(2, 4)));
    CHECK(in_gs(Partition{2, 1}, BoxContext(4, 8)));
    CHECK(in_gs(Partition{3}, BoxContext(6, 12)));
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; k < n; ++k) {
            BoxContext c(k, n);
            long long expect = binomial(c.gs_rows() + c.gs_cols(), c.gs_cols());
            CHECK((long long)enumerate_gs(c).size() == expect);
        }
}

TEST_CASE("embedding G_S pairs") {
    CHECK(embed(Partition{2, 1}, Partition{1, 1}, BoxContext(4, 8)) == Partition{3, 2, 2});
    CHECK(embed(Partition{2, 2}, Partition{2, 1}, BoxContext(6, 12)) ==
          Partition{6, 6, 4, 3, 2, 2});
    CHECK(embed(Partition{}, Partition{}, BoxContext(3, 6)) == Partition{});
    CHECK_THROWS_AS(embed(Partition{2}, Partition{}, BoxContext(2, 4)), std::invalid_argument);

    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k < n; ++k) {
            BoxContext c(k, n);
            for (const auto& a : enumerate_gs(c))
                for (const auto& b : enumerate_gs(c)) CHECK(fits_box(embed(a, b, c), c));
        }
}

TEST_CASE("diagonal embeddings are the invariant degree-zero classes") {
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k < n; ++k) {
            BoxContext c(k, n);
            std::set<Partition> diag;
            for (const auto& a : enumerate_gs(c)) {
                Partition e = embed(a, a, c);
                CHECK(conjugate_diagram(e, c) == e);
                CHECK(e.degree() % n == 0);
                CHECK(gs_from_invariant(e, c) == a);
                diag.insert(e);
            }
            std::set<Partition> invariant;
            for (const auto& lam : enumerate_box(c))
                if (lam.degree() % n == 0 && conjugate_diagram(lam, c) == lam)
                    invariant.insert(lam);
            CHECK(diag == invariant);
            CHECK((long long)invariant.size() ==
                  binomial(c.gs_rows() + c.gs_cols(), c.gs_cols()));
        }
}

TEST_CASE("gs_from_invariant rejects bad input") {
    CHECK(gs_from_invariant(Partition{2, 2}, BoxContext(2, 4)) == Partition{1});
    CHECK(gs_from_invariant(Partition{}, BoxContext(2, 4)) == Partition{});
    CHECK_THROWS_AS(gs_from_invariant(Partition{3, 2, 2}, BoxContext(4, 8)),
                    std::invalid_argument);
    // Invariant but of nonzero degree mod n: bar((2,1)) = (2,1) fails in G(2,4)?
    // (2,1) is not invariant there; use an explicit degree check instead.
    CHECK_THROWS_AS(gs_from_invariant(Partition{1}, BoxContext(2, 4)),
                    std::invalid_argument);
}

TEST_CASE("basis index lookup") {
    BasisIndex b(BoxContext(2, 4));
    CHECK(b.size() == 6);
    CHECK(b.index_of(Partition{}) == 0);
    CHECK(b.index_of(Partition{2}) == 2);
    CHECK(b.index_of(Partition{1, 1}) == 3);
    CHECK(b.index_of(Partition{3}) == -1);
    CHECK(b.order[5] == Partition{2, 2});
}
