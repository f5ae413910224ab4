#include "qsc/quotient.hpp"

#include <stdexcept>

namespace qsc {

mpq_class sum_pairing(const CohClass& a, const CohClass& b) {
    CohClass p = qprod(a, b);
    mpq_class total = 0;
    for (const auto& [lam, c] : p.terms) total += c;
    return total;
}

int QuotientData::gs_index(const Partition& alpha) const {
    for (size_t i = 0; i < gs_list.size(); ++i)
        if (gs_list[i] == alpha) return static_cast<int>(i);
    return -1;
}

namespace {

RatVec class_vector(const BasisIndex& basis, const CohClass& a) {
    RatVec v(basis.size(), 0);
    for (const auto& [lam, c] : a.terms) v[basis.index_of(lam)] = c;
    return v;
}

// Vectors spanning gen * R over the Schubert basis.
std::vector<RatVec> ideal_span(ProductTable& table, const CohClass& gen) {
    std::vector<RatVec> rows;
    const BasisIndex& basis = table.basis();
    for (int j = 0; j < basis.size(); ++j) {
        CohClass v(table.ctx());
        for (const auto& [lam, c] : gen.terms) {
            CohClass t = table.product(basis.index_of(lam), j);
            t *= c;
            v += t;
        }
        rows.push_back(class_vector(basis, v));
    }
    return rows;
}

std::vector<RatVec> theorem_ideal_vectors(ProductTable& table) {
    const BoxContext& ctx = table.ctx();
    std::vector<RatVec> rows;
    for (int i = 0; i <= ctx.k; ++i) {
        CohClass gen = CohClass::sigma(ctx, ctx.k - i) - CohClass::sigma(ctx, i);
        if (gen.is_zero()) continue;
        auto part = ideal_span(table, gen);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

}  // namespace

QuotientData ann_p(const BoxContext& ctx) {
    ProductTable table(ctx);
    const BasisIndex& basis = table.basis();
    const int N = basis.size();

    QuotientData qd{BasisIndex(ctx), enumerate_gs(ctx), RatMat(N, N), {}, {}, {}, 0, 0, false};
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            mpq_class s = 0;
            for (const auto& [lam, c] : table.product(i, j).terms) s += c;
            qd.gram.at(i, j) = s;
            qd.gram.at(j, i) = s;
        }

    qd.ann_basis = kernel_basis(qd.gram);
    qd.rank = N - static_cast<int>(qd.ann_basis.size());

    std::vector<RatVec> ideal = theorem_ideal_vectors(table);
    qd.ideal_rank = rank_of_rows(ideal);
    qd.kernel_equals_ideal = qd.ideal_rank == static_cast<int>(qd.ann_basis.size()) &&
                             span_contains(ideal, qd.ann_basis);

    const int m = static_cast<int>(qd.gs_list.size());
    qd.gram_gs = RatMat(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            qd.gram_gs.at(a, b) =
                qd.gram.at(basis.index_of(qd.gs_list[a]), basis.index_of(qd.gs_list[b]));
    if (rank(qd.gram_gs) != m)
        throw std::logic_error("ann_p: sum pairing degenerate on G_S");

    qd.psi_matrix.assign(m, std::vector<mpz_class>(m, 0));
    for (int nu = 0; nu < m; ++nu)
        for (int al = 0; al < m; ++al) {
            mpz_class s = 0;
            for (int tau = 0; tau < m; ++tau)
                s += lr_coefficient(qd.gs_list[tau], qd.gs_list[nu], qd.gs_list[al]);
            qd.psi_matrix[nu][al] = s;
        }
    return qd;
}

IdealComparisonReport ideal_comparison_check(const BoxContext& ctx) {
    ProductTable table(ctx);
    const BasisIndex& basis = table.basis();
    IdealComparisonReport rep;

    std::vector<RatVec> ideal = theorem_ideal_vectors(table);
    rep.ideal_rank = rank_of_rows(ideal);

    std::vector<RatVec> alt;
    for (int i = 0; i <= ctx.k; ++i) {
        CohClass si = CohClass::sigma(ctx, i);
        CohClass gen = conj(si) - si;
        if (gen.is_zero()) continue;
        auto part = ideal_span(table, gen);
        alt.insert(alt.end(), part.begin(), part.end());
    }
    {
        CohClass gen = CohClass::sigma(ctx, ctx.k) - CohClass::one(ctx);
        auto part = ideal_span(table, gen);
        alt.insert(alt.end(), part.begin(), part.end());
    }
    rep.alt_rank = rank_of_rows(alt);
    rep.spans_equal = rep.ideal_rank == rep.alt_rank && span_contains(ideal, alt);

    std::vector<RatVec> orbit;
    for (int j = 0; j < basis.size(); ++j) {
        CohClass s = CohClass::schubert(ctx, basis.order[j]);
        orbit.push_back(class_vector(basis, s - conj(s)));
        CohClass shifted = s;
        CohClass sk = CohClass::sigma(ctx, ctx.k);
        for (int r = 1; r < ctx.n; ++r) {
            shifted = qprod(shifted, sk);
            orbit.push_back(class_vector(basis, s - shifted));
        }
    }
    rep.orbit_span_rank = rank_of_rows(orbit);
    rep.orbit_span_contained = span_contains(ideal, orbit);
    rep.strict = rep.orbit_span_contained && rep.orbit_span_rank < rep.ideal_rank;
    return rep;
}

std::map<Partition, mpq_class> reduce_to_gs(const QuotientData& qd, const CohClass& a) {
    const int m = static_cast<int>(qd.gs_list.size());
    RatVec rhs(m, 0);
    for (int b = 0; b < m; ++b) {
        int col = qd.basis.index_of(qd.gs_list[b]);
        for (const auto& [lam, c] : a.terms) {
            int row = qd.basis.index_of(lam);
            if (row < 0)
                throw std::invalid_argument("reduce_to_gs: " + lam.str() + " outside the box");
            rhs[b] += c * qd.gram.at(row, col);
        }
    }
    RatVec sol = solve(qd.gram_gs, rhs);
    std::map<Partition, mpq_class> out;
    for (int i = 0; i < m; ++i)
        if (sol[i] != 0) out[qd.gs_list[i]] = sol[i];
    return out;
}

std::vector<mpz_class> psi(const QuotientData& qd, const Partition& alpha) {
    int al = qd.gs_index(alpha);
    if (al < 0) throw std::invalid_argument("psi: " + alpha.str() + " outside G_S");
    std::vector<mpz_class> v(qd.gs_list.size());
    for (size_t nu = 0; nu < qd.gs_list.size(); ++nu) v[nu] = qd.psi_matrix[nu][al];
    return v;
}

std::vector<mpq_class> psi_image(const QuotientData& qd,
                                 const std::map<Partition, mpq_class>& combo) {
    std::vector<mpq_class> v(qd.gs_list.size(), 0);
    for (const auto& [alpha, c] : combo) {
        int al = qd.gs_index(alpha);
        if (al < 0) throw std::invalid_argument("psi_image: " + alpha.str() + " outside G_S");
        for (size_t nu = 0; nu < qd.gs_list.size(); ++nu)
            v[nu] += c * mpq_class(qd.psi_matrix[nu][al]);
    }
    return v;
}

F3Report f3_check(const Partition& lam, const Partition& mu, const BoxContext& ctx) {
    if (!in_gs(lam, ctx) || !in_gs(mu, ctx))
        throw std::invalid_argument("f3_check: arguments must lie in G_S");
    F3Report rep;
    rep.gs_list = enumerate_gs(ctx);
    const int m = static_cast<int>(rep.gs_list.size());

    std::map<Partition, std::pair<int, int>> embed_of;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Partition e = embed(rep.gs_list[a], rep.gs_list[b], ctx);
            if (!embed_of.emplace(e, std::make_pair(a, b)).second)
                throw std::logic_error("f3_check: embed is not injective");
        }

    CohClass prod = qprod(CohClass::schubert(ctx, conjugate_diagram(lam, ctx)),
                          CohClass::schubert(ctx, mu));
    rep.lhs.assign(m, std::vector<mpq_class>(m, 0));
    rep.support_is_embeds = true;
    for (const auto& [nu, c] : prod.terms) {
        auto it = embed_of.find(nu);
        if (it == embed_of.end()) {
            rep.support_is_embeds = false;
            continue;
        }
        rep.lhs[it->second.first][it->second.second] = c;
    }

    std::vector<std::vector<mpz_class>> a_lam(m, std::vector<mpz_class>(m)),
        a_mu(m, std::vector<mpz_class>(m));
    for (int a = 0; a < m; ++a)
        for (int v = 0; v < m; ++v) {
            a_lam[a][v] = lr_coefficient(rep.gs_list[a], rep.gs_list[v], lam);
            a_mu[a][v] = lr_coefficient(rep.gs_list[a], rep.gs_list[v], mu);
        }
    rep.rhs.assign(m, std::vector<mpz_class>(m, 0));
    rep.coefficients_match = true;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            mpz_class s = 0;
            for (int v = 0; v < m; ++v) s += a_lam[a][v] * a_mu[b][v];
            rep.rhs[a][b] = s;
            if (rep.lhs[a][b] != mpq_class(s)) rep.coefficients_match = false;
        }
    return rep;
}

PositivityReport positivity_experiment(const QuotientData& qd) {
    PositivityReport rep{qd.basis.ctx, {}, true, 1};
    for (const auto& lam : qd.basis.order) {
        auto combo = reduce_to_gs(qd, CohClass::schubert(qd.basis.ctx, lam));
        PositivityRow row{lam, psi_image(qd, combo), true, 1};
        for (const auto& [alpha, c] : combo) {
            (void)alpha;
            mpz_class den = c.get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), row.denom_lcm.get_mpz_t(), den.get_mpz_t());
            row.denom_lcm = row.denom_lcm / g * den;
        }
        for (const auto& v : row.image)
            if (v < 0) row.nonnegative = false;
        rep.all_nonnegative = rep.all_nonnegative && row.nonnegative;
        if (row.denom_lcm > rep.max_denominator) rep.max_denominator = row.denom_lcm;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

PositivityReport positivity_experiment(const BoxContext& ctx) {
    QuotientData qd = ann_p(ctx);
    return positivity_experiment(qd);
}

}  // namespace qsc
