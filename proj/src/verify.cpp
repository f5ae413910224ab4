#include "qsc/verify.hpp"

#include <random>
#include <sstream>

namespace qsc {

namespace {

std::string dims_str(long a, long b) {
    std::ostringstream os;
    os << a << " vs " << b;
    return os.str();
}

// Cached products plus the index permutations every sweep needs.
struct Sweep {
    ProductTable table;
    int N;
    std::vector<int> dual, cj, shift;

    explicit Sweep(const BoxContext& ctx) : table(ctx), N(table.basis().size()) {
        const BasisIndex& b = table.basis();
        dual.resize(N);
        cj.resize(N);
        shift.resize(N);
        for (int i = 0; i < N; ++i) {
            dual[i] = b.index_of(poincare_dual(b.order[i], ctx));
            cj[i] = b.index_of(conjugate_diagram(b.order[i], ctx));
        }
        CohClass sk = CohClass::sigma(ctx, ctx.k);
        for (int i = 0; i < N; ++i) {
            CohClass p = qprod(CohClass::schubert(ctx, b.order[i]), sk);
            if (p.terms.size() != 1 || p.terms.begin()->second != 1)
                throw std::logic_error("sigma_k does not permute the Schubert basis");
            shift[i] = b.index_of(p.terms.begin()->first);
        }
    }

    const BoxContext& ctx() const { return table.ctx(); }
    const Partition& part(int i) const { return table.basis().order[i]; }

    mpq_class gw3(int i, int j, int m) { return table.product(i, j).coeff(part(dual[m])); }

    int shift_pow(int i, int r) const {
        r %= ctx().n;
        if (r < 0) r += ctx().n;
        while (r--) i = shift[i];
        return i;
    }

    // a * S_j by linearity over cached basis products.
    CohClass mul_basis(const CohClass& a, int j) {
        CohClass out(ctx());
        for (const auto& [lam, c] : a.terms) {
            CohClass t = table.product(table.basis().index_of(lam), j);
            t *= c;
            out += t;
        }
        return out;
    }
};

std::vector<std::array<int, 3>> triple_list(int N, const VerifyOptions& opt) {
    std::vector<std::array<int, 3>> out;
    if (N <= opt.exhaustive_limit) {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int m = 0; m < N; ++m) out.push_back({i, j, m});
    } else {
        std::mt19937 gen(opt.seed);
        std::uniform_int_distribution<int> pick(0, N - 1);
        for (int t = 0; t < opt.random_triples; ++t)
            out.push_back({pick(gen), pick(gen), pick(gen)});
    }
    return out;
}

std::vector<std::pair<int, int>> pair_list(int N, const VerifyOptions& opt) {
    std::vector<std::pair<int, int>> out;
    if (N <= opt.exhaustive_limit) {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) out.push_back({i, j});
    } else {
        std::mt19937 gen(opt.seed + 1);
        std::uniform_int_distribution<int> pick(0, N - 1);
        for (int t = 0; t < opt.random_triples; ++t) out.push_back({pick(gen), pick(gen)});
    }
    return out;
}

CheckResult simple(const std::string& name, bool pass, const std::string& detail = "") {
    return CheckResult{name, pass, 0.0, detail};
}

}  // namespace

std::vector<CheckResult> verify_symmetries(const BoxContext& ctx, const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    Sweep sw(ctx);
    const int N = sw.N;
    const int n = ctx.n;
    auto triples = triple_list(N, opt);
    auto pairs = pair_list(N, opt);

    {
        bool ok = true;
        for (int j = 0; j < N; ++j)
            ok = ok && sw.table.product(0, j) == CohClass::schubert(ctx, sw.part(j));
        out.push_back(simple("unit law 1 * a = a", ok));
    }
    {
        bool ok = true;
        for (const auto& [i, j] : pairs)
            ok = ok && qprod(CohClass::schubert(ctx, sw.part(i)),
                             CohClass::schubert(ctx, sw.part(j))) ==
                           qprod(CohClass::schubert(ctx, sw.part(j)),
                                 CohClass::schubert(ctx, sw.part(i)));
        out.push_back(simple("qprod commutative", ok));
    }
    {
        bool ok = true;
        for (const auto& [i, j, m] : triples)
            ok = ok && sw.mul_basis(sw.table.product(i, j), m) ==
                           sw.mul_basis(sw.table.product(j, m), i);
        out.push_back(simple("qprod associative", ok));
    }
    {
        bool ok = true;
        for (int i = 0; i < N && ok; ++i)
            for (int j = i; j < N && ok; ++j)
                for (const auto& [nu, c] : sw.table.product(i, j).terms)
                    if (c.get_den() != 1 || c < 0) ok = false;
        out.push_back(simple("structure constants are nonnegative integers", ok));
    }
    {
        bool ok = true;
        for (const auto& [i, j, m] : triples) {
            mpq_class v = sw.gw3(i, j, m);
            ok = ok && v == sw.gw3(i, m, j) && v == sw.gw3(m, j, i) && v == sw.gw3(j, i, m);
        }
        out.push_back(simple("gw symmetric in all arguments", ok));
    }
    {
        bool ok = true;
        for (const auto& [i, j, m] : triples)
            ok = ok && sw.gw3(i, j, m) == sw.gw3(sw.dual[i], sw.dual[j], sw.cj[m]);
        out.push_back(simple("conjugation identity <A,B,C> = <A^,B^,conj C>", ok));
    }
    {
        bool ok = true;
        for (const auto& [i, j, m] : triples) {
            mpq_class v = sw.gw3(i, j, m);
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n && ok; ++b)
                    ok = sw.gw3(sw.shift_pow(i, a), sw.shift_pow(j, b),
                                sw.shift_pow(m, n - a - b)) == v;
        }
        out.push_back(simple("Z/n covariance of gw", ok));
    }
    {
        bool ok = true;
        for (const auto& [i, j, m] : triples)
            ok = ok && sw.table.product(i, sw.cj[j]).coeff(sw.part(m)) ==
                           sw.table.product(m, j).coeff(sw.part(i));
        out.push_back(simple("partial inversion", ok));
    }
    {
        bool ok = true;
        for (int i = 0; i < N; ++i) {
            ok = ok && sw.cj[sw.cj[i]] == i;
            for (int r = 0; r < n; ++r)
                ok = ok && sw.cj[sw.shift_pow(i, r)] == sw.shift_pow(sw.cj[i], n - r);
        }
        out.push_back(simple("conj involution, conj(sigma_k^r A) = sigma_k^(n-r) conj(A)", ok));
    }
    {
        bool ok = true;
        for (int i = 0; i < N; ++i) ok = ok && sw.shift_pow(i, n) == i;
        out.push_back(simple("sigma_k has order n", ok));
    }
    {
        bool ok = true;
        for (int i = 0; i < N; ++i) {
            const CohClass& ph = sw.table.product(i, sw.cj[i]);
            ok = ok && in_r0(ph) && in_rinv(ph) && ph.coeff(Partition{}) == 1;
        }
        // Hermitian norm on a two-term class.
        if (N >= 3) {
            CohClass a = CohClass::schubert(ctx, sw.part(1)) + CohClass::schubert(ctx, sw.part(2));
            ok = ok && phi(a).coeff(Partition{}) == 2;
        }
        out.push_back(simple("phi maps into R_0 over R_inv; |A|^2 is the unit coefficient", ok));
    }
    {
        bool ok = true;
        for (const auto& [i, j] : pairs) {
            mpq_class lhs = 0;
            for (const auto& [nu, c] : sw.table.product(i, j).terms) lhs += c * c;
            const CohClass& pi = sw.table.product(i, sw.cj[i]);
            const CohClass& pj = sw.table.product(j, sw.cj[j]);
            mpq_class rhs = 0;
            for (const auto& [tau, c] : pi.terms) rhs += c * pj.coeff(tau);
            ok = ok && lhs == rhs;
        }
        out.push_back(simple("|S_lam * S_mu|^2 equals the phi coefficient scalar product", ok));
    }
    {
        bool ok = true;
        for (const auto& [i, j] : pairs) {
            mpq_class v = sw.table.product(i, j).coeff(ctx.point_class());
            ok = ok && v == (j == sw.dual[i] ? 1 : 0);
        }
        out.push_back(simple("Poincare pairing stays classical", ok));
    }
    {
        // Semipositivity of multiplication by phi(S_lam), symmetrized by the
        // Poincare pairing.
        std::vector<int> sample;
        if (N <= opt.exhaustive_limit)
            for (int i = 0; i < N; ++i) sample.push_back(i);
        else {
            std::mt19937 gen(opt.seed + 2);
            std::uniform_int_distribution<int> pick(0, N - 1);
            for (int t = 0; t < 8; ++t) sample.push_back(pick(gen));
        }
        bool ok = true;
        double min_eig = 0.0;
        for (int lam : sample) {
            // In the Schubert basis multiplication by phi(S_lam) is already
            // symmetric: <X,Y> = coefficient of 1 in X * conj(Y) is the
            // standard scalar product and phi-multiplication is self-adjoint
            // for it.
            const CohClass& ph = sw.table.product(lam, sw.cj[lam]);
            RatMat b(N, N);
            for (int mu = 0; mu < N; ++mu) {
                CohClass y = sw.mul_basis(ph, mu);
                for (int nu = 0; nu < N; ++nu) b.at(mu, nu) = y.coeff(sw.part(nu));
            }
            if (!b.is_symmetric()) {
                ok = false;
                continue;
            }
            Eigen::MatrixXd bd(N, N);
            for (int r = 0; r < N; ++r)
                for (int c = 0; c < N; ++c) bd(r, c) = b.at(r, c).get_d();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(bd);
            min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
        }
        ok = ok && min_eig >= -opt.tol_identity;
        CheckResult r{"multiplication by phi(S_lam) is positive semidefinite", ok,
                      std::max(0.0, -min_eig), ""};
        out.push_back(r);
    }
    {
        bool ok = true;
        int cp = sw.table.basis().index_of(ctx.point_class());
        for (int i = 0; i < N; ++i) {
            CohClass lhs(ctx);
            for (const auto& [nu, c] : sw.table.product(i, cp).terms)
                lhs.add(poincare_dual(nu, ctx), c);
            ok = ok && lhs == CohClass::schubert(ctx, sw.part(sw.cj[i]));
        }
        out.push_back(simple("conj agrees with dual(S * C_P)", ok));
    }
    return out;
}

std::vector<CheckResult> verify_spectrum(const BoxContext& ctx, const RootChoice& rc,
                                         const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    CharacterMatrix cm = character_matrix(ctx, rc);
    ResolvedRoot root = resolve_root(ctx, rc);
    const int N = cm.basis.size();
    const double tol = opt.tol_identity;

    {
        bool ok = true;
        double dev = 0.0;
        for (int j = 0; j < N; ++j) {
            Complex v = cm.m(0, j);
            dev = std::max(dev, std::abs(v.imag()));
            ok = ok && v.real() > tol;
        }
        ok = ok && dev < tol;
        out.push_back({"S_lam(P_1) is real and positive", ok, dev, ""});
    }
    {
        double dev = 0.0;
        for (const auto& p : cm.points) dev = std::max(dev, ring_relation_residual(p));
        out.push_back({"coordinates satisfy the ring presentation", dev < tol, dev, ""});
    }
    {
        double dev = 0.0;
        for (const auto& p : cm.points)
            for (int i = 1; i <= ctx.k; ++i)
                dev = std::max(dev, std::abs(p.coords[i - 1] - evaluate(Partition::row(i), p)));
        out.push_back({"coordinates agree with single-row evaluation", dev < tol, dev, ""});
    }
    {
        double dev = 0.0;
        for (const auto& lam : cm.basis.order) {
            Complex expect = root.omega_pow(2L * (lam.degree() % ctx.n));
            dev = std::max(dev, std::abs(sigma_k_value(lam, ctx, rc) - expect));
        }
        out.push_back({"sigma_k eigenvalue is xi^(deg mod n)", dev < tol, dev, ""});
    }
    {
        double dev = double_specialization_max_dev(cm);
        out.push_back({"double specialization symmetry", dev < tol, dev, ""});
    }
    {
        OrbitReport rep = orbit_count_check(ctx);
        out.push_back(simple("orbit count equals dim R_0", rep.match,
                             dims_str(rep.orbits, rep.r0_dim)));
    }
    {
        bool ok = true;
        double dev = 0.0;
        for (const auto& p : cm.points) {
            try {
                match_point(cm, xi_action_on_coords(p, 1));
            } catch (const std::domain_error&) {
                ok = false;
            }
            auto full = xi_action_on_coords(p, ctx.n);
            for (int i = 0; i < ctx.k; ++i)
                dev = std::max(dev, std::abs(full[i] - p.coords[i]));
        }
        ok = ok && dev < tol;
        out.push_back({"Xi action permutes the points; n steps are the identity", ok, dev, ""});
    }
    {
        double sep = 1e300;
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) {
                double d = 0.0;
                for (int c = 0; c < ctx.k; ++c)
                    d += std::norm(cm.points[i].coords[c] - cm.points[j].coords[c]);
                sep = std::min(sep, std::sqrt(d));
            }
        std::ostringstream os;
        os << "min distance " << sep;
        out.push_back({"points are separated", sep > 1e-6, 0.0, os.str()});
    }
    out.push_back(cross_oracle_check(ctx, rc, opt.tol_integer));
    return out;
}

std::vector<CheckResult> verify_t1(const BoxContext& ctx, const RootChoice& rc,
                                   const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    Sweep sw(ctx);
    QuotientData qd = ann_p(ctx);
    const int N = sw.N;
    const int m = static_cast<int>(qd.gs_list.size());

    {
        bool ok = qd.gram.is_symmetric();
        for (int i = 0; i < N && ok; ++i)
            for (int j = 0; j < N && ok; ++j) {
                const mpq_class& v = qd.gram.at(i, j);
                ok = v.get_den() == 1 && v >= 0;
            }
        out.push_back(simple("Gram matrix symmetric with nonnegative integer entries", ok));
    }
    {
        long expect = binomial(ctx.gs_rows() + ctx.gs_cols(), ctx.gs_cols());
        bool ok = qd.kernel_equals_ideal && qd.rank == m && qd.rank == expect;
        out.push_back(simple("Ann P equals the ideal ({sigma_{k-i} - sigma_i}); dim R_P = |G_S|",
                             ok, dims_str(qd.rank, expect)));
    }
    {
        IdealComparisonReport rep = ideal_comparison_check(ctx);
        bool ok = rep.spans_equal && rep.orbit_span_contained;
        out.push_back(simple("ideal presentations agree; orbit relations sit inside",
                             ok, rep.strict ? "strict containment" : "degenerate equality"));
    }
    {
        bool ok = true;
        for (int i = 0; i < N && ok; ++i) {
            for (int j = 0; j < N && ok; ++j)
                ok = qd.gram.at(i, j) == qd.gram.at(sw.cj[i], j);
            for (int r = 1; r < ctx.n && ok; ++r)
                for (int j = 0; j < N && ok; ++j)
                    ok = qd.gram.at(i, j) == qd.gram.at(sw.shift_pow(i, r), j);
        }
        out.push_back(simple("orbits are numerically equivalent functionals", ok));
    }
    {
        bool ok = true;
        for (const auto& alpha : qd.gs_list) {
            std::map<Partition, mpq_class> expect{{alpha, 1}};
            if (alpha.empty()) expect = {{Partition{}, 1}};
            ok = ok && reduce_to_gs(qd, CohClass::schubert(ctx, alpha)) == expect;
            for (int r = 1; r < ctx.n && ok; ++r) {
                CohClass shifted = zn_shift(CohClass::schubert(ctx, alpha), r);
                ok = reduce_to_gs(qd, shifted) == expect;
            }
        }
        out.push_back(simple("G_S classes and their orbits reduce to themselves", ok));
    }
    {
        bool ok = true;
        for (int nu = 0; nu < m; ++nu)
            for (int al = 0; al < m; ++al) {
                const mpz_class& v = qd.psi_matrix[nu][al];
                if (nu == al)
                    ok = ok && v == 1;
                else if (!qd.gs_list[al].contains(qd.gs_list[nu]))
                    ok = ok && v == 0;
            }
        out.push_back(simple("psi matrix is unipotent triangular", ok));
    }
    {
        bool ok = true;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                mpq_class dot = 0;
                for (int nu = 0; nu < m; ++nu)
                    dot += mpq_class(qd.psi_matrix[nu][a] * qd.psi_matrix[nu][b]);
                ok = ok && dot == qd.gram_gs.at(a, b);
            }
        out.push_back(simple("sum pairing becomes the standard scalar product under psi", ok));
    }
    {
        bool ok = true;
        for (int i = 0; i <= ctx.k && ok; ++i) {
            int si = sw.table.basis().index_of(Partition::row(i));
            int sbar = sw.cj[si];
            for (int lam = 0; lam < N && ok; ++lam) {
                mpq_class a = 0, b = 0;
                for (int mu = 0; mu < N; ++mu) {
                    a += sw.gw3(si, mu, lam);
                    b += sw.gw3(sbar, mu, lam);
                }
                ok = a == b;
            }
        }
        out.push_back(simple("<sigma_i, P, S_lam> = <conj(sigma_i), P, S_lam>", ok));
    }
    {
        CharacterMatrix cm = character_matrix(ctx, rc);
        long count = 0;
        for (const auto& p : cm.points) {
            double im = 0.0;
            for (const auto& z : p.coords) im = std::max(im, std::abs(z.imag()));
            if (im < opt.tol_identity &&
                std::abs(p.coords[ctx.k - 1] - Complex(1.0)) < opt.tol_identity)
                ++count;
        }
        out.push_back(simple("real points with sigma_k = 1 match |G_S|", count == m,
                             dims_str(count, m)));
    }
    return out;
}

std::vector<CheckResult> verify_f3(const BoxContext& ctx, const VerifyOptions& opt) {
    (void)opt;
    std::vector<CheckResult> out;
    auto gs = enumerate_gs(ctx);
    bool coeffs = true, support = true;
    for (const auto& lam : gs)
        for (const auto& mu : gs) {
            F3Report rep = f3_check(lam, mu, ctx);
            coeffs = coeffs && rep.coefficients_match;
            support = support && rep.support_is_embeds;
        }
    out.push_back(simple("conj(S_lam) * S_mu factors through A_lam A_mu^T", coeffs));
    out.push_back(simple("conj(S_lam) * S_mu is supported on embedded pairs", support));
    return out;
}

std::vector<CheckResult> verify_plr(int max_size) {
    std::vector<Partition> parts;
    for (int s = 0; s <= max_size; ++s) {
        std::vector<int> cur;
        auto rec = [&](auto&& self, int remaining, int max_part) -> void {
            if (remaining == 0) {
                parts.push_back(Partition(cur));
                return;
            }
            for (int p = std::min(remaining, max_part); p >= 1; --p) {
                cur.push_back(p);
                self(self, remaining - p, p);
                cur.pop_back();
            }
        };
        rec(rec, s, std::max(s, 1));
    }
    bool ok = true;
    long pairs = 0;
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i; j < parts.size(); ++j) {
            ok = ok && lr_sum_lhs(parts[i], parts[j]) == lr_sum_rhs(parts[i], parts[j]);
            ++pairs;
        }
    std::ostringstream os;
    os << pairs << " pairs up to size " << max_size;
    return {CheckResult{"LR coefficient-sum identity", ok, 0.0, os.str()}};
}

CheckResult cross_oracle_check(const BoxContext& ctx, const RootChoice& rc, double tol_integer) {
    SpectralOracle oracle(character_matrix(ctx, rc));
    const BasisIndex& basis = oracle.table().basis;
    const int N = basis.size();
    double dev = 0.0;
    for (int lam = 0; lam < N; ++lam) {
        Eigen::MatrixXcd x = oracle.multiplication_matrix(lam);
        CohClass sl = CohClass::schubert(ctx, basis.order[lam]);
        for (int mu = lam; mu < N; ++mu) {
            CohClass pq = qprod(sl, CohClass::schubert(ctx, basis.order[mu]));
            for (int nu = 0; nu < N; ++nu) {
                double expect = pq.coeff(basis.order[nu]).get_d();
                dev = std::max(dev, std::abs(x(nu, mu) - Complex(expect)));
            }
        }
    }
    std::ostringstream os;
    os << "all " << N * (N + 1) / 2 << " basis pairs";
    return CheckResult{"rim-hook constants match the diagonalization oracle", dev < tol_integer,
                       dev, os.str()};
}

std::vector<CheckResult> verify_all(const BoxContext& ctx, const RootChoice& rc,
                                    const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> part) {
        for (auto& r : part) out.push_back(std::move(r));
    };
    append(verify_symmetries(ctx, opt));
    append(verify_spectrum(ctx, rc, opt));
    append(verify_t1(ctx, rc, opt));
    append(verify_f3(ctx, opt));
    append(verify_plr(6));
    return out;
}

}  // namespace qsc
