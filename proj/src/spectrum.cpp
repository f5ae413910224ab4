#include "qsc/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qsc/quantum.hpp"

namespace qsc {

namespace {
constexpr double kPi = std::numbers::pi;
}

Complex ResolvedRoot::xi() const { return omega_pow(2); }

Complex ResolvedRoot::omega_pow(long e) const {
    long num = ((c * e) % (2L * n) + 2L * n) % (2L * n);
    return std::polar(1.0, kPi * static_cast<double>(num) / n);
}

ResolvedRoot resolve_root(const BoxContext& ctx, const RootChoice& rc) {
    int n = ctx.n;
    int a = ((rc.xi_exponent % n) + n) % n;
    if (a == 0 || std::gcd(a, n) != 1)
        throw std::invalid_argument("root choice: xi exponent must be coprime to n");
    // omega^2 = xi needs c = a mod n; take the odd representative so omega is
    // a primitive 2n-th root. For even n both representatives are odd and
    // half_exponent picks one.
    int c;
    if (n % 2 == 0)
        c = (rc.half_exponent % 2 != 0) ? a : a + n;
    else
        c = (a % 2 != 0) ? a : a + n;
    return ResolvedRoot{n, c};
}

SpectrumPoint point(const Partition& lam, const BoxContext& ctx, const RootChoice& rc) {
    if (!fits_box(lam, ctx))
        throw std::invalid_argument("point: " + lam.str() + " outside the box");
    ResolvedRoot root = resolve_root(ctx, rc);
    const int l = ctx.l();
    SpectrumPoint p{ctx, lam, rc, {}, {}, {}};
    p.index2.resize(l);
    p.vars.resize(l);
    for (int j = 1; j <= l; ++j) {
        p.index2[j - 1] = (l + 1) + 2 * (lam.at(j) - j);
        p.vars[j - 1] = root.omega_pow(-p.index2[j - 1]);
    }
    // h_1..h_k by multiplying the truncated series 1/(1 - x t) per variable.
    std::vector<Complex> h(ctx.k + 1, Complex(0.0));
    h[0] = 1.0;
    for (const Complex& x : p.vars)
        for (int d = 1; d <= ctx.k; ++d) h[d] += x * h[d - 1];
    p.coords.assign(h.begin() + 1, h.end());
    return p;
}

Complex evaluate(const Partition& lam, const SpectrumPoint& p) {
    if (!fits_box(lam, p.ctx))
        throw std::invalid_argument("evaluate: " + lam.str() + " outside the box");
    const int l = p.ctx.l();
    Complex den = 1.0;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) den *= p.vars[i] - p.vars[j];
    if (std::abs(den) < 1e-12)
        throw std::domain_error("evaluate: repeated point variables (invalid index tuple)");
    Eigen::MatrixXcd num(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 1; j <= l; ++j)
            num(i, j - 1) = std::pow(p.vars[i], lam.at(j) + l - j);
    return num.determinant() / den;
}

Complex sigma_k_value(const Partition& lam, const BoxContext& ctx, const RootChoice& rc) {
    return evaluate(Partition::row(ctx.k), point(lam, ctx, rc));
}

Eigen::MatrixXcd CharacterMatrix::normalized() const {
    Eigen::MatrixXcd out = m;
    for (int j = 0; j < m.cols(); ++j) out.col(j) /= m(0, j);
    return out;
}

CharacterMatrix character_matrix(const BoxContext& ctx, const RootChoice& rc) {
    CharacterMatrix cm{BasisIndex(ctx), rc, {}, {}};
    const int n = cm.basis.size();
    cm.points.reserve(n);
    for (const auto& mu : cm.basis.order) cm.points.push_back(point(mu, ctx, rc));
    cm.m.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cm.m(i, j) = evaluate(cm.basis.order[j], cm.points[i]);
    return cm;
}

double double_specialization_max_dev(const CharacterMatrix& cm) {
    Eigen::MatrixXcd nm = cm.normalized();
    double dev = 0.0;
    for (int i = 0; i < nm.rows(); ++i)
        for (int j = 0; j < nm.cols(); ++j) dev = std::max(dev, std::abs(nm(i, j) - nm(j, i)));
    return dev;
}

OrbitReport orbit_count_check(const BoxContext& ctx) {
    BasisIndex basis(ctx);
    CohClass sk = CohClass::sigma(ctx, ctx.k);
    std::vector<int> shift(basis.size());
    for (int i = 0; i < basis.size(); ++i) {
        CohClass p = qprod(CohClass::schubert(ctx, basis.order[i]), sk);
        if (p.terms.size() != 1 || p.terms.begin()->second != 1)
            throw std::logic_error("sigma_k does not permute the Schubert basis");
        shift[i] = basis.index_of(p.terms.begin()->first);
    }
    OrbitReport rep;
    std::vector<bool> seen(basis.size(), false);
    for (int i = 0; i < basis.size(); ++i) {
        if (seen[i]) continue;
        ++rep.orbits;
        for (int j = i; !seen[j]; j = shift[j]) seen[j] = true;
    }
    for (const auto& lam : basis.order)
        if (lam.degree() % ctx.n == 0) ++rep.r0_dim;
    rep.match = rep.orbits == rep.r0_dim;
    return rep;
}

std::vector<Complex> xi_action_on_coords(const SpectrumPoint& p, int steps) {
    ResolvedRoot root = resolve_root(p.ctx, p.root);
    std::vector<Complex> out = p.coords;
    for (size_t i = 0; i < out.size(); ++i)
        out[i] *= root.omega_pow(2L * (static_cast<long>(i) + 1) * steps);
    return out;
}

int match_point(const CharacterMatrix& cm, const std::vector<Complex>& coords) {
    int best = -1;
    double best_d = 1e300, second = 1e300;
    for (size_t i = 0; i < cm.points.size(); ++i) {
        double d = 0.0;
        for (size_t j = 0; j < coords.size(); ++j)
            d += std::norm(coords[j] - cm.points[i].coords[j]);
        d = std::sqrt(d);
        if (d < best_d) {
            second = best_d;
            best_d = d;
            best = static_cast<int>(i);
        } else {
            second = std::min(second, d);
        }
    }
    if (best < 0 || best_d > 1e-6 || second < 1e-6)
        throw std::domain_error("match_point: coordinates do not identify a unique point");
    return best;
}

double ring_relation_residual(const SpectrumPoint& p) {
    const int k = p.ctx.k, l = p.ctx.l(), n = p.ctx.n;
    auto e = [&](int j) -> Complex {
        if (j == 0) return 1.0;
        if (j < 0 || j > k) return 0.0;
        return p.coords[j - 1];
    };
    auto y_h = [&](int m) {
        Eigen::MatrixXcd jt(m, m);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) jt(i - 1, j - 1) = e(1 - i + j);
        return jt.determinant();
    };
    double res = 0.0;
    for (int m = l + 1; m <= n - 1; ++m) res = std::max(res, std::abs(y_h(m)));
    double target = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^(k+1)
    res = std::max(res, std::abs(y_h(n) - target));
    return res;
}

SpectralOracle::SpectralOracle(CharacterMatrix cm) : cm_(std::move(cm)), lu_(cm_.m) {}

Eigen::MatrixXcd SpectralOracle::multiplication_matrix(int lam_index) const {
    // Rows of the table are points, so the table itself maps coefficient
    // vectors to point values.
    Eigen::MatrixXcd scaled = cm_.m.col(lam_index).asDiagonal() * cm_.m;
    return lu_.solve(scaled);
}

std::vector<Eigen::MatrixXcd> spectral_structure_constants(const BoxContext& ctx,
                                                           const RootChoice& rc) {
    SpectralOracle oracle(character_matrix(ctx, rc));
    std::vector<Eigen::MatrixXcd> out;
    out.reserve(oracle.table().basis.size());
    for (int i = 0; i < oracle.table().basis.size(); ++i)
        out.push_back(oracle.multiplication_matrix(i));
    return out;
}

}  // namespace qsc
