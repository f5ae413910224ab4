#include "qsc/quantum.hpp"

#include <stdexcept>

namespace qsc {

std::pair<Partition, int> rim_hook_reduce(const Partition& nu, const BoxContext& ctx) {
    const int l = ctx.l();
    if (nu.rows() > l) return {Partition{}, 0};
    // First-column hook lengths; strictly decreasing.
    std::vector<int> beta(l);
    for (int j = 1; j <= l; ++j) beta[j - 1] = nu.at(j) + l - j;
    int sign = 1;
    while (beta[0] > ctx.n - 1) {  // first part exceeds k
        int b = beta[0] - ctx.n;
        int pos = 1;
        while (pos < l && beta[pos] > b) ++pos;
        if (pos < l && beta[pos] == b) return {Partition{}, 0};
        for (int t = 0; t + 1 < pos; ++t) beta[t] = beta[t + 1];
        beta[pos - 1] = b;
        int h = pos;  // rows the hook occupies
        if (((h - 1) + (l - 1)) % 2 != 0) sign = -sign;
    }
    std::vector<int> parts(l);
    for (int j = 1; j <= l; ++j) parts[j - 1] = beta[j - 1] - (l - j);
    return {Partition(std::move(parts)), sign};
}

CohClass qprod(const CohClass& a, const CohClass& b) {
    if (a.ctx != b.ctx) throw std::invalid_argument("qprod: context mismatch");
    const BoxContext& ctx = a.ctx;
    CohClass out(ctx);
    for (const auto& [lam, ca] : a.terms) {
        if (!fits_box(lam, ctx))
            throw std::invalid_argument("qprod: " + lam.str() + " outside the box");
        for (const auto& [mu, cb] : b.terms) {
            if (!fits_box(mu, ctx))
                throw std::invalid_argument("qprod: " + mu.str() + " outside the box");
            SymFunc f = schur_product_rows(lam, mu, ctx.l());
            for (const auto& [nu, c] : f.terms) {
                auto [red, sign] = rim_hook_reduce(nu, ctx);
                if (sign != 0) out.add(red, ca * cb * mpq_class(c * sign));
            }
        }
    }
    return out;
}

mpq_class gw(const CohClass& a, const CohClass& b, const CohClass& c) {
    if (a.ctx != b.ctx || a.ctx != c.ctx) throw std::invalid_argument("gw: context mismatch");
    CohClass ab = qprod(a, b);
    mpq_class total = 0;
    for (const auto& [nu, cc] : c.terms)
        total += cc * ab.coeff(poincare_dual(nu, c.ctx));
    return total;
}

CohClass zn_shift(const CohClass& a, int steps) {
    int s = steps % a.ctx.n;
    if (s < 0) s += a.ctx.n;
    CohClass out = a;
    CohClass sk = CohClass::sigma(a.ctx, a.ctx.k);
    for (int i = 0; i < s; ++i) out = qprod(out, sk);
    return out;
}

CohClass conj(const CohClass& a) {
    CohClass out(a.ctx);
    for (const auto& [lam, c] : a.terms) out.add(conjugate_diagram(lam, a.ctx), c);
    return out;
}

CohClass phi(const CohClass& a) { return qprod(a, conj(a)); }

std::optional<int> degree_mod_n(const CohClass& a) {
    std::optional<int> d;
    for (const auto& [lam, c] : a.terms) {
        int m = lam.degree() % a.ctx.n;
        if (!d)
            d = m;
        else if (*d != m)
            return std::nullopt;
    }
    if (!d) d = 0;  // the zero class is homogeneous of any degree
    return d;
}

bool in_r0(const CohClass& a) {
    auto d = degree_mod_n(a);
    return d && *d == 0;
}

bool in_rinv(const CohClass& a) { return conj(a) == a; }

const CohClass& ProductTable::product(int i, int j) {
    if (i > j) std::swap(i, j);
    auto key = std::make_pair(i, j);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    CohClass p = qprod(CohClass::schubert(ctx(), basis_.order[i]),
                       CohClass::schubert(ctx(), basis_.order[j]));
    for (const auto& [nu, c] : p.terms) {
        if (c.get_den() != 1 || c < 0)
            throw std::logic_error("qprod: structure constant not a nonnegative integer");
    }
    return cache_.emplace(key, std::move(p)).first->second;
}

const CohClass& ProductTable::product(const Partition& a, const Partition& b) {
    int i = basis_.index_of(a);
    int j = basis_.index_of(b);
    if (i < 0 || j < 0) throw std::invalid_argument("product: partition outside the box");
    return product(i, j);
}

}  // namespace qsc
