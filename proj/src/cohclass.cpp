#include "qsc/cohclass.hpp"

#include <stdexcept>

namespace qsc {

CohClass CohClass::one(const BoxContext& ctx) {
    CohClass c(ctx);
    c.add(Partition{}, 1);
    return c;
}

CohClass CohClass::schubert(const BoxContext& ctx, const Partition& lam) {
    if (!fits_box(lam, ctx))
        throw std::invalid_argument("schubert: " + lam.str() + " outside the box");
    CohClass c(ctx);
    c.add(lam, 1);
    return c;
}

CohClass CohClass::sigma(const BoxContext& ctx, int i) {
    if (i < 0 || i > ctx.k)
        throw std::invalid_argument("sigma: index must satisfy 0 <= i <= k");
    return schubert(ctx, Partition::row(i));
}

CohClass CohClass::point(const BoxContext& ctx) {
    return schubert(ctx, ctx.point_class());
}

CohClass CohClass::sum_of_all(const BoxContext& ctx) {
    CohClass c(ctx);
    for (const auto& lam : enumerate_box(ctx)) c.add(lam, 1);
    return c;
}

void CohClass::add(const Partition& lam, const mpq_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(lam, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

mpq_class CohClass::coeff(const Partition& lam) const {
    auto it = terms.find(lam);
    return it == terms.end() ? mpq_class(0) : it->second;
}

CohClass& CohClass::operator+=(const CohClass& rhs) {
    if (ctx != rhs.ctx) throw std::invalid_argument("class arithmetic: context mismatch");
    for (const auto& [lam, c] : rhs.terms) add(lam, c);
    return *this;
}

CohClass& CohClass::operator-=(const CohClass& rhs) {
    if (ctx != rhs.ctx) throw std::invalid_argument("class arithmetic: context mismatch");
    for (const auto& [lam, c] : rhs.terms) add(lam, -c);
    return *this;
}

CohClass& CohClass::operator*=(const mpq_class& s) {
    if (s == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [lam, c] : terms) c *= s;
    return *this;
}

}  // namespace qsc
