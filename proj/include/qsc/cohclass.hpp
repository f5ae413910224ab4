#pragma once

#include <gmpxx.h>

#include <map>

#include "qsc/partition.hpp"

namespace qsc {

/// Element of the quantum cohomology ring R of G(k,n): a rational linear
/// combination of box Schubert classes. Zero coefficients are never stored.
struct CohClass {
    BoxContext ctx;
    std::map<Partition, mpq_class> terms;

    explicit CohClass(const BoxContext& ctx_) : ctx(ctx_) {}

    static CohClass one(const BoxContext& ctx);
    static CohClass schubert(const BoxContext& ctx, const Partition& lam);
    /// sigma_i = S_(i); sigma_0 = 1. Requires 0 <= i <= k.
    static CohClass sigma(const BoxContext& ctx, int i);
    /// The class of a point C_P: the full-box Schubert class.
    static CohClass point(const BoxContext& ctx);
    /// P = sum of all box Schubert classes.
    static CohClass sum_of_all(const BoxContext& ctx);

    void add(const Partition& lam, const mpq_class& c);
    mpq_class coeff(const Partition& lam) const;
    bool is_zero() const { return terms.empty(); }

    CohClass& operator+=(const CohClass& rhs);
    CohClass& operator-=(const CohClass& rhs);
    CohClass& operator*=(const mpq_class& s);

    friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
    friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
    friend CohClass operator*(const mpq_class& s, CohClass a) { return a *= s; }

    bool operator==(const CohClass&) const = default;
};

}  // namespace qsc
