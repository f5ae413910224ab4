#pragma once

#include <map>
#include <optional>
#include <utility>

#include "qsc/cohclass.hpp"
#include "qsc/schur.hpp"

namespace qsc {

/// Quantum product at q=1: LR expansion with at most l rows followed by
/// n-rim-hook reduction into the box.
CohClass qprod(const CohClass& a, const CohClass& b);

/// Reduce a partition with at most l rows into the box by repeatedly removing
/// an n-rim-hook starting at the end of the first row. Each removal spanning
/// h rows contributes (-1)^{(h-1)+(l-1)}. Returns {reduced shape, sign};
/// sign 0 when the class vanishes.
std::pair<Partition, int> rim_hook_reduce(const Partition& nu, const BoxContext& ctx);

/// Three-point invariant: trilinear extension of the coefficient of
/// poincare_dual(nu) in qprod(S_lam, S_mu).
mpq_class gw(const CohClass& a, const CohClass& b, const CohClass& c);

/// The Z/n action: quantum multiplication by sigma_k^(steps mod n).
CohClass zn_shift(const CohClass& a, int steps);

/// Complex conjugation: linear extension of the diagram involution of
/// conjugate_diagram; equal to poincare_dual(qprod(., C_P)) on classes.
CohClass conj(const CohClass& a);

/// phi(a) = a * conj(a).
CohClass phi(const CohClass& a);

/// Common degree mod n of the support, or nullopt for inhomogeneous classes.
std::optional<int> degree_mod_n(const CohClass& a);

/// a is homogeneous of degree 0 mod n.
bool in_r0(const CohClass& a);

/// a is fixed by conjugation.
bool in_rinv(const CohClass& a);

/// Memoized Schubert-basis products for one box. Basis products are checked
/// to have nonnegative integer structure constants.
class ProductTable {
public:
    explicit ProductTable(const BoxContext& ctx) : basis_(ctx) {}

    const BasisIndex& basis() const { return basis_; }
    const BoxContext& ctx() const { return basis_.ctx; }
    const CohClass& product(int i, int j);
    const CohClass& product(const Partition& a, const Partition& b);

private:
    BasisIndex basis_;
    std::map<std::pair<int, int>, CohClass> cache_;
};

}  // namespace qsc
