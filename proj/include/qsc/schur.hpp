#pragma once

#include <gmpxx.h>

#include <map>

#include "qsc/cohclass.hpp"
#include "qsc/partition.hpp"

namespace qsc {

/// Integer formal sum of Schur functions in the ring of symmetric functions.
struct SymFunc {
    std::map<Partition, mpz_class> terms;

    void add(const Partition& lam, const mpz_class& c);
    mpz_class coeff(const Partition& lam) const;
    bool operator==(const SymFunc&) const = default;
};

/// c^nu_{lam,mu}: LR skew tableaux of shape nu/lam, content mu, whose reverse
/// reading word (right to left, top to bottom) is a lattice word.
mpz_class lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

/// Unbounded product s_lam * s_mu = sum c^nu s_nu.
SymFunc schur_product(const Partition& lam, const Partition& mu);

/// Same expansion restricted to partitions with at most max_rows rows
/// (max_rows = 0 means unbounded).
SymFunc schur_product_rows(const Partition& lam, const Partition& mu, int max_rows);

/// Classical cup product: the expansion with every term outside the box
/// discarded.
CohClass cup_product(const CohClass& a, const CohClass& b, const BoxContext& ctx);

/// sum over nu of c^nu_{lam,mu}.
mpz_class lr_sum_lhs(const Partition& lam, const Partition& mu);

/// sum over alpha, beta, nu of c^lam_{alpha,nu} * c^mu_{beta,nu}.
mpz_class lr_sum_rhs(const Partition& lam, const Partition& mu);

/// Number of LR skew tableaux of shape lam/nu with arbitrary content.
mpz_class lr_filling_count(const Partition& lam, const Partition& nu);

/// Pieri rule: shapes obtained from lam by adding a horizontal strip of r
/// boxes (at most max_rows rows when max_rows > 0).
std::vector<Partition> pieri_row(const Partition& lam, int r, int max_rows = 0);

}  // namespace qsc
