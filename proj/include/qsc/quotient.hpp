#pragma once

#include <map>
#include <vector>

#include "qsc/quantum.hpp"
#include "qsc/ratmat.hpp"

namespace qsc {

/// <a,b>_s: the sum of all Schubert coefficients of qprod(a,b); equals
/// gw(a, b, P) for P the sum of all Schubert classes.
mpq_class sum_pairing(const CohClass& a, const CohClass& b);

/// Everything attached to R_P = R / Ann P for one box: the Gram matrix of
/// <.,.>_s, a kernel basis of Ann P, the G_S data and the psi matrix, plus
/// the Theorem 1 comparison between the Gram kernel and the ideal
/// ({sigma_{k-i} - sigma_i}).
struct QuotientData {
    BasisIndex basis;
    std::vector<Partition> gs_list;
    RatMat gram;                    // N x N
    std::vector<RatVec> ann_basis;  // kernel of gram
    RatMat gram_gs;                 // restriction to G_S, nondegenerate
    std::vector<std::vector<mpz_class>> psi_matrix;  // [nu][alpha], unipotent
    int rank = 0;
    int ideal_rank = 0;
    bool kernel_equals_ideal = false;

    int gs_index(const Partition& alpha) const;
};

QuotientData ann_p(const BoxContext& ctx);

struct IdealComparisonReport {
    int ideal_rank = 0;       // span of {sigma_{k-i} - sigma_i} * R
    int alt_rank = 0;         // span of {conj(sigma_i) - sigma_i} * R and (sigma_k - 1) * R
    int orbit_span_rank = 0;  // span of {S - conj(S), S - zn_shift(S, r)}
    bool spans_equal = false;
    bool orbit_span_contained = false;
    bool strict = false;
};

IdealComparisonReport ideal_comparison_check(const BoxContext& ctx);

/// The unique representation of a mod Ann P in the span of the G_S classes.
std::map<Partition, mpq_class> reduce_to_gs(const QuotientData& qd, const CohClass& a);

/// psi of a G_S Schubert class over the gs_list basis: the nu entry is
/// sum over tau in G_S of c^alpha_{tau,nu}.
std::vector<mpz_class> psi(const QuotientData& qd, const Partition& alpha);

/// psi extended linearly to a rational combination of G_S classes.
std::vector<mpq_class> psi_image(const QuotientData& qd,
                                 const std::map<Partition, mpq_class>& combo);

struct F3Report {
    std::vector<Partition> gs_list;
    /// Coefficient of embed(alpha, beta) in conj(S_lam) * S_mu.
    std::vector<std::vector<mpq_class>> lhs;
    /// (A_lam A_mu^T)[alpha][beta] = sum over nu in G_S of
    /// c^lam_{alpha,nu} c^mu_{beta,nu}.
    std::vector<std::vector<mpz_class>> rhs;
    bool coefficients_match = false;
    bool support_is_embeds = false;
    bool pass() const { return coefficients_match && support_is_embeds; }
};

F3Report f3_check(const Partition& lam, const Partition& mu, const BoxContext& ctx);

struct PositivityRow {
    Partition lam;
    std::vector<mpq_class> image;  // psi of the G_S reduction
    bool nonnegative = false;
    mpz_class denom_lcm;  // observed denominators of the reduction
};

struct PositivityReport {
    BoxContext ctx;
    std::vector<PositivityRow> rows;
    bool all_nonnegative = false;
    mpz_class max_denominator;
};

PositivityReport positivity_experiment(const QuotientData& qd);
PositivityReport positivity_experiment(const BoxContext& ctx);

}  // namespace qsc
