#pragma once

#include <string>
#include <vector>

#include "qsc/quantum.hpp"
#include "qsc/quotient.hpp"
#include "qsc/spectrum.hpp"

namespace qsc {

struct CheckResult {
    std::string name;
    bool pass = false;
    double max_dev = 0.0;
    std::string detail;
};

struct VerifyOptions {
    double tol_identity = 1e-9;
    double tol_integer = 1e-6;
    unsigned seed = 12345;
    int random_triples = 200;
    /// Boxes up to this basis size get exhaustive triple sweeps; larger ones
    /// use seeded random triples.
    int exhaustive_limit = 24;
};

/// Ring symmetries: unit/commutativity/associativity, positivity of the
/// structure constants, gw symmetry, the conjugation identity, Z/n
/// covariance, partial inversion, conj as ring involution, sigma_k order n,
/// phi into R_0 and R_inv, the norm identities, and semipositivity of
/// phi-multiplication.
std::vector<CheckResult> verify_symmetries(const BoxContext& ctx, const VerifyOptions& opt);

/// Spectrum layer: P_1 positivity, ring relations at every point, coordinate
/// consistency, the sigma_k eigenvalue lemma, double specialization, orbit
/// counts, the Xi action, and the rim-hook/diagonalization cross-check.
std::vector<CheckResult> verify_spectrum(const BoxContext& ctx, const RootChoice& rc,
                                         const VerifyOptions& opt);

/// Theorem 1: Gram kernel vs ideal, dim R_P, ideal presentations, numerical
/// equivalence of orbits, reduction fixed points, psi triangularity and the
/// scalar-product property, proof endpoints, and the real-point count.
std::vector<CheckResult> verify_t1(const BoxContext& ctx, const RootChoice& rc,
                                   const VerifyOptions& opt);

/// The G_S product factorization, swept over all G_S pairs.
std::vector<CheckResult> verify_f3(const BoxContext& ctx, const VerifyOptions& opt);

/// The coefficient-sum identity for all pairs with |lam|, |mu| <= max_size.
std::vector<CheckResult> verify_plr(int max_size);

std::vector<CheckResult> verify_all(const BoxContext& ctx, const RootChoice& rc,
                                    const VerifyOptions& opt);

/// Streaming comparison of every rim-hook structure constant against the
/// diagonalization oracle. max_dev is the largest distance from the exact
/// integers.
CheckResult cross_oracle_check(const BoxContext& ctx, const RootChoice& rc, double tol_integer);

}  // namespace qsc
