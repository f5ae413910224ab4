#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "qsc/partition.hpp"

namespace qsc {

using Complex = std::complex<double>;

/// Selects the primitive root xi = exp(2*pi*i*a/n) and, through the parity of
/// half_exponent, which square root of xi realizes half-integer exponents
/// when l is even.
struct RootChoice {
    int xi_exponent = 1;
    int half_exponent = 1;
};

/// omega = exp(i*pi*c/n) with omega^2 = xi; c is odd whenever a square root
/// is genuinely needed, so omega is a primitive 2n-th root then.
struct ResolvedRoot {
    int n = 1;
    int c = 1;
    Complex xi() const;
    Complex omega_pow(long e) const;
};

ResolvedRoot resolve_root(const BoxContext& ctx, const RootChoice& rc);

/// A point of Spec R: the tuple I_lam (stored doubled, as integers), the l
/// root-of-unity variables and the coordinate vector (sigma_1,...,sigma_k).
struct SpectrumPoint {
    BoxContext ctx;
    Partition label;
    RootChoice root;
    std::vector<int> index2;      // 2*i_j = l+1+2*(lam_j - j)
    std::vector<Complex> vars;    // x_j
    std::vector<Complex> coords;  // h_i(x), i = 1..k
};

SpectrumPoint point(const Partition& lam, const BoxContext& ctx, const RootChoice& rc = {});

/// Bialternant evaluation of s_lam at the point's variables.
Complex evaluate(const Partition& lam, const SpectrumPoint& p);

/// evaluate((k), point(lam, ...)); equals xi^(deg lam mod n).
Complex sigma_k_value(const Partition& lam, const BoxContext& ctx, const RootChoice& rc = {});

/// Value table in the paper's layout: m(i, j) = S_{order[j]}(P_{order[i]}),
/// rows indexed by points and columns by classes, both in canonical order.
struct CharacterMatrix {
    BasisIndex basis;
    RootChoice root;
    std::vector<SpectrumPoint> points;
    Eigen::MatrixXcd m;

    /// Every column scaled by its value at P_1 (the first row).
    Eigen::MatrixXcd normalized() const;
};

CharacterMatrix character_matrix(const BoxContext& ctx, const RootChoice& rc = {});

/// Max deviation of S_lam(P_mu)/S_lam(P_1) = S_mu(P_lam)/S_mu(P_1) over all
/// pairs: the double specialization symmetry.
double double_specialization_max_dev(const CharacterMatrix& cm);

struct OrbitReport {
    long orbits = 0;
    long r0_dim = 0;
    bool match = false;
};

/// Orbits of the Z/n action versus dim R_0, both counted independently.
OrbitReport orbit_count_check(const BoxContext& ctx);

/// Coordinates of a point after componentwise multiplication with
/// Xi^steps, Xi = (xi, xi^2, ..., xi^k).
std::vector<Complex> xi_action_on_coords(const SpectrumPoint& p, int steps);

/// Index of the nearest point of the table; requires the match to be closer
/// than 1e-6 and every other point farther than that.
int match_point(const CharacterMatrix& cm, const std::vector<Complex>& coords);

/// Residual of the ring presentation at one point: max over |Y_m| for
/// l+1 <= m <= n-1 and |Y_n - (-1)^(k+1)|, with Y_m the Jacobi-Trudi
/// determinant expressing h_m(y) through the coordinates e_j(y) = sigma_j.
double ring_relation_residual(const SpectrumPoint& p);

/// Structure constants recovered by diagonalization: multiplication by S_lam
/// is diagonal in the point basis with eigenvalues S_lam(P).
class SpectralOracle {
public:
    explicit SpectralOracle(CharacterMatrix cm);
    const CharacterMatrix& table() const { return cm_; }
    /// X with X(nu, mu) ~ c^nu_{lam,mu} for the given class index.
    Eigen::MatrixXcd multiplication_matrix(int lam_index) const;

private:
    CharacterMatrix cm_;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
};

/// Full 3-index array c[lam](nu, mu); intended for small boxes.
std::vector<Eigen::MatrixXcd> spectral_structure_constants(const BoxContext& ctx,
                                                           const RootChoice& rc = {});

}  // namespace qsc
