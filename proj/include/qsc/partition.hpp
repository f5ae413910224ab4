#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace qsc {

/// An integer partition: weakly decreasing nonnegative parts, trailing zeros
/// stripped. The empty partition stands for the unit class.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Single-row diagram with `boxes` boxes ((0) is the empty partition).
    static Partition row(int boxes);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int degree() const;
    bool empty() const { return parts_.empty(); }

    /// 1-based row length; 0 beyond the last row.
    int at(int i) const;

    /// Diagram containment mu <= *this, row by row.
    bool contains(const Partition& mu) const;

    /// Transposed diagram.
    Partition conjugate() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    /// "[3,2,1]"; "[]" for the empty partition.
    std::string str() const;

private:
    std::vector<int> parts_;
};

/// Basis order used everywhere: degree ascending, then parts lexicographically
/// descending, so e.g. G(2,4) lists [], [1], [2], [1,1], [2,1], [2,2].
bool canonical_less(const Partition& a, const Partition& b);

/// The l x k bounding box of G(k,n), l = n-k, together with the G_S
/// subrectangle floor(l/2) x floor(k/2).
struct BoxContext {
    int k;
    int n;
    BoxContext(int k_, int n_);
    int l() const { return n - k; }
    int gs_rows() const { return l() / 2; }
    int gs_cols() const { return k / 2; }
    /// The full l x k rectangle: the class of a point.
    Partition point_class() const;
    bool operator==(const BoxContext&) const = default;
};

long long binomial(int n, int k);

/// lam has at most l rows and first part at most k.
bool fits_box(const Partition& lam, const BoxContext& ctx);

/// All box partitions in canonical order; length binomial(n,k).
std::vector<Partition> enumerate_box(const BoxContext& ctx);

/// lam fits the floor(l/2) x floor(k/2) subrectangle.
bool in_gs(const Partition& lam, const BoxContext& ctx);

/// All G_S partitions in canonical order.
std::vector<Partition> enumerate_gs(const BoxContext& ctx);

/// Side length of the largest square contained in the diagram.
int durfee(const Partition& lam);

/// Complement in the l x k rectangle rotated by 180 degrees.
Partition poincare_dual(const Partition& lam, const BoxContext& ctx);

/// The involution dualizing the subdiagrams right of and below the Durfee
/// square; represents complex conjugation on Schubert classes.
Partition conjugate_diagram(const Partition& lam, const BoxContext& ctx);

/// T_alpha(T_beta): beta inscribed into the empty subrectangle of
/// conjugate_diagram(alpha). Both arguments must lie in G_S.
Partition embed(const Partition& alpha, const Partition& beta, const BoxContext& ctx);

/// Inverse of alpha -> embed(alpha, alpha) on conjugation-invariant box
/// partitions of degree 0 mod n.
Partition gs_from_invariant(const Partition& lam, const BoxContext& ctx);

/// Canonically ordered box basis with index lookup.
struct BasisIndex {
    BoxContext ctx;
    std::vector<Partition> order;

    explicit BasisIndex(const BoxContext& ctx_);
    int size() const { return static_cast<int>(order.size()); }
    /// -1 when lam is not a box partition.
    int index_of(const Partition& lam) const;

private:
    std::map<Partition, int> pos_;
};

}  // namespace qsc
