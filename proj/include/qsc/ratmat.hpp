#pragma once

#include <gmpxx.h>

#include <vector>

namespace qsc {

using RatVec = std::vector<mpq_class>;

/// Dense matrix of exact rationals, row major.
struct RatMat {
    int rows = 0;
    int cols = 0;
    std::vector<mpq_class> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    mpq_class& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const mpq_class& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    RatMat transpose() const;
    bool is_symmetric() const;
};

/// Row echelon rank via exact Gaussian elimination (input by value).
int rank(RatMat m);

/// Rank of the row span of a list of vectors.
int rank_of_rows(const std::vector<RatVec>& rows);

/// Basis of the right kernel {x : m x = 0}.
std::vector<RatVec> kernel_basis(const RatMat& m);

/// Solve the square system m x = b; throws on a singular matrix.
RatVec solve(const RatMat& m, const RatVec& b);

/// True when every vector of `inner` lies in the row span of `outer`.
bool span_contains(const std::vector<RatVec>& outer, const std::vector<RatVec>& inner);

}  // namespace qsc
