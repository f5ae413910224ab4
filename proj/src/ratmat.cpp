#include "qsc/ratmat.hpp"

#include <stdexcept>

namespace qsc {

RatMat RatMat::transpose() const {
    RatMat t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool RatMat::is_symmetric() const {
    if (rows != cols) return false;
    for (int r = 0; r < rows; ++r)
        for (int c = r + 1; c < cols; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
        mpq_class inv = 1 / m.at(row, col);
        for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            mpq_class f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

int rank_of_rows(const std::vector<RatVec>& rows) {
    if (rows.empty()) return 0;
    RatMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size())
            throw std::invalid_argument("rank_of_rows: ragged input");
        for (size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    }
    return rank(std::move(m));
}

std::vector<RatVec> kernel_basis(const RatMat& m) {
    RatMat e = m;
    std::vector<int> pivots = rref(e);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(m.cols, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatVec solve(const RatMat& m, const RatVec& b) {
    if (m.rows != m.cols || static_cast<int>(b.size()) != m.rows)
        throw std::invalid_argument("solve: shape mismatch");
    RatMat aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = b[r];
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != m.rows || pivots.back() == m.cols)
        throw std::invalid_argument("solve: singular matrix");
    RatVec x(m.cols, 0);
    for (int r = 0; r < m.rows; ++r) x[pivots[r]] = aug.at(r, m.cols);
    return x;
}

bool span_contains(const std::vector<RatVec>& outer, const std::vector<RatVec>& inner) {
    if (inner.empty()) return true;
    int base = rank_of_rows(outer);
    std::vector<RatVec> joint = outer;
    joint.insert(joint.end(), inner.begin(), inner.end());
    return rank_of_rows(joint) == base;
}

}  // namespace qsc
