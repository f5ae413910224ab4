// Test-only reference implementations, independent of the enumeration used by
// the library: a literal reverse-reading-word LR counter and a product oracle
// built from the Jacobi-Trudi determinant plus the Pieri rule.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "qsc/partition.hpp"
#include "qsc/schur.hpp"

namespace oracle {

// Count semistandard fillings of nu/lam with content mu whose reverse reading
// word (rows top to bottom, each row right to left) is a lattice word.
inline long brute_lr(const qsc::Partition& lam, const qsc::Partition& mu,
                     const qsc::Partition& nu) {
    using qsc::Partition;
    if (!nu.contains(lam) || lam.degree() + mu.degree() != nu.degree()) return 0;
    if (mu.empty()) return lam == nu ? 1 : 0;

    const int rows = nu.rows();
    std::vector<std::vector<int>> grid(rows);
    for (int r = 0; r < rows; ++r) grid[r].assign(nu.parts()[r], 0);

    std::vector<std::pair<int, int>> cells;  // 0-based, reading order
    for (int r = 0; r < rows; ++r)
        for (int c = lam.at(r + 1); c < nu.parts()[r]; ++c) cells.emplace_back(r, c);

    std::vector<int> remaining(mu.parts());
    long count = 0;

    auto lattice_ok = [&]() {
        std::vector<int> cnt(mu.rows() + 2, 0);
        for (int r = 0; r < rows; ++r)
            for (int c = nu.parts()[r] - 1; c >= lam.at(r + 1); --c) {
                int v = grid[r][c];
                ++cnt[v];
                if (v >= 2 && cnt[v] > cnt[v - 1]) return false;
            }
        return true;
    };

    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            if (lattice_ok()) ++count;
            return;
        }
        auto [r, c] = cells[idx];
        for (int v = 1; v <= mu.rows(); ++v) {
            if (remaining[v - 1] == 0) continue;
            if (c > lam.at(r + 1) && grid[r][c - 1] > v) continue;  // row weakly increasing
            if (r > 0 && c < (int)grid[r - 1].size() && c >= lam.at(r) && grid[r - 1][c] >= v)
                continue;  // column strictly increasing
            grid[r][c] = v;
            --remaining[v - 1];
            self(self, idx + 1);
            ++remaining[v - 1];
            grid[r][c] = 0;
        }
    };
    rec(rec, 0);
    return count;
}

// s_lam * s_mu through the Jacobi-Trudi expansion of s_mu into signed products
// of complete homogeneous functions, each applied with the Pieri rule.
inline std::map<qsc::Partition, long> jt_pieri_product(const qsc::Partition& lam,
                                                       const qsc::Partition& mu) {
    using qsc::Partition;
    std::map<Partition, long> out;
    const int m = mu.rows();
    if (m == 0) {
        out[lam] = 1;
        return out;
    }
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int sign = 1;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        std::vector<int> strips;
        bool dead = false;
        for (int i = 0; i < m && !dead; ++i) {
            int d = mu.parts()[i] - (i + 1) + (perm[i] + 1);
            if (d < 0) dead = true;
            else if (d > 0) strips.push_back(d);
        }
        if (dead) continue;
        std::map<Partition, long> cur;
        cur[lam] = 1;
        for (int d : strips) {
            std::map<Partition, long> next;
            for (const auto& [p, c] : cur)
                for (const auto& q : qsc::pieri_row(p, d)) next[q] += c;
            cur = std::move(next);
        }
        for (const auto& [p, c] : cur) out[p] += sign * c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// All partitions of n (test-local copy).
inline std::vector<qsc::Partition> partitions_of(int n) {
    std::vector<qsc::Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(qsc::Partition(cur));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline std::vector<qsc::Partition> partitions_up_to(int n) {
    std::vector<qsc::Partition> out;
    for (int s = 0; s <= n; ++s)
        for (auto& p : partitions_of(s)) out.push_back(std::move(p));
    return out;
}

}  // namespace oracle
