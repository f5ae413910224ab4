#include "qsc/schur.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qsc {

void SymFunc::add(const Partition& lam, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(lam, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

mpz_class SymFunc::coeff(const Partition& lam) const {
    auto it = terms.find(lam);
    return it == terms.end() ? mpz_class(0) : it->second;
}

namespace {

// Enumerates LR tableaux of content mu grown on the base shape lam. Layer i
// (the boxes holding entry i+1) is a horizontal strip placed top row first;
// the lattice condition on the reverse reading word is enforced as the
// cumulative row-count inequality
//   sum_{s<=r} cnt_i(s) <= sum_{s<=r-1} cnt_{i-1}(s).
class LrGrow {
public:
    LrGrow(const Partition& lam, const Partition& mu, int max_rows, const Partition* target)
        : mu_(mu.parts()) {
        int r = max_rows > 0 ? max_rows : lam.rows() + std::max(mu.rows(), 1);
        if (target) r = std::min(r, std::max(target->rows(), lam.rows()));
        rows_ = std::max(r, 1);
        feasible_ = lam.rows() <= rows_;
        shape_.assign(rows_, 0);
        for (int i = 0; i < lam.rows() && i < rows_; ++i) shape_[i] = lam.parts()[i];
        if (target) {
            cap_.assign(rows_, 0);
            for (int i = 0; i < rows_; ++i) {
                cap_[i] = target->at(i + 1);
                if (shape_[i] > cap_[i]) feasible_ = false;
            }
        }
        layer_base_ = shape_;
        prev_cum_.assign(rows_, 0);
        cur_cnt_.assign(rows_, 0);
    }

    void run(const std::function<void(const std::vector<int>&)>& sink) {
        if (!feasible_) return;
        sink_ = &sink;
        layer(0);
    }

private:
    void layer(size_t i) {
        if (i == mu_.size()) {
            (*sink_)(shape_);
            return;
        }
        place(i, 0, mu_[i], 0);
    }

    // Free capacity below `row` as seen by the column-strict bound alone.
    int capacity_below(int row) const {
        int cap = 0;
        for (int r = row + 1; r < rows_; ++r) {
            int ub = layer_base_[r - 1];
            if (!cap_.empty()) ub = std::min(ub, cap_[r]);
            cap += std::max(0, ub - shape_[r]);
        }
        return cap;
    }

    void place(size_t i, int row, int remaining, int placed_cum) {
        if (row == rows_) {
            if (remaining != 0) return;
            auto saved_base = layer_base_;
            auto saved_prev = prev_cum_;
            int cum = 0;
            for (int r = 0; r < rows_; ++r) {
                cum += cur_cnt_[r];
                prev_cum_[r] = cum;
            }
            layer_base_ = shape_;
            auto saved_cnt = std::move(cur_cnt_);
            cur_cnt_.assign(rows_, 0);
            layer(i + 1);
            cur_cnt_ = std::move(saved_cnt);
            layer_base_ = std::move(saved_base);
            prev_cum_ = std::move(saved_prev);
            return;
        }
        int ub = row == 0 ? shape_[0] + remaining : layer_base_[row - 1];
        if (!cap_.empty()) ub = std::min(ub, cap_[row]);
        int amax = std::min(remaining, ub - shape_[row]);
        if (i > 0) {
            int ballot = row == 0 ? 0 : prev_cum_[row - 1];
            amax = std::min(amax, ballot - placed_cum);
        }
        int amin = std::max(0, remaining - capacity_below(row));
        for (int a = amax; a >= amin; --a) {
            shape_[row] += a;
            cur_cnt_[row] = a;
            place(i, row + 1, remaining - a, placed_cum + a);
            cur_cnt_[row] = 0;
            shape_[row] -= a;
        }
    }

    std::vector<int> mu_;
    int rows_ = 1;
    bool feasible_ = true;
    std::vector<int> shape_;
    std::vector<int> layer_base_;
    std::vector<int> prev_cum_;
    std::vector<int> cur_cnt_;
    std::vector<int> cap_;
    const std::function<void(const std::vector<int>&)>* sink_ = nullptr;
};

Partition shape_to_partition(const std::vector<int>& shape) {
    return Partition(std::vector<int>(shape.begin(), shape.end()));
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
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

// All partitions contained in `bound`.
std::vector<Partition> subpartitions(const Partition& bound) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int prev) -> void {
        out.push_back(Partition(cur));
        if (row >= bound.rows()) return;
        int ub = std::min(prev, bound.at(row + 1));
        for (int v = ub; v >= 1; --v) {
            cur.push_back(v);
            self(self, row + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, bound.at(1));
    return out;
}

}  // namespace

mpz_class lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (!nu.contains(lam)) return 0;
    if (lam.degree() + mu.degree() != nu.degree()) return 0;
    mpz_class count = 0;
    LrGrow grow(lam, mu, 0, &nu);
    grow.run([&](const std::vector<int>& shape) {
        if (shape_to_partition(shape) == nu) ++count;
    });
    return count;
}

SymFunc schur_product_rows(const Partition& lam, const Partition& mu, int max_rows) {
    SymFunc out;
    if (max_rows > 0 && lam.rows() > max_rows) return out;
    if (mu.empty()) {
        out.add(lam, 1);
        return out;
    }
    LrGrow grow(lam, mu, max_rows, nullptr);
    grow.run([&](const std::vector<int>& shape) { out.add(shape_to_partition(shape), 1); });
    return out;
}

SymFunc schur_product(const Partition& lam, const Partition& mu) {
    return schur_product_rows(lam, mu, 0);
}

CohClass cup_product(const CohClass& a, const CohClass& b, const BoxContext& ctx) {
    if (a.ctx != ctx || b.ctx != ctx)
        throw std::invalid_argument("cup_product: context mismatch");
    CohClass out(ctx);
    for (const auto& [lam, ca] : a.terms) {
        if (!fits_box(lam, ctx))
            throw std::invalid_argument("cup_product: " + lam.str() + " outside the box");
        for (const auto& [mu, cb] : b.terms) {
            if (!fits_box(mu, ctx))
                throw std::invalid_argument("cup_product: " + mu.str() + " outside the box");
            SymFunc f = schur_product_rows(lam, mu, ctx.l());
            for (const auto& [nu, c] : f.terms)
                if (nu.at(1) <= ctx.k) out.add(nu, ca * cb * mpq_class(c));
        }
    }
    return out;
}

mpz_class lr_sum_lhs(const Partition& lam, const Partition& mu) {
    mpz_class total = 0;
    if (mu.empty()) return 1;
    LrGrow grow(lam, mu, 0, nullptr);
    grow.run([&](const std::vector<int>&) { ++total; });
    return total;
}

mpz_class lr_filling_count(const Partition& lam, const Partition& nu) {
    if (!lam.contains(nu)) return 0;
    mpz_class total = 0;
    for (const auto& mu : partitions_of(lam.degree() - nu.degree()))
        total += lr_coefficient(nu, mu, lam);
    return total;
}

mpz_class lr_sum_rhs(const Partition& lam, const Partition& mu) {
    // Common subdiagrams of lam and mu are the partitions inside the
    // row-wise minimum.
    int rows = std::min(lam.rows(), mu.rows());
    std::vector<int> floor(rows);
    for (int i = 0; i < rows; ++i) floor[i] = std::min(lam.parts()[i], mu.parts()[i]);
    mpz_class total = 0;
    for (const auto& nu : subpartitions(Partition(std::move(floor))))
        total += lr_filling_count(lam, nu) * lr_filling_count(mu, nu);
    return total;
}

std::vector<Partition> pieri_row(const Partition& lam, int r, int max_rows) {
    if (r < 0) throw std::invalid_argument("pieri_row: negative strip size");
    std::vector<Partition> out;
    int rows = max_rows > 0 ? max_rows : lam.rows() + 1;
    if (lam.rows() > rows) return out;
    std::vector<int> shape(rows, 0);
    for (int i = 0; i < lam.rows(); ++i) shape[i] = lam.parts()[i];
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (row == rows) {
            if (remaining == 0) out.push_back(shape_to_partition(shape));
            return;
        }
        int base = shape[row];
        int ub = row == 0 ? base + remaining : std::min(base + remaining, lam.at(row));
        for (int v = ub; v >= base; --v) {
            shape[row] = v;
            self(self, row + 1, remaining - (v - base));
            shape[row] = base;
        }
    };
    rec(rec, 0, r);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace qsc
