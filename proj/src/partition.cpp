#include "qsc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qsc {

namespace {

void check_weakly_decreasing(const std::vector<int>& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw std::invalid_argument("partition parts must be nonnegative");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_weakly_decreasing(parts_);
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::row(int boxes) {
    if (boxes < 0) throw std::invalid_argument("row size must be nonnegative");
    if (boxes == 0) return Partition{};
    return Partition{boxes};
}

int Partition::degree() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::at(int i) const {
    if (i < 1) throw std::out_of_range("partition rows are 1-based");
    return i <= rows() ? parts_[i - 1] : 0;
}

bool Partition::contains(const Partition& mu) const {
    if (mu.rows() > rows()) return false;
    for (int i = 0; i < mu.rows(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition{};
    std::vector<int> t(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[j];
    return Partition(std::move(t));
}

std::string Partition::str() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

bool canonical_less(const Partition& a, const Partition& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.parts() > b.parts();
}

BoxContext::BoxContext(int k_, int n_) : k(k_), n(n_) {
    if (k <= 0 || n <= k)
        throw std::invalid_argument("box context requires 0 < k < n");
}

Partition BoxContext::point_class() const {
    return Partition(std::vector<int>(l(), k));
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

bool fits_box(const Partition& lam, const BoxContext& ctx) {
    return lam.rows() <= ctx.l() && lam.at(1) <= ctx.k;
}

namespace {

std::vector<Partition> enumerate_rectangle(int max_rows, int max_cols) {
    std::vector<Partition> out;
    std::vector<int> stack;
    auto gen = [&](auto&& self, int row, int bound) -> void {
        out.push_back(Partition(stack));
        if (row >= max_rows) return;
        for (int v = bound; v >= 1; --v) {
            stack.push_back(v);
            self(self, row + 1, v);
            stack.pop_back();
        }
    };
    gen(gen, 0, max_cols);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace

std::vector<Partition> enumerate_box(const BoxContext& ctx) {
    return enumerate_rectangle(ctx.l(), ctx.k);
}

bool in_gs(const Partition& lam, const BoxContext& ctx) {
    return lam.rows() <= ctx.gs_rows() && lam.at(1) <= ctx.gs_cols();
}

std::vector<Partition> enumerate_gs(const BoxContext& ctx) {
    return enumerate_rectangle(ctx.gs_rows(), ctx.gs_cols());
}

int durfee(const Partition& lam) {
    int d = 0;
    while (d < lam.rows() && lam.at(d + 1) >= d + 1) ++d;
    return d;
}

Partition poincare_dual(const Partition& lam, const BoxContext& ctx) {
    if (!fits_box(lam, ctx))
        throw std::invalid_argument("poincare_dual: " + lam.str() + " outside the box");
    const int l = ctx.l();
    std::vector<int> out(l);
    for (int i = 1; i <= l; ++i) out[i - 1] = ctx.k - lam.at(l + 1 - i);
    return Partition(std::move(out));
}

Partition conjugate_diagram(const Partition& lam, const BoxContext& ctx) {
    if (!fits_box(lam, ctx))
        throw std::invalid_argument("conjugate_diagram: " + lam.str() + " outside the box");
    const int l = ctx.l();
    const int d = durfee(lam);
    std::vector<int> out(l);
    for (int i = 1; i <= l; ++i) {
        if (i <= d)
            out[i - 1] = d + ctx.k - lam.at(d - i + 1);
        else
            out[i - 1] = d - lam.at(l - i + d + 1);
    }
    return Partition(std::move(out));
}

Partition embed(const Partition& alpha, const Partition& beta, const BoxContext& ctx) {
    if (!in_gs(alpha, ctx) || !in_gs(beta, ctx))
        throw std::invalid_argument("embed: arguments must lie in G_S");
    const int l = ctx.l();
    const int d = durfee(alpha);
    std::vector<int> out(l);
    for (int i = 1; i <= l; ++i) {
        if (i <= d)
            out[i - 1] = d + ctx.k - alpha.at(d - i + 1);
        else
            out[i - 1] = beta.at(i - d) + d - alpha.at(l - i + d + 1);
    }
    return Partition(std::move(out));
}

Partition gs_from_invariant(const Partition& lam, const BoxContext& ctx) {
    if (!fits_box(lam, ctx))
        throw std::invalid_argument("gs_from_invariant: " + lam.str() + " outside the box");
    if (lam.degree() % ctx.n != 0)
        throw std::invalid_argument("gs_from_invariant: degree of " + lam.str() +
                                    " is nonzero mod n");
    if (conjugate_diagram(lam, ctx) != lam)
        throw std::invalid_argument("gs_from_invariant: " + lam.str() +
                                    " is not conjugation-invariant");
    const int d = durfee(lam);
    // Invariance with degree 0 mod n forces an even Durfee square.
    if (d % 2 != 0)
        throw std::invalid_argument("gs_from_invariant: odd Durfee square");
    std::vector<int> out(ctx.gs_rows());
    for (int i = 1; i <= ctx.gs_rows(); ++i) {
        int v = lam.at(d / 2 + i) - d / 2;
        out[i - 1] = std::max(v, 0);
    }
    Partition mu(std::move(out));
    if (!in_gs(mu, ctx) || embed(mu, mu, ctx) != lam)
        throw std::invalid_argument("gs_from_invariant: construction does not invert");
    return mu;
}

BasisIndex::BasisIndex(const BoxContext& ctx_) : ctx(ctx_), order(enumerate_box(ctx_)) {
    for (int i = 0; i < size(); ++i) pos_[order[i]] = i;
}

int BasisIndex::index_of(const Partition& lam) const {
    auto it = pos_.find(lam);
    return it == pos_.end() ? -1 : it->second;
}

}  // namespace qsc
