#include "chaincodes/detail/howell.hpp"

#include <algorithm>

namespace chaincodes::detail {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

int HowellForm::lead(const std::vector<u64>& v, std::size_t from) const {
    for (std::size_t i = from; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

void HowellForm::normalize(std::vector<u64>& v, std::size_t l, u32 w) const {
    u64 unit = R_.div_gamma_pow(v[l], w);
    if (unit == R_.one()) return;
    u64 s = R_.inverse(unit);
    for (std::size_t i = l; i < v.size(); ++i) v[i] = R_.mul(v[i], s);
}

void HowellForm::axpy(std::vector<u64>& v, u64 f, const std::vector<u64>& row, std::size_t from) const {
    for (std::size_t i = from; i < v.size(); ++i)
        if (row[i] != 0) v[i] = R_.sub(v[i], R_.mul(f, row[i]));
}

void HowellForm::process(std::vector<u64> v) {
    std::size_t scan = 0;
    while (true) {
        int l = lead(v, scan);
        if (l < 0) return;
        std::size_t rank = static_cast<std::size_t>(l);
        scan = rank;
        u32 w = R_.valuation(v[rank]);
        int idx = row_at_rank_[rank];
        if (idx < 0) {
            normalize(v, rank, w);
            rows_.push_back(Row{std::move(v), static_cast<u32>(rank), w});
            row_at_rank_[rank] = static_cast<int>(rows_.size() - 1);
            dirty_.push_back(rows_.size() - 1);
            return;
        }
        Row& row = rows_[static_cast<std::size_t>(idx)];
        if (w >= row.val) {
            u64 f = R_.mul_gamma_pow(R_.div_gamma_pow(v[rank], w), w - row.val);
            axpy(v, f, row.v, rank);
        } else {
            normalize(v, rank, w);
            std::swap(row.v, v);
            row.val = w;
            work_.push_back(std::move(v)); // the displaced old row
            dirty_.push_back(static_cast<std::size_t>(idx));
            return;
        }
    }
}

bool HowellForm::reduce(std::vector<u64>& v) const {
    std::size_t scan = 0;
    while (true) {
        int l = lead(v, scan);
        if (l < 0) return true;
        std::size_t rank = static_cast<std::size_t>(l);
        scan = rank;
        int idx = row_at_rank_[rank];
        if (idx < 0) return false;
        const Row& row = rows_[static_cast<std::size_t>(idx)];
        u32 w = R_.valuation(v[rank]);
        if (w < row.val) return false;
        u64 f = R_.mul_gamma_pow(R_.div_gamma_pow(v[rank], w), w - row.val);
        axpy(v, f, row.v, rank);
    }
}

bool HowellForm::reduces_to_zero(std::vector<u64> v) const { return reduce(v); }

void HowellForm::build() {
    std::vector<u64> tmp;
    while (!work_.empty() || !dirty_.empty()) {
        if (!work_.empty()) {
            std::vector<u64> v = std::move(work_.front());
            work_.pop_front();
            process(std::move(v));
            continue;
        }
        std::size_t idx = dirty_.front();
        dirty_.pop_front();
        // Obligations checked against the row's current value: the shadow
        // gamma^{nu - val} * row and every shift image must already reduce.
        bool violated = false;
        if (rows_[idx].val > 0) {
            u32 k = R_.nu - rows_[idx].val;
            tmp.assign(W_, 0);
            const auto& rv = rows_[idx].v;
            for (std::size_t i = rows_[idx].rank; i < W_; ++i) tmp[i] = R_.mul_gamma_pow(rv[i], k);
            if (!reduce(tmp)) {
                work_.push_back(tmp);
                violated = true;
            }
        }
        for (const auto& perm : shifts_) {
            tmp.assign(W_, 0);
            const auto& rv = rows_[idx].v;
            for (std::size_t i = 0; i < W_; ++i)
                if (rv[i] != 0) tmp[perm[i]] = rv[i];
            if (!reduce(tmp)) {
                work_.push_back(tmp);
                violated = true;
            }
        }
        if (violated) dirty_.push_back(idx);
    }
    cleanup();
    sort_rows();
}

void HowellForm::cleanup() {
    // Reduce every entry sitting above a pivot to its canonical representative
    // modulo gamma^{pivot val}. Columns are processed left to right; an axpy
    // at column c only touches columns >= c, so earlier columns stay clean.
    for (std::size_t rank = 0; rank < W_; ++rank) {
        int j = row_at_rank_[rank];
        if (j < 0) continue;
        const Row& pivot_row = rows_[static_cast<std::size_t>(j)];
        for (auto& other : rows_) {
            if (other.rank >= rank) continue;
            u64 c = other.v[rank];
            u64 keep = R_.truncate_gamma(c, pivot_row.val);
            if (c == keep) continue;
            u64 f = R_.div_gamma_pow(R_.sub(c, keep), pivot_row.val);
            axpy(other.v, f, pivot_row.v, rank);
        }
    }
}

void HowellForm::sort_rows() {
    sorted_ = rows_;
    std::sort(sorted_.begin(), sorted_.end(), [](const Row& a, const Row& b) { return a.rank < b.rank; });
}

} // namespace chaincodes::detail
