#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "chaincodes/ring.hpp"

namespace chaincodes::detail {

/// Canonical gamma-layered echelon form (Howell form) of an R-submodule of
/// R^W over a finite chain ring. Vectors are indexed by rank, i.e. already
/// permuted into the chosen position order; the pivot of a row is its first
/// nonzero rank and carries coefficient exactly gamma^val after unit
/// normalization. Shadow rows gamma^{nu-val} * row are folded in so that
/// greedy reduction decides membership, and optional shift permutations are
/// saturated so the span is closed under them. After build() the form is the
/// unique canonical representation of the span: entries above each pivot are
/// reduced modulo gamma^{pivot val}.
class HowellForm {
  public:
    HowellForm(const ChainRing& ring, std::size_t width) : R_(ring), W_(width), row_at_rank_(width, -1) {}

    void set_shift_perms(std::vector<std::vector<std::uint32_t>> perms) { shifts_ = std::move(perms); }

    void add(std::vector<std::uint64_t> v) {
        if (v.size() != W_) throw SpecMismatch("vector width mismatch");
        work_.push_back(std::move(v));
    }

    void build();

    /// Greedy membership test; valid once build() has run.
    bool reduces_to_zero(std::vector<std::uint64_t> v) const;

    struct Row {
        std::vector<std::uint64_t> v;
        std::uint32_t rank;
        std::uint32_t val;
    };
    /// Rows sorted by pivot rank.
    const std::vector<Row>& rows() const { return sorted_; }
    std::size_t width() const { return W_; }

  private:
    int lead(const std::vector<std::uint64_t>& v, std::size_t from = 0) const;
    void normalize(std::vector<std::uint64_t>& v, std::size_t l, std::uint32_t w) const;
    void axpy(std::vector<std::uint64_t>& v, std::uint64_t f, const std::vector<std::uint64_t>& row,
              std::size_t from) const;
    void process(std::vector<std::uint64_t> v);
    /// Reduce in place; returns true if zero, else leaves the residual in v.
    bool reduce(std::vector<std::uint64_t>& v) const;
    void cleanup();
    void sort_rows();

    const ChainRing& R_;
    std::size_t W_;
    std::vector<std::vector<std::uint32_t>> shifts_;
    std::vector<Row> rows_;
    std::vector<int> row_at_rank_;
    std::deque<std::vector<std::uint64_t>> work_;
    std::deque<std::size_t> dirty_;
    std::vector<Row> sorted_;
};

} // namespace chaincodes::detail
