#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chaincodes/multipoly.hpp"
#include "chaincodes/poly.hpp"
#include "chaincodes/ring.hpp"

namespace chaincodes {

/// Exact module cardinality q^exponent, kept factored so large codes never
/// overflow; str() renders the exact decimal value.
struct Cardinality {
    std::uint64_t base = 1;
    std::uint64_t exponent = 0;
    bool fits_u64() const;
    std::uint64_t as_u64() const; // pre: fits_u64()
    std::string str() const;
    bool operator==(const Cardinality& o) const;
};

/// Position order for the echelon form: ranks enumerate exponent tuples by
/// ascending total degree, ties broken lexicographically; the leftmost rank
/// is the pivot slot.
struct PositionOrder {
    std::vector<std::uint32_t> pos_of_rank;
    std::vector<std::uint32_t> rank_of_pos;
    static PositionOrder canonical(const std::vector<std::size_t>& dims);
    /// Blocks by descending exponent of the last variable; within a block the
    /// remaining variables follow the canonical order. Used for the graded
    /// echelon that reads off per-level ideals.
    static PositionOrder graded_last(const std::vector<std::size_t>& dims);
};

/// The canonical shift-closed R-module span of a set of codewords: a
/// gamma-layered echelon basis with one row per achieved pivot position.
/// Equal codes produce identical CodeSpan data.
class CodeSpan {
  public:
    static CodeSpan from_generators(const RingPtr& ring, const std::vector<std::size_t>& dims,
                                    const std::vector<MultiPoly>& gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t ambient_size() const { return order_.pos_of_rank.size(); }
    bool is_zero() const { return rows_.empty(); }
    std::size_t row_count() const { return rows_.size(); }

    bool contains(const MultiPoly& f) const;
    Cardinality cardinality() const;
    bool operator==(const CodeSpan& o) const;
    bool operator!=(const CodeSpan& o) const { return !(*this == o); }

    std::vector<MultiPoly> basis() const;
    /// Pivot data: (exponent tuple, gamma valuation) per row.
    std::vector<std::pair<std::vector<std::size_t>, std::uint32_t>> pivots() const;

    struct Row {
        std::vector<std::uint64_t> v; // rank-ordered coefficients
        std::uint32_t rank;
        std::uint32_t val;
    };
    const std::vector<Row>& rows() const { return rows_; }
    const PositionOrder& order() const { return order_; }
    MultiPoly row_as_multipoly(const Row& row) const;

  private:
    RingPtr ring_;
    std::vector<std::size_t> dims_;
    PositionOrder order_;
    std::vector<Row> rows_;
};

inline CodeSpan span_from_generators(const RingPtr& ring, const std::vector<std::size_t>& dims,
                                     const std::vector<MultiPoly>& gens) {
    return CodeSpan::from_generators(ring, dims, gens);
}
inline bool membership(const CodeSpan& span, const MultiPoly& f) { return span.contains(f); }
inline Cardinality cardinality(const CodeSpan& span) { return span.cardinality(); }
inline bool codes_equal(const CodeSpan& a, const CodeSpan& b) { return a == b; }

/// One generator gamma^{gamma_exp} * monic of the Theorem-style staircase.
struct CanonicalGenEntry {
    std::uint32_t gamma_exp;
    Poly monic;
};

/// Canonical generating set of a 1D cyclic code: gamma exponents strictly
/// decrease while the monic degrees strictly increase, and the entry count
/// is at most min(nu, last degree + 1).
struct CanonicalGenSet {
    RingPtr ring;
    std::size_t modulus = 0;
    std::vector<CanonicalGenEntry> entries;
    bool empty() const { return entries.empty(); }
    std::vector<Poly> generator_polys() const;
    std::vector<MultiPoly> generator_multipolys() const;
};

/// Theorem-style canonical generators of a univariate span, computed from
/// the tower of colon ideals (span : gamma^a) and certified by membership.
CanonicalGenSet canonical_generators(const CodeSpan& span);

} // namespace chaincodes
