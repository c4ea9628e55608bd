#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chaincodes/errors.hpp"

namespace chaincodes {

/// The residue field F_q, q = p^r, realized as F_p[w]/(f(w)) for the
/// lexicographically smallest monic irreducible f of degree r over F_p.
/// Elements are codes in [0, q): code = sum_i c_i p^i where c_i is the
/// coefficient of w^i.
class ResidueField {
  public:
    ResidueField(std::uint32_t p, std::uint32_t r);

    std::uint32_t p;
    std::uint32_t r;
    std::uint32_t q;
    std::vector<std::uint32_t> modulus; // ascending coefficients, size r+1, monic

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const; // throws NotAUnit on 0
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t from_int(std::int64_t v) const; // image of an integer (prime subfield)

    /// Deterministic ordering key: lexicographic on (c_0, ..., c_{r-1}).
    std::uint64_t rank(std::uint32_t a) const;
    std::uint32_t from_rank(std::uint64_t k) const;

    std::string to_string(std::uint32_t a) const;

    bool operator==(const ResidueField& o) const { return p == o.p && r == o.r; }

  private:
    std::uint32_t mul_direct(std::uint32_t a, std::uint32_t b) const;
    std::vector<std::uint32_t> mul_table_; // q*q when small, else empty
    std::vector<std::uint32_t> inv_table_;
};

/// Dense polynomials over F_q: ascending coefficient codes, no trailing zeros
/// (the zero polynomial is the empty vector).
using FqPoly = std::vector<std::uint32_t>;

void fq_normalize(FqPoly& f);
bool fq_is_zero(const FqPoly& f);
std::size_t fq_degree(const FqPoly& f); // pre: !fq_is_zero(f)
FqPoly fq_add(const ResidueField& F, const FqPoly& a, const FqPoly& b);
FqPoly fq_sub(const ResidueField& F, const FqPoly& a, const FqPoly& b);
FqPoly fq_mul(const ResidueField& F, const FqPoly& a, const FqPoly& b);
FqPoly fq_scale(const ResidueField& F, std::uint32_t c, const FqPoly& a);
/// Quotient/remainder by a nonzero divisor (leading coefficient inverted).
void fq_divrem(const ResidueField& F, const FqPoly& a, const FqPoly& b, FqPoly& quo, FqPoly& rem);
FqPoly fq_make_monic(const ResidueField& F, const FqPoly& a);
bool fq_is_monic(const ResidueField& F, const FqPoly& a);
FqPoly fq_gcd(const ResidueField& F, const FqPoly& a, const FqPoly& b); // monic (or zero)
/// g = gcd(a, b) monic, with u*a + v*b = g.
FqPoly fq_xgcd(const ResidueField& F, const FqPoly& a, const FqPoly& b, FqPoly& u, FqPoly& v);
FqPoly fq_xn_minus_1(const ResidueField& F, std::size_t n);

} // namespace chaincodes
