#pragma once

#include <cstdint>
#include <vector>

#include "chaincodes/ring.hpp"

namespace chaincodes {

/// Dense univariate polynomial over a chain ring. Coefficient codes are
/// stored ascending by degree with no trailing zeros; the zero polynomial
/// stores nothing and reports is_zero() instead of a numeric degree.
class Poly {
  public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, std::vector<std::uint64_t> coeffs);

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, std::uint64_t code);
    static Poly monomial(RingPtr ring, std::uint64_t code, std::size_t degree);

    const RingPtr& ring() const { return ring_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const; // pre: !is_zero()
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    bool is_monic() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const; // plain product in R[x]
    Poly operator-() const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(std::uint64_t code) const;
    Poly times_gamma_pow(std::uint32_t k) const;
    Poly shifted_up(std::size_t k) const; // * x^k, no wrap
    std::uint64_t eval(std::uint64_t code) const;
    /// Remainder after division by a monic divisor (exact over any ring).
    Poly rem_monic(const Poly& divisor) const;
    /// Coefficient-wise canonical representative mod gamma^k.
    Poly truncated_gamma(std::uint32_t k) const;

  private:
    void normalize();
    const ChainRing& r() const { return *ring_; }
    RingPtr ring_;
    std::vector<std::uint64_t> c_;
};

/// Coefficient-wise residue map into F_q[x].
FqPoly residue_poly(const Poly& f);
/// Canonical lift of an F_q[x] polynomial (digit-0 section).
Poly lift_poly(const RingPtr& ring, const FqPoly& f);

/// A class of R[x]/(x^m - 1): the representative of degree < m plus the
/// modulus exponent.
class QuotPoly {
  public:
    QuotPoly() = default;
    QuotPoly(Poly base, std::size_t m);

    const Poly& base() const { return base_; }
    std::size_t modulus() const { return m_; }

    QuotPoly operator+(const QuotPoly& o) const;
    QuotPoly operator-(const QuotPoly& o) const;
    QuotPoly operator*(const QuotPoly& o) const;
    bool operator==(const QuotPoly& o) const { return m_ == o.m_ && base_ == o.base_; }

  private:
    Poly base_;
    std::size_t m_ = 0;
};

inline QuotPoly poly_mul_mod(const QuotPoly& a, const QuotPoly& b) { return a * b; }

} // namespace chaincodes
