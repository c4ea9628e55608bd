#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chaincodes/errors.hpp"
#include "chaincodes/fq.hpp"

namespace chaincodes {

enum class RingFamily { IntegerModular, GammaExtension };

class ChainRing;
using RingPtr = std::shared_ptr<const ChainRing>;

/// A finite chain ring in one of two families:
///   IntegerModular   Z_{p^nu}, gamma = p
///   GammaExtension   F_{p^r}[g]/(g^nu), gamma = g
/// Elements are codes in [0, q^nu). For IntegerModular the code is the
/// integer itself; for GammaExtension it packs the gamma-digit vector
/// (d_0, ..., d_{nu-1}) over F_q as sum_i d_i q^i.
class ChainRing {
  public:
    static RingPtr integers_mod(std::uint64_t p, std::uint32_t nu);
    static RingPtr gamma_extension(std::uint32_t p, std::uint32_t r, std::uint32_t nu);

    RingFamily family;
    std::uint64_t p;
    std::uint32_t r;
    std::uint32_t nu;
    std::uint64_t q;     // residue field size p^r
    std::uint64_t order; // |R| = q^nu

    const ResidueField& field() const { return field_; }

    std::uint64_t zero() const { return 0; }
    std::uint64_t one() const { return one_; }
    std::uint64_t gamma() const { return gamma_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inverse(std::uint64_t a) const; // throws NotAUnit

    bool is_unit(std::uint64_t a) const { return residue(a) != 0; }
    std::uint32_t valuation(std::uint64_t a) const; // in [0, nu], valuation(0) = nu
    std::uint32_t residue(std::uint64_t a) const;   // F_q code
    std::uint64_t lift(std::uint32_t fq_code) const; // canonical section of residue

    std::uint64_t mul_gamma_pow(std::uint64_t a, std::uint32_t k) const;
    /// Exact division by gamma^k; requires valuation(a) >= k.
    std::uint64_t div_gamma_pow(std::uint64_t a, std::uint32_t k) const;
    /// Canonical representative of a modulo gamma^k (digits >= k dropped).
    std::uint64_t truncate_gamma(std::uint64_t a, std::uint32_t k) const;

    std::uint64_t from_int(std::int64_t v) const;

    /// Deterministic total order on elements: integers by value, gamma
    /// extensions by lexicographic digit vectors (digit 0 first).
    std::uint64_t element_rank(std::uint64_t a) const;
    std::uint64_t element_from_rank(std::uint64_t k) const;

    bool same_spec(const ChainRing& o) const {
        return family == o.family && p == o.p && r == o.r && nu == o.nu;
    }
    std::string spec_string() const; // "Z/25" or "F4[g]/(g^2)"
    std::string to_string(std::uint64_t a) const;

    /// A primitive n-th root of unity; requires n | q - 1. Deterministic:
    /// the smallest primitive n-th root of F_q under element_rank is lifted
    /// (Teichmueller power for Z_{p^nu}, subfield embedding otherwise) and
    /// verified; Newton lifting is the fallback.
    std::uint64_t find_primitive_root(std::uint64_t n) const;
    /// Newton lift of a simple root omega of x^n - 1 over F_q.
    std::uint64_t hensel_lift_root(std::uint64_t n, std::uint32_t omega) const;

  private:
    ChainRing(RingFamily fam, std::uint64_t p, std::uint32_t r, std::uint32_t nu);
    std::uint64_t mul_direct(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t add_direct(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg_direct(std::uint64_t a) const;
    std::uint32_t digit(std::uint64_t a, std::uint32_t i) const;

    ResidueField field_;
    std::uint64_t one_;
    std::uint64_t gamma_;
    std::vector<std::uint64_t> qpow_;   // q^i for digit extraction
    std::vector<std::uint64_t> ppow_;   // p^i for IntegerModular
    std::vector<std::uint32_t> mul_table_; // order*order when small
    std::vector<std::uint32_t> add_table_;
    std::vector<std::uint32_t> neg_table_;
    std::vector<std::uint32_t> val_table_;
};

/// A ring element bound to its ring; the friendly value-semantic wrapper
/// around the raw codes used by the dense kernels.
class RingElement {
  public:
    RingElement() = default;
    RingElement(RingPtr ring, std::uint64_t code) : ring_(std::move(ring)), code_(code) {}
    static RingElement from_int(const RingPtr& ring, std::int64_t v) {
        return RingElement(ring, ring->from_int(v));
    }

    const RingPtr& ring() const { return ring_; }
    std::uint64_t code() const { return code_; }

    RingElement operator+(const RingElement& o) const { return wrap(r().add(code_, check(o))); }
    RingElement operator-(const RingElement& o) const { return wrap(r().sub(code_, check(o))); }
    RingElement operator*(const RingElement& o) const { return wrap(r().mul(code_, check(o))); }
    RingElement operator-() const { return wrap(r().neg(code_)); }
    RingElement inverse() const { return wrap(r().inverse(code_)); }
    std::uint32_t valuation() const { return r().valuation(code_); }
    std::uint32_t residue() const { return r().residue(code_); }
    bool is_unit() const { return r().is_unit(code_); }
    bool is_zero() const { return code_ == 0; }
    bool operator==(const RingElement& o) const {
        return r().same_spec(*o.ring_) && code_ == o.code_;
    }
    std::string str() const { return r().to_string(code_); }

  private:
    const ChainRing& r() const { return *ring_; }
    RingElement wrap(std::uint64_t c) const { return RingElement(ring_, c); }
    std::uint64_t check(const RingElement& o) const {
        if (!r().same_spec(*o.ring_)) throw SpecMismatch("ring elements from different rings");
        return o.code_;
    }
    RingPtr ring_;
    std::uint64_t code_ = 0;
};

} // namespace chaincodes
