#pragma once

#include <cstdint>
#include <vector>

#include "chaincodes/poly.hpp"
#include "chaincodes/ring.hpp"

namespace chaincodes {

/// A class of R[x_1, ..., x_k]/(x_1^{m_1} - 1, ..., x_k^{m_k} - 1), stored
/// as the dense exponent-box array of size m_1 * ... * m_k. The flat index
/// of exponent tuple (e_1, ..., e_k) is e_1 + m_1*(e_2 + m_2*(...)).
class MultiPoly {
  public:
    MultiPoly() = default;
    MultiPoly(RingPtr ring, std::vector<std::size_t> dims);
    MultiPoly(RingPtr ring, std::vector<std::size_t> dims, std::vector<std::uint64_t> coeffs);
    static MultiPoly from_poly(const Poly& f, std::size_t m); // k = 1
    static MultiPoly constant(RingPtr ring, std::vector<std::size_t> dims, std::uint64_t code);

    const RingPtr& ring() const { return ring_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t size() const { return c_.size(); }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::vector<std::uint64_t>& coeffs() { return c_; }
    bool is_zero() const;

    std::size_t flat_index(const std::vector<std::size_t>& exps) const;
    std::vector<std::size_t> exponents_of(std::size_t flat) const;
    std::uint64_t coeff(const std::vector<std::size_t>& exps) const { return c_[flat_index(exps)]; }
    void set_coeff(const std::vector<std::size_t>& exps, std::uint64_t code) {
        c_[flat_index(exps)] = code;
    }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const; // fold each variable independently
    MultiPoly operator-() const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly scaled(std::uint64_t code) const;
    MultiPoly shifted(std::size_t var) const; // * x_var
    MultiPoly pow(std::uint64_t e) const;
    /// Degree in the given variable (largest exponent with a nonzero slice),
    /// or 0 for the zero polynomial.
    std::size_t var_degree(std::size_t var) const;
    /// The coefficient of x_var^level as a polynomial in the remaining vars.
    MultiPoly coeff_slice(std::size_t var, std::size_t level) const;
    /// Substitute x_var <- value (value^{m_var} must be 1), collapsing to the
    /// remaining variables.
    MultiPoly eval_var(std::size_t var, std::uint64_t value) const;
    MultiPoly permuted_dims(const std::vector<std::size_t>& perm) const;

    Poly as_poly() const; // k = 1 only

  private:
    void check_shape(const MultiPoly& o) const;
    const ChainRing& r() const { return *ring_; }
    RingPtr ring_;
    std::vector<std::size_t> dims_;
    std::vector<std::uint64_t> c_;
};

MultiPoly multi_mul_mod(const MultiPoly& a, const MultiPoly& b);
/// 2D transpose: dims (m, n) -> (n, m), exponent (i, j) -> (j, i).
MultiPoly transpose(const MultiPoly& f);
/// Substitute y -> zeta_pow in a 2D class over dims (m, n); throws
/// RootOrderViolation unless zeta_pow^n = 1.
QuotPoly evaluate_y(const MultiPoly& f, std::uint64_t zeta_pow);
/// Exponent-support separability: the support equals the product of its
/// per-variable projections.
bool is_separable(const MultiPoly& f);

} // namespace chaincodes
