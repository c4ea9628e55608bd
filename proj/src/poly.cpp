#include "chaincodes/poly.hpp"

#include <algorithm>

namespace chaincodes {

using u64 = std::uint64_t;

Poly::Poly(RingPtr ring, std::vector<std::uint64_t> coeffs)
    : ring_(std::move(ring)), c_(std::move(coeffs)) {
    normalize();
}

Poly Poly::constant(RingPtr ring, std::uint64_t code) {
    return Poly(std::move(ring), std::vector<u64>{code});
}

Poly Poly::monomial(RingPtr ring, std::uint64_t code, std::size_t degree) {
    std::vector<u64> c(degree + 1, 0);
    c[degree] = code;
    return Poly(std::move(ring), std::move(c));
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t Poly::degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero polynomial");
    return c_.size() - 1;
}

bool Poly::is_monic() const { return !is_zero() && c_.back() == r().one(); }

Poly Poly::operator+(const Poly& o) const {
    if (!r().same_spec(*o.ring_)) throw SpecMismatch("polynomials over different rings");
    std::vector<u64> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = r().add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    return Poly(ring_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<u64> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = r().neg(c_[i]);
    return Poly(ring_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (!r().same_spec(*o.ring_)) throw SpecMismatch("polynomials over different rings");
    if (is_zero() || o.is_zero()) return Poly(ring_);
    std::vector<u64> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = r().add(c[i + j], r().mul(c_[i], o.c_[j]));
    }
    return Poly(ring_, std::move(c));
}

bool Poly::operator==(const Poly& o) const {
    return ring_ && o.ring_ && r().same_spec(*o.ring_) && c_ == o.c_;
}

Poly Poly::scaled(std::uint64_t code) const {
    std::vector<u64> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = r().mul(c_[i], code);
    return Poly(ring_, std::move(c));
}

Poly Poly::times_gamma_pow(std::uint32_t k) const {
    std::vector<u64> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = r().mul_gamma_pow(c_[i], k);
    return Poly(ring_, std::move(c));
}

Poly Poly::shifted_up(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<u64> c(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), c.begin() + static_cast<std::ptrdiff_t>(k));
    return Poly(ring_, std::move(c));
}

std::uint64_t Poly::eval(std::uint64_t code) const {
    u64 acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = r().add(r().mul(acc, code), c_[i]);
    return acc;
}

Poly Poly::rem_monic(const Poly& divisor) const {
    if (!divisor.is_monic()) throw std::invalid_argument("divisor must be monic");
    std::vector<u64> rem = c_;
    const auto& d = divisor.c_;
    while (rem.size() >= d.size()) {
        u64 lead = rem.back();
        if (lead != 0) {
            std::size_t shift = rem.size() - d.size();
            for (std::size_t i = 0; i + 1 < d.size(); ++i)
                rem[i + shift] = r().sub(rem[i + shift], r().mul(lead, d[i]));
        }
        rem.pop_back();
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return Poly(ring_, std::move(rem));
}

Poly Poly::truncated_gamma(std::uint32_t k) const {
    std::vector<u64> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = r().truncate_gamma(c_[i], k);
    return Poly(ring_, std::move(c));
}

FqPoly residue_poly(const Poly& f) {
    FqPoly out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f.ring()->residue(f.coeffs()[i]);
    fq_normalize(out);
    return out;
}

Poly lift_poly(const RingPtr& ring, const FqPoly& f) {
    std::vector<u64> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = ring->lift(f[i]);
    return Poly(ring, std::move(c));
}

QuotPoly::QuotPoly(Poly base, std::size_t m) : m_(m) {
    if (m == 0) throw std::invalid_argument("modulus exponent must be positive");
    const auto& ring = base.ring();
    std::vector<u64> c(m, 0);
    for (std::size_t i = 0; i < base.coeffs().size(); ++i)
        c[i % m] = ring->add(c[i % m], base.coeffs()[i]);
    base_ = Poly(ring, std::move(c));
}

QuotPoly QuotPoly::operator+(const QuotPoly& o) const {
    if (m_ != o.m_) throw SpecMismatch("quotient moduli differ");
    return QuotPoly(base_ + o.base_, m_);
}

QuotPoly QuotPoly::operator-(const QuotPoly& o) const {
    if (m_ != o.m_) throw SpecMismatch("quotient moduli differ");
    return QuotPoly(base_ - o.base_, m_);
}

QuotPoly QuotPoly::operator*(const QuotPoly& o) const {
    if (m_ != o.m_) throw SpecMismatch("quotient moduli differ");
    return QuotPoly(base_ * o.base_, m_);
}

} // namespace chaincodes
