#include "chaincodes/multipoly.hpp"

#include <algorithm>
#include <set>

namespace chaincodes {

using u64 = std::uint64_t;

namespace {
std::size_t product(const std::vector<std::size_t>& dims) {
    std::size_t n = 1;
    for (std::size_t m : dims) {
        if (m == 0) throw std::invalid_argument("dimension lengths must be positive");
        n *= m;
    }
    return n;
}
} // namespace

MultiPoly::MultiPoly(RingPtr ring, std::vector<std::size_t> dims)
    : ring_(std::move(ring)), dims_(std::move(dims)), c_(product(dims_), 0) {}

MultiPoly::MultiPoly(RingPtr ring, std::vector<std::size_t> dims, std::vector<std::uint64_t> coeffs)
    : ring_(std::move(ring)), dims_(std::move(dims)), c_(std::move(coeffs)) {
    if (c_.size() != product(dims_)) throw SpecMismatch("coefficient array shape mismatch");
}

MultiPoly MultiPoly::from_poly(const Poly& f, std::size_t m) {
    std::vector<u64> c(m, 0);
    const auto& ring = f.ring();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        c[i % m] = ring->add(c[i % m], f.coeffs()[i]);
    return MultiPoly(ring, {m}, std::move(c));
}

MultiPoly MultiPoly::constant(RingPtr ring, std::vector<std::size_t> dims, std::uint64_t code) {
    MultiPoly f(std::move(ring), std::move(dims));
    f.c_[0] = code;
    return f;
}

bool MultiPoly::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](u64 v) { return v == 0; });
}

std::size_t MultiPoly::flat_index(const std::vector<std::size_t>& exps) const {
    if (exps.size() != dims_.size()) throw SpecMismatch("exponent tuple arity mismatch");
    std::size_t idx = 0;
    for (std::size_t i = dims_.size(); i-- > 0;) idx = idx * dims_[i] + exps[i] % dims_[i];
    return idx;
}

std::vector<std::size_t> MultiPoly::exponents_of(std::size_t flat) const {
    std::vector<std::size_t> e(dims_.size());
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        e[i] = flat % dims_[i];
        flat /= dims_[i];
    }
    return e;
}

void MultiPoly::check_shape(const MultiPoly& o) const {
    if (!r().same_spec(*o.ring_)) throw SpecMismatch("operands over different rings");
    if (dims_ != o.dims_) throw SpecMismatch("operands over different dimensions");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_shape(o);
    MultiPoly out(ring_, dims_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = r().add(c_[i], o.c_[i]);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_shape(o);
    MultiPoly out(ring_, dims_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = r().sub(c_[i], o.c_[i]);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(ring_, dims_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = r().neg(c_[i]);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_shape(o);
    MultiPoly out(ring_, dims_);
    std::vector<std::size_t> ea, eb, ec(dims_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        ea = exponents_of(i);
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            eb = o.exponents_of(j);
            for (std::size_t v = 0; v < dims_.size(); ++v) ec[v] = (ea[v] + eb[v]) % dims_[v];
            std::size_t t = flat_index(ec);
            out.c_[t] = r().add(out.c_[t], r().mul(c_[i], o.c_[j]));
        }
    }
    return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return ring_ && o.ring_ && r().same_spec(*o.ring_) && dims_ == o.dims_ && c_ == o.c_;
}

MultiPoly MultiPoly::scaled(std::uint64_t code) const {
    MultiPoly out(ring_, dims_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = r().mul(c_[i], code);
    return out;
}

MultiPoly MultiPoly::shifted(std::size_t var) const {
    MultiPoly out(ring_, dims_);
    std::size_t stride = 1;
    for (std::size_t i = 0; i < var; ++i) stride *= dims_[i];
    std::size_t m = dims_[var];
    for (std::size_t i = 0; i < c_.size(); ++i) {
        std::size_t e = i / stride % m;
        std::size_t j = e + 1 == m ? i - e * stride : i + stride;
        out.c_[j] = c_[i];
    }
    return out;
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
    MultiPoly acc = constant(ring_, dims_, r().one());
    MultiPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::size_t MultiPoly::var_degree(std::size_t var) const {
    std::size_t stride = 1;
    for (std::size_t i = 0; i < var; ++i) stride *= dims_[i];
    std::size_t m = dims_[var];
    std::size_t deg = 0;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) deg = std::max(deg, i / stride % m);
    return deg;
}

MultiPoly MultiPoly::coeff_slice(std::size_t var, std::size_t level) const {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < dims_.size(); ++i)
        if (i != var) rest.push_back(dims_[i]);
    if (rest.empty()) rest.push_back(1);
    MultiPoly out(ring_, rest);
    std::vector<std::size_t> e;
    std::size_t k = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        e = exponents_of(i);
        if (e[var] != level) continue;
        out.c_[k++] = c_[i];
    }
    return out;
}

MultiPoly MultiPoly::eval_var(std::size_t var, std::uint64_t value) const {
    std::size_t n = dims_[var];
    if (r().pow(value, n) != r().one())
        throw RootOrderViolation("substituted value is not an n-th root of unity");
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < dims_.size(); ++i)
        if (i != var) rest.push_back(dims_[i]);
    if (rest.empty()) rest.push_back(1);
    MultiPoly out(ring_, rest);
    std::vector<u64> powers(n);
    powers[0] = r().one();
    for (std::size_t j = 1; j < n; ++j) powers[j] = r().mul(powers[j - 1], value);
    std::vector<std::size_t> e, er(rest.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        e = exponents_of(i);
        std::size_t k = 0;
        for (std::size_t v = 0; v < dims_.size(); ++v)
            if (v != var) er[k++] = e[v];
        if (k == 0) er[0] = 0;
        std::size_t t = out.flat_index(er);
        out.c_[t] = r().add(out.c_[t], r().mul(c_[i], powers[e[var]]));
    }
    return out;
}

MultiPoly MultiPoly::permuted_dims(const std::vector<std::size_t>& perm) const {
    // perm[i] = original variable placed at position i of the output.
    std::vector<std::size_t> nd(dims_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) nd[i] = dims_[perm[i]];
    MultiPoly out(ring_, nd);
    std::vector<std::size_t> e, ne(dims_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        e = exponents_of(i);
        for (std::size_t v = 0; v < perm.size(); ++v) ne[v] = e[perm[v]];
        out.c_[out.flat_index(ne)] = c_[i];
    }
    return out;
}

Poly MultiPoly::as_poly() const {
    if (dims_.size() != 1) throw SpecMismatch("as_poly requires one dimension");
    return Poly(ring_, c_);
}

MultiPoly multi_mul_mod(const MultiPoly& a, const MultiPoly& b) { return a * b; }

MultiPoly transpose(const MultiPoly& f) {
    if (f.dims().size() != 2) throw SpecMismatch("transpose requires two dimensions");
    return f.permuted_dims({1, 0});
}

QuotPoly evaluate_y(const MultiPoly& f, std::uint64_t zeta_pow) {
    if (f.dims().size() != 2) throw SpecMismatch("evaluate_y requires two dimensions");
    MultiPoly g = f.eval_var(1, zeta_pow);
    return QuotPoly(g.as_poly(), f.dims()[0]);
}

bool is_separable(const MultiPoly& f) {
    const auto& dims = f.dims();
    std::vector<std::set<std::size_t>> proj(dims.size());
    std::size_t support = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        ++support;
        auto e = f.exponents_of(i);
        for (std::size_t v = 0; v < dims.size(); ++v) proj[v].insert(e[v]);
    }
    if (support == 0) return true;
    std::size_t box = 1;
    for (const auto& s : proj) box *= s.size();
    return box == support;
}

} // namespace chaincodes
