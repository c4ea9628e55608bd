#include "chaincodes/idempotents.hpp"

#include "chaincodes/errors.hpp"

namespace chaincodes {

using u64 = std::uint64_t;

IdempotentFamily idempotents(const RingPtr& ring, std::size_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    const ChainRing& R = *ring;
    if ((R.q - 1) % n != 0)
        throw OrderNotCompatible("idempotents need n | q-1; n = " + std::to_string(n) +
                                 ", q = " + std::to_string(R.q));
    IdempotentFamily fam;
    fam.ring = ring;
    fam.n = n;
    fam.zeta = R.find_primitive_root(n);
    u64 ninv = R.inverse(R.from_int(static_cast<std::int64_t>(n)));
    for (std::size_t i = 0; i < n; ++i) {
        u64 base = R.pow(fam.zeta, n - i); // zeta^{n-i}; i = 0 gives zeta^n = 1
        std::vector<u64> c(n);
        u64 cur = R.one();
        for (std::size_t k = 0; k < n; ++k) {
            c[k] = R.mul(ninv, cur);
            cur = R.mul(cur, base);
        }
        fam.thetas.emplace_back(ring, std::move(c));
    }

    // Verify the defining identities exactly before handing the family out.
    auto mod_mul = [&](const Poly& a, const Poly& b) { return (QuotPoly(a, n) * QuotPoly(b, n)).base(); };
    Poly one = Poly::constant(ring, R.one());
    Poly sum(ring);
    Poly y = Poly::monomial(ring, R.one(), n > 1 ? 1 : 0);
    for (std::size_t i = 0; i < n; ++i) {
        sum = sum + fam.thetas[i];
        if (mod_mul(fam.thetas[i], fam.thetas[i]) != fam.thetas[i])
            throw std::logic_error("idempotency failed");
        for (std::size_t j = i + 1; j < n; ++j)
            if (!mod_mul(fam.thetas[i], fam.thetas[j]).is_zero())
                throw std::logic_error("orthogonality failed");
        Poly lhs = mod_mul(fam.thetas[i], y);
        Poly rhs = fam.thetas[i].scaled(R.pow(fam.zeta, i));
        if (lhs != rhs) throw std::logic_error("eigen-action failed");
    }
    if (sum != one) throw std::logic_error("partition of unity failed");
    return fam;
}

} // namespace chaincodes
