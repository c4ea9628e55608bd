#pragma once

#include <cstdint>
#include <vector>

#include "chaincodes/poly.hpp"
#include "chaincodes/ring.hpp"

namespace chaincodes {

/// The n primitive central idempotents of R[y]/(y^n - 1) together with the
/// primitive root that defines them:
///   theta_i(y) = (1/n) sum_{k<n} (zeta^{n-i} y)^k.
/// Construction verifies orthogonality, idempotency, the partition of unity
/// and the eigen-action theta_i * y = zeta^i * theta_i exactly.
struct IdempotentFamily {
    RingPtr ring;
    std::size_t n = 0;
    std::uint64_t zeta = 0;
    std::vector<Poly> thetas; // univariate in y, degree < n
};

/// Requires n | q - 1; throws OrderNotCompatible otherwise.
IdempotentFamily idempotents(const RingPtr& ring, std::size_t n);

} // namespace chaincodes
