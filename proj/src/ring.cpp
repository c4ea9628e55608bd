#include "chaincodes/ring.hpp"

#include <algorithm>
#include <sstream>

namespace chaincodes {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

constexpr u64 kMaxOrder = 1ull << 31;
constexpr u64 kTableOrder = 1024;

} // namespace

ChainRing::ChainRing(RingFamily fam, std::uint64_t p_, std::uint32_t r_, std::uint32_t nu_)
    : family(fam), p(p_), r(r_), nu(nu_), field_(static_cast<u32>(p_), r_) {
    if (nu == 0) throw std::invalid_argument("nilpotency index must be positive");
    q = field_.q;
    order = 1;
    for (u32 i = 0; i < nu; ++i) {
        order *= q;
        if (order > kMaxOrder) throw std::invalid_argument("ring too large");
    }
    qpow_.resize(nu + 1);
    qpow_[0] = 1;
    for (u32 i = 1; i <= nu; ++i) qpow_[i] = qpow_[i - 1] * q;
    if (family == RingFamily::IntegerModular) {
        ppow_.resize(nu + 1);
        ppow_[0] = 1;
        for (u32 i = 1; i <= nu; ++i) ppow_[i] = ppow_[i - 1] * p;
        one_ = order > 1 ? 1 : 0;
        gamma_ = p % order;
    } else {
        one_ = 1; // digit vector (1, 0, ..., 0)
        gamma_ = nu > 1 ? q : 0;
    }
    if (order <= kTableOrder) {
        mul_table_.resize(static_cast<std::size_t>(order) * order);
        add_table_.resize(static_cast<std::size_t>(order) * order);
        neg_table_.resize(order);
        for (u64 a = 0; a < order; ++a)
            for (u64 b = 0; b <= a; ++b) {
                u32 m = static_cast<u32>(mul_direct(a, b));
                mul_table_[a * order + b] = m;
                mul_table_[b * order + a] = m;
            }
        for (u64 a = 0; a < order; ++a) {
            neg_table_[a] = static_cast<u32>(neg_direct(a));
            for (u64 b = 0; b <= a; ++b) {
                u32 s = static_cast<u32>(add_direct(a, b));
                add_table_[a * order + b] = s;
                add_table_[b * order + a] = s;
            }
        }
    }
    val_table_.resize(order);
    for (u64 a = 0; a < order; ++a) {
        u32 v = 0;
        if (family == RingFamily::IntegerModular) {
            u64 x = a;
            while (v < nu && x % p == 0) {
                if (x == 0) {
                    v = nu;
                    break;
                }
                x /= p;
                ++v;
            }
        } else {
            while (v < nu && digit(a, v) == 0) ++v;
        }
        val_table_[a] = a == 0 ? nu : v;
    }
}

RingPtr ChainRing::integers_mod(std::uint64_t p, std::uint32_t nu) {
    if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
    return RingPtr(new ChainRing(RingFamily::IntegerModular, p, 1, nu));
}

RingPtr ChainRing::gamma_extension(std::uint32_t p, std::uint32_t r, std::uint32_t nu) {
    if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
    return RingPtr(new ChainRing(RingFamily::GammaExtension, p, r, nu));
}

std::uint32_t ChainRing::digit(std::uint64_t a, std::uint32_t i) const {
    return static_cast<u32>(a / qpow_[i] % q);
}

std::uint64_t ChainRing::add_direct(std::uint64_t a, std::uint64_t b) const {
    if (family == RingFamily::IntegerModular) return (a + b) % order;
    u64 out = 0;
    for (u32 i = 0; i < nu; ++i) out += static_cast<u64>(field_.add(digit(a, i), digit(b, i))) * qpow_[i];
    return out;
}

std::uint64_t ChainRing::neg_direct(std::uint64_t a) const {
    if (family == RingFamily::IntegerModular) return a == 0 ? 0 : order - a;
    u64 out = 0;
    for (u32 i = 0; i < nu; ++i) out += static_cast<u64>(field_.neg(digit(a, i))) * qpow_[i];
    return out;
}

std::uint64_t ChainRing::add(std::uint64_t a, std::uint64_t b) const {
    if (!add_table_.empty()) return add_table_[a * order + b];
    return add_direct(a, b);
}

std::uint64_t ChainRing::neg(std::uint64_t a) const {
    if (!neg_table_.empty()) return neg_table_[a];
    return neg_direct(a);
}

std::uint64_t ChainRing::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t ChainRing::mul_direct(std::uint64_t a, std::uint64_t b) const {
    if (family == RingFamily::IntegerModular)
        return static_cast<u64>(static_cast<unsigned __int128>(a) * b % order);
    u64 out = 0;
    for (u32 k = 0; k < nu; ++k) {
        u32 c = 0;
        for (u32 i = 0; i <= k; ++i) c = field_.add(c, field_.mul(digit(a, i), digit(b, k - i)));
        out += static_cast<u64>(c) * qpow_[k];
    }
    return out;
}

std::uint64_t ChainRing::mul(std::uint64_t a, std::uint64_t b) const {
    if (!mul_table_.empty()) return mul_table_[a * order + b];
    return mul_direct(a, b);
}

std::uint64_t ChainRing::pow(std::uint64_t a, std::uint64_t e) const {
    u64 result = one_, base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t ChainRing::valuation(std::uint64_t a) const { return val_table_[a]; }

std::uint32_t ChainRing::residue(std::uint64_t a) const {
    if (family == RingFamily::IntegerModular) return static_cast<u32>(a % p);
    return digit(a, 0);
}

std::uint64_t ChainRing::lift(std::uint32_t fq_code) const { return fq_code; }

std::uint64_t ChainRing::inverse(std::uint64_t a) const {
    if (!is_unit(a)) throw NotAUnit("inverse of a non-unit: " + to_string(a));
    if (family == RingFamily::IntegerModular) {
        // extended Euclid against p^nu
        std::int64_t t = 0, newt = 1;
        std::int64_t rr = static_cast<std::int64_t>(order), newr = static_cast<std::int64_t>(a);
        while (newr != 0) {
            std::int64_t quo = rr / newr;
            std::int64_t tmp = t - quo * newt;
            t = newt;
            newt = tmp;
            tmp = rr - quo * newr;
            rr = newr;
            newr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(order);
        return static_cast<u64>(t);
    }
    // a = a0 + gamma*h; inv = a0^{-1} * sum_{i<nu} (-gamma h a0^{-1})^i
    u64 a0inv = lift(field_.inv(residue(a)));
    u64 head = sub(a, lift(residue(a)));
    u64 t = mul(head, a0inv); // valuation >= 1
    u64 acc = one_, term = one_;
    for (u32 i = 1; i < nu; ++i) {
        term = mul(term, neg(t));
        acc = add(acc, term);
    }
    return mul(a0inv, acc);
}

std::uint64_t ChainRing::mul_gamma_pow(std::uint64_t a, std::uint32_t k) const {
    if (k >= nu) return 0;
    if (family == RingFamily::IntegerModular) return a * ppow_[k] % order;
    return a % qpow_[nu - k] * qpow_[k];
}

std::uint64_t ChainRing::div_gamma_pow(std::uint64_t a, std::uint32_t k) const {
    if (k == 0) return a;
    if (a == 0) return 0;
    if (valuation(a) < k) throw std::invalid_argument("inexact division by gamma power");
    if (family == RingFamily::IntegerModular) return a / ppow_[k];
    return a / qpow_[k];
}

std::uint64_t ChainRing::truncate_gamma(std::uint64_t a, std::uint32_t k) const {
    if (k >= nu) return a;
    if (family == RingFamily::IntegerModular) return a % ppow_[k];
    return a % qpow_[k];
}

std::uint64_t ChainRing::from_int(std::int64_t v) const {
    if (family == RingFamily::IntegerModular) {
        std::int64_t m = v % static_cast<std::int64_t>(order);
        if (m < 0) m += static_cast<std::int64_t>(order);
        return static_cast<u64>(m);
    }
    return lift(field_.from_int(v)); // n * 1 lands in the prime subfield
}

std::uint64_t ChainRing::element_rank(std::uint64_t a) const {
    if (family == RingFamily::IntegerModular) return a;
    u64 key = 0;
    for (u32 i = 0; i < nu; ++i) key = key * q + field_.rank(digit(a, i));
    return key;
}

std::uint64_t ChainRing::element_from_rank(std::uint64_t k) const {
    if (family == RingFamily::IntegerModular) return k;
    u64 a = 0;
    for (u32 i = 0; i < nu; ++i) {
        u64 sub_rank = k % q;
        k /= q;
        a += static_cast<u64>(field_.from_rank(sub_rank)) * qpow_[nu - 1 - i];
    }
    return a;
}

std::string ChainRing::spec_string() const {
    std::ostringstream os;
    if (family == RingFamily::IntegerModular) {
        os << "Z/" << order;
    } else {
        os << "F" << q << "[g]/(g^" << nu << ")";
    }
    return os.str();
}

std::string ChainRing::to_string(std::uint64_t a) const {
    if (family == RingFamily::IntegerModular) return std::to_string(a);
    std::ostringstream os;
    bool first = true;
    for (u32 i = 0; i < nu; ++i) {
        u32 d = digit(a, i);
        if (d == 0) continue;
        if (!first) os << " + ";
        first = false;
        std::string ds = field_.to_string(d);
        bool atom = ds.find(' ') == std::string::npos;
        if (i == 0) {
            os << ds;
        } else {
            os << "g";
            if (i > 1) os << "^" << i;
            if (d != 1) os << "*" << (atom ? ds : "(" + ds + ")");
        }
    }
    if (first) os << "0";
    return os.str();
}

std::uint64_t ChainRing::find_primitive_root(std::uint64_t n) const {
    if (n == 0) throw std::invalid_argument("root order must be positive");
    if (n == 1) return one_;
    if ((q - 1) % n != 0)
        throw OrderNotCompatible("no primitive " + std::to_string(n) + "-th root: " +
                                 std::to_string(n) + " does not divide q-1 = " + std::to_string(q - 1));
    auto factors = prime_factors(n);
    u32 omega = 0;
    bool found = false;
    for (u64 k = 0; k < q && !found; ++k) {
        u32 w = field_.from_rank(k);
        if (w == 0) continue;
        if (field_.pow(w, n) != 1) continue;
        bool primitive = true;
        for (u64 f : factors)
            if (field_.pow(w, n / f) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            omega = w;
            found = true;
        }
    }
    if (!found) throw std::logic_error("primitive root search failed");
    u64 zeta;
    if (family == RingFamily::GammaExtension) {
        zeta = lift(omega); // F_q sits inside the ring, the embedding is exact
    } else {
        // Teichmueller power of an integer lift
        u64 e = 1;
        for (u32 i = 0; i + 1 < nu; ++i) e *= p;
        zeta = pow(lift(omega), e);
    }
    auto has_order_n = [&](u64 z) {
        if (pow(z, n) != one_) return false;
        for (u64 f : factors)
            if (pow(z, n / f) == one_) return false;
        return true;
    };
    if (!has_order_n(zeta)) zeta = hensel_lift_root(n, omega);
    if (!has_order_n(zeta)) throw std::logic_error("root lifting failed verification");
    return zeta;
}

std::uint64_t ChainRing::hensel_lift_root(std::uint64_t n, std::uint32_t omega) const {
    if (field_.pow(omega, n) != 1)
        throw NotSimpleRoot("omega is not a root of x^n - 1 in the residue field");
    u32 deriv = field_.mul(field_.from_int(static_cast<std::int64_t>(n % p)),
                           field_.pow(omega, n - 1));
    if (deriv == 0) throw NotSimpleRoot("omega is not a simple root of x^n - 1");
    u64 z = lift(omega);
    for (u32 iter = 0; iter <= nu + 1; ++iter) {
        u64 fz = sub(pow(z, n), one_);
        if (fz == 0) return z;
        u64 dz = mul(from_int(static_cast<std::int64_t>(n)), pow(z, n - 1));
        z = sub(z, mul(fz, inverse(dz)));
    }
    if (sub(pow(z, n), one_) != 0) throw std::logic_error("Newton iteration did not converge");
    return z;
}

} // namespace chaincodes
