#include "chaincodes/fq.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace chaincodes {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Coefficient vectors over F_p, ascending, not necessarily normalized.
using PPoly = std::vector<u32>;

void pp_normalize(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pp_mul(const PPoly& a, const PPoly& b, u32 p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<u32>((c[i + j] + static_cast<u64>(a[i]) * b[j]) % p);
    pp_normalize(c);
    return c;
}


// Remainder of a by monic b over F_p.
PPoly pp_rem_monic(PPoly a, const PPoly& b, u32 p) {
    pp_normalize(a);
    while (a.size() >= b.size()) {
        u32 lead = a.back();
        std::size_t shift = a.size() - b.size();
        if (lead != 0)
            for (std::size_t i = 0; i + 1 < b.size(); ++i) {
                u64 t = static_cast<u64>(lead) * b[i] % p;
                a[i + shift] = static_cast<u32>((a[i + shift] + p - t) % p);
            }
        a.pop_back();
        pp_normalize(a);
        if (a.size() < b.size()) break;
    }
    return a;
}

bool pp_divides(const PPoly& d, const PPoly& f, u32 p) {
    return pp_rem_monic(f, d, p).empty();
}

// Lexicographically smallest (on c_0, c_1, ...) monic irreducible of degree r.
PPoly smallest_irreducible(u32 p, u32 r) {
    if (r == 1) return {0, 1}; // x
    std::vector<u32> low(r, 0);
    const u64 total = [&] {
        u64 t = 1;
        for (u32 i = 0; i < r; ++i) t *= p;
        return t;
    }();
    for (u64 idx = 0; idx < total; ++idx) {
        // idx encodes (c_0, ..., c_{r-1}) with c_0 most significant: lex order.
        u64 t = idx;
        for (u32 i = 0; i < r; ++i) {
            low[r - 1 - i] = static_cast<u32>(t % p);
            t /= p;
        }
        PPoly f = low;
        f.push_back(1);
        // Trial division by every monic polynomial of degree 1..r/2.
        bool irred = true;
        for (u32 d = 1; irred && 2 * d <= r; ++d) {
            u64 cnt = 1;
            for (u32 i = 0; i < d; ++i) cnt *= p;
            for (u64 j = 0; irred && j < cnt; ++j) {
                PPoly g(d + 1, 0);
                u64 s = j;
                for (u32 i = 0; i < d; ++i) {
                    g[i] = static_cast<u32>(s % p);
                    s /= p;
                }
                g[d] = 1;
                if (pp_divides(g, f, p)) irred = false;
            }
        }
        if (irred) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

} // namespace

ResidueField::ResidueField(std::uint32_t p_, std::uint32_t r_) : p(p_), r(r_) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (r == 0) throw std::invalid_argument("r must be positive");
    u64 qq = 1;
    for (u32 i = 0; i < r; ++i) {
        qq *= p;
        if (qq > (1u << 20)) throw std::invalid_argument("residue field too large");
    }
    q = static_cast<u32>(qq);
    modulus = smallest_irreducible(p, r);
    if (static_cast<u64>(q) * q <= (1u << 22)) {
        mul_table_.resize(static_cast<std::size_t>(q) * q);
        for (u32 a = 0; a < q; ++a)
            for (u32 b = 0; b <= a; ++b) {
                u32 m = mul_direct(a, b);
                mul_table_[static_cast<std::size_t>(a) * q + b] = m;
                mul_table_[static_cast<std::size_t>(b) * q + a] = m;
            }
    }
    inv_table_.assign(q, 0);
    for (u32 a = 1; a < q; ++a) {
        // q is small here; scan once using the group order.
        u32 x = pow(a, static_cast<u64>(q) - 2);
        inv_table_[a] = x;
    }
}

std::uint32_t ResidueField::add(std::uint32_t a, std::uint32_t b) const {
    if (r == 1) return (a + b) % p;
    u32 out = 0, mult = 1;
    for (u32 i = 0; i < r; ++i) {
        u32 da = a % p, db = b % p;
        a /= p;
        b /= p;
        out += ((da + db) % p) * mult;
        mult *= p;
    }
    return out;
}

std::uint32_t ResidueField::neg(std::uint32_t a) const {
    if (r == 1) return a == 0 ? 0 : p - a;
    u32 out = 0, mult = 1;
    for (u32 i = 0; i < r; ++i) {
        u32 da = a % p;
        a /= p;
        out += (da == 0 ? 0 : p - da) * mult;
        mult *= p;
    }
    return out;
}

std::uint32_t ResidueField::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t ResidueField::mul_direct(std::uint32_t a, std::uint32_t b) const {
    if (r == 1) return static_cast<u32>(static_cast<u64>(a) * b % p);
    PPoly fa, fb;
    for (u32 i = 0, x = a; i < r; ++i, x /= p) fa.push_back(x % p);
    for (u32 i = 0, x = b; i < r; ++i, x /= p) fb.push_back(x % p);
    pp_normalize(fa);
    pp_normalize(fb);
    PPoly c = pp_rem_monic(pp_mul(fa, fb, p), modulus, p);
    u32 out = 0, mult = 1;
    for (u32 i = 0; i < r; ++i) {
        out += (i < c.size() ? c[i] : 0) * mult;
        mult *= p;
    }
    return out;
}

std::uint32_t ResidueField::mul(std::uint32_t a, std::uint32_t b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q + b];
    return mul_direct(a, b);
}

std::uint32_t ResidueField::pow(std::uint32_t a, std::uint64_t e) const {
    u32 result = 1 % q, base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t ResidueField::inv(std::uint32_t a) const {
    if (a == 0) throw NotAUnit("inverse of 0 in residue field");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, static_cast<u64>(q) - 2);
}

std::uint32_t ResidueField::from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p);
    if (m < 0) m += p;
    return static_cast<u32>(m);
}

std::uint64_t ResidueField::rank(std::uint32_t a) const {
    u64 key = 0;
    for (u32 i = 0; i < r; ++i) {
        key = key * p + a % p; // c_0 ends most significant
        a /= p;
    }
    return key;
}

std::uint32_t ResidueField::from_rank(std::uint64_t k) const {
    // key = ((c_0 * p + c_1) * p + ...) + c_{r-1}; peel from the least
    // significant end (c_{r-1}) and rebuild code = sum c_i p^i.
    u32 a = 0;
    for (u32 i = 0; i < r; ++i) {
        u32 digit = static_cast<u32>(k % p); // this is c_{r-1-i}
        k /= p;
        u32 position = r - 1 - i;
        u32 weight = 1;
        for (u32 j = 0; j < position; ++j) weight *= p;
        a += digit * weight;
    }
    return a;
}

std::string ResidueField::to_string(std::uint32_t a) const {
    if (r == 1) return std::to_string(a);
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(r) - 1; i >= 0; --i) {
        u32 c = a;
        for (int j = 0; j < i; ++j) c /= p;
        c %= p;
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "w";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

void fq_normalize(FqPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

bool fq_is_zero(const FqPoly& f) { return f.empty(); }

std::size_t fq_degree(const FqPoly& f) { return f.size() - 1; }

FqPoly fq_add(const ResidueField& F, const FqPoly& a, const FqPoly& b) {
    FqPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    fq_normalize(c);
    return c;
}

FqPoly fq_sub(const ResidueField& F, const FqPoly& a, const FqPoly& b) {
    FqPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    fq_normalize(c);
    return c;
}

FqPoly fq_mul(const ResidueField& F, const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) return {};
    FqPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    fq_normalize(c);
    return c;
}

FqPoly fq_scale(const ResidueField& F, std::uint32_t c, const FqPoly& a) {
    FqPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(c, a[i]);
    fq_normalize(out);
    return out;
}

void fq_divrem(const ResidueField& F, const FqPoly& a, const FqPoly& b, FqPoly& quo, FqPoly& rem) {
    if (fq_is_zero(b)) throw std::invalid_argument("division by zero polynomial");
    rem = a;
    fq_normalize(rem);
    quo.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, 0);
    std::uint32_t linv = F.inv(b.back());
    while (rem.size() >= b.size()) {
        std::uint32_t c = F.mul(rem.back(), linv);
        std::size_t shift = rem.size() - b.size();
        quo[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[i + shift] = F.sub(rem[i + shift], F.mul(c, b[i]));
        fq_normalize(rem);
        if (rem.empty()) break;
    }
    fq_normalize(quo);
}

FqPoly fq_make_monic(const ResidueField& F, const FqPoly& a) {
    if (fq_is_zero(a)) return a;
    return fq_scale(F, F.inv(a.back()), a);
}

bool fq_is_monic(const ResidueField& F, const FqPoly& a) {
    (void)F;
    return !a.empty() && a.back() == 1;
}

FqPoly fq_gcd(const ResidueField& F, const FqPoly& a, const FqPoly& b) {
    FqPoly x = a, y = b;
    fq_normalize(x);
    fq_normalize(y);
    while (!fq_is_zero(y)) {
        FqPoly q, r;
        fq_divrem(F, x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return fq_make_monic(F, x);
}

FqPoly fq_xgcd(const ResidueField& F, const FqPoly& a, const FqPoly& b, FqPoly& u, FqPoly& v) {
    FqPoly r0 = a, r1 = b;
    fq_normalize(r0);
    fq_normalize(r1);
    FqPoly u0 = {1}, v0 = {}, u1 = {}, v1 = {1};
    while (!fq_is_zero(r1)) {
        FqPoly q, r;
        fq_divrem(F, r0, r1, q, r);
        FqPoly u2 = fq_sub(F, u0, fq_mul(F, q, u1));
        FqPoly v2 = fq_sub(F, v0, fq_mul(F, q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!fq_is_zero(r0) && r0.back() != 1) {
        std::uint32_t c = F.inv(r0.back());
        r0 = fq_scale(F, c, r0);
        u0 = fq_scale(F, c, u0);
        v0 = fq_scale(F, c, v0);
    }
    u = std::move(u0);
    v = std::move(v0);
    return r0;
}

FqPoly fq_xn_minus_1(const ResidueField& F, std::size_t n) {
    FqPoly f(n + 1, 0);
    f[0] = F.neg(1);
    f[n] = 1;
    return f;
}

} // namespace chaincodes
