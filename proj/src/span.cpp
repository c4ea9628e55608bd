#include "chaincodes/span.hpp"

#include <algorithm>
#include <numeric>

#include "chaincodes/detail/howell.hpp"

namespace chaincodes {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool Cardinality::fits_u64() const {
    u64 v = 1;
    for (u64 i = 0; i < exponent; ++i) {
        if (v > (1ull << 62) / std::max<u64>(base, 1)) return false;
        v *= base;
    }
    return true;
}

std::uint64_t Cardinality::as_u64() const {
    u64 v = 1;
    for (u64 i = 0; i < exponent; ++i) v *= base;
    return v;
}

std::string Cardinality::str() const {
    // exact decimal of base^exponent via digit-vector multiplication
    std::vector<u32> digits{1};
    for (u64 i = 0; i < exponent; ++i) {
        u64 carry = 0;
        for (auto& d : digits) {
            u64 t = static_cast<u64>(d) * base + carry;
            d = static_cast<u32>(t % 10);
            carry = t / 10;
        }
        while (carry) {
            digits.push_back(static_cast<u32>(carry % 10));
            carry /= 10;
        }
    }
    std::string s;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) s += static_cast<char>('0' + *it);
    return s;
}

bool Cardinality::operator==(const Cardinality& o) const {
    if (base == o.base) return exponent == o.exponent;
    if (exponent == 0 || o.exponent == 0) return exponent == o.exponent;
    if (fits_u64() && o.fits_u64()) return as_u64() == o.as_u64();
    return base == o.base && exponent == o.exponent;
}

PositionOrder PositionOrder::canonical(const std::vector<std::size_t>& dims) {
    std::size_t n = 1;
    for (auto m : dims) n *= m;
    std::vector<std::vector<std::size_t>> exps(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t f = i;
        exps[i].resize(dims.size());
        for (std::size_t v = 0; v < dims.size(); ++v) {
            exps[i][v] = f % dims[v];
            f /= dims[v];
        }
    }
    std::vector<u32> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto total = [&](std::size_t i) {
        std::size_t t = 0;
        for (auto e : exps[i]) t += e;
        return t;
    };
    std::sort(order.begin(), order.end(), [&](u32 a, u32 b) {
        std::size_t ta = total(a), tb = total(b);
        if (ta != tb) return ta < tb;
        return exps[a] < exps[b];
    });
    PositionOrder out;
    out.pos_of_rank = order;
    out.rank_of_pos.resize(n);
    for (std::size_t rk = 0; rk < n; ++rk) out.rank_of_pos[order[rk]] = static_cast<u32>(rk);
    return out;
}

PositionOrder PositionOrder::graded_last(const std::vector<std::size_t>& dims) {
    std::size_t k = dims.size();
    std::size_t n = 1;
    for (auto m : dims) n *= m;
    std::size_t last = dims[k - 1];
    std::size_t rest = n / last;
    std::vector<std::size_t> rest_dims(dims.begin(), dims.end() - 1);
    if (rest_dims.empty()) rest_dims.push_back(1);
    PositionOrder inner = PositionOrder::canonical(rest_dims);
    PositionOrder out;
    out.pos_of_rank.resize(n);
    out.rank_of_pos.resize(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        std::size_t e_last = pos / rest;
        std::size_t pos_rest = pos % rest;
        std::size_t rank = (last - 1 - e_last) * rest + inner.rank_of_pos[pos_rest];
        out.rank_of_pos[pos] = static_cast<u32>(rank);
        out.pos_of_rank[rank] = static_cast<u32>(pos);
    }
    return out;
}

namespace {

std::vector<std::vector<u32>> shift_perms_ranked(const std::vector<std::size_t>& dims,
                                                 const PositionOrder& order) {
    std::size_t n = order.pos_of_rank.size();
    std::vector<std::vector<u32>> perms;
    std::size_t stride = 1;
    for (std::size_t var = 0; var < dims.size(); ++var) {
        std::size_t m = dims[var];
        if (m > 1) {
            std::vector<u32> perm(n);
            for (std::size_t rk = 0; rk < n; ++rk) {
                std::size_t pos = order.pos_of_rank[rk];
                std::size_t e = pos / stride % m;
                std::size_t shifted = e + 1 == m ? pos - e * stride : pos + stride;
                perm[rk] = order.rank_of_pos[shifted];
            }
            perms.push_back(std::move(perm));
        }
        stride *= m;
    }
    return perms;
}

std::vector<u64> ranked_from_multipoly(const MultiPoly& f, const PositionOrder& order) {
    std::size_t n = f.size();
    std::vector<u64> v(n, 0);
    for (std::size_t pos = 0; pos < n; ++pos) v[order.rank_of_pos[pos]] = f.coeffs()[pos];
    return v;
}

} // namespace

CodeSpan CodeSpan::from_generators(const RingPtr& ring, const std::vector<std::size_t>& dims,
                                   const std::vector<MultiPoly>& gens) {
    CodeSpan span;
    span.ring_ = ring;
    span.dims_ = dims;
    span.order_ = PositionOrder::canonical(dims);
    detail::HowellForm form(*ring, span.order_.pos_of_rank.size());
    form.set_shift_perms(shift_perms_ranked(dims, span.order_));
    for (const auto& g : gens) {
        if (!g.ring()->same_spec(*ring)) throw SpecMismatch("generator over a different ring");
        if (g.dims() != dims) throw SpecMismatch("generator over different dims");
        form.add(ranked_from_multipoly(g, span.order_));
    }
    form.build();
    for (const auto& row : form.rows()) span.rows_.push_back(Row{row.v, row.rank, row.val});
    return span;
}

bool CodeSpan::contains(const MultiPoly& f) const {
    if (!f.ring()->same_spec(*ring_)) throw SpecMismatch("membership across rings");
    if (f.dims() != dims_) throw SpecMismatch("membership across dims");
    std::vector<u64> v = ranked_from_multipoly(f, order_);
    // greedy reduction against the echelon rows
    std::size_t scan = 0;
    while (true) {
        int l = -1;
        for (std::size_t i = scan; i < v.size(); ++i)
            if (v[i] != 0) {
                l = static_cast<int>(i);
                break;
            }
        if (l < 0) return true;
        std::size_t rank = static_cast<std::size_t>(l);
        scan = rank;
        auto it = std::lower_bound(rows_.begin(), rows_.end(), rank,
                                   [](const Row& rw, std::size_t rk) { return rw.rank < rk; });
        if (it == rows_.end() || it->rank != rank) return false;
        const Row* row = &*it;
        u32 w = ring_->valuation(v[rank]);
        if (w < row->val) return false;
        u64 f2 = ring_->mul_gamma_pow(ring_->div_gamma_pow(v[rank], w), w - row->val);
        for (std::size_t i = rank; i < v.size(); ++i)
            if (row->v[i] != 0) v[i] = ring_->sub(v[i], ring_->mul(f2, row->v[i]));
    }
}

Cardinality CodeSpan::cardinality() const {
    Cardinality c;
    c.base = ring_->q;
    c.exponent = 0;
    for (const auto& row : rows_) c.exponent += ring_->nu - row.val;
    return c;
}

bool CodeSpan::operator==(const CodeSpan& o) const {
    if (!ring_->same_spec(*o.ring_) || dims_ != o.dims_) throw SpecMismatch("comparing unrelated codes");
    if (rows_.size() != o.rows_.size()) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].rank != o.rows_[i].rank || rows_[i].val != o.rows_[i].val ||
            rows_[i].v != o.rows_[i].v)
            return false;
    return true;
}

MultiPoly CodeSpan::row_as_multipoly(const Row& row) const {
    MultiPoly f(ring_, dims_);
    for (std::size_t rk = 0; rk < row.v.size(); ++rk)
        f.coeffs()[order_.pos_of_rank[rk]] = row.v[rk];
    return f;
}

std::vector<MultiPoly> CodeSpan::basis() const {
    std::vector<MultiPoly> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.push_back(row_as_multipoly(row));
    return out;
}

std::vector<std::pair<std::vector<std::size_t>, std::uint32_t>> CodeSpan::pivots() const {
    std::vector<std::pair<std::vector<std::size_t>, u32>> out;
    MultiPoly probe(ring_, dims_);
    for (const auto& row : rows_)
        out.emplace_back(probe.exponents_of(order_.pos_of_rank[row.rank]), row.val);
    return out;
}

std::vector<Poly> CanonicalGenSet::generator_polys() const {
    std::vector<Poly> out;
    for (const auto& e : entries) out.push_back(e.monic.times_gamma_pow(e.gamma_exp));
    return out;
}

std::vector<MultiPoly> CanonicalGenSet::generator_multipolys() const {
    std::vector<MultiPoly> out;
    for (const auto& p : generator_polys()) out.push_back(MultiPoly::from_poly(p, modulus));
    return out;
}

namespace {

/// Module generators of (M : gamma) from module generators of M, via a
/// Howell computation on [gamma*I | I] stacked over [rows | 0].
std::vector<std::vector<u64>> colon_by_gamma(const ChainRing& R, std::size_t m,
                                             const std::vector<std::vector<u64>>& rows) {
    detail::HowellForm form(R, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<u64> v(2 * m, 0);
        v[i] = R.gamma();
        v[m + i] = R.one();
        form.add(std::move(v));
    }
    for (const auto& row : rows) {
        std::vector<u64> v(2 * m, 0);
        std::copy(row.begin(), row.end(), v.begin());
        form.add(std::move(v));
    }
    form.build();
    std::vector<std::vector<u64>> out;
    for (const auto& row : form.rows())
        if (row.rank >= m) out.emplace_back(row.v.begin() + static_cast<std::ptrdiff_t>(m), row.v.end());
    return out;
}

FqPoly delta_and_bezout(const ChainRing& R, std::size_t m, const std::vector<std::vector<u64>>& rows,
                        std::vector<FqPoly>& combo) {
    const ResidueField& F = R.field();
    FqPoly d = fq_xn_minus_1(F, m);
    combo.assign(rows.size(), FqPoly{});
    for (std::size_t t = 0; t < rows.size(); ++t) {
        FqPoly res(rows[t].size());
        for (std::size_t i = 0; i < rows[t].size(); ++i) res[i] = R.residue(rows[t][i]);
        fq_normalize(res);
        if (fq_is_zero(res)) continue;
        FqPoly u, v;
        FqPoly g = fq_xgcd(F, d, res, u, v);
        for (auto& c : combo) c = fq_mul(F, u, c);
        combo[t] = fq_add(F, combo[t], v);
        d = std::move(g);
    }
    return d;
}

} // namespace

CanonicalGenSet canonical_generators(const CodeSpan& span) {
    if (span.dims().size() != 1) throw SpecMismatch("canonical generators require one dimension");
    const RingPtr& ring = span.ring();
    const ChainRing& R = *ring;
    std::size_t m = span.dims()[0];
    CanonicalGenSet out;
    out.ring = ring;
    out.modulus = m;
    if (span.is_zero()) return out;

    // Tower of colon modules (C : gamma^a), a = 0..nu, as row lists. The 1D
    // canonical rank order is the identity, so rows are plain coefficient
    // vectors.
    std::vector<std::vector<std::vector<u64>>> tower(R.nu + 1);
    for (const auto& row : span.rows()) tower[0].push_back(row.v);
    for (u32 a = 1; a <= R.nu; ++a) tower[a] = colon_by_gamma(R, m, tower[a - 1]);

    std::vector<FqPoly> delta(R.nu + 1);
    std::vector<std::vector<FqPoly>> combos(R.nu + 1);
    for (u32 a = 0; a <= R.nu; ++a) delta[a] = delta_and_bezout(R, m, tower[a], combos[a]);

    // Witnesses top-down: monic q_a of degree deg(delta_a) with
    // gamma^a * q_a in the code.
    std::vector<Poly> witness(R.nu + 1, Poly(ring));
    std::vector<bool> have(R.nu + 1, false);
    witness[R.nu] = Poly::constant(ring, R.one());
    have[R.nu] = true;
    for (u32 a = R.nu; a-- > 0;) {
        if (fq_is_zero(delta[a]) || fq_degree(delta[a]) == m) continue; // zero level ideal
        Poly qt(ring);
        for (std::size_t t = 0; t < tower[a].size(); ++t) {
            if (fq_is_zero(combos[a][t])) continue;
            Poly prod = lift_poly(ring, combos[a][t]) * Poly(ring, tower[a][t]);
            qt = qt + prod;
        }
        qt = QuotPoly(qt, m).base();
        if (!have[a + 1]) throw std::logic_error("colon tower is not nested");
        Poly head = lift_poly(ring, delta[a]);
        Poly diff = qt - head;
        std::vector<u64> jc(diff.coeffs().size());
        for (std::size_t i = 0; i < jc.size(); ++i) {
            if (R.valuation(diff.coeffs()[i]) < 1)
                throw std::logic_error("bezout witness residue mismatch");
            jc[i] = R.div_gamma_pow(diff.coeffs()[i], 1);
        }
        Poly j(ring, std::move(jc));
        Poly rem = j.rem_monic(witness[a + 1]);
        Poly q = head + rem.times_gamma_pow(1);
        q = q.truncated_gamma(R.nu - a);
        if (q.is_zero() || !q.is_monic() || q.degree() != fq_degree(delta[a]))
            throw std::logic_error("canonical witness is not monic of the expected degree");
        witness[a] = q;
        have[a] = true;
    }

    // Staircase: keep level a when delta_a strictly exceeds delta_{a-1}
    // (delta_{-1} is the zero ideal).
    for (u32 a = R.nu; a-- > 0;) {
        if (!have[a]) continue;
        bool keep;
        if (a == 0) {
            keep = true;
        } else {
            keep = delta[a] != delta[a - 1];
        }
        if (!keep) continue;
        Poly q = witness[a].truncated_gamma(R.nu - a);
        MultiPoly gen = MultiPoly::from_poly(q.times_gamma_pow(a), m);
        if (!span.contains(gen)) throw std::logic_error("canonical generator escaped the span");
        out.entries.push_back(CanonicalGenEntry{a, q});
    }
    // Entries were appended from the highest gamma level down, matching the
    // required strict descent; degrees ascend by the divisor tower.
    for (std::size_t i = 0; i + 1 < out.entries.size(); ++i) {
        bool ok = out.entries[i].gamma_exp > out.entries[i + 1].gamma_exp &&
                  out.entries[i].monic.degree() < out.entries[i + 1].monic.degree();
        if (!ok) throw std::logic_error("staircase invariants violated");
    }
    return out;
}

} // namespace chaincodes
