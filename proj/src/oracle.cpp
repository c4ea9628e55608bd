#include "chaincodes/oracle.hpp"

#include <algorithm>

#include "chaincodes/errors.hpp"

namespace chaincodes {

using u64 = std::uint64_t;

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
    std::size_t n = 1;
    for (auto m : dims) n *= m;
    return n;
}

/// |R|^N if it stays within budget, otherwise throws.
u64 ambient_size_checked(const ChainRing& R, std::size_t N, u64 budget) {
    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < N; ++i) {
        total *= R.order;
        if (total > budget)
            throw BudgetExceeded("|R|^" + std::to_string(N) + " exceeds the enumeration budget of " +
                                 std::to_string(budget) + " words");
    }
    return static_cast<u64>(total);
}

u64 add_words(const ChainRing& R, u64 a, const std::vector<u64>& b_digits) {
    u64 out = 0, mult = 1;
    for (std::size_t i = 0; i < b_digits.size(); ++i) {
        u64 da = a % R.order;
        a /= R.order;
        out += R.add(da, b_digits[i]) * mult;
        mult *= R.order;
    }
    return out;
}

} // namespace

bool EnumeratedCode::contains(std::uint64_t word) const {
    return std::binary_search(words.begin(), words.end(), word);
}

std::uint64_t encode_word(const MultiPoly& f) {
    const auto& R = *f.ring();
    u64 out = 0;
    for (std::size_t i = f.size(); i-- > 0;) out = out * R.order + f.coeffs()[i];
    return out;
}

MultiPoly decode_word(const RingPtr& ring, const std::vector<std::size_t>& dims,
                      std::uint64_t word) {
    MultiPoly f(ring, dims);
    for (std::size_t i = 0; i < f.size(); ++i) {
        f.coeffs()[i] = word % ring->order;
        word /= ring->order;
    }
    return f;
}

EnumeratedCode enumerate_span(const RingPtr& ring, const std::vector<std::size_t>& dims,
                              const std::vector<MultiPoly>& gens, std::uint64_t budget) {
    const ChainRing& R = *ring;
    std::size_t N = product(dims);
    u64 ambient = ambient_size_checked(R, N, budget);

    std::vector<bool> seen(ambient, false);
    std::vector<u64> list{0};
    seen[0] = true;

    std::vector<u64> shift_digits(N);
    for (const auto& g : gens) {
        if (g.dims() != dims || !g.ring()->same_spec(R)) throw SpecMismatch("oracle generator shape");
        // every distinct multi-shift of the generator
        MultiPoly base = g;
        std::vector<std::size_t> counter(dims.size(), 0);
        while (true) {
            u64 s_code = encode_word(base);
            if (s_code != 0 && !seen[s_code]) {
                // grow the module: S <- union over a in R of (S + a*s)
                std::size_t snapshot = list.size();
                for (u64 a = 1; a < R.order; ++a) {
                    MultiPoly ta = base.scaled(a);
                    for (std::size_t i = 0; i < N; ++i) shift_digits[i] = ta.coeffs()[i];
                    for (std::size_t w = 0; w < snapshot; ++w) {
                        u64 c = add_words(R, list[w], shift_digits);
                        if (!seen[c]) {
                            seen[c] = true;
                            list.push_back(c);
                        }
                    }
                }
            }
            // advance the multi-shift counter
            std::size_t var = 0;
            while (var < dims.size()) {
                base = base.shifted(var);
                if (++counter[var] < dims[var]) break;
                counter[var] = 0;
                ++var;
            }
            if (var == dims.size()) break;
        }
    }
    std::sort(list.begin(), list.end());
    EnumeratedCode code;
    code.ring = ring;
    code.dims = dims;
    code.words = std::move(list);
    return code;
}

std::vector<std::uint64_t> literal_Ij(const EnumeratedCode& code, std::size_t j) {
    if (code.dims.size() != 2) throw SpecMismatch("literal I_j requires two dimensions");
    const ChainRing& R = *code.ring;
    std::size_t m = code.dims[0], n = code.dims[1];
    std::size_t top = n - 1 - j;
    std::vector<u64> out;
    for (u64 w : code.words) {
        // decode columns y^0..y^{n-1}; require zero above level `top`
        u64 word = w;
        std::vector<u64> levels(n, 0);
        u64 mult = 1;
        for (std::size_t b = 0; b < n; ++b) {
            u64 level = 0;
            mult = 1;
            for (std::size_t a = 0; a < m; ++a) {
                level += (word % R.order) * mult;
                word /= R.order;
                mult *= R.order;
            }
            levels[b] = level;
        }
        bool ok = true;
        for (std::size_t b = top + 1; b < n; ++b) ok = ok && levels[b] == 0;
        if (ok) out.push_back(levels[top]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint64_t> literal_Cj(const EnumeratedCode& code, const Poly& theta_j,
                                      std::uint64_t budget) {
    if (code.dims.size() != 2) throw SpecMismatch("literal C_j requires two dimensions");
    const ChainRing& R = *code.ring;
    std::size_t m = code.dims[0], n = code.dims[1];
    u64 candidates = ambient_size_checked(R, m, budget);
    std::vector<u64> theta(n, 0);
    for (std::size_t i = 0; i < theta_j.coeffs().size() && i < n; ++i) theta[i] = theta_j.coeffs()[i];
    std::vector<u64> out;
    std::vector<u64> g(m);
    for (u64 cand = 0; cand < candidates; ++cand) {
        u64 w = cand;
        for (std::size_t a = 0; a < m; ++a) {
            g[a] = w % R.order;
            w /= R.order;
        }
        // encode g(x) * theta_j(y): coefficient at (a, b) is g[a] * theta[b]
        u64 word = 0;
        for (std::size_t b = n; b-- > 0;)
            for (std::size_t a = m; a-- > 0;) word = word * R.order + R.mul(g[a], theta[b]);
        if (code.contains(word)) out.push_back(cand);
    }
    return out;
}

} // namespace chaincodes
