#include "chaincodes/multidim.hpp"

#include <algorithm>
#include <numeric>

#include "chaincodes/detail/howell.hpp"
#include "chaincodes/errors.hpp"

namespace chaincodes {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
    std::size_t n = 1;
    for (auto m : dims) n *= m;
    return n;
}

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

std::string var_name(std::size_t k, std::size_t var) {
    if (k == 1) return "x";
    if (k == 2) return var == 0 ? "x" : "y";
    return "x" + std::to_string(var + 1);
}

/// Embed a (k-1)-dim class as the x_k-degree-0 slice of a k-dim class.
MultiPoly embed_lower(const MultiPoly& g, const std::vector<std::size_t>& dims) {
    MultiPoly out(g.ring(), dims);
    std::copy(g.coeffs().begin(), g.coeffs().end(), out.coeffs().begin());
    return out;
}

/// A univariate polynomial placed in variable `var` of a k-dim class.
MultiPoly poly_in_var(const RingPtr& ring, const std::vector<std::size_t>& dims, std::size_t var,
                      const Poly& f) {
    MultiPoly out(ring, dims);
    std::vector<std::size_t> e(dims.size(), 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        e[var] = i % dims[var];
        out.set_coeff(e, ring->add(out.coeff(e), f.coeffs()[i]));
    }
    return out;
}

struct CoreResult {
    std::vector<MultiPoly> gens;
    std::vector<LevelReport> levels;
    bool used_m1 = false;
    bool used_m2 = false;
};

CoreResult core(const RingPtr& ring, const std::vector<std::size_t>& dims,
                const std::vector<MultiPoly>& gens, int force, const std::string& path,
                const std::vector<std::string>& names);

CoreResult core_base_1d(const RingPtr& ring, const std::vector<std::size_t>& dims,
                        const std::vector<MultiPoly>& gens, const std::string& path) {
    CoreResult res;
    CodeSpan span = CodeSpan::from_generators(ring, dims, gens);
    CanonicalGenSet stair = canonical_generators(span);
    res.gens = stair.generator_multipolys();
    LevelReport lvl;
    lvl.path = path.empty() ? "canonical" : path;
    lvl.kind = "canonical";
    lvl.staircase = stair;
    res.levels.push_back(std::move(lvl));
    return res;
}

CoreResult core_split(const RingPtr& ring, const std::vector<std::size_t>& dims,
                      const std::vector<MultiPoly>& gens, int force, const std::string& path,
                      const std::vector<std::string>& names) {
    CoreResult res;
    res.used_m2 = true;
    std::size_t k = dims.size();
    std::size_t n = dims[k - 1];
    std::vector<std::size_t> rest(dims.begin(), dims.end() - 1);
    std::vector<std::string> rest_names(names.begin(), names.end() - 1);
    IdempotentFamily fam = idempotents(ring, n);
    for (std::size_t j = 0; j < n; ++j) {
        u64 zj = ring->pow(fam.zeta, j);
        std::vector<MultiPoly> evgens;
        for (const auto& g : gens) evgens.push_back(g.eval_var(k - 1, zj));
        std::string lpath = (path.empty() ? "" : path + "/") + names[k - 1] + ":C_" + std::to_string(j);
        CoreResult sub = core(ring, rest, evgens, force == 2 ? 0 : force, lpath, rest_names);
        MultiPoly theta = poly_in_var(ring, dims, k - 1, fam.thetas[j]);
        for (const auto& sg : sub.gens) res.gens.push_back(theta * embed_lower(sg, dims));
        LevelReport lvl;
        lvl.path = lpath;
        lvl.index = j;
        lvl.kind = "evaluation";
        if (rest.size() == 1 && !sub.levels.empty()) {
            lvl.staircase = sub.levels.front().staircase;
        } else {
            lvl.generators = sub.gens;
        }
        res.levels.push_back(std::move(lvl));
        if (rest.size() > 1)
            for (auto& s : sub.levels) res.levels.push_back(std::move(s));
        res.used_m1 = res.used_m1 || sub.used_m1;
        res.used_m2 = true;
    }
    return res;
}

CoreResult core_peel(const RingPtr& ring, const std::vector<std::size_t>& dims,
                     const std::vector<MultiPoly>& gens, int force, const std::string& path,
                     const std::vector<std::string>& names) {
    CoreResult res;
    res.used_m1 = true;
    const ChainRing& R = *ring;
    std::size_t k = dims.size();
    std::size_t n = dims[k - 1];
    std::vector<std::size_t> rest(dims.begin(), dims.end() - 1);
    std::vector<std::string> rest_names(names.begin(), names.end() - 1);
    std::size_t rest_size = product(rest);

    PositionOrder order = PositionOrder::graded_last(dims);
    detail::HowellForm form(R, order.pos_of_rank.size());
    form.set_shift_perms(shift_perms_ranked(dims, order));
    for (const auto& g : gens) {
        std::vector<u64> v(g.size(), 0);
        for (std::size_t pos = 0; pos < g.size(); ++pos)
            v[order.rank_of_pos[pos]] = g.coeffs()[pos];
        form.add(std::move(v));
    }
    form.build();

    std::vector<const detail::HowellForm::Row*> row_at_rank(order.pos_of_rank.size(), nullptr);
    for (const auto& row : form.rows()) row_at_rank[row.rank] = &row;

    PositionOrder inner = PositionOrder::canonical(rest);
    for (std::size_t block = 0; block < n; ++block) {
        std::size_t d = n - 1 - block; // x_k-degree of rows pivoted in this block
        std::size_t j = n - 1 - d;     // level index per the I_j convention
        std::vector<MultiPoly> tops;
        std::vector<const detail::HowellForm::Row*> block_rows;
        for (std::size_t r = block * rest_size; r < (block + 1) * rest_size; ++r)
            if (row_at_rank[r]) block_rows.push_back(row_at_rank[r]);
        for (const auto* row : block_rows) {
            MultiPoly top(ring, rest);
            for (std::size_t ir = 0; ir < rest_size; ++ir)
                top.coeffs()[inner.pos_of_rank[ir]] = row->v[block * rest_size + ir];
            tops.push_back(std::move(top));
        }
        std::string lpath = (path.empty() ? "" : path + "/") + names[k - 1] + ":I_" + std::to_string(j);
        CoreResult sub = core(ring, rest, tops, force, lpath, rest_names);
        // Witness lift: a codeword of x_k-degree d whose top coefficient is
        // the recursive generator, assembled from this block's echelon rows.
        for (const auto& sg : sub.gens) {
            std::vector<u64> rho(rest_size, 0);
            for (std::size_t pos = 0; pos < rest_size; ++pos)
                rho[inner.rank_of_pos[pos]] = sg.coeffs()[pos];
            std::vector<u64> witness(order.pos_of_rank.size(), 0);
            std::size_t scan = 0;
            while (true) {
                int l = -1;
                for (std::size_t i = scan; i < rest_size; ++i)
                    if (rho[i] != 0) {
                        l = static_cast<int>(i);
                        break;
                    }
                if (l < 0) break;
                std::size_t ir = static_cast<std::size_t>(l);
                scan = ir;
                const auto* row = row_at_rank[block * rest_size + ir];
                u32 w = R.valuation(rho[ir]);
                if (!row || w < row->val)
                    throw WitnessNotFound("level generator is not reachable from the echelon rows");
                u64 f = R.mul_gamma_pow(R.div_gamma_pow(rho[ir], w), w - row->val);
                for (std::size_t i = ir; i < rest_size; ++i) {
                    u64 rv = row->v[block * rest_size + i];
                    if (rv != 0) rho[i] = R.sub(rho[i], R.mul(f, rv));
                }
                for (std::size_t i = row->rank; i < witness.size(); ++i)
                    if (row->v[i] != 0) witness[i] = R.add(witness[i], R.mul(f, row->v[i]));
            }
            MultiPoly wpoly(ring, dims);
            for (std::size_t rk = 0; rk < witness.size(); ++rk)
                wpoly.coeffs()[order.pos_of_rank[rk]] = witness[rk];
            res.gens.push_back(std::move(wpoly));
        }
        LevelReport lvl;
        lvl.path = lpath;
        lvl.index = j;
        lvl.kind = "ideal";
        if (rest.size() == 1 && !sub.levels.empty()) {
            lvl.staircase = sub.levels.front().staircase;
        } else {
            lvl.generators = sub.gens;
        }
        res.levels.push_back(std::move(lvl));
        if (rest.size() > 1)
            for (auto& s : sub.levels) res.levels.push_back(std::move(s));
        res.used_m1 = true;
        res.used_m2 = res.used_m2 || sub.used_m2;
    }
    return res;
}

CoreResult core(const RingPtr& ring, const std::vector<std::size_t>& dims,
                const std::vector<MultiPoly>& gens, int force, const std::string& path,
                const std::vector<std::string>& names) {
    if (dims.size() == 1) return core_base_1d(ring, dims, gens, path);
    std::size_t n = dims.back();
    bool divisor = (ring->q - 1) % n == 0;
    bool split;
    if (force == 2) {
        if (!divisor)
            throw OrderNotCompatible("method 2 needs the target length to divide q-1; length " +
                                     std::to_string(n) + ", q = " + std::to_string(ring->q));
        split = true;
    } else if (force == 1) {
        split = false;
    } else {
        split = divisor;
    }
    return split ? core_split(ring, dims, gens, force, path, names)
                 : core_peel(ring, dims, gens, force, path, names);
}

GenMethod label(const CoreResult& res) {
    if (res.used_m1 && res.used_m2) return GenMethod::Hybrid;
    if (res.used_m2) return GenMethod::Method2;
    return GenMethod::Method1;
}

GeneratorReport finish_report(const RingPtr& ring, const std::vector<std::size_t>& dims,
                              CoreResult res, const CodeSpan* input_span, bool attempt_cert) {
    GeneratorReport rep;
    rep.method = label(res);
    rep.dims = dims;
    rep.generators = std::move(res.gens);
    rep.levels = std::move(res.levels);
    for (const auto& g : rep.generators) rep.separable.push_back(is_separable(g));
    if (attempt_cert) {
        rep.certification_attempted = true;
        CodeSpan out_span = CodeSpan::from_generators(ring, dims, rep.generators);
        bool equal;
        if (input_span) {
            equal = *input_span == out_span;
        } else {
            equal = true;
        }
        if (!equal) throw std::logic_error("construction output does not regenerate the input span");
        rep.span_certified = true;
    }
    return rep;
}

} // namespace

std::vector<CanonicalGenSet> method1_ideals(const CodeSpan& span) {
    if (span.dims().size() != 2) throw SpecMismatch("method 1 level ideals require two dimensions");
    const RingPtr& ring = span.ring();
    std::size_t m = span.dims()[0], n = span.dims()[1];

    PositionOrder order = PositionOrder::graded_last(span.dims());
    detail::HowellForm form(*ring, order.pos_of_rank.size());
    form.set_shift_perms(shift_perms_ranked(span.dims(), order));
    for (const auto& g : span.basis()) {
        std::vector<u64> v(g.size(), 0);
        for (std::size_t pos = 0; pos < g.size(); ++pos)
            v[order.rank_of_pos[pos]] = g.coeffs()[pos];
        form.add(std::move(v));
    }
    form.build();

    PositionOrder inner = PositionOrder::canonical({m});
    std::vector<CanonicalGenSet> out;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t block = j; // block j holds pivots of y-degree n-1-j
        std::vector<MultiPoly> tops;
        for (const auto& row : form.rows()) {
            if (row.rank < block * m || row.rank >= (block + 1) * m) continue;
            MultiPoly top(ring, {m});
            for (std::size_t ir = 0; ir < m; ++ir)
                top.coeffs()[inner.pos_of_rank[ir]] = row.v[block * m + ir];
            tops.push_back(std::move(top));
        }
        out.push_back(canonical_generators(CodeSpan::from_generators(ring, {m}, tops)));
    }
    return out;
}

GeneratorReport method1_generators(const CodeSpan& span) {
    if (span.dims().size() != 2) throw SpecMismatch("method 1 requires two dimensions");
    CoreResult res = core(span.ring(), span.dims(), span.basis(), 1, "", {"x", "y"});
    return finish_report(span.ring(), span.dims(), std::move(res), &span, true);
}

GeneratorReport method2_generators(const CodeSpan& span) {
    if (span.dims().size() != 2) throw SpecMismatch("method 2 requires two dimensions");
    CoreResult res = core(span.ring(), span.dims(), span.basis(), 2, "", {"x", "y"});
    return finish_report(span.ring(), span.dims(), std::move(res), &span, true);
}

GeneratorReport nd_generators(const RingPtr& ring, const std::vector<std::size_t>& dims,
                              const std::vector<MultiPoly>& gens, const NdOptions& opts) {
    if (dims.empty()) throw std::invalid_argument("dims must be nonempty");
    for (const auto& g : gens)
        if (g.dims() != dims) throw SpecMismatch("generator dims mismatch");

    // Route divisor dimensions last (they admit idempotent splits); the
    // reorder is undone on every reported polynomial. Forced methods keep
    // the declared variable orientation.
    std::vector<std::size_t> perm(dims.size());
    std::iota(perm.begin(), perm.end(), 0);
    if (opts.transpose && dims.size() == 2) std::swap(perm[0], perm[1]);
    if (opts.force_method == 0)
        std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
            bool da = (ring->q - 1) % dims[a] == 0;
            bool db = (ring->q - 1) % dims[b] == 0;
            return !da && db;
        });
    bool identity = true;
    for (std::size_t i = 0; i < perm.size(); ++i) identity = identity && perm[i] == i;

    std::vector<std::size_t> work_dims(dims.size());
    for (std::size_t i = 0; i < perm.size(); ++i) work_dims[i] = dims[perm[i]];
    std::vector<MultiPoly> work_gens;
    for (const auto& g : gens) work_gens.push_back(identity ? g : g.permuted_dims(perm));
    std::vector<std::string> names(dims.size());
    for (std::size_t i = 0; i < perm.size(); ++i) names[i] = var_name(dims.size(), perm[i]);

    CoreResult res = core(ring, work_dims, work_gens, opts.force_method, "", names);
    if (!identity) {
        std::vector<std::size_t> back(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) back[perm[i]] = i;
        for (auto& g : res.gens) g = g.permuted_dims(back);
        for (auto& lvl : res.levels)
            for (auto& g : lvl.generators) {
                // level-code polynomials live over truncated dims; leave them
                // in routed order, the path records the route.
                (void)g;
            }
    }

    bool attempt = product(dims) <= opts.cert_budget;
    GeneratorReport rep;
    if (attempt) {
        CodeSpan input_span = CodeSpan::from_generators(ring, dims, gens);
        rep = finish_report(ring, dims, std::move(res), &input_span, true);
    } else {
        rep = finish_report(ring, dims, std::move(res), nullptr, false);
    }
    return rep;
}

} // namespace chaincodes
