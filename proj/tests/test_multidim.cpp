#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "chaincodes/multidim.hpp"
#include "chaincodes/oracle.hpp"
#include "chaincodes/textio.hpp"

using namespace chaincodes;

namespace {

RingPtr z4() { return ChainRing::integers_mod(2, 2); }
RingPtr z9() { return ChainRing::integers_mod(3, 2); }
RingPtr z25() { return ChainRing::integers_mod(5, 2); }
RingPtr f4g2() { return ChainRing::gamma_extension(2, 2, 2); }

MultiPoly in_var(const RingPtr& ring, const std::vector<std::size_t>& dims, std::size_t var,
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

MultiPoly random_mp(const RingPtr& ring, const std::vector<std::size_t>& dims,
                    std::mt19937_64& rng) {
    MultiPoly f(ring, dims);
    for (auto& c : f.coeffs()) c = rng() % ring->order;
    return f;
}

/// Output generators of method 1 must carry the staircase generator of the
/// matching level ideal as their top y-coefficient.
void check_top_coefficient_pattern(const CodeSpan& span, const GeneratorReport& rep) {
    auto ideals = method1_ideals(span);
    std::size_t n = span.dims()[1];
    std::size_t t = 0;
    for (std::size_t j = 0; j < n; ++j) {
        for (const auto& entry : ideals[j].entries) {
            REQUIRE(t < rep.generators.size());
            const MultiPoly& g = rep.generators[t++];
            std::size_t d = n - 1 - j;
            CHECK(g.var_degree(1) == d);
            Poly top = g.coeff_slice(1, d).as_poly();
            CHECK(top == entry.monic.times_gamma_pow(entry.gamma_exp));
        }
    }
    CHECK(t == rep.generators.size());
}

} // namespace

TEST_CASE("idempotent family fixtures") {
    auto fam = idempotents(z25(), 4);
    CHECK(fam.zeta == 7);
    CHECK(fam.thetas[0] == Poly(z25(), {19, 19, 19, 19}));
    CHECK(fam.thetas[1] == Poly(z25(), {19, 17, 6, 8}));  // 19*(1 + 18y - y^2 + 7y^3)
    CHECK(fam.thetas[2] == Poly(z25(), {19, 6, 19, 6}));  // 19*(1 - y + y^2 - y^3)
    CHECK(fam.thetas[3] == Poly(z25(), {19, 8, 6, 17}));  // 19*(1 + 7y - y^2 + 18y^3)

    auto one = idempotents(z9(), 1);
    CHECK(one.thetas.size() == 1);
    CHECK(one.thetas[0] == Poly::constant(z9(), 1));

    auto two = idempotents(z9(), 2);
    CHECK(two.thetas[0] == Poly(z9(), {5, 5})); // 5*(1 + y)
    CHECK(two.thetas[1] == Poly(z9(), {5, 4})); // 5*(1 - y)

    CHECK_THROWS_AS(idempotents(z25(), 3), OrderNotCompatible);
}

TEST_CASE("idempotent identities across the full grid") {
    // construction verifies orthogonality, idempotency, partition of unity
    // and the eigen-action exactly; reaching here means all held
    CHECK_NOTHROW(idempotents(z9(), 2));
    CHECK_NOTHROW(idempotents(z25(), 2));
    CHECK_NOTHROW(idempotents(z25(), 4));
    CHECK_NOTHROW(idempotents(f4g2(), 3));
    auto f13 = ChainRing::gamma_extension(13, 1, 2);
    for (std::size_t n : {2, 3, 4, 6, 12}) CHECK_NOTHROW(idempotents(f13, n));
    auto f17 = ChainRing::gamma_extension(17, 1, 2);
    CHECK_NOTHROW(idempotents(f17, 4));
}

TEST_CASE("method1_ideals fixture over Z/4") {
    auto R = z4();
    auto gens = parse_polynomial_list(R, {2, 2}, "2 + 2*y; (x+1)*y");
    auto span = span_from_generators(R, {2, 2}, gens);
    auto ideals = method1_ideals(span);
    REQUIRE(ideals.size() == 2);
    // I_0 = <x+1, 2>: staircase (1, 1), (0, x+1)
    REQUIRE(ideals[0].entries.size() == 2);
    CHECK(ideals[0].entries[0].gamma_exp == 1);
    CHECK(ideals[0].entries[0].monic == Poly::constant(R, 1));
    CHECK(ideals[0].entries[1].gamma_exp == 0);
    CHECK(ideals[0].entries[1].monic == Poly(R, {1, 1}));
    // I_1 = <x+1> (y^2 = 1 wraps (x+1)*y*y back to a univariate codeword)
    REQUIRE(ideals[1].entries.size() == 1);
    CHECK(ideals[1].entries[0].gamma_exp == 0);
    CHECK(ideals[1].entries[0].monic == Poly(R, {1, 1}));

    // literal cross-check of both levels
    auto code = enumerate_span(R, {2, 2}, gens);
    for (std::size_t j = 0; j < 2; ++j) {
        auto literal = literal_Ij(code, j);
        auto algebraic = enumerate_span(R, {2}, ideals[j].generator_multipolys()).words;
        CHECK(literal == algebraic);
    }

    // full and zero codes
    auto full = span_from_generators(R, {2, 2}, {MultiPoly::constant(R, {2, 2}, 1)});
    for (const auto& stair : method1_ideals(full)) {
        REQUIRE(stair.entries.size() == 1);
        CHECK(stair.entries[0].gamma_exp == 0);
        CHECK(stair.entries[0].monic == Poly::constant(R, 1));
    }
    for (const auto& stair : method1_ideals(span_from_generators(R, {2, 2}, {})))
        CHECK(stair.empty());
}

TEST_CASE("method1 on a separable generator round-trips") {
    auto R = z9();
    auto gens = parse_polynomial_list(R, {3, 2}, "(x^2 + x + 1)*(y + 1)");
    auto span = span_from_generators(R, {3, 2}, gens);
    auto rep = method1_generators(span);
    CHECK(rep.span_certified); // certification throws on mismatch
    CHECK(rep.method == GenMethod::Method1);
    check_top_coefficient_pattern(span, rep);
    CHECK(method1_generators(span_from_generators(R, {3, 2}, {})).generators.empty());
}

TEST_CASE("scaled Example-1-shaped instance") {
    auto G = f4g2();
    std::vector<std::size_t> dims{4, 3};
    // seeded from levels I_0 = <g*u, u^2>, I_1 = <g*u^2>, I_2 = <u^3> with
    // u = x+1; the code generated by the witnesses has strictly larger
    // actual towers (gamma*u^2 lands in I_2 through u*P_1 minus
    // u^3-multiples), so the canonical output has five generators
    auto gens = parse_polynomial_list(
        G, dims,
        "(x+1)^2*(1 + y) + g*(x+1)*y^2;"
        "(x+1)^2 + g*(x+1)*y + (x+1)^2*y^2;"
        "g*(x+1)^2*(1 + y);"
        "(x+1)^3");
    auto span = span_from_generators(G, dims, gens);
    auto ideals = method1_ideals(span);
    REQUIRE(ideals.size() == 3);
    CHECK(ideals[0].entries.size() == 2); // <g*(x+1), (x+1)^2>
    CHECK(ideals[1].entries.size() == 1); // <(x+1)^2 + g*(x+1)>
    CHECK(ideals[2].entries.size() == 2); // <g*(x+1)^2, (x+1)^3>
    auto rep = method1_generators(span);
    CHECK(rep.span_certified);
    CHECK(rep.generators.size() == 5);
    check_top_coefficient_pattern(span, rep);
    // Corollary-2 count: exactly sum of (r_j + 1) over the level ideals
    std::size_t expect = 0;
    for (const auto& stair : ideals) expect += stair.entries.size();
    CHECK(rep.generators.size() == expect);
    // the four seeding witnesses and the canonical output span the same code
    CHECK(codes_equal(span_from_generators(G, dims, rep.generators), span));
}

TEST_CASE("method2 idempotent-code fixture") {
    auto R = z9();
    auto fam = idempotents(R, 2);
    std::vector<std::size_t> dims{1, 2};
    MultiPoly gen = in_var(R, dims, 1, fam.thetas[0]);
    auto span = span_from_generators(R, dims, {gen});
    auto rep = method2_generators(span);
    CHECK(rep.span_certified);
    CHECK(rep.method == GenMethod::Method2);
    REQUIRE(rep.generators.size() == 1);
    CHECK(rep.generators[0] == gen);
    REQUIRE(rep.levels.size() == 2);
    REQUIRE(rep.levels[0].staircase.entries.size() == 1);
    CHECK(rep.levels[0].staircase.entries[0].gamma_exp == 0);
    CHECK(rep.levels[0].staircase.entries[0].monic == Poly::constant(R, 1));
    CHECK(rep.levels[1].staircase.empty());
    for (bool s : rep.separable) CHECK(s);
}

TEST_CASE("scaled Example-2 structure: six separable generators") {
    auto R = z25();
    std::vector<std::size_t> dims{2, 4};
    auto fam = idempotents(R, 4);
    // C_0 = C_2 = <5, x+1> (staircase (1,1),(0,x+1)), C_1 = C_3 = <x-1>
    std::vector<Poly> c02 = {Poly::constant(R, 5), Poly(R, {1, 1})};
    std::vector<Poly> c13 = {Poly(R, {24, 1})};
    std::vector<MultiPoly> gens;
    for (std::size_t j : {0, 2})
        for (const auto& p : c02)
            gens.push_back(in_var(R, dims, 1, fam.thetas[j]) * in_var(R, dims, 0, p));
    for (std::size_t j : {1, 3})
        for (const auto& p : c13)
            gens.push_back(in_var(R, dims, 1, fam.thetas[j]) * in_var(R, dims, 0, p));
    auto span = span_from_generators(R, dims, gens);
    auto rep = method2_generators(span);
    CHECK(rep.span_certified);
    CHECK(rep.generators.size() == 6);
    for (bool s : rep.separable) CHECK(s);
    // levels come back as C_0, C_1, C_2, C_3 with sizes 2, 1, 2, 1
    REQUIRE(rep.levels.size() == 4);
    CHECK(rep.levels[0].staircase.entries.size() == 2);
    CHECK(rep.levels[1].staircase.entries.size() == 1);
    CHECK(rep.levels[2].staircase.entries.size() == 2);
    CHECK(rep.levels[3].staircase.entries.size() == 1);
}

TEST_CASE("literal C_j equals the evaluation image") {
    auto R = z9();
    std::vector<std::size_t> dims{2, 2};
    auto fam = idempotents(R, 2);
    std::mt19937_64 rng(303);
    for (int it = 0; it < 8; ++it) {
        std::vector<MultiPoly> gens{random_mp(R, dims, rng)};
        auto span = span_from_generators(R, dims, gens);
        auto code = enumerate_span(R, dims, gens);
        for (std::size_t j = 0; j < 2; ++j) {
            std::vector<MultiPoly> ev;
            for (const auto& b : span.basis()) ev.push_back(b.eval_var(1, R->pow(fam.zeta, j)));
            auto image = enumerate_span(R, {2}, ev).words;
            CHECK(literal_Cj(code, fam.thetas[j]) == image);
        }
    }
}

TEST_CASE("cross-method agreement on random small codes") {
    auto G = f4g2();
    std::vector<std::size_t> dims{2, 3}; // 3 | q-1 = 3
    std::mt19937_64 rng(404);
    for (int it = 0; it < 10; ++it) {
        std::vector<MultiPoly> gens{random_mp(G, dims, rng)};
        if (rng() % 2) gens.push_back(random_mp(G, dims, rng).scaled(G->gamma()));
        auto span = span_from_generators(G, dims, gens);
        auto rep1 = method1_generators(span);
        auto rep2 = method2_generators(span);
        CHECK(rep1.span_certified);
        CHECK(rep2.span_certified);
        for (bool s : rep2.separable) CHECK(s);
        auto span1 = span_from_generators(G, dims, rep1.generators);
        auto span2 = span_from_generators(G, dims, rep2.generators);
        CHECK(codes_equal(span1, span2));
        CHECK(codes_equal(span1, span));
    }
}

TEST_CASE("method2 precondition") {
    auto R = z9();
    auto span = span_from_generators(R, {2, 3}, {MultiPoly::constant(R, {2, 3}, 1)});
    CHECK_THROWS_AS(method2_generators(span), OrderNotCompatible); // 3 does not divide 2
}

TEST_CASE("transpose consistency") {
    auto R = z9();
    std::mt19937_64 rng(505);
    for (int it = 0; it < 6; ++it) {
        std::vector<MultiPoly> gens{random_mp(R, {3, 2}, rng)};
        auto span = span_from_generators(R, {3, 2}, gens);
        std::vector<MultiPoly> tgens;
        for (const auto& g : gens) tgens.push_back(transpose(g));
        auto tspan = span_from_generators(R, {2, 3}, tgens);
        auto rep = method1_generators(tspan);
        CHECK(rep.span_certified);
        std::vector<MultiPoly> back;
        for (const auto& g : rep.generators) back.push_back(transpose(g));
        CHECK(codes_equal(span_from_generators(R, {3, 2}, back), span));
    }
}

TEST_CASE("nd_generators base and 2D routing") {
    auto R = z9();
    std::mt19937_64 rng(606);
    // k = 1 reduces to the canonical staircase
    std::vector<MultiPoly> gens1{random_mp(R, {4}, rng)};
    auto span1 = span_from_generators(R, {4}, gens1);
    auto nd1 = nd_generators(R, {4}, gens1);
    auto stair = canonical_generators(span1);
    CHECK(nd1.generators.size() == stair.entries.size());
    auto regen = span_from_generators(R, {4}, nd1.generators);
    CHECK(codes_equal(regen, span1));

    // k = 2 with a trailing divisor dimension routes to method 2
    std::vector<MultiPoly> gens2{random_mp(R, {3, 2}, rng)};
    auto span2 = span_from_generators(R, {3, 2}, gens2);
    auto nd2 = nd_generators(R, {3, 2}, gens2);
    CHECK(nd2.method == GenMethod::Method2);
    CHECK(nd2.span_certified);
    auto m2 = method2_generators(span2);
    REQUIRE(nd2.generators.size() == m2.generators.size());
    for (std::size_t i = 0; i < m2.generators.size(); ++i)
        CHECK(nd2.generators[i] == m2.generators[i]);

    // k = 2 with no divisor dimension routes to method 1
    auto R4 = z4();
    std::vector<MultiPoly> gens3{random_mp(R4, {3, 3}, rng)};
    auto span3 = span_from_generators(R4, {3, 3}, gens3);
    auto nd3 = nd_generators(R4, {3, 3}, gens3);
    CHECK(nd3.method == GenMethod::Method1);
    auto m1 = method1_generators(span3);
    REQUIRE(nd3.generators.size() == m1.generators.size());
    for (std::size_t i = 0; i < m1.generators.size(); ++i)
        CHECK(nd3.generators[i] == m1.generators[i]);
}

TEST_CASE("nd_generators reorders a leading divisor dimension") {
    auto R = z9();
    std::mt19937_64 rng(707);
    // dims (2, 3): 2 | q-1 but 3 does not; the divisor dimension is routed
    // last and the output returns in the original variable order
    std::vector<MultiPoly> gens{random_mp(R, {2, 3}, rng)};
    auto span = span_from_generators(R, {2, 3}, gens);
    auto rep = nd_generators(R, {2, 3}, gens);
    CHECK(rep.span_certified);
    for (const auto& g : rep.generators) CHECK(g.dims() == std::vector<std::size_t>{2, 3});
    CHECK(codes_equal(span_from_generators(R, {2, 3}, rep.generators), span));
}

TEST_CASE("nd_generators on 3D instances") {
    auto R = z9();
    std::mt19937_64 rng(808);
    for (const auto& dims : std::vector<std::vector<std::size_t>>{{2, 2, 2}, {3, 2, 2}}) {
        for (int it = 0; it < 5; ++it) {
            std::vector<MultiPoly> gens{random_mp(R, dims, rng)};
            if (rng() % 2) gens.push_back(random_mp(R, dims, rng).scaled(3));
            auto rep = nd_generators(R, dims, gens);
            CHECK(rep.span_certified);
            // trailing dims of length 2 divide q-1 = 2, so the output is in
            // product form across those variables
            for (const auto& g : rep.generators) CHECK(is_separable(g));
        }
    }
}

TEST_CASE("mixed routing yields the hybrid label") {
    auto R = z9();
    std::mt19937_64 rng(911);
    // dims (3, 3, 2): the trailing 2 divides q-1 = 2, the middle 3 does not,
    // so the recursion splits once and then peels
    std::vector<MultiPoly> gens{random_mp(R, {3, 3, 2}, rng)};
    auto rep = nd_generators(R, {3, 3, 2}, gens);
    CHECK(rep.method == GenMethod::Hybrid);
    CHECK(rep.span_certified);
}

TEST_CASE("certification budget marks oversized outputs uncertified") {
    auto R = z9();
    std::mt19937_64 rng(912);
    std::vector<MultiPoly> gens{random_mp(R, {3, 2}, rng)};
    NdOptions opts;
    opts.cert_budget = 1;
    auto rep = nd_generators(R, {3, 2}, gens, opts);
    CHECK(!rep.certification_attempted);
    CHECK(!rep.span_certified);
    auto span = span_from_generators(R, {3, 2}, gens);
    CHECK(codes_equal(span_from_generators(R, {3, 2}, rep.generators), span));
}

TEST_CASE("length-1 dimensions degrade gracefully") {
    auto R = z9();
    std::mt19937_64 rng(1010);
    std::vector<MultiPoly> gens{random_mp(R, {3, 1}, rng)};
    auto rep = nd_generators(R, {3, 1}, gens);
    CHECK(rep.span_certified);
    auto span = span_from_generators(R, {3, 1}, gens);
    CHECK(codes_equal(span_from_generators(R, {3, 1}, rep.generators), span));
    auto tiny = nd_generators(R, {1, 1}, {MultiPoly::constant(R, {1, 1}, 3)});
    CHECK(tiny.span_certified);
    REQUIRE(tiny.generators.size() == 1);
    CHECK(tiny.generators[0].coeff({0, 0}) == 3);
}

TEST_CASE("nd auto routing never raises OrderNotCompatible") {
    auto R = z4(); // q-1 = 1, every dim of length > 1 is a non-divisor
    std::mt19937_64 rng(909);
    std::vector<MultiPoly> gens{random_mp(R, {2, 3}, rng)};
    CHECK_NOTHROW(nd_generators(R, {2, 3}, gens));
    auto rep = nd_generators(R, {2, 3}, gens);
    CHECK(rep.method == GenMethod::Method1);
}
