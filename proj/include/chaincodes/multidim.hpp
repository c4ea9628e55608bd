#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chaincodes/idempotents.hpp"
#include "chaincodes/multipoly.hpp"
#include "chaincodes/span.hpp"

namespace chaincodes {

enum class GenMethod { Method1, Method2, Hybrid };

/// One peeled or evaluated level code. For 1D level codes the Theorem-style
/// staircase is attached; deeper recursion levels carry their generators
/// verbatim.
struct LevelReport {
    std::string path; // route through the recursion, e.g. "y:I_0" or "x3:C_2"
    std::size_t index = 0;
    std::string kind; // "ideal", "evaluation", or "canonical"
    CanonicalGenSet staircase;
    std::vector<MultiPoly> generators; // level-code generators when not 1D
};

struct GeneratorReport {
    GenMethod method = GenMethod::Method1;
    std::vector<std::size_t> dims;
    std::vector<MultiPoly> generators;
    std::vector<bool> separable;
    std::vector<LevelReport> levels;
    bool certification_attempted = false;
    bool span_certified = false;
};

/// The level ideals I_j of a 2D span, j = 0..n-1: the ideal of top
/// y-coefficients over codewords of y-degree <= n-1-j, read from the
/// y-graded echelon form and returned in canonical staircase form.
std::vector<CanonicalGenSet> method1_ideals(const CodeSpan& span);

/// Theorem-2 peeling for a 2D span: one witness codeword per staircase
/// generator of each I_j, with the generator as its top y-coefficient.
/// The output span is certified equal to the input.
GeneratorReport method1_generators(const CodeSpan& span);

/// Theorem-5 separable generators for a 2D span with n | q-1: evaluation
/// images C_j at zeta^j are put in staircase form and multiplied by the
/// matching idempotents. The output span is certified equal to the input.
GeneratorReport method2_generators(const CodeSpan& span);

struct NdOptions {
    /// Span-equality certification runs only when the ambient coefficient
    /// count (product of dims) stays within this budget.
    std::size_t cert_budget = 4096;
    int force_method = 0; // 0 auto, 1 peeling only, 2 idempotent split
    bool transpose = false;
};

/// The recursive nD construction: dimensions dividing q-1 are moved last and
/// handled by idempotent splits (evaluation at zeta powers); the remaining
/// outermost variable is peeled; the 1D base case is the canonical
/// staircase. Auto routing never fails on divisibility, it just falls back
/// to peeling.
GeneratorReport nd_generators(const RingPtr& ring, const std::vector<std::size_t>& dims,
                              const std::vector<MultiPoly>& gens, const NdOptions& opts = {});

} // namespace chaincodes
