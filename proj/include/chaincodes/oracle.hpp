#pragma once

#include <cstdint>
#include <vector>

#include "chaincodes/multipoly.hpp"
#include "chaincodes/poly.hpp"
#include "chaincodes/ring.hpp"

namespace chaincodes {

inline constexpr std::uint64_t kDefaultOracleBudget = 1ull << 24;

/// Literal set-of-words realization of a code, used to certify the algebraic
/// path. Words are encoded in mixed radix |R| over the flat coefficient
/// positions. This module deliberately shares no reduction machinery with
/// the echelon-form code.
struct EnumeratedCode {
    RingPtr ring;
    std::vector<std::size_t> dims;
    std::vector<std::uint64_t> words; // sorted encoded words

    std::size_t size() const { return words.size(); }
    bool contains(std::uint64_t word) const;
};

std::uint64_t encode_word(const MultiPoly& f);
MultiPoly decode_word(const RingPtr& ring, const std::vector<std::size_t>& dims,
                      std::uint64_t word);

/// Fixed-point closure of the generators under addition, ring scalars and
/// every cyclic shift. Throws BudgetExceeded when |R|^(prod dims) > budget.
EnumeratedCode enumerate_span(const RingPtr& ring, const std::vector<std::size_t>& dims,
                              const std::vector<MultiPoly>& gens,
                              std::uint64_t budget = kDefaultOracleBudget);

/// The literal I_j: top y-coefficients of enumerated codewords of y-degree
/// <= n-1-j. Returns sorted encoded univariate words of length m.
std::vector<std::uint64_t> literal_Ij(const EnumeratedCode& code, std::size_t j);

/// The literal C_j: all univariate g with g(x) * theta_j(y) in the code,
/// filtered over every |R|^m candidate.
std::vector<std::uint64_t> literal_Cj(const EnumeratedCode& code, const Poly& theta_j,
                                      std::uint64_t budget = kDefaultOracleBudget);

} // namespace chaincodes
