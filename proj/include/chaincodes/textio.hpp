#pragma once

#include <string>
#include <vector>

#include "chaincodes/multipoly.hpp"
#include "chaincodes/poly.hpp"
#include "chaincodes/ring.hpp"

namespace chaincodes {

/// Ring spec grammar: `Z/<p^nu>` (e.g. `Z/25`) or `F<q>[g]/(g^<nu>)`
/// (e.g. `F4[g]/(g^2)`).
RingPtr parse_ring(const std::string& text);

/// Full expression grammar over the ring: integers, `g`, `w`, variables
/// (`x`, `y`, `x1..xk` according to dims), `+ - * ^` and parentheses.
/// Negative integers reduce into the ring.
MultiPoly parse_polynomial(const RingPtr& ring, const std::vector<std::size_t>& dims,
                           const std::string& text);
/// Splits on `;` (or top-level `,`) and parses each entry; empty input or
/// lone whitespace yields an empty list.
std::vector<MultiPoly> parse_polynomial_list(const RingPtr& ring,
                                             const std::vector<std::size_t>& dims,
                                             const std::string& text);
std::uint64_t parse_element(const RingPtr& ring, const std::string& text);

std::string to_string(const MultiPoly& f);
std::string to_string(const Poly& f, const std::string& var = "x");
std::string to_string(const QuotPoly& f, const std::string& var = "x");

} // namespace chaincodes
