#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chaincodes/multidim.hpp"
#include "chaincodes/oracle.hpp"

namespace chaincodes {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse = 2;
inline constexpr int precondition = 3;
inline constexpr int verification = 4;
inline constexpr int budget = 5;
} // namespace exit_code

struct JobConfig {
    std::string ring_text;
    std::vector<std::size_t> dims;
    std::string gens_text;
    std::string claim_text; // verify: claimed output generators
    std::string method = "auto";
    bool transpose = false;
    bool verify = false;
    std::uint64_t budget = kDefaultOracleBudget;
    std::size_t cert_budget = 4096;
    std::string format = "text"; // text | json
    std::size_t n = 0;           // idempotents / root order
};

struct JobResult {
    int code = 0;
    std::string output;
};

JobResult run_canonical(const JobConfig& cfg);
JobResult run_generate(const JobConfig& cfg);
JobResult run_verify(const JobConfig& cfg);
JobResult run_idempotents(const JobConfig& cfg);
JobResult run_root(const JobConfig& cfg);

/// Oracle certificate suite: literal span equality of input vs output, and
/// for 2D instances the literal I_j / C_j cross-checks. `detail` carries a
/// minimal counterexample word on failure.
struct OracleOutcome {
    bool ok = true;
    std::string detail;
};
OracleOutcome oracle_certify(const RingPtr& ring, const std::vector<std::size_t>& dims,
                             const std::vector<MultiPoly>& input_gens,
                             const std::vector<MultiPoly>& output_gens, std::uint64_t budget);

} // namespace chaincodes
