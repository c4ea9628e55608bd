#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "chaincodes/jobs.hpp"

namespace {

std::string maybe_from_file(const std::string& text) {
    if (text.empty() || text[0] != '@') return text;
    std::ifstream in(text.substr(1));
    if (!in) throw std::runtime_error("cannot open " + text.substr(1));
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void add_common(CLI::App* cmd, chaincodes::JobConfig& cfg, std::string& dims_text) {
    cmd->add_option("--ring", cfg.ring_text, "ring spec, e.g. Z/25 or F4[g]/(g^2)")->required();
    cmd->add_option("--dims", dims_text, "comma-separated lengths, e.g. 10,4");
    cmd->add_option("--format", cfg.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
}

std::vector<std::size_t> parse_dims(const std::string& text) {
    std::vector<std::size_t> dims;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        dims.push_back(static_cast<std::size_t>(std::stoull(part)));
    }
    return dims;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generator sets for cyclic and multidimensional cyclic codes over finite chain rings"};
    app.require_subcommand(1);

    chaincodes::JobConfig cfg;
    std::string dims_text;

    auto* canonical = app.add_subcommand("canonical", "Theorem-style staircase generators of a 1D code");
    add_common(canonical, cfg, dims_text);
    canonical->add_option("--gens", cfg.gens_text, "generator polynomials (inline or @file)");

    auto* generate = app.add_subcommand("generate", "generators of a multidimensional cyclic code");
    add_common(generate, cfg, dims_text);
    generate->add_option("--gens", cfg.gens_text, "generator polynomials (inline or @file)");
    generate->add_option("--method", cfg.method, "auto, method1, or method2")
        ->check(CLI::IsMember({"auto", "method1", "method2"}));
    generate->add_flag("--transpose", cfg.transpose, "swap the roles of the first two variables");
    generate->add_flag("--verify", cfg.verify, "run the brute-force oracle certificates");
    generate->add_option("--budget", cfg.budget, "oracle word budget");
    generate->add_option("--cert-budget", cfg.cert_budget, "span-certification coefficient budget");

    auto* verify = app.add_subcommand("verify", "brute-force oracle certificates for an instance");
    add_common(verify, cfg, dims_text);
    verify->add_option("--gens", cfg.gens_text, "input generator polynomials (inline or @file)");
    verify->add_option("--claim", cfg.claim_text, "claimed output generators (inline or @file)");
    verify->add_option("--method", cfg.method, "construction to check when no claim is given")
        ->check(CLI::IsMember({"auto", "method1", "method2"}));
    verify->add_flag("--transpose", cfg.transpose, "swap the roles of the first two variables");
    verify->add_option("--budget", cfg.budget, "oracle word budget");
    verify->add_option("--cert-budget", cfg.cert_budget, "span-certification coefficient budget");

    auto* idem = app.add_subcommand("idempotents", "primitive central idempotents of R[y]/(y^n - 1)");
    add_common(idem, cfg, dims_text);
    idem->add_option("-n,--order", cfg.n, "the order n (requires n | q-1)")->required();

    auto* root = app.add_subcommand("root", "a primitive n-th root of unity in the ring");
    add_common(root, cfg, dims_text);
    root->add_option("-n,--order", cfg.n, "the order n (requires n | q-1)")->required();

    CLI11_PARSE(app, argc, argv);

    chaincodes::JobResult result;
    try {
        cfg.dims = parse_dims(dims_text);
        cfg.gens_text = maybe_from_file(cfg.gens_text);
        cfg.claim_text = maybe_from_file(cfg.claim_text);
        if (canonical->parsed()) result = chaincodes::run_canonical(cfg);
        if (generate->parsed()) result = chaincodes::run_generate(cfg);
        if (verify->parsed()) result = chaincodes::run_verify(cfg);
        if (idem->parsed()) result = chaincodes::run_idempotents(cfg);
        if (root->parsed()) result = chaincodes::run_root(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return chaincodes::exit_code::precondition;
    }
    if (result.code == chaincodes::exit_code::ok) {
        std::cout << result.output;
    } else {
        std::cerr << result.output;
    }
    return result.code;
}
