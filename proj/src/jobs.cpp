#include "chaincodes/jobs.hpp"

#include <functional>
#include <sstream>

#include "chaincodes/textio.hpp"
#include "json.hpp"

namespace chaincodes {

using json = nlohmann::ordered_json;
using u64 = std::uint64_t;

namespace {


JobResult guarded(const std::function<JobResult()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        return {exit_code::parse,
                "parse error at line " + std::to_string(e.line) + ", column " +
                    std::to_string(e.column) + ": " + e.what() + "\n"};
    } catch (const BudgetExceeded& e) {
        return {exit_code::budget, std::string("budget exceeded: ") + e.what() + "\n"};
    } catch (const OrderNotCompatible& e) {
        return {exit_code::precondition, std::string("precondition violated: ") + e.what() + "\n"};
    } catch (const NotAUnit& e) {
        return {exit_code::precondition, std::string("precondition violated: ") + e.what() + "\n"};
    } catch (const NotSimpleRoot& e) {
        return {exit_code::precondition, std::string("precondition violated: ") + e.what() + "\n"};
    } catch (const RootOrderViolation& e) {
        return {exit_code::precondition, std::string("precondition violated: ") + e.what() + "\n"};
    } catch (const SpecMismatch& e) {
        return {exit_code::precondition, std::string("precondition violated: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {exit_code::precondition, std::string("precondition violated: ") + e.what() + "\n"};
    }
}

std::string dims_text(const std::vector<std::size_t>& dims) {
    std::string s;
    for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
    return s;
}

std::string stair_line(const CanonicalGenSet& stair) {
    if (stair.empty()) return "(zero code)";
    std::string s;
    for (std::size_t i = 0; i < stair.entries.size(); ++i) {
        if (i) s += "; ";
        s += "gamma^" + std::to_string(stair.entries[i].gamma_exp) + " * (" +
             to_string(stair.entries[i].monic) + ")";
    }
    return s;
}

json stair_json(const CanonicalGenSet& stair) {
    json entries = json::array();
    for (const auto& e : stair.entries)
        entries.push_back({{"gamma_exp", e.gamma_exp}, {"monic", to_string(e.monic)}});
    return entries;
}

json levels_json(const std::vector<LevelReport>& levels) {
    json out = json::array();
    for (const auto& lvl : levels) {
        json entry{{"path", lvl.path}, {"index", lvl.index}, {"kind", lvl.kind}};
        if (lvl.staircase.ring) entry["entries"] = stair_json(lvl.staircase);
        if (!lvl.generators.empty()) {
            json gens = json::array();
            for (const auto& g : lvl.generators) gens.push_back(to_string(g));
            entry["generators"] = gens;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::string method_name(GenMethod m) {
    switch (m) {
        case GenMethod::Method1: return "method1";
        case GenMethod::Method2: return "method2";
        default: return "hybrid";
    }
}

int parse_method(const std::string& m) {
    if (m == "auto") return 0;
    if (m == "method1") return 1;
    if (m == "method2") return 2;
    throw std::invalid_argument("unknown method: " + m);
}

std::vector<MultiPoly> construct_output(const RingPtr& ring, const JobConfig& cfg,
                                        const std::vector<MultiPoly>& gens,
                                        GeneratorReport* report_out) {
    if (cfg.dims.size() == 1) {
        CodeSpan span = CodeSpan::from_generators(ring, cfg.dims, gens);
        CanonicalGenSet stair = canonical_generators(span);
        if (report_out) {
            report_out->method = GenMethod::Method1;
            report_out->dims = cfg.dims;
            report_out->generators = stair.generator_multipolys();
            LevelReport lvl;
            lvl.path = "canonical";
            lvl.kind = "canonical";
            lvl.staircase = stair;
            report_out->levels.push_back(std::move(lvl));
        }
        return stair.generator_multipolys();
    }
    NdOptions opts;
    opts.cert_budget = cfg.cert_budget;
    opts.force_method = parse_method(cfg.method);
    opts.transpose = cfg.transpose;
    GeneratorReport rep = nd_generators(ring, cfg.dims, gens, opts);
    std::vector<MultiPoly> out = rep.generators;
    if (report_out) *report_out = std::move(rep);
    return out;
}

} // namespace

OracleOutcome oracle_certify(const RingPtr& ring, const std::vector<std::size_t>& dims,
                             const std::vector<MultiPoly>& input_gens,
                             const std::vector<MultiPoly>& output_gens, std::uint64_t budget) {
    OracleOutcome res;
    EnumeratedCode in_code = enumerate_span(ring, dims, input_gens, budget);
    EnumeratedCode out_code = enumerate_span(ring, dims, output_gens, budget);
    if (in_code.words != out_code.words) {
        // minimal counterexample: smallest encoded word in the symmetric difference
        std::size_t i = 0, j = 0;
        u64 word = 0;
        std::string side;
        while (true) {
            if (i < in_code.words.size() &&
                (j >= out_code.words.size() || in_code.words[i] < out_code.words[j])) {
                word = in_code.words[i];
                side = "input only";
                break;
            }
            if (j < out_code.words.size() &&
                (i >= in_code.words.size() || out_code.words[j] < in_code.words[i])) {
                word = out_code.words[j];
                side = "output only";
                break;
            }
            ++i;
            ++j;
        }
        res.ok = false;
        res.detail = "span mismatch, counterexample (" + side + "): " +
                     to_string(decode_word(ring, dims, word));
        return res;
    }
    if (dims.size() == 2) {
        std::size_t m = dims[0], n = dims[1];
        CodeSpan span = CodeSpan::from_generators(ring, dims, input_gens);
        auto ideals = method1_ideals(span);
        for (std::size_t j = 0; j < n; ++j) {
            auto literal = literal_Ij(in_code, j);
            auto algebraic =
                enumerate_span(ring, {m}, ideals[j].generator_multipolys(), budget).words;
            if (literal != algebraic) {
                res.ok = false;
                res.detail = "literal I_" + std::to_string(j) + " differs from the echelon ideal";
                return res;
            }
        }
        if ((ring->q - 1) % n == 0) {
            IdempotentFamily fam = idempotents(ring, n);
            for (std::size_t j = 0; j < n; ++j) {
                u64 zj = ring->pow(fam.zeta, j);
                std::vector<MultiPoly> ev;
                for (const auto& b : span.basis()) ev.push_back(b.eval_var(1, zj));
                auto image = enumerate_span(ring, {m}, ev, budget).words;
                auto literal = literal_Cj(in_code, fam.thetas[j], budget);
                if (image != literal) {
                    res.ok = false;
                    res.detail = "literal C_" + std::to_string(j) + " differs from the evaluation image";
                    return res;
                }
            }
        }
    }
    return res;
}

JobResult run_canonical(const JobConfig& cfg) {
    return guarded([&]() -> JobResult {
        RingPtr ring = parse_ring(cfg.ring_text);
        if (cfg.dims.size() != 1)
            throw std::invalid_argument("canonical needs exactly one dimension");
        auto gens = parse_polynomial_list(ring, cfg.dims, cfg.gens_text);
        CodeSpan span = CodeSpan::from_generators(ring, cfg.dims, gens);
        CanonicalGenSet stair = canonical_generators(span);
        CodeSpan regen = CodeSpan::from_generators(ring, cfg.dims, stair.generator_multipolys());
        bool round_trip = regen == span;
        if (!round_trip) throw std::logic_error("canonical staircase failed the span round-trip");

        if (cfg.format == "json") {
            json out{{"ring", ring->spec_string()},
                     {"dims", cfg.dims},
                     {"zero_code", stair.empty()},
                     {"entries", stair_json(stair)},
                     {"cardinality", span.cardinality().str()},
                     {"round_trip", round_trip}};
            return {exit_code::ok, out.dump(2) + "\n"};
        }
        std::ostringstream os;
        os << "ring: " << ring->spec_string() << "\n";
        os << "dims: " << dims_text(cfg.dims) << "\n";
        if (stair.empty()) {
            os << "zero code (empty generating set)\n";
        } else {
            std::string exps, degs;
            for (const auto& e : stair.entries) {
                exps += (exps.empty() ? "" : " > ") + std::to_string(e.gamma_exp);
                degs += (degs.empty() ? "" : " < ") + std::to_string(e.monic.degree());
            }
            for (const auto& e : stair.entries)
                os << "gamma^" << e.gamma_exp << " * (" << to_string(e.monic) << ")\n";
            os << "gamma exponents: " << exps << "\n";
            os << "degrees: " << degs << "\n";
            std::size_t tr = stair.entries.back().monic.degree();
            os << "count " << stair.entries.size() << " <= min(nu, deg+1) = "
               << std::min<std::size_t>(ring->nu, tr + 1) << "\n";
        }
        os << "cardinality: " << span.cardinality().str() << "\n";
        os << "round-trip: ok\n";
        return {exit_code::ok, os.str()};
    });
}

JobResult run_generate(const JobConfig& cfg) {
    return guarded([&]() -> JobResult {
        RingPtr ring = parse_ring(cfg.ring_text);
        if (cfg.dims.size() < 2)
            throw std::invalid_argument("generate needs at least two dimensions");
        if (parse_method(cfg.method) == 2) {
            std::size_t target = cfg.transpose && cfg.dims.size() == 2 ? cfg.dims[0] : cfg.dims.back();
            if ((ring->q - 1) % target != 0)
                throw OrderNotCompatible("method 2 needs the target length " + std::to_string(target) +
                                         " to divide q-1 = " + std::to_string(ring->q - 1));
        }
        auto gens = parse_polynomial_list(ring, cfg.dims, cfg.gens_text);
        GeneratorReport rep;
        construct_output(ring, cfg, gens, &rep);

        std::string oracle_status = "skipped";
        std::string oracle_detail;
        if (cfg.verify) {
            OracleOutcome oc = oracle_certify(ring, cfg.dims, gens, rep.generators, cfg.budget);
            oracle_status = oc.ok ? "passed" : "failed";
            oracle_detail = oc.detail;
        }

        if (cfg.format == "json") {
            json gens_json = json::array();
            for (const auto& g : rep.generators) gens_json.push_back(to_string(g));
            json out{{"ring", ring->spec_string()},
                     {"dims", cfg.dims},
                     {"method", method_name(rep.method)},
                     {"generators", gens_json},
                     {"levels", levels_json(rep.levels)},
                     {"separable", rep.separable},
                     {"certified", rep.span_certified},
                     {"certification", rep.certification_attempted ? "span" : "skipped"},
                     {"oracle", oracle_status}};
            if (!oracle_detail.empty()) out["oracle_detail"] = oracle_detail;
            return {oracle_status == "failed" ? exit_code::verification : exit_code::ok,
                    out.dump(2) + "\n"};
        }
        std::ostringstream os;
        os << "ring: " << ring->spec_string() << "\n";
        os << "dims: " << dims_text(cfg.dims) << "\n";
        os << "method: " << method_name(rep.method) << "\n";
        os << "certified: "
           << (rep.span_certified ? "span" : "uncertified (ambient size beyond certification budget)")
           << "\n";
        os << "generators (" << rep.generators.size() << "):\n";
        for (std::size_t i = 0; i < rep.generators.size(); ++i)
            os << "  " << to_string(rep.generators[i]) << (rep.separable[i] ? "  [separable]" : "")
               << "\n";
        os << "levels:\n";
        for (const auto& lvl : rep.levels) {
            os << "  " << lvl.path << " [" << lvl.kind << "]: ";
            if (lvl.staircase.ring) {
                os << stair_line(lvl.staircase);
            } else {
                for (std::size_t i = 0; i < lvl.generators.size(); ++i)
                    os << (i ? "; " : "") << to_string(lvl.generators[i]);
                if (lvl.generators.empty()) os << "(zero code)";
            }
            os << "\n";
        }
        os << "oracle: " << oracle_status;
        if (!oracle_detail.empty()) os << " (" << oracle_detail << ")";
        os << "\n";
        return {oracle_status == "failed" ? exit_code::verification : exit_code::ok, os.str()};
    });
}

JobResult run_verify(const JobConfig& cfg) {
    return guarded([&]() -> JobResult {
        RingPtr ring = parse_ring(cfg.ring_text);
        if (cfg.dims.empty()) throw std::invalid_argument("verify needs dims");
        auto gens = parse_polynomial_list(ring, cfg.dims, cfg.gens_text);
        std::vector<MultiPoly> output;
        if (!cfg.claim_text.empty()) {
            output = parse_polynomial_list(ring, cfg.dims, cfg.claim_text);
        } else {
            output = construct_output(ring, cfg, gens, nullptr);
        }
        OracleOutcome oc = oracle_certify(ring, cfg.dims, gens, output, cfg.budget);
        if (cfg.format == "json") {
            json out{{"ring", ring->spec_string()},
                     {"dims", cfg.dims},
                     {"verified", oc.ok}};
            if (!oc.ok) out["counterexample"] = oc.detail;
            return {oc.ok ? exit_code::ok : exit_code::verification, out.dump(2) + "\n"};
        }
        if (oc.ok) return {exit_code::ok, "verification passed\n"};
        return {exit_code::verification, "verification FAILED: " + oc.detail + "\n"};
    });
}

JobResult run_idempotents(const JobConfig& cfg) {
    return guarded([&]() -> JobResult {
        RingPtr ring = parse_ring(cfg.ring_text);
        if (cfg.n == 0) throw std::invalid_argument("idempotents needs a positive order n");
        IdempotentFamily fam = idempotents(ring, cfg.n);
        if (cfg.format == "json") {
            json thetas = json::array();
            for (const auto& t : fam.thetas) thetas.push_back(to_string(t, "y"));
            json out{{"ring", ring->spec_string()},
                     {"n", fam.n},
                     {"zeta", ring->to_string(fam.zeta)},
                     {"thetas", thetas}};
            return {exit_code::ok, out.dump(2) + "\n"};
        }
        std::ostringstream os;
        os << "ring: " << ring->spec_string() << "\n";
        os << "n: " << fam.n << "\n";
        os << "zeta = " << ring->to_string(fam.zeta) << "\n";
        for (std::size_t i = 0; i < fam.thetas.size(); ++i)
            os << "theta_" << i << " = " << to_string(fam.thetas[i], "y") << "\n";
        return {exit_code::ok, os.str()};
    });
}

JobResult run_root(const JobConfig& cfg) {
    return guarded([&]() -> JobResult {
        RingPtr ring = parse_ring(cfg.ring_text);
        if (cfg.n == 0) throw std::invalid_argument("root needs a positive order n");
        u64 zeta = ring->find_primitive_root(cfg.n);
        if (cfg.format == "json") {
            json out{{"ring", ring->spec_string()},
                     {"n", cfg.n},
                     {"zeta", ring->to_string(zeta)}};
            return {exit_code::ok, out.dump(2) + "\n"};
        }
        return {exit_code::ok, "zeta = " + ring->to_string(zeta) + "\n"};
    });
}

} // namespace chaincodes
