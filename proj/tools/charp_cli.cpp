// charp: batch verifier for positive-characteristic cancellation
// counterexample constructions. All artifacts are JSON; exit codes are
// 0 = all checks green, 1 = a verification failed, 2 = invalid input.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

#include "charp/json_io.hpp"
#include "charp/pipeline.hpp"

using nlohmann::json;
using namespace charp;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return j;
}

void emit(const json& j, const std::string& out_path, bool human) {
    std::string text = human ? render_report(j) : j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        out << text;
        if (!out) throw std::runtime_error("cannot write " + out_path);
    }
}

WeightVector parse_weights(const std::string& s) {
    WeightVector w;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty()) throw std::invalid_argument("empty weight entry in " + s);
        w.push_back(std::stoll(tok));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return w;
}

struct CommonOpts {
    std::string out;
    std::string config;
    bool human = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--out", c.out, "Write the resulting JSON to this file");
    cmd->add_option("--config", c.config, "JSON config file (flags win over config values)");
    cmd->add_flag("--human", c.human, "Human-readable rendering instead of JSON");
}

// config file supplies defaults for options the user did not pass
void apply_config(const CLI::App* cmd, const std::string& path, RunConfig& rc) {
    if (path.empty()) return;
    json j = read_json_file(path);
    auto want = [&](const char* flag) {
        const CLI::Option* o = cmd->get_option_no_throw(flag);
        return o == nullptr || o->count() == 0;
    };
    if (j.contains("seed") && want("--seed")) rc.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("degree_bound") && want("--degree-bound"))
        rc.degree_bound = j["degree_bound"].get<std::int64_t>();
    if (j.contains("lambda") && want("--lambda")) rc.lambda = j["lambda"].get<std::int64_t>();
    if (j.contains("fiber_index") && want("--fiber-index"))
        rc.fiber_index = j["fiber_index"].get<std::size_t>();
}

int run(int argc, char** argv) {
    CLI::App app{"exact verifier for cancellation counterexample constructions"};
    app.require_subcommand(1);

    // ---- line ----
    auto* line = app.add_subcommand("line", "Build or verify a line certificate");
    CommonOpts line_c;
    std::vector<std::uint32_t> nagata_pq;
    std::string line_verify;
    line->add_option("--nagata", nagata_pq, "Build the Nagata certificate for primes p q")
        ->expected(2);
    line->add_option("--verify", line_verify, "Verify a certificate JSON file");
    add_common(line, line_c);

    // ---- variety ----
    auto* variety = app.add_subcommand("variety", "Validate or build a presentation");
    CommonOpts var_c;
    std::string var_input;
    std::vector<std::uint32_t> var_nagata;
    std::size_t var_m = 1;
    std::string var_r = "2";
    variety->add_option("input", var_input, "Presentation JSON to validate");
    variety->add_option("--nagata", var_nagata, "Build from the Nagata line for primes p q")
        ->expected(2);
    variety->add_option("--m", var_m, "Number of x-variables");
    variety->add_option("--r", var_r, "Comma-separated exponents r_1..r_m");
    add_common(variety, var_c);

    // ---- gr ----
    auto* gr = app.add_subcommand("gr", "Associated graded presentation under a weight vector");
    CommonOpts gr_c;
    std::string gr_input;
    std::string gr_weights;
    gr->add_option("input", gr_input, "Presentation JSON")->required();
    gr->add_option("--weights", gr_weights, "Comma-separated weights q_1..q_m")->required();
    add_common(gr, gr_c);

    // ---- expmap ----
    auto* em = app.add_subcommand("expmap", "Build or verify exponential maps");
    CommonOpts em_c;
    std::string em_input, em_verify;
    bool em_phi1 = false, em_phi2 = false;
    em->add_option("input", em_input, "Presentation JSON");
    em->add_flag("--phi1", em_phi1, "Canonical map moving t");
    em->add_flag("--phi2", em_phi2, "Canonical map moving z");
    em->add_option("--verify", em_verify, "Verify an exponential map JSON file");
    add_common(em, em_c);

    // ---- trace ----
    auto* trace = app.add_subcommand("trace", "Replay the grading chain with a fiber check");
    CommonOpts tr_c;
    std::string tr_input;
    std::vector<std::string> tr_weights;
    std::int64_t tr_lambda = 1;
    std::size_t tr_fiber = 2;
    trace->add_option("input", tr_input, "Presentation JSON")->required();
    trace->add_option("--weights", tr_weights, "Weight vector (repeatable, comma-separated)");
    trace->add_option("--lambda", tr_lambda, "Fiber parameter (nonzero)");
    trace->add_option("--fiber-index", tr_fiber, "1-based x-index for the fiber");
    add_common(trace, tr_c);

    // ---- stable-iso ----
    auto* iso = app.add_subcommand("stable-iso", "Build and verify the stable isomorphism");
    CommonOpts iso_c;
    std::string iso_pres, iso_cert;
    iso->add_option("presentation", iso_pres, "Presentation JSON")->required();
    iso->add_option("certificate", iso_cert, "Line certificate JSON")->required();
    add_common(iso, iso_c);

    // ---- counterexample ----
    auto* ce = app.add_subcommand("counterexample", "End-to-end counterexample report");
    CommonOpts ce_c;
    std::uint32_t ce_p = 2, ce_q = 3;
    std::size_t ce_m = 1;
    std::string ce_r = "2";
    RunConfig rc;
    ce->add_option("p", ce_p, "Characteristic (prime)")->required();
    ce->add_option("q", ce_q, "Nagata prime, distinct from p")->required();
    ce->add_option("m", ce_m, "Number of x-variables")->required();
    ce->add_option("--r", ce_r, "Comma-separated exponents r_1..r_m");
    ce->add_option("--seed", rc.seed, "Seed echoed into the report");
    ce->add_option("--degree-bound", rc.degree_bound, "Reduction search bound");
    add_common(ce, ce_c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (line->parsed()) {
        if (!nagata_pq.empty()) {
            LineCertificate c = make_nagata_certificate(nagata_pq[0], nagata_pq[1]);
            json j = line_certificate_to_json(c);
            j["report"] = line_report_to_json(verify_line_certificate(c));
            emit(j, line_c.out, line_c.human);
            return 0;
        }
        if (!line_verify.empty()) {
            LineCertificate c = line_certificate_from_json(read_json_file(line_verify));
            LineReport rep = verify_line_certificate(c);
            emit(line_report_to_json(rep), line_c.out, line_c.human);
            return rep.ok ? 0 : 1;
        }
        std::cerr << "line: need --nagata or --verify\n";
        return 2;
    }

    if (variety->parsed()) {
        PresPtr pres;
        if (!var_nagata.empty()) {
            LineCertificate c = make_nagata_certificate(var_nagata[0], var_nagata[1]);
            std::vector<std::int64_t> r;
            for (auto x : parse_weights(var_r)) r.push_back(x);
            pres = Presentation::make(c.field, var_m, r, c.f);
        } else if (!var_input.empty()) {
            pres = presentation_from_json(read_json_file(var_input));
        } else {
            std::cerr << "variety: need an input file or --nagata\n";
            return 2;
        }
        emit(presentation_to_json(*pres), var_c.out, var_c.human);
        return 0;
    }

    if (gr->parsed()) {
        PresPtr pres = presentation_from_json(read_json_file(gr_input));
        PresPtr graded = associated_graded(pres, parse_weights(gr_weights));
        emit(presentation_to_json(*graded), gr_c.out, gr_c.human);
        return 0;
    }

    if (em->parsed()) {
        if (!em_verify.empty()) {
            ExpMap phi = expmap_from_json(read_json_file(em_verify));
            VerifyReport rep = verify_exponential(phi);
            emit(verify_report_to_json(rep), em_c.out, em_c.human);
            return rep.ok ? 0 : 1;
        }
        if (em_input.empty() || (!em_phi1 && !em_phi2)) {
            std::cerr << "expmap: need a presentation and --phi1 or --phi2, or --verify\n";
            return 2;
        }
        PresPtr pres = presentation_from_json(read_json_file(em_input));
        ExpMap phi = em_phi1 ? make_phi1(pres) : make_phi2(pres);
        json j = expmap_to_json(phi);
        j["report"] = verify_report_to_json(verify_exponential(phi));
        emit(j, em_c.out, em_c.human);
        return 0;
    }

    if (trace->parsed()) {
        PresPtr pres = presentation_from_json(read_json_file(tr_input));
        std::vector<WeightVector> chain;
        for (const auto& w : tr_weights) chain.push_back(parse_weights(w));
        if (chain.empty()) {
            chain.push_back(WeightVector(pres->m(), 0));
            if (!chain.back().empty()) chain.back()[0] = -1;
            chain.push_back(WeightVector(pres->m(), -1));
        }
        if (tr_lambda % (std::int64_t)pres->field()->characteristic() == 0)
            throw hypothesis_violation("lambda = 0: the fiber degenerates");
        json rep = build_trace_report(pres, chain, tr_fiber,
                                      pres->field()->from_int(tr_lambda));
        emit(rep, tr_c.out, tr_c.human);
        return rep["status"] == "pass" ? 0 : 1;
    }

    if (iso->parsed()) {
        PresPtr pres = presentation_from_json(read_json_file(iso_pres));
        LineCertificate cert = line_certificate_from_json(read_json_file(iso_cert));
        StableIsoCertificate out = build_stable_iso(pres, cert);
        json j = stable_iso_to_json(out);
        j["report"] = stable_iso_report_to_json(verify_stable_iso(out));
        emit(j, iso_c.out, iso_c.human);
        return out.roundtrip_verified ? 0 : 1;
    }

    if (ce->parsed()) {
        apply_config(ce, ce_c.config, rc);
        std::vector<std::int64_t> r;
        for (auto x : parse_weights(ce_r)) r.push_back(x);
        json rep = build_counterexample_report(ce_p, ce_q, ce_m, r, rc);
        emit(rep, ce_c.out, ce_c.human);
        return rep["status"] == "pass" ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hypothesis_violation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const not_a_domain& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const context_mismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
