#include "charp/json_io.hpp"

#include <nlohmann/json.hpp>

namespace charp {

using nlohmann::json;

json coeff_to_json(const FieldSpec& f, const Coeff& c) {
    if (f.is_prime_field()) return c[0];
    return json(c);
}

Coeff coeff_from_json(const FieldSpec& f, const json& j) {
    Coeff c;
    if (j.is_number_integer()) {
        c.push_back(j.get<std::uint32_t>());
    } else if (j.is_array()) {
        for (const auto& x : j) c.push_back(x.get<std::uint32_t>());
    } else {
        throw parse_error("coefficient must be an integer or a list");
    }
    if (c.size() != f.degree())
        throw parse_error("coefficient length does not match field degree");
    for (auto x : c)
        if (x >= f.characteristic())
            throw parse_error("coefficient not reduced modulo p");
    return c;
}

json field_to_json(const FieldSpec& f) {
    json j;
    j["p"] = f.characteristic();
    if (!f.is_prime_field()) j["ext"] = f.ext_modulus();
    return j;
}

FieldPtr field_from_json(const json& j) {
    std::uint32_t p = j.at("p").get<std::uint32_t>();
    if (j.contains("ext") && !j["ext"].is_null())
        return FieldSpec::extension(p, j["ext"].get<std::vector<std::uint32_t>>());
    return FieldSpec::prime(p);
}

json poly_to_json(const Poly& a) {
    json j = field_to_json(*a.field());
    j["vars"] = a.vars()->names();
    json terms = json::array();
    for (const auto& [e, c] : a.terms())
        terms.push_back(json::array({coeff_to_json(*a.field(), c), e}));
    j["terms"] = std::move(terms);
    return j;
}

Poly poly_from_json(const json& j) {
    FieldPtr f = field_from_json(j);
    VarSetPtr vars = make_vars(j.at("vars").get<std::vector<std::string>>());
    Poly a(f, vars);
    bool laurent = false;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2 || !t[1].is_array())
            throw parse_error("malformed term");
        for (const auto& e : t[1])
            if (!e.is_number_integer())
                throw parse_error("malformed term");
            else if (e.get<std::int64_t>() < 0)
                laurent = true;
    }
    if (laurent) a = localize(a, vars->names());
    for (const auto& t : j.at("terms")) {
        Coeff c = coeff_from_json(*f, t[0]);
        Exps e = t[1].get<Exps>();
        if (f->is_zero(c)) throw parse_error("zero coefficient stored in term");
        if (!a.coeff(e).empty() && !f->is_zero(a.coeff(e)))
            throw parse_error("duplicate exponent vector");
        a.add_term(e, c);
    }
    return a;
}

json presentation_to_json(const Presentation& p) {
    json j = field_to_json(*p.field());
    if (p.is_free()) {
        j["free_vars"] = p.vars()->names();
        return j;
    }
    j["m"] = p.m();
    j["r"] = p.r();
    j["F"] = poly_to_json(p.F_full());
    j["extra_vars"] = p.extra_vars();
    return j;
}

PresPtr presentation_from_json(const json& j) {
    FieldPtr f = field_from_json(j);
    if (j.contains("free_vars"))
        return Presentation::free_ring(f, j["free_vars"].get<std::vector<std::string>>());
    Poly F = poly_from_json(j.at("F"));
    std::vector<std::string> extras;
    if (j.contains("extra_vars")) extras = j["extra_vars"].get<std::vector<std::string>>();
    return Presentation::make(f, j.at("m").get<std::size_t>(),
                              j.at("r").get<std::vector<std::int64_t>>(), F, extras);
}

json expmap_to_json(const ExpMap& phi) {
    json j;
    j["presentation"] = presentation_to_json(*phi.base);
    j["u"] = phi.u_var;
    json imgs = json::object();
    for (const auto& [g, a] : phi.images) imgs[g] = poly_to_json(a.rep());
    j["images"] = std::move(imgs);
    return j;
}

ExpMap expmap_from_json(const json& j) {
    PresPtr base = presentation_from_json(j.at("presentation"));
    std::map<std::string, Poly> raw;
    for (const auto& [g, pj] : j.at("images").items()) raw.emplace(g, poly_from_json(pj));
    return make_exp_map(base, j.at("u").get<std::string>(), std::move(raw));
}

json verify_report_to_json(const VerifyReport& r) {
    json j;
    j["ok"] = r.ok;
    j["nontrivial"] = r.nontrivial;
    j["moved_generators"] = r.moved_generators;
    j["fixed_generators"] = r.fixed_generators;
    json fails = json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"axiom", f.axiom}, {"generator", f.generator},
                         {"lhs", f.lhs}, {"rhs", f.rhs}});
    j["failures"] = std::move(fails);
    return j;
}

json line_certificate_to_json(const LineCertificate& c) {
    json j = field_to_json(*c.field);
    j["f"] = poly_to_json(c.f);
    j["h"] = poly_to_json(c.h);
    j["P"] = poly_to_json(c.P);
    j["Q"] = poly_to_json(c.Q);
    j["P1"] = poly_to_json(c.P1);
    j["Q1"] = poly_to_json(c.Q1);
    return j;
}

LineCertificate line_certificate_from_json(const json& j) {
    return LineCertificate{field_from_json(j),
                           poly_from_json(j.at("f")),  poly_from_json(j.at("h")),
                           poly_from_json(j.at("P")),  poly_from_json(j.at("Q")),
                           poly_from_json(j.at("P1")), poly_from_json(j.at("Q1"))};
}

json line_report_to_json(const LineReport& r) {
    json j;
    j["ok"] = r.ok;
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"identity", c.name}, {"passed", c.passed}});
    j["checks"] = std::move(checks);
    return j;
}

json evidence_to_json(const CoordinateEvidence& e) {
    json j;
    j["verdict"] = e.reduced_to_linear
                       ? "reduced-to-linear"
                       : "stuck-at-degree-" + std::to_string(e.stuck_degree);
    j["bound"] = e.bound;
    j["exhaustive"] = e.exhaustive;
    json log = json::array();
    for (const auto& mv : e.log) {
        if (mv.kind == ReductionMove::Kind::affine) {
            log.push_back({{"kind", "affine"},
                           {"matrix", {{mv.matrix[0], mv.matrix[1]}, {mv.matrix[2], mv.matrix[3]}}},
                           {"shift", {mv.shift[0], mv.shift[1]}}});
        } else {
            log.push_back({{"kind", "elem"},
                           {"target", mv.kind == ReductionMove::Kind::elem_z ? "Z" : "T"},
                           {"g", poly_to_json(mv.g)}});
        }
    }
    j["log"] = std::move(log);
    return j;
}

CoordinateEvidence evidence_from_json(const json& j, const FieldPtr& field) {
    CoordinateEvidence e;
    std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "reduced-to-linear") {
        e.reduced_to_linear = true;
    } else {
        const std::string prefix = "stuck-at-degree-";
        if (verdict.rfind(prefix, 0) != 0) throw parse_error("unknown verdict: " + verdict);
        e.stuck_degree = std::stoll(verdict.substr(prefix.size()));
    }
    e.bound = j.at("bound").get<std::int64_t>();
    if (j.contains("exhaustive")) e.exhaustive = j["exhaustive"].get<bool>();
    for (const auto& mj : j.at("log")) {
        ReductionMove mv{ReductionMove::Kind::affine, Poly(field, make_vars({"Z"})), {}, {}};
        std::string kind = mj.at("kind").get<std::string>();
        if (kind == "affine") {
            mv.matrix = {mj.at("matrix")[0][0].get<std::int64_t>(),
                         mj.at("matrix")[0][1].get<std::int64_t>(),
                         mj.at("matrix")[1][0].get<std::int64_t>(),
                         mj.at("matrix")[1][1].get<std::int64_t>()};
            mv.shift = {mj.at("shift")[0].get<std::int64_t>(),
                        mj.at("shift")[1].get<std::int64_t>()};
        } else if (kind == "elem") {
            mv.kind = mj.at("target").get<std::string>() == "Z" ? ReductionMove::Kind::elem_z
                                                                : ReductionMove::Kind::elem_t;
            mv.g = poly_from_json(mj.at("g"));
        } else {
            throw parse_error("unknown move kind: " + kind);
        }
        e.log.push_back(std::move(mv));
    }
    return e;
}

json stable_iso_to_json(const StableIsoCertificate& c) {
    json j;
    j["presentation"] = presentation_to_json(*c.pres);
    j["line"] = line_certificate_to_json(c.line);
    j["free_vars"] = c.free_ring->vars()->names();
    json fwd = json::object();
    for (const auto& [g, a] : c.forward) fwd[g] = poly_to_json(a.rep());
    j["forward"] = std::move(fwd);
    json bwd = json::object();
    for (const auto& [g, p] : c.backward) bwd[g] = poly_to_json(p);
    j["backward"] = std::move(bwd);
    j["roundtrip_verified"] = c.roundtrip_verified;
    return j;
}

json stable_iso_report_to_json(const StableIsoReport& r) {
    json j;
    j["ok"] = r.ok;
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e = {{"identity", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

json invariant_report_to_json(const InvariantReport& r) {
    json j;
    j["nontrivial_family"] = r.nontrivial_family;
    j["invariant_generators"] = r.invariant_generators;
    j["uncovered_generators"] = r.uncovered_generators;
    j["covers_B"] = r.covers_B;
    return j;
}

}  // namespace charp
