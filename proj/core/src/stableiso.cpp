#include "charp/stableiso.hpp"

#include <algorithm>

namespace charp {

namespace {

AElem eval_plane(const Poly& g_zt, const AElem& z_img, const AElem& t_img, const PresPtr& target) {
    std::map<std::string, AElem> images{{"Z", z_img}, {"T", t_img}};
    return apply_poly_hom(images, g_zt, target);
}

}  // namespace

StableIsoCertificate build_stable_iso(const PresPtr& pres, const LineCertificate& line) {
    if (pres->is_free())
        throw hypothesis_violation("stable isomorphism needs a quotient presentation");
    if (!pres->extra_vars().empty())
        throw std::invalid_argument("presentation must not already carry adjoined variables");
    for (std::size_t j = 0; j < pres->m(); ++j)
        if (pres->F_full().depends_on(j))
            throw hypothesis_violation("F depends on X" + std::to_string(j + 1) +
                                       ": the relation must be an x-free line");
    LineReport lr = verify_line_certificate(line);
    if (!lr.ok)
        throw std::invalid_argument("line certificate does not verify");
    VarSetPtr ZT = line.f.vars();
    if (!(pres->F_full().renamed(ZT) == line.f))
        throw std::invalid_argument("presentation relation differs from the certified line");

    const FieldPtr& F = pres->field();
    std::vector<std::string> free_names;
    for (std::size_t i = 0; i < pres->m(); ++i) free_names.push_back(pres->x_name(i));
    free_names.push_back("Z1");
    free_names.push_back("T1");
    free_names.push_back("W1");
    StableIsoCertificate cert{pres,
                              pres->with_extras({"W"}),
                              Presentation::free_ring(F, free_names),
                              line,
                              {},
                              {},
                              false};

    const PresPtr& AW = cert.pres_w;

    // forward: W1 -> x^r W + h(z,t); Z1, T1 via the exact Delta-quotient identity
    AElem xr = AElem::constant(AW, 1);
    for (std::size_t i = 0; i < pres->m(); ++i)
        xr = xr * AElem::generator(AW, pres->x_name(i)).pow((std::uint64_t)pres->r()[i]);
    AElem w = AElem::generator(AW, "W");
    AElem y = AElem::generator(AW, "Y");
    AElem z = AElem::generator(AW, "Z");
    AElem t = AElem::generator(AW, "T");
    AElem h_elem = eval_plane(line.h, z, t, AW);
    AElem w1_img = xr * w + h_elem;

    Poly dP = delta_quotient(line.P, "U", "V");
    Poly dQ = delta_quotient(line.Q, "U", "V");
    std::map<std::string, AElem> uv{{"U", w1_img}, {"V", h_elem}};
    AElem z1_img = eval_plane(line.P1, z, t, AW) * y - w * apply_poly_hom(uv, dP, AW);
    AElem t1_img = eval_plane(line.Q1, z, t, AW) * y - w * apply_poly_hom(uv, dQ, AW);

    for (std::size_t i = 0; i < pres->m(); ++i)
        cert.forward.emplace(pres->x_name(i), AElem::generator(AW, pres->x_name(i)));
    cert.forward.emplace("Z1", z1_img);
    cert.forward.emplace("T1", t1_img);
    cert.forward.emplace("W1", w1_img);

    // backward: z -> P(W1) + X^r Z1, t -> Q(W1) + X^r T1, then the two exact
    // divisions by X^r guaranteed by f(P,Q) = 0 and h(P,Q) = W1
    const VarSetPtr& fv = cert.free_ring->vars();
    Poly Xr = Poly::constant(F, fv, 1);
    for (std::size_t i = 0; i < pres->m(); ++i)
        Xr *= Poly::variable(F, fv, pres->x_name(i), pres->r()[i]);
    Poly W1 = Poly::variable(F, fv, "W1");
    RingHom P_at_W1(line.P.vars(), {W1});
    RingHom Q_at_W1(line.Q.vars(), {W1});
    Poly z_img = substitute(P_at_W1, line.P) + Xr * Poly::variable(F, fv, "Z1");
    Poly t_img = substitute(Q_at_W1, line.Q) + Xr * Poly::variable(F, fv, "T1");
    RingHom zt_to_free(ZT, {z_img, t_img});
    auto y_img = exact_div(substitute(zt_to_free, line.f), Xr);
    auto w_img = exact_div(W1 - substitute(zt_to_free, line.h), Xr);
    if (!y_img || !w_img)
        throw std::logic_error("stable iso construction: division by X^r must be exact");

    for (std::size_t i = 0; i < pres->m(); ++i)
        cert.backward.emplace(pres->x_name(i), Poly::variable(F, fv, pres->x_name(i)));
    cert.backward.emplace("Z", z_img);
    cert.backward.emplace("T", t_img);
    cert.backward.emplace("Y", *y_img);
    cert.backward.emplace("W", *w_img);

    StableIsoReport rep = verify_stable_iso(cert);
    cert.roundtrip_verified = rep.ok;
    if (!rep.ok) {
        std::string who;
        for (const auto& c : rep.checks)
            if (!c.passed) who += (who.empty() ? "" : ", ") + c.name;
        throw std::logic_error("stable iso roundtrip verification failed at: " + who);
    }
    return cert;
}

StableIsoReport verify_stable_iso(const StableIsoCertificate& cert) {
    StableIsoReport rep;
    const FieldPtr& F = cert.pres->field();
    const VarSetPtr& fv = cert.free_ring->vars();

    // backward as a plain ring hom on A[W]'s variable set
    std::vector<Poly> back_images;
    for (const auto& n : cert.pres_w->vars()->names()) {
        auto it = cert.backward.find(n);
        if (it == cert.backward.end())
            throw context_mismatch("backward hom misses generator " + n);
        back_images.push_back(it->second);
    }
    RingHom back(cert.pres_w->vars(), back_images);

    // backward . forward = id on the free generators
    for (const auto& n : fv->names()) {
        auto it = cert.forward.find(n);
        if (it == cert.forward.end())
            throw context_mismatch("forward hom misses generator " + n);
        Poly round = substitute(back, it->second.rep());
        bool good = round == Poly::variable(F, fv, n);
        rep.checks.push_back({"backward(forward(" + n + ")) = " + n, good,
                              good ? "" : round.to_string()});
    }

    // forward . backward = id on the generators of A[W]
    for (const auto& n : cert.pres_w->vars()->names()) {
        AElem round = apply_poly_hom(cert.forward, cert.backward.at(n), cert.pres_w);
        AElem gen = AElem::generator(cert.pres_w, n);
        bool good = round == gen;
        rep.checks.push_back({"forward(backward(" + n + ")) = " + n, good,
                              good ? "" : round.to_string()});
    }

    // the defining relation holds in the free ring
    Poly rel = Poly::constant(F, fv, 1);
    for (std::size_t i = 0; i < cert.pres->m(); ++i)
        rel *= cert.backward.at(cert.pres->x_name(i)).pow((std::uint64_t)cert.pres->r()[i]);
    rel *= cert.backward.at("Y");
    RingHom zt_to_free(cert.line.f.vars(), {cert.backward.at("Z"), cert.backward.at("T")});
    bool rel_ok = rel == substitute(zt_to_free, cert.line.f);
    rep.checks.push_back({"backward(x)^r * backward(y) = f(backward(z), backward(t))", rel_ok, ""});

    // degree sanity: forward images of Z1, T1 are y-linear
    std::size_t yi = cert.pres_w->y_index();
    bool ydeg = cert.forward.at("Z1").rep().degree_in(yi) <= 1 &&
                cert.forward.at("T1").rep().degree_in(yi) <= 1;
    rep.checks.push_back({"forward(Z1), forward(T1) have y-degree <= 1", ydeg, ""});

    rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const StableIsoCheck& c) { return c.passed; });
    return rep;
}

}  // namespace charp
