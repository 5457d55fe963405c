#include "charp/expmap.hpp"

#include <algorithm>

namespace charp {

namespace {

std::string fresh_var(const Presentation& pres, const std::string& wanted) {
    if (!pres.vars()->contains(wanted)) return wanted;
    std::string name = wanted;
    while (pres.vars()->contains(name)) name += "_";
    return name;
}

Poly rename_var(const Poly& p, VarSetPtr target, const std::string& from, const std::string& to) {
    std::vector<std::size_t> idx(p.vars()->size());
    for (std::size_t i = 0; i < p.vars()->size(); ++i) {
        const std::string& n = p.vars()->name(i);
        idx[i] = target->index(n == from ? to : n);
    }
    return p.mapped(std::move(target), idx);
}

}  // namespace

const AElem& ExpMap::image(const std::string& gen) const {
    auto it = images.find(gen);
    if (it == images.end())
        throw context_mismatch("no image for generator " + gen);
    return it->second;
}

AElem ExpMap::apply(const AElem& a) const {
    if (*a.pres() != *base)
        throw context_mismatch("element does not live in the map's ring");
    return apply_poly_hom(images, a.rep(), with_u);
}

ExpMap make_exp_map(PresPtr base, std::string u_var, std::map<std::string, Poly> raw_images) {
    ExpMap phi;
    phi.base = base;
    phi.u_var = u_var;
    phi.with_u = base->with_extras({u_var});
    for (const auto& gen : base->generator_names()) {
        auto it = raw_images.find(gen);
        if (it == raw_images.end())
            throw context_mismatch("missing image for generator " + gen);
        phi.images.emplace(gen, AElem(phi.with_u, it->second));
    }
    return phi;
}

VerifyReport verify_exponential(const ExpMap& phi) {
    VerifyReport rep;
    const auto& base = *phi.base;
    const FieldPtr& F = base.field();

    // well-definedness: the images must satisfy the defining relation
    if (!base.is_free()) {
        AElem lhs = AElem::constant(phi.with_u, 1);
        for (std::size_t i = 0; i < base.m(); ++i)
            lhs = lhs * phi.image(base.x_name(i)).pow(static_cast<std::uint64_t>(base.r()[i]));
        lhs = lhs * phi.image("Y");
        AElem rhs = apply_poly_hom(phi.images, base.F_full(), phi.with_u);
        if (!(lhs == rhs))
            rep.failures.push_back({"well-defined", "(relation)", lhs.to_string(), rhs.to_string()});
    }

    // (i) evaluation at U = 0 is the identity on generators
    std::size_t u_idx = phi.with_u->vars()->index(phi.u_var);
    for (const auto& gen : base.generator_names()) {
        AElem at0(phi.with_u, phi.image(gen).rep().eval_var(u_idx, F->zero()));
        AElem g = AElem::generator(phi.with_u, gen);
        if (!(at0 == g))
            rep.failures.push_back({"identity-at-zero", gen, at0.to_string(), g.to_string()});
    }

    // (ii) phi_V phi_U = phi_{V+U} on generators
    std::string v_var = fresh_var(*phi.with_u, "V");
    PresPtr with_uv = phi.with_u->with_extras({v_var});
    std::map<std::string, AElem> phi_v;      // base gen -> image with U renamed to V, U -> U
    std::map<std::string, AElem> shift_u;    // base gen -> itself, U -> U + V
    for (const auto& gen : base.generator_names()) {
        phi_v.emplace(gen, AElem(with_uv, rename_var(phi.image(gen).rep(), with_uv->vars(),
                                                     phi.u_var, v_var)));
        shift_u.emplace(gen, AElem::generator(with_uv, gen));
    }
    phi_v.emplace(phi.u_var, AElem::generator(with_uv, phi.u_var));
    shift_u.emplace(phi.u_var,
                    AElem(with_uv, Poly::variable(F, with_uv->vars(), phi.u_var) +
                                       Poly::variable(F, with_uv->vars(), v_var)));
    for (const auto& gen : base.generator_names()) {
        AElem lhs = apply_poly_hom(phi_v, phi.image(gen).rep(), with_uv);
        AElem rhs = apply_poly_hom(shift_u, phi.image(gen).rep(), with_uv);
        if (!(lhs == rhs))
            rep.failures.push_back({"coassociativity", gen, lhs.to_string(), rhs.to_string()});
    }

    // non-triviality: some generator moves
    for (const auto& gen : base.generator_names()) {
        Poly g = Poly::variable(F, phi.with_u->vars(), gen);
        if (phi.image(gen).rep() == g)
            rep.fixed_generators.push_back(gen);
        else
            rep.moved_generators.push_back(gen);
    }
    rep.nontrivial = !rep.moved_generators.empty();
    rep.ok = rep.failures.empty();
    return rep;
}

namespace {

ExpMap make_phi_common(const PresPtr& pres, bool move_t) {
    if (pres->is_free())
        throw hypothesis_violation("phi1/phi2 need a quotient presentation");
    const std::string u = fresh_var(*pres, "U");
    PresPtr with_u = pres->with_extras({u});
    const FieldPtr& F = pres->field();
    const VarSetPtr& wv = with_u->vars();

    Poly xr = Poly::constant(F, wv, 1);
    for (std::size_t i = 0; i < pres->m(); ++i)
        xr *= Poly::variable(F, wv, pres->x_name(i), pres->r()[i]);
    Poly U = Poly::variable(F, wv, u);
    const std::string moved = move_t ? "T" : "Z";

    // F(..., g + x^r U, ...) - F(..., g, ...), divided exactly by x^r
    std::vector<Poly> imgs;
    for (const auto& n : pres->vars()->names()) {
        Poly g = Poly::variable(F, wv, n);
        imgs.push_back(n == moved ? g + xr * U : g);
    }
    RingHom shift(pres->vars(), imgs);
    Poly Fw = pres->F_full().renamed(wv);
    Poly diff = substitute(shift, pres->F_full()) - Fw;
    auto alpha = exact_div(diff, xr);
    if (!alpha)
        throw std::logic_error("phi construction: (F(t+x^rU) - F)/x^r must divide exactly");

    std::map<std::string, Poly> raw;
    for (const auto& n : pres->vars()->names()) {
        if (n == moved)
            raw.emplace(n, Poly::variable(F, wv, n) + xr * U);
        else if (n == "Y")
            raw.emplace(n, Poly::variable(F, wv, n) + *alpha);
        else
            raw.emplace(n, Poly::variable(F, wv, n));
    }
    ExpMap phi = make_exp_map(pres, u, std::move(raw));
    VerifyReport check = verify_exponential(phi);
    if (!check.ok)
        throw std::logic_error("canonical map failed exponential verification");
    return phi;
}

}  // namespace

ExpMap make_phi1(const PresPtr& pres) { return make_phi_common(pres, true); }
ExpMap make_phi2(const PresPtr& pres) { return make_phi_common(pres, false); }

ExpMap make_translation(const PresPtr& free_pres, const std::string& var) {
    if (!free_pres->is_free())
        throw hypothesis_violation("translation maps live on free polynomial rings");
    if (free_pres->vars()->size() < 2)
        throw hypothesis_violation("a Derksen witness needs at least two variables");
    const std::string u = fresh_var(*free_pres, "U");
    const FieldPtr& F = free_pres->field();
    PresPtr with_u = free_pres->with_extras({u});
    std::map<std::string, Poly> raw;
    for (const auto& n : free_pres->vars()->names()) {
        Poly g = Poly::variable(F, with_u->vars(), n);
        raw.emplace(n, n == var ? g + Poly::variable(F, with_u->vars(), u) : g);
    }
    return make_exp_map(free_pres, u, std::move(raw));
}

bool is_invariant(const ExpMap& phi, const AElem& a) {
    return phi.apply(a) == a.moved_to(phi.with_u);
}

InvariantReport dk_lowerbound(const PresPtr& pres, const std::vector<ExpMap>& maps) {
    if (maps.empty())
        throw std::invalid_argument("empty exponential-map family");
    for (const auto& phi : maps) {
        if (*phi.base != *pres)
            throw context_mismatch("map defined on a different ring");
        VerifyReport v = verify_exponential(phi);
        if (!v.ok)
            throw std::invalid_argument("family contains an unverified map");
        if (!v.nontrivial)
            throw std::invalid_argument("family contains a trivial map");
    }
    std::vector<std::string> targets;
    if (pres->is_free()) {
        targets = pres->vars()->names();
    } else {
        for (std::size_t i = 0; i < pres->m(); ++i) targets.push_back(pres->x_name(i));
        targets.push_back("Z");
        targets.push_back("T");
    }
    InvariantReport rep;
    rep.nontrivial_family = true;
    for (const auto& g : targets) {
        AElem gen = AElem::generator(pres, g);
        bool witnessed = std::any_of(maps.begin(), maps.end(),
                                     [&](const ExpMap& phi) { return is_invariant(phi, gen); });
        (witnessed ? rep.invariant_generators : rep.uncovered_generators).push_back(g);
    }
    rep.covers_B = rep.uncovered_generators.empty();
    return rep;
}

FiberResult induce_on_fiber(const ExpMap& phi, std::size_t j, const Coeff& lambda) {
    const Presentation& base = *phi.base;
    if (base.is_free() || j >= base.m())
        throw hypothesis_violation("fiber index out of range");
    const FieldPtr& F = base.field();
    if (F->is_zero(lambda))
        throw hypothesis_violation("lambda = 0: the fiber degenerates");
    {
        AElem xj = AElem::generator(phi.base, base.x_name(j));
        if (!(phi.apply(xj) == xj.moved_to(phi.with_u)))
            throw hypothesis_violation("map does not fix x_" + std::to_string(j + 1) +
                                       ": fiber specialization not applicable");
    }

    // fiber presentation: drop X_{j+1}, specialize, keep the same extras
    std::vector<std::int64_t> r2;
    for (std::size_t i = 0; i < base.m(); ++i)
        if (i != j) r2.push_back(base.r()[i]);
    std::size_t xj_idx = base.vars()->index(base.x_name(j));
    Poly Fspec = base.F_full().eval_var(xj_idx, lambda);
    // renumber the surviving x-variables
    std::vector<std::string> fz_names;
    for (std::size_t i = 0, k = 0; i < base.m(); ++i)
        if (i != j) fz_names.push_back("X" + std::to_string(++k));
    fz_names.push_back("Z");
    fz_names.push_back("T");
    VarSetPtr fvars = make_vars(fz_names);
    std::vector<std::size_t> fmap(base.vars()->size(), SIZE_MAX);
    for (std::size_t i = 0, k = 0; i < base.m(); ++i)
        if (i != j) fmap[i] = k++;
    fmap[base.z_index()] = fvars->index("Z");
    fmap[base.t_index()] = fvars->index("T");
    Poly Ff = Fspec.mapped(fvars, fmap);
    PresPtr fiber = Presentation::make(F, base.m() - 1, r2, Ff, base.extra_vars());
    PresPtr fiber_u = fiber->with_extras({phi.u_var});

    const Coeff scale = F->pow(lambda, static_cast<std::uint64_t>(base.r()[j]));  // lambda^{r_j}
    const Coeff scale_inv = F->inv(scale);
    const VarSetPtr& src = phi.with_u->vars();
    std::size_t y_src = phi.with_u->y_index();
    std::size_t xj_src = src->index(base.x_name(j));

    // push an element of A[U] down to the fiber: x_j -> lambda, y -> lambda^{-r_j} y'
    auto transform = [&](const Poly& p) {
        Poly out(F, fiber_u->vars());
        for (const auto& [e, c] : p.terms()) {
            Coeff v = c;
            if (e[xj_src] > 0)
                v = F->mul(v, F->pow(lambda, static_cast<std::uint64_t>(e[xj_src])));
            std::int64_t ell = e[y_src];
            if (ell > 0)
                v = F->mul(v, F->pow(scale_inv, static_cast<std::uint64_t>(ell)));
            Exps ne(fiber_u->vars()->size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i == xj_src || e[i] == 0) continue;
                const std::string& n = src->name(i);
                std::string tgt = n;
                if (!n.empty() && n[0] == 'X' && n != "Y") {
                    // renumbered x-variable
                    std::size_t old = std::stoul(n.substr(1)) - 1;
                    if (old < base.m())
                        tgt = "X" + std::to_string(old < j ? old + 1 : old);
                }
                ne[fiber_u->vars()->index(tgt)] = e[i];
            }
            out.add_term(ne, v);
        }
        return out;
    };

    ExpMap down;
    down.base = fiber;
    down.with_u = fiber_u;
    down.u_var = phi.u_var;
    for (std::size_t i = 0; i < base.m(); ++i) {
        if (i == j) continue;
        std::string newname = "X" + std::to_string(i < j ? i + 1 : i);
        down.images.emplace(newname, AElem(fiber_u, transform(phi.image(base.x_name(i)).rep())));
    }
    down.images.emplace("Y",
                        AElem(fiber_u, transform(phi.image("Y").rep()).scaled(scale)));
    down.images.emplace("Z", AElem(fiber_u, transform(phi.image("Z").rep())));
    down.images.emplace("T", AElem(fiber_u, transform(phi.image("T").rep())));
    for (const auto& ex : base.extra_vars())
        down.images.emplace(ex, AElem(fiber_u, transform(phi.image(ex).rep())));

    FiberResult res{std::move(down), fiber, {}};
    res.verification = verify_exponential(res.map);
    return res;
}

}  // namespace charp
