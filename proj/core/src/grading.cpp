#include "charp/grading.hpp"

#include <numeric>

namespace charp {

namespace {

void check_weights(const Presentation& pres, const WeightVector& q) {
    if (q.size() != pres.m())
        throw context_mismatch("weight vector length must equal the number of x-variables");
}

// per-variable weights for an arbitrary VarSet sharing the presentation's names
std::vector<std::int64_t> var_weights(const VarSet& vars, const Presentation& pres,
                                      const WeightVector& q, std::int64_t y_w,
                                      const std::string& u_var = "", std::int64_t u_w = 0) {
    std::vector<std::int64_t> w(vars.size(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const std::string& n = vars.name(i);
        if (n == "Y") {
            w[i] = y_w;
        } else if (!u_var.empty() && n == u_var) {
            w[i] = u_w;
        } else if (n.size() > 1 && n[0] == 'X') {
            std::size_t k = std::stoul(n.substr(1));
            if (k >= 1 && k <= pres.m()) w[i] = q[k - 1];
        }
    }
    return w;
}

std::int64_t term_weight(const Exps& e, const std::vector<std::int64_t>& w) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * w[i];
    return s;
}

}  // namespace

GradedDecomposition graded_components(const Poly& a, const Presentation& pres,
                                      const WeightVector& q) {
    check_weights(pres, q);
    if (a.vars()->contains("Y") && a.depends_on(a.vars()->index("Y")))
        throw context_mismatch("graded decomposition applies to elements of B[(x1..xm)^-1]");
    GradedDecomposition dec;
    if (a.is_zero()) return dec;
    std::vector<std::int64_t> w = var_weights(*a.vars(), pres, q, 0);
    for (const auto& [e, c] : a.terms()) {
        std::int64_t d = term_weight(e, w);
        auto it = dec.components.find(d);
        if (it == dec.components.end()) {
            Poly part(a.field(), a.vars());
            if (a.is_laurent()) {
                std::vector<std::string> inv;
                for (std::size_t i = 0; i < a.vars()->size(); ++i)
                    if (a.invertible()[i]) inv.push_back(a.vars()->name(i));
                part = localize(part, inv);
            }
            it = dec.components.emplace(d, std::move(part)).first;
        }
        it->second.add_term(e, c);
    }
    dec.min_degree = dec.components.begin()->first;
    dec.max_degree = dec.components.rbegin()->first;
    return dec;
}

std::int64_t top_weight_of_F(const Presentation& pres, const WeightVector& q) {
    check_weights(pres, q);
    GradedDecomposition dec = graded_components(pres.F_full(), pres, q);
    return dec.max_degree;
}

std::int64_t y_weight(const Presentation& pres, const WeightVector& q) {
    std::int64_t b = top_weight_of_F(pres, q);
    for (std::size_t i = 0; i < pres.m(); ++i) b -= q[i] * pres.r()[i];
    return b;
}

std::int64_t filtration_degree(const AElem& a, const WeightVector& q) {
    if (a.is_zero())
        throw std::domain_error("the zero element has no filtration degree");
    const Presentation& pres = *a.pres();
    check_weights(pres, q);
    std::int64_t b = pres.is_free() ? 0 : y_weight(pres, q);
    std::vector<std::int64_t> w = var_weights(*a.rep().vars(), pres, q, b);
    std::int64_t best = INT64_MIN;
    for (const auto& [e, c] : a.rep().terms())
        best = std::max(best, term_weight(e, w));
    return best;
}

PresPtr associated_graded(const PresPtr& pres, const WeightVector& q) {
    check_weights(*pres, q);
    if (pres->is_free())
        throw context_mismatch("free polynomial rings have no relation to grade");
    GradedDecomposition dec = graded_components(pres->F_full(), *pres, q);
    const Poly& lead = dec.components.rbegin()->second;
    for (std::size_t j = 0; j < pres->m(); ++j) {
        if (lead.eval_var(j, pres->field()->zero()).is_zero())
            throw graded_degeneration("leading summand of F is divisible by X" +
                                      std::to_string(j + 1));
    }
    return Presentation::make(pres->field(), pres->m(), pres->r(), lead, pres->extra_vars());
}

AElem leading_form(const AElem& a, const WeightVector& q) {
    PresPtr g = associated_graded(a.pres(), q);
    std::int64_t n = filtration_degree(a, q);
    std::int64_t b = y_weight(*a.pres(), q);
    std::vector<std::int64_t> w = var_weights(*a.rep().vars(), *a.pres(), q, b);
    Poly top(a.pres()->field(), a.rep().vars());
    for (const auto& [e, c] : a.rep().terms())
        if (term_weight(e, w) == n) top.add_term(e, c);
    return AElem(g, top);
}

InducedHomResult induce_homogeneous(const ExpMap& phi, const WeightVector& q) {
    InducedHomResult res;
    const PresPtr& base = phi.base;
    check_weights(*base, q);

    // split each generator image by U-power; coefficients live in A
    std::size_t u_idx = phi.with_u->vars()->index(phi.u_var);
    std::map<std::string, std::map<std::int64_t, AElem>> coeffs;
    for (const auto& gen : base->generator_names()) {
        const Poly& img = phi.image(gen).rep();
        std::map<std::int64_t, Poly> parts;
        for (const auto& [e, c] : img.terms()) {
            auto it = parts.find(e[u_idx]);
            if (it == parts.end())
                it = parts.emplace(e[u_idx], Poly(base->field(), img.vars())).first;
            Exps ne = e;
            ne[u_idx] = 0;
            it->second.add_term(ne, c);
        }
        for (auto& [i, p] : parts)
            coeffs[gen].emplace(i, AElem(base, p.renamed(base->vars())));
    }

    // extremal rational weight for U: w = min over (deg g - deg c_{g,i})/i, i >= 1
    bool any = false;
    std::int64_t wn = 0, wd = 1;  // w = wn/wd, wd > 0
    for (const auto& [gen, parts] : coeffs) {
        std::int64_t dg = filtration_degree(AElem::generator(base, gen), q);
        for (const auto& [i, c] : parts) {
            if (i < 1 || c.is_zero()) continue;
            std::int64_t num = dg - filtration_degree(c, q);
            if (!any || num * wd < wn * i) {
                wn = num;
                wd = i;
                any = true;
            }
        }
    }
    if (!any) { wn = 0; wd = 1; }  // trivial map: already homogeneous
    std::int64_t g = std::gcd(std::abs(wn), wd);
    if (g > 1) { wn /= g; wd /= g; }

    WeightVector sq(q);
    for (auto& x : sq) x *= wd;
    res.scaled_q = sq;
    res.u_weight = wn;

    PresPtr graded;
    if (base->is_free()) {
        graded = base;  // a free ring is its own associated graded ring
    } else {
        try {
            graded = associated_graded(base, sq);
        } catch (const graded_degeneration& e) {
            res.diagnostics = e.what();
            return res;
        }
    }
    PresPtr graded_u = graded->with_extras({phi.u_var});

    // candidate: keep, from each U^i coefficient, exactly the layer at
    // deg(g) - i*w; lower layers drop, higher layers cannot occur
    ExpMap bar;
    bar.base = graded;
    bar.with_u = graded_u;
    bar.u_var = phi.u_var;
    std::int64_t b = y_weight(*graded, sq);
    for (const auto& [gen, parts] : coeffs) {
        std::int64_t dg = filtration_degree(AElem::generator(base, gen), sq);
        Poly img(base->field(), graded_u->vars());
        for (const auto& [i, c] : parts) {
            if (c.is_zero()) continue;
            std::int64_t target = dg - i * res.u_weight;
            if (filtration_degree(c, sq) != target) continue;  // below the bound: drops
            std::vector<std::int64_t> w = var_weights(*c.rep().vars(), *base, sq, b);
            for (const auto& [e, cc] : c.rep().terms()) {
                if (term_weight(e, w) != target) continue;
                Exps ne(graded_u->vars()->size(), 0);
                for (std::size_t k = 0; k < e.size(); ++k)
                    if (e[k] != 0) ne[graded_u->vars()->index(c.rep().vars()->name(k))] = e[k];
                ne[graded_u->vars()->index(phi.u_var)] = i;
                img.add_term(ne, cc);
            }
        }
        bar.images.emplace(gen, AElem(graded_u, img));
    }

    // homogeneity of the candidate
    res.homogeneous = true;
    std::vector<std::int64_t> wu =
        var_weights(*graded_u->vars(), *graded, sq, b, phi.u_var, res.u_weight);
    for (const auto& gen : graded->generator_names()) {
        std::int64_t dg = filtration_degree(AElem::generator(graded, gen), sq);
        for (const auto& [e, c] : bar.image(gen).rep().terms()) {
            if (term_weight(e, wu) != dg) {
                res.homogeneous = false;
                res.diagnostics = "image of " + gen + " is not homogeneous";
            }
        }
    }

    res.verification = verify_exponential(bar);
    res.map = std::move(bar);
    res.ok = res.homogeneous && res.verification.ok;
    if (!res.ok && res.diagnostics.empty())
        res.diagnostics = "induced candidate failed exponential verification";
    return res;
}

}  // namespace charp
