#include "charp/lines.hpp"

#include <algorithm>

namespace charp {

namespace {

Poly compose_univariate(const Poly& P, const Poly& arg) {
    // P over {S}; arg over arbitrary vars
    RingHom h(P.vars(), {arg});
    return substitute(h, P);
}

Poly plane_subst(const Poly& f, const Poly& zimg, const Poly& timg) {
    RingHom h(f.vars(), {zimg, timg});
    return substitute(h, f);
}

}  // namespace

LineCertificate make_nagata_certificate(std::uint32_t p, std::uint32_t q) {
    return make_nagata_certificate(FieldSpec::prime(p), q);
}

LineCertificate make_nagata_certificate(const FieldPtr& field, std::uint32_t q) {
    const std::uint64_t p = field->characteristic();
    if (!is_prime_u32(q))
        throw std::invalid_argument("q must be prime");
    if (q == p)
        throw std::invalid_argument("q must be a prime other than the characteristic");

    VarSetPtr ZT = make_vars({"Z", "T"});
    VarSetPtr Sv = make_vars({"S"});
    Poly Z = Poly::variable(field, ZT, "Z");
    Poly T = Poly::variable(field, ZT, "T");
    Poly S = Poly::variable(field, Sv, "S");

    // epsilon = (-1)^q, so that eps^p = (-1)^q holds in F_p
    Coeff eps = field->from_int(q % 2 == 0 ? 1 : -1);

    LineCertificate c{field,
                      Z.pow(p * p) + T + T.pow((std::uint64_t)q * p),
                      Z + (Z.pow(p) + T.pow(q)).pow(q).scaled(eps),
                      S - S.pow((std::uint64_t)p * q).scaled(eps),
                      -S.pow(p * p),
                      Poly(field, ZT),
                      Poly(field, ZT)};

    auto p1 = exact_div(Z - compose_univariate(c.P, c.h), c.f);
    auto q1 = exact_div(T - compose_univariate(c.Q, c.h), c.f);
    if (!p1 || !q1)
        throw std::logic_error("Nagata certificate: exact division by f must succeed");
    c.P1 = *p1;
    c.Q1 = *q1;

    LineReport rep = verify_line_certificate(c);
    if (!rep.ok)
        throw std::logic_error("Nagata certificate failed its own identities");
    return c;
}

LineCertificate make_trivial_certificate(const FieldPtr& field) {
    VarSetPtr ZT = make_vars({"Z", "T"});
    VarSetPtr Sv = make_vars({"S"});
    LineCertificate c{field,
                      Poly::variable(field, ZT, "T"),
                      Poly::variable(field, ZT, "Z"),
                      Poly::variable(field, Sv, "S"),
                      Poly(field, Sv),
                      Poly(field, ZT),
                      Poly::constant(field, ZT, 1)};
    LineReport rep = verify_line_certificate(c);
    if (!rep.ok)
        throw std::logic_error("trivial certificate failed its identities");
    return c;
}

LineReport verify_line_certificate(const LineCertificate& c) {
    LineReport rep;
    Poly Z = Poly::variable(c.field, c.f.vars(), "Z");
    Poly T = Poly::variable(c.field, c.f.vars(), "T");
    Poly S = Poly::variable(c.field, c.P.vars(), "S");

    rep.checks.push_back({"Z - P(h) = f*P1",
                          Z - compose_univariate(c.P, c.h) == c.f * c.P1});
    rep.checks.push_back({"T - Q(h) = f*Q1",
                          T - compose_univariate(c.Q, c.h) == c.f * c.Q1});
    rep.checks.push_back({"f(P(S), Q(S)) = 0",
                          plane_subst(c.f, c.P, c.Q.renamed(c.P.vars())).is_zero()});
    rep.checks.push_back({"h(P(S), Q(S)) = S",
                          plane_subst(c.h, c.P, c.Q.renamed(c.P.vars())) == S});
    rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const LineCheck& x) { return x.passed; });
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

Poly apply_move(const Poly& f, const ReductionMove& mv) {
    const FieldPtr& F = f.field();
    Poly Z = Poly::variable(F, f.vars(), "Z");
    Poly T = Poly::variable(F, f.vars(), "T");
    switch (mv.kind) {
        case ReductionMove::Kind::elem_z:
            return plane_subst(f, Z + mv.g.renamed(f.vars()), T);
        case ReductionMove::Kind::elem_t:
            return plane_subst(f, Z, T + mv.g.renamed(f.vars()));
        case ReductionMove::Kind::affine: {
            Poly zi = Z.scaled(F->from_int(mv.matrix[0])) + T.scaled(F->from_int(mv.matrix[1])) +
                      Poly::constant(F, f.vars(), mv.shift[0]);
            Poly ti = Z.scaled(F->from_int(mv.matrix[2])) + T.scaled(F->from_int(mv.matrix[3])) +
                      Poly::constant(F, f.vars(), mv.shift[1]);
            return plane_subst(f, zi, ti);
        }
    }
    throw std::logic_error("unreachable");
}

// all nonzero univariate g over F_p with degree <= bound, in counter order
class GEnumerator {
public:
    GEnumerator(FieldPtr field, VarSetPtr var, std::int64_t bound, bool monomials_only)
        : field_(std::move(field)), var_(std::move(var)), bound_(bound),
          monomial_(monomials_only), coeffs_(bound + 1, 0) {}

    std::optional<Poly> next() {
        const std::uint32_t p = field_->characteristic();
        if (monomial_) {
            // g = c * x^d, d ascending then c ascending
            while (deg_ <= bound_) {
                if (++c_ < p) {
                    Poly g = Poly::variable(field_, var_, var_->name(0), deg_)
                                 .scaled(field_->from_int(c_));
                    return g;
                }
                c_ = 0;
                ++deg_;
            }
            return std::nullopt;
        }
        // full enumeration: increment base-p counter over coefficients
        while (true) {
            std::size_t i = 0;
            for (; i < coeffs_.size(); ++i) {
                if (++coeffs_[i] < p) break;
                coeffs_[i] = 0;
            }
            if (i == coeffs_.size()) return std::nullopt;
            Poly g(field_, var_);
            for (std::size_t d = 0; d < coeffs_.size(); ++d)
                if (coeffs_[d])
                    g.add_term({(std::int64_t)d}, field_->from_int(coeffs_[d]));
            return g;
        }
    }

private:
    FieldPtr field_;
    VarSetPtr var_;
    std::int64_t bound_;
    bool monomial_;
    std::vector<std::uint32_t> coeffs_;
    std::int64_t deg_ = 0;
    std::uint32_t c_ = 0;
};

}  // namespace

Poly replay_moves(const Poly& f, const std::vector<ReductionMove>& log) {
    Poly cur = f;
    for (const auto& mv : log) cur = apply_move(cur, mv);
    return cur;
}

CoordinateEvidence coordinate_reduction_evidence(const Poly& f, std::int64_t degree_bound) {
    if (f.is_zero() || f.total_degree() == 0)
        throw std::invalid_argument("coordinate reduction needs a nonconstant polynomial");
    if (!f.field()->is_prime_field())
        throw std::invalid_argument("coordinate reduction search is implemented over prime fields");
    const FieldPtr& F = f.field();
    const std::uint32_t p = F->characteristic();

    // full exhaustion is feasible only for small p^(bound+1)
    double space = 1;
    for (std::int64_t i = 0; i <= degree_bound; ++i) space *= p;
    bool exhaustive = space <= (1 << 17);

    CoordinateEvidence ev;
    ev.bound = degree_bound;
    ev.exhaustive = exhaustive;

    VarSetPtr zonly = make_vars({"Z"});
    VarSetPtr tonly = make_vars({"T"});

    Poly cur = f;
    while (cur.total_degree() > 1) {
        std::int64_t d = cur.total_degree();
        std::optional<ReductionMove> found;

        for (int target = 0; target < 2 && !found; ++target) {
            GEnumerator gen(F, target == 0 ? tonly : zonly, degree_bound, !exhaustive);
            while (auto g = gen.next()) {
                ReductionMove mv{target == 0 ? ReductionMove::Kind::elem_z
                                             : ReductionMove::Kind::elem_t,
                                 *g, {}, {}};
                if (apply_move(cur, mv).total_degree() < d) {
                    found = mv;
                    break;
                }
            }
        }
        if (!found) {
            // affine changes (they preserve the top form's degree, but the
            // search is part of the recorded evidence)
            for (std::int64_t a = 0; a < p && !found; ++a)
                for (std::int64_t b = 0; b < p && !found; ++b)
                    for (std::int64_t c = 0; c < p && !found; ++c)
                        for (std::int64_t dd = 0; dd < p && !found; ++dd) {
                            if ((a * dd - b * c) % p == 0) continue;
                            for (std::int64_t e = 0; e < p && !found; ++e)
                                for (std::int64_t s = 0; s < p && !found; ++s) {
                                    ReductionMove mv{ReductionMove::Kind::affine,
                                                     Poly(F, zonly),
                                                     {a, b, c, dd},
                                                     {e, s}};
                                    if (apply_move(cur, mv).total_degree() < d) found = mv;
                                }
                        }
        }
        if (!found) {
            ev.stuck_degree = d;
            return ev;
        }
        cur = apply_move(cur, *found);
        ev.log.push_back(std::move(*found));
    }
    ev.reduced_to_linear = true;
    return ev;
}

}  // namespace charp
