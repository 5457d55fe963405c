#include "charp/presentation.hpp"

#include <algorithm>

namespace charp {

namespace {

std::vector<std::string> full_names(std::size_t m, const std::vector<std::string>& extras) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back("X" + std::to_string(i + 1));
    names.push_back("Y");
    names.push_back("Z");
    names.push_back("T");
    for (const auto& e : extras) names.push_back(e);
    return names;
}

}  // namespace

std::string Presentation::x_name(std::size_t i) const {
    return "X" + std::to_string(i + 1);
}

std::size_t Presentation::y_index() const {
    if (free_) throw context_mismatch("free polynomial ring has no Y generator");
    return m_;
}
std::size_t Presentation::z_index() const { return vars_->index("Z"); }
std::size_t Presentation::t_index() const { return vars_->index("T"); }

PresPtr Presentation::make(FieldPtr field, std::size_t m, std::vector<std::int64_t> r, Poly F,
                           std::vector<std::string> extra_vars) {
    if (r.size() != m)
        throw hypothesis_violation("need exactly one exponent r_i per x-variable");
    for (auto ri : r)
        if (ri <= 1)
            throw hypothesis_violation("every r_i must exceed 1");
    if (F.is_zero())
        throw not_a_domain("F = 0 makes the relation degenerate");
    for (const auto& name : extra_vars) {
        if (name == "Y" || name == "Z" || name == "T" || (name.size() > 1 && name[0] == 'X'))
            throw std::invalid_argument("adjoined variable collides with a core generator: " + name);
    }
    auto p = new Presentation();
    p->field_ = std::move(field);
    p->m_ = m;
    p->r_ = std::move(r);
    p->extras_ = std::move(extra_vars);
    p->vars_ = make_vars(full_names(m, p->extras_));
    // F may arrive over any subset of {X1..Xm, Z, T}
    Poly Ff = F.renamed(p->vars_);
    if (*Ff.field() != *p->field_)
        throw context_mismatch("F is over a different field");
    if (Ff.depends_on(p->y_index()))
        throw not_a_domain("F must not involve Y");
    for (std::size_t j = 0; j < m; ++j) {
        if (Ff.eval_var(j, p->field_->zero()).is_zero())
            throw not_a_domain("X" + std::to_string(j + 1) +
                               " divides F: the quotient is not a domain");
    }
    p->F_full_ = Ff;
    return PresPtr(p);
}

PresPtr Presentation::free_ring(FieldPtr field, std::vector<std::string> names) {
    if (names.empty())
        throw std::invalid_argument("free polynomial ring needs at least one variable");
    auto p = new Presentation();
    p->free_ = true;
    p->field_ = field;
    p->vars_ = make_vars(names);
    p->F_full_ = Poly(field, p->vars_);
    return PresPtr(p);
}

PresPtr Presentation::with_extras(std::vector<std::string> names) const {
    if (free_) {
        std::vector<std::string> all = vars_->names();
        all.insert(all.end(), names.begin(), names.end());
        return free_ring(field_, std::move(all));
    }
    std::vector<std::string> extras = extras_;
    extras.insert(extras.end(), names.begin(), names.end());
    return make(field_, m_, r_, F_full_, std::move(extras));
}

bool Presentation::operator==(const Presentation& o) const {
    if (free_ != o.free_ || *field_ != *o.field_) return false;
    if (free_) return *vars_ == *o.vars_;
    return m_ == o.m_ && r_ == o.r_ && extras_ == o.extras_ &&
           F_full_.terms() == o.F_full_.terms();
}

// ---------------------------------------------------------------------------

namespace {

// Offending monomial: positive Y power and every x-exponent >= r_s (with
// m = 0 that is just a positive Y power).
bool offends(const Exps& e, const Presentation& p) {
    if (e[p.y_index()] < 1) return false;
    for (std::size_t s = 0; s < p.m(); ++s)
        if (e[s] < p.r()[s]) return false;
    return true;
}

// One application of x^r y -> F to the given monomial.
Poly rewrite_term(const Exps& e, const Coeff& c, const Presentation& p) {
    Exps ne = e;
    ne[p.y_index()] -= 1;
    for (std::size_t s = 0; s < p.m(); ++s) ne[s] -= p.r()[s];
    Poly mono = Poly::monomial(p.field(), p.vars(), ne, c);
    return mono * p.F_full();
}

Poly normalize(const Presentation& p, Poly work, std::mt19937* rng) {
    if (p.is_free()) return work;
    while (true) {
        std::vector<const std::pair<const Exps, Coeff>*> offenders;
        for (const auto& term : work.terms()) {
            if (offends(term.first, p)) {
                offenders.push_back(&term);
                if (!rng) break;  // deterministic: first in canonical order
            }
        }
        if (offenders.empty()) return work;
        const auto* chosen = offenders.front();
        if (rng && offenders.size() > 1) {
            std::uniform_int_distribution<std::size_t> pick(0, offenders.size() - 1);
            chosen = offenders[pick(*rng)];
        }
        Exps e = chosen->first;
        Coeff c = chosen->second;
        work -= Poly::monomial(p.field(), p.vars(), e, c);
        work += rewrite_term(e, c, p);
    }
}

}  // namespace

AElem::AElem(PresPtr pres, const Poly& raw) : pres_(std::move(pres)), rep_(nullptr, nullptr) {
    Poly work = raw;
    if (!(*work.vars() == *pres_->vars())) work = work.renamed(pres_->vars());
    if (*work.field() != *pres_->field())
        throw context_mismatch("element over a different field");
    if (work.is_laurent())
        throw not_polynomial("ring elements cannot carry negative exponents");
    rep_ = normalize(*pres_, std::move(work), nullptr);
}

AElem AElem::normal_form_randomized(PresPtr pres, const Poly& raw, std::mt19937& rng) {
    Poly work = raw;
    if (!(*work.vars() == *pres->vars())) work = work.renamed(pres->vars());
    Poly nf = normalize(*pres, std::move(work), &rng);
    return AElem(std::move(pres), std::move(nf), 0);
}

AElem AElem::zero(PresPtr pres) {
    Poly z(pres->field(), pres->vars());
    return AElem(std::move(pres), std::move(z), 0);
}

AElem AElem::constant(PresPtr pres, const Coeff& c) {
    Poly p = Poly::constant(pres->field(), pres->vars(), c);
    return AElem(std::move(pres), std::move(p), 0);
}

AElem AElem::constant(PresPtr pres, std::int64_t c) {
    Poly p = Poly::constant(pres->field(), pres->vars(), c);
    return AElem(std::move(pres), std::move(p), 0);
}

AElem AElem::generator(PresPtr pres, const std::string& name) {
    Poly p = Poly::variable(pres->field(), pres->vars(), name);
    // With m = 0 the relation is Y = F, so the generator Y itself rewrites;
    // every other generator is already normal.
    return AElem(std::move(pres), std::move(p));
}

namespace {
void check_same_pres(const AElem& a, const AElem& b) {
    if (*a.pres() != *b.pres())
        throw context_mismatch("elements of different presentations");
}
}  // namespace

AElem AElem::operator+(const AElem& o) const {
    check_same_pres(*this, o);
    return AElem(pres_, rep_ + o.rep_);  // sum of normal forms is normal, but re-checking is cheap
}

AElem AElem::operator-(const AElem& o) const {
    check_same_pres(*this, o);
    return AElem(pres_, rep_ - o.rep_);
}

AElem AElem::operator*(const AElem& o) const {
    check_same_pres(*this, o);
    return AElem(pres_, rep_ * o.rep_);
}

AElem AElem::operator-() const { return AElem(pres_, -rep_, 0); }

AElem AElem::scaled(const Coeff& c) const { return AElem(pres_, rep_.scaled(c), 0); }

AElem AElem::pow(std::uint64_t n) const {
    const std::uint64_t p = pres_->field()->characteristic();
    auto binary = [](AElem base, std::uint64_t k) {
        AElem r = constant(base.pres_, 1);
        while (k) {
            if (k & 1) r = r * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return r;
    };
    if (n < p || rep_.term_count() <= 1) return binary(*this, n);
    // base-p digits: a^(p^k) is the termwise Frobenius of the representative
    // (renormalized), exact in characteristic p
    AElem r = constant(pres_, 1);
    AElem base = *this;
    while (true) {
        std::uint64_t digit = n % p;
        if (digit) r = r * binary(base, digit);
        n /= p;
        if (!n) break;
        base = AElem(base.pres_, base.rep_.pow(p));
    }
    return r;
}

bool AElem::operator==(const AElem& o) const {
    return *pres_ == *o.pres_ && rep_.terms() == o.rep_.terms();
}

Poly AElem::to_localization() const {
    if (pres_->is_free()) return rep_;
    // target: full vars without Y, x's invertible
    std::vector<std::string> names;
    std::vector<std::string> xnames;
    for (const auto& n : pres_->vars()->names())
        if (n != "Y") names.push_back(n);
    for (std::size_t i = 0; i < pres_->m(); ++i) xnames.push_back(pres_->x_name(i));
    VarSetPtr bvars = make_vars(names);
    Poly F_B = localize(pres_->F_full().renamed(bvars), xnames);
    Exps xr(bvars->size(), 0);
    for (std::size_t i = 0; i < pres_->m(); ++i)
        xr[bvars->index(pres_->x_name(i))] = -pres_->r()[i];
    Poly xr_inv = localize(Poly::monomial(pres_->field(), bvars, xr, pres_->field()->one()), xnames);
    Poly y_img = F_B * xr_inv;

    Poly out(pres_->field(), bvars);
    out = localize(out, xnames);
    std::map<std::int64_t, Poly> ypow;  // memoized powers of the y image
    ypow.emplace(0, localize(Poly::constant(pres_->field(), bvars, 1), xnames));
    const std::size_t yi = pres_->y_index();
    for (const auto& [e, c] : rep_.terms()) {
        std::int64_t ell = e[yi];
        auto it = ypow.find(ell);
        if (it == ypow.end()) {
            auto below = ypow.upper_bound(ell);
            --below;  // largest stored power <= ell (0 always present)
            Poly v = below->second;
            for (std::int64_t k = below->first; k < ell; ++k) v = v * y_img;
            it = ypow.emplace(ell, std::move(v)).first;
        }
        Exps ne(bvars->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i == yi || e[i] == 0) continue;
            ne[bvars->index(pres_->vars()->name(i))] = e[i];
        }
        Poly mono = localize(Poly::monomial(pres_->field(), bvars, ne, c), xnames);
        out += mono * it->second;
    }
    return out;
}

bool AElem::in_B() const {
    if (pres_->is_free()) return true;
    return !rep_.depends_on(pres_->y_index());
}

AElem AElem::moved_to(PresPtr other) const {
    return AElem(other, rep_.renamed(other->vars()));
}

// ---------------------------------------------------------------------------

namespace {

AElem apply_hom_rec(const std::map<std::string, AElem>& images, const Poly& raw, std::size_t var,
                    const PresPtr& target) {
    if (raw.is_zero()) return AElem::zero(target);
    if (var == raw.vars()->size()) {
        const auto& [e, c] = *raw.terms().begin();
        return AElem::constant(target, c);
    }
    std::map<std::int64_t, Poly, std::greater<>> groups;
    for (const auto& [e, c] : raw.terms()) {
        std::int64_t k = e[var];
        if (k < 0) throw not_polynomial("cannot apply a hom to a Laurent polynomial");
        auto it = groups.find(k);
        if (it == groups.end())
            it = groups.emplace(k, Poly(raw.field(), raw.vars())).first;
        Exps ne = e;
        ne[var] = 0;
        it->second.add_term(ne, c);
    }
    auto img_it = images.find(raw.vars()->name(var));
    if (img_it == images.end() && (groups.size() > 1 || groups.begin()->first != 0))
        throw context_mismatch("no image for variable " + raw.vars()->name(var));
    AElem acc = AElem::zero(target);
    std::int64_t prev = -1;
    for (const auto& [k, part] : groups) {
        if (prev < 0) {
            acc = apply_hom_rec(images, part, var + 1, target);
        } else {
            acc = acc * img_it->second.pow(static_cast<std::uint64_t>(prev - k));
            acc = acc + apply_hom_rec(images, part, var + 1, target);
        }
        prev = k;
    }
    if (prev > 0) acc = acc * img_it->second.pow(static_cast<std::uint64_t>(prev));
    return acc;
}

}  // namespace

AElem apply_poly_hom(const std::map<std::string, AElem>& images, const Poly& raw, PresPtr target) {
    for (const auto& [name, img] : images) {
        if (*img.pres() != *target)
            throw context_mismatch("image of " + name + " lives in a different presentation");
    }
    return apply_hom_rec(images, raw, 0, target);
}

}  // namespace charp
