#include "charp/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace charp {

namespace {

constexpr std::int64_t kMaxExponent = 1'000'000'000;

void check_exp(std::int64_t e) {
    if (e > kMaxExponent || e < -kMaxExponent)
        throw exponent_overflow("exponent magnitude exceeds supported bound");
}

struct ExpsHash {
    std::size_t operator()(const Exps& e) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t x : e) {
            h ^= static_cast<std::uint64_t>(x);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

VarSetPtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
}

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("duplicate variable name: " + names_[i]);
    }
}

std::size_t VarSet::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw context_mismatch("unknown variable: " + name);
    return it->second;
}

bool VarSet::contains(const std::string& name) const {
    return index_.count(name) != 0;
}

Poly::Poly(FieldPtr field, VarSetPtr vars)
    : field_(std::move(field)),
      vars_(std::move(vars)),
      invertible_(vars_ ? vars_->size() : 0, false) {}

Poly Poly::constant(FieldPtr field, VarSetPtr vars, const Coeff& c) {
    Poly r(std::move(field), std::move(vars));
    if (!r.field_->is_zero(c))
        r.terms_.emplace(Exps(r.vars_->size(), 0), c);
    return r;
}

Poly Poly::constant(FieldPtr field, VarSetPtr vars, std::int64_t c) {
    Coeff cc = field->from_int(c);
    return constant(std::move(field), std::move(vars), cc);
}

Poly Poly::variable(FieldPtr field, VarSetPtr vars, const std::string& name, std::int64_t exp) {
    Exps e(vars->size(), 0);
    e[vars->index(name)] = exp;
    Coeff one = field->one();
    return monomial(std::move(field), std::move(vars), std::move(e), one);
}

Poly Poly::monomial(FieldPtr field, VarSetPtr vars, Exps e, const Coeff& c) {
    if (e.size() != vars->size())
        throw context_mismatch("exponent vector length mismatch");
    for (std::int64_t x : e) check_exp(x);
    Poly r(std::move(field), std::move(vars));
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0) r.invertible_[i] = true;
    if (!r.field_->is_zero(c))
        r.terms_.emplace(std::move(e), c);
    return r;
}

bool Poly::is_laurent() const {
    return std::any_of(invertible_.begin(), invertible_.end(), [](bool b) { return b; });
}

std::int64_t Poly::total_degree() const {
    std::int64_t d = 0;
    for (const auto& [e, c] : terms_) {
        std::int64_t s = 0;
        for (std::int64_t x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

std::int64_t Poly::degree_in(std::size_t var_index) const {
    std::int64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var_index]);
    return d;
}

bool Poly::depends_on(std::size_t var_index) const {
    for (const auto& [e, c] : terms_)
        if (e[var_index] != 0) return true;
    return false;
}

Coeff Poly::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_->zero() : it->second;
}

void Poly::add_term(const Exps& e, const Coeff& c) {
    if (e.size() != vars_->size())
        throw context_mismatch("exponent vector length mismatch");
    for (std::size_t i = 0; i < e.size(); ++i) {
        check_exp(e[i]);
        if (e[i] < 0 && !invertible_[i])
            throw not_polynomial("negative exponent on non-invertible variable " + vars_->name(i));
    }
    if (field_->is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = field_->add(it->second, c);
        if (field_->is_zero(it->second)) terms_.erase(it);
    }
}

void Poly::check_context(const Poly& o) const {
    if (*field_ != *o.field_)
        throw context_mismatch("field mismatch");
    if (!(*vars_ == *o.vars_))
        throw context_mismatch("variable set mismatch");
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = field_->neg(c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_context(o);
    Poly r = *this;
    for (std::size_t i = 0; i < invertible_.size(); ++i)
        r.invertible_[i] = invertible_[i] || o.invertible_[i];
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_.emplace(e, c);
        } else {
            it->second = field_->add(it->second, c);
            if (field_->is_zero(it->second)) r.terms_.erase(it);
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_context(o);
    Poly r(field_, vars_);
    for (std::size_t i = 0; i < invertible_.size(); ++i)
        r.invertible_[i] = invertible_[i] || o.invertible_[i];
    const std::size_t n = vars_->size();
    std::unordered_map<Exps, Coeff, ExpsHash> acc;
    acc.reserve(terms_.size() * 2 + o.terms_.size());
    Exps e(n, 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < n; ++i) {
                e[i] = ea[i] + eb[i];
                check_exp(e[i]);
            }
            Coeff c = field_->mul(ca, cb);
            if (field_->is_zero(c)) continue;
            auto [it, fresh] = acc.emplace(e, c);
            if (!fresh) {
                it->second = field_->add(it->second, c);
            }
        }
    }
    for (auto& [ee, cc] : acc) {
        if (!field_->is_zero(cc)) r.terms_.emplace(ee, std::move(cc));
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    return *field_ == *o.field_ && *vars_ == *o.vars_ && terms_ == o.terms_;
}

Poly Poly::scaled(const Coeff& c) const {
    Poly r(field_, vars_);
    r.invertible_ = invertible_;
    if (field_->is_zero(c)) return r;
    for (const auto& [e, cc] : terms_) {
        Coeff v = field_->mul(cc, c);
        if (!field_->is_zero(v)) r.terms_.emplace(e, v);
    }
    return r;
}

namespace {

Poly pow_binary(const Poly& a, std::uint64_t n) {
    Poly r = Poly::constant(a.field(), a.vars(), 1);
    Poly base = a;
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

}  // namespace

Poly Poly::pow(std::uint64_t n) const {
    const std::uint64_t p = field_->characteristic();
    if (n < p || term_count() <= 1) {
        Poly r = pow_binary(*this, n);
        r.invertible_ = invertible_;
        return r;
    }
    // base-p exponentiation: a^(p^k) is the termwise Frobenius, exact in
    // characteristic p, so only the base-p digits cost multiplications
    auto frobenius = [&](const Poly& a) {
        Poly r(a.field_, a.vars_);
        r.invertible_ = a.invertible_;
        for (const auto& [e, c] : a.terms_) {
            Exps ne = e;
            for (auto& x : ne) {
                if (x > kMaxExponent / (std::int64_t)p || x < -(kMaxExponent / (std::int64_t)p))
                    throw exponent_overflow("exponent overflow in Frobenius power");
                x *= (std::int64_t)p;
            }
            r.terms_.emplace(std::move(ne), a.field_->pow(c, p));
        }
        return r;
    };
    Poly r = constant(field_, vars_, 1);
    r.invertible_ = invertible_;
    Poly base = *this;
    while (true) {
        std::uint64_t digit = n % p;
        if (digit) r = r * pow_binary(base, digit);
        n /= p;
        if (!n) break;
        base = frobenius(base);
    }
    return r;
}

Poly Poly::eval_var(std::size_t var_index, const Coeff& value) const {
    Poly r(field_, vars_);
    r.invertible_ = invertible_;
    for (const auto& [e, c] : terms_) {
        std::int64_t k = e[var_index];
        if (k < 0)
            throw not_polynomial("cannot evaluate negative exponent");
        Coeff v = k == 0 ? c : field_->mul(c, field_->pow(value, static_cast<std::uint64_t>(k)));
        if (field_->is_zero(v)) continue;
        Exps ne = e;
        ne[var_index] = 0;
        r.add_term(ne, v);
    }
    return r;
}

Poly Poly::renamed(VarSetPtr target) const {
    std::vector<std::size_t> new_index(vars_->size(), SIZE_MAX);
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        if (target->contains(vars_->name(i))) {
            new_index[i] = target->index(vars_->name(i));
        } else if (depends_on(i)) {
            throw context_mismatch("variable " + vars_->name(i) + " absent from target set");
        }
    }
    return mapped(std::move(target), new_index);
}

Poly Poly::mapped(VarSetPtr target, const std::vector<std::size_t>& new_index) const {
    Poly r(field_, target);
    for (const auto& [e, c] : terms_) {
        Exps ne(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (new_index[i] == SIZE_MAX)
                throw context_mismatch("variable " + vars_->name(i) + " has no target index");
            ne[new_index[i]] += e[i];
            if (e[i] < 0) r.invertible_[new_index[i]] = true;
        }
        r.add_term(ne, c);
    }
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool unit = field_->is_prime_field() && c[0] == 1;
        bool any_var = std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x != 0; });
        if (!unit || !any_var) os << field_->coeff_to_string(c);
        bool star = !unit || !any_var;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            star = true;
            os << vars_->name(i);
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

RingHom::RingHom(VarSetPtr domain_vars, std::vector<Poly> imgs)
    : domain(std::move(domain_vars)), images(std::move(imgs)) {
    if (images.size() != domain->size())
        throw context_mismatch("ring hom needs exactly one image per domain variable");
    field = images.front().field();
    for (const auto& p : images) {
        if (*p.field() != *field || !(*p.vars() == *images.front().vars()))
            throw context_mismatch("ring hom images must share field and variable set");
    }
}

namespace {

// Recursive Horner substitution: peel off variables left to right.
Poly substitute_rec(const RingHom& h, const Poly& a, std::size_t var, const Poly& one) {
    const std::size_t n = a.vars()->size();
    if (a.is_zero())
        return Poly(h.field, h.codomain());
    if (var == n) {
        // constant with respect to all peeled variables
        const auto& [e, c] = *a.terms().begin();
        return one.scaled(c);
    }
    // group terms by exponent of `var`
    std::map<std::int64_t, Poly, std::greater<>> groups;
    for (const auto& [e, c] : a.terms()) {
        std::int64_t k = e[var];
        if (k < 0)
            throw not_polynomial("cannot substitute into a Laurent polynomial");
        auto it = groups.find(k);
        if (it == groups.end())
            it = groups.emplace(k, Poly(a.field(), a.vars())).first;
        Exps ne = e;
        ne[var] = 0;
        it->second.add_term(ne, c);
    }
    const Poly& img = h.images[var];
    Poly acc(h.field, h.codomain());
    std::int64_t prev = -1;
    // descending exponents: Horner with gap powers
    for (const auto& [k, part] : groups) {
        if (prev < 0) {
            acc = substitute_rec(h, part, var + 1, one);
        } else {
            acc = acc * img.pow(static_cast<std::uint64_t>(prev - k));
            acc += substitute_rec(h, part, var + 1, one);
        }
        prev = k;
    }
    if (prev > 0) acc = acc * img.pow(static_cast<std::uint64_t>(prev));
    return acc;
}

}  // namespace

Poly substitute(const RingHom& h, const Poly& a) {
    if (!(*a.vars() == *h.domain))
        throw context_mismatch("polynomial variables do not match hom domain");
    if (*a.field() != *h.field)
        throw context_mismatch("field mismatch in substitution");
    Poly one = Poly::constant(h.field, h.codomain(), 1);
    return substitute_rec(h, a, 0, one);
}

std::optional<Poly> exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw std::domain_error("division by zero polynomial");
    if (a.is_laurent() || b.is_laurent())
        throw not_polynomial("exact_div requires plain polynomials");
    if (!(*a.vars() == *b.vars()) || *a.field() != *b.field())
        throw context_mismatch("exact_div operands share no context");
    const std::size_t n = a.vars()->size();
    Poly r = a;
    Poly q(a.field(), a.vars());
    const auto& [eb, cb] = *b.terms().begin();
    Coeff cb_inv = a.field()->inv(cb);
    while (!r.is_zero()) {
        const auto& [er, cr] = *r.terms().begin();
        Exps eq(n);
        for (std::size_t i = 0; i < n; ++i) {
            eq[i] = er[i] - eb[i];
            if (eq[i] < 0) return std::nullopt;
        }
        Coeff cq = a.field()->mul(cr, cb_inv);
        Poly t = Poly::monomial(a.field(), a.vars(), eq, cq);
        q += t;
        r -= t * b;
    }
    return q;
}

Poly delta_quotient(const Poly& P, const std::string& u, const std::string& v) {
    VarSetPtr uv = make_vars({u, v});
    FieldPtr F = P.field();
    Poly out(F, uv);
    // locate the (single) variable P depends on
    std::size_t var = SIZE_MAX;
    for (std::size_t i = 0; i < P.vars()->size(); ++i) {
        if (P.depends_on(i)) {
            if (var != SIZE_MAX)
                throw std::invalid_argument("delta_quotient requires a univariate polynomial");
            var = i;
        }
    }
    if (var == SIZE_MAX) return out;  // constant: P(U)-P(V) = 0
    for (const auto& [e, c] : P.terms()) {
        std::int64_t k = e[var];
        if (k < 0) throw not_polynomial("Laurent input to delta_quotient");
        // c*(U^k - V^k)/(U - V) = c * sum_{i=0}^{k-1} U^i V^{k-1-i}
        for (std::int64_t i = 0; i < k; ++i)
            out.add_term({i, k - 1 - i}, c);
    }
    return out;
}

Poly localize(const Poly& a, const std::vector<std::string>& invertible_names) {
    Poly r = a;
    for (const auto& name : invertible_names)
        r.invertible_[a.vars()->index(name)] = true;
    return r;
}

Poly delocalize(const Poly& a) {
    for (const auto& [e, c] : a.terms())
        for (std::int64_t x : e)
            if (x < 0)
                throw not_polynomial("element has a pole: negative exponent present");
    Poly r = a;
    std::fill(r.invertible_.begin(), r.invertible_.end(), false);
    return r;
}

}  // namespace charp
