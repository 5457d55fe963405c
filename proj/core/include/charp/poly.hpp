#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charp/field.hpp"

namespace charp {

class not_polynomial : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class exponent_overflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ordered, immutable set of variable names. Exponent vectors index into it.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    /// Index of a name; throws context_mismatch if absent.
    std::size_t index(const std::string& name) const;
    bool contains(const std::string& name) const;

    bool operator==(const VarSet& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

using Exps = std::vector<std::int64_t>;

/// Sparse exact multivariate polynomial over a FieldSpec.
///
/// Terms are kept in descending lexicographic order on exponent vectors, the
/// canonical serialization order. Exponents are non-negative unless the
/// owning variable is flagged invertible (the Laurent case used for
/// B[(x1...xm)^-1]).
class Poly {
public:
    using TermMap = std::map<Exps, Coeff, std::greater<Exps>>;

    Poly(FieldPtr field, VarSetPtr vars);  // zero

    static Poly constant(FieldPtr field, VarSetPtr vars, const Coeff& c);
    static Poly constant(FieldPtr field, VarSetPtr vars, std::int64_t c);
    static Poly variable(FieldPtr field, VarSetPtr vars, const std::string& name,
                         std::int64_t exp = 1);
    static Poly monomial(FieldPtr field, VarSetPtr vars, Exps e, const Coeff& c);

    const FieldPtr& field() const { return field_; }
    const VarSetPtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    const std::vector<bool>& invertible() const { return invertible_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_laurent() const;
    std::size_t term_count() const { return terms_.size(); }
    /// Max total degree (sum of exponents); 0 for the zero polynomial.
    std::int64_t total_degree() const;
    std::int64_t degree_in(std::size_t var_index) const;
    bool depends_on(std::size_t var_index) const;

    Coeff coeff(const Exps& e) const;
    /// Builder: inserts c.x^e (added to any existing term), keeping canonical form.
    void add_term(const Exps& e, const Coeff& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(const Coeff& c) const;
    Poly pow(std::uint64_t n) const;

    /// Substitute a single variable by a constant.
    Poly eval_var(std::size_t var_index, const Coeff& value) const;
    /// Rebuild over a different variable set; old variables are matched by
    /// name (must all be present in `target`, else context_mismatch).
    Poly renamed(VarSetPtr target) const;
    /// Rebuild with explicit old-index -> new-index mapping.
    Poly mapped(VarSetPtr target, const std::vector<std::size_t>& new_index) const;

    std::string to_string() const;

private:
    void check_context(const Poly& o) const;

    FieldPtr field_;
    VarSetPtr vars_;
    std::vector<bool> invertible_;
    TermMap terms_;

    friend Poly localize(const Poly&, const std::vector<std::string>&);
    friend Poly delocalize(const Poly&);
};

/// A k-algebra homomorphism between polynomial rings, given on variables.
struct RingHom {
    VarSetPtr domain;
    FieldPtr field;
    std::vector<Poly> images;  // one per domain variable, all over a shared codomain VarSet

    RingHom(VarSetPtr domain_vars, std::vector<Poly> imgs);
    const VarSetPtr& codomain() const { return images.front().vars(); }
};

/// Image of `a` under the algebra map extending `h`.
Poly substitute(const RingHom& h, const Poly& a);

/// q with q*b == a, or nullopt when a is not divisible by b.
/// Leading-term elimination under descending lex; b must be nonzero.
std::optional<Poly> exact_div(const Poly& a, const Poly& b);

/// For univariate P, the polynomial D(U,V) with P(U) - P(V) = (U-V)*D(U,V),
/// built termwise from geometric sums. Output is over a fresh {u,v} VarSet.
Poly delta_quotient(const Poly& P, const std::string& u, const std::string& v);

/// Flag variables as invertible (Laurent embedding). Faithful: delocalize
/// round-trips whenever all exponents stay non-negative.
Poly localize(const Poly& a, const std::vector<std::string>& invertible_names);
/// Back to the plain polynomial ring; throws not_polynomial on negative exponents.
Poly delocalize(const Poly& a);

VarSetPtr make_vars(std::vector<std::string> names);

}  // namespace charp
