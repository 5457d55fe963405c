#pragma once

#include <random>

#include "charp/poly.hpp"

namespace charp {

class not_a_domain : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class hypothesis_violation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Presentation;
using PresPtr = std::shared_ptr<const Presentation>;

/// The one-relation quotient k[X1..Xm, Y, Z, T, extras]/(X1^r1...Xm^rm Y - F)
/// with F in k[X1..Xm, Z, T], r_i > 1, no X_j dividing F. Also doubles as a
/// plain polynomial ring (free_ring) so translation maps and fully
/// specialized fibers live in the same engine.
class Presentation {
public:
    static PresPtr make(FieldPtr field, std::size_t m, std::vector<std::int64_t> r, Poly F,
                        std::vector<std::string> extra_vars = {});
    static PresPtr free_ring(FieldPtr field, std::vector<std::string> names);

    bool is_free() const { return free_; }
    std::size_t m() const { return m_; }
    const std::vector<std::int64_t>& r() const { return r_; }
    /// F over the full variable set (zero in Y).
    const Poly& F_full() const { return F_full_; }
    const FieldPtr& field() const { return field_; }
    const VarSetPtr& vars() const { return vars_; }
    const std::vector<std::string>& extra_vars() const { return extras_; }

    std::string x_name(std::size_t i) const;  // 0-based
    std::size_t x_index(std::size_t i) const { return i; }
    std::size_t y_index() const;
    std::size_t z_index() const;
    std::size_t t_index() const;

    /// All ring generators (every variable of the full set).
    const std::vector<std::string>& generator_names() const { return vars_->names(); }

    /// Same core ring with additional adjoined free variables.
    PresPtr with_extras(std::vector<std::string> names) const;

    bool operator==(const Presentation& o) const;
    bool operator!=(const Presentation& o) const { return !(*this == o); }

private:
    Presentation() = default;

    bool free_ = false;
    FieldPtr field_;
    std::size_t m_ = 0;
    std::vector<std::int64_t> r_;
    std::vector<std::string> extras_;
    VarSetPtr vars_;
    Poly F_full_{nullptr, nullptr};
};

/// Element of A in the unique monomial normal form: any monomial with a
/// positive Y power has some x-exponent below its r. Equality is syntactic.
class AElem {
public:
    AElem(PresPtr pres, const Poly& raw);
    static AElem zero(PresPtr pres);
    static AElem constant(PresPtr pres, const Coeff& c);
    static AElem constant(PresPtr pres, std::int64_t c);
    static AElem generator(PresPtr pres, const std::string& name);
    /// Normal form reached through a randomized reduction order (confluence
    /// testing); the result must agree with the deterministic one.
    static AElem normal_form_randomized(PresPtr pres, const Poly& raw, std::mt19937& rng);

    const PresPtr& pres() const { return pres_; }
    const Poly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    AElem operator+(const AElem& o) const;
    AElem operator-(const AElem& o) const;
    AElem operator*(const AElem& o) const;
    AElem operator-() const;
    AElem scaled(const Coeff& c) const;
    AElem pow(std::uint64_t n) const;
    bool operator==(const AElem& o) const;
    bool operator!=(const AElem& o) const { return !(*this == o); }

    /// Injective embedding into B[(x1...xm)^-1]: y -> F/x^r. The independent
    /// equality oracle.
    Poly to_localization() const;
    /// True iff the element lies in B = k[x1..xm, z, t] (and extras): no Y.
    bool in_B() const;
    /// Reinterpret over a compatible presentation (same core, possibly more
    /// adjoined variables); variables matched by name.
    AElem moved_to(PresPtr other) const;

    std::string to_string() const { return rep_.to_string(); }

private:
    AElem(PresPtr pres, Poly rep, int /*already_normal*/)
        : pres_(std::move(pres)), rep_(std::move(rep)) {}

    PresPtr pres_;
    Poly rep_;
};

/// Evaluate a polynomial in the quotient ring: each variable of `raw` is
/// replaced by images[name]. All images must live in `target`.
AElem apply_poly_hom(const std::map<std::string, AElem>& images, const Poly& raw, PresPtr target);

}  // namespace charp
