#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace charp {

/// Thrown when two values from incompatible contexts (different fields,
/// different variable sets) are combined.
class context_mismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A field element: residues modulo p, ascending powers of the extension
/// generator. Length 1 for prime fields, e for F_{p^e}. Always reduced.
using Coeff = std::vector<std::uint32_t>;

/// F_p or an explicit extension F_{p^e} = F_p[w]/(modulus).
///
/// The modulus is user-supplied, monic and irreducible (checked by
/// exhaustive trial division; degrees up to 8 are supported).
class FieldSpec {
public:
    static std::shared_ptr<const FieldSpec> prime(std::uint32_t p);
    /// modulus: coefficients ascending, monic, degree >= 2.
    static std::shared_ptr<const FieldSpec> extension(std::uint32_t p,
                                                      std::vector<std::uint32_t> modulus);

    std::uint32_t characteristic() const { return p_; }
    std::size_t degree() const { return ext_.empty() ? 1 : ext_.size() - 1; }
    bool is_prime_field() const { return ext_.empty(); }
    const std::vector<std::uint32_t>& ext_modulus() const { return ext_; }

    Coeff zero() const { return Coeff(degree(), 0); }
    Coeff one() const;
    Coeff from_int(std::int64_t v) const;
    /// Element w^k of the extension generator (k < degree).
    Coeff generator_power(std::size_t k) const;

    bool is_zero(const Coeff& a) const;
    Coeff add(const Coeff& a, const Coeff& b) const;
    Coeff sub(const Coeff& a, const Coeff& b) const;
    Coeff neg(const Coeff& a) const;
    Coeff mul(const Coeff& a, const Coeff& b) const;
    Coeff inv(const Coeff& a) const;
    Coeff pow(Coeff a, std::uint64_t n) const;

    bool operator==(const FieldSpec& o) const { return p_ == o.p_ && ext_ == o.ext_; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string coeff_to_string(const Coeff& a) const;

private:
    FieldSpec(std::uint32_t p, std::vector<std::uint32_t> ext)
        : p_(p), ext_(std::move(ext)) {}

    void check(const Coeff& a) const;

    std::uint32_t p_;
    std::vector<std::uint32_t> ext_;  // empty for prime fields
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Deterministic Miller-Rabin, valid for all n < 2^31.
bool is_prime_u32(std::uint32_t n);

}  // namespace charp
