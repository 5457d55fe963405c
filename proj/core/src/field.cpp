#include "charp/field.hpp"

#include <algorithm>
#include <sstream>

namespace charp {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

// ----- dense univariate arithmetic over F_p, used for the extension field -----

using UPoly = std::vector<std::uint32_t>;  // ascending, may have trailing zeros

void utrim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + (std::uint64_t)a[i] * b[j]) % p);
    utrim(r);
    return r;
}

// remainder of a mod monic b
UPoly umod(UPoly a, const UPoly& b, std::uint64_t p) {
    utrim(a);
    while (a.size() >= b.size()) {
        std::uint64_t c = a.back();  // b monic
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t sub = c * b[i] % p;
            std::uint64_t cur = a[i + shift];
            a[i + shift] = static_cast<std::uint32_t>((cur + p - sub) % p);
        }
        utrim(a);
    }
    return a;
}

UPoly usub(UPoly a, const UPoly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = static_cast<std::uint32_t>((a[i] + p - b[i]) % p);
    utrim(a);
    return a;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // p prime
    return powmod64(a, p - 2, p);
}

// extended gcd over F_p[x]: returns (g, s) with s*a = g mod b, g monic gcd(a,b)
std::pair<UPoly, UPoly> half_xgcd(UPoly a, UPoly b, std::uint64_t p) {
    UPoly s0{1}, s1{};
    while (!b.empty()) {
        // divide a by b
        UPoly q;
        UPoly r = a;
        utrim(r);
        std::uint64_t lc_inv = invmod(b.back(), p);
        if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, 0);
        while (r.size() >= b.size() && !r.empty()) {
            std::uint64_t c = mulmod64(r.back(), lc_inv, p);
            std::size_t shift = r.size() - b.size();
            q[shift] = static_cast<std::uint32_t>(c);
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t sub = c * b[i] % p;
                r[i + shift] = static_cast<std::uint32_t>((r[i + shift] + p - sub) % p);
            }
            utrim(r);
        }
        utrim(q);
        UPoly s2 = usub(s0, umul(q, s1, p), p);
        a = b;
        b = r;
        s0 = s1;
        s1 = s2;
    }
    // normalize gcd monic
    if (!a.empty() && a.back() != 1) {
        std::uint64_t c = invmod(a.back(), p);
        for (auto& x : a) x = static_cast<std::uint32_t>(x * c % p);
        for (auto& x : s0) x = static_cast<std::uint32_t>(x * c % p);
    }
    return {a, s0};
}

bool is_irreducible(const UPoly& f, std::uint64_t p) {
    // exhaustive trial division by monic polynomials of degree 1..deg/2
    std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        // enumerate monic degree-d divisors: p^d candidates
        double count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= (double)p;
        if (count > 2e6)
            throw std::invalid_argument("extension modulus too large for exhaustive irreducibility check");
        std::vector<std::uint32_t> coeffs(d, 0);
        while (true) {
            UPoly g(coeffs.begin(), coeffs.end());
            g.push_back(1);  // monic
            if (umod(f, g, p).empty()) return false;
            // increment
            std::size_t i = 0;
            for (; i < d; ++i) {
                if (++coeffs[i] < p) break;
                coeffs[i] = 0;
            }
            if (i == d) break;
        }
    }
    return true;
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::shared_ptr<const FieldSpec> FieldSpec::prime(std::uint32_t p) {
    if (!is_prime_u32(p))
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    return std::shared_ptr<const FieldSpec>(new FieldSpec(p, {}));
}

std::shared_ptr<const FieldSpec> FieldSpec::extension(std::uint32_t p,
                                                      std::vector<std::uint32_t> modulus) {
    if (!is_prime_u32(p))
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    for (auto& c : modulus) c %= p;
    while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
    if (modulus.size() < 3)
        throw std::invalid_argument("extension modulus must have degree >= 2");
    if (modulus.size() > 9)
        throw std::invalid_argument("extension modulus degree > 8 unsupported");
    if (modulus.back() != 1)
        throw std::invalid_argument("extension modulus must be monic");
    if (!is_irreducible(modulus, p))
        throw std::invalid_argument("extension modulus is reducible over F_p");
    return std::shared_ptr<const FieldSpec>(new FieldSpec(p, std::move(modulus)));
}

void FieldSpec::check(const Coeff& a) const {
    if (a.size() != degree())
        throw context_mismatch("coefficient has wrong extension degree");
}

Coeff FieldSpec::one() const {
    Coeff r = zero();
    r[0] = 1;
    return r;
}

Coeff FieldSpec::from_int(std::int64_t v) const {
    Coeff r = zero();
    std::int64_t m = v % (std::int64_t)p_;
    if (m < 0) m += p_;
    r[0] = static_cast<std::uint32_t>(m);
    return r;
}

Coeff FieldSpec::generator_power(std::size_t k) const {
    if (k >= degree())
        throw std::invalid_argument("generator power exceeds extension degree");
    Coeff r = zero();
    r[k] = 1;
    return r;
}

bool FieldSpec::is_zero(const Coeff& a) const {
    check(a);
    return std::all_of(a.begin(), a.end(), [](std::uint32_t x) { return x == 0; });
}

Coeff FieldSpec::add(const Coeff& a, const Coeff& b) const {
    check(a);
    check(b);
    Coeff r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t s = (std::uint64_t)a[i] + b[i];
        r[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    return r;
}

Coeff FieldSpec::sub(const Coeff& a, const Coeff& b) const {
    check(a);
    check(b);
    Coeff r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = static_cast<std::uint32_t>(((std::uint64_t)a[i] + p_ - b[i]) % p_);
    return r;
}

Coeff FieldSpec::neg(const Coeff& a) const {
    check(a);
    Coeff r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] == 0 ? 0 : p_ - a[i];
    return r;
}

Coeff FieldSpec::mul(const Coeff& a, const Coeff& b) const {
    check(a);
    check(b);
    if (is_prime_field())
        return {static_cast<std::uint32_t>((std::uint64_t)a[0] * b[0] % p_)};
    UPoly pa(a.begin(), a.end()), pb(b.begin(), b.end());
    UPoly r = umod(umul(pa, pb, p_), ext_, p_);
    r.resize(degree(), 0);
    return Coeff(r.begin(), r.end());
}

Coeff FieldSpec::inv(const Coeff& a) const {
    check(a);
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    if (is_prime_field())
        return {static_cast<std::uint32_t>(invmod(a[0], p_))};
    UPoly pa(a.begin(), a.end());
    utrim(pa);
    auto [g, s] = half_xgcd(pa, ext_, p_);
    if (g.size() != 1)
        throw std::domain_error("element not invertible (modulus not irreducible?)");
    UPoly r = umod(s, ext_, p_);
    r.resize(degree(), 0);
    return Coeff(r.begin(), r.end());
}

Coeff FieldSpec::pow(Coeff a, std::uint64_t n) const {
    Coeff r = one();
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

std::string FieldSpec::coeff_to_string(const Coeff& a) const {
    if (is_prime_field()) return std::to_string(a[0]);
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << "]";
    return os.str();
}

}  // namespace charp
