#pragma once

#include "charp/presentation.hpp"

namespace charp {

/// A candidate exponential map phi: A -> A[U], given by generator images.
struct ExpMap {
    PresPtr base;                      // the ring A
    PresPtr with_u;                    // A with the exponential variable adjoined
    std::string u_var;                 // usually "U"
    std::map<std::string, AElem> images;  // per generator of base, over with_u

    /// phi applied to an element of A.
    AElem apply(const AElem& a) const;
    /// phi(generator).
    const AElem& image(const std::string& gen) const;
};

struct VerifyFailure {
    std::string axiom;       // "well-defined" | "identity-at-zero" | "coassociativity"
    std::string generator;
    std::string lhs;
    std::string rhs;
};

struct VerifyReport {
    bool ok = false;
    bool nontrivial = false;
    std::vector<VerifyFailure> failures;
    std::vector<std::string> moved_generators;
    std::vector<std::string> fixed_generators;
};

/// Checks the exponential-map axioms on generators: the relation is
/// respected, evaluation at U = 0 is the identity, and composing two copies
/// equals substituting U+U'. Generators suffice: all maps involved are
/// algebra maps.
VerifyReport verify_exponential(const ExpMap& phi);

ExpMap make_exp_map(PresPtr base, std::string u_var, std::map<std::string, Poly> raw_images);

/// The canonical map fixing x_i and z, sending t to t + x^r U; the Y image
/// is the exact quotient (F(x,z,t+x^r U) - F(x,z,t))/x^r added to y.
ExpMap make_phi1(const PresPtr& pres);
/// Mirror image: fixes t, moves z.
ExpMap make_phi2(const PresPtr& pres);

/// Translation X_i -> X_i + U on a free polynomial ring with >= 2 variables.
ExpMap make_translation(const PresPtr& free_pres, const std::string& var);

bool is_invariant(const ExpMap& phi, const AElem& a);

struct InvariantReport {
    bool nontrivial_family = false;
    std::vector<std::string> invariant_generators;  // generators fixed by some supplied map
    std::vector<std::string> uncovered_generators;  // target generators not witnessed
    bool covers_B = false;
};

/// Lower bound for the Derksen invariant from a supplied family of verified
/// non-trivial maps: which generators of B (or of the free ring) are
/// witnessed invariant. Rejects trivial maps and empty families.
InvariantReport dk_lowerbound(const PresPtr& pres, const std::vector<ExpMap>& maps);

struct FiberResult {
    ExpMap map;
    PresPtr fiber;
    VerifyReport verification;
};

/// Specialize x_j = lambda (lambda a unit, j 0-based, phi fixing x_j) and
/// rescale y by lambda^{r_j} so the fiber is again a standard presentation.
FiberResult induce_on_fiber(const ExpMap& phi, std::size_t j, const Coeff& lambda);

}  // namespace charp
