#pragma once

#include "charp/expmap.hpp"
#include "charp/presentation.hpp"

namespace charp {

class graded_degeneration : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One weight per x-variable; z, t carry weight 0 and y's weight is derived.
using WeightVector = std::vector<std::int64_t>;

struct GradedDecomposition {
    std::map<std::int64_t, Poly> components;  // degree -> homogeneous part
    std::int64_t min_degree = 0;              // l_a
    std::int64_t max_degree = 0;              // u_a
};

/// Split a (Laurent) polynomial over B's variables by weighted x-degree.
GradedDecomposition graded_components(const Poly& a, const Presentation& pres,
                                      const WeightVector& q);

/// Weighted degree of the leading summand of F (the u_F of the filtration).
std::int64_t top_weight_of_F(const Presentation& pres, const WeightVector& q);

/// Derived weight of y: b = u_F - (q_1 r_1 + ... + q_m r_m).
std::int64_t y_weight(const Presentation& pres, const WeightVector& q);

/// Filtration degree of a nonzero element: max weighted degree over its
/// normal-form monomials, with y weighted b.
std::int64_t filtration_degree(const AElem& a, const WeightVector& q);

/// Presentation of the associated graded ring: F replaced by its leading
/// summand F_{u_F}. Requires no x_j to divide F_{u_F}.
PresPtr associated_graded(const PresPtr& pres, const WeightVector& q);

/// Top filtration layer of a, as an element of the graded presentation.
AElem leading_form(const AElem& a, const WeightVector& q);

struct InducedHomResult {
    bool ok = false;
    std::string diagnostics;
    ExpMap map;                   // over the graded presentation (scaled weights)
    WeightVector scaled_q;        // q cleared to integers
    std::int64_t u_weight = 0;    // weight assigned to U in the scaled grading
    bool homogeneous = false;
    VerifyReport verification;
};

/// Instance-level homogenization: compute the extremal weight for U from the
/// generator images, build the candidate induced map on gr(A), and verify it
/// a posteriori. Failure is reported, never silently accepted.
InducedHomResult induce_homogeneous(const ExpMap& phi, const WeightVector& q);

}  // namespace charp
