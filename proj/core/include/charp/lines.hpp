#pragma once

#include "charp/poly.hpp"

namespace charp {

/// Self-certifying witness that f is a line: k[Z,T] = k[h] + (f)k[Z,T] and
/// S -> (P(S), Q(S)) parametrizes f = 0 with coordinate ring k[S].
struct LineCertificate {
    FieldPtr field;
    Poly f;   // over (Z, T)
    Poly h;   // over (Z, T)
    Poly P;   // over (S)
    Poly Q;   // over (S)
    Poly P1;  // over (Z, T)
    Poly Q1;  // over (Z, T)
};

struct LineCheck {
    std::string name;
    bool passed;
};

struct LineReport {
    bool ok = false;
    std::vector<LineCheck> checks;
};

/// The Nagata line f = Z^{p^2} + T + T^{qp} with its closed-form Frobenius
/// descent parametrization; all four identities are verified before return.
LineCertificate make_nagata_certificate(std::uint32_t p, std::uint32_t q);
/// Same line over an explicit extension of F_p.
LineCertificate make_nagata_certificate(const FieldPtr& field, std::uint32_t q);

/// The degenerate line f = T (h = Z, P = S, Q = 0).
LineCertificate make_trivial_certificate(const FieldPtr& field);

/// Checks the four defining identities of a certificate from any source.
LineReport verify_line_certificate(const LineCertificate& c);

struct ReductionMove {
    enum class Kind { elem_z, elem_t, affine } kind;
    Poly g;                               // elem: Z -> Z + g(T) or T -> T + g(Z)
    std::array<std::int64_t, 4> matrix{};  // affine: [[a,b],[c,d]]
    std::array<std::int64_t, 2> shift{};
};

struct CoordinateEvidence {
    bool reduced_to_linear = false;
    std::int64_t stuck_degree = 0;
    std::vector<ReductionMove> log;
    std::int64_t bound = 0;
    bool exhaustive = false;  // whether the move search enumerated every g up to the bound
};

/// Greedy strict-decrease reduction by elementary and affine plane moves.
/// Evidence only: "stuck" does not prove non-triviality, it records that the
/// bounded search found no decreasing move.
CoordinateEvidence coordinate_reduction_evidence(const Poly& f, std::int64_t degree_bound);

/// Replay a move log on f (used to validate reduced-to-linear verdicts).
Poly replay_moves(const Poly& f, const std::vector<ReductionMove>& log);

}  // namespace charp
