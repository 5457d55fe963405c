#pragma once

#include "charp/lines.hpp"
#include "charp/presentation.hpp"

namespace charp {

/// Mutually inverse substitution maps realizing A[W] = k[X1..Xm, Z1, T1, W1]
/// for an x-free line relation, plus the roundtrip verification record.
struct StableIsoCertificate {
    PresPtr pres;     // A (no extras)
    PresPtr pres_w;   // A[W]
    PresPtr free_ring;  // k[X1..Xm, Z1, T1, W1]
    LineCertificate line;
    std::map<std::string, AElem> forward;   // free generator -> element of A[W]
    std::map<std::string, Poly> backward;   // A[W] generator -> free-ring polynomial
    bool roundtrip_verified = false;
};

struct StableIsoCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct StableIsoReport {
    bool ok = false;
    std::vector<StableIsoCheck> checks;
};

/// Construct both substitution maps from a verified line certificate; every
/// exact division is checked and the roundtrips are verified before return.
StableIsoCertificate build_stable_iso(const PresPtr& pres, const LineCertificate& line);

/// Independent re-verification: recomputes both roundtrips and the defining
/// relation from the stored homs only.
StableIsoReport verify_stable_iso(const StableIsoCertificate& cert);

}  // namespace charp
