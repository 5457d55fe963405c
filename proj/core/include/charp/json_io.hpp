#pragma once

#include <nlohmann/json_fwd.hpp>

#include "charp/expmap.hpp"
#include "charp/lines.hpp"
#include "charp/presentation.hpp"
#include "charp/stableiso.hpp"

namespace charp {

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Poly wire format:
//   {"p": int, "ext": [c0..ce] (extension fields only), "vars": [names],
//    "terms": [[coeff, [e1..en]], ...]}
// terms in descending lex order, prime-field coefficients as integers in
// 0..p-1, extension coefficients as ascending coefficient lists.
nlohmann::json poly_to_json(const Poly& a);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json field_to_json(const FieldSpec& f);
FieldPtr field_from_json(const nlohmann::json& j);

nlohmann::json coeff_to_json(const FieldSpec& f, const Coeff& c);
Coeff coeff_from_json(const FieldSpec& f, const nlohmann::json& j);

nlohmann::json presentation_to_json(const Presentation& p);
PresPtr presentation_from_json(const nlohmann::json& j);

nlohmann::json expmap_to_json(const ExpMap& phi);
ExpMap expmap_from_json(const nlohmann::json& j);
nlohmann::json verify_report_to_json(const VerifyReport& r);

nlohmann::json line_certificate_to_json(const LineCertificate& c);
LineCertificate line_certificate_from_json(const nlohmann::json& j);
nlohmann::json line_report_to_json(const LineReport& r);

nlohmann::json evidence_to_json(const CoordinateEvidence& e);
CoordinateEvidence evidence_from_json(const nlohmann::json& j, const FieldPtr& field);

nlohmann::json stable_iso_to_json(const StableIsoCertificate& c);
nlohmann::json stable_iso_report_to_json(const StableIsoReport& r);

nlohmann::json invariant_report_to_json(const InvariantReport& r);

}  // namespace charp
