#pragma once

#include <string>

#include "flatness/flatness.hpp"
#include "json.hpp"

namespace secant {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "flatcert/1";

Json ring_to_json(const PolyRingPtr& ring);
PolyRingPtr ring_from_json(const Json& j);

Json coeff_to_json(const Coeff& c);
Coeff coeff_from_json(const Json& j, const BaseRing& R);
Json polys_to_json(const PolyVector& v);
MultiPoly poly_from_json(const Json& j, const PolyRingPtr& ring);
PolyVector polys_from_json(const Json& j, const PolyRingPtr& ring);
Json ideal_to_json(const BaseIdeal& a);
BaseIdeal ideal_from_json(const Json& j, const BaseRing& R);

// Row-major array of rows.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const BaseRing& R, std::size_t cols);

Json annihilator_to_json(const AnnihilatorWitness& a, const PolyRingPtr& ring);
AnnihilatorWitness annihilator_from_json(const Json& j, const PolyRingPtr& ring);

Json regular_certificate_to_json(const RegularSequenceCertificate& c);
RegularSequenceCertificate regular_certificate_from_json(const Json& j, const PolyRingPtr& ring);

// Without the ring, relations and ideal, which the enclosing object supplies.
Json rewrite_to_json(const RewriteWitness& w);
RewriteWitness rewrite_from_json(const Json& j, const PolyRingPtr& ring, const PolyVector& F, const BaseIdeal& a);

Json inclusion_to_json(const InclusionReport& r);
Json structure_to_json(const ModuleStructure& s);

Json certificate_to_json(const FlatnessCertificate& c);
// Throws Error(Syntax) on malformed input.
FlatnessCertificate certificate_from_json(const Json& j);

Json verification_to_json(const VerificationReport& r);

}  // namespace secant
