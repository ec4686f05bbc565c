#pragma once

#include <nlohmann/json.hpp>

#include "fermat/bsigma.hpp"
#include "fermat/cohomology.hpp"
#include "fermat/cyclotomic.hpp"
#include "fermat/fp_linalg.hpp"
#include "fermat/galois_kummer.hpp"
#include "fermat/group_ring.hpp"

namespace fermat {

using Json = nlohmann::ordered_json;

/// {"p":3,"rows":r,"cols":c,"entries":[[...],...]}
Json to_json(const FpMatrix& m);
FpMatrix fp_matrix_from_json(const Json& j);

/// {"n":3,"m":1,"coeffs":{"(i,j)":c,...}} with zero coefficients omitted.
/// Z/n coefficients only.
Json to_json(const GroupRingElement& a);
GroupRingElement group_ring_from_json(const Json& j);

/// {"p":3,"c":[1,0]}
Json to_json(const KummerCoordinates& k);
KummerCoordinates kummer_from_json(const Json& j);

/// {"p":3,"entries":[...]}
Json to_json(const PsiVector& psi);
PsiVector psi_from_json(const Json& j);

Json to_json(const SubquotientReport& r);
SubquotientReport subquotient_from_json(const Json& j);

Json to_json(const VerificationReport& r);
Json to_json(const CyclotomicReport& r);

}  // namespace fermat
