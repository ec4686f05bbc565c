#pragma once

// Published reference values (B values, action matrices, basis lists and
// dimensions for exponent 3), shipped as data/reference_tables.json and
// compiled into the library.

#include <string>
#include <vector>

#include "fermat/fp_linalg.hpp"
#include "fermat/group_ring.hpp"
#include "fermat/json_io.hpp"

namespace fermat {

/// The built-in tables.
const Json& reference_tables();

/// Tables read from a file instead; throws ParseError.
Json load_reference_tables(const std::string& path);

/// A 3-coefficient matrix as displayed (rows as printed).
FpMatrix reference_matrix(const Json& tables, const std::string& name);

/// Each entry is a list of Λ_1 expressions, one per direct summand; the
/// result concatenates their coefficient vectors.
std::vector<FpVector> lambda1_vectors(const Json& list);
FpVector lambda1_vector(const Json& components);

/// Each entry is a list of coordinate vectors in the v_1..v_4 basis, one
/// per direct summand.
std::vector<FpVector> h1u_vectors(const Json& list);

/// v_1..v_4 as Λ_1 elements.
std::vector<GroupRingElement> reference_h1u_basis(const Json& tables);

}  // namespace fermat
