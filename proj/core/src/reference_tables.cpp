#include "fermat/reference_tables.hpp"

#include <fstream>
#include <string_view>

#include "fermat/error.hpp"

namespace fermat {

namespace detail {
extern const std::string_view kReferenceTablesJson;
}

const Json& reference_tables() {
  static const Json tables = Json::parse(detail::kReferenceTablesJson);
  return tables;
}

Json load_reference_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

FpMatrix reference_matrix(const Json& tables, const std::string& name) {
  try {
    return FpMatrix::from_rows(3, tables.at("matrices").at(name).get<std::vector<std::vector<std::int64_t>>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("reference matrix '" + name + "': " + e.what());
  }
}

FpVector lambda1_vector(const Json& components) {
  FpVector out;
  for (const auto& text : components) {
    const auto a = parse_lambda1(3, text.get<std::string>());
    out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
  }
  return out;
}

std::vector<FpVector> lambda1_vectors(const Json& list) {
  std::vector<FpVector> out;
  for (const auto& entry : list) out.push_back(lambda1_vector(entry));
  return out;
}

std::vector<FpVector> h1u_vectors(const Json& list) {
  const auto ring = CoefficientRing::integers_mod(3);
  std::vector<FpVector> out;
  for (const auto& entry : list) {
    FpVector v;
    for (const auto& block : entry)
      for (const auto& c : block) v.push_back(ring.from_int(c.get<std::int64_t>()));
    out.push_back(v);
  }
  return out;
}

std::vector<GroupRingElement> reference_h1u_basis(const Json& tables) {
  std::vector<GroupRingElement> out;
  for (const auto& grid : tables.at("h1u_basis"))
    out.push_back(GroupRingElement::from_grid(3, grid.get<std::vector<std::vector<std::int64_t>>>()));
  return out;
}

}  // namespace fermat
