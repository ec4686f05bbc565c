#include "fermat/json_io.hpp"

#include <regex>

#include "fermat/error.hpp"

namespace fermat {

namespace {

std::string exponent_key(const Exponents& e) {
  std::string s = "(";
  for (std::size_t k = 0; k < e.size(); ++k) s += (k ? "," : "") + std::to_string(e[k]);
  return s + ")";
}

Exponents parse_exponent_key(const std::string& key) {
  static const std::regex shape(R"(\(\s*\d+(\s*,\s*\d+)*\s*\))");
  if (!std::regex_match(key, shape)) throw ParseError("bad exponent key '" + key + "'");
  Exponents e;
  static const std::regex number(R"(\d+)");
  for (auto it = std::sregex_iterator(key.begin(), key.end(), number); it != std::sregex_iterator(); ++it)
    e.push_back(static_cast<std::uint32_t>(std::stoul(it->str())));
  return e;
}

Json vectors_to_json(const std::vector<FpVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(v);
  return out;
}

std::vector<FpVector> vectors_from_json(const Json& j) {
  std::vector<FpVector> out;
  for (const auto& v : j) out.push_back(v.get<FpVector>());
  return out;
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json to_json(const FpMatrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) entries.push_back(m.row(r));
  return Json{{"p", m.p()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

FpMatrix fp_matrix_from_json(const Json& j) {
  return guarded([&] {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto entries = j.at("entries").get<std::vector<std::vector<std::int64_t>>>();
    if (entries.size() != rows) throw ParseError("matrix JSON: row count mismatch");
    for (const auto& r : entries)
      if (r.size() != cols) throw ParseError("matrix JSON: column count mismatch");
    if (rows == 0) return FpMatrix(p, 0, cols);
    return FpMatrix::from_rows(p, entries);
  });
}

Json to_json(const GroupRingElement& a) {
  if (a.ring().is_extension()) throw ModulusMismatch("JSON output needs Z/n coefficients");
  Json coeffs = Json::object();
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x] != 0) coeffs[exponent_key(a.exponents_of(x))] = a[x];
  return Json{{"n", a.n()}, {"m", a.m()}, {"coeffs", coeffs}};
}

GroupRingElement group_ring_from_json(const Json& j) {
  return guarded([&] {
    const auto n = j.at("n").get<std::uint32_t>();
    const auto m = j.at("m").get<std::uint32_t>();
    if (n < 2) throw ParseError("group ring JSON: n must be at least 2");
    const auto ring = CoefficientRing::integers_mod(n);
    GroupRingElement a(ring, n, m);
    for (const auto& [key, value] : j.at("coeffs").items()) {
      const auto e = parse_exponent_key(key);
      if (e.size() != a.num_vars()) throw ParseError("group ring JSON: key '" + key + "' has wrong arity");
      for (auto x : e)
        if (x >= n) throw ParseError("group ring JSON: exponent out of range in '" + key + "'");
      a.set(e, ring.from_int(value.get<std::int64_t>()));
    }
    return a;
  });
}

Json to_json(const KummerCoordinates& k) { return Json{{"p", k.p}, {"c", k.c}}; }

KummerCoordinates kummer_from_json(const Json& j) {
  return guarded([&] {
    return KummerCoordinates::make(j.at("p").get<std::uint32_t>(), j.at("c").get<std::vector<std::int64_t>>());
  });
}

Json to_json(const PsiVector& psi) { return Json{{"p", psi.p}, {"entries", psi.entries}}; }

PsiVector psi_from_json(const Json& j) {
  return guarded([&] {
    PsiVector psi{j.at("p").get<std::uint32_t>(), j.at("entries").get<std::vector<Coeff>>()};
    if (psi.entries.size() + 1 != psi.p) throw ParseError("psi JSON: expected p-1 entries");
    for (auto e : psi.entries)
      if (e >= psi.p) throw ParseError("psi JSON: entry out of range");
    return psi;
  });
}

Json to_json(const SubquotientReport& r) {
  return Json{{"p", r.modulus},
              {"ambient_dim", r.ambient_dim},
              {"kernel_dim", r.kernel_dim()},
              {"image_dim", r.image_dim()},
              {"dim", r.dim()},
              {"kernel_basis", vectors_to_json(r.kernel_basis)},
              {"image_basis", vectors_to_json(r.image_basis)},
              {"coset_basis", vectors_to_json(r.coset_basis)}};
}

SubquotientReport subquotient_from_json(const Json& j) {
  return guarded([&] {
    SubquotientReport r;
    r.modulus = j.at("p").get<std::uint32_t>();
    r.ambient_dim = j.at("ambient_dim").get<std::size_t>();
    r.kernel_basis = vectors_from_json(j.at("kernel_basis"));
    r.image_basis = vectors_from_json(j.at("image_basis"));
    r.coset_basis = vectors_from_json(j.at("coset_basis"));
    return r;
  });
}

Json to_json(const VerificationReport& r) {
  return Json{{"symmetric", r.symmetric},
              {"zero_line_sums", r.zero_line_sums},
              {"augmentation_ideal", r.augmentation_ideal},
              {"d2_trivial", r.d2_trivial},
              {"all", r.all()}};
}

Json to_json(const CyclotomicReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}});
  return Json{{"p", r.p}, {"checks", checks}, {"all_passed", r.all_passed()}};
}

}  // namespace fermat
