#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "fermat/bsigma.hpp"
#include "fermat/cohomology.hpp"
#include "fermat/cyclotomic.hpp"
#include "fermat/error.hpp"
#include "fermat/galois_kummer.hpp"
#include "fermat/homology.hpp"
#include "fermat/json_io.hpp"
#include "reference_checks.hpp"

namespace fermat::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

std::vector<std::int64_t> parse_residues(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw UsageError("not an integer: '" + item + "'");
    } catch (const std::logic_error&) {
      throw UsageError("not an integer: '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("expected comma-separated residues");
  return out;
}

std::string join(const std::vector<Coeff>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return "(" + s + ")";
}

std::string indent(const std::string& text, const std::string& pad = "  ") {
  std::string out;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) out += pad + line + "\n";
  return out;
}

Json grid_json(const GroupRingElement& a) {
  Json rows = Json::array();
  for (std::uint32_t i = 0; i < a.n(); ++i) {
    Json row = Json::array();
    for (std::uint32_t j = 0; j < a.n(); ++j) row.push_back(a.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

Json vectors_json(const std::vector<FpVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(v);
  return out;
}

void print_checks(std::ostream& out, const std::vector<Check>& checks) {
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.group.size() + c.name.size() + 3);
  for (const auto& c : checks) {
    const std::string label = c.group + " / " + c.name;
    out << (c.passed ? "PASS  " : "FAIL  ");
    if (c.detail.empty())
      out << label << "\n";
    else
      out << std::left << std::setw(static_cast<int>(width)) << label << "  " << c.detail << "\n";
  }
  const auto passed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  out << passed << "/" << checks.size() << " checks passed\n";
}

// bsigma

int bsigma_command(std::uint32_t p, std::int64_t c0, std::int64_t c1, bool verify_all, bool json, std::ostream& out) {
  if (p != 3) throw UsageError("bsigma: only --p 3 is available");
  if (verify_all) {
    std::vector<Check> checks;
    Json rows = Json::array();
    for (const auto& k : group_elements(3)) {
      const auto b = bsigma(k);
      const auto report = verify_bsigma(b);
      checks.push_back({"structure", "c = " + join(k.c), report.all(), ""});
      rows.push_back(Json{{"c", k.c}, {"report", to_json(report)}});
    }
    bool multiplicative = true;
    for (const auto& g : group_elements(3))
      for (const auto& h : group_elements(3)) multiplicative = multiplicative && bsigma(g + h) == bsigma(g) * bsigma(h);
    checks.push_back({"structure", "B(g)B(h) = B(g+h) for all 81 pairs", multiplicative, ""});
    bool gamma = true;
    for (std::int64_t a = 0; a < 3; ++a)
      for (std::int64_t b = 0; b < 3; ++b)
        for (const auto& s : gamma_oracle_p3(a, b)) {
          const auto d = d_prime(s.gamma);
          gamma = gamma && d.in_prime_field() && d.with_ring(CoefficientRing::integers_mod(3)) == bsigma_from_psi_p3(a, b);
        }
    checks.push_back({"gamma", "d'(Gamma) = B for all 9 pairs and all roots", gamma, ""});
    const auto analysis = b_map_analysis();
    checks.push_back({"b-map", "rank 4, nullity 5", analysis.image_dim == 4 && analysis.kernel_dim == 5, ""});
    for (const auto& [label, ok] : analysis.relation_checks) checks.push_back({"b-map", label + " = 0", ok, ""});
    checks.push_back({"b-map", "relations span the kernel", analysis.relations_span_kernel, ""});
    checks.push_back({"b-map", "image shape", analysis.image_shape && analysis.image_parametrisation, ""});
    if (json) {
      auto j = to_json(checks);
      j["elements"] = rows;
      out << j.dump(2) << "\n";
    } else {
      print_checks(out, checks);
    }
    return all_passed(checks) ? kExitOk : kExitCheckFailed;
  }

  const auto k = KummerCoordinates::make(3, {c0, c1});
  const auto b = bsigma(k);
  const auto report = verify_bsigma(b);
  if (json) {
    out << Json{{"p", 3}, {"c", k.c}, {"psi", psi_from_kummer(k).entries}, {"element", to_json(b)},
                {"grid", grid_json(b)}, {"verification", to_json(report)}}
               .dump(2)
        << "\n";
  } else {
    out << "B for c = " << join(k.c) << ", psi = " << join(psi_from_kummer(k).entries) << "\n"
        << indent(format_grid(b)) << "= " << format_lambda1(b) << "\n"
        << "symmetric " << report.symmetric << ", zero line sums " << report.zero_line_sums
        << ", augmentation ideal " << report.augmentation_ideal << ", d''(B) = 1 " << report.d2_trivial << "\n";
  }
  return report.all() ? kExitOk : kExitCheckFailed;
}

// psi

int psi_command(std::uint32_t p, const std::string& coords, bool json, std::ostream& out) {
  const auto k = KummerCoordinates::make(p, parse_residues(coords));
  const auto psi = psi_from_kummer(k);
  const auto sum = coordinate_sum(psi);
  const auto form = coordinate_sum_form(k);
  if (json) {
    Json j{{"kummer", to_json(k)}, {"psi", to_json(psi)}, {"coordinate_sum", sum}, {"linear_form", form}};
    if (p == 3) j["b"] = grid_json(bsigma(k));
    out << j.dump(2) << "\n";
  } else {
    out << "c = " << join(k.c) << "\npsi = " << join(psi.entries) << "\ncoordinate sum " << sum
        << ", linear form " << form << "\n";
    if (p == 3) out << "B =\n" << indent(format_grid(bsigma(k)));
  }
  return sum == form ? kExitOk : kExitCheckFailed;
}

// homology

int homology_command(std::uint32_t n, const std::string& which, bool json, std::ostream& out) {
  if (n < 2) throw UsageError("homology: --n must be at least 2");
  const auto ranks = homology_ranks(n);
  std::vector<GroupRingElement> basis;
  std::size_t rank = 0;
  std::string title;
  if (which == "relative") {
    basis.push_back(GroupRingElement::one(CoefficientRing::integers_mod(n), n, 1));
    rank = ranks.relative;
    title = "H_1(U,Y): free of rank 1 over Lambda_1 on beta";
  } else if (which == "affine") {
    for (const auto& c : h1U_basis(n)) basis.push_back(c.w);
    rank = ranks.kernel_delta;
    title = "H_1(U) = ker delta";
  } else if (which == "stab") {
    for (const auto& c : stab_basis(n)) basis.push_back(c.w);
    rank = ranks.stab;
    title = "Stab(e0 e1)";
  } else if (which == "projective") {
    for (const auto& v : h1X_subquotient(n).coset_basis) basis.push_back(from_vector(n, 1, v));
    rank = ranks.projective;
    title = "H_1(X) = H_1(U) / Stab, coset representatives";
  } else {
    throw UsageError("homology: --which must be relative, affine, projective or stab");
  }
  if (json) {
    Json elems = Json::array();
    Json grids = Json::array();
    for (const auto& b : basis) {
      elems.push_back(to_json(b));
      grids.push_back(grid_json(b));
    }
    out << Json{{"n", n},
                {"which", which},
                {"rank", rank},
                {"ranks",
                 {{"relative", ranks.relative},
                  {"kernel_delta", ranks.kernel_delta},
                  {"image_delta", ranks.image_delta},
                  {"stab", ranks.stab},
                  {"projective", ranks.projective},
                  {"free", ranks.free}}},
                {"basis", elems},
                {"grids", grids}}
               .dump(2)
        << "\n";
  } else {
    out << title << ", rank " << rank << " over Z/" << n << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i) out << "[" << i + 1 << "]\n" << indent(format_grid(basis[i]));
  }
  return kExitOk;
}

// cohomology

int cohomology_command(const std::string& module, bool validate, bool json, std::ostream& out) {
  if (validate) {
    const auto checks = basis_checks();
    if (json)
      out << to_json(checks).dump(2) << "\n";
    else
      print_checks(out, checks);
    return all_passed(checks) ? kExitOk : kExitCheckFailed;
  }
  if (module.empty()) throw UsageError("cohomology: --module or --validate-paper is required");
  GModule m = [&] {
    try {
      return named_module(module);
    } catch (const Error&) {
      throw UsageError("cohomology: --module must be lambda1, h1u, h1x or wedge");
    }
  }();
  const auto h = h_groups(m);
  if (json) {
    out << Json{{"module", m.name()},
                {"p", m.p()},
                {"dim", m.dim()},
                {"h0", h.h0.dim()},
                {"h1", h.h1.dim()},
                {"h2", h.h2.dim()},
                {"sigma", to_json(m.sigma())},
                {"tau", to_json(m.tau())},
                {"h0_basis", vectors_json(h.h0.coset_basis)},
                {"h1_basis", vectors_json(h.h1.coset_basis)},
                {"h2_basis", vectors_json(h.h2.coset_basis)}}
               .dump(2)
        << "\n";
  } else {
    out << "module " << m.name() << ", dimension " << m.dim() << " over F_" << m.p() << "\n"
        << "h0=" << h.h0.dim() << " h1=" << h.h1.dim() << " h2=" << h.h2.dim() << "\n";
    const std::pair<const char*, const SubquotientReport*> groups[] = {{"H^0", &h.h0}, {"H^1", &h.h1}, {"H^2", &h.h2}};
    for (const auto& [name, g] : groups) {
      out << name << " basis (" << g->dim() << "):\n";
      for (const auto& v : g->coset_basis) out << "  " << join(v) << "\n";
    }
  }
  return kExitOk;
}

// cyclotomic

int cyclotomic_command(std::uint32_t p, std::uint32_t bound, bool verify, bool json, std::ostream& out) {
  if (p < 3 || !is_prime(p)) throw UsageError("cyclotomic: --p must be an odd prime");
  if (p > bound) throw UsageError("cyclotomic: --p exceeds --bound " + std::to_string(bound));
  if (verify) {
    const auto report = verify_cyclotomic_identities(p, bound);
    if (json) {
      out << to_json(report).dump(2) << "\n";
    } else {
      for (const auto& c : report.checks) out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "\n";
    }
    return report.all_passed() ? kExitOk : kExitCheckFailed;
  }
  const auto one_minus = CyclotomicInt::integer(p, 1) - CyclotomicInt::zeta_power(p, 1);
  Json units = Json::array();
  std::ostringstream text;
  text << "N(1 - z) = " << norm(one_minus) << "\n";
  for (std::uint32_t a = 2; 2 * a < p; ++a) {
    const auto u = cyclotomic_unit(p, a);
    const auto n = norm(u);
    text << "unit a=" << a << ": " << u.to_string() << ", norm " << n << "\n";
    units.push_back(Json{{"a", a}, {"unit", u.to_string()}, {"norm", n.str()}});
  }
  if (json)
    out << Json{{"p", p}, {"norm_one_minus_zeta", norm(one_minus).str()}, {"units", units}}.dump(2) << "\n";
  else
    out << "Z[z], z^" << p << " = 1\n" << text.str();
  return kExitOk;
}

int reproduce_command(bool json, std::ostream& out) {
  const auto checks = reference_checks();
  if (json)
    out << to_json(checks).dump(2) << "\n";
  else
    print_checks(out, checks);
  return all_passed(checks) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Galois action on the homology of Fermat curves"};
  app.name("fermat");
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::uint32_t p = 3;
  std::int64_t c0 = 0, c1 = 0;
  bool verify_all = false;
  auto* bs = app.add_subcommand("bsigma", "The unit B for given Kummer coordinates (p = 3)");
  bs->add_option("--p", p, "Prime exponent")->capture_default_str();
  bs->add_option("--c0", c0, "First Kummer coordinate");
  bs->add_option("--c1", c1, "Second Kummer coordinate");
  bs->add_flag("--verify-all", verify_all, "Exhaustive checks over all coordinates");
  bs->add_flag("--json", json, "Machine-readable output");

  std::string coords;
  auto* ps = app.add_subcommand("psi", "Psi coefficients from Kummer coordinates");
  ps->add_option("--p", p, "Prime exponent")->capture_default_str();
  ps->add_option("--c", coords, "Kummer coordinates c0,...,c_(p-1)/2")->required();
  ps->add_flag("--json", json, "Machine-readable output");

  std::uint32_t n = 3;
  std::string which = "affine";
  auto* ho = app.add_subcommand("homology", "Homology bases of the Fermat curve");
  ho->add_option("--n", n, "Exponent")->capture_default_str();
  ho->add_option("--which", which, "relative | affine | projective | stab")
      ->capture_default_str()
      ->check(CLI::IsMember({"relative", "affine", "projective", "stab"}));
  ho->add_flag("--json", json, "Machine-readable output");

  std::string module;
  bool validate = false;
  auto* co = app.add_subcommand("cohomology", "Group cohomology of a module (p = 3)");
  co->add_option("--module", module, "lambda1 | h1u | h1x | wedge")
      ->check(CLI::IsMember({"lambda1", "h1u", "h1x", "wedge"}));
  co->add_flag("--validate-paper", validate, "Validate every listed cohomology basis from the reference tables");
  co->add_flag("--json", json, "Machine-readable output");

  std::uint32_t cp = 3, bound = kDefaultCyclotomicBound;
  bool verify = false;
  auto* cy = app.add_subcommand("cyclotomic", "Cyclotomic units and identities in Z[zeta_p]");
  cy->add_option("--p", cp, "Odd prime")->capture_default_str();
  cy->add_option("--bound", bound, "Largest prime accepted")->capture_default_str();
  cy->add_flag("--verify", verify, "Run the identity checks");
  cy->add_flag("--json", json, "Machine-readable output");

  auto* rp = app.add_subcommand("reproduce-paper", "Recompute every published value and report pass/fail");
  rp->add_flag("--json", json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (bs->parsed()) return bsigma_command(p, c0, c1, verify_all, json, out);
    if (ps->parsed()) return psi_command(p, coords, json, out);
    if (ho->parsed()) return homology_command(n, which, json, out);
    if (co->parsed()) return cohomology_command(module, validate, json, out);
    if (cy->parsed()) return cyclotomic_command(cp, bound, verify, json, out);
    if (rp->parsed()) return reproduce_command(json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fermat::cli
