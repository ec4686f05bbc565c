#include "reference_checks.hpp"

#include <algorithm>
#include <sstream>

#include "fermat/bsigma.hpp"
#include "fermat/cohomology.hpp"
#include "fermat/cyclotomic.hpp"
#include "fermat/galois_kummer.hpp"
#include "fermat/homology.hpp"
#include "fermat/reference_tables.hpp"

namespace fermat::cli {

namespace {

class Recorder {
 public:
  explicit Recorder(std::vector<Check>& out) : out_(out) {}

  void group(std::string g) { group_ = std::move(g); }

  void add(std::string name, bool passed, std::string detail = {}) {
    out_.push_back({group_, std::move(name), passed, std::move(detail)});
  }

  template <typename F>
  void guarded(const std::string& name, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      add(name, false, std::string("threw: ") + e.what());
    }
  }

 private:
  std::vector<Check>& out_;
  std::string group_;
};

std::string dims_text(std::size_t a, std::size_t b) {
  return "got " + std::to_string(a) + ", expected " + std::to_string(b);
}

std::vector<FpVector> ideal_span(const std::vector<GroupRingElement>& gens) {
  std::vector<FpVector> vs;
  for (const auto& g : gens)
    for (std::size_t x = 0; x < g.size(); ++x) {
      auto mono = GroupRingElement::zero(3, 1);
      mono.set_flat(x, 1);
      vs.push_back(to_vector(g * mono));
    }
  return span_basis(3, 9, vs);
}

void validate_list(Recorder& rec, const std::string& name, const CochainComplex& c, int degree,
                   const std::vector<FpVector>& vs, std::size_t listed_dim) {
  const auto r = validate_basis(c, degree, vs);
  std::ostringstream d;
  d << r.count << " listed, dim " << r.expected << ", " << std::count(r.in_kernel.begin(), r.in_kernel.end(), true)
    << " cocycles, rank " << r.rank_modulo_image << " modulo coboundaries";
  if (!r.all_in_kernel()) {
    d << "; not cocycles:";
    for (std::size_t i = 0; i < r.in_kernel.size(); ++i)
      if (!r.in_kernel[i]) d << " #" << i + 1;
  }
  rec.add(name, r.valid() && r.expected == listed_dim, d.str());
}

void kernel_and_image_lists(Recorder& rec, const Json& tables) {
  const auto c = build_complex(lambda1_module());
  const auto& t = tables.at("lambda1");

  const auto ker = lambda1_vectors(t.at("ker_y").at("vectors"));
  const auto ker_y = kernel_basis(c.y);
  std::size_t in_kernel = 0;
  for (const auto& v : ker) in_kernel += in_span(3, 18, ker_y, v) ? 1 : 0;
  const auto span = span_basis(3, 18, ker);
  rec.add("group ring: listed kernel of Y", in_kernel == ker.size() && span.size() == ker_y.size(),
          std::to_string(in_kernel) + " of " + std::to_string(ker.size()) + " in ker Y, span " +
              std::to_string(span.size()) + ", dim ker Y " + std::to_string(ker_y.size()));

  const auto im = lambda1_vectors(t.at("im_x").at("vectors"));
  const auto im_x = image_basis(c.x);
  std::size_t in_image = 0, cocycles = 0;
  for (const auto& v : im) {
    in_image += in_span(3, 18, im_x, v) ? 1 : 0;
    cocycles += in_span(3, 18, ker_y, v) ? 1 : 0;
  }
  rec.add("group ring: listed image of X", in_image == im.size() && span_basis(3, 18, im).size() == im_x.size(),
          std::to_string(in_image) + " of " + std::to_string(im.size()) + " in im X, " + std::to_string(cocycles) +
              " in ker Y, dim im X " + std::to_string(im_x.size()));
}

void cohomology_lists(Recorder& rec, const Json& tables) {
  const auto lambda = build_complex(lambda1_module());
  const auto& t = tables.at("lambda1");
  const auto& h1 = t.at("h1");
  auto vs = lambda1_vectors(h1.at("vectors"));
  validate_list(rec, "group ring: H^1 list as printed", lambda, 1, vs, h1.at("dim").get<std::size_t>());
  for (const auto& reading : h1.at("readings")) {
    auto alt = vs;
    alt.at(reading.at("index").get<std::size_t>()) = lambda1_vector(reading.at("vector"));
    validate_list(rec, "group ring: H^1 list, " + reading.at("note").get<std::string>(), lambda, 1, alt,
                  h1.at("dim").get<std::size_t>());
  }
  const auto& h2 = t.at("h2");
  validate_list(rec, "group ring: H^2 list", lambda, 2, lambda1_vectors(h2.at("vectors")),
                h2.at("dim").get<std::size_t>());

  const auto affine = build_complex(h1u_module());
  const auto& u = tables.at("h1u");
  validate_list(rec, "H_1(U): H^1 list", affine, 1, h1u_vectors(u.at("h1").at("vectors")),
                u.at("h1").at("dim").get<std::size_t>());
  validate_list(rec, "H_1(U): H^2 list", affine, 2, h1u_vectors(u.at("h2").at("vectors")),
                u.at("h2").at("dim").get<std::size_t>());
}

}  // namespace

std::vector<Check> basis_checks() {
  std::vector<Check> out;
  Recorder rec(out);
  rec.group("bases");
  const auto& tables = reference_tables();
  rec.guarded("kernel and image lists", [&] { kernel_and_image_lists(rec, tables); });
  rec.guarded("cohomology lists", [&] { cohomology_lists(rec, tables); });
  return out;
}

std::vector<Check> reference_checks() {
  std::vector<Check> out;
  Recorder rec(out);
  const auto& tables = reference_tables();

  rec.group("kummer");
  rec.guarded("generator images", [&] {
    for (const auto& entry : tables.at("kummer")) {
      const auto c = entry.at("c").get<std::vector<std::int64_t>>();
      const auto expected = entry.at("psi").get<std::vector<Coeff>>();
      const auto psi = psi_from_kummer(KummerCoordinates::make(3, c));
      rec.add("psi(" + entry.at("name").get<std::string>() + ")", psi.entries == expected);
    }
  });

  rec.group("b-values");
  rec.guarded("expansions", [&] {
    for (const auto& entry : tables.at("b_values")) {
      const auto c = entry.at("c").get<std::vector<std::int64_t>>();
      const auto b = bsigma_p3(c[0], c[1]);
      for (const auto& text : entry.at("expansions"))
        rec.add("B(" + entry.at("name").get<std::string>() + ") = " + text.get<std::string>(),
                parse_lambda1(3, text.get<std::string>()) == b);
    }
    rec.add("B(1) = 1", bsigma_p3(0, 0).is_one());
  });
  rec.guarded("structure", [&] {
    bool all = true;
    for (const auto& k : group_elements(3)) all = all && verify_bsigma(bsigma(k)).all();
    rec.add("symmetric, zero line sums, augmentation ideal, d''(B) = 1 for all 9", all);
  });
  rec.group("gamma");
  rec.guarded("gamma", [&] {
    bool ok = true;
    std::size_t solutions = 0;
    for (std::int64_t c1 = 0; c1 < 3; ++c1)
      for (std::int64_t c2 = 0; c2 < 3; ++c2)
        for (const auto& s : gamma_oracle_p3(c1, c2)) {
          ++solutions;
          const auto b = d_prime(s.gamma);
          ok = ok && b.in_prime_field() && b.with_ring(CoefficientRing::integers_mod(3)) == bsigma_from_psi_p3(c1, c2);
        }
    rec.add("d'(Gamma) = B for every root alpha", ok && solutions == 27, std::to_string(solutions) + " solutions");
  });

  rec.group("b-map");
  rec.guarded("rank", [&] {
    const auto a = b_map_analysis();
    const auto& ref = tables.at("b_map");
    rec.add("image dimension", a.image_dim == ref.at("image_dim").get<std::size_t>(),
            dims_text(a.image_dim, ref.at("image_dim").get<std::size_t>()));
    rec.add("kernel dimension", a.kernel_dim == ref.at("kernel_dim").get<std::size_t>(),
            dims_text(a.kernel_dim, ref.at("kernel_dim").get<std::size_t>()));
    for (const auto& [label, ok] : a.relation_checks) rec.add(label + " = 0", ok);
    rec.add("relations span the kernel", a.relations_span_kernel);
    rec.add("image is symmetric with zero sums on rows e, e^2", a.image_shape);
    rec.add("image parametrisation", a.image_parametrisation);
  });

  rec.group("homology");
  rec.guarded("n = 3", [&] {
    const auto r = homology_ranks(3);
    rec.add("H_1(U) has rank 4", r.kernel_delta == 4 && r.free, dims_text(r.kernel_delta, 4));
    rec.add("Stab has rank 2", r.stab == 2, dims_text(r.stab, 2));
    rec.add("H_1(X) has rank 2", r.projective == 2, dims_text(r.projective, 2));
    const auto basis = reference_h1u_basis(tables);
    const auto computed = h1U_basis(3);
    bool same = basis.size() == computed.size();
    for (std::size_t i = 0; same && i < basis.size(); ++i) same = basis[i] == computed[i].w;
    rec.add("v_1..v_4", same);
  });

  rec.group("matrices");
  rec.guarded("actions", [&] {
    const auto c = build_complex(lambda1_module());
    rec.add("S", c.s.transpose() == reference_matrix(tables, "S"));
    rec.add("T", c.t.transpose() == reference_matrix(tables, "T"));
    rec.add("U has all entries 1", std::all_of(c.u.entries().begin(), c.u.entries().end(), [](Coeff x) { return x == 1; }));
    rec.add("V = 0", c.v.is_zero());
    const auto a = build_complex(h1u_module());
    rec.add("S_1", a.s.transpose() == reference_matrix(tables, "S1"));
    rec.add("T_1 = U_1 = V_1 = 0", a.t.is_zero() && a.u.is_zero() && a.v.is_zero());
    rec.add("exterior square of S_1 = 0", exterior_square(a.s).is_zero());
  });

  rec.group("annihilators");
  rec.guarded("ideals", [&] {
    const auto one = GroupRingElement::one(3, 1);
    const auto bs = bsigma_p3(1, 0), bt = bsigma_p3(0, 1);
    for (const auto& entry : tables.at("annihilators")) {
      auto h = GroupRingElement::zero(3, 1);
      for (const auto& term : entry.at("terms")) {
        const auto ab = term.at(1).get<std::vector<std::int64_t>>();
        h = h + bsigma_p3(ab[0], ab[1]).scaled(term.at(0).get<std::int64_t>());
      }
      const auto got = annihilator(h).size();
      const auto want = entry.at("dim").get<std::size_t>();
      rec.add("Ann(" + entry.at("name").get<std::string>() + ")", got == want, dims_text(got, want));
    }
    rec.add("Ann(1-s) = (1+e+e^2, 1+f+f^2)",
            span_basis(3, 9, annihilator(one - bs)) ==
                ideal_span({parse_lambda1(3, "1+e+e^2"), parse_lambda1(3, "1+f+f^2")}));
    const auto fixed_tau = span_basis(3, 9, annihilator(one - bt));
    rec.add("Ann(1-t) = (e-f, 1+f+f^2)",
            fixed_tau == ideal_span({parse_lambda1(3, "e-f"), parse_lambda1(3, "1+f+f^2")}),
            "dim " + std::to_string(fixed_tau.size()));
  });

  rec.group("cohomology");
  rec.guarded("dimensions", [&] {
    const auto lambda = h_groups(lambda1_module());
    rec.add("group ring H^1", lambda.h1.dim() == 9, dims_text(lambda.h1.dim(), 9));
    rec.add("group ring H^2", lambda.h2.dim() == 13, dims_text(lambda.h2.dim(), 13));
    const auto affine = h_groups(h1u_module());
    rec.add("H_1(U) H^1", affine.h1.dim() == 6, dims_text(affine.h1.dim(), 6));
    rec.add("H_1(U) H^2", affine.h2.dim() == 9, dims_text(affine.h2.dim(), 9));
    const auto& w = tables.at("wedge");
    const auto wedge = h_groups(wedge_module());
    rec.add("wedge H^1", wedge.h1.dim() == w.at("h1").get<std::size_t>(),
            dims_text(wedge.h1.dim(), w.at("h1").get<std::size_t>()));
    rec.add("wedge H^2", wedge.h2.dim() == w.at("h2").get<std::size_t>(),
            dims_text(wedge.h2.dim(), w.at("h2").get<std::size_t>()));
  });

  const auto bases = basis_checks();
  out.insert(out.end(), bases.begin(), bases.end());

  rec.group("cyclotomic");
  rec.guarded("identities", [&] {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
      const auto report = verify_cyclotomic_identities(p);
      std::string failed;
      for (const auto& c : report.checks)
        if (!c.passed) failed += (failed.empty() ? "failed: " : ", ") + c.name;
      rec.add("p = " + std::to_string(p), report.all_passed(), failed);
    }
  });
  return out;
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Json to_json(const std::vector<Check>& checks) {
  Json rows = Json::array();
  for (const auto& c : checks)
    rows.push_back(Json{{"group", c.group}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"checks", rows}, {"all_passed", all_passed(checks)}};
}

}  // namespace fermat::cli
