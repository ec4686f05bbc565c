#include "fermat/cohomology.hpp"

#include <algorithm>

#include "fermat/bsigma.hpp"
#include "fermat/error.hpp"
#include "fermat/homology.hpp"

namespace fermat {

namespace {

FpMatrix norm_of(const FpMatrix& g) {
  FpMatrix acc = FpMatrix::identity(g.p(), g.rows());
  FpMatrix power = acc;
  for (std::uint32_t k = 1; k < g.p(); ++k) {
    power = power * g;
    acc = acc + power;
  }
  return acc;
}

}  // namespace

GModule::GModule(std::string name, FpMatrix sigma, FpMatrix tau)
    : name_(std::move(name)), sigma_(std::move(sigma)), tau_(std::move(tau)) {
  if (!sigma_.square() || !tau_.square() || sigma_.rows() != tau_.rows())
    throw InvalidAction("GModule: action matrices must be square of equal size");
  if (sigma_.p() != tau_.p()) throw InvalidAction("GModule: action matrices over different fields");
  if (!(sigma_ * tau_ == tau_ * sigma_)) throw InvalidAction("GModule: σ and τ do not commute");
  const auto id = FpMatrix::identity(sigma_.p(), sigma_.rows());
  if (!(sigma_.power(sigma_.p()) == id) || !(tau_.power(tau_.p()) == id))
    throw InvalidAction("GModule: σ^p or τ^p is not the identity");
}

GModule lambda1_module() {
  return GModule("lambda1", multiplication_matrix(bsigma_p3(1, 0)), multiplication_matrix(bsigma_p3(0, 1)));
}

GModule h1u_module() {
  const auto basis = h1U_basis(3);
  return GModule("h1u", action_matrix(bsigma_p3(1, 0), basis), action_matrix(bsigma_p3(0, 1), basis));
}

GModule h1x_module() {
  const auto report = h1X_subquotient(3);
  std::vector<RelativeClass> reps;
  for (const auto& v : report.coset_basis) reps.push_back({from_vector(3, 1, v)});
  const auto stab = stab_basis(3);
  return GModule("h1x", quotient_action_matrix(bsigma_p3(1, 0), reps, stab),
                 quotient_action_matrix(bsigma_p3(0, 1), reps, stab));
}

GModule exterior_square_module(const GModule& m) {
  return GModule("wedge(" + m.name() + ")", exterior_square(m.sigma()), exterior_square(m.tau()));
}

GModule wedge_module() {
  auto w = exterior_square_module(h1u_module());
  return GModule("wedge", w.sigma(), w.tau());
}

GModule trivial_module(std::uint32_t p, std::size_t dim) {
  return GModule("trivial", FpMatrix::identity(p, dim), FpMatrix::identity(p, dim));
}

GModule named_module(const std::string& name) {
  if (name == "lambda1") return lambda1_module();
  if (name == "h1u") return h1u_module();
  if (name == "h1x") return h1x_module();
  if (name == "wedge") return wedge_module();
  throw Error("unknown module '" + name + "' (expected lambda1, h1u, h1x or wedge)");
}

CochainComplex build_complex(const GModule& m) {
  const std::uint32_t p = m.p();
  const std::size_t d = m.dim();
  const auto id = FpMatrix::identity(p, d);
  const FpMatrix zero(p, d, d);
  CochainComplex c;
  c.s = id - m.sigma();
  c.t = id - m.tau();
  c.u = norm_of(m.sigma());
  c.v = norm_of(m.tau());
  c.x = FpMatrix::block(p, {{c.s}, {c.t}});
  c.y = FpMatrix::block(p, {{c.u, zero}, {c.t, -c.s}, {zero, c.v}});
  c.z = FpMatrix::block(p, {{c.s, zero, zero}, {c.t, -c.u, zero}, {zero, c.v, c.s}, {zero, zero, c.t}});
  return c;
}

CohomologyGroups h_groups(const CochainComplex& c) {
  const std::uint32_t p = c.s.p();
  const std::size_t d = c.s.rows();
  CohomologyGroups g;
  g.h0 = subquotient(p, d, kernel_basis(c.x), {});
  g.h1 = subquotient(p, 2 * d, kernel_basis(c.y), image_basis(c.x));
  g.h2 = subquotient(p, 3 * d, kernel_basis(c.z), image_basis(c.y));
  return g;
}

CohomologyGroups h_groups(const GModule& m) { return h_groups(build_complex(m)); }

std::vector<FpVector> annihilator(const GroupRingElement& h) { return kernel_basis(multiplication_matrix(h)); }

bool BasisValidation::all_in_kernel() const {
  return std::all_of(in_kernel.begin(), in_kernel.end(), [](bool b) { return b; });
}

BasisValidation validate_basis(const CochainComplex& c, int degree, const std::vector<FpVector>& vectors) {
  if (degree != 1 && degree != 2) throw Error("validate_basis: degree must be 1 or 2");
  const FpMatrix& kernel_map = degree == 1 ? c.y : c.z;
  const FpMatrix& image_map = degree == 1 ? c.x : c.y;
  const std::uint32_t p = kernel_map.p();
  const std::size_t dim = kernel_map.cols();

  BasisValidation r;
  r.count = vectors.size();
  const auto groups = h_groups(c);
  r.expected = degree == 1 ? groups.h1.dim() : groups.h2.dim();
  for (const auto& v : vectors) {
    if (v.size() != dim) throw ArityMismatch("validate_basis: vector has wrong length");
    const auto image = kernel_map * v;
    r.in_kernel.push_back(std::all_of(image.begin(), image.end(), [](Coeff x) { return x == 0; }));
  }
  const auto image = image_basis(image_map);
  auto combined = image;
  combined.insert(combined.end(), vectors.begin(), vectors.end());
  r.rank_modulo_image = span_basis(p, dim, combined).size() - image.size();
  return r;
}

}  // namespace fermat
