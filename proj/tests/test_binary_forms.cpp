#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "erlangen/binary_forms.hpp"
#include "erlangen/error.hpp"
#include "erlangen/random.hpp"
#include "oracles.hpp"

using namespace erlangen;

namespace {

oracle::Poly to_poly(const BinaryForm& f) {
  return oracle::Poly(f.coeffs().data(), f.coeffs().data() + f.coeffs().size());
}

double distance(const BinaryForm& a, const oracle::Poly& b) {
  REQUIRE(static_cast<std::size_t>(a.coeffs().size()) == b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    d = std::max(d, std::abs(a.coeffs()[static_cast<Eigen::Index>(i)] - b[i]));
  }
  return d;
}

BinaryForm random_form(Rng& rng, int degree) {
  Vector c(degree + 1);
  for (int i = 0; i <= degree; ++i) c[i] = Scalar(gaussian(rng), gaussian(rng));
  return BinaryForm(c);
}

Eigen::Matrix2cd random_substitution(Rng& rng) {
  Eigen::Matrix2cd g;
  for (int i = 0; i < 4; ++i) g(i / 2, i % 2) = Scalar(gaussian(rng), gaussian(rng));
  return g;
}

// Every root of `a` matches a distinct root of `b` within tol on the sphere.
bool same_roots(std::vector<ExtendedComplex> a, std::vector<ExtendedComplex> b, double tol) {
  if (a.size() != b.size()) return false;
  for (const ExtendedComplex& r : a) {
    const SpherePoint p = inverse_stereographic(r);
    auto best = std::min_element(b.begin(), b.end(), [&](const ExtendedComplex& u, const ExtendedComplex& v) {
      const SpherePoint pu = inverse_stereographic(u), pv = inverse_stereographic(v);
      return std::hypot(pu.x() - p.x(), pu.y() - p.y(), pu.z() - p.z()) <
             std::hypot(pv.x() - p.x(), pv.y() - p.y(), pv.z() - p.z());
    });
    const SpherePoint q = inverse_stereographic(*best);
    if (std::hypot(q.x() - p.x(), q.y() - p.y(), q.z() - p.z()) > tol) return false;
    b.erase(best);
  }
  return true;
}

}  // namespace

TEST_CASE("evaluation, derivatives and products") {
  const BinaryForm f{1.0, 2.0, 3.0};  // x^2 + 2 x y + 3 y^2
  CHECK(f.degree() == 2);
  CHECK(std::abs(f(2.0, 1.0) - Scalar(11.0)) < 1e-15);
  CHECK(distance(f.dx(), oracle::dx(to_poly(f))) < 1e-15);
  CHECK(distance(f.dy(), oracle::dy(to_poly(f))) < 1e-15);
  CHECK(distance(f * f, oracle::multiply(to_poly(f), to_poly(f))) < 1e-15);
  const Vector b = f.binomial_coeffs();
  CHECK(std::abs(b[1] - Scalar(1.0)) < 1e-15);
  CHECK(proportionality_residual(BinaryForm::from_binomial(b), f) < 1e-15);
  CHECK(BinaryForm{0.0, 0.0}.is_zero());
}

TEST_CASE("hessian and jacobian match direct differentiation") {
  Rng rng(61);
  for (int d = 2; d <= 6; ++d) {
    const BinaryForm f = random_form(rng, d), g = random_form(rng, d - 1);
    CHECK(distance(hessian(f), oracle::hessian(to_poly(f))) < 1e-10);
    CHECK(distance(jacobian_covariant(f, g), oracle::jacobian(to_poly(f), to_poly(g))) < 1e-10);
  }
  CHECK_THROWS_AS(hessian(BinaryForm{1.0, 2.0}), PreconditionError);
}

TEST_CASE("covariants pick up powers of the determinant") {
  Rng rng(62);
  for (int k = 0; k < 30; ++k) {
    const Eigen::Matrix2cd g = random_substitution(rng);
    const Scalar delta = g.determinant();
    const BinaryForm cubic = random_form(rng, 3), quartic = random_form(rng, 4);
    const BinaryForm moved = cubic.substitute(g);
    const oracle::Poly expected = to_poly(std::pow(delta, 2) * hessian(cubic).substitute(g));
    CHECK(distance(hessian(moved), expected) < 1e-9 * std::max(1.0, oracle::max_abs(expected)));
    const Scalar r = cubic_invariant_R(cubic);
    CHECK(std::abs(cubic_invariant_R(moved) - std::pow(delta, 6) * r) <
          1e-8 * std::max(1.0, std::abs(std::pow(delta, 6) * r)));
    const QuarticInvariants a = quartic_invariants(quartic);
    const QuarticInvariants b = quartic_invariants(quartic.substitute(g));
    CHECK(std::abs(b.i - std::pow(delta, 4) * a.i) < 1e-8 * std::max(1.0, std::abs(b.i)));
    CHECK(std::abs(b.j - std::pow(delta, 6) * a.j) < 1e-8 * std::max(1.0, std::abs(b.j)));
  }
}

TEST_CASE("cubic invariant R") {
  // Distinct roots 0, 1, inf: x y (x - y).
  const BinaryForm f = BinaryForm::from_roots({0.0, 1.0, ExtendedComplex::infinity()});
  CHECK(std::abs(cubic_invariant_R(f)) > 1e-3);
  CHECK(std::abs(cubic_invariant_R(BinaryForm{0.0, 1.0, 0.0, 0.0})) < 1e-15);  // x^2 y
  Rng rng(63);
  for (int k = 0; k < 50; ++k) {
    const BinaryForm g = random_form(rng, 3);
    const Scalar r = cubic_invariant_R(g);
    CHECK(std::abs(r - oracle::cubic_discriminant(to_poly(g))) < 1e-9 * std::max(1.0, std::abs(r)));
  }
  CHECK_THROWS_AS(cubic_invariant_R(BinaryForm{1.0, 0.0, 0.0, 0.0, 1.0}), PreconditionError);
}

TEST_CASE("cubic syzygy Q^2 - R f^2 / 4 = -Delta^3") {
  Rng rng(64);
  for (int k = 0; k < 50; ++k) {
    const BinaryForm f = random_form(rng, 3);
    const CubicCovariants c = cubic_covariants(f);
    const BinaryForm lhs = c.q * c.q - (c.r / 4.0) * (f * f);
    const BinaryForm rhs = Scalar(-1.0) * (c.delta * c.delta * c.delta);
    CHECK(proportionality_residual(rhs, lhs) < 1e-9);
    CHECK(std::abs(oracle::max_abs(to_poly(lhs - rhs))) <
          1e-9 * std::max(1.0, oracle::max_abs(to_poly(rhs))));
  }
}

TEST_CASE("cubic pencil: limits and the cube of the hessian") {
  const BinaryForm f{1.0, -2.0, 0.5, 3.0};
  const CubicCovariants c = cubic_covariants(f);
  CHECK(proportionality_residual(cubic_pencil_member(f, 0.0), c.q * c.q) < 1e-12);
  CHECK(proportionality_residual(cubic_pencil_member(f, 1e12), f * f) < 1e-9);
  CHECK(proportionality_residual(cubic_pencil_member(f, -0.25), c.delta * c.delta * c.delta) < 1e-12);
  CHECK(std::abs(oracle::cubic_pencil_lambda(to_poly(f)) + 0.25) < 1e-9);
  CHECK_THROWS_AS(cubic_pencil_member(BinaryForm{0.0, 1.0, 0.0, 0.0}, 1.0), DegenerateError);
}

TEST_CASE("quartic invariants and square members of the pencil") {
  const BinaryForm f{1.0, 0.0, 3.0, 0.0, 1.0};
  const QuarticInvariants ij = quartic_invariants(f);
  CHECK(std::abs(ij.i - 1.75) < 1e-14);
  CHECK(std::abs(ij.j - 0.375) < 1e-14);
  const auto oracle_ij = oracle::quartic_ij(to_poly(f));
  CHECK(std::abs(oracle_ij[0] - ij.i) < 1e-14);
  CHECK(std::abs(oracle_ij[1] - ij.j) < 1e-14);

  // Member i H + lambda j f = A (x^4 + y^4) + B x^2 y^2.
  const oracle::Poly h = oracle::hessian(to_poly(f));
  const double i = ij.i.real(), j = ij.j.real();
  std::array<double, 3> expected = oracle::symmetric_square_lambdas(i * h[0].real(), j, i * h[2].real(), 3 * j);
  std::array<Scalar, 3> got = quartic_square_parameters(f);
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end(), [](Scalar a, Scalar b) { return a.real() < b.real(); });
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(got[k] - expected[k]) < 1e-10);
    const BinaryForm member = quartic_pencil_member(f, got[k]);
    const BinaryForm root = perfect_square_root(member);
    CHECK(root.degree() == 2);
    CHECK(proportionality_residual(member, root * root) < 1e-9);
  }
  CHECK(std::abs(expected[0] + 7.0 / 3.0) < 1e-12);
  CHECK(std::abs(expected[1] + 7.0 / 6.0) < 1e-12);
  CHECK(std::abs(expected[2] - 3.5) < 1e-12);
  CHECK_THROWS_AS(quartic_square_parameters(BinaryForm{1.0, 0.0, 0.0, 0.0, 1.0}), DegenerateError);
  CHECK_THROWS_AS(quartic_pencil_member(BinaryForm{0.0, 0.0, 0.0, 0.0, 1.0}, 1.0), DegenerateError);
}

TEST_CASE("square members for random quartics") {
  Rng rng(65);
  for (int k = 0; k < 20; ++k) {
    const BinaryForm f = random_form(rng, 4);
    for (const Scalar lambda : quartic_square_parameters(f)) {
      const BinaryForm member = quartic_pencil_member(f, lambda);
      const BinaryForm root = perfect_square_root(member);
      CHECK(proportionality_residual(member, root * root) < 1e-8);
    }
  }
  CHECK_THROWS_AS(perfect_square_root(BinaryForm{1.0, 0.0, 0.0, 1.0}), PreconditionError);
  CHECK_THROWS_AS(perfect_square_root(BinaryForm{1.0, 0.0, 1.0, 0.0, 1.0}), DegenerateError);
}

TEST_CASE("roots, infinity and multiplicity") {
  const std::vector<ExtendedComplex> roots{Scalar(0.5, 1.0), -2.0, ExtendedComplex::infinity(),
                                           -2.0};
  const BinaryForm f = BinaryForm::from_roots(roots);
  CHECK(f.degree() == 4);
  CHECK(std::abs(f.coeffs()[0]) == 0.0);
  CHECK(same_roots(projective_roots(f), roots, 1e-6));
  const SphericalRootSet s = roots_on_sphere(f);
  REQUIRE(s.points.size() == 4);
  int north = 0;
  for (const SpherePoint& p : s.points) north += std::abs(p.z() - 1.0) < 1e-12;
  CHECK(north == 1);

  Rng rng(66);
  for (int k = 0; k < 30; ++k) {
    std::vector<ExtendedComplex> r;
    for (int i = 0; i < 5; ++i) r.emplace_back(Scalar(gaussian(rng), gaussian(rng)));
    CHECK(same_roots(projective_roots(BinaryForm::from_roots(r)), r, 1e-8));
  }
  CHECK_THROWS_AS(projective_roots(BinaryForm{0.0, 0.0, 0.0}), PreconditionError);
}

TEST_CASE("root set of x^4 + 3 x^2 y^2 + y^4 is fixed by z -> -z, 1/z, -1/z") {
  const BinaryForm f{1.0, 0.0, 3.0, 0.0, 1.0};
  const std::vector<ExtendedComplex> roots = projective_roots(f);
  for (const Eigen::Matrix2cd g :
       {(Eigen::Matrix2cd() << -1, 0, 0, 1).finished(), (Eigen::Matrix2cd() << 0, 1, 1, 0).finished(),
        (Eigen::Matrix2cd() << 0, -1, 1, 0).finished()}) {
    std::vector<ExtendedComplex> moved;
    for (const ExtendedComplex& r : roots) {
      const Vector p = g * r.pair();
      moved.push_back(ExtendedComplex::from_pair(p[0], p[1]));
    }
    CHECK(same_roots(moved, roots, 1e-9));
    CHECK(proportionality_residual(f.substitute(g), f) < 1e-14);
  }
}

TEST_CASE("quartic covariants") {
  const BinaryForm f{1.0, -1.0, 2.0, 0.5, -3.0};
  const QuarticCovariants c = quartic_covariants(f);
  CHECK(distance(c.h, oracle::hessian(to_poly(f))) < 1e-12);
  CHECK(distance(c.t, oracle::jacobian(to_poly(f), to_poly(c.h))) < 1e-12);
  CHECK(c.t.degree() == 6);
  CHECK_THROWS_AS(quartic_covariants(BinaryForm{1.0, 0.0, 1.0}), PreconditionError);
}
